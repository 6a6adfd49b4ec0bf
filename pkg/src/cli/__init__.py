__all__ = ["commands", "config", "graph_file", "results", "runner"]
