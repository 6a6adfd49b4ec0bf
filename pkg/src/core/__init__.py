__all__ = ["maxcut", "models", "qaoa", "spsa"]
