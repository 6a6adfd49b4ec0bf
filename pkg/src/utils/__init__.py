__all__ = ["errors", "logger", "pure"]
