__all__ = ["kernels", "statevector"]
