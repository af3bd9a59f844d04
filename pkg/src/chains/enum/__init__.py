from .parity import Parity

__all__ = ['Parity']
