from .edge_list import read_edge_list, write_edge_list
from .dot import to_dot

__all__ = ['read_edge_list', 'write_edge_list', 'to_dot']
