from .cover_method import CoverMethod
from .sdim_route import SdimRoute

__all__ = ['CoverMethod', 'SdimRoute']
