from .api import divisor_router
from .version import __version__

__all__ = ['__version__', 'divisor_router']
