try:
    from ._diffgsb import Presentation, __version__
except ImportError:  # module built flat, next to the package
    from _diffgsb import Presentation, __version__

__all__ = ["Presentation", "__version__"]
