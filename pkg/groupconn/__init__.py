from .info import __version__
