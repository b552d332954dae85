"""Reversible-circuit grayscale-morphology image segmentation."""

try:
    from qmorph._qmorph import *  # noqa: F401,F403
    from qmorph._qmorph import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _qmorph import *  # noqa: F401,F403
    from _qmorph import __version__  # noqa: F401
