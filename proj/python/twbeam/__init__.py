"""Traveling-wave response of non-uniform cantilever beams with an
intermediate spring-damper absorber."""

try:
    from ._twbeam import *  # noqa: F401,F403
    from ._twbeam import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension module on sys.path
    from _twbeam import *  # noqa: F401,F403
    from _twbeam import __doc__  # noqa: F401
