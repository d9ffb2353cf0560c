"""Ulrich bundles on geometrically ruled surfaces.

Exact Neron-Severi lattice arithmetic, Riemann-Roch, line-bundle
cohomology on Hirzebruch surfaces, the Ulrich line-bundle classification,
and rank-2 special Ulrich bundle constructors.
"""

try:
    from ._ulrich_core import *  # noqa: F401,F403
    from ._ulrich_core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # module built in-tree, not installed as a package
    from _ulrich_core import *  # noqa: F401,F403
