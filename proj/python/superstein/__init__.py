"""Exact certification toolkit for Lie superalgebras over superalgebras.

Scalars cross the boundary as strings ("3/2"), so results stay exact.
"""

import json

from ._superstein import (
    AlgFileError,
    ConstructionError,
    LieSuperalgebra,
    SizeGuardError,
    SuperAlgebra,
    __version__,
    build_st_sharp,
    builtin,
    concretize,
    corpus_names,
    export_lie,
    hc1_dim,
    hc_n,
    homology,
    load_algebra,
    pairing_dim,
    parse_algebra,
    parse_lie,
    serialize_algebra,
    sl_dims,
    steinberg_kernel,
    validate,
    verify_cocycle,
    verify_steinberg,
)
from . import _superstein

DEFAULT_MAX_WEDGE = 50000
DEFAULT_MAX_CHAIN = 20000


def report(command, algebra, shape="2|1", target="st", degree=1,
           max_wedge=DEFAULT_MAX_WEDGE, max_chain=DEFAULT_MAX_CHAIN):
    """The CLI report for `command` as a dict (same fields as --emit json)."""
    if isinstance(algebra, str):
        algebra = load_algebra(algebra)
    return json.loads(_superstein._report(command, algebra, shape, target, degree, max_wedge, max_chain))


def criterion(k):
    """Acceptance criterion k (1..8) as a report dict."""
    return json.loads(_superstein._criterion(k))


__all__ = [
    "AlgFileError", "ConstructionError", "LieSuperalgebra", "SizeGuardError", "SuperAlgebra",
    "build_st_sharp", "builtin", "concretize", "corpus_names", "criterion", "export_lie", "hc1_dim",
    "hc_n", "homology", "load_algebra", "pairing_dim", "parse_algebra", "parse_lie", "report",
    "serialize_algebra", "sl_dims", "steinberg_kernel", "validate", "verify_cocycle", "verify_steinberg",
]
