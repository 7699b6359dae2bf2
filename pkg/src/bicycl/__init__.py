"""Two-dimensional (lambda1, lambda2)-constacyclic codes over F_q.

Pipeline: field tower -> zero sets -> ideal basis / check tensor ->
generator tensor -> encoding, membership, parameters and the dual code.
"""

from .bipoly import CodeParams
from .codec import (
    CodeHandle,
    build_code,
    code_from_generators,
    dual_code,
    encode,
    is_codeword,
    parameters,
    syndrome,
)
from .gf import FieldTower
from .specfile import load_spec

__version__ = "0.1.0"

__all__ = [
    "CodeHandle",
    "CodeParams",
    "FieldTower",
    "build_code",
    "code_from_generators",
    "dual_code",
    "encode",
    "is_codeword",
    "load_spec",
    "parameters",
    "syndrome",
]
