"""Discrete logarithms modulo 2**k over semi-primitive-root bases.

Any k-bit integer factors uniquely as (-1)**s * 2**p * h**e mod 2**k
once a base h with h = 3 or 5 (mod 8) is fixed. This package computes
that factorization digit-serially in O(k) width-k multiplications,
converts it back, moves it between bases, and certifies all of it
against exhaustive brute-force references.
"""

from .dlg_engine import (
    DlgPair,
    DlgTriple,
    MulCounter,
    classify_sign,
    decode_pair,
    decode_triple,
    dlg,
    dlg_counted,
    dlg_truncated,
    factor_triple,
    invert_pair,
    log_multiply,
    rebase,
)
from .kbit_core import (
    MAX_WIDTH,
    MIN_WIDTH,
    Residue,
    add,
    bit,
    inverse,
    mul,
    neg,
    power,
    truncate,
)
from .oracle import (
    DlgTable,
    TestVector,
    brute_force_dlg,
    covers_odd_residues,
    extended_gcd_inverse,
    generate_vectors,
)
from .root_theory import (
    NotSemiPrimitiveError,
    Root,
    enumerate_roots,
    multiplicative_order,
    validate_root,
)

__version__ = "0.1.0"

__all__ = [
    "DlgPair",
    "DlgTable",
    "DlgTriple",
    "MAX_WIDTH",
    "MIN_WIDTH",
    "MulCounter",
    "NotSemiPrimitiveError",
    "Residue",
    "Root",
    "TestVector",
    "add",
    "bit",
    "brute_force_dlg",
    "classify_sign",
    "covers_odd_residues",
    "decode_pair",
    "decode_triple",
    "dlg",
    "dlg_counted",
    "dlg_truncated",
    "enumerate_roots",
    "extended_gcd_inverse",
    "factor_triple",
    "generate_vectors",
    "inverse",
    "invert_pair",
    "log_multiply",
    "mul",
    "multiplicative_order",
    "neg",
    "power",
    "rebase",
    "truncate",
    "validate_root",
]
