"""Exact construction, recognition and auditing of 3x3 matrix-subspace cross-sections."""

from .chains import AuditReport, GeneralChain, ShiftChain, audit, mutate, synth_general_chain, synth_shift_chain
from .general import GeneralParams, GeneralSequence, build_c_normal, recognize_c_normal
from .matrices import Mat, det, rank
from .scalar import Scalar, parse_scalar
from .shift import Delta, ShiftSequence, StrongParams, T1Params, T2Params, build_shift, recognize_shift
from .subspaces import Subspace, span_reduce

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "Delta",
    "GeneralChain",
    "GeneralParams",
    "GeneralSequence",
    "Mat",
    "Scalar",
    "ShiftChain",
    "ShiftSequence",
    "StrongParams",
    "Subspace",
    "T1Params",
    "T2Params",
    "audit",
    "build_c_normal",
    "build_shift",
    "det",
    "mutate",
    "parse_scalar",
    "recognize_c_normal",
    "rank",
    "recognize_shift",
    "span_reduce",
    "synth_general_chain",
    "synth_shift_chain",
]
