"""Syndrome-based fuzzy hashing of noisy data over burst-correcting codes.

Store a hash digest and a syndrome of a noisy word; later, authenticate a
re-acquired copy by decoding the syndrome difference and checking the
digest.  Burst-oriented base-field layouts of Reed-Solomon codes and
concatenated codes supply the error correction.
"""

from . import channel, cli, codespec, concat, errors, expand, fuzzy, gf, rs
from .channel import ErrorPattern, Rng, gen_burst_1d, gen_burst_2d, gen_mixed
from .codespec import format_spec, parse_field, parse_spec
from .concat import (
    CompositeSyndrome,
    ConcatCode,
    FlatLayout,
    IvLayout,
    TrivialCode,
    ViLayout,
    VLayout,
)
from .expand import ExpandedCode, ExpandedSyndrome
from .fuzzy import Template, VerifyResult, enroll, verify
from .gf import MUL_COUNTER, ExtField, PrimeField, build_ext_field
from .rs import BchCode, RsCode, Syndrome, bch_build

__version__ = "0.1.0"

__all__ = [
    "BchCode",
    "CompositeSyndrome",
    "ConcatCode",
    "ErrorPattern",
    "ExpandedCode",
    "ExpandedSyndrome",
    "ExtField",
    "FlatLayout",
    "IvLayout",
    "MUL_COUNTER",
    "PrimeField",
    "Rng",
    "RsCode",
    "Syndrome",
    "Template",
    "TrivialCode",
    "VLayout",
    "VerifyResult",
    "ViLayout",
    "bch_build",
    "build_ext_field",
    "channel",
    "cli",
    "codespec",
    "concat",
    "enroll",
    "errors",
    "expand",
    "format_spec",
    "fuzzy",
    "gen_burst_1d",
    "gen_burst_2d",
    "gen_mixed",
    "gf",
    "parse_field",
    "parse_spec",
    "rs",
    "verify",
]
