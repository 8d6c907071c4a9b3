"""Exact odd-dimensional Spin^c quantization characters of circle actions."""
from .charring import (
    NotDivisible,
    RationalCharacter,
    VirtualCharacter,
    canonical_string,
    char_product,
    char_sum,
    exact_quotient,
    invariant_part,
    parse_character,
)
from .fpdata import (
    BadParams,
    EvenManifoldData,
    FixedCircle,
    IsolatedFixedPoint,
    OddManifoldData,
    SchemaError,
    ValidationError,
    emit_manifest,
    generate,
    load_manifest,
    parse_manifest,
)
from .localize import (
    Convention,
    NormalFactor,
    quantize_even_isolated,
    quantize_odd3,
    up_surface_to_3,
)
from .surgery import (
    ConSumSpec,
    CutSpec,
    SeamRecord,
    SpecError,
    connected_sum,
    correction_D,
    cut_split,
    qr_report,
    reduce_circles,
)

__version__ = "0.1.0"

__all__ = [
    "NotDivisible",
    "RationalCharacter",
    "VirtualCharacter",
    "canonical_string",
    "char_product",
    "char_sum",
    "exact_quotient",
    "invariant_part",
    "parse_character",
    "BadParams",
    "EvenManifoldData",
    "FixedCircle",
    "IsolatedFixedPoint",
    "OddManifoldData",
    "SchemaError",
    "ValidationError",
    "emit_manifest",
    "generate",
    "load_manifest",
    "parse_manifest",
    "Convention",
    "NormalFactor",
    "quantize_even_isolated",
    "quantize_odd3",
    "up_surface_to_3",
    "ConSumSpec",
    "CutSpec",
    "SeamRecord",
    "SpecError",
    "connected_sum",
    "correction_D",
    "cut_split",
    "qr_report",
    "reduce_circles",
]
