"""Code-based signatures from syndrome decoding."""

from ._core import (
    DimensionError,
    Error,
    IoError,
    ParamError,
    ParamSet,
    ParseError,
    ProofError,
    PublicKey,
    Scheme,
    SecretKey,
    Variant,
    Verdict,
    WeightError,
    decode_fixed_weight,
    encode_fixed_weight,
    find_paramset,
    keygen,
    kz_cost,
    min_tau,
    paramsets,
    scheme_from_name,
    scheme_name,
    sign,
    size_estimate_bits,
    size_estimate_kb,
    soundness_error,
    unwrap,
    verify,
    wrap_signature,
)

__all__ = [name for name in dir() if not name.startswith("_")]
