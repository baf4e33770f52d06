"""Twisted virtual braid groups: words, homomorphisms, subgroup presentations."""

from ._tvb import (
    NotInKernel,
    ParseError,
    abelianize,
    check_ids,
    image,
    in_kernel,
    normalize,
    presentation,
    presentation_json,
    rewrite,
    verify,
)

__all__ = [
    "NotInKernel",
    "ParseError",
    "abelianize",
    "check_ids",
    "image",
    "in_kernel",
    "normalize",
    "presentation",
    "presentation_json",
    "rewrite",
    "verify",
]
