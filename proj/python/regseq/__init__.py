"""Exact decision procedures for regular sequences of symmetric polynomials."""

try:
    from ._regseq import (  # installed wheel: extension lives inside the package
        __version__,
        check,
        gb,
        hilbert,
        lemma44,
        prime,
        reduce_to_e,
        scan,
        verify_catalog,
    )
except ImportError:  # build tree: extension sits next to the package root
    from _regseq import (
        __version__,
        check,
        gb,
        hilbert,
        lemma44,
        prime,
        reduce_to_e,
        scan,
        verify_catalog,
    )

__all__ = [
    "__version__",
    "check",
    "gb",
    "hilbert",
    "lemma44",
    "prime",
    "reduce_to_e",
    "scan",
    "verify_catalog",
]
