"""Brute-force ground truth: enumeration, canonical forms, rex/regex records."""

from ..canon import CanonicalForm, canonical_form
from .cache import RexCache, default_cache_path
from .enumerate import Budget, connected_regular, count_regular, enumerate_regular
from .rex import RegexResult, RexRecord, regex_brute, rex_brute, verify_uniqueness

__all__ = [
    "Budget",
    "CanonicalForm",
    "RegexResult",
    "RexCache",
    "RexRecord",
    "canonical_form",
    "connected_regular",
    "count_regular",
    "default_cache_path",
    "enumerate_regular",
    "regex_brute",
    "rex_brute",
    "verify_uniqueness",
]
