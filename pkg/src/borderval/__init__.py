"""Online validation of border arrays and strict border arrays.

Given an integer stream, decide after every value whether some word's
failure function matches the prefix read so far, report the minimal alphabet
and a witness word, and do so with three interchangeable border-array
engines (candidate sets, constant-delay, packed sublinear memory) plus an
online validator for the strict variant.  Brute-force oracles make every
verdict independently checkable.
"""

from .border_core import (
    InvalidBorderArray,
    compute_pi,
    naive_pi,
    naive_pi_prime,
    pi_prime_to_pi,
    pi_to_pi_prime,
    text_to_word,
    word_to_text,
)
from .pi_online import OnlineValidator, PushAfterFailure, StateInvalid, Verdict
from .pi_prime_online import SlopeValidator, validate_g_stream
from .pi_realtime import RealTimeValidator
from .pi_succinct import SuccinctValidator, window_distinct_check
from .suffix_structure import OnlineSuffixIndex

__version__ = "0.1.0"

__all__ = [
    "InvalidBorderArray",
    "OnlineSuffixIndex",
    "OnlineValidator",
    "PushAfterFailure",
    "RealTimeValidator",
    "SlopeValidator",
    "StateInvalid",
    "SuccinctValidator",
    "Verdict",
    "compute_pi",
    "naive_pi",
    "naive_pi_prime",
    "pi_prime_to_pi",
    "pi_to_pi_prime",
    "text_to_word",
    "validate_g_stream",
    "window_distinct_check",
    "word_to_text",
]
