import pytest

from borderval.border_core import compute_pi
from borderval.families import (
    fibonacci_word,
    lowerbound_pair,
    random_valid_pi,
    random_valid_pi_prime,
    random_word,
    thue_morse_word,
    unary_pi,
)
from borderval.pi_online import OnlineValidator
from borderval.pi_prime_online import SlopeValidator

from conftest import drive


def test_unary():
    assert unary_pi(5) == [0, 1, 2, 3, 4]
    assert compute_pi((1,) * 5) == unary_pi(5)


def test_fibonacci_prefix():
    assert fibonacci_word(10) == (1, 2, 1, 1, 2, 1, 2, 1, 1, 2)


def test_thue_morse_prefix():
    assert thue_morse_word(8) == (1, 2, 2, 1, 2, 1, 1, 2)


def test_determinism():
    assert random_word(20, 3, seed=5) == random_word(20, 3, seed=5)
    assert random_valid_pi(50, seed=5) == random_valid_pi(50, seed=5)
    assert lowerbound_pair(30, seed=2) == lowerbound_pair(30, seed=2)


def test_random_valid_pi_is_valid():
    for seed in range(10):
        arr = random_valid_pi(200, seed=seed)
        assert drive(OnlineValidator(), arr) is None


def test_unary_bias_lengthens_runs():
    plain = random_valid_pi(500, seed=1)
    biased = random_valid_pi(500, seed=1, unary_bias=0.9)
    assert max(biased) > max(plain)


def test_random_valid_pi_prime_is_valid():
    for seed in range(5):
        stream = random_valid_pi_prime(80, seed=seed)
        assert drive(SlopeValidator(), stream) is None


def test_lowerbound_pair_members():
    for seed in range(20):
        n = 6 + seed * 7
        valid, invalid, pos = lowerbound_pair(n, seed)
        assert len(valid) == len(invalid) == n
        assert drive(OnlineValidator(), valid) is None
        assert drive(OnlineValidator(), invalid) == pos
        # the two streams differ at exactly one position before the probe
        diffs = [i for i, (a, b) in enumerate(zip(valid, invalid)) if a != b]
        assert len(diffs) == 1


def test_lowerbound_pair_too_small():
    with pytest.raises(ValueError):
        lowerbound_pair(5, seed=0)
