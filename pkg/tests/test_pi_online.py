import pytest

from borderval.border_core import compute_pi
from borderval.oracle import enumerate_valid_pi, min_alphabet_bruteforce
from borderval.pi_online import OnlineValidator, PushAfterFailure, StateInvalid

from conftest import drive, local_streams

FIG_PI = [0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0]


def test_start_state():
    v = OnlineValidator()
    assert v.n == 0
    first = v.push(0)
    assert first.valid and first.letter == 1
    assert v.push(0).letter == 2  # fresh letter at a second zero


def test_first_value_must_be_zero():
    v = OnlineValidator()
    r = v.push(1)
    assert not r.valid and r.position == 1
    with pytest.raises(PushAfterFailure):
        v.push(0)


def test_fig_array_accepted():
    v = OnlineValidator()
    for a in FIG_PI:
        assert v.push(a).valid
    assert v.max_alphabet == 3
    assert compute_pi(v.witness()) == FIG_PI


def test_zero_one_one_rejected_at_three():
    v = OnlineValidator()
    assert v.push(0).valid
    assert v.push(1).valid
    r = v.push(1)
    assert not r.valid and r.position == 3


def test_all_zero_needs_two_letters():
    v = OnlineValidator()
    for _ in range(6):
        assert v.push(0).valid
    assert v.max_alphabet == 2


def test_witness_examples():
    v = OnlineValidator()
    for a in (0, 1, 2):
        v.push(a)
    assert v.witness() == (1, 1, 1)
    v = OnlineValidator()
    for a in (0, 0, 0):
        v.push(a)
    assert v.witness() == (1, 2, 2)  # "abb"
    v.push(2)
    with pytest.raises(StateInvalid):
        v.witness()


def test_valid_array_with_zero_father_history():
    # [0,0,1,1] exercises inheritance through a fresh-letter node
    v = OnlineValidator()
    for a in (0, 0, 1, 1):
        assert v.push(a).valid
    assert compute_pi(v.witness()) == [0, 0, 1, 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_exactness(n):
    valid = enumerate_valid_pi(n)
    for s in local_streams(n):
        pos = drive(OnlineValidator(debug=True), s)
        assert (pos is None) == (s in valid), (s, pos)


@pytest.mark.parametrize("n", range(1, 9))
def test_witness_soundness(n):
    for s in enumerate_valid_pi(n):
        v = OnlineValidator()
        for a in s:
            assert v.push(a).valid
        w = v.witness()
        assert tuple(compute_pi(w)) == s
        assert v.max_alphabet == min_alphabet_bruteforce(list(s))


def test_prefix_closure():
    # every accepted prefix is itself accepted when replayed standalone
    import random

    rng = random.Random(5)
    for _ in range(50):
        v = OnlineValidator()
        stream = []
        for _ in range(30):
            c = rng.choice(v.candidates_for_next())
            stream.append(c)
            assert v.push(c).valid
        for cut in (5, 17, 30):
            assert drive(OnlineValidator(), stream[:cut]) is None


def test_candidate_sets_follow_inheritance():
    v = OnlineValidator()
    for a in (0, 1, 1):
        if v.failed_at is None:
            before = v.candidates_for_next()
            r = v.push(a)
            if not r.valid:
                assert a not in before
