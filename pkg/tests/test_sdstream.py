from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdreal.errors import DomainError
from sdreal.rationals import Rat, rat_str
from sdreal.sdstream import (
    DIGITS,
    N,
    P,
    Z,
    SignedDigit,
    cauchy_to_stream,
    const_seq,
    constant,
    cycle,
    digits_from_str,
    digits_str,
    from_digits,
    select_digit,
    sigma_approx,
)

from conftest import to_rat, within

rationals_in_I = st.fractions(min_value=-1, max_value=1, max_denominator=512)


def test_three_digits():
    assert [int(d) for d in DIGITS] == [-1, 0, 1]
    assert digits_str([P, Z, N]) == "PZN"
    assert digits_from_str("PZN") == [P, Z, N]


def test_sigma_empty_prefix():
    assert sigma_approx(constant(P), 0) == 0


def test_sigma_alternating():
    # (1 + (0 + (1 + 0/2)/2)/2)/2 unfolded by hand
    assert sigma_approx(cycle([P, Z]), 4) == Rat(5, 8)


def test_sigma_alternating_approaches_two_thirds():
    s = cycle([P, Z])
    third = Rat(2, 3)
    for n in range(65):
        assert within(sigma_approx(s, n), third, n)


def test_sigma_denominator_divides_power_of_two():
    s = cauchy_to_stream(const_seq(Rat(7, 10)))
    for n in range(1, 40):
        assert 2**n % sigma_approx(s, n).denominator == 0


def test_select_digit():
    assert select_digit(Rat(0)) is Z
    assert select_digit(Rat(2, 3)) is P
    assert select_digit(Rat(-1, 4)) is Z
    assert select_digit(Rat(1, 4)) is Z
    assert select_digit(Rat(-26, 100)) is N
    assert select_digit(Rat(26, 100)) is P


def test_const_seq_bounds():
    assert const_seq(Rat(1, 3))(17) == Rat(1, 3)
    assert const_seq(Rat(1))(0) == 1
    with pytest.raises(DomainError):
        const_seq(Rat(3, 2))


def test_cauchy_to_stream_zero():
    s = cauchy_to_stream(const_seq(Rat(0)))
    assert s.take(10) == [Z] * 10


def test_cauchy_to_stream_two_thirds():
    s = cauchy_to_stream(const_seq(Rat(2, 3)))
    # hand simulation of the step rule: 2/3 -> P, 1/3 -> P, -1/3 -> N, ...
    assert digits_str(s.take(7)) == "PPNPNPN"
    for n in range(33):
        assert within(sigma_approx(s, n), Rat(2, 3), n)


def test_cauchy_to_stream_seven_tenths():
    s = cauchy_to_stream(const_seq(Rat(7, 10)))
    assert s.head is P
    for n in range(65):
        assert within(sigma_approx(s, n), Rat(7, 10), n)


def test_digit_soundness_instrumented():
    # track the exact residual alongside the emitted digits: it must stay
    # inside [-1,1] at every stage
    for q in (Rat(7, 10), Rat(-13, 17), Rat(1), Rat(-1), Rat(99, 100)):
        s = cauchy_to_stream(const_seq(q))
        residual = q
        for _ in range(64):
            assert abs(residual) <= 1
            residual = 2 * residual - int(s.head)
            s = s.tail


def test_persistence_interleaved():
    s = cauchy_to_stream(const_seq(Rat(5, 7)))
    a, b = s, s
    seen_a, seen_b = [], []
    for i in range(40):
        if i % 3 != 2:
            seen_a.append(a.head)
            a = a.tail
        else:
            seen_b.append(b.head)
            b = b.tail
    replay = s.take(len(seen_a))
    assert seen_a == replay
    assert seen_b == s.take(len(seen_b))


def test_from_digits_prefix():
    s = from_digits([P, N])
    assert s.take(4) == [P, N, Z, Z]


@given(rationals_in_I, st.integers(0, 24), st.integers(0, 24))
@settings(max_examples=150, deadline=None)
def test_prefix_monotonicity(qf, n, m):
    if n > m:
        n, m = m, n
    s = cauchy_to_stream(const_seq(to_rat(qf)))
    gap = abs(sigma_approx(s, n) - sigma_approx(s, m))
    assert gap <= Rat(1, 2**n) - Rat(1, 2**m)


@given(rationals_in_I, st.integers(0, 64))
@settings(max_examples=150, deadline=None)
def test_round_trip(qf, n):
    q = to_rat(qf)
    s = cauchy_to_stream(const_seq(q))
    assert within(sigma_approx(s, n), q, n)


def test_rat_str():
    assert rat_str(Rat(2, 4)) == "1/2"
    assert rat_str(Rat(-3)) == "-3"
    assert rat_str(Rat(0)) == "0"
