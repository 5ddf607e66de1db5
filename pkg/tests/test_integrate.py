import pytest

from sdreal.ctree import constant_tree
from sdreal.digitsys import lin_tree, logistic_tree
from sdreal.errors import DomainError, ResourceLimitError
from sdreal.integrate import integral
from sdreal.oracle import Lin, Logistic, Quad, integral_exact
from sdreal.exprdsl import to_tree
from sdreal.rationals import Rat
from sdreal.sdstream import Z


def test_constant_zero_tree():
    for k in (0, 1, 5, 12):
        res = integral(constant_tree(Z), k)
        assert res.value == 0
        assert res.error_bound == Rat(2, 2**k)


def test_k_zero_returns_zero_with_bound_two():
    res = integral(logistic_tree(2), 0)
    assert res.value == 0
    assert res.error_bound == 2


def test_logistic_three_halves_paper_call():
    # the integral of a(1-x^2)-1 over [-1,1] is 4a/3 - 2, zero at a = 3/2
    res = integral(logistic_tree(Rat(3, 2)), 10)
    assert abs(res.value) <= Rat(1, 2**9)


def test_lin_quarter_fifth():
    want = Rat(2, 5)
    for k in (2, 6, 10, 14):
        res = integral(lin_tree([Rat(1, 4)], Rat(1, 5)), k)
        assert abs(res.value - want) <= Rat(2, 2**k)


@pytest.mark.parametrize(
    "expr",
    [
        Lin(Rat(1, 4), Rat(1, 5)),
        Lin(Rat(1, 2), 0),
        Quad(Rat(1, 2), Rat(1, 4), 0),
        Logistic(Rat(1, 2)),
        Logistic(Rat(2)),
    ],
)
def test_error_bound_vs_oracle(expr):
    t = to_tree_of(expr)
    want = integral_exact(expr)
    for k in range(1, 17):
        res = integral(t, k)
        assert abs(res.value - want) <= Rat(2, 2**k)


def to_tree_of(expr):
    return to_tree(expr)


def test_monotone_refinement():
    t = logistic_tree(Rat(4, 5))
    prev = None
    for k in range(1, 15):
        cur = integral(t, k).value
        if prev is not None:
            assert abs(cur - prev) <= Rat(2, 2 ** (k - 1)) + Rat(1, 2**k)
        prev = cur


def test_adaptivity_soft():
    # a write-only tree costs exactly k nodes, and at equal precision a
    # flatter integrand (fewer reads per path) costs far fewer nodes
    assert integral(logistic_tree(Rat(0)), 20).nodes_visited == 20
    smooth = integral(logistic_tree(Rat(1, 10)), 10).nodes_visited
    wiggly = integral(logistic_tree(Rat(3, 2)), 10).nodes_visited
    assert smooth * 4 <= wiggly, (smooth, wiggly)


def test_arity_and_precision_errors():
    with pytest.raises(DomainError):
        integral(lin_tree([Rat(1, 4), Rat(1, 4)], 0), 4)
    with pytest.raises(DomainError):
        integral(constant_tree(Z), -1)


def test_resource_limit_reported():
    with pytest.raises(ResourceLimitError):
        integral(logistic_tree(2), 16, max_nodes=10)
