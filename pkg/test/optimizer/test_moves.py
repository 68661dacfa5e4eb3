'''测试balancing和concentrating迭代'''
import pytest
from fractions import Fraction
from psi4opt.compositions import CompositionSpace, imbalance, is_balanced, is_concentrated
from psi4opt.optimizer import (MoveTrace, MultinomialOracle, DescendantOracle, FunctionOracle, balancing_step,
                               balance_iterate, concentrating_step, concentrate_iterate)
from psi4opt.snippets import InputError


SPACE = CompositionSpace(6, 3)


def test_balancing_step():
    D = MultinomialOracle()
    assert balancing_step(D, SPACE, (3, 0, 0, 0, 0, 0)) == ((2, 1, 0, 0, 0, 0), 1, 3)
    assert balancing_step(D, SPACE, (0, 1, 0, 0, 0, 2)) == ((1, 1, 0, 0, 0, 1), 3, 6)
    assert balancing_step(D, SPACE, (3, 0, 0, 0, 0, 0), pair_policy='first') == ((2, 1, 0, 0, 0, 0), 1, 3)
    assert balancing_step(D, SPACE, (1, 1, 1, 0, 0, 0)) is None


def test_balancing_plateau(engine):
    D = DescendantOracle(1, engine=engine)
    assert balancing_step(D, D.space(2), (2, 0)) == ((1, 1), Fraction(1, 24), Fraction(1, 24))


def test_balance_iterate():
    D = MultinomialOracle()
    trace = balance_iterate(D, SPACE, (3, 0, 0, 0, 0, 0))
    assert trace.values == [1, 3, 6]
    assert sorted(trace.terminal) == [0, 0, 0, 1, 1, 1]
    assert trace.final_value == 6
    assert trace.is_monotone(increasing=True)
    assert trace.is_consistent(D, SPACE)
    assert len(trace) <= imbalance((3, 0, 0, 0, 0, 0))

    trace = balance_iterate(D, SPACE, (1, 0, 1, 0, 1, 0))
    assert len(trace) == 1 and trace.terminal == (1, 0, 1, 0, 1, 0)


def test_balance_iterate_genus0(engine):
    D = DescendantOracle(0, engine=engine)
    space = D.space(5)
    trace = balance_iterate(D, space, (2, 0, 0, 0, 0))
    assert trace.values == [1, 2]
    assert sorted(trace.terminal) == [0, 0, 0, 1, 1]


def test_concentrating_step():
    D = MultinomialOracle()
    assert concentrating_step(D, SPACE, (1, 1, 1, 0, 0, 0)) == ((2, 0, 1, 0, 0, 0), 6, 3)
    assert concentrating_step(D, SPACE, (1, 1, 1, 0, 0, 0), mode='whole') == ((2, 0, 1, 0, 0, 0), 6, 3)
    assert concentrating_step(D, SPACE, (0, 0, 3, 0, 0, 0)) is None
    with pytest.raises(InputError):
        concentrating_step(D, SPACE, (1, 1, 1, 0, 0, 0), mode='half')


def test_concentrating_plateau(engine):
    D = DescendantOracle(1, engine=engine)
    assert concentrating_step(D, D.space(2), (1, 1)) == ((2, 0), Fraction(1, 24), Fraction(1, 24))


def test_concentrate_iterate(engine):
    D = MultinomialOracle()
    trace = concentrate_iterate(D, SPACE, (1, 1, 1, 0, 0, 0))
    assert trace.terminal == (3, 0, 0, 0, 0, 0)
    assert trace.values == [6, 3, 1]
    assert trace.is_monotone(increasing=False)
    assert trace.is_consistent(D, SPACE)

    trace = concentrate_iterate(D, CompositionSpace(3, 0), (0, 0, 0))
    assert len(trace) == 1

    D = DescendantOracle(2, engine=engine)
    space = D.space(2)
    trace = concentrate_iterate(D, space, (3, 2))
    assert trace.terminal == (5, 0)
    assert trace.final_value == Fraction(1, 1152)
    assert len(trace) <= space.d + 1


def test_whole_mode():
    D = MultinomialOracle()
    space = CompositionSpace(4, 8)
    trace = concentrate_iterate(D, space, (2, 2, 2, 2), mode='whole')
    assert trace.vectors == [(2, 2, 2, 2), (4, 0, 2, 2), (6, 0, 0, 2), (8, 0, 0, 0)]
    assert len(trace) <= space.n
    assert trace.is_consistent(D, space, block=True)
    assert not trace.is_consistent(D, space)


def test_trace_consistency_detects_tampering():
    D = MultinomialOracle()
    trace = balance_iterate(D, SPACE, (3, 0, 0, 0, 0, 0))
    tampered = MoveTrace(list(trace.steps))
    tampered.steps[-1] = (tampered.steps[-1][0], Fraction(7))
    assert not tampered.is_consistent(D, SPACE)
    jump = MoveTrace([((3, 0, 0, 0, 0, 0), Fraction(1)), ((1, 1, 1, 0, 0, 0), Fraction(6))])
    assert not jump.is_consistent(D, SPACE)


def test_iterations_run_on_any_oracle():
    '''不满足(S)的oracle也能迭代到终点, 只是不保证单调'''
    D = FunctionOracle(lambda e: 1 + e[0])
    space = CompositionSpace(2, 4)
    up = balance_iterate(D, space, (4, 0))
    assert is_balanced(up.terminal) and not up.is_monotone(increasing=True)
    down = concentrate_iterate(D, space, (2, 2))
    assert is_concentrated(down.terminal)


def test_not_in_space():
    with pytest.raises(InputError):
        balance_iterate(MultinomialOracle(), SPACE, (3, 0, 0))


if __name__ == '__main__':
    test_balance_iterate()
    test_whole_mode()
