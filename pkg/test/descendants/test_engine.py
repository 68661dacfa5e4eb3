'''测试descendant计算引擎, 与已知的Witten-Kontsevich数值比对'''
import pytest
from fractions import Fraction
from psi4opt.compositions import CompositionSpace
from psi4opt.descendants import (DescendantKey, build_engine, descendant, genus0_closed, one_point_value,
                                 balanced_value, get_default_engine)
from psi4opt.snippets import StabilityError, DepthLimitError, InputError, ConfigError, ordered_map


KNOWN_VALUES = [
    (0, (1, 0, 0, 0), Fraction(1)),
    (0, (2, 0, 0, 0, 0), Fraction(1)),
    (0, (1, 1, 0, 0, 0), Fraction(2)),
    (0, (1, 1, 1, 0, 0, 0), Fraction(6)),
    (1, (1,), Fraction(1, 24)),
    (1, (2, 0), Fraction(1, 24)),
    (1, (1, 1), Fraction(1, 24)),
    (1, (3, 0, 0), Fraction(1, 24)),
    (1, (2, 1, 0), Fraction(1, 12)),
    (1, (1, 1, 1), Fraction(1, 12)),
    (2, (4,), Fraction(1, 1152)),
    (2, (5, 0), Fraction(1, 1152)),
    (2, (4, 1), Fraction(1, 384)),
    (2, (3, 2), Fraction(29, 5760)),
    (2, (2, 2, 2), Fraction(7, 240)),
    (3, (7,), Fraction(1, 82944)),
    (3, (7, 1), Fraction(5, 82944)),
    (3, (6, 2), Fraction(77, 414720)),
    (3, (5, 3), Fraction(503, 1451520)),
    (3, (4, 4), Fraction(607, 1451520)),
]


@pytest.mark.parametrize("g, e, value", KNOWN_VALUES)
def test_known_values(engine, dvv_engine, g, e, value):
    assert engine.descendant(g, e) == value
    assert dvv_engine.descendant(g, e) == value
    assert engine(g, tuple(reversed(e))) == value


@pytest.mark.parametrize("n", range(3, 9))
def test_genus0_without_closed_formula(n):
    '''关闭亏格0闭式公式后, string/DVV路径与闭式公式完全一致'''
    recursion = build_engine('recursion', verbose=0)
    for e in CompositionSpace(n, n - 3):
        assert recursion.descendant(0, e) == genus0_closed(e)


@pytest.mark.parametrize("g", range(1, 7))
def test_one_point(engine, g):
    assert engine.descendant(g, (3 * g - 2,)) == Fraction(1, 24 ** g * [1, 1, 2, 6, 24, 120, 720][g])
    assert engine.descendant(g, (3 * g - 2,)) == one_point_value(g)


def test_degree_mismatch_is_zero(engine):
    assert engine.descendant(0, (1, 0, 0)) == 0
    assert engine.descendant(2, (1, 1)) == 0


def test_errors():
    engine = build_engine(depth_limit=5, verbose=0)
    with pytest.raises(StabilityError):
        engine.descendant(0, (0, 0))
    with pytest.raises(StabilityError):
        engine.descendant(-1, (0, 0, 0, 0, 0))
    with pytest.raises(InputError):
        engine.descendant(1, ())
    with pytest.raises(DepthLimitError):
        engine.descendant(3, (7,))
    assert engine.descendant(2, (4,)) == Fraction(1, 1152)
    with pytest.raises(ConfigError):
        build_engine(depth_limit=0)
    with pytest.raises(InputError):
        build_engine('unknown')


def test_stats_and_clear():
    engine = build_engine(verbose=0)
    engine.descendant(2, (3, 2))
    stats = engine.stats()
    assert stats['misses'] > 0 and stats['records'] == len(engine)
    hits = stats['hits']
    engine.descendant(2, (2, 3))
    assert engine.stats()['hits'] == hits + 1
    assert DescendantKey(2, (3, 2)) in engine

    engine.clear_cache()
    assert engine.stats() == {'records': 0, 'hits': 0, 'misses': 0, 'dvv_expansions': 0}


def test_hits_counted_across_threads():
    '''cache命中后多线程查询, hits计数不丢失'''
    engine = build_engine(verbose=0)
    vectors = list(CompositionSpace(3, 3))
    for e in vectors:
        engine.descendant(1, e)
    before = engine.stats()
    ordered_map(lambda e: engine.descendant(1, e), vectors * 20, workers=4)
    after = engine.stats()
    assert after['hits'] == before['hits'] + 20 * len(vectors)
    assert after['misses'] == before['misses']


def test_compute_with_cache():
    engine = build_engine(verbose=0)
    assert engine.compute_with_cache(DescendantKey(2, (4,))) == Fraction(1, 1152)
    assert engine.compute_with_cache(DescendantKey.from_vector(1, (0, 1, 2))) == Fraction(1, 12)


def test_module_level_helpers():
    assert descendant(2, (4,)) == Fraction(1, 1152)
    assert get_default_engine() is get_default_engine()
    assert balanced_value(0, 6) == 6
    assert balanced_value(1, 2) == Fraction(1, 24)


if __name__ == '__main__':
    test_genus0_without_closed_formula(6)
    test_errors()
