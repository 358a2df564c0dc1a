"""Preorder construction, comparison labels, and relation audits."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordext.orders import (
    BOTTOM,
    TOP,
    Comparison,
    FinitePreorder,
    ForeignElementError,
    ParetoSpace,
    UnsupportedQueryError,
    compare_augmented,
    interior,
    is_antisymmetric,
    is_connected,
    is_maximal,
    is_minimal,
    is_pareto_set,
    is_reflexive,
    is_symmetric,
    is_transitive,
)


def edge_sets(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                max_size=n * n,
            ),
        )
    )


def test_closure_reflexive_singleton():
    rel = FinitePreorder.closure(1, [])
    assert rel.geq(0, 0)


def test_closure_adds_transitive_pair():
    rel = FinitePreorder.closure(3, [(0, 1), (1, 2)])
    assert rel.geq(0, 2)
    assert not rel.geq(2, 0)


def test_closure_two_cycle_makes_equivalence():
    rel = FinitePreorder.closure(2, [(0, 1), (1, 0)])
    assert rel.compare(0, 1) is Comparison.EQUIVALENT


def test_closure_rejects_out_of_range():
    with pytest.raises(ForeignElementError):
        FinitePreorder.closure(2, [(0, 5)])


def test_matrix_validation_rejects_non_reflexive():
    with pytest.raises(ValueError, match="reflexive"):
        FinitePreorder.from_geq_matrix([[False]])


def test_matrix_validation_rejects_non_transitive():
    m = [
        [True, True, False],
        [False, True, True],
        [False, False, True],
    ]
    with pytest.raises(ValueError, match="transitive"):
        FinitePreorder.from_geq_matrix(m)


@given(edge_sets())
def test_closure_idempotent(spec):
    n, pairs = spec
    rel = FinitePreorder.closure(n, pairs)
    again = FinitePreorder.closure(n, list(rel.pairs()))
    assert rel == again


@given(edge_sets())
def test_closure_output_is_valid_preorder(spec):
    n, pairs = spec
    rel = FinitePreorder.closure(n, pairs)
    assert is_reflexive(rel)
    assert is_transitive(rel)


def test_compare_label_symmetry_on_chain():
    rel = FinitePreorder.chain(3)
    assert rel.compare(2, 0) is Comparison.STRICTLY_GREATER
    assert rel.compare(0, 2) is Comparison.STRICTLY_LESS
    assert rel.compare(1, 1) is Comparison.EQUIVALENT


def test_pareto_compare_labels():
    space = ParetoSpace(2)
    assert space.compare((1.0, 2.0), (0.0, 1.0)) is Comparison.STRICTLY_GREATER
    assert space.compare((1.0, 0.0), (0.0, 1.0)) is Comparison.INCOMPARABLE
    assert space.compare((1.0, 0.0), (1.0, 0.0)) is Comparison.EQUIVALENT


def test_pareto_rejects_wrong_dimension():
    with pytest.raises(ForeignElementError):
        ParetoSpace(2).geq((1.0,), (0.0, 0.0))


def test_finite_rejects_foreign_index():
    with pytest.raises(ForeignElementError):
        FinitePreorder.chain(2).geq(0, 7)


@given(edge_sets(4), st.data())
def test_compare_antisymmetry_of_labels(spec, data):
    n, pairs = spec
    rel = FinitePreorder.closure(n, pairs)
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    fwd = rel.compare(x, y)
    back = rel.compare(y, x)
    assert (fwd is Comparison.STRICTLY_GREATER) == (back is Comparison.STRICTLY_LESS)
    assert (fwd is Comparison.EQUIVALENT) == (back is Comparison.EQUIVALENT)


def test_augmented_order():
    rel = FinitePreorder.antichain(2)
    x = interior(0)
    assert compare_augmented(rel, TOP, x) is Comparison.STRICTLY_GREATER
    assert compare_augmented(rel, x, BOTTOM) is Comparison.STRICTLY_GREATER
    assert compare_augmented(rel, TOP, TOP) is Comparison.EQUIVALENT
    assert compare_augmented(rel, BOTTOM, BOTTOM) is Comparison.EQUIVALENT
    assert compare_augmented(rel, TOP, BOTTOM) is Comparison.STRICTLY_GREATER
    assert compare_augmented(rel, interior(0), interior(1)) is Comparison.INCOMPARABLE


def test_pareto_set_detection():
    space = ParetoSpace(2)
    ok, witness = is_pareto_set(space, [(1.0, 0.0), (0.0, 1.0)])
    assert ok and witness is None
    ok, witness = is_pareto_set(space, [(0.0, 0.0), (1.0, 1.0)])
    assert not ok
    assert witness == ((1.0, 1.0), (0.0, 0.0))


def test_pareto_set_singleton_trivial():
    ok, _ = is_pareto_set(ParetoSpace(3), [(0.0, 0.0, 0.0)])
    assert ok


def test_maximal_minimal_on_chain():
    rel = FinitePreorder.chain(3)
    assert is_maximal(rel, 2)
    assert not is_maximal(rel, 1)
    assert is_minimal(rel, 0)
    assert not is_minimal(rel, 2)


def test_maximal_on_singleton():
    rel = FinitePreorder.chain(1)
    assert is_maximal(rel, 0) and is_minimal(rel, 0)


def test_maximal_unsupported_on_pareto():
    with pytest.raises(UnsupportedQueryError):
        is_maximal(ParetoSpace(2), (0.0, 0.0))


def test_equivalence_classes():
    rel = FinitePreorder.closure(4, [(0, 1), (1, 0), (2, 3)])
    assert rel.equivalence_classes() == [(0, 1), (2,), (3,)]


def test_relation_audits():
    chain = FinitePreorder.chain(3)
    assert is_connected(chain)
    assert is_antisymmetric(chain)
    assert not is_symmetric(chain)
    loop = FinitePreorder.closure(2, [(0, 1), (1, 0)])
    assert is_symmetric(loop)
    assert not is_antisymmetric(loop)
    anti = FinitePreorder.antichain(3)
    assert not is_connected(anti)
    assert is_symmetric(anti)


def test_masks_match_pair_queries():
    rel = FinitePreorder.closure(3, [(0, 1), (1, 2)])
    assert rel.geq_mask(0) == 0b111
    assert rel.leq_mask(2) == 0b111
    assert rel.leq_mask(0) == 0b001
