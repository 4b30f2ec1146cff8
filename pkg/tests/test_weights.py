from hypothesis import given, strategies as st

import pytest

from flipcheck.weights import GrSum, Weight, cg_tensor, det_twist, dual, hom_object


weights = st.tuples(
    st.integers(min_value=-8, max_value=8), st.integers(min_value=-8, max_value=8)
).map(lambda ab: Weight(max(ab), min(ab)))


def test_weight_rejects_bad_order():
    with pytest.raises(ValueError):
        Weight(0, 1)


def test_dual_examples():
    assert dual(Weight(0, 0)) == Weight(0, 0)
    assert dual(Weight(3, 0)) == Weight(0, -3)  # (S^3 Uv)^vee = S^3 U
    assert dual(Weight(1, 1)) == Weight(-1, -1)  # O(H)^vee = O(-H)


def test_det_twist_examples():
    assert det_twist(Weight(3, 0), 1) == Weight(4, 1)
    assert det_twist(Weight(4, 0), -1) == Weight(3, -1)
    assert det_twist(Weight(0, 0), 5) == Weight(5, 5)


def test_cg_rank2_plethysm():
    # Uv (x) Uv = S^2 Uv + L^2 Uv
    assert cg_tensor(Weight(1, 0), Weight(1, 0)) == GrSum.of(
        [(Weight(2, 0), 0, 1), (Weight(1, 1), 0, 1)]
    )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cg_matches_displayed_decomposition(n):
    # S^{n-1}U(-H) (x) S^n Uv = sum_t Sigma^{n-t-1, -n+t}
    got = cg_tensor(Weight(-1, -n), Weight(n, 0))
    assert got == GrSum.of(
        [(Weight(n - t - 1, -n + t), 0, 1) for t in range(n)]
    )


def test_cg_line_bundle_is_single_term():
    assert cg_tensor(Weight(2, 2), Weight(5, 1)) == GrSum.single(Weight(7, 3))


@given(weights, weights)
def test_cg_commutative(w1, w2):
    assert cg_tensor(w1, w2) == cg_tensor(w2, w1)


@given(weights, weights)
def test_cg_conserves_rank(w1, w2):
    assert cg_tensor(w1, w2).total_rank() == w1.rank * w2.rank


@given(weights, weights)
def test_cg_outputs_dominant(w1, w2):
    for w, _, _ in cg_tensor(w1, w2):
        assert w.a >= w.b


@given(weights)
def test_dual_involution(w):
    assert dual(dual(w)) == w


@given(weights, st.integers(min_value=-6, max_value=6))
def test_det_twist_inverse(w, c):
    assert det_twist(det_twist(w, c), -c) == w


def test_hom_object_trivial():
    o = GrSum.single(Weight(0, 0))
    assert hom_object(o, o) == o


def test_hom_object_shifts_subtract():
    a = GrSum.single(Weight(0, 0), shift=2)
    b = GrSum.single(Weight(1, 1), shift=-1)
    assert hom_object(a, b) == GrSum.single(Weight(1, 1), shift=-3)


def test_hom_object_twisted_power_pairing():
    # Hom(S^{n-1}Uv(H), S^n Uv) for n = 3
    n = 3
    a = GrSum.single(Weight(n, 1))
    b = GrSum.single(Weight(n, 0))
    assert hom_object(a, b) == GrSum.of(
        [(Weight(n - t - 1, -n + t), 0, 1) for t in range(n)]
    )


def test_grsum_merges_and_orders():
    s = GrSum.of([(Weight(1, 0), 0, 1), (Weight(0, 0), 0, 2), (Weight(1, 0), 0, 1)])
    assert s.terms == ((Weight(0, 0), 0, 2), (Weight(1, 0), 0, 2))
    assert not GrSum()
