import pytest

from flipcheck.collections.blocks import (
    BlockRangeError,
    make_block,
    notation,
    parse_block_spec,
    render_block_spec,
)
from flipcheck.flagx import EObject


def test_block_al_top_is_single():
    n = 4
    objs = make_block("Al", (n - 1,), 2 * n + 1)
    assert objs == [EObject.schur(n - 1)]


def test_block_h_case_split():
    assert make_block("H", (), 5) == [EObject.line(1, -2), EObject.line(1, -1)]
    assert make_block("H", (), 7) == [
        EObject.line(1, -2),
        EObject.line(1, -1),
        EObject.line(2, -3),
    ]


def test_block_hp_case_split():
    assert make_block("Hp", (), 4) == [EObject.line(1, -1)]
    assert len(make_block("Hp", (), 6)) == 2
    assert len(make_block("Hp", (), 8)) == 3


def test_block_staircase_bottom_corner():
    for n in (2, 3, 4):
        assert make_block("S", (0,), 2 * n + 1) == [EObject.line(n, n - 1)]


def test_block_staircase_sizes_and_rows():
    n = 4
    cells = make_block("S", (2,), 2 * n + 1)
    assert len(cells) == 9  # (k+1)^2
    assert cells[0] == EObject.line(n, n - 1)
    assert cells[-1] == EObject.line(n + 2, n - 1)


def test_block_f_case_split():
    n = 5
    shorter = make_block("F", (n - 2,), 2 * n + 1)
    longer = make_block("F", (0,), 2 * n + 1)
    assert len(shorter) == 2 and len(longer) == 3
    assert shorter[0] == EObject.schur(n - 2, 1)
    assert longer[2] == EObject.line(3, -4)  # O(3(H-h)-h)


def test_block_fp_case_split():
    n = 5
    assert len(make_block("Fp", (0,), 2 * n)) == 3  # l <= n-5
    assert len(make_block("Fp", (1,), 2 * n)) == 2


def test_block_b_and_c_and_e():
    assert make_block("B", (2,), 9) == [EObject.line(0, 3), EObject.schur(2, 1, -1)]
    assert make_block("C", (2,), 9) == [EObject.line(0, 2), EObject.schur(2, 1, -2)]
    assert make_block("E", (2,), 9) == [
        EObject.line(0, 2),
        EObject.schur(1, 1, -1),
        EObject.line(3, -4),
    ]


def test_block_range_errors():
    with pytest.raises(BlockRangeError):
        make_block("E", (0,), 9)
    with pytest.raises(BlockRangeError):
        make_block("S", (4,), 9)  # k > n-2
    with pytest.raises(BlockRangeError):
        make_block("nope", (), 9)


def test_block_empty_segments_allowed():
    assert make_block("Au", (4,), 9) == []  # A^n is empty
    assert make_block("Aseg", (1, 0), 9) == []


def test_block_twist_applied():
    objs = make_block("A", (), 5, twist=(2, -1))
    assert objs[0] == EObject.line(2, -1)


def test_spec_roundtrip():
    for spec in ("A", "Au(2)", "B(0)@(1H-1h)", "cell(-3,4)", "Aseg(1,3)@(-2H)"):
        name, params, twist = parse_block_spec(spec)
        assert render_block_spec(name, params, twist) == spec


def test_notation_examples():
    assert notation(EObject.line()) == "O"
    assert notation(EObject.line(1, -2)) == "O(H-2h)"
    assert notation(EObject.schur(2, 1)) == "S^2Uv(H)"
    assert notation(EObject.schur(1, 0, -1)) == "Uv(-h)"
    assert notation(EObject.line(-1, -1)) == "O(-H-h)"
