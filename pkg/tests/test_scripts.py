"""The shipped move scripts are pinned to the generators and replay green."""

import pathlib

import pytest

from flipcheck.collections import (
    Collection,
    count_objects,
    count_tracked,
    generate,
    load_script,
    replay,
)
from flipcheck.collections.scriptgen import GENERATORS

SCRIPTS = sorted(GENERATORS)
N_RANGE = (2, 3, 4, 5)


@pytest.mark.parametrize("parity,step", SCRIPTS)
@pytest.mark.parametrize("n", N_RANGE)
def test_shipped_scripts_match_generator(parity, step, n):
    assert load_script(parity, step, n) == generate(parity, step, n)


@pytest.mark.parametrize("parity,step", SCRIPTS)
@pytest.mark.parametrize("n", (2, 3))
def test_scripts_replay_with_oracle(parity, step, n):
    n_amb = 2 * n + (1 if parity == "odd" else 0)
    res = replay(Collection.empty(n_amb), load_script(parity, step, n), check=True)
    assert res.ok, (res.failed_line, res.error)


@pytest.mark.parametrize("parity,step", SCRIPTS)
@pytest.mark.parametrize("n", (2, 3, 4))
def test_scripts_replay_strict(parity, step, n):
    # paranoia mode: the backward Hom of every exchanged pair must vanish too,
    # i.e. each intermediate state really is a semiorthogonal sequence
    n_amb = 2 * n + (1 if parity == "odd" else 0)
    res = replay(
        Collection.empty(n_amb), load_script(parity, step, n), check=True, strict=True
    )
    assert res.ok, (res.failed_line, res.error)


def test_full_replay_counts():
    for n in (2, 3):
        res = replay(Collection.empty(2 * n + 1), load_script("odd", "full", n))
        assert res.ok and count_objects(res.final) == n * (2 * n + 1)
        res = replay(Collection.empty(2 * n), load_script("even", "full", n))
        assert res.ok and count_objects(res.final) == n * (2 * n - 1)
        res = replay(Collection.empty(2 * n + 1), load_script("odd", "chessboard", n))
        assert res.ok and count_tracked(res.final) == 4 * n * n - 1


def test_empty_script_is_identity():
    col = Collection.empty(5)
    res = replay(col, [])
    assert res.ok and res.final == col and res.moves_applied == 0


def test_replay_fails_fast_and_reports():
    res = replay(Collection.empty(5), ["expand A at 0", "exchange 0"])
    assert not res.ok
    assert res.failed_line == "exchange 0"
    assert res.moves_applied == 1


def test_script_files_have_no_trailing_garbage():
    root = pathlib.Path(__file__).resolve().parent.parent / "src" / "flipcheck"
    for path in sorted((root / "collections" / "scripts").rglob("*.moves")):
        text = path.read_text()
        assert text.endswith("\n") and "\t" not in text
