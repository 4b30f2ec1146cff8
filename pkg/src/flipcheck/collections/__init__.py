"""Block constructors, ordered collections, mutation moves, and move scripts."""

from importlib import resources

from .blocks import BlockRangeError, make_block, notation, parse_block_spec
from .engine import (
    Collection,
    EngineError,
    Entry,
    KClassMismatch,
    NoRuleMatch,
    NotSimple,
    OpaqueEntryError,
    PairCheck,
    ReplayResult,
    ScriptError,
    VanishingFalse,
    VanishingNotEstablished,
    apply_move,
    check_semiorthogonal,
    count_objects,
    count_tracked,
    exchange,
    expand_block,
    insert_opaque,
    mutate_block_left,
    mutate_left,
    mutate_right,
    promote,
    replay,
    serre_tail,
    serre_twist,
)
from .scriptgen import GENERATORS, generate

__all__ = [name for name in dir() if not name.startswith("_")]


def load_script(parity: str, step: str, n: int) -> list[str]:
    """Move script for (parity, step, n): shipped data if present, else generated."""
    pkg = resources.files(__name__) / "scripts" / parity / f"n{n}" / f"{step}.moves"
    if pkg.is_file():
        return pkg.read_text().splitlines()
    return generate(parity, step, n)
