"""Exact reversal / prefix-reversal distances for standard and peg permutations.

Three engines share the move definitions:

- full-table BFS over S_n (memoized per model and length, optionally persisted);
- per-component BFS for peg permutations — bullet values are invariant under
  oriented reversals, so the state space splits by (length, bullet-value set)
  and each component holds a single goal state;
- bounded iterative-deepening A* with breakpoint heuristics for one-off
  distances of permutations too long for tables.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from enum import Enum
from math import factorial
from pathlib import Path
from typing import Iterator

from .peg import (DOT, MINUS, PLUS, Decoration, PegPermutation, StripDirection,
                  strips)
from .perm import Perm, check_permutation, identity

__all__ = [
    "Model",
    "TableKind",
    "ResourceLimitError",
    "DistanceTable",
    "DEFAULT_LIMIT_STANDARD",
    "HARD_LIMIT_STANDARD",
    "DEFAULT_LIMIT_PEG",
    "HARD_LIMIT_PEG",
    "distance",
    "distance_peg",
    "pair_distance",
    "distance_bounded",
    "breakpoints",
    "lower_bound",
    "distance_peg_via_inflation",
    "ball",
    "build_table",
    "get_table",
    "cache_path",
    "clear_memory_cache",
]


class Model(Enum):
    RD = "rd"
    PRD = "prd"


class TableKind(Enum):
    STANDARD = "standard"
    PEG = "peg"


DEFAULT_LIMIT_STANDARD = 9
HARD_LIMIT_STANDARD = 11
DEFAULT_LIMIT_PEG = 7
HARD_LIMIT_PEG = 8

_ENV_CACHE = "PEGBALL_CACHE"


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size limit."""

    def __init__(self, message: str, limit: int):
        super().__init__(f"{message} (limit {limit})")
        self.limit = limit


def _effective_limit(n: int, limit: int | None, default: int, hard: int,
                     what: str) -> None:
    eff = min(default if limit is None else limit, hard)
    if n > eff:
        raise ResourceLimitError(f"{what} length {n} exceeds limit", eff)


# ---------------------------------------------------------------------------
# Moves

def _standard_neighbors(model: Model, p: Perm) -> Iterator[Perm]:
    n = len(p)
    if model is Model.RD:
        for i in range(n):
            for j in range(i + 1, n):
                yield p[:i] + p[i:j + 1][::-1] + p[j + 1:]
    else:
        for j in range(2, n + 1):
            yield p[:j][::-1] + p[j:]


_FLIPC = {"+": "-", "-": "+", ".": "."}

PegState = tuple[Perm, tuple[str, ...]]


def _peg_neighbors(model: Model, state: PegState) -> Iterator[PegState]:
    base, decs = state
    n = len(base)
    if model is Model.RD:
        for i in range(n):
            for j in range(i, n):
                yield (base[:i] + base[i:j + 1][::-1] + base[j + 1:],
                       decs[:i] + tuple(_FLIPC[d] for d in decs[i:j + 1][::-1])
                       + decs[j + 1:])
    else:
        for j in range(1, n + 1):
            yield (base[:j][::-1] + base[j:],
                   tuple(_FLIPC[d] for d in decs[:j][::-1]) + decs[j:])


def _to_state(pp: PegPermutation) -> PegState:
    return pp.base, tuple(d.value for d in pp.decorations)


def _from_state(state: PegState) -> PegPermutation:
    return PegPermutation(state[0], tuple(Decoration(d) for d in state[1]))


# ---------------------------------------------------------------------------
# BFS engines

_STANDARD_TABLES: dict[tuple[Model, int], dict[Perm, int]] = {}
_PEG_COMPONENTS: dict[tuple[Model, int, frozenset[int]], dict[PegState, int]] = {}


def _standard_table(model: Model, n: int) -> dict[Perm, int]:
    key = (model, n)
    table = _STANDARD_TABLES.get(key)
    if table is None:
        table = _bfs(identity(n), lambda p: _standard_neighbors(model, p))
        _STANDARD_TABLES[key] = table
    return table


def _bfs(start, neighbors, max_depth: int | None = None) -> dict:
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        new: list = []
        for state in frontier:
            for nb in neighbors(state):
                if nb not in dist:
                    dist[nb] = depth
                    new.append(nb)
        frontier = new
    return dist


def _goal_state(n: int, bullets: frozenset[int]) -> PegState:
    base = identity(n)
    decs = tuple("." if v in bullets else "+" for v in base)
    return base, decs


def _peg_component(model: Model, n: int,
                   bullets: frozenset[int]) -> dict[PegState, int]:
    key = (model, n, bullets)
    comp = _PEG_COMPONENTS.get(key)
    if comp is None:
        comp = _bfs(_goal_state(n, bullets),
                    lambda s: _peg_neighbors(model, s))
        _PEG_COMPONENTS[key] = comp
    return comp


def clear_memory_cache() -> None:
    _STANDARD_TABLES.clear()
    _PEG_COMPONENTS.clear()
    _DISK_TABLES.clear()


# ---------------------------------------------------------------------------
# Public distance oracles

def distance(model: Model, p: Perm, *, limit: int | None = None,
             cache_dir: str | Path | None = None) -> int:
    """Exact distance of p from the identity of its length.

    Moves are involutions, so this also equals the sorting distance of p.

    >>> distance(Model.RD, (3, 4, 1, 2))
    2
    >>> distance(Model.PRD, (4, 2, 1, 3))
    3
    """
    p = tuple(p)
    check_permutation(p)
    _effective_limit(len(p), limit, DEFAULT_LIMIT_STANDARD,
                     HARD_LIMIT_STANDARD, "permutation")
    if cache_dir is not None or os.environ.get(_ENV_CACHE):
        return get_table(model, len(p), TableKind.STANDARD,
                         cache_dir=cache_dir).lookup(p)
    return _standard_table(model, len(p))[p]


def distance_peg(model: Model, pp: PegPermutation, *,
                 limit: int | None = None) -> int:
    """Exact oriented (prefix) reversal distance of pp from its identity.

    The goal is the identity base with every non-bullet element decorated +;
    bullet values never change under oriented reversals, so this single state
    is the only reachable identity peg permutation.

    >>> from .peg import parse_peg
    >>> distance_peg(Model.RD, parse_peg("2+ 1+"))
    3
    >>> distance_peg(Model.RD, parse_peg("1+ 2- 3+"))
    1
    >>> distance_peg(Model.PRD, parse_peg("3. 1- 2."))
    3
    """
    n = len(pp)
    _effective_limit(n, limit, DEFAULT_LIMIT_PEG, HARD_LIMIT_PEG,
                     "peg permutation")
    comp = _peg_component(model, n, pp.bullet_values())
    return comp[_to_state(pp)]


def pair_distance(model: Model, p: Perm, q: Perm) -> int:
    """BFS distance between two permutations of the same length."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        raise ValueError("length mismatch")
    if p == q:
        return 0
    dist = {p: 0}
    frontier = [p]
    depth = 0
    while frontier:
        depth += 1
        new = []
        for state in frontier:
            for nb in _standard_neighbors(model, state):
                if nb == q:
                    return depth
                if nb not in dist:
                    dist[nb] = depth
                    new.append(nb)
        frontier = new
    raise RuntimeError("unreachable state")  # moves generate the whole group


# ---------------------------------------------------------------------------
# Breakpoints and lower bounds

def breakpoints(pp: PegPermutation) -> int:
    """Adjacent pairs not inside a common strip.

    >>> from .peg import parse_peg
    >>> breakpoints(parse_peg("2- 3+ 1. 4+"))
    3
    >>> breakpoints(parse_peg("1+ 2+ 3+"))
    0
    """
    if len(pp) <= 1:
        return 0
    return len(strips(pp)) - 1


def lower_bound(model: Model, pp: PegPermutation) -> int:
    """Breakpoint lower bound on distance_peg(model, pp).

    RD: a reversal repairs at most two breakpoints. PRD: a prefix reversal
    repairs at most one strip boundary, counting a sentinel after the last
    element that only a trailing maximum decorated + or bullet can join.

    >>> from .peg import parse_peg
    >>> lower_bound(Model.PRD, parse_peg("2. 1+"))
    2
    >>> lower_bound(Model.RD, parse_peg("2+ 5- 4+ 1. 3-"))
    2
    """
    n = len(pp)
    if n == 0:
        return 0
    bp = breakpoints(pp)
    if model is Model.RD:
        return (bp + 1) // 2
    ends_with_max = pp.base[-1] == n and pp.decorations[-1] is not MINUS
    return bp if ends_with_max else bp + 1


# ---------------------------------------------------------------------------
# Bounded search for long permutations

def _h_rd(p: Perm) -> int:
    bp = 0
    prev = 0
    for x in p:
        if abs(x - prev) != 1:
            bp += 1
        prev = x
    if abs(len(p) + 1 - prev) != 1:
        bp += 1
    return (bp + 1) // 2


def _h_prd(p: Perm) -> int:
    bp = sum(1 for a, b in zip(p, p[1:]) if abs(b - a) != 1)
    if p and p[-1] != len(p):
        bp += 1
    return bp


def distance_bounded(model: Model, p: Perm, bound: int) -> int | None:
    """Exact distance if it is <= bound, else None.

    Iterative-deepening A* under the admissible breakpoint heuristics; no
    table is built, so the permutation may be far longer than the BFS limits.

    >>> distance_bounded(Model.RD, (4, 5, 6, 1, 2, 3), 3)
    3
    >>> distance_bounded(Model.PRD, (1, 3, 2), 1) is None
    True
    """
    p = tuple(p)
    check_permutation(p)
    h = _h_rd if model is Model.RD else _h_prd
    goal = identity(len(p))
    if p == goal:
        return 0

    def dfs(state: Perm, g: int, limit: int) -> bool:
        if g + h(state) > limit:
            return False
        if state == goal:
            return True
        if g == limit:
            return False
        for nb in _standard_neighbors(model, state):
            if dfs(nb, g + 1, limit):
                return True
        return False

    for limit in range(max(h(p), 1), bound + 1):
        if dfs(p, 0, limit):
            return limit
    return None


def distance_peg_via_inflation(model: Model, pp: PegPermutation, N: int,
                               *, max_total: int = 64) -> int:
    """Distance of the inflation of pp with N on signed elements, 1 on bullets.

    Always <= distance_peg(model, pp) because every grid member is; equality
    holds once N exceeds the relevant generating-permutation length.

    >>> from .peg import parse_peg
    >>> distance_peg_via_inflation(Model.RD, parse_peg("2+ 1+"), 2)
    2
    >>> distance_peg_via_inflation(Model.RD, parse_peg("2+ 1+"), 6)
    3
    """
    from .inflation import monotone_inflate

    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    v = tuple(1 if d is DOT else N for d in pp.decorations)
    if sum(v) > max_total:
        raise ResourceLimitError(
            f"inflated length {sum(v)} exceeds limit", max_total)
    g = monotone_inflate(pp, v)
    upper = distance_peg(model, pp)
    d = distance_bounded(model, g, upper)
    assert d is not None, "grid member exceeded its peg distance bound"
    return d


# ---------------------------------------------------------------------------
# Balls and tables

def ball(model: Model, k: int, n: int, kind: TableKind = TableKind.STANDARD,
         *, limit: int | None = None):
    """All states of length n at distance <= k.

    >>> sorted(ball(Model.RD, 1, 3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    >>> ball(Model.PRD, 0, 2) == {(1, 2)}
    True
    """
    if k < 0:
        raise ValueError(f"negative radius: {k}")
    if kind is TableKind.STANDARD:
        _effective_limit(n, limit, DEFAULT_LIMIT_STANDARD,
                         HARD_LIMIT_STANDARD, "permutation")
        dist = _bfs(identity(n), lambda p: _standard_neighbors(model, p),
                    max_depth=k)
        return set(dist)
    _effective_limit(n, limit, DEFAULT_LIMIT_PEG, HARD_LIMIT_PEG,
                     "peg permutation")
    out: set[PegPermutation] = set()
    seen: set[PegState] = set()
    frontier: list[PegState] = []
    for mask in range(2 ** n):
        bullets = frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
        frontier.append(_goal_state(n, bullets))
    seen.update(frontier)
    out.update(_from_state(s) for s in frontier)
    for _ in range(k):
        new: list[PegState] = []
        for state in frontier:
            for nb in _peg_neighbors(model, state):
                if nb not in seen:
                    seen.add(nb)
                    new.append(nb)
        out.update(_from_state(s) for s in new)
        frontier = new
    return out


def _lehmer_rank(p: Perm) -> int:
    n = len(p)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r = r * (n - i) + smaller
    return r


def _lehmer_unrank(r: int, n: int) -> Perm:
    digits = []
    for m in range(1, n + 1):
        digits.append(r % m)
        r //= m
    digits.reverse()
    avail = list(range(1, n + 1))
    return tuple(avail.pop(d) for d in digits)


_DEC_DIGIT = {"+": 0, "-": 1, ".": 2}
_DIGIT_DEC = {0: "+", 1: "-", 2: "."}


def _peg_rank(state: PegState) -> int:
    base, decs = state
    n = len(base)
    r = _lehmer_rank(base)
    for d in decs:
        r = r * 3 + _DEC_DIGIT[d]
    return r


@dataclass(frozen=True)
class DistanceTable:
    """Complete distance table for one (model, kind, length)."""

    model: Model
    kind: TableKind
    n: int
    data: bytes

    def lookup(self, p: Perm) -> int:
        if self.kind is not TableKind.STANDARD:
            raise TypeError("standard lookup on a peg table")
        return self.data[_lehmer_rank(tuple(p))]

    def lookup_peg(self, pp: PegPermutation) -> int:
        if self.kind is not TableKind.PEG:
            raise TypeError("peg lookup on a standard table")
        return self.data[_peg_rank(_to_state(pp))]

    def header(self) -> str:
        return f"PEGBALL-DIST v1 {self.model.value} {self.kind.value} {self.n}"

    def save(self, path: str | Path) -> None:
        """Write atomically: temp file in the target directory, then rename."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(self.header().encode() + b"\n")
                fh.write(self.data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str | Path) -> "DistanceTable":
        with open(path, "rb") as fh:
            header = fh.readline().decode().strip()
            data = fh.read()
        fields = header.split()
        if len(fields) != 5 or fields[0] != "PEGBALL-DIST" or fields[1] != "v1":
            raise ValueError(f"bad table header: {header!r}")
        model, kind, n = Model(fields[2]), TableKind(fields[3]), int(fields[4])
        expected = factorial(n) * (3 ** n if kind is TableKind.PEG else 1)
        if len(data) != expected:
            raise ValueError(
                f"table size {len(data)} != expected {expected} for {header!r}")
        return cls(model, kind, n, data)


def build_table(model: Model, n: int, kind: TableKind = TableKind.STANDARD,
                *, limit: int | None = None) -> DistanceTable:
    """Full-table BFS; every state of the given kind gets an exact distance.

    >>> build_table(Model.RD, 3).lookup((3, 2, 1))
    1
    """
    if kind is TableKind.STANDARD:
        _effective_limit(n, limit, DEFAULT_LIMIT_STANDARD,
                         HARD_LIMIT_STANDARD, "permutation")
        table = _standard_table(model, n)
        data = bytearray(factorial(n))
        for p, d in table.items():
            data[_lehmer_rank(p)] = d
        return DistanceTable(model, kind, n, bytes(data))
    _effective_limit(n, limit, DEFAULT_LIMIT_PEG, HARD_LIMIT_PEG,
                     "peg permutation")
    data = bytearray(factorial(n) * 3 ** n)
    for mask in range(2 ** n):
        bullets = frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
        for state, d in _peg_component(model, n, bullets).items():
            data[_peg_rank(state)] = d
    return DistanceTable(model, kind, n, bytes(data))


_DISK_TABLES: dict[tuple[Model, TableKind, int], DistanceTable] = {}


def cache_path(cache_dir: str | Path, model: Model, kind: TableKind,
               n: int) -> Path:
    return Path(cache_dir) / f"{model.value}-{kind.value}-{n}.dist"


def get_table(model: Model, n: int, kind: TableKind = TableKind.STANDARD, *,
              cache_dir: str | Path | None = None,
              limit: int | None = None) -> DistanceTable:
    """Memoized table, read from / written to the cache directory if set.

    The directory comes from the argument or the PEGBALL_CACHE environment
    variable; a corrupt cache file is rebuilt, not trusted.
    """
    key = (model, kind, n)
    if key in _DISK_TABLES:
        return _DISK_TABLES[key]
    directory = cache_dir if cache_dir is not None else os.environ.get(_ENV_CACHE)
    if directory:
        path = cache_path(directory, model, kind, n)
        if path.exists():
            try:
                table = DistanceTable.load(path)
                if (table.model, table.kind, table.n) == key:
                    _DISK_TABLES[key] = table
                    return table
            except (ValueError, OSError):
                pass
    table = build_table(model, n, kind, limit=limit)
    if directory:
        table.save(cache_path(directory, model, kind, n))
    _DISK_TABLES[key] = table
    return table
