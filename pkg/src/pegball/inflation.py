"""Monotone inflations of peg permutations and grid-class membership.

An inflation vector assigns one nonnegative multiplicity per element. A +
element blows up into an ascending run of consecutive values, a - element
into a descending run, and a bullet is kept (1) or deleted (0). Runs are
rescaled so the result is a standard permutation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .peg import DOT, MINUS, PLUS, Decoration, PegPermutation, is_clean_compact
from .perm import Perm

__all__ = [
    "InflationVector",
    "is_legal",
    "check_legal",
    "monotone_inflate",
    "peg_monotone_inflate",
    "grid_member",
    "grid_member_peg",
    "grid_enumerate",
    "a_set_stream",
]

InflationVector = tuple[int, ...]


def is_legal(pp: PegPermutation, v: Sequence[int]) -> bool:
    """v has one entry per element, nonnegative, and 0/1 on bullets."""
    if len(v) != len(pp):
        return False
    return all(x >= 0 and (d is not DOT or x <= 1)
               for x, d in zip(v, pp.decorations))


def check_legal(pp: PegPermutation, v: Sequence[int]) -> None:
    if len(v) != len(pp):
        raise ValueError(f"vector length {len(v)} != peg length {len(pp)}")
    if not is_legal(pp, v):
        raise ValueError(f"illegal inflation vector {tuple(v)} for {pp}")


def _value_offsets(pp: PegPermutation, v: Sequence[int]) -> list[int]:
    """Start of each position's value block; blocks stack in value order."""
    size_of_value = {w: x for w, x in zip(pp.base, v)}
    offset_of_value: dict[int, int] = {}
    acc = 0
    for w in sorted(size_of_value):
        offset_of_value[w] = acc
        acc += size_of_value[w]
    return [offset_of_value[w] for w in pp.base]


def monotone_inflate(pp: PegPermutation, v: Sequence[int]) -> Perm:
    """The standard permutation pp[v].

    >>> monotone_inflate(PegPermutation((3, 1, 2, 5, 4), "++.-."), (2, 0, 1, 3, 1))
    (2, 3, 1, 7, 6, 5, 4)
    >>> monotone_inflate(PegPermutation((2, 1), "++"), (2, 2))
    (3, 4, 1, 2)
    """
    check_legal(pp, v)
    offsets = _value_offsets(pp, v)
    out: list[int] = []
    for i, (off, size) in enumerate(zip(offsets, v)):
        block = range(off + 1, off + size + 1)
        out.extend(reversed(block) if pp.decorations[i] is MINUS else block)
    return tuple(out)


def peg_monotone_inflate(pp: PegPermutation, v: Sequence[int]) -> set[PegPermutation]:
    """All decorated inflations pp[v]_peg.

    A + element may blow up into any identity peg permutation (decorations
    drawn from {+, bullet}), a - element into any reverse identity peg
    permutation ({-, bullet}), and a surviving bullet stays a bullet.

    >>> sorted(str(q) for q in peg_monotone_inflate(PegPermutation((1,), "+"), (1,)))
    ['1+', '1.']
    >>> peg_monotone_inflate(PegPermutation((1,), "."), (0,)) == {PegPermutation((), ())}
    True
    """
    base = monotone_inflate(pp, v)
    choices: list[tuple[tuple[Decoration, ...], ...]] = []
    for d, size in zip(pp.decorations, v):
        if d is DOT:
            choices.append(((DOT,) * size,))
        else:
            pool = (PLUS, DOT) if d is PLUS else (MINUS, DOT)
            choices.append(tuple(itertools.product(pool, repeat=size)))
    out: set[PegPermutation] = set()
    for parts in itertools.product(*choices):
        decs = tuple(itertools.chain.from_iterable(parts))
        out.add(PegPermutation(base, decs))
    return out


def _blocks_consistent(pp: PegPermutation,
                       blocks: Sequence[tuple[int, int] | None],
                       n: int) -> bool:
    """Nonempty block value intervals must stack to 1..n in base-value order."""
    nonempty = sorted((pp.base[i], lo, hi)
                      for i, b in enumerate(blocks) if b is not None
                      for lo, hi in [b])
    acc = 0
    for _, lo, hi in nonempty:
        if lo != acc + 1:
            return False
        acc = hi
    return acc == n


def grid_member(pp: PegPermutation, g: Perm) -> bool:
    """True iff g is a monotone inflation of pp.

    Searches segmentations of g into len(pp) consecutive blocks, each a run
    of consecutive values oriented per its decoration (bullets of size <= 1),
    with block value intervals stacking in pp's base order.

    >>> grid_member(PegPermutation((1, 2, 3), "+-+"), (1, 4, 3, 2))
    True
    >>> grid_member(PegPermutation((1, 2, 3), "+-+"), (2, 1, 4, 3))
    False
    """
    m, n = len(pp), len(g)
    blocks: list[tuple[int, int] | None] = [None] * m

    def rec(pos: int, idx: int) -> bool:
        if idx == m:
            return pos == n and _blocks_consistent(pp, blocks, n)
        d = pp.decorations[idx]
        blocks[idx] = None
        if rec(pos, idx + 1):
            return True
        if pos == n:
            return False
        step = -1 if d is MINUS else 1
        limit = 1 if d is DOT else n - pos
        end = pos + 1
        while True:
            lo, hi = sorted((g[pos], g[end - 1]))
            blocks[idx] = (lo, hi)
            if rec(end, idx + 1):
                return True
            if end - pos >= limit or end == n or g[end] - g[end - 1] != step:
                blocks[idx] = None
                return False
            end += 1

    return rec(0, 0)


def grid_member_peg(pp: PegPermutation, g: PegPermutation) -> bool:
    """True iff g is a decorated monotone inflation of pp.

    As grid_member, but blocks for + elements must carry decorations in
    {+, bullet}, blocks for - elements in {-, bullet}, and a surviving
    bullet must stay a bullet.

    >>> grid_member_peg(PegPermutation((1,), "+"), PegPermutation((1,), "."))
    True
    >>> grid_member_peg(PegPermutation((1, 2, 3), "+-+"), PegPermutation((1, 2), "--"))
    False
    """
    m, n = len(pp), len(g)
    gb, gd = g.base, g.decorations
    blocks: list[tuple[int, int] | None] = [None] * m

    def allowed(d: Decoration, gi: int) -> bool:
        if d is DOT:
            return gd[gi] is DOT
        if d is PLUS:
            return gd[gi] in (PLUS, DOT)
        return gd[gi] in (MINUS, DOT)

    def rec(pos: int, idx: int) -> bool:
        if idx == m:
            return pos == n and _blocks_consistent(pp, blocks, n)
        d = pp.decorations[idx]
        blocks[idx] = None
        if rec(pos, idx + 1):
            return True
        if pos == n or not allowed(d, pos):
            return False
        step = -1 if d is MINUS else 1
        limit = 1 if d is DOT else n - pos
        end = pos + 1
        while True:
            lo, hi = sorted((gb[pos], gb[end - 1]))
            blocks[idx] = (lo, hi)
            if rec(end, idx + 1):
                return True
            if (end - pos >= limit or end == n
                    or gb[end] - gb[end - 1] != step or not allowed(d, end)):
                blocks[idx] = None
                return False
            end += 1

    return rec(0, 0)


def legal_vectors(pp: PegPermutation, total: int) -> Iterator[InflationVector]:
    """All legal inflation vectors for pp with entries summing to total."""
    decs = pp.decorations
    m = len(decs)

    def rec(idx: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if idx == m:
            if remaining == 0:
                yield ()
            return
        cap = min(remaining, 1) if decs[idx] is DOT else remaining
        for size in range(cap + 1):
            for rest in rec(idx + 1, remaining - size):
                yield (size,) + rest

    return rec(0, total)


def grid_enumerate(pegs: Iterable[PegPermutation], n: int) -> set[Perm]:
    """All length-n members of the union of the pegs' grid classes.

    >>> sorted(grid_enumerate({PegPermutation((1, 2, 3), "+-+")}, 3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    >>> grid_enumerate({PegPermutation((1,), "+")}, 4)
    {(1, 2, 3, 4)}
    """
    out: set[Perm] = set()
    for pp in pegs:
        for v in legal_vectors(pp, n):
            out.add(monotone_inflate(pp, v))
    return out


def a_set_stream(beta: PegPermutation, max_total_length: int) -> Iterator[Perm]:
    """The permutations whose peg is beta, up to the given length.

    These are the inflations of beta with multiplicity >= 2 on signed
    elements and exactly 1 on bullets. Emitted ascending by length, then
    lexicographically.

    >>> list(a_set_stream(PegPermutation((2, 1), "++"), 4))
    [(3, 4, 1, 2)]
    >>> next(a_set_stream(PegPermutation((1,), "."), 1))
    (1,)
    """
    if not is_clean_compact(beta):
        raise ValueError(f"not clean compact: {beta}")
    decs = beta.decorations
    m = len(decs)
    floor = [1 if d is DOT else 2 for d in decs]

    def vectors(length: int) -> Iterator[tuple[int, ...]]:
        def rec(idx: int, remaining: int) -> Iterator[tuple[int, ...]]:
            if idx == m:
                if remaining == 0:
                    yield ()
                return
            lo = floor[idx]
            hi = 1 if decs[idx] is DOT else remaining - sum(floor[idx + 1:])
            for size in range(lo, hi + 1):
                for rest in rec(idx + 1, remaining - size):
                    yield (size,) + rest
        return rec(0, length)

    for length in range(sum(floor), max_total_length + 1):
        batch = {monotone_inflate(beta, v) for v in vectors(length)}
        yield from sorted(batch)
