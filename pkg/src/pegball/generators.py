"""k-generating sets: clean compact peg permutations whose grid classes cover
the balls B_k, built by the inductive inflation constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import Model, distance_peg
from .peg import (DOT, MINUS, PLUS, Decoration, PegPermutation,
                  is_clean_compact, oriented_reversal, peg_sort_key)

__all__ = [
    "GeneratingSet",
    "rd_inflate_step",
    "rd_generating_set",
    "prd_inflate_step",
    "prd_generating_set",
    "generating_set",
    "is_generating",
]


@dataclass(frozen=True)
class GeneratingSet:
    model: Model
    k: int
    members: frozenset[PegPermutation]

    def sorted_members(self) -> list[PegPermutation]:
        return sorted(self.members, key=peg_sort_key)

    def __len__(self) -> int:
        return len(self.members)


def _rescale(keys: list[int], decs: list[Decoration]) -> PegPermutation:
    ranks = {key: rank + 1 for rank, key in enumerate(sorted(keys))}
    return PegPermutation(tuple(ranks[key] for key in keys), tuple(decs))


def rd_inflate_step(pp: PegPermutation, I: tuple[int, int]) -> PegPermutation:
    """One inductive step of the reversal construction.

    Each selected element grows into a monotone pair (triple when i = j)
    oriented by its sign; the oriented reversal at positions i+1 .. j+1 then
    restores clean compactness.

    >>> from .peg import parse_peg
    >>> str(rd_inflate_step(parse_peg("1+ 2- 3+"), (1, 3)))
    '1+ 4- 3+ 2- 5+'
    >>> str(rd_inflate_step(parse_peg("1+ 2- 3+"), (2, 2)))
    '1+ 4- 3+ 2- 5+'
    >>> str(rd_inflate_step(parse_peg("1+"), (1, 1)))
    '1+ 2- 3+'
    """
    i, j = I
    n = len(pp)
    if not (1 <= i <= j <= n):
        raise ValueError(f"invalid index multiset {I} for length {n}")
    if not is_clean_compact(pp):
        raise ValueError(f"not clean compact: {pp}")
    if any(d is DOT for d in pp.decorations):
        raise ValueError(f"bullet decoration in {pp}")
    # Scale values by 4 so inserted copies v+1, v+2 can sit at 4v+1, 4v+2.
    keys: list[int] = []
    decs: list[Decoration] = []
    for pos in range(1, n + 1):
        v, d = 4 * pp.base[pos - 1], pp.decorations[pos - 1]
        if pos == i == j:
            block = [v, v + 1, v + 2]
        elif pos in (i, j):
            block = [v, v + 1]
        else:
            block = [v]
        if d is MINUS:
            block.reverse()
        keys.extend(block)
        decs.extend([d] * len(block))
    return oriented_reversal(_rescale(keys, decs), i + 1, j + 1)


def rd_generating_set(k: int) -> GeneratingSet:
    """All k-generating peg permutations for the reversal model.

    >>> [str(pp) for pp in rd_generating_set(1).sorted_members()]
    ['1+ 2- 3+']
    >>> len(rd_generating_set(2))
    4
    """
    if k < 0:
        raise ValueError(f"negative k: {k}")
    current = {PegPermutation((1,), (PLUS,))}
    for _ in range(k):
        nxt: set[PegPermutation] = set()
        for pp in current:
            n = len(pp)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    nxt.add(rd_inflate_step(pp, (i, j)))
        current = nxt
    return GeneratingSet(Model.RD, k, frozenset(current))


def prd_inflate_step(pp: PegPermutation, i: int) -> PegPermutation:
    """One inductive step of the prefix-reversal construction.

    Writing pp = alpha x^s beta with x^s the element at position i, the result
    is x^- alpha'^R (x+1)^+ beta' for s = +, and (x+1)^+ alpha'^R x^- beta'
    for s = -, where alpha', beta' increment entries above x and ^R is the
    oriented reversal.

    >>> from .peg import parse_peg
    >>> str(prd_inflate_step(parse_peg("1- 2+"), 1))
    '2+ 1- 3+'
    >>> str(prd_inflate_step(parse_peg("1- 2+"), 2))
    '2- 1+ 3+'
    >>> str(prd_inflate_step(parse_peg("2+ 1- 3+"), 3))
    '3- 1+ 2- 4+'
    """
    n = len(pp)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for length {n}")
    x = pp.base[i - 1]
    sign = pp.decorations[i - 1]
    if sign is DOT:
        raise ValueError(f"bullet decoration at position {i} of {pp}")

    def bump(values, decorations) -> tuple[list[int], list[Decoration]]:
        return [v + 1 if v > x else v for v in values], list(decorations)

    alpha_b, alpha_d = bump(pp.base[: i - 1], pp.decorations[: i - 1])
    beta_b, beta_d = bump(pp.base[i:], pp.decorations[i:])
    flip = {PLUS: MINUS, MINUS: PLUS, DOT: DOT}
    alpha_rb = alpha_b[::-1]
    alpha_rd = [flip[d] for d in alpha_d[::-1]]
    if sign is PLUS:
        base = [x] + alpha_rb + [x + 1] + beta_b
        decs = [MINUS] + alpha_rd + [PLUS] + beta_d
    else:
        base = [x + 1] + alpha_rb + [x] + beta_b
        decs = [PLUS] + alpha_rd + [MINUS] + beta_d
    return PegPermutation(tuple(base), tuple(decs))


def prd_generating_set(k: int) -> GeneratingSet:
    """All k-generating peg permutations for the prefix-reversal model.

    Exactly k! members, each of length k+1, each reached from a unique parent.

    >>> [str(pp) for pp in prd_generating_set(1).sorted_members()]
    ['1- 2+']
    >>> [str(pp) for pp in prd_generating_set(2).sorted_members()]
    ['2+ 1- 3+', '2- 1+ 3+']
    >>> len(prd_generating_set(4))
    24
    """
    if k < 1:
        raise ValueError(f"prefix-reversal generating sets start at k=1, got {k}")
    current = {PegPermutation((1, 2), (MINUS, PLUS))}
    for _ in range(k - 1):
        current = {prd_inflate_step(pp, i)
                   for pp in current for i in range(1, len(pp) + 1)}
    return GeneratingSet(Model.PRD, k, frozenset(current))


def generating_set(model: Model, k: int) -> GeneratingSet:
    if model is Model.RD:
        return rd_generating_set(k)
    if k == 0:
        return GeneratingSet(Model.PRD, 0,
                             frozenset({PegPermutation((1,), (PLUS,))}))
    return prd_generating_set(k)


def _strengthenings(pp: PegPermutation):
    """Proper sign-strengthenings: some bullets replaced by signs."""
    bullets = [i for i, d in enumerate(pp.decorations) if d is DOT]
    for mask in range(1, 2 ** len(bullets)):
        chosen = [i for b, i in enumerate(bullets) if mask >> b & 1]
        stack = [(0, list(pp.decorations))]
        while stack:
            at, decs = stack.pop()
            if at == len(chosen):
                yield PegPermutation(pp.base, tuple(decs))
                continue
            for sign in (PLUS, MINUS):
                nd = list(decs)
                nd[chosen[at]] = sign
                stack.append((at + 1, nd))


def is_generating(model: Model, k: int, pp: PegPermutation) -> bool:
    """Exact membership test for the k-generating set.

    RD: length 2k+1, clean compact, bullet-free, distance k. PRD: length
    k+1, clean compact, distance k, and maximal — no clean compact
    sign-strengthening stays within distance k (longer extensions are ruled
    out by the breakpoint bound, so equal-length strengthenings are the only
    candidates above pp).

    >>> from .peg import parse_peg
    >>> is_generating(Model.RD, 2, parse_peg("1+ 4- 3+ 2- 5+"))
    True
    >>> is_generating(Model.RD, 1, parse_peg("1+"))
    False
    >>> is_generating(Model.PRD, 2, parse_peg("2+ 1- 3+"))
    True
    """
    if model is Model.RD:
        return (len(pp) == 2 * k + 1
                and is_clean_compact(pp)
                and all(d is not DOT for d in pp.decorations)
                and distance_peg(model, pp) == k)
    if len(pp) != k + 1 or not is_clean_compact(pp):
        return False
    if distance_peg(model, pp) != k:
        return False
    return not any(is_clean_compact(qq) and distance_peg(model, qq) <= k
                   for qq in _strengthenings(pp))
