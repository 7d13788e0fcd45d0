"""Clean compact peg bases of the balls, M-sets, and standard bases.

A clean compact peg permutation is a basis member of B-hat_k iff its own
distance exceeds k while every proper pattern in scope stays within k; the
scope is the full peg pattern order for reversals and the clean compact
ones for prefix reversals (see is_peg_basis_member).  Length bounds make
the search finite: 2k+1 for reversals (2 when k = 0) and k+2 for prefix
reversals, where only the exceptional families reach k+2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import (Model, ResourceLimitError, ball, distance,
                       distance_bounded, distance_peg)
from .inflation import a_set_stream
from .peg import (ExceptionalKind, PegPermutation, clean_compact_proper_patterns,
                  enumerate_clean_compact, exceptional, is_clean_compact,
                  is_compact, peg_sort_key, proper_patterns)
from .perm import Perm, contains_pattern, minimal_elements

__all__ = [
    "PegBasis",
    "MSet",
    "ExceptionalReport",
    "DEFAULT_K_LIMIT",
    "peg_basis",
    "peg_basis_bound",
    "is_peg_basis_member",
    "exceptional_check",
    "m_set",
    "default_m_set_cap",
    "DEFAULT_SWEEP_LIMIT",
    "standard_basis",
    "compactness_check",
]

DEFAULT_K_LIMIT = {Model.RD: 3, Model.PRD: 5}


@dataclass(frozen=True)
class PegBasis:
    model: Model
    k: int
    members: frozenset[PegPermutation]
    bound: int

    def sorted_members(self) -> list[PegPermutation]:
        return sorted(self.members, key=peg_sort_key)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class MSet:
    model: Model
    beta: PegPermutation
    target_distance: int
    members: frozenset[Perm]
    cap: int
    cap_hit: bool


def peg_basis_bound(model: Model, k: int) -> int:
    """Maximum length a basis member can have."""
    return max(2 * k + 1, 2) if model is Model.RD else k + 2


def is_peg_basis_member(model: Model, k: int, pp: PegPermutation) -> bool:
    """pp is a clean compact peg permutation minimal outside B-hat_k.

    The minimality scope differs by model.  For reversals every proper peg
    pattern must lie in the ball: the all-bullet weakening of a peg with base
    312 already has distance 2, which rules the peg out of the k = 1 basis
    even when its clean compact patterns are all cheap.  For prefix reversals
    only clean compact patterns count, so the exceptional permutations of
    length k+2 stay minimal (their all-bullet weakenings sit outside the ball
    but are not clean compact).

    >>> from .peg import parse_peg
    >>> is_peg_basis_member(Model.RD, 1, parse_peg("1- 2-"))
    True
    >>> is_peg_basis_member(Model.RD, 1, parse_peg("2+ 1+"))
    False
    >>> is_peg_basis_member(Model.RD, 1, parse_peg("3. 1- 2."))
    False
    >>> is_peg_basis_member(Model.PRD, 1, parse_peg("3. 1- 2."))
    True
    """
    if not is_clean_compact(pp):
        raise ValueError(f"not clean compact: {pp}")
    if distance_peg(model, pp) <= k:
        return False
    if model is Model.RD:
        pool = proper_patterns(pp)
    else:
        pool = clean_compact_proper_patterns(pp)
    patterns = sorted(pool, key=len, reverse=True)
    return all(len(qq) == 0 or distance_peg(model, qq) <= k for qq in patterns)


def peg_basis(model: Model, k: int, *, k_limit: int | None = None) -> PegBasis:
    """The complete clean compact peg basis of B-hat_k.

    >>> [str(pp) for pp in peg_basis(Model.RD, 1).sorted_members()]
    ['1- 2-', '2+ 1.', '2. 1+']
    >>> [str(pp) for pp in peg_basis(Model.PRD, 0).sorted_members()]
    ['1-', '2+ 1.', '2. 1+']
    """
    if k < 0:
        raise ValueError(f"negative k: {k}")
    limit = DEFAULT_K_LIMIT[model] if k_limit is None else k_limit
    if k > limit:
        raise ResourceLimitError(f"peg basis radius {k} exceeds limit", limit)
    bound = peg_basis_bound(model, k)
    members: set[PegPermutation] = set()
    for n in range(1, bound + 1):
        for pp in enumerate_clean_compact(n):
            base, decs = pp.base, pp.decorations
            # Removing a trailing maximum decorated + or bullet (or, for
            # reversals only, a leading 1 so decorated) keeps the rest clean
            # compact at the same distance, so no basis member has one.
            if n > 1 and base[-1] == n and decs[-1].value in "+.":
                continue
            if (model is Model.RD and n > 1 and base[0] == 1
                    and decs[0].value in "+."):
                continue
            if is_peg_basis_member(model, k, pp):
                members.add(pp)
    return PegBasis(model, k, frozenset(members), bound)


@dataclass(frozen=True)
class ExceptionalReport:
    kind: ExceptionalKind
    n: int
    pp: PegPermutation
    distance: int
    distance_ok: bool
    in_basis_k: bool
    in_basis_k_plus_1: bool

    @property
    def ok(self) -> bool:
        return self.distance_ok and self.in_basis_k and self.in_basis_k_plus_1


def exceptional_check(k: int) -> list[ExceptionalReport]:
    """Verify the exceptional prefix-reversal families at length n = k+2.

    Each must have distance n and be a basis member of both B-hat_k and
    B-hat_{k+1}; the basis tests use the local membership predicate, so no
    full basis is materialized.

    >>> [r.ok for r in exceptional_check(1)]
    [True, True]
    """
    n = k + 2
    kinds = ((ExceptionalKind.THETA_EVEN, ExceptionalKind.LAMBDA_EVEN)
             if n % 2 == 0 else
             (ExceptionalKind.THETA_ODD, ExceptionalKind.LAMBDA_ODD))
    out = []
    for kind in kinds:
        pp = exceptional(kind, n)
        d = distance_peg(Model.PRD, pp)
        out.append(ExceptionalReport(
            kind, n, pp, d, d == n,
            is_peg_basis_member(Model.PRD, k, pp),
            is_peg_basis_member(Model.PRD, k + 1, pp)))
    return out


def default_m_set_cap(beta: PegPermutation, target: int) -> int:
    return len(beta) + 2 * (target + 1)


def m_set(model: Model, beta: PegPermutation,
          length_cap: int | None = None) -> MSet:
    """Minimal permutations in A_beta realizing beta's peg distance.

    Every member of A_beta has distance <= distance_peg(beta) (it is a grid
    member), so candidates are screened with a bounded search; survivors are
    filtered to pattern-minimal ones within the candidate set.

    >>> from .peg import parse_peg
    >>> sorted(m_set(Model.RD, parse_peg("1- 2-")).members)
    [(2, 1, 4, 3)]
    >>> sorted(m_set(Model.PRD, parse_peg("3. 1- 2.")).members)
    [(4, 2, 1, 3)]
    """
    target = distance_peg(model, beta)
    cap = default_m_set_cap(beta, target) if length_cap is None else length_cap
    candidates: list[Perm] = []
    for g in a_set_stream(beta, cap):
        if distance_bounded(model, g, target) == target:
            candidates.append(g)
    members = [g for g in candidates
               if not any(len(h) < len(g) and contains_pattern(h, g)
                          for h in candidates)]
    return MSet(model, beta, target, frozenset(members), cap,
                cap_hit=not candidates)


DEFAULT_SWEEP_LIMIT = 8


def _oracle_completion(model: Model, k: int, max_len: int) -> set[Perm]:
    """Every minimal permutation outside B_k with length <= max_len.

    The ball class is closed downward, so each length-n member arises from
    a length-(n-1) member by inserting the new maximum; an insertion that
    leaves the ball is minimal excluded iff its remaining one-element
    deletions all stay inside.
    """
    found: set[Perm] = set()
    level: set[Perm] = {(1,)} if max_len >= 2 else set()
    for n in range(2, max_len + 1):
        cur = ball(model, k, n)
        for p in level:
            for pos in range(n):
                q = p[:pos] + (n,) + p[pos:]
                if q in cur:
                    continue
                deletions = (tuple(v - (v > q[i]) for j, v in enumerate(q)
                                   if j != i)
                             for i in range(n) if i != pos)
                if all(d in level for d in deletions):
                    found.add(q)
        level = cur
    return found


def standard_basis(model: Model, k: int, length_cap: int | None = None,
                   *, k_limit: int | None = None) -> set[Perm]:
    """Basis of the pattern class B_k: M-sets completed by the ball oracle.

    The M-set union alone can be incomplete.  A permutation whose peg
    properly contains a basis peg beta is excluded from B_k, yet it may
    contain no witness from M(beta) when the fiber of beta bottoms out
    below distance(beta): the fiber of 2+ 1+ starts at 3412 with distance
    2, so 45231 is minimal outside B_2 for reversals while avoiding the
    whole M-set union.  Sweeping the ball levels restores every minimal
    excluded permutation up to min(length_cap, DEFAULT_SWEEP_LIMIT).

    >>> sorted(standard_basis(Model.RD, 1), key=lambda p: (len(p), p))
    [(2, 3, 1), (3, 1, 2), (2, 1, 4, 3)]
    """
    union: set[Perm] = set()
    for beta in peg_basis(model, k, k_limit=k_limit).members:
        union.update(m_set(model, beta, length_cap).members)
    sweep_to = DEFAULT_SWEEP_LIMIT if length_cap is None \
        else min(length_cap, DEFAULT_SWEEP_LIMIT)
    union.update(_oracle_completion(model, k, sweep_to))
    return set(minimal_elements(union))


def compactness_check(pp: PegPermutation) -> bool:
    """Strips of length >= 2 must be all-bullet.

    >>> from .peg import parse_peg
    >>> compactness_check(parse_peg("3. 4. 1- 5- 2+"))
    True
    >>> compactness_check(parse_peg("3+ 4. 1- 5- 2+"))
    False
    """
    return is_compact(pp)
