"""Ball counting by three independent methods: direct BFS, grid-class
enumeration of the generating set, and pattern-avoidance growth from the
standard basis. They must agree wherever all are defined.
"""

from __future__ import annotations

from enum import Enum

from .basis import standard_basis
from .distance import Model, ResourceLimitError, TableKind, ball
from .generators import generating_set
from .inflation import grid_enumerate
from .perm import Perm, avoids_all

__all__ = [
    "CountMethod",
    "DEFAULT_LIMIT_CLASS",
    "count_ball",
    "sequence",
]


class CountMethod(Enum):
    BFS = "bfs"
    GRID = "grid"
    AVOID = "avoid"


DEFAULT_LIMIT_CLASS = 12

_BASIS_CACHE: dict[tuple[Model, int], frozenset[Perm]] = {}
_CLASS_CACHE: dict[tuple[Model, int], list[set[Perm]]] = {}


def _basis(model: Model, k: int) -> frozenset[Perm]:
    key = (model, k)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = frozenset(standard_basis(model, k))
    return _BASIS_CACHE[key]


def _class_members(model: Model, k: int, n: int) -> set[Perm]:
    """Avoiders of the standard basis, grown by inserting each new maximum.

    The class is closed downward, so every length-(m+1) member arises from a
    length-m member by deleting the maximum value.
    """
    basis = _basis(model, k)
    key = (model, k)
    levels = _CLASS_CACHE.setdefault(key, [{()}])
    while len(levels) <= n:
        m = len(levels)
        grown: set[Perm] = set()
        for p in levels[m - 1]:
            for pos in range(m):
                q = p[:pos] + (m,) + p[pos:]
                if avoids_all(basis, q):
                    grown.add(q)
        levels.append(grown)
    return levels[n]


def count_ball(model: Model, k: int, n: int,
               method: CountMethod = CountMethod.BFS, *,
               limit: int | None = None) -> int:
    """|B_k(n)| by the chosen method.

    >>> count_ball(Model.RD, 1, 3)
    4
    >>> count_ball(Model.PRD, 2, 4, CountMethod.GRID)
    10
    >>> count_ball(Model.PRD, 0, 5, CountMethod.AVOID)
    1
    """
    if k < 0 or n < 0:
        raise ValueError(f"negative parameter: k={k}, n={n}")
    if method is CountMethod.BFS:
        return len(ball(model, k, n, TableKind.STANDARD, limit=limit))
    eff = DEFAULT_LIMIT_CLASS if limit is None else limit
    if n > eff:
        raise ResourceLimitError(f"length {n} exceeds {method.value} limit", eff)
    if method is CountMethod.GRID:
        members = generating_set(model, k).members
        return len(grid_enumerate(members, n))
    return len(_class_members(model, k, n))


def sequence(model: Model, k: int, n_max: int,
             method: CountMethod = CountMethod.BFS, *,
             limit: int | None = None) -> list[int]:
    """Counts for n = 1 .. n_max.

    >>> sequence(Model.RD, 1, 4)
    [1, 2, 4, 7]
    """
    return [count_ball(model, k, n, method, limit=limit)
            for n in range(1, n_max + 1)]
