"""Finite strict partial orders on arc indices and induced-subposet tests.

The arcs-to-poset map orders arc i below arc j exactly when arc i closes
before arc j opens, so the image is an interval order.  The three named
four-element posets screened for are (2+2), (3+1), and N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations

from .matching import Matching


class UnknownForbiddenPoset(ValueError):
    """The named forbidden poset is not one of 2+2, 3+1, N."""


@dataclass(frozen=True)
class Poset:
    """Strictly-less relation as an n-by-n boolean matrix."""

    size: int
    less: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n, rel = self.size, self.less
        if len(rel) != n or any(len(row) != n for row in rel):
            raise ValueError("relation matrix must be size x size")
        for i in range(n):
            if rel[i][i]:
                raise ValueError("relation must be irreflexive")
            for j in range(n):
                if rel[i][j] and rel[j][i]:
                    raise ValueError("relation must be antisymmetric")
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValueError("relation must be transitive")


def poset_from_relations(size: int, relations: list[tuple[int, int]]) -> Poset:
    """Build a poset from 0-based (smaller, larger) pairs; must already be transitive."""
    rel = [[False] * size for _ in range(size)]
    for i, j in relations:
        rel[i][j] = True
    return Poset(size, tuple(tuple(row) for row in rel))


def omega(m: Matching) -> Poset:
    """One element per arc; arc i lies below arc j iff closer(i) < opener(j)."""
    arcs = m.arcs
    n = m.n
    rel = tuple(
        tuple(arcs[i].closer < arcs[j].opener for j in range(n)) for i in range(n)
    )
    return Poset(n, rel)


_FORBIDDEN_RELATIONS = {
    "2+2": [(0, 1), (2, 3)],
    "3+1": [(0, 1), (0, 2), (1, 2)],
    "N": [(0, 2), (0, 3), (1, 3)],
}


@cache
def _forbidden_orbit(name: str) -> frozenset[frozenset[tuple[int, int]]]:
    # All relabelings of the named 4-element poset, as relation-pair sets.
    if name not in _FORBIDDEN_RELATIONS:
        raise UnknownForbiddenPoset(f"no forbidden poset named {name!r}")
    base = _FORBIDDEN_RELATIONS[name]
    orbit = set()
    for perm in permutations(range(4)):
        orbit.add(frozenset((perm[i], perm[j]) for i, j in base))
    return frozenset(orbit)


def poset_contains(p: Poset, name: str) -> bool:
    """True iff some 4-element subset induces exactly the named poset."""
    orbit = _forbidden_orbit(name)
    for subset in combinations(range(p.size), 4):
        rels = frozenset(
            (a, b)
            for a in range(4)
            for b in range(4)
            if p.less[subset[a]][subset[b]]
        )
        if rels in orbit:
            return True
    return False


def cover_relations(p: Poset) -> list[tuple[int, int]]:
    """Pairs (i, j) with i < j and no element strictly between."""
    covers = []
    for i in range(p.size):
        for j in range(p.size):
            if p.less[i][j] and not any(
                p.less[i][k] and p.less[k][j] for k in range(p.size)
            ):
                covers.append((i, j))
    return covers


def canonical_form(p: Poset) -> tuple[tuple[int, int], ...]:
    """Isomorphism invariant by brute-force relabeling; small posets only."""
    best = None
    for perm in permutations(range(p.size)):
        rels = tuple(
            sorted(
                (perm[i], perm[j])
                for i in range(p.size)
                for j in range(p.size)
                if p.less[i][j]
            )
        )
        if best is None or rels < best:
            best = rels
    return best


def poset_to_json(p: Poset) -> str:
    """JSON with 1-based cover relations plus the full 0/1 relation matrix."""
    obj = {
        "size": p.size,
        "covers": [[i + 1, j + 1] for i, j in cover_relations(p)],
        "less": [[1 if v else 0 for v in row] for row in p.less],
    }
    return json.dumps(obj)
