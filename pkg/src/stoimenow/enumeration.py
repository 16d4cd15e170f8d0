"""Exhaustive generation of Stoimenow matchings with online pruning.

Sites 1..2n are filled left to right; each site either opens a new arc or
closes one of the open arcs.  Both forbidden configurations are rejected
at the earliest possible site:

* closing the arc opened at o is illegal while the arc opened at o-1 is
  still open (the pair would nest with adjacent openers), and
* when the previous site was a closer, the next closer must belong to an
  arc with a strictly larger opener (else the pair nests with adjacent
  closers).

Emission order is deterministic: at each site, closers are tried in
increasing order of their arc's opener, then the opener branch.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .matching import Arc, Matching
from .patterns import Pattern, PatternSet, avoids_all, contains

MAX_ARCS = 14


@dataclass(frozen=True)
class GenState:
    """A viable generation prefix: sites below `pos` are already decided."""

    n: int
    pos: int
    open_openers: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    last_closed_opener: int = 0  # 0 unless site pos-1 is a closer


def _root(n: int) -> GenState:
    return GenState(n=n, pos=1, open_openers=(), pairs=())


def _children(s: GenState) -> list[GenState]:
    kids = []
    opens = s.open_openers
    for idx, o in enumerate(opens):
        if o < s.last_closed_opener:
            continue
        if idx and opens[idx - 1] == o - 1:
            continue
        kids.append(
            GenState(s.n, s.pos + 1, opens[:idx] + opens[idx + 1 :], s.pairs + ((o, s.pos),), o)
        )
    if len(s.pairs) + len(opens) < s.n and len(opens) + 1 <= 2 * s.n - s.pos:
        kids.append(GenState(s.n, s.pos + 1, opens + (s.pos,), s.pairs))
    return kids


def completions(state: GenState) -> Iterator[Matching]:
    """All Stoimenow matchings extending `state`, in the canonical order."""
    if state.pos > 2 * state.n:
        yield Matching(tuple(Arc(o, c) for o, c in sorted(state.pairs)))
        return
    for child in _children(state):
        yield from completions(child)


def _count_completions(state: GenState) -> int:
    if state.pos > 2 * state.n:
        return 1
    return sum(_count_completions(child) for child in _children(state))


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ARCS:
        raise ValueError(f"n={n} exceeds the supported maximum of {MAX_ARCS}")


def enumerate_stoimenow(n: int) -> Iterator[Matching]:
    """Every Stoimenow matching with n arcs, exactly once, in deterministic order."""
    _check_size(n)
    return completions(_root(n))


def count_stoimenow(n: int) -> int:
    """|M_n| without materializing matchings."""
    _check_size(n)
    return _count_completions(_root(n))


def partition_prefixes(n: int, depth: int) -> list[GenState]:
    """Viable prefixes of length `depth` whose completions partition M_n."""
    _check_size(n)
    if not 0 <= depth <= 2 * n:
        raise ValueError("depth must be between 0 and 2n")
    states = [_root(n)]
    for _ in range(depth):
        states = [child for s in states for child in _children(s)]
    return states


def fishburn_oracle(n: int) -> int:
    """The n-th Fishburn number, counted via ascent sequences only.

    An ascent sequence starts with 0 and each later entry lies between 0
    and one plus the number of ascents among the earlier entries.  The
    count depends only on (length so far, last entry, ascents so far).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def ways(length: int, last: int, ascents: int) -> int:
        if length == n:
            return 1
        return sum(
            ways(length + 1, v, ascents + (1 if v > last else 0)) for v in range(ascents + 2)
        )

    result = ways(1, 0, 0)
    ways.cache_clear()
    return result


def count_avoiders(n: int, s: PatternSet) -> int:
    """|M_n(S)|: Stoimenow matchings of size n avoiding every pattern in s."""
    _check_size(n)
    if not s.members:
        return count_stoimenow(n)
    return sum(1 for m in enumerate_stoimenow(n) if avoids_all(m, s))


@dataclass(frozen=True)
class CountTable:
    """Avoidance counts a_1..a_{n_max} for each requested pattern set."""

    rows: tuple[tuple[PatternSet, tuple[int, ...]], ...]
    n_max: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["patterns", "n", "count"])
        for patterns, counts in self.rows:
            for i, count in enumerate(counts, start=1):
                writer.writerow([patterns.name, i, count])
        return buf.getvalue()

    def to_json_obj(self) -> list[dict]:
        return [
            {"patterns": patterns.name, "n_from": 1, "counts": list(counts)}
            for patterns, counts in self.rows
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _tally(states: Iterable[GenState], distinct: Sequence[Pattern], row_masks: Sequence[int]) -> list[int]:
    totals = [0] * len(row_masks)
    for state in states:
        for m in completions(state):
            hit = 0
            for bit, p in enumerate(distinct):
                if contains(m, p):
                    hit |= 1 << bit
            for r, mask in enumerate(row_masks):
                if hit & mask == 0:
                    totals[r] += 1
    return totals


def count_table(rows: Sequence[PatternSet], n_max: int, workers: int = 1) -> CountTable:
    """One shared enumeration pass per n; every matching is tested against
    each distinct pattern once and the verdicts are reused across rows."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    _check_size(n_max)
    if workers < 1:
        raise ValueError("workers must be at least 1")
    row_list = list(rows)
    distinct: list[Pattern] = []
    seen: dict[Pattern, int] = {}
    for ps in row_list:
        for p in sorted(ps.members, key=str):
            if p not in seen:
                seen[p] = len(distinct)
                distinct.append(p)
    row_masks = [sum(1 << seen[p] for p in ps.members) for ps in row_list]
    counts = [[0] * n_max for _ in row_list]
    for n in range(1, n_max + 1):
        if workers == 1:
            totals = _tally([_root(n)], distinct, row_masks)
        else:
            parts = partition_prefixes(n, min(4, 2 * n))
            with ThreadPoolExecutor(max_workers=workers) as pool:
                partials = pool.map(lambda s: _tally([s], distinct, row_masks), parts)
                totals = [sum(col) for col in zip(*partials)] if parts else [0] * len(row_masks)
        for r, total in enumerate(totals):
            counts[r][n - 1] = total
    return CountTable(
        tuple((ps, tuple(c)) for ps, c in zip(row_list, counts)),
        n_max,
    )
