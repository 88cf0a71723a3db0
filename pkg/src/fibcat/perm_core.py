"""Permutations, pattern containment and ECO generation of avoidance classes.

Permutations are plain tuples of ints in one-line notation, ``(1, 3, 2)`` for
132. The empty tuple is the empty permutation. Sites are 1-indexed: site ``i``
is the gap just before ``perm[i - 1]`` and site ``n + 1`` is the trailing gap.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from fibcat.errors import CapExceeded, InvalidInput

Permutation = tuple[int, ...]

DEFAULT_FACTORIAL_CAP = 9
DEFAULT_NODE_CAP = 5_000_000


def factorial_cap() -> int:
    return int(os.environ.get("FIBCAT_FACTORIAL_CAP", DEFAULT_FACTORIAL_CAP))


def node_cap() -> int:
    return int(os.environ.get("FIBCAT_NODE_CAP", DEFAULT_NODE_CAP))


def is_permutation(values: Sequence[int]) -> bool:
    return sorted(values) == list(range(1, len(values) + 1))


def as_perm(values: str | Iterable[int]) -> Permutation:
    """Build a permutation from one-line digits ("2143") or an int sequence."""
    if isinstance(values, str):
        text = values.strip()
        if text in ("", "e", "eps"):
            return ()
        if not text.isdigit() or "0" in text:
            raise InvalidInput(f"not a one-line permutation: {values!r}")
        perm = tuple(int(c) for c in text)
    else:
        perm = tuple(int(v) for v in values)
    if not is_permutation(perm):
        raise InvalidInput(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def show(perm: Sequence[int]) -> str:
    if not perm:
        return "e"
    sep = "" if len(perm) < 10 else " "
    return sep.join(str(v) for v in perm)


def standardize(values: Sequence[int]) -> Permutation:
    """Order-isomorphic permutation of a sequence of distinct values."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(ranks[v] for v in values)


def reverse_complement(perm: Sequence[int]) -> Permutation:
    n = len(perm)
    return tuple(n + 1 - v for v in reversed(perm))


# -- containment -----------------------------------------------------------


@dataclass(frozen=True)
class _Shape:
    """Per-pattern tables for the left-to-right matcher.

    ``lo[i]`` (``hi[i]``) is the earlier pattern position holding the largest
    value below (smallest value above) ``pat[i]``, or -1.
    """

    pat: Permutation
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    top: int  # position of the maximum


@lru_cache(maxsize=None)
def _shape(pat: Permutation) -> _Shape:
    lo, hi = [], []
    for i, v in enumerate(pat):
        below = [(pat[j], j) for j in range(i) if pat[j] < v]
        above = [(pat[j], j) for j in range(i) if pat[j] > v]
        lo.append(max(below)[1] if below else -1)
        hi.append(min(above)[1] if above else -1)
    top = pat.index(len(pat)) if pat else -1
    return _Shape(pat, tuple(lo), tuple(hi), top)


def _occurs(seq: Sequence[int], shape: _Shape, fixed_i: int = -1, fixed_j: int = -1) -> bool:
    # Pattern position fixed_i, if given, must be matched at seq index fixed_j.
    n, k = len(seq), len(shape.pat)
    if k > n:
        return False
    lo, hi = shape.lo, shape.hi
    chosen = [0] * k

    def extend(i: int, start: int) -> bool:
        if i == k:
            return True
        if i == fixed_i:
            candidates: Iterable[int] = (fixed_j,) if fixed_j >= start else ()
        else:
            stop = n - (k - i) + 1
            if i < fixed_i:
                stop = min(stop, fixed_j - (fixed_i - i) + 1)
            candidates = range(start, stop)
        a, b = lo[i], hi[i]
        for j in candidates:
            v = seq[j]
            if a >= 0 and v < chosen[a]:
                continue
            if b >= 0 and v > chosen[b]:
                continue
            chosen[i] = v
            if extend(i + 1, j + 1):
                return True
        return False

    return extend(0, 0)


def contains(perm: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff some subsequence of ``perm`` is order-isomorphic to ``pat``."""
    return _occurs(perm, _shape(tuple(pat)))


# -- avoidance classes -----------------------------------------------------


@dataclass(frozen=True)
class AvoidanceClass:
    basis: tuple[Permutation, ...]
    name: str = ""
    k: int | None = None
    _shapes: tuple[_Shape, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        basis = tuple(as_perm(p) for p in self.basis)
        if not basis:
            raise InvalidInput("an avoidance class needs a non-empty basis")
        if any(len(p) == 0 for p in basis):
            raise InvalidInput("basis patterns must have length >= 1")
        if len(set(basis)) != len(basis):
            raise InvalidInput(f"duplicate pattern in basis {basis}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_shapes", tuple(_shape(p) for p in basis))
        if not self.name:
            object.__setattr__(self, "name", "S(" + ",".join(show(p) for p in basis) + ")")

    @classmethod
    def of(cls, *patterns: str | Iterable[int], name: str = "", k: int | None = None) -> AvoidanceClass:
        return cls(tuple(as_perm(p) for p in patterns), name=name, k=k)

    def __str__(self):
        return self.name


def avoids_all(perm: Sequence[int], cls: AvoidanceClass) -> bool:
    return not any(_occurs(perm, s) for s in cls._shapes)


def insert_max(perm: Sequence[int], site: int) -> Permutation:
    n = len(perm)
    if not 1 <= site <= n + 1:
        raise InvalidInput(f"site {site} out of range 1..{n + 1}")
    return tuple(perm[: site - 1]) + (n + 1,) + tuple(perm[site - 1 :])


def _active_sites(perm: Permutation, cls: AvoidanceClass) -> list[int]:
    # perm already avoids the basis, so a new occurrence must use n+1, which
    # can only play the part of each pattern's maximum.
    sites = []
    for site in range(1, len(perm) + 2):
        child = perm[: site - 1] + (len(perm) + 1,) + perm[site - 1 :]
        if not any(_occurs(child, s, s.top, site - 1) for s in cls._shapes):
            sites.append(site)
    return sites


def active_sites(perm: Sequence[int], cls: AvoidanceClass) -> list[int]:
    """Sites where inserting the new maximum keeps ``perm`` inside ``cls``."""
    perm = tuple(perm)
    if not avoids_all(perm, cls):
        raise InvalidInput(f"{show(perm)} is not in {cls}")
    return _active_sites(perm, cls)


def eco_children(perm: Permutation, cls: AvoidanceClass) -> list[Permutation]:
    return [insert_max(perm, s) for s in _active_sites(perm, cls)]


def eco_enumerate(cls: AvoidanceClass, n_max: int, cap: int | None = None) -> list[list[Permutation]]:
    """All class members of length 0..n_max, level by level.

    Raises CapExceeded once the stored levels would exceed ``cap`` nodes.
    """
    if n_max < 0:
        raise InvalidInput("n_max must be >= 0")
    cap = node_cap() if cap is None else cap
    levels: list[list[Permutation]] = [[()]]
    stored = 1
    for _ in range(n_max):
        nxt = []
        for perm in levels[-1]:
            for child in eco_children(perm, cls):
                nxt.append(child)
                stored += 1
                if stored > cap:
                    raise CapExceeded(f"ECO enumeration of {cls} exceeds node cap {cap}")
        levels.append(nxt)
    return levels


def eco_profile(cls: AvoidanceClass, n_max: int, cap: int | None = None) -> list[Counter]:
    """Per level, the multiset of active-site counts, streamed depth-first.

    Level sizes are ``sum(profile[n].values())``. Nothing but the current
    path is kept in memory.
    """
    if n_max < 0:
        raise InvalidInput("n_max must be >= 0")
    cap = node_cap() if cap is None else cap
    profile = [Counter() for _ in range(n_max + 1)]
    visited = 0
    stack: list[Permutation] = [()]
    while stack:
        perm = stack.pop()
        visited += 1
        if visited > cap:
            raise CapExceeded(f"ECO enumeration of {cls} exceeds node cap {cap}")
        sites = _active_sites(perm, cls)
        profile[len(perm)][len(sites)] += 1
        if len(perm) < n_max:
            stack.extend(insert_max(perm, s) for s in sites)
    return profile


def eco_counts(cls: AvoidanceClass, n_max: int, cap: int | None = None) -> list[int]:
    return [sum(c.values()) for c in eco_profile(cls, n_max, cap)]


# -- brute-force oracle ----------------------------------------------------


def _check_factorial_cap(n_max: int, cap: int | None) -> None:
    cap = factorial_cap() if cap is None else cap
    if n_max > cap:
        raise CapExceeded(f"brute force limited to n <= {cap} (asked for {n_max})")


def brute_force_members(cls: AvoidanceClass, n: int, prune: bool = True, cap: int | None = None) -> Iterator[Permutation]:
    """Members of S_n(basis), in lexicographic order, without using ECO.

    Permutations are grown left to right. With ``prune`` a prefix is dropped
    as soon as it holds an occurrence ending at its last entry; without it
    every permutation of length n is generated and tested whole.
    """
    if n < 0:
        raise InvalidInput("n must be >= 0")
    _check_factorial_cap(n, cap)
    shapes = cls._shapes
    prefix: list[int] = []
    used = [False] * (n + 1)

    def grow() -> Iterator[Permutation]:
        if len(prefix) == n:
            if prune or not any(_occurs(prefix, s) for s in shapes):
                yield tuple(prefix)
            return
        last = len(prefix)
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not prune or not any(_occurs(prefix, s, len(s.pat) - 1, last) for s in shapes):
                used[v] = True
                yield from grow()
                used[v] = False
            prefix.pop()

    return grow()


def brute_force_counts(cls: AvoidanceClass, n_max: int, prune: bool = True, cap: int | None = None) -> list[int]:
    _check_factorial_cap(n_max, cap)
    return [sum(1 for _ in brute_force_members(cls, n, prune, cap)) for n in range(n_max + 1)]
