"""Pattern families indexed by k and the named classes built from them.

Every family is nested: ``F(k)`` occurs as a pattern inside ``F(k + 1)``, so
the forbidden pattern gets harder to hit as k grows and the class counts
climb towards the larger class with that pattern removed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

from fibcat.errors import BadParameter, UnknownClass
from fibcat.perm_core import AvoidanceClass, Permutation, as_perm, show


def _need(k: int, least: int, name: str) -> None:
    if not isinstance(k, int) or k < least:
        raise BadParameter(f"family {name} needs k >= {least}, got {k}")


def family_r(k: int) -> Permutation:
    """k (k-1) ... 2 1 (k+1)"""
    _need(k, 2, "r")
    return tuple(range(k, 0, -1)) + (k + 1,)


def family_q(k: int) -> Permutation:
    """1 (k+1) k ... 2"""
    _need(k, 2, "q")
    return (1,) + tuple(range(k + 1, 1, -1))


def family_p(k: int) -> Permutation:
    """(k-1) ... 2 1 (k+1) k"""
    _need(k, 2, "p")
    return tuple(range(k - 1, 0, -1)) + (k + 1, k)


def family_s(k: int) -> Permutation:
    """2 1 (k+1) k ... 4 3"""
    _need(k, 3, "s")
    return (2, 1) + tuple(range(k + 1, 2, -1))


def family_w(k: int) -> Permutation:
    """The pattern generalizing 3214 alongside 2143.

    Taken equal to ``family_r``. The printed word k(k-1)...32(k+1)1 reads 3241
    at k=3 and does not give the Pell class there; r_k reproduces 3214 and its
    counts match (1-2x+x^k)/(1-3x+x^2+x^k) for every k checked.
    """
    _need(k, 3, "w")
    return family_r(k)


FAMILIES: dict[str, Callable[[int], Permutation]] = {
    "r": family_r,
    "q": family_q,
    "p": family_p,
    "s": family_s,
    "w": family_w,
}

FAMILY_MIN_K = {"r": 2, "q": 2, "p": 2, "s": 3, "w": 3}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    builder: Callable[[int | None], tuple[Permutation, ...]]
    sequence_name: str
    gf_id: str | None
    rule_id: str | None
    k_min: int | None = None  # None: not k-indexed

    @property
    def indexed(self) -> bool:
        return self.k_min is not None

    def ks(self, k_max: int = 5) -> list[int | None]:
        return list(range(self.k_min, k_max + 1)) if self.indexed else [None]

    def build(self, k: int | None = None) -> AvoidanceClass:
        if self.indexed:
            if k is None:
                raise BadParameter(f"class {self.id} needs --k (k >= {self.k_min})")
            if not isinstance(k, int) or k < self.k_min:
                raise BadParameter(f"class {self.id} needs k >= {self.k_min}, got {k}")
            name = f"{self.id}({k})"
        else:
            if k is not None:
                raise BadParameter(f"class {self.id} takes no k")
            name = self.id
        return AvoidanceClass(self.builder(k), name=name, k=k)


def _fixed(*patterns: str):
    basis = tuple(as_perm(p) for p in patterns)
    return lambda k: basis


def _with(*patterns: str, families: str):
    head = tuple(as_perm(p) for p in patterns)
    return lambda k: head + tuple(FAMILIES[f](k) for f in families)


_ENTRIES = [
    CatalogEntry("FIB", _fixed("123", "132", "213"), "Fibonacci", "fib", "rsfibo"),
    CatalogEntry(
        "FIB312", _fixed("123", "213", "312"),
        "1,1,2,3,4,... (stated as Fibonacci; erratum)", None, None,
    ),
    CatalogEntry("GFIB", _with("123", "213", families="q"), "k-generalized Fibonacci", "tk", "gfib", 2),
    CatalogEntry("GFIB2", _with("123", "132", families="r"), "k-generalized Fibonacci", "tk", "gfib2", 2),
    CatalogEntry("POW2", _fixed("123", "213"), "2^(n-1)", "pow2", "rs2fin"),
    CatalogEntry("POW2B", _fixed("123", "132"), "2^(n-1)", "pow2", "pow2"),
    CatalogEntry("CAT1", _with("123", families="r"), "P-chain convergents to Catalan", "convergentP", "cat1", 2),
    CatalogEntry("CAT2", _with("123", families="p"), "M-chain convergents to Catalan", "convergentM", "omega", 3),
    CatalogEntry("DIRECT", _with("123", families="pr"), "Pell-to-Catalan chain", "convergentD", "direct", 2),
    CatalogEntry("PELL", _fixed("123", "2143", "3214"), "Pell", "pell", "direct:3"),
    CatalogEntry("EVF1", _with("123", "3214", families="s"), "Fbar_k (Pell to even-index Fibonacci)", "fbark", "evf1", 3),
    CatalogEntry("EVF2", _with("123", "2143", families="w"), "Fbar_k (Pell to even-index Fibonacci)", "fbark", "evf2", 3),
    CatalogEntry("CATALAN", _fixed("123"), "Catalan", "catalan", "rscat"),
]

_BY_ID = {e.id: e for e in _ENTRIES}


def catalog() -> list[CatalogEntry]:
    return list(_ENTRIES)


def entry(class_id: str) -> CatalogEntry:
    try:
        return _BY_ID[class_id.upper()]
    except KeyError:
        raise UnknownClass(f"unknown class id {class_id!r}; known: {', '.join(_BY_ID)}") from None


def get_class(class_id: str, k: int | None = None) -> AvoidanceClass:
    return entry(class_id).build(k)


def catalog_rows(k_max: int = 5):
    """(id, k, basis, sequence name) for every entry and admissible k <= k_max."""
    for e in _ENTRIES:
        for k in e.ks(k_max):
            cls = e.build(k)
            yield e.id, k, ",".join(show(p) for p in cls.basis), e.sequence_name


def catalog_tsv(k_max: int = 5) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, delimiter="\t", lineterminator="\n")
    out.writerow(["id", "k", "basis", "sequence"])
    for cid, k, basis, seq in catalog_rows(k_max):
        out.writerow([cid, "" if k is None else k, basis, seq])
    return buf.getvalue()
