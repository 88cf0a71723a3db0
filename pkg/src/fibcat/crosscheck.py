"""Count a catalog class by every method available for it and compare."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from fibcat import genfunc, matrix, perm_core
from fibcat.errors import InvalidInput
from fibcat.patterns import CatalogEntry
from fibcat.perm_core import AvoidanceClass
from fibcat.succession import make_rule, level_counts, verify_rule

METHODS = ("eco", "brute", "rule", "matrix", "gf")


@lru_cache(maxsize=None)
def _brute(cls: AvoidanceClass, n_max: int, cap: int | None) -> tuple[int, ...]:
    return tuple(perm_core.brute_force_counts(cls, n_max, cap=cap))


def methods_for(e: CatalogEntry | None) -> tuple[str, ...]:
    if e is None or e.rule_id is None:
        return ("eco", "brute")
    return METHODS


def count_by(
    method: str,
    cls: AvoidanceClass,
    n_max: int,
    e: CatalogEntry | None = None,
    factorial_cap: int | None = None,
    node_cap: int | None = None,
) -> list[int]:
    """Level counts 0..n_max of ``cls`` by one method.

    ``rule``, ``matrix`` and ``gf`` need the catalog entry the class came
    from, since they rely on the rule and closed form claimed for it.
    """
    k = cls.k
    if method == "eco":
        return perm_core.eco_counts(cls, n_max, node_cap)
    if method == "brute":
        return list(_brute(cls, n_max, factorial_cap))
    if method not in METHODS:
        raise InvalidInput(f"unknown method {method!r}; use one of {', '.join(METHODS)}")
    if e is None or e.rule_id is None:
        raise InvalidInput(f"method {method} needs a catalog class with a known rule")
    if method == "rule":
        return level_counts(make_rule(e.rule_id, k), n_max)
    if method == "matrix":
        rule = make_rule(e.rule_id, k)
        trunc = None if rule.finite else matrix.TruncationSpec.for_level(n_max)
        return matrix.counts(matrix.from_rule(rule, trunc), n_max)
    return genfunc.gf_terms(e.gf_id, k, n_max)


@dataclass
class CrossReport:
    cls: str
    n_max: int
    table: dict[str, list[int]]
    label_mismatch: list[int] = field(default_factory=list)

    @property
    def counts_agree(self) -> bool:
        cols = list(self.table.values())
        return all(col == cols[0][: len(col)] for col in cols)

    @property
    def ok(self) -> bool:
        return self.counts_agree and not self.label_mismatch

    def rows(self):
        for n in range(self.n_max + 1):
            vals = [col[n] if n < len(col) else None for col in self.table.values()]
            present = [v for v in vals if v is not None]
            yield n, vals, len(set(present)) <= 1


def cross_verify(
    cls: AvoidanceClass,
    n_max: int,
    e: CatalogEntry | None = None,
    methods: tuple[str, ...] | None = None,
    brute_cap: int | None = None,
    node_cap: int | None = None,
) -> CrossReport:
    """Run every applicable method; brute force stops at its factorial cap."""
    methods = methods or methods_for(e)
    cap = perm_core.factorial_cap() if brute_cap is None else brute_cap
    table = {}
    for m in methods:
        depth = min(n_max, cap) if m == "brute" else n_max
        table[m] = count_by(m, cls, depth, e, cap, node_cap)
    mism = []
    if "rule" in methods:
        report = verify_rule(make_rule(e.rule_id, cls.k), cls, n_max)
        mism = [lv.n for lv in report.levels if not lv.labels_equal]
    return CrossReport(str(cls), n_max, table, mism)
