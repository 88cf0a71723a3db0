"""Succession rules and the label dynamics of their generating trees.

A label ``(h)`` stands for a node with ``h`` sons; some rules attach a
subscript, ``(2_j)``, to tell apart nodes with the same number of sons but
different productions. The root (the empty permutation) carries the axiom
``(1)`` and every rule here produces ``(1) ~> (2)`` (or ``(2_0)``) from it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from fibcat.errors import BadParameter, RuleError
from fibcat.perm_core import AvoidanceClass, eco_profile


class Label(NamedTuple):
    value: int
    sub: int | None = None

    def __str__(self):
        return f"({self.value})" if self.sub is None else f"({self.value}_{self.sub})"

    def key(self):
        return (self.value, -1 if self.sub is None else self.sub)


def L(value: int, sub: int | None = None) -> Label:
    return Label(value, sub)


@dataclass(frozen=True)
class SuccessionRule:
    name: str
    produce: Callable[[Label], tuple[Label, ...]] = field(repr=False)
    axiom: Label = Label(1)
    schema: tuple[str, ...] = ()  # bracket-notation lines for unbounded rules

    def sons(self, label: Label) -> tuple[Label, ...]:
        try:
            out = self.produce(label)
        except (KeyError, ValueError, IndexError):
            out = None
        if out is None:
            raise RuleError(f"rule {self.name} has no production for label {label}")
        return out

    def levels(self, n: int) -> list[set[Label]]:
        """Distinct labels present on each level 0..n."""
        seen = [{self.axiom}]
        for _ in range(n):
            seen.append({s for lab in seen[-1] for s in self.sons(lab)})
        return seen

    def label_bound(self, n: int) -> set[Label]:
        """Every label that can occur within the first n levels."""
        return set().union(*self.levels(n))

    def closure(self, limit: int = 256) -> list[Label] | None:
        """All reachable labels, sorted, or None if there are more than ``limit``."""
        found = {self.axiom}
        todo = [self.axiom]
        while todo:
            for s in self.sons(todo.pop()):
                if s not in found:
                    found.add(s)
                    if len(found) > limit:
                        return None
                    todo.append(s)
        return sorted(found, key=Label.key)

    @property
    def finite(self) -> bool:
        return self.closure() is not None

    def display(self) -> str:
        lines = [str(self.axiom)]
        labels = self.closure()
        if labels is None:
            lines.append(f"{self.axiom} ~> " + "".join(map(str, self.sons(self.axiom))))
            lines.extend(self.schema)
        else:
            for lab in labels:
                lines.append(f"{lab} ~> " + "".join(map(str, self.sons(lab))))
        return "\n".join(lines)


def level_labels(rule: SuccessionRule, n_max: int, check_values: bool = True) -> list[Counter]:
    """Label multiset on each level 0..n_max.

    With ``check_values`` every production must have exactly ``label.value``
    sons, which is what ties a label to a count of active sites.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    levels = [Counter({rule.axiom: 1})]
    for _ in range(n_max):
        nxt: Counter = Counter()
        for lab, mult in levels[-1].items():
            sons = rule.sons(lab)
            if check_values and len(sons) != lab.value:
                raise RuleError(f"rule {rule.name}: label {lab} has {len(sons)} sons")
            for s in sons:
                nxt[s] += mult
        levels.append(nxt)
    return levels


def level_counts(rule: SuccessionRule, n_max: int) -> list[int]:
    return [sum(c.values()) for c in level_labels(rule, n_max)]


# -- the rules -------------------------------------------------------------


def _run(a: int, b: int) -> tuple[Label, ...]:
    """(a)(a+1)...(b)"""
    return tuple(Label(v) for v in range(a, b + 1))


def _rep(lab: Label, times: int) -> tuple[Label, ...]:
    return (lab,) * times


def _table(name: str, table: dict[Label, tuple[Label, ...]]) -> SuccessionRule:
    return SuccessionRule(name, table.__getitem__)


def _need(k: int, least: int, name: str) -> None:
    if not isinstance(k, int) or k < least:
        raise BadParameter(f"rule {name} needs k >= {least}, got {k}")


def _plain(lab: Label, top: int | None = None) -> int:
    if lab.sub is not None or lab.value < 1 or (top is not None and lab.value > top):
        raise ValueError(lab)
    return lab.value


def rscat() -> SuccessionRule:
    def produce(lab):
        h = _plain(lab)
        return _run(2, h + 1)

    return SuccessionRule("rscat", produce, schema=("(h) ~> (2)(3)...(h)(h+1)",))


def rsfibo() -> SuccessionRule:
    return _table("rsfibo", {L(1): (L(2),), L(2): (L(1), L(2))})


def rs2fin() -> SuccessionRule:
    return _table("rs2fin", {L(1): (L(2),), L(2): (L(2), L(2))})


def pow2_rule() -> SuccessionRule:
    def produce(lab):
        h = _plain(lab)
        return _rep(L(1), h - 1) + (L(h + 1),)

    return SuccessionRule("pow2", produce, schema=("(h) ~> (1)^(h-1)(h+1)",))


def gfib_rule(k: int) -> SuccessionRule:
    _need(k, 2, "gfib")

    def produce(lab):
        if lab == L(1):
            return (L(2, 0),)
        if lab.value != 2 or lab.sub is None or not 0 <= lab.sub <= k - 2:
            raise ValueError(lab)
        if lab.sub == k - 2:
            return (L(2, 0), L(1))
        return (L(2, 0), L(2, lab.sub + 1))

    return SuccessionRule(f"gfib({k})", produce, axiom=L(1))


def cat1_rule(k: int) -> SuccessionRule:
    _need(k, 2, "cat1")

    def produce(lab):
        j = _plain(lab, k)
        return _run(2, k) + (L(k),) if j == k else _run(2, j + 1)

    return SuccessionRule(f"cat1({k})", produce)


def gfib2_rule(k: int) -> SuccessionRule:
    _need(k, 2, "gfib2")

    def produce(lab):
        h = _plain(lab, k)
        return _rep(L(1), k - 1) + (L(k),) if h == k else _rep(L(1), h - 1) + (L(h + 1),)

    return SuccessionRule(f"gfib2({k})", produce)


def omega_rule(k: int) -> SuccessionRule:
    _need(k, 3, "omega")

    def produce(lab):
        h = _plain(lab)
        if h < k:
            return _run(2, h + 1)
        return _run(2, k - 2) + _rep(L(k - 1), h - k + 2) + (L(h + 1),)

    head = {3: "", 4: "(2)"}.get(k, f"(2)...({k - 2})")
    return SuccessionRule(
        f"omega({k})",
        produce,
        schema=(
            f"(h) ~> (2)...(h)(h+1)  for h < {k}",
            f"(h) ~> {head}({k - 1})^(h-{k - 2})(h+1)  for h >= {k}",
        ),
    )


def direct_rule(k: int) -> SuccessionRule:
    _need(k, 2, "direct")

    def produce(lab):
        h = _plain(lab, k)
        return _run(2, k - 1) + (L(k - 1), L(k)) if h == k else _run(2, h + 1)

    return SuccessionRule(f"direct({k})", produce)


def evf1_rule(k: int) -> SuccessionRule:
    """Labels (1), (2) and (3_j) for j = 0..k-3.

    The production of (3_{k-3}) overrides the generic (3_j) line, which
    therefore applies to j <= k-4 only.
    """
    _need(k, 3, "evf1")

    def produce(lab):
        if lab == L(1):
            return (L(2),)
        if lab == L(2):
            return (L(2), L(3, 0))
        if lab.value != 3 or lab.sub is None or not 0 <= lab.sub <= k - 3:
            raise ValueError(lab)
        if lab.sub == k - 3:
            return (L(2), L(2), L(3, 0))
        return (L(2), L(3, 0), L(3, lab.sub + 1))

    return SuccessionRule(f"evf1({k})", produce)


def evf2_rule(k: int) -> SuccessionRule:
    _need(k, 3, "evf2")

    def produce(lab):
        h = _plain(lab, k)
        return _rep(L(2), k - 1) + (L(k),) if h == k else _rep(L(2), h - 1) + (L(h + 1),)

    return SuccessionRule(f"evf2({k})", produce)


RULES: dict[str, Callable[..., SuccessionRule]] = {
    "rscat": rscat,
    "rsfibo": rsfibo,
    "rs2fin": rs2fin,
    "pow2": pow2_rule,
    "gfib": gfib_rule,
    "cat1": cat1_rule,
    "gfib2": gfib2_rule,
    "omega": omega_rule,
    "direct": direct_rule,
    "evf1": evf1_rule,
    "evf2": evf2_rule,
}

INDEXED_RULES = {"gfib", "cat1", "gfib2", "omega", "direct", "evf1", "evf2"}


def make_rule(rule_id: str, k: int | None = None) -> SuccessionRule:
    """Look up a rule by id; ``"direct:3"`` pins k inside the id."""
    name, _, pinned = rule_id.partition(":")
    if pinned:
        k = int(pinned)
    if name not in RULES:
        raise BadParameter(f"unknown rule {name!r}; known: {', '.join(RULES)}")
    if name in INDEXED_RULES:
        if k is None:
            raise BadParameter(f"rule {name} needs k")
        return RULES[name](k)
    return RULES[name]()


# -- checking a rule against a class ---------------------------------------


@dataclass
class LevelCheck:
    n: int
    rule_count: int
    eco_count: int
    labels_rule: Counter
    labels_eco: Counter

    @property
    def counts_equal(self) -> bool:
        return self.rule_count == self.eco_count

    @property
    def labels_equal(self) -> bool:
        return self.labels_rule == self.labels_eco


@dataclass
class RuleReport:
    rule: str
    cls: str
    levels: list[LevelCheck]

    @property
    def ok(self) -> bool:
        return all(lv.counts_equal and lv.labels_equal for lv in self.levels)

    def first_mismatch(self) -> int | None:
        for lv in self.levels:
            if not (lv.counts_equal and lv.labels_equal):
                return lv.n
        return None


def verify_rule(rule: SuccessionRule, cls: AvoidanceClass, n_max: int) -> RuleReport:
    """Compare the rule's levels with the class's generating tree.

    Per level both the node counts and the multiset of son counts are
    compared (label values on the rule side, active-site counts on the
    permutation side). Mismatches are reported, not raised.
    """
    eco = eco_profile(cls, n_max)
    labels = level_labels(rule, n_max, check_values=False)
    rows = []
    for n in range(n_max + 1):
        by_value: Counter = Counter()
        for lab, m in labels[n].items():
            by_value[lab.value] += m
        rows.append(LevelCheck(n, sum(labels[n].values()), sum(eco[n].values()), by_value, eco[n]))
    return RuleReport(rule.name, str(cls), rows)
