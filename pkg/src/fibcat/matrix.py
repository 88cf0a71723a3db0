"""Production matrices and counting by iterated row-vector products.

Entry ``(i, j)`` counts how often label ``j`` appears among the sons of
label ``i``. Unbounded rules give infinite matrices; those are cut to a
window of labels that is large enough for every level up to a stated
``guarantee_level``.
"""

from __future__ import annotations

from dataclasses import dataclass

from fibcat.errors import InvalidInput, TruncationError
from fibcat.succession import Label, SuccessionRule

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TruncationSpec:
    size: int
    guarantee_level: int

    def __post_init__(self):
        if self.guarantee_level < 0 or self.size < self.guarantee_level + 2:
            raise InvalidInput(
                f"truncation size {self.size} too small for level {self.guarantee_level}"
                f" (need >= {self.guarantee_level + 2})"
            )

    @classmethod
    def for_level(cls, level: int, slack: int = 2) -> TruncationSpec:
        return cls(level + slack, level)


@dataclass(frozen=True)
class ProductionMatrix:
    entries: Matrix
    labels: tuple[Label, ...]
    axiom_index: int = 0
    guarantee_level: int | None = None  # None: not truncated, exact at every level

    def __post_init__(self):
        m = len(self.entries)
        if m < 1 or any(len(row) != m for row in self.entries):
            raise InvalidInput("a production matrix must be square and non-empty")
        if len(self.labels) != m or not 0 <= self.axiom_index < m:
            raise InvalidInput("labels/axiom do not fit the matrix")

    @property
    def size(self) -> int:
        return len(self.entries)

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]

    def __str__(self):
        return format_matrix(self)


def _window(rule: SuccessionRule, trunc: TruncationSpec | None) -> tuple[list[Label], int | None]:
    closed = rule.closure()
    if closed is not None and (trunc is None or len(closed) <= trunc.size):
        return closed, None
    if trunc is None:
        raise TruncationError(f"rule {rule.name} is unbounded; a TruncationSpec is required", None)
    levels = rule.levels(trunc.guarantee_level)
    window = set().union(*levels)
    if len(window) > trunc.size:
        raise TruncationError(
            f"rule {rule.name}: level {trunc.guarantee_level} needs at least {len(window)} labels,"
            f" truncation size is {trunc.size}",
            len(window),
        )
    # pad with the labels that appear next, level by level
    level = levels[-1]
    while len(window) < trunc.size and level:
        level = {s for lab in level for s in rule.sons(lab)}
        for lab in sorted(level - window, key=Label.key)[: trunc.size - len(window)]:
            window.add(lab)
    return sorted(window, key=Label.key), trunc.guarantee_level


def from_rule(rule: SuccessionRule, trunc: TruncationSpec | None = None) -> ProductionMatrix:
    """Production matrix of ``rule``; sons outside the label window are dropped."""
    labels, guarantee = _window(rule, trunc)
    index = {lab: i for i, lab in enumerate(labels)}
    rows = []
    for lab in labels:
        row = [0] * len(labels)
        for s in rule.sons(lab):
            if s in index:
                row[index[s]] += 1
        rows.append(tuple(row))
    return ProductionMatrix(tuple(rows), tuple(labels), index[rule.axiom], guarantee)


def counts(pm: ProductionMatrix, n_max: int) -> list[int]:
    if n_max < 0:
        raise InvalidInput("n_max must be >= 0")
    if pm.guarantee_level is not None and n_max > pm.guarantee_level:
        raise InvalidInput(f"matrix is exact only up to level {pm.guarantee_level}, asked for {n_max}")
    m = pm.size
    row = [0] * m
    row[pm.axiom_index] = 1
    out = [1]
    for _ in range(n_max):
        row = [sum(row[i] * pm.entries[i][j] for i in range(m) if row[i]) for j in range(m)]
        out.append(sum(row))
    return out


def _grow(sub: Matrix) -> Matrix:
    # [[0, u^T], [0, sub + e u^T]] with u^T = (1, 0, ..., 0)
    m = len(sub)
    top = (0, 1) + (0,) * (m - 1)
    body = tuple((0, row[0] + 1) + tuple(row[1:]) for row in sub)
    return (top,) + body


def _value_labels(m: int) -> tuple[Label, ...]:
    return tuple(Label(v) for v in range(1, m + 1))


def pk_block_recursion(k: int) -> ProductionMatrix:
    """P_k grown from P_1 = [1] by the block step."""
    if not isinstance(k, int) or k < 2:
        raise InvalidInput(f"P_k needs k >= 2, got {k}")
    mat: Matrix = ((1,),)
    for _ in range(k - 1):
        mat = _grow(mat)
    return ProductionMatrix(mat, _value_labels(k))


def m3_matrix(size: int) -> Matrix:
    """Window of M_3: row 1 is (0,1,0,...); row h >= 2 has h-1 in column 2 and 1 in column h+1."""
    rows = []
    for h in range(1, size + 1):
        row = [0] * size
        if size >= 2:
            row[1] = 1 if h == 1 else h - 1
        if h >= 2 and h < size:
            row[h] += 1
        rows.append(tuple(row))
    return tuple(rows)


def mk_block_recursion(k: int, trunc: TruncationSpec) -> ProductionMatrix:
    """Window of M_k grown from the displayed M_3 by the block step."""
    if not isinstance(k, int) or k < 3:
        raise InvalidInput(f"M_k needs k >= 3, got {k}")
    base = trunc.size - (k - 3)
    if base < 2:
        raise TruncationError(f"M_{k} window of size {trunc.size} is too small", k - 1)
    mat = m3_matrix(base)
    for _ in range(k - 3):
        mat = _grow(mat)
    return ProductionMatrix(mat, _value_labels(trunc.size), 0, trunc.guarantee_level)


def format_matrix(pm: ProductionMatrix) -> str:
    heads = [str(lab) for lab in pm.labels]
    cells = [[str(v) for v in row] for row in pm.entries]
    width = max(len(c) for c in heads + [c for row in cells for c in row])
    lead = max(len(h) for h in heads)
    lines = [" " * lead + " " + " ".join(h.rjust(width) for h in heads)]
    for h, row in zip(heads, cells):
        lines.append(h.rjust(lead) + " " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)
