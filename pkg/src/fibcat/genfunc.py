"""Exact rational generating functions and their power-series coefficients.

Polynomials are tuples of ints indexed by degree, with trailing zeros
stripped; ``()`` is the zero polynomial. Fractions are never reduced, so
equality is tested by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import comb
from typing import Iterable

from fibcat.errors import BadParameter, InvalidInput

Poly = tuple[int, ...]


def poly(coeffs: Iterable[int]) -> Poly:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    return poly(x + y for x, y in zip_longest(a, b, fillvalue=0))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly(x - y for x, y in zip_longest(a, b, fillvalue=0))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def shift(a: Poly, by: int = 1) -> Poly:
    """x^by * a"""
    return poly((0,) * by + a) if a else ()


def monomial(deg: int, c: int = 1) -> Poly:
    return poly((0,) * deg + (c,))


def format_poly(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for d, c in enumerate(a):
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            var = "x" if d == 1 else f"x^{d}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class RationalGF:
    num: Poly
    den: Poly

    def __post_init__(self):
        object.__setattr__(self, "num", poly(self.num))
        object.__setattr__(self, "den", poly(self.den))
        if not self.den or self.den[0] == 0:
            raise InvalidInput("denominator must have a nonzero constant term")

    def __str__(self):
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return gf_equal(self, other)

    def __hash__(self):
        return hash(tuple(series(self, 8)))


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    return poly_mul(a.num, b.den) == poly_mul(b.num, a.den)


def series(gf: RationalGF, n_max: int) -> list[int]:
    """Coefficients a_0..a_n_max of the expansion at 0.

    Raises InvalidInput if a coefficient is not an integer.
    """
    num, den = gf.num, gf.den
    d0 = den[0]
    out: list[int] = []
    for n in range(n_max + 1):
        acc = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        q, r = divmod(acc, d0)
        if r:
            raise InvalidInput(f"coefficient {n} of {gf} is not an integer")
        out.append(q)
    return out


# -- closed forms ----------------------------------------------------------


def fib_gf() -> RationalGF:
    return RationalGF((1,), (1, -1, -1))


def pow2_gf() -> RationalGF:
    return RationalGF((1, -1), (1, -2))


def pell_gf() -> RationalGF:
    return RationalGF((1, -1, -1), (1, -2, -1))


def fbar_gf() -> RationalGF:
    """Even-index Fibonacci numbers 1, 1, 2, 5, 13, 34, ..."""
    return RationalGF((1, -2), (1, -3, 1))


def tk_gf(k: int) -> RationalGF:
    """(1 - x)/(1 - 2x + x^(k+1)), the k-generalized Fibonacci numbers."""
    if not isinstance(k, int) or k < 1:
        raise BadParameter(f"tk needs k >= 1, got {k}")
    return RationalGF((1, -1), poly_add((1, -2), monomial(k + 1)))


def fbark_gf(k: int) -> RationalGF:
    """(1 - 2x + x^k)/(1 - 3x + x^2 + x^k)"""
    if not isinstance(k, int) or k < 3:
        raise BadParameter(f"fbark needs k >= 3, got {k}")
    return RationalGF(poly_add((1, -2), monomial(k)), poly_add((1, -3, 1), monomial(k)))


def step(gf: RationalGF) -> RationalGF:
    """f -> 1/(1 - x f); for f = p/q this is q/(q - x p)."""
    return RationalGF(gf.den, poly_sub(gf.den, shift(gf.num)))


# Chain bases: P starts at P_1 = [1], M at the displayed M_3, D (the direct
# classes) at k = 2 where the class is the Fibonacci one.
_CHAINS = {
    "P": (1, lambda: RationalGF((1,), (1, -1))),
    "M": (3, fbar_gf),
    "D": (2, fib_gf),
}


def convergent_chain(kind: str, k: int) -> RationalGF:
    kind = kind.upper()
    if kind not in _CHAINS:
        raise BadParameter(f"unknown chain {kind!r}; use P, M or D")
    base_k, base = _CHAINS[kind]
    if not isinstance(k, int) or k < base_k:
        raise BadParameter(f"chain {kind} needs k >= {base_k}, got {k}")
    gf = base()
    for _ in range(k - base_k):
        gf = step(gf)
    return gf


def catalan_terms(n_max: int) -> list[int]:
    """C_0..C_n_max by the convolution C_n = sum C_(n-1-i) C_i."""
    if n_max < 0:
        raise InvalidInput("n_max must be >= 0")
    c = [1]
    for n in range(1, n_max + 1):
        c.append(sum(c[n - 1 - i] * c[i] for i in range(n)))
    return c


def catalan_closed(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


GFS = {
    "fib": (fib_gf, None),
    "pow2": (pow2_gf, None),
    "pell": (pell_gf, None),
    "fbar": (fbar_gf, None),
    "tk": (tk_gf, 1),
    "fbark": (fbark_gf, 3),
    "convergentP": (lambda k: convergent_chain("P", k), 1),
    "convergentM": (lambda k: convergent_chain("M", k), 3),
    "convergentD": (lambda k: convergent_chain("D", k), 2),
}


def make_gf(gf_id: str, k: int | None = None) -> RationalGF:
    """Rational GF by id. Catalan has no rational form; see ``gf_terms``."""
    name, _, pinned = gf_id.partition(":")
    if pinned:
        k = int(pinned)
    if name not in GFS:
        raise BadParameter(f"unknown generating function {name!r}; known: {', '.join(GFS)}, catalan")
    build, k_min = GFS[name]
    if k_min is None:
        return build()
    if k is None:
        raise BadParameter(f"{name} needs k >= {k_min}")
    return build(k)


def gf_terms(gf_id: str, k: int | None, n_max: int) -> list[int]:
    if gf_id == "catalan":
        return catalan_terms(n_max)
    return series(make_gf(gf_id, k), n_max)
