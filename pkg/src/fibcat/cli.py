"""Command-line front end: ``fibcat {count,enumerate,series,verify,table,show-rule}``.

Exit codes: 0 success, 2 usage error, 3 unknown class, 4 k out of range,
5 resource cap exceeded, 6 verification mismatch, 7 arithmetic overflow.
Caps default from FIBCAT_FACTORIAL_CAP and FIBCAT_NODE_CAP.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from fibcat import crosscheck, genfunc, matrix, patterns, perm_core
from fibcat.errors import BadParameter, CapExceeded, FibcatError, InvalidInput, UnknownClass
from fibcat.perm_core import AvoidanceClass, as_perm, show
from fibcat.succession import make_rule

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNKNOWN_CLASS = 3
EXIT_BAD_K = 4
EXIT_CAP = 5
EXIT_MISMATCH = 6
EXIT_OVERFLOW = 7


@dataclass
class RunConfig:
    command: str
    class_id: str | None = None
    basis: str | None = None
    k: int | None = None
    n_max: int = 8
    output_format: str = "tsv"
    factorial_cap: int = perm_core.DEFAULT_FACTORIAL_CAP
    node_cap: int = perm_core.DEFAULT_NODE_CAP

    def __post_init__(self):
        if self.n_max < 0:
            raise InvalidInput("--n must be >= 0")
        if self.factorial_cap < 1 or self.node_cap < 1:
            raise InvalidInput("caps must be positive")


def parse_basis(text: str) -> tuple[perm_core.Permutation, ...]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if len(item) > 9 or not item.isdigit() or "0" in item:
            raise InvalidInput(f"basis pattern {item!r}: use digits 1-9, at most 9 of them")
        out.append(as_perm(item))
    if not out:
        raise InvalidInput("empty basis")
    return tuple(out)


def resolve(cfg: RunConfig) -> tuple[AvoidanceClass, patterns.CatalogEntry | None]:
    if cfg.class_id and cfg.basis:
        raise InvalidInput("give either --class or --basis, not both")
    if cfg.class_id:
        e = patterns.entry(cfg.class_id)
        return e.build(cfg.k), e
    if cfg.basis:
        return AvoidanceClass(parse_basis(cfg.basis)), None
    raise InvalidInput("one of --class or --basis is required")


class Table:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        delim = {"tsv": "\t", "csv": ",", "plain": " "}[fmt]
        self.writer = csv.writer(stream, delimiter=delim, lineterminator="\n")

    def row(self, *cells):
        self.writer.writerow(["" if c is None else c for c in cells])

    def note(self, text: str):
        self.stream.write(f"# {text}\n")


# -- commands --------------------------------------------------------------


def cmd_count(cfg: RunConfig, methods: list[str], out: Table) -> int:
    cls, e = resolve(cfg)
    methods = methods or ["eco"]
    if methods == ["all"]:
        methods = list(crosscheck.methods_for(e))
    cols = {m: crosscheck.count_by(m, cls, cfg.n_max, e, cfg.factorial_cap, cfg.node_cap) for m in methods}
    out.row("n", *methods)
    for n in range(cfg.n_max + 1):
        out.row(n, *(cols[m][n] for m in methods))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, out: Table) -> int:
    cls, _ = resolve(cfg)
    levels = perm_core.eco_enumerate(cls, cfg.n_max, cfg.node_cap)
    out.row("n", "permutation", "active_sites")
    for n, level in enumerate(levels):
        for perm in sorted(level):
            out.row(n, show(perm), len(perm_core.active_sites(perm, cls)))
    return EXIT_OK


def cmd_series(gf_id: str, k: int | None, terms: int, out: Table) -> int:
    if terms < 1:
        raise InvalidInput("--terms must be >= 1")
    if gf_id == "catalan":
        out.note("gf: Catalan (1 - sqrt(1 - 4x))/(2x), terms by convolution")
    else:
        out.note(f"gf: {genfunc.make_gf(gf_id, k)}")
    coeffs = genfunc.gf_terms(gf_id, k, terms - 1)
    out.row("n", "coefficient")
    for n, c in enumerate(coeffs):
        out.row(n, c)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out: Table) -> int:
    cls, e = resolve(cfg)
    rep = crosscheck.cross_verify(cls, cfg.n_max, e, brute_cap=cfg.factorial_cap, node_cap=cfg.node_cap)
    out.note(f"class: {cls} basis {','.join(show(p) for p in cls.basis)}")
    methods = list(rep.table)
    out.row("n", *methods, "agree")
    for n, vals, same in rep.rows():
        out.row(n, *("-" if v is None else v for v in vals), "yes" if same else "NO")
    if "rule" in methods:
        out.note("son-count distributions: " + ("equal" if not rep.label_mismatch else f"differ at n={rep.label_mismatch}"))
    out.note("result: " + ("all methods agree" if rep.ok else "MISMATCH"))
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_table(k_max: int, terms: int, out: Table) -> int:
    out.row("id", "k", "basis", "sequence", "terms")
    for cid, k, basis, seq in patterns.catalog_rows(k_max):
        cls = patterns.get_class(cid, k)
        counts = perm_core.eco_counts(cls, terms - 1)
        out.row(cid, k, basis, seq, ",".join(map(str, counts)))
    return EXIT_OK


def cmd_show_rule(rule_id: str, k: int | None, show_matrix: bool, size: int | None, stream) -> int:
    rule = make_rule(rule_id, k)
    stream.write(rule.display() + "\n")
    if show_matrix:
        trunc = None
        if not rule.finite:
            size = size or 8
            trunc = matrix.TruncationSpec(size, size - 2)
        pm = matrix.from_rule(rule, trunc)
        stream.write("\n" + matrix.format_matrix(pm) + "\n")
        if pm.guarantee_level is not None:
            stream.write(f"# truncated to {pm.size} labels, exact up to level {pm.guarantee_level}\n")
    return EXIT_OK


# -- argument parsing ------------------------------------------------------


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        return default


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fibcat", description="Pattern-avoiding classes between Fibonacci and Catalan.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_default=8):
        sp.add_argument("--class", dest="class_id", help="catalog class id (see `fibcat table`)")
        sp.add_argument("--basis", help='raw basis, e.g. "123,213,1432"')
        sp.add_argument("--k", type=int, help="family parameter")
        sp.add_argument("--n", type=int, default=n_default, help="largest length")
        sp.add_argument("--factorial-cap", type=int, default=_env_int("FIBCAT_FACTORIAL_CAP", perm_core.DEFAULT_FACTORIAL_CAP))
        sp.add_argument("--node-cap", type=int, default=_env_int("FIBCAT_NODE_CAP", perm_core.DEFAULT_NODE_CAP))

    def output(sp):
        sp.add_argument("--format", choices=["tsv", "csv", "plain"], default="tsv")
        sp.add_argument("--out", help="write to FILE instead of stdout")

    sp = sub.add_parser("count", help="level counts by one or more methods")
    common(sp)
    sp.add_argument("--method", action="append", choices=[*crosscheck.METHODS, "all"], help="repeatable; default eco")
    output(sp)

    sp = sub.add_parser("enumerate", help="list class members with their active-site counts")
    common(sp, n_default=4)
    output(sp)

    sp = sub.add_parser("series", help="coefficients of a generating function")
    sp.add_argument("--gf", required=True, choices=[*genfunc.GFS, "catalan"])
    sp.add_argument("--k", type=int)
    sp.add_argument("--terms", type=int, default=10)
    output(sp)

    sp = sub.add_parser("verify", help="cross-check every method for a class")
    common(sp)
    output(sp)

    sp = sub.add_parser("table", help="the class catalog with first terms")
    sp.add_argument("--k-max", type=int, default=5)
    sp.add_argument("--terms", type=int, default=8)
    output(sp)

    sp = sub.add_parser("show-rule", help="print a succession rule")
    sp.add_argument("--rule", required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--matrix", action="store_true", help="also print the production matrix")
    sp.add_argument("--size", type=int, help="matrix window for unbounded rules")
    return p


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "show-rule":
            return cmd_show_rule(args.rule, args.k, args.matrix, args.size, sys.stdout)
        with _sink(args.out) as stream:
            out = Table(args.format, stream)
            if args.command == "series":
                return cmd_series(args.gf, args.k, args.terms, out)
            if args.command == "table":
                return cmd_table(args.k_max, args.terms, out)
            cfg = RunConfig(
                args.command, args.class_id, args.basis, args.k, args.n, args.format,
                args.factorial_cap, args.node_cap,
            )
            if args.command == "count":
                return cmd_count(cfg, args.method or [], out)
            if args.command == "enumerate":
                return cmd_enumerate(cfg, out)
            return cmd_verify(cfg, out)
    except UnknownClass as exc:
        return _fail(exc, EXIT_UNKNOWN_CLASS)
    except BadParameter as exc:
        return _fail(exc, EXIT_BAD_K)
    except CapExceeded as exc:
        return _fail(exc, EXIT_CAP)
    except OverflowError as exc:
        return _fail(exc, EXIT_OVERFLOW)
    except (InvalidInput, FibcatError) as exc:
        return _fail(exc, EXIT_USAGE)


def _fail(exc: Exception, code: int) -> int:
    print(f"fibcat: error: {exc}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
