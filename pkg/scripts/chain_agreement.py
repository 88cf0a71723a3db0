"""How long each convergent chain agrees with the Catalan numbers.

For every chain (P, M, D) and k, prints the first n where the series
departs from C_n, next to the corresponding tk / fbark agreement with
their own limits (2^(n-1) and the even-index Fibonacci numbers).
"""

import argparse

from fibcat.genfunc import catalan_terms, convergent_chain, fbar_gf, fbark_gf, series, tk_gf


def first_difference(a, b):
    return next((n for n, (x, y) in enumerate(zip(a, b)) if x != y), None)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=10)
    ap.add_argument("--depth", type=int, default=30)
    args = ap.parse_args()

    cat = catalan_terms(args.depth)
    pow2 = [1] + [2 ** (n - 1) for n in range(1, args.depth + 1)]
    fbar = series(fbar_gf(), args.depth)
    print("k\tP\tM\tD\ttk\tfbark")
    for k in range(2, args.k_max + 1):
        cells = []
        for kind, least in (("P", 1), ("M", 3), ("D", 2)):
            cells.append(first_difference(series(convergent_chain(kind, k), args.depth), cat) if k >= least else "-")
        cells.append(first_difference(series(tk_gf(k), args.depth), pow2))
        cells.append(first_difference(series(fbark_gf(k), args.depth), fbar) if k >= 3 else "-")
        print("\t".join(map(str, [k, *cells])))


if __name__ == "__main__":
    main()
