"""Cross-check every catalog class by every available counting method."""

import argparse
import time

from fibcat.crosscheck import cross_verify
from fibcat.patterns import catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9, help="largest length")
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--brute-cap", type=int, default=9)
    args = ap.parse_args()

    bad = 0
    for e in catalog():
        for k in e.ks(args.k_max):
            t0 = time.perf_counter()
            rep = cross_verify(e.build(k), args.n, e, brute_cap=args.brute_cap)
            secs = time.perf_counter() - t0
            tag = e.id if k is None else f"{e.id}({k})"
            terms = ",".join(map(str, rep.table["eco"]))
            status = "ok" if rep.ok else "MISMATCH"
            print(f"{tag:12} {'/'.join(rep.table):26} {status:8} {secs:6.2f}s  {terms}")
            bad += not rep.ok
    print(f"\n{bad} mismatching instance(s)")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
