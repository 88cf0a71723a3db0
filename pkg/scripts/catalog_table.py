"""Write the class catalog with counts from ECO generation as TSV."""

import argparse
import sys

from fibcat.patterns import catalog_rows, get_class
from fibcat.perm_core import eco_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    args.out.write("id\tk\tbasis\tsequence\tterms\n")
    for cid, k, basis, seq in catalog_rows(args.k_max):
        terms = ",".join(map(str, eco_counts(get_class(cid, k), args.n)))
        args.out.write(f"{cid}\t{'' if k is None else k}\t{basis}\t{seq}\t{terms}\n")


if __name__ == "__main__":
    main()
