"""Time the Koszul–Tate oracle: matrix assembly vs. rank, per degree.

    python benchmarks/bench_oracle.py --half-genus 2 --circles 4 --degree 12
"""
import argparse
import time

from realmoduli.dga.algebra import differential_matrix, monomial_basis
from realmoduli.dga.linalg import matrix_rank
from realmoduli.field import FieldSpec
from realmoduli.gauge import build_koszul_tate
from realmoduli.topology import CircleType, SurfaceDecomposition


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--half-genus", type=int, default=2)
    ap.add_argument("--circles", type=int, default=4)
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--char", type=int, default=0)
    args = ap.parse_args()
    n = args.circles
    kinds = [CircleType.IDENTITY_ORIENTABLE] * n
    c = build_koszul_tate(SurfaceDecomposition(args.half_genus, n, n), kinds,
                          FieldSpec(args.char))
    print(f"{'deg':>4} {'rows':>7} {'cols':>7} {'build s':>9} {'rank s':>9} {'rank':>6}")
    for m in range(args.degree + 1):
        t0 = time.perf_counter()
        mat = differential_matrix(c, m)
        t1 = time.perf_counter()
        r = matrix_rank(mat, args.char)
        t2 = time.perf_counter()
        print(f"{m:>4} {mat.nrows:>7} {mat.ncols:>7} {t1 - t0:>9.3f} {t2 - t1:>9.3f} {r:>6}")
    print("basis size at top degree:", len(monomial_basis(c, args.degree)))


if __name__ == "__main__":
    main()
