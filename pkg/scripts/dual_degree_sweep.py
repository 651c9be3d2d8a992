"""Compare dual Veronese codes with the predicted projective Reed-Muller code.

For each q, s and kd <= (q-1)(s-1), the dual of the Veronese code
C_{rho_k(P^{s-1})}(d) is compared with C_X((q-1)(s-1) - kd), augmented by
the all-ones word when kd = 0 mod (q-1): same length, same dimension, same
full GHW spectrum.
"""

from __future__ import annotations

import argparse
import time

from rmghw.evalcode import all_ones_augmented, build_code, dual_code, evaluation_matrix
from rmghw.formulas import veronese_dual_degree
from rmghw.gf import field_of_order
from rmghw.linalg import row_basis
from rmghw.oracle import full_spectrum
from rmghw.varieties import projective_space, veronese_embed


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--s", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()

    for q in args.q:
        F = field_of_order(q)
        for s in args.s:
            X = projective_space(F, s)
            top = (q - 1) * (s - 1)
            for k in range(1, top + 1):
                V, _ = veronese_embed(X, k)
                for d in range(1, top // k + 1):
                    t0 = time.time()
                    dual = dual_code(build_code(V, d)).basis
                    deg, augment = veronese_dual_degree(q, s, k, d)
                    cand = row_basis(evaluation_matrix(X, deg))
                    if augment:
                        cand = all_ones_augmented(cand)
                    a, b = full_spectrum(dual), full_spectrum(cand)
                    tag = "same" if (dual.shape == cand.shape and a == b) else "DIFFERENT"
                    print(f"q={q} s={s} k={k} d={d}: [{dual.ncols},{dual.nrows}] vs [{cand.ncols},{cand.nrows}] "
                          f"deg={deg}{'+1' if augment else ''} {tag} {a} ({time.time() - t0:.2f}s)")


if __name__ == "__main__":
    main()
