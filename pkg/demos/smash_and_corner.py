"""Partial smash products and their unital corners.

Crosses the partial bimodule family k(r, s) with a partial bicomodule to get
the twisted product (a♮u)(b♮v) = (a↼v⁺¹)(u⁻¹⇀b) ♮ u⁻⁰v⁺⁰, prints the square
of the distinguished pair 1♮1 across a parameter sweep, and extracts the
unital corner e·S·e at an idempotent found by the hypothesis routes.
"""

from fractions import Fraction

from phopf import (QQ, find_idempotent, regular_bicomodule, smash_product,
                   sweedler_h4, sweedler_k_bicomodule, sweedler_k_bimodule,
                   unital_corner)

HALF = Fraction(1, 2)


def main():
    # ----- the one-dimensional family: square of 1♮1 ------------------------
    print("square coefficient of 1♮1 in k(r,s) ♮ k(t,u):")
    for (r, s, t, u) in [(2, 3, 5, 7), (1, 1, 5, -HALF), (1, 7, HALF, 0),
                         (1, 1, -HALF, HALF), (0, 0, 0, 0)]:
        sm = smash_product(sweedler_k_bimodule(QQ, r, s),
                           sweedler_k_bicomodule(QQ, t, u))
        coeff = sm.alg.mul.entries.get((0, 0, 0), QQ.zero)
        is_idem, route = find_idempotent(sm, [QQ.one], [QQ.one]) \
            if coeff in (QQ.zero, QQ.one) else (None, "-")
        print("  (r,s,t,u)=(%s,%s,%s,%s): (1♮1)² = %s · 1♮1   idempotent=%s route=%s"
              % (r, s, t, u, QQ.show(coeff), is_idem, route))
    print("  (the coefficient is always (1/2 + us)(1/2 - tr))")
    print()

    # ----- the four-dimensional instance and its corner ---------------------
    h4 = sweedler_h4(QQ)
    s4 = smash_product(sweedler_k_bimodule(QQ, 2, 3), regular_bicomodule(h4))
    print("k(2,3) ♮ regular bicomodule: dim %d, unit present: %s"
          % (s4.alg.dim, s4.alg.unit is not None))
    one_h = [QQ.one, QQ.zero, QQ.zero, QQ.zero]
    is_idem, route = find_idempotent(s4, [QQ.one], one_h)
    print("1♮1 idempotent: %s via route %s" % (is_idem, route))
    corner = unital_corner(s4, s4.pair_vec([QQ.one], one_h))
    print("unital corner at 1♮1: dim %d with basis %s"
          % (corner.dim, corner.alg.basis))


if __name__ == "__main__":
    main()
