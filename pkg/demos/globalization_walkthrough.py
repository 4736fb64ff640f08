"""Walk a partial bimodule structure through the globalization pipeline.

Builds the two-parameter family of partial actions of the four-dimensional
Hopf algebra on its base field, constructs the standard globalization inside
the convolution algebra Hom(H⊗H, A), and then compares it against the free
candidate on H⊗A⊗H: the comparison map is surjective, its kernel is exactly
the maximal degenerate invariant subspace, and quotienting by that subspace
recovers the standard (minimal) globalization up to isomorphism.
"""

from phopf import (QQ, comparison_map, free_candidate_bimodule,
                   maximal_degenerate_subbimodule, minimalize,
                   standard_globalize_bimodule, sweedler_k_bimodule)


def main():
    b = sweedler_k_bimodule(QQ, 2, 3)
    print("partial bimodule: %s / %s" % (b.left.name, b.right.name))
    print("coefficient algebra dim %d, Hopf algebra dim %d" % (b.alg.dim, b.hopf.dim))
    print()

    # ----- the standard globalization --------------------------------------
    g = standard_globalize_bimodule(b)
    print("standard globalization: dim %d inside ambient dim %d"
          % (g.dim, g.ambient.algebra.dim))
    for line in g.certificate.lines():
        print("  " + line)
    print("  maximal degenerate subspace: dim %d (minimal)"
          % maximal_degenerate_subbimodule(g).dim)
    print()

    # ----- the free candidate and the comparison map -----------------------
    cand = free_candidate_bimodule(b)
    print("free candidate on H⊗A⊗H: dim %d" % cand.algebra.dim)
    pm, surjective, injective = comparison_map(cand, g)
    mstar = maximal_degenerate_subbimodule(cand)
    print("  comparison onto the standard globalization: surjective=%s injective=%s"
          % (surjective, injective))
    print("  maximal degenerate subspace: dim %d" % mstar.dim)

    mini = minimalize(cand, b)
    _, s2, i2 = comparison_map(mini, g)
    print("  after minimalization: dim %d, comparison bijective: %s"
          % (mini.algebra.dim, s2 and i2))


if __name__ == "__main__":
    main()
