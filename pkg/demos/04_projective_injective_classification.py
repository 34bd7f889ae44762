"""Deciding projectivity and injectivity of representations.

A representation is projective exactly when all its mesh homology
vanishes and every corner quotient C_q is a projective module; dually
with the corner kernels K_q and injectivity.  Over Z/4, which is
self-injective, the corepresentable and its dual are both projective
and injective; over the integers no nonzero finitely generated module
is injective, so the dual loses injectivity while staying exact.

Run:  python3 demos/04_projective_injective_classification.py
"""

from qshape import MeshCategory, PresentedModule, ZZ, Zmod, build_double_an
from qshape.homology import classify_object, corner_functors, zero_test
from qshape.repmod import cofree_at, free_at, stalk_rep

for ring in (ZZ, Zmod(3), Zmod(4)):
    C = MeshCategory(build_double_an(3), ring)
    one = PresentedModule.free(ring, 1)
    F = free_at(C, 2, one)
    G = cofree_at(C, 2, one)
    S = stalk_rep(C, 2, one)
    print(f"ring {ring!r}:")
    for name, X in (("free at 2", F), ("cofree at 2", G), ("stalk at 2", S)):
        v = classify_object(X)
        print(f"   {name:12s} exact={v.is_exact!s:20s} "
              f"projective={v.is_projective} injective={v.is_injective}")
    corner = corner_functors(F, 2)
    print(f"   corners of the free object at 2: K = {corner.K.describe()}, "
          f"C = {corner.C.describe()}")
    zt = zero_test(S)
    print(f"   zero criterion on the stalk: direct={zt['is_zero']}, "
          f"kernel route={zt['kernel_route']}, cokernel route={zt['cokernel_route']}")
    print()

print("Over Z/4 the exactness verdict is reported as not_theorem_backed:")
print("the homological computation is still exact arithmetic, but the")
print("characterization of the exact class is only proved over")
print("hereditary base rings (Z, Q, and Z/p).")
