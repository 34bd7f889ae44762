"""A homology isomorphism that is not a weak equivalence.

Degree-one information is not enough once the pseudo-radical has
nilpotency index three.  Over the repetitive A_3 quiver there is a
morphism phi: X -> Y whose mesh homology is an isomorphism at every
vertex, yet whose kernel carries homology one step beyond the support,
so phi cannot be inverted in the derived category.  The degree-two
homology comparison detects this.

Run:  python3 demos/03_counterexample_weak_equivalence.py
"""

from qshape import QQ
from qshape.fixtures import COUNTER_LABELS, counter_morphism
from qshape.homology import is_weak_equivalence, mesh_homology, \
    mesh_homology_map
from qshape.repmod import kernel_of_morphism, validate_representation

X, Y, phi = counter_morphism(QQ)
print("X has the field at vertices", [COUNTER_LABELS[k] for k in (1, 2, 3)])
print("Y is the stalk at", COUNTER_LABELS[1])
print("both validate:",
      validate_representation(X).ok and validate_representation(Y).ok)

v3, v4 = COUNTER_LABELS[3], COUNTER_LABELS[4]
print("\nmesh homology at", v3, "of X:", mesh_homology(X, v3).describe(),
      " of Y:", mesh_homology(Y, v3).describe())
nonzero = [q for q in X.category.quiver.interior_vertices()
           if not mesh_homology(X, q).is_zero or not mesh_homology(Y, q).is_zero]
print("vertices with nonzero mesh homology:", nonzero)
print("induced map on mesh homology at", v3, "is an isomorphism:",
      mesh_homology_map(phi, v3).is_isomorphism())

K, _ = kernel_of_morphism(phi)
print("\nkernel of phi lives at", sorted(K.support))
print("mesh homology of the kernel at", v4, "=", mesh_homology(K, v4).describe())

result = is_weak_equivalence(phi)
print("\nweak equivalence:", "YES" if result["is_weak_equivalence"] else "NO")
failing = sorted(k for k, iso in result["iso_table"].items() if not iso)
print("degree-two comparison fails at:", failing)
