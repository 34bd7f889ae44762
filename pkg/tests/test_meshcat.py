"""Mesh categories: graded bases, composition, closed forms, Serre data."""

import itertools

import pytest

from qshape import MeshCategory, QQ, ZZ, Zmod, build_double_an, build_repetitive_an
from qshape.errors import EndpointMismatch, UnsupportedFlavor
from qshape.meshcat import BasisElement


def double_cat(n, ring=ZZ):
    return MeshCategory(build_double_an(n), ring)


def rep_cat(n, window=None, ring=ZZ):
    if window is None:
        window = (-2 * n, 2 * n)
    return MeshCategory(build_repetitive_an(n, window), ring)


class TestHomBasis:
    def test_a5_pair_2_3(self):
        basis = double_cat(5).hom_basis(2, 3)
        assert [b.degree for b in basis] == [1, 3]

    def test_identity_always_present(self):
        for n in (2, 3, 4):
            C = double_cat(n)
            for q in C.vertices:
                assert C.hom_basis(q, q)[0].degree == 0

    def test_repetitive_rank_at_most_one(self):
        C = rep_cat(3)
        assert [b.degree for b in C.hom_basis((1, 0), (3, 0))] == [2]
        assert C.hom_basis((1, 0), (1, -1)) == ()

    def test_dimension_formula_and_oracle(self):
        for n in range(2, 7):
            C = double_cat(n)
            for p in C.vertices:
                for q in C.vertices:
                    d = min(p, q, n + 1 - p, n + 1 - q)
                    assert C.d(p, q) == d
                    assert C.oracle_hom_rank(p, q) == d

    def test_graded_dim_examples(self):
        assert double_cat(5).graded_dim(2, 2, 2) == 1
        assert double_cat(3).graded_dim(1, 1, 2) == 0
        assert double_cat(3).graded_dim(1, 3, 2) == 1

    def test_odd_distance_even_degree_vanishes(self):
        C = double_cat(4)
        for p, q in itertools.product(C.vertices, repeat=2):
            if (p - q) % 2:
                for l in range(0, 8, 2):
                    assert C.graded_dim(p, q, l) == 0

    def test_oracle_agrees_per_degree(self):
        for n in (2, 3, 4):
            C = double_cat(n)
            for p, q in itertools.product(C.vertices, repeat=2):
                table = C.hom_basis_oracle(p, q)
                for l, rank in table.items():
                    assert rank == C.graded_dim(p, q, l), (n, p, q, l)

    def test_repetitive_oracle_agrees(self):
        C = rep_cat(3, (-4, 4))
        probes = [(1, 0), (2, 0), (3, 0), (1, -1), (2, 1), (3, -1)]
        for p, q in itertools.product(probes, repeat=2):
            table = C.hom_basis_oracle(p, q, 6)
            for l, rank in table.items():
                assert rank == C.graded_dim(p, q, l), (p, q, l)

    def test_degree_symmetry(self):
        # Q^l(p,q) nonzero iff Q^(n-1-l)(q, Sigma p) nonzero
        for n in (2, 3, 4, 5, 6):
            C = double_cat(n)
            for p, q in itertools.product(C.vertices, repeat=2):
                for l in range(n):
                    lhs = C.graded_dim(p, q, l) != 0
                    rhs = C.graded_dim(q, C.serre_object(p), n - 1 - l) != 0
                    assert lhs == rhs


class TestComposition:
    def test_identity_neutral(self):
        C = double_cat(4)
        for p, q in itertools.product(C.vertices, repeat=2):
            idp = BasisElement(p, p, 0)
            for f in C.hom_basis(p, q):
                assert C.compose_basis(f, idp) == (1, f)
                assert C.compose_basis(BasisElement(q, q, 0), f) == (1, f)

    def test_mesh_relation_kills_boundary_loop(self):
        C = double_cat(3)
        a1 = BasisElement(1, 2, 1)
        a1s = BasisElement(2, 1, 1)
        assert C.compose_basis(a1s, a1) is None  # degree-2 piece of Q(1,1) is 0

    def test_signed_composition_of_arrows(self):
        C = double_cat(3)
        c1, e1 = C.arrow_elt(C.quiver.arrow("a1"))
        c2, e2 = C.arrow_elt(C.quiver.arrow("a2"))
        coeff, elt = C.compose_basis(e2, e1)
        total = C.ring.mul(coeff, C.ring.mul(c1, c2))
        assert total == -1 and elt == BasisElement(1, 3, 2)

    def test_endpoint_mismatch(self):
        C = double_cat(3)
        with pytest.raises(EndpointMismatch):
            C.compose_basis(BasisElement(1, 2, 1), BasisElement(1, 2, 1))

    def test_associativity_exhaustive(self):
        for n in (2, 3, 4, 5):
            C = double_cat(n)
            verts = C.vertices

            def value(res):  # normalize (coeff, elt) | None
                return None if res is None else res

            for p, q, r, s in itertools.product(verts, repeat=4):
                for f in C.hom_basis(p, q):
                    for g in C.hom_basis(q, r):
                        for h in C.hom_basis(r, s):
                            gf = C.compose_basis(g, f)
                            hg = C.compose_basis(h, g)
                            left = None if gf is None else C.compose_basis(h, gf[1])
                            right = None if hg is None else C.compose_basis(hg[1], f)
                            assert value(left) == value(right)

    def test_compose_vectors(self):
        C = double_cat(5)
        f = [C.ring.one, C.ring.zero]   # e^1 in Q(2,3)
        g = [C.ring.one, C.ring.one]    # e^1 + e^3 in Q(3,4)... degrees [1,3]
        out = C.compose(g, f, 2, 3, 4)
        # e^1*e^1 -> e^2, e^3*e^1 -> e^4; basis of Q(2,4) has degrees [2,4]
        assert out == [1, 1]


class TestRadical:
    def test_power_zero_is_everything(self):
        C = double_cat(3)
        for p, q in itertools.product(C.vertices, repeat=2):
            assert C.radical_basis(p, q, 0) == C.hom_basis(p, q)

    def test_degree_two_part_of_end_2(self):
        C = double_cat(3)
        assert [b.degree for b in C.radical_basis(2, 2, 1)] == [2]

    def test_power_n_vanishes(self):
        for n in (2, 3, 4, 5, 6):
            C = double_cat(n)
            for p, q in itertools.product(C.vertices, repeat=2):
                assert C.radical_basis(p, q, n) == ()

    def test_nilpotency_index(self):
        assert double_cat(2).nilpotency_index() == 2
        assert double_cat(5).nilpotency_index() == 5
        assert double_cat(5).graded_dim(1, 5, 4) == 1  # witness for r^4 != 0
        assert rep_cat(2).nilpotency_index() == 2

    def test_radical_products_raise_degree(self):
        C = double_cat(4)
        for a, b in itertools.product((1, 2), repeat=2):
            for p, q, r in itertools.product(C.vertices, repeat=3):
                for f in C.radical_basis(p, q, a):
                    for g in C.radical_basis(q, r, b):
                        res = C.compose_basis(g, f)
                        if res is not None:
                            assert res[1].degree >= a + b

    def test_strong_retraction_property(self):
        for C in (double_cat(4), rep_cat(2, (-3, 3))):
            for q in C.vertices:
                basis = C.hom_basis(q, q)
                radical = C.radical_basis(q, q, 1)
                assert len(basis) == 1 + len(radical)  # k*id + r_q
                for f in radical:
                    for g in radical:
                        res = C.compose_basis(g, f)
                        assert res is None or res[1].degree >= 1
            for p in C.vertices:
                for q in C.vertices:
                    if p == q:
                        continue
                    for f in C.hom_basis(p, q):
                        for g in C.hom_basis(q, p):
                            res = C.compose_basis(g, f)
                            assert res is None or res[1].degree >= 1


class TestClosedForms:
    def test_matches_oracle_everywhere(self):
        for n in range(2, 7):
            C = double_cat(n)
            for p in range(1, n + 1):
                for q in range(1, n):
                    a = C.quiver.arrow(f"a{q}")
                    s = C.quiver.arrow(f"a{q}*")
                    assert C.arrow_mult_matrix(p, q, False) == C.arrow_left_mult(a, p)
                    assert C.arrow_mult_matrix(p, q, True) == C.arrow_left_mult(s, p)

    def test_shapes_and_examples(self):
        C3 = double_cat(3)
        assert C3.arrow_mult_matrix(1, 1, False).to_lists() == [[-1]]
        # low range with p > q: a zero row on top of an identity
        C5 = double_cat(5)
        T = C5.arrow_mult_matrix(3, 2, False)
        assert (T.rows, T.cols) == (3, 2)
        assert T.to_lists() == [[0, 0], [1, 0], [0, 1]]
        # high range with p <= q: identity next to a zero column
        assert C3.arrow_mult_matrix(2, 2, False).to_lists() == [[1, 0]]

    def test_repetitive_flavor_rejected(self):
        with pytest.raises(UnsupportedFlavor):
            rep_cat(2).arrow_mult_matrix(1, 1, False)


class TestSerre:
    def test_object_map(self):
        assert double_cat(5).serre_object(2) == 4
        assert rep_cat(3).serre_object((1, 0)) == (3, -1 + 1)  # (n+1-q, i+1-q)

    def test_arrow_map(self):
        C = MeshCategory(build_double_an(4), ZZ)
        coeff, image = C.serre_arrow(C.quiver.arrow("a1"))
        assert (coeff, image) == (-1, "a3*")

    def test_full_report_small(self):
        for n in (2, 3, 4, 5):
            for ring in (ZZ, Zmod(5)):
                rep = MeshCategory(build_double_an(n), ring).serre_report()
                assert rep["ok"], (n, ring, rep)

    def test_pairing_example(self):
        report = double_cat(3).serre_report()
        assert report["pairings_invertible"]
        assert report["checked_pairings"] > 0

    def test_repetitive_report(self):
        rep = rep_cat(2, (-3, 3)).serre_report()
        assert rep["ok"], rep
