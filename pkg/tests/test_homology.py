"""Corner functors, mesh homology, resolutions, and the decision procedures."""

import random

import pytest

from qshape import Matrix, MeshCategory, PresentedModule, QQ, ZZ, Zmod, \
    build_double_an, build_repetitive_an
from qshape.errors import BoundaryVertex
from qshape.exactalg import kernel_basis, solve
from qshape.fixtures import COUNTER_LABELS, counter_morphism
from qshape.homology import (SIDE_CN, SIDE_CO, classify_object,
                             corner_functors, derived_homology,
                             derived_homology_map, is_weak_equivalence,
                             mesh_homology, mesh_homology_map,
                             radical_filtration, resolve_stalk, zero_test)
from qshape.repmod import (cofree_at, free_at, identity_morphism,
                           kernel_of_morphism, random_free_representation,
                           random_morphism, random_representation,
                           representable_rep, stalk_rep,
                           validate_representation, zero_morphism)


def double_cat(n, ring=ZZ):
    return MeshCategory(build_double_an(n), ring)


class TestCorners:
    def test_corner_of_free_is_identity_or_zero(self):
        C = double_cat(3)
        M = PresentedModule.from_invariant_factors(ZZ, [2, 0])
        for p in C.vertices:
            F = free_at(C, p, M)
            for q in C.vertices:
                corner = corner_functors(F, q)
                if q == p:
                    assert corner.C.normal_form() == M.normal_form()
                else:
                    assert corner.C.is_zero

    def test_corner_of_cofree_is_identity_or_zero(self):
        C = double_cat(3)
        M = PresentedModule.cyclic(ZZ, 6)
        for p in C.vertices:
            G = cofree_at(C, p, M)
            for q in C.vertices:
                corner = corner_functors(G, q)
                if q == p:
                    assert corner.K.normal_form() == M.normal_form()
                else:
                    assert corner.K.is_zero

    def test_stalk_corners(self):
        C = double_cat(2)
        M = PresentedModule.from_invariant_factors(ZZ, [4])
        S = stalk_rep(C, 2, M)
        corner = corner_functors(S, 2)
        assert corner.K.normal_form() == M.normal_form()
        assert corner.C.normal_form() == M.normal_form()

    def test_free_on_a2(self):
        C = double_cat(2)
        F1 = free_at(C, 1, PresentedModule.free(ZZ, 1))
        assert corner_functors(F1, 1).K.is_zero
        assert corner_functors(F1, 2).K.describe() == "Z"

    def test_filtration_chain(self):
        C = double_cat(3)
        X = free_at(C, 2, PresentedModule.free(ZZ, 1))
        for q in C.vertices:
            k0, _, c0 = radical_filtration(X, q, 0)
            assert k0.is_zero and c0.is_zero
            k1, _, _ = radical_filtration(X, q, 1)
            assert k1.normal_form() == corner_functors(X, q).K.normal_form()
            kN, _, _ = radical_filtration(X, q, C.nilpotency_index())
            assert kN.normal_form() == X.value(q).normal_form()

    def test_filtration_monotone(self):
        # ranks of the kernel chain K^0 <= K^1 <= ... are nondecreasing
        C = double_cat(3, Zmod(3))
        rng = random.Random(4)
        X = random_free_representation(C, rng)
        for q in C.vertices:
            prev = -1
            for power in range(C.nilpotency_index() + 1):
                k, _, _ = radical_filtration(X, q, power)
                rank = k.normal_form().free_rank
                assert rank >= prev
                prev = rank


class TestMeshHomology:
    def test_zero_representation(self):
        C = double_cat(3)
        Z = stalk_rep(C, 1, PresentedModule.free(ZZ, 0))
        for q in C.vertices:
            assert mesh_homology(Z, q).is_zero

    def test_normality_double(self):
        for n in (2, 3, 4, 5):
            C = double_cat(n)
            for p in C.vertices:
                R = representable_rep(C, p)
                for q in C.vertices:
                    assert mesh_homology(R, q).is_zero

    def test_normality_repetitive(self):
        for n in (2, 3, 4):
            C = MeshCategory(build_repetitive_an(n, (-2 * n, 2 * n)), ZZ)
            probes = [v for v in C.vertices if abs(v[1]) <= n // 2]
            for p in probes:
                R = representable_rep(C, p)
                for q in C.quiver.interior_vertices():
                    assert mesh_homology(R, q).is_zero, (n, p, q)

    def test_boundary_vertex_refused(self):
        C = MeshCategory(build_repetitive_an(2, (0, 2)), ZZ)
        X = stalk_rep(C, (1, 0), PresentedModule.free(ZZ, 1))
        with pytest.raises(BoundaryVertex):
            mesh_homology(X, (1, 2))


class TestResolutions:
    def test_heads_are_basis_indexed(self):
        C = double_cat(2)
        res = resolve_stalk(C, 1, SIDE_CO, 2)
        assert res.terms[0] == [1]
        assert res.terms[1] == [2]  # one radical basis element out of 1
        res_cn = resolve_stalk(C, 1, SIDE_CN, 2)
        assert res_cn.terms[1] == [2]

    def test_head_counts_match_radical_basis(self):
        for n in (3, 4):
            C = double_cat(n)
            for q in C.vertices:
                res = resolve_stalk(C, q, SIDE_CO, 1)
                assert len(res.terms[1]) == len(C.radical_out(q))
                res = resolve_stalk(C, q, SIDE_CN, 1)
                assert len(res.terms[1]) == len(C.radical_in(q))

    def test_translate_summand_present_at_level_two(self):
        for n in (2, 3, 4):
            C = double_cat(n)
            for q in C.vertices:
                res = resolve_stalk(C, q, SIDE_CN, 2)
                assert q in res.terms[2]  # tau is the identity here

    def test_exactness_all_levels(self):
        for ring in (ZZ, Zmod(3), Zmod(4)):
            for n in (2, 3):
                C = double_cat(n, ring)
                for q in C.vertices:
                    for side in (SIDE_CN, SIDE_CO):
                        res = resolve_stalk(C, q, side, 3)
                        for i in range(1, res.length()):
                            for s in C.vertices:
                                ei = res.level_matrix(i, s)
                                en = res.level_matrix(i + 1, s)
                                assert (ei * en).is_zero
                                K = kernel_basis(ei)
                                for j in range(K.cols):
                                    assert solve(en, K.column_matrix(j)) is not None


class TestDerived:
    def test_degree_zero_identities(self):
        rng = random.Random(7)
        C = double_cat(3, Zmod(3))
        for _ in range(10):
            X = random_representation(C, rng)
            for q in C.vertices:
                corner = corner_functors(X, q)
                assert derived_homology(X, q, SIDE_CO, 1)[0].normal_form() == \
                    corner.K.normal_form()
                assert derived_homology(X, q, SIDE_CN, 1)[0].normal_form() == \
                    corner.C.normal_form()

    def test_free_and_cofree_acyclic(self):
        for ring in (ZZ, Zmod(3), Zmod(4)):
            C = double_cat(3, ring)
            M = PresentedModule.free(ring, 1)
            for p in C.vertices:
                F = free_at(C, p, M)
                G = cofree_at(C, p, M)
                for q in C.vertices:
                    h = derived_homology(F, q, SIDE_CN, 2)
                    assert h[1].is_zero and h[2].is_zero
                    h = derived_homology(G, q, SIDE_CO, 2)
                    assert h[1].is_zero and h[2].is_zero

    def test_stalk_homology_on_a2(self):
        C = double_cat(2)
        S1 = stalk_rep(C, 1, PresentedModule.free(ZZ, 1))
        assert derived_homology(S1, 2, SIDE_CN, 2)[1].describe() == "Z"

    def test_first_homology_is_mesh_homology(self):
        rng = random.Random(8)
        for n in (2, 3):
            C = double_cat(n, Zmod(3))
            for _ in range(10):
                X = random_representation(C, rng)
                for q in C.vertices:
                    assert derived_homology(X, q, SIDE_CN, 1)[1].normal_form() \
                        == mesh_homology(X, q).normal_form()

    def test_three_routes_agree_over_the_integers(self):
        rng = random.Random(15)
        for n in (2, 3):
            C = double_cat(n, ZZ)
            for _ in range(10):
                X = random_representation(C, rng)
                route_mesh = all(mesh_homology(X, q).is_zero for q in C.vertices)
                route_hi = all(derived_homology(X, q, SIDE_CN, 2)[i].is_zero
                               for q in C.vertices for i in (1, 2))
                route_hco = all(derived_homology(X, q, SIDE_CO, 2)[i].is_zero
                                for q in C.vertices for i in (1, 2))
                assert route_mesh == route_hi == route_hco
                for q in C.vertices:
                    assert derived_homology(X, q, SIDE_CN, 1)[1].normal_form() \
                        == mesh_homology(X, q).normal_form()

    def test_mesh_homology_is_next_cohomology_at_translate(self):
        # on these normal quivers mH_q agrees with H^1 at tau(q)
        rng = random.Random(9)
        C = double_cat(3, Zmod(3))
        for _ in range(6):
            X = random_representation(C, rng)
            for q in C.vertices:
                tau_q = C.quiver.tau(q)
                assert derived_homology(X, tau_q, SIDE_CO, 1)[1].normal_form() \
                    == mesh_homology(X, q).normal_form()

    def test_additive_over_direct_sums(self):
        rng = random.Random(10)
        C = double_cat(2, Zmod(3))
        X = random_representation(C, rng)
        Y = random_representation(C, rng)
        S = X.direct_sum(Y)
        for q in C.vertices:
            for side in (SIDE_CN, SIDE_CO):
                hx = derived_homology(X, q, side, 2)
                hy = derived_homology(Y, q, side, 2)
                hs = derived_homology(S, q, side, 2)
                for i in range(3):
                    assert hs[i].normal_form() == \
                        hx[i].direct_sum(hy[i]).normal_form()


class TestClassification:
    def test_free_projective_all_rings(self):
        for ring in (ZZ, Zmod(3), Zmod(4)):
            for n in (2, 3):
                C = double_cat(n, ring)
                for q in C.vertices:
                    v = classify_object(free_at(C, q, PresentedModule.free(ring, 1)))
                    assert v.is_projective is True
                    assert v.homology_vanishes

    def test_cofree_injective_where_the_ring_allows(self):
        for ring in (Zmod(3), Zmod(4)):
            C = double_cat(2, ring)
            for q in C.vertices:
                v = classify_object(cofree_at(C, q, PresentedModule.free(ring, 1)))
                assert v.is_injective is True

    def test_cofree_over_z_is_not_injective(self):
        # no nonzero finitely generated abelian group is divisible
        C = double_cat(2)
        v = classify_object(cofree_at(C, 1, PresentedModule.free(ZZ, 1)))
        assert v.is_injective is False and v.homology_vanishes

    def test_stalks_neither(self):
        for ring in (ZZ, Zmod(3)):
            C = double_cat(2, ring)
            v = classify_object(stalk_rep(C, 1, PresentedModule.free(ring, 1)))
            assert v.is_projective is False and v.is_injective is False

    def test_gating_over_non_hereditary_ring(self):
        C = double_cat(2, Zmod(4))
        v = classify_object(free_at(C, 1, PresentedModule.free(Zmod(4), 1)))
        assert v.is_exact == "not_theorem_backed"
        assert classify_object(
            free_at(double_cat(2), 1, PresentedModule.free(ZZ, 1))).is_exact is True

    def test_zero_criterion_three_ways(self):
        C = double_cat(2)
        Z = stalk_rep(C, 1, PresentedModule.free(ZZ, 0))
        zt = zero_test(Z)
        assert zt["is_zero"] and zt["routes_agree"]
        S = stalk_rep(C, 1, PresentedModule.free(ZZ, 1))
        zt = zero_test(S)
        assert not zt["is_zero"] and zt["routes_agree"]
        assert zt["witness"][0] == "K"
        F = free_at(C, 1, PresentedModule.free(ZZ, 1))
        zt = zero_test(F)
        assert not zt["is_zero"] and zt["routes_agree"]


class TestWeakEquivalence:
    def test_identity(self):
        C = double_cat(2)
        X = free_at(C, 1, PresentedModule.free(ZZ, 1))
        r = is_weak_equivalence(identity_morphism(X))
        assert r["is_weak_equivalence"] and r["routes_agree"]

    def test_zero_into_free(self):
        C = double_cat(2)
        F = free_at(C, 1, PresentedModule.free(ZZ, 1))
        zero = stalk_rep(C, 1, PresentedModule.free(ZZ, 0))
        assert is_weak_equivalence(zero_morphism(zero, F))["is_weak_equivalence"]

    def test_zero_into_stalk_is_not(self):
        C = double_cat(2)
        S = stalk_rep(C, 1, PresentedModule.free(ZZ, 1))
        zero = stalk_rep(C, 1, PresentedModule.free(ZZ, 0))
        assert not is_weak_equivalence(zero_morphism(zero, S))["is_weak_equivalence"]

    def test_route_agreement_on_a2(self):
        rng = random.Random(21)
        C = double_cat(2, Zmod(3))
        for _ in range(30):
            X = random_free_representation(C, rng)
            Y = random_free_representation(C, rng)
            phi = random_morphism(X, Y, rng)
            r = is_weak_equivalence(phi)
            assert r["routes_agree"]


class TestCounterExample:
    @pytest.mark.parametrize("ring", [QQ, ZZ, Zmod(5)])
    def test_full_story(self, ring):
        X, Y, phi = counter_morphism(ring)
        assert validate_representation(X).ok
        assert validate_representation(Y).ok
        v3, v4 = COUNTER_LABELS[3], COUNTER_LABELS[4]
        for q in X.category.quiver.interior_vertices():
            hx, hy = mesh_homology(X, q), mesh_homology(Y, q)
            if q == v3:
                assert hx.normal_form().free_rank == 1
                assert hy.normal_form().free_rank == 1
            else:
                assert hx.is_zero and hy.is_zero
        assert mesh_homology_map(phi, v3).is_isomorphism()
        K, _ = kernel_of_morphism(phi)
        assert mesh_homology(K, v4).normal_form().free_rank == 1
        assert is_weak_equivalence(phi)["is_weak_equivalence"] is False
