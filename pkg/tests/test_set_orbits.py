import math

import pytest

from ut_lab.catalog import build_named
from ut_lab.errors import CapExceeded
from ut_lab.set_orbits import (
    as_kset,
    is_ij_homogeneous,
    is_k_homogeneous,
    kset_of_mask,
    mask_of,
    orbit_of_set,
    orbits_on_ksets,
    order_bound_pass,
)

from _oracles import brute_set_orbit


class TestOrbitOfSet:
    def test_s4_pairs(self):
        orbit = orbit_of_set(build_named("S4"), (1, 2))
        assert orbit.size == 6
        assert orbit.representative == (1, 2)

    def test_c5_pair_by_hand(self):
        orbit = orbit_of_set(build_named("C5"), (1, 2))
        assert orbit.members == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}

    def test_matches_brute_force(self):
        G = build_named("PSL(2,7)")
        orbit = orbit_of_set(G, (1, 3, 6))
        brute = brute_set_orbit(G.gen_images(), frozenset((1, 3, 6)))
        assert orbit.members == {tuple(sorted(s)) for s in brute}

    def test_cap(self):
        with pytest.raises(CapExceeded):
            orbit_of_set(build_named("S10"), (1, 2, 3, 4, 5), cap=100)

    def test_mask_roundtrip(self):
        s = (2, 5, 9)
        assert kset_of_mask(mask_of(s)) == s

    def test_as_kset_validation(self):
        assert as_kset([3, 1, 2]) == (1, 2, 3)
        with pytest.raises(ValueError):
            as_kset([1, 1])
        with pytest.raises(ValueError):
            as_kset([0, 1])
        with pytest.raises(ValueError):
            as_kset([9], n=8)


class TestOrbitsOnKsets:
    def test_symmetric_single_orbit(self):
        for k in (1, 2, 3):
            assert len(orbits_on_ksets(build_named("S6", 6), k)) == 1

    def test_m11_degree12_4sets(self):
        orbits = orbits_on_ksets(build_named("M11", 12), 4)
        assert len(orbits) == 2
        assert sum(o.size for o in orbits) == math.comb(12, 4) == 495

    def test_sizes_sum_and_disjoint_on_catalog(self, catalog_small):
        for G in catalog_small:
            for k in (2, 3):
                if k > G.degree:
                    continue
                orbits = orbits_on_ksets(G, k)
                assert sum(o.size for o in orbits) == math.comb(G.degree, k)
                all_members = [m for o in orbits for m in o.members]
                assert len(all_members) == len(set(all_members))

    def test_ordered_by_representative(self):
        orbits = orbits_on_ksets(build_named("AGL(1,13)"), 3)
        reps = [o.representative for o in orbits]
        assert reps == sorted(reps)

    def test_orbit_invariants_on_catalog(self, catalog_small):
        for G in catalog_small[:15]:
            for orbit in orbits_on_ksets(G, 2):
                assert orbit.representative == min(orbit.members)
                assert orbit.size == len(orbit.members) == len(orbit.masks)
                assert G.order % orbit.size == 0


class TestKHomogeneous:
    def test_examples(self):
        assert is_k_homogeneous(build_named("S5", 5), 3)
        assert not is_k_homogeneous(build_named("C5"), 2)
        assert is_k_homogeneous(build_named("AGL(1,7)"), 2)

    def test_complement_shortcut(self):
        G = build_named("PSL(2,8)")
        # 9-4=5 < ... both answered through the smaller side
        assert is_k_homogeneous(G, 3) == is_k_homogeneous(G, 6)
        assert is_k_homogeneous(G, 2) == is_k_homogeneous(G, 7)

    def test_livingstone_wagner_on_catalog(self, catalog_small):
        for G in catalog_small:
            n = G.degree
            for k in range(2, n // 2 + 1):
                if is_k_homogeneous(G, k):
                    assert is_k_homogeneous(G, k - 1), (G.name, k)


class TestIjHomogeneous:
    def test_asl23_failure_with_witness(self):
        G = build_named("ASL(2,3)")
        ok, pair = is_ij_homogeneous(G, 3, 4)
        assert not ok
        i_rep, j_set = pair
        # re-check the witness: no orbit member of the 3-set lies inside j_set
        orbit = orbit_of_set(G, i_rep)
        assert all(not set(m) <= set(j_set) for m in orbit.members)

    def test_asl23_45_holds(self):
        ok, _ = is_ij_homogeneous(build_named("ASL(2,3)"), 4, 5)
        assert ok

    def test_kk_equals_homogeneity(self, catalog_small):
        for G in catalog_small[:12]:
            for k in (2, 3):
                if k > G.degree - 1:
                    continue
                ok, _ = is_ij_homogeneous(G, k, k)
                assert ok == is_k_homogeneous(G, k)

    def test_duality_on_catalog(self, catalog_small):
        # (i,j)-homogeneity equals (n-j, n-i)-homogeneity
        for G in catalog_small:
            n = G.degree
            if n > 10 or n < 5:
                continue
            for i, j in ((2, 3), (3, 4)):
                if j >= n - 1 or n - j < 1:
                    continue
                ok, _ = is_ij_homogeneous(G, i, j)
                dual, _ = is_ij_homogeneous(G, n - j, n - i)
                assert ok == dual, (G.name, i, j)


class TestOrderBound:
    def test_symmetric(self):
        assert order_bound_pass(build_named("S8"), 4)

    def test_agl_1_11(self):
        assert order_bound_pass(build_named("AGL(1,11)"), 4)

    def test_agl_1_13_fails(self):
        assert not order_bound_pass(build_named("AGL(1,13)"), 4)


class TestClassificationSpotChecks:
    def test_ramsey_bound_on_catalog(self, catalog_small):
        # a (k,k+1)-homogeneous but not k-homogeneous group has degree below
        # the Ramsey number R(k, k+1, 2): 6 for k=2 and 13 for k=3
        ramsey = {2: 6, 3: 13}
        for G in catalog_small:
            n = G.degree
            for k, bound in ramsey.items():
                if 2 * k + 1 > n:
                    continue
                ok, _ = is_ij_homogeneous(G, k, k + 1)
                if ok and not is_k_homogeneous(G, k):
                    assert n < bound, (G.name, n, k)

    def test_maximal_overgroup_cases(self):
        # the two subgroup-of-a-homogeneous-overgroup cases settled by
        # computation: PSL(2,23) at degree 24 (k = 4 and 5) and PGL(2,32)
        # at degree 33 (k = 4) are not (k,k+1)-homogeneous
        psl223 = build_named("PSL(2,23)")
        for k in (4, 5):
            ok, _ = is_ij_homogeneous(psl223, k, k + 1)
            assert not ok, k
        pgl232 = build_named("PGL(2,32)")
        ok, _ = is_ij_homogeneous(pgl232, 4, 5)
        assert not ok
