"""Tests for fingerprints, dominance, bottoms, and the block family."""

import itertools

import pytest

from ospchar.atyp import NotTame, is_tame
from ospchar.blocks import (
    WrongRegime,
    admissibility_positivity,
    bottom_of_block,
    fingerprint,
    lambda_x_family,
    preceq,
    same_central_character,
)
from ospchar.exactnum import HalfInt, Weight
from ospchar.hook import HookPartition, hook_partitions, natural_weight
from ospchar.rootdata import Algebra, b_standard

B33 = Algebra("B", 3, 3)
B11 = Algebra("B", 1, 1)
D32 = Algebra("D", 3, 2)


def shifted(lam, alg):
    return natural_weight(lam)[0] + b_standard(alg).rho


class TestPreceq:
    def test_reflexive(self):
        x = natural_weight(HookPartition.of((3, 1), 2, 2), )[0]
        assert preceq(x, x, b_standard(Algebra("B", 2, 2)))

    def test_osp_7_6_chain(self):
        lam = natural_weight(HookPartition.of((6, 6, 5, 2, 1, 1), 3, 3))[0]
        nu = natural_weight(HookPartition.of((6, 6, 1, 1, 1, 1), 3, 3))[0]
        gamma = natural_weight(HookPartition.of((5,), 3, 3))[0]
        b = b_standard(B33)
        assert preceq(gamma, nu, b) and preceq(nu, lam, b) and preceq(gamma, lam, b)
        assert not preceq(lam, gamma, b)

    def test_positive_root_shift_is_one_directional(self):
        hw = natural_weight(HookPartition.of((2,), 1, 1))[0]
        root = Weight.from_ints([1], [-1])  # d_1 - e_1, positive for the standard Borel
        b = b_standard(B11)
        assert preceq(hw, hw + root, b)
        assert not preceq(hw + root, hw, b)

    def test_non_lattice_gap_rejected(self):
        b = b_standard(B11)
        half = Weight.from_doubled([1], [0])
        assert not preceq(Weight.zero(1, 1), half, b)


class TestFingerprints:
    def test_osp_7_6_chain_weights_equivalent(self):
        lams = [(6, 6, 5, 2, 1, 1), (6, 6, 1, 1, 1, 1), (5,)]
        ws = [shifted(HookPartition.of(p, 3, 3), B33) for p in lams]
        for x, y in itertools.combinations(ws, 2):
            assert same_central_character(x, y, B33)

    def test_osp_6_4_family_equivalent(self):
        members = [
            (3, 2, 2, 2, 2, 2, 1),
            (3, 3, 3, 2, 2, 2, 1),
            (4, 4, 3, 3, 3, 2, 1),
            (5, 4, 3, 3, 3, 3, 1),
        ]
        ws = [shifted(HookPartition.of(p, 2, 3), D32) for p in members]
        for x, y in itertools.combinations(ws, 2):
            assert same_central_character(x, y, D32)

    def test_different_typical_weights_differ(self):
        a = shifted(HookPartition.of((2,), 1, 1), B11)
        b = shifted(HookPartition.of((3,), 1, 1), B11)
        assert not same_central_character(a, b, B11)

    def test_equivalence_relation_on_census(self):
        alg = Algebra("B", 2, 2)
        ws = [shifted(lam, alg) for lam in hook_partitions(2, 2, 6)]
        fps = [fingerprint(x, alg) for x in ws]
        for (w1, f1), (w2, f2) in itertools.combinations(zip(ws, fps), 2):
            assert same_central_character(w1, w2, alg) == (f1 == f2)

    def test_reduced_multiset_matches_every_maximal_matching(self):
        # brute-force all maximal matchings and compare the surviving entries
        from ospchar.atyp import _iso_edges

        for alg in (Algebra("B", 2, 2), Algebra("D", 2, 2)):
            for lam in hook_partitions(alg.n, alg.m, 7):
                s = shifted(lam, alg)
                fp = fingerprint(s, alg)
                edges = _iso_edges(s, alg)
                pairs = [(i, j) for i in edges for j in edges[i]]
                best = fp.k
                for combo in itertools.combinations(pairs, best):
                    ds = [i for i, _ in combo]
                    es = [j for _, j in combo]
                    if len(set(ds)) < best or len(set(es)) < best:
                        continue
                    red_d = tuple(
                        sorted(
                            (abs(a) for t, a in enumerate(s.delta) if t not in ds),
                            key=lambda h: h.doubled,
                        )
                    )
                    red_e = tuple(
                        sorted(
                            (abs(b) for t, b in enumerate(s.eps) if t not in es),
                            key=lambda h: h.doubled,
                        )
                    )
                    assert (red_d, red_e) == (fp.reduced_delta, fp.reduced_eps)

    def test_d_typical_twins_distinguished(self):
        # typical weights with nonzero kappa_m: plus and minus twins are
        # different central characters
        alg = Algebra("D", 2, 2)
        for lam in hook_partitions(2, 2, 6):
            plus, minus = natural_weight(lam)
            if plus == minus:
                continue
            rho = b_standard(alg).rho
            if fingerprint(plus + rho, alg).k != 0:
                continue
            assert not same_central_character(plus + rho, minus + rho, alg)


class TestBottomOfBlock:
    def test_osp_7_6_golden_trace(self):
        lam = HookPartition.of((6, 6, 5, 2, 1, 1), 3, 3)
        trace = bottom_of_block(lam, B33)
        assert len(trace.steps) == 2
        s1, s2 = trace.steps
        assert s1.before.display() == "(11/2,9/2,5/2|11/2,5/2,1/2)"
        assert s1.chosen_b == HalfInt(5) and s1.b_tilde == HalfInt(3)
        assert s1.after.display() == "(11/2,9/2,-3/2|11/2,3/2,1/2)"
        assert s2.chosen_b == HalfInt(11) and s2.b_tilde == HalfInt(5)
        assert s2.after.display() == "(9/2,-3/2,-5/2|5/2,3/2,1/2)"
        assert trace.result.parts == (5,)

    def test_intermediate_partition_recovered(self):
        lam = HookPartition.of((6, 6, 5, 2, 1, 1), 3, 3)
        trace = bottom_of_block(lam, B33)
        from ospchar.blocks import partition_from_shifted

        assert partition_from_shifted(trace.steps[0].after, B33).parts == (6, 6, 1, 1, 1, 1)

    def test_osp_3_2_single_step(self):
        lam = HookPartition.of((1,), 1, 1)
        trace = bottom_of_block(lam, B11)
        assert len(trace.steps) == 1
        assert trace.steps[0].b_tilde == HalfInt(1)
        assert trace.steps[0].after.display() == "(-1/2|1/2)"
        assert trace.result.parts == ()
        assert same_central_character(
            shifted(lam, B11), shifted(trace.result, B11), B11
        )

    def test_tame_input_returns_empty_trace(self):
        trace = bottom_of_block(HookPartition.of((5,), 3, 3), B33)
        assert trace.steps == () and trace.result.parts == (5,)

    def test_output_is_tame_same_block_and_below(self):
        for alg in (Algebra("B", 2, 2), Algebra("D", 2, 2)):
            b = b_standard(alg)
            for lam in hook_partitions(alg.n, alg.m, 7):
                trace = bottom_of_block(lam, alg)
                assert is_tame(trace.result, alg).tame
                assert same_central_character(
                    shifted(lam, alg), shifted(trace.result, alg), alg
                )
                assert preceq(
                    natural_weight(trace.result)[0], natural_weight(lam)[0], b
                )

    def test_steps_strictly_decrease(self):
        b = b_standard(B33)
        trace = bottom_of_block(HookPartition.of((6, 6, 5, 2, 1, 1), 3, 3), B33)
        for step in trace.steps:
            assert preceq(step.after, step.before, b)
            assert step.after != step.before

    def test_uniqueness_within_fingerprint_class(self):
        # B always; D away from the k = 1, lambda_n >= m-1 regime
        for alg in (Algebra("B", 2, 2), Algebra("D", 2, 2)):
            groups = {}
            for lam in hook_partitions(alg.n, alg.m, 7):
                fp = fingerprint(shifted(lam, alg), alg)
                groups.setdefault(fp, []).append(lam)
            for fp, lams in groups.items():
                if alg.family == "D" and fp.k == 1:
                    lams = [l for l in lams if l.part(alg.n) < alg.m - 1]
                bottoms = {bottom_of_block(l, alg).result.parts for l in lams}
                assert len(bottoms) <= 1


class TestLambdaXFamily:
    def test_osp_6_4_golden(self):
        lam = HookPartition.of((3, 3, 3, 2, 2, 2, 1), 2, 3)
        fam = lambda_x_family(lam, D32)
        assert [(x, p.parts) for x, p in fam] == [
            (0, (3, 2, 2, 2, 2, 2, 1)),
            (1, (3, 3, 3, 2, 2, 2, 1)),
            (3, (4, 4, 3, 3, 3, 2, 1)),
            (4, (5, 4, 3, 3, 3, 3, 1)),
        ]

    def test_members_tame_and_equivalent(self):
        lam = HookPartition.of((3, 3, 3, 2, 2, 2, 1), 2, 3)
        base = shifted(lam, D32)
        for _, member in lambda_x_family(lam, D32):
            assert is_tame(member, D32).tame
            assert same_central_character(base, shifted(member, D32), D32)

    def test_lambda_zero_is_minimum(self):
        lam = HookPartition.of((3, 3, 3, 2, 2, 2, 1), 2, 3)
        fam = lambda_x_family(lam, D32)
        bottom = natural_weight(fam[0][1])[0]
        b = b_standard(D32)
        for _, member in fam:
            assert preceq(bottom, natural_weight(member)[0], b)

    def test_wrong_regime_rejected(self):
        with pytest.raises(WrongRegime):
            lambda_x_family(HookPartition.of((5,), 3, 3), B33)
        with pytest.raises(WrongRegime):
            # tame k = 1 but lambda_n = 0 < m - 1
            lambda_x_family(HookPartition.of((3,), 2, 2), Algebra("D", 2, 2))
        with pytest.raises(WrongRegime):
            # typical weight in family D
            lambda_x_family(HookPartition.of((4, 3, 2, 1), 2, 2), Algebra("D", 2, 2))


class TestAdmissibilityPositivity:
    def test_b_square_trivial_vacuous(self):
        for k in (1, 2):
            ok, witness = admissibility_positivity(
                HookPartition.of((), k, k), Algebra("B", k, k)
            )
            assert ok and witness is None

    def test_d_type_examples_strict(self):
        ok, witness = admissibility_positivity(HookPartition.of((), 1, 2), Algebra("D", 2, 1))
        assert ok and witness is None
        lam = HookPartition.of((3, 3, 3, 2, 2, 2, 1), 2, 3)
        ok, witness = admissibility_positivity(lam, D32)
        assert ok and witness is None

    def test_b_type_boundary_case_detected(self):
        # For osp(7|6), gamma = (5), the Lemma-shape entry b_{m-k} equals 1/2,
        # so (shifted, e_1 + e_2) = 0 and the strict inequality degenerates.
        ok, witness = admissibility_positivity(HookPartition.of((5,), 3, 3), B33)
        assert not ok
        assert str(witness) == "e1+e2"

    def test_typical_rejected(self):
        with pytest.raises(NotTame):
            admissibility_positivity(HookPartition.of((2,), 1, 1), B11)
