import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fairrank import (
    DomainMismatchError,
    FairnessClass,
    Ranking,
    backward_arcs,
    copeland_ranking,
    enumerate_all,
    gen_random,
    is_fair,
    linear_sums,
    parse_ranking,
    serialize_ranking,
    spectral_leq,
    spectral_leq_bruteforce,
    spectral_strict_less,
)
from fairrank.ranking import injection_exists, sorted_dominance

FC = FairnessClass


def exact(*vals):
    return Ranking.exact({i + 1: v for i, v in enumerate(vals)})


class TestBackwardArcs:
    def test_three_cycle_identity(self, three_cycle):
        rep = backward_arcs(three_cycle, exact(1, 2, 3))
        assert set(rep.backward) == {(1, 2), (2, 3)}
        assert rep.fraction == Fraction(2, 3)

    def test_constant_ranking(self, three_cycle):
        rep = backward_arcs(three_cycle, exact(1, 1, 1))
        assert rep.count == 0
        assert rep.fraction == 0

    def test_chain_dominance_order(self, chain3):
        rep = backward_arcs(chain3, exact(3, 2, 1))
        assert rep.count == 0

    def test_domain_mismatch(self, three_cycle):
        with pytest.raises(DomainMismatchError):
            backward_arcs(three_cycle, exact(1, 2))

    def test_trichotomy(self):
        rng = random.Random(5)
        for seed in range(20):
            t = gen_random(6, seed)
            r = exact(*[rng.randint(1, 4) for _ in range(6)])
            back = set(backward_arcs(t, r).backward)
            forward = {(x, y) for (x, y) in t.arcs() if r[x] > r[y]}
            level = {(x, y) for (x, y) in t.arcs() if r[x] == r[y]}
            assert back | forward | level == set(t.arcs())
            assert not (back & forward) and not (back & level) and not (forward & level)

    def test_reversal_covers_all_arcs(self):
        # for injective r, an arc is backward in exactly one of r and -r
        for seed in range(20):
            t = gen_random(6, seed)
            perm = list(range(1, 7))
            random.Random(seed).shuffle(perm)
            r = Ranking.exact({v: p for v, p in zip(t.vertices(), perm)})
            rev = Ranking.exact({v: -r[v] for v in t.vertices()})
            b1 = set(backward_arcs(t, r).backward)
            b2 = set(backward_arcs(t, rev).backward)
            assert b1 | b2 == set(t.arcs())
            assert min(len(b1), len(b2)) <= t.num_arcs // 2

    def test_json_shape(self, three_cycle):
        rep = backward_arcs(three_cycle, exact(1, 2, 3))
        j = rep.to_json()
        assert j["total"] == 3
        assert j["fraction"] == {"num": 2, "den": 3}


class TestCopelandAndWeak:
    @pytest.mark.parametrize("cls", [FC.NSCOP, FC.SCOP, FC.COP, FC.WEAK])
    def test_out_degree_ranking_is_fair(self, cls):
        for t in enumerate_all(4):
            assert is_fair(t, copeland_ranking(t), cls).ok
        for seed in range(10):
            t = gen_random(25, seed)
            assert is_fair(t, copeland_ranking(t), cls).ok

    def test_cycle_tie_break_violates_nscop(self, three_cycle):
        r = exact(1, 1, 2)
        assert is_fair(three_cycle, r, FC.SCOP).ok
        verdict = is_fair(three_cycle, r, FC.NSCOP)
        assert not verdict.ok
        assert verdict.certificate == (3, 1)

    def test_constant_is_nscop(self, chain3):
        assert is_fair(chain3, exact(0, 0, 0), FC.NSCOP).ok
        assert not is_fair(chain3, exact(0, 0, 0), FC.SCOP).ok

    def test_certificate_is_lex_least(self, chain3):
        verdict = is_fair(chain3, exact(1, 2, 3), FC.SCOP)
        assert not verdict.ok
        assert verdict.certificate == (2, 1)

    def test_injective(self, three_cycle):
        assert is_fair(three_cycle, exact(3, 1, 2), FC.INJ).ok
        verdict = is_fair(three_cycle, exact(1, 2, 1), FC.INJ)
        assert verdict.certificate == (1, 3)


class TestSpectral:
    def test_empty_out_set_injects(self, chain3):
        r = exact(3, 2, 1)
        assert spectral_leq(chain3, r, 3, 1)
        assert spectral_strict_less(chain3, r, 3, 1)

    def test_single_rank_comparison(self):
        assert not sorted_dominance([5], [3], lambda a, b: a <= b)
        assert sorted_dominance([1, 4], [2, 2, 5], lambda a, b: a <= b)

    def test_reflexive(self, three_cycle):
        r = exact(1, 2, 3)
        for x in three_cycle.vertices():
            assert spectral_leq(three_cycle, r, x, x)
            assert not spectral_strict_less(three_cycle, r, x, x)

    def test_constant_cycle_no_strict_pairs(self, three_cycle):
        r = exact(1, 1, 1)
        for x in three_cycle.vertices():
            for y in three_cycle.vertices():
                assert not spectral_strict_less(three_cycle, r, x, y)

    def test_transitive_on_random_instances(self):
        rng = random.Random(0)
        for seed in range(15):
            t = gen_random(6, seed)
            r = exact(*[rng.randint(1, 3) for _ in range(6)])
            leq = {(x, y): spectral_leq(t, r, x, y)
                   for x in t.vertices() for y in t.vertices()}
            for x in t.vertices():
                for y in t.vertices():
                    for z in t.vertices():
                        if leq[(x, y)] and leq[(y, z)]:
                            assert leq[(x, z)]

    def test_shortcut_matches_bruteforce_on_tournaments(self):
        rng = random.Random(1)
        for seed in range(25):
            t = gen_random(6, seed)
            r = exact(*[rng.randint(1, 4) for _ in range(6)])
            for x in t.vertices():
                for y in t.vertices():
                    assert spectral_leq(t, r, x, y) == spectral_leq_bruteforce(t, r, x, y)

    @given(
        st.lists(st.integers(0, 6), max_size=5),
        st.lists(st.integers(0, 6), max_size=6),
    )
    @settings(max_examples=300, deadline=None)
    def test_shortcut_matches_bruteforce_on_spectra(self, sx, sy):
        leq = lambda a, b: a <= b
        assert sorted_dominance(sx, sy, leq) == injection_exists(sx, sy, leq)


class TestLinear:
    def test_uniform_cycle_sums(self, three_cycle):
        r = exact(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
        assert linear_sums(three_cycle, r) == {1: Fraction(1, 3), 2: Fraction(1, 3), 3: Fraction(1, 3)}
        assert is_fair(three_cycle, r, FC.LIN).ok

    def test_chain_sums(self, chain3):
        r = exact(4, 2, 1)
        assert linear_sums(chain3, r) == {1: 3, 2: 1, 3: 0}
        assert is_fair(chain3, r, FC.LIN).ok

    def test_nonpositive_rank_soft_fails(self, chain3):
        verdict = is_fair(chain3, exact(4, 2, 0), FC.LIN)
        assert not verdict.ok
        assert verdict.certificate == (3, 3)
        assert "non-positive" in verdict.reason

    def test_scaling_invariance(self):
        for seed in range(10):
            t = gen_random(5, seed)
            for blocks in [(1, 1, 2, 2, 3), (1, 2, 3, 4, 5)]:
                r = exact(*blocks)
                scaled = Ranking.exact({v: 7 * r[v] for v in t.vertices()})
                assert is_fair(t, r, FC.LIN).ok == is_fair(t, scaled, FC.LIN).ok


class TestContainments:
    def test_implications_on_random_rankings(self):
        rng = random.Random(9)
        for seed in range(40):
            t = gen_random(5, seed)
            r = exact(*[rng.randint(1, 4) for _ in range(5)])
            if is_fair(t, r, FC.LIN).ok:
                assert is_fair(t, r, FC.SPEC).ok
            if is_fair(t, r, FC.SPEC).ok:
                assert is_fair(t, r, FC.WEAK).ok
            if is_fair(t, r, FC.COP).ok:
                assert is_fair(t, r, FC.SCOP).ok
            if is_fair(t, r, FC.SCOP).ok:
                assert is_fair(t, r, FC.WEAK).ok


class TestRankingIO:
    def test_roundtrip_exact(self):
        r = exact(Fraction(1, 3), 2, Fraction(5, 7))
        again = parse_ranking(serialize_ranking(r))
        assert again.is_exact
        assert again.values == r.values

    def test_parse_float(self):
        r = parse_ranking("1 0.25\n2 1.5\n")
        assert not r.is_exact
        assert r[1] == 0.25

    def test_parse_rational(self):
        r = parse_ranking("1 3/4\n2 1\n")
        assert r.is_exact
        assert r[1] == Fraction(3, 4)
