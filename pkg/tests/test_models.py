"""Numerical-monoid and poset-representation models."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exlat.models import FinitePoset, NumericalMonoid, poset_exact_quiver


def partitions_into(n, gens):
    """All multisets of generators summing to n (brute force oracle)."""
    out = []

    def rec(rest, start, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for g in gens[start:]:
            if g <= rest:
                rec(rest - g, gens.index(g), acc + [g])

    rec(n, 0, [])
    return out


class TestMonoid:
    def test_simples_n_minus_one(self):
        m = NumericalMonoid(range(2, 50))  # N without 1
        assert m.simples() == (2, 3)

    def test_simples_full_n(self):
        assert NumericalMonoid([1, 2, 5]).simples() == (1,)

    def test_simples_3_5(self):
        assert NumericalMonoid([3, 5]).simples() == (3, 5)
        # oracle: neither generator is representable by the other
        assert not any(3 == 5 * k for k in range(1, 2))
        assert not any(5 == 3 * k for k in range(1, 3))

    def test_length_k6_is_3(self):
        m = NumericalMonoid([2, 3])
        assert m.length(6) == 3

    def test_length_zero(self):
        assert NumericalMonoid([2, 3]).length(0) == 0

    def test_length_5(self):
        m = NumericalMonoid([2, 3])
        assert m.length(5) == 2
        assert partitions_into(5, [2, 3]) == [(2, 3)]

    def test_outside_monoid(self):
        m = NumericalMonoid([2, 3])
        with pytest.raises(ValueError):
            m.length(1)
        m35 = NumericalMonoid([3, 5])
        with pytest.raises(ValueError):
            m35.factorization_lengths(4)

    def test_factorization_lengths_of_6(self):
        m = NumericalMonoid([2, 3])
        assert m.factorization_lengths(6) == {2, 3}
        assert sorted(set(len(p) for p in partitions_into(6, [2, 3]))) == [2, 3]

    def test_factorization_lengths_generator(self):
        assert NumericalMonoid([2, 3]).factorization_lengths(2) == {1}

    def test_factorization_lengths_7(self):
        assert NumericalMonoid([2, 3]).factorization_lengths(7) == {3}

    def test_length_is_max_factorization_length(self):
        m = NumericalMonoid([2, 3])
        for n in range(2, 41):
            assert m.length(n) == max(m.factorization_lengths(n))

    def test_superadditivity_up_to_40(self):
        m = NumericalMonoid([2, 3])
        for n1 in range(2, 21):
            for n2 in range(2, 21):
                assert m.length(n1 + n2) >= m.length(n1) + m.length(n2)

    @given(st.sets(st.integers(2, 12), min_size=1, max_size=4), st.integers(0, 60))
    @settings(max_examples=80, deadline=None)
    def test_membership_matches_bruteforce(self, gens, n):
        m = NumericalMonoid(gens)
        brute = any(
            sum(combo) == n
            for k in range(n // 2 + 2)
            for combo in itertools.combinations_with_replacement(sorted(gens), k)
        ) or n == 0
        assert m.contains(n) == brute


class TestPoset:
    def diamond(self):
        return FinitePoset.from_covers(
            ["s1", "s2", "s3", "s4"], [("s1", "s2"), ("s1", "s3"), ("s2", "s4"), ("s3", "s4")]
        )

    def test_diamond_quiver(self):
        q = poset_exact_quiver(self.diamond())
        assert sorted(q.hasse_arrows) == [("s1", "s2"), ("s1", "s3"), ("s2", "s4"), ("s3", "s4")]
        assert sorted(q.extension_arrows) == [("s0", "s1"), ("s0", "s2"), ("s0", "s3"), ("s0", "s4")]
        assert len(q.vertices) == 5

    def test_antichain(self):
        p = FinitePoset.from_covers(["a", "b", "c"], [])
        q = poset_exact_quiver(p)
        assert q.hasse_arrows == []
        assert len(q.extension_arrows) == 3

    def test_chain_of_two(self):
        p = FinitePoset.from_covers(["a", "b"], [("a", "b")])
        q = poset_exact_quiver(p)
        assert q.hasse_arrows == [("a", "b")]
        assert len(q.extension_arrows) == 2

    def test_no_transitive_shortcuts(self):
        p = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert ("a", "c") not in p.hasse_covers()
        assert p.leq[("a", "c")]

    def test_invalid_posets(self):
        with pytest.raises(ValueError):
            FinitePoset(["a", "a"], {})
        with pytest.raises(ValueError):
            FinitePoset(["a", "b"], {("a", "b"): True, ("b", "a"): True})

    def test_extra_vertex_collision(self):
        p = FinitePoset.from_covers(["s0"], [])
        with pytest.raises(ValueError):
            poset_exact_quiver(p)

    def test_dot_styles(self):
        dot = poset_exact_quiver(self.diamond()).to_dot()
        assert dot.count("style=dotted") == 4
        assert dot.count("style=solid") == 4
