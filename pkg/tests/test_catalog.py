"""Catalog construction: golden A3 data, closed-form A_n counts, brute-force A2 oracle."""

import itertools

import pytest

from exlat.catalog import NotRepresentationFinite, build_catalog, translate
from exlat.fp import Matrix
from exlat.quiver import Arrow, Quiver, linear_quiver
from exlat.rep import Representation, hom_dim, iso_test


def idx_by_dim(catalog, dv):
    matches = [i for i, m in enumerate(catalog.indecomposables) if m.dim == tuple(dv)]
    assert len(matches) == 1
    return matches[0]


class TestA3Sink:
    def test_six_indecomposables_three_sequences(self, a3_catalog):
        assert len(a3_catalog.indecomposables) == 6
        assert len(a3_catalog.ar_sequences) == 3

    def test_dim_vectors(self, a3_catalog):
        dims = sorted(m.dim for m in a3_catalog.indecomposables)
        assert dims == [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0), (1, 1, 1)]

    def test_projective_injective_flags(self, a3_catalog):
        c = a3_catalog
        assert {c.label(i) for i in range(6) if c.projective[i]} == {"P1", "S2", "P3"}
        assert {c.label(i) for i in range(6) if c.injective[i]} == {"S1", "S3", "I2"}

    def test_ar_sequence_end_terms(self, a3_catalog):
        c = a3_catalog
        ends = {
            (c.indecomposables[s.left_index].dim, c.indecomposables[s.right_index].dim)
            for s in c.ar_sequences
        }
        # (AR1) P1 >-> I2 ->> S3, (AR2) P3 >-> I2 ->> S1, (AR3) S2 >-> P1+P3 ->> I2
        assert ends == {
            ((1, 1, 0), (0, 0, 1)),
            ((0, 1, 1), (1, 0, 0)),
            ((0, 1, 0), (1, 1, 1)),
        }

    def test_ar3_middle_is_p1_plus_p3(self, a3_catalog):
        c = a3_catalog
        (ar3,) = [s for s in c.ar_sequences if c.indecomposables[s.right_index].dim == (1, 1, 1)]
        assert sorted(c.indecomposables[i].dim for i in ar3.middle_class) == [(0, 1, 1), (1, 1, 0)]

    def test_ar_sequences_nonsplit_exact(self, a3_catalog):
        from exlat.homology import SES

        for s in a3_catalog.ar_sequences:
            raw = SES(s.left, s.middle, s.right, s.incl, s.proj).validate()
            assert not raw.splits()
            assert not a3_catalog.projective[s.right_index]
            assert not a3_catalog.injective[s.left_index]

    def test_translate_examples(self, a3_catalog):
        c = a3_catalog
        s3, i2, p1 = idx_by_dim(c, (0, 0, 1)), idx_by_dim(c, (1, 1, 1)), idx_by_dim(c, (1, 1, 0))
        s2 = idx_by_dim(c, (0, 1, 0))
        assert translate(c, s3) == p1
        assert translate(c, i2) == s2
        assert translate(c, p1) is None


class TestA3Source:
    def test_paper_section8_sequences(self, a3_source_catalog):
        c = a3_source_catalog
        ends = {
            (c.indecomposables[s.left_index].dim, c.indecomposables[s.right_index].dim)
            for s in c.ar_sequences
        }
        # 100 >-> 111 ->> 011, 001 >-> 111 ->> 110, 111 >-> 011+110 ->> 010
        assert ends == {
            ((1, 0, 0), (0, 1, 1)),
            ((0, 0, 1), (1, 1, 0)),
            ((1, 1, 1), (0, 1, 0)),
        }
        (ar3,) = [s for s in c.ar_sequences if c.indecomposables[s.right_index].dim == (0, 1, 0)]
        assert sorted(c.indecomposables[i].dim for i in ar3.middle_class) == [(0, 1, 1), (1, 1, 0)]


class TestSmallQuivers:
    def test_a1(self, a1):
        c = build_catalog(a1, p=2)
        assert len(c.indecomposables) == 1
        assert c.ar_sequences == []

    def test_a2(self, a2):
        c = build_catalog(a2, p=2)
        assert len(c.indecomposables) == 3
        assert len(c.ar_sequences) == 1
        (seq,) = c.ar_sequences
        assert c.indecomposables[seq.left_index].dim == (0, 1)
        assert seq.middle.dim == (1, 1)
        assert c.indecomposables[seq.right_index].dim == (1, 0)

    def test_a2_against_bruteforce_classification(self, a2):
        # enumerate every rep of 1 -> 2 with dims <= 2 over F_2; a rep is
        # indecomposable iff End contains no idempotent other than 0, 1
        found = set()
        for d1 in range(3):
            for d2 in range(3):
                if d1 + d2 == 0:
                    continue
                for entries in itertools.product(range(2), repeat=d1 * d2):
                    m = Representation.build(
                        a2, 2, {"1": d1, "2": d2}, {"a": Matrix(2, d2, d1, list(entries))}
                    )
                    idems = 0
                    for f in _all_endos(m):
                        if f.then(f) == f:
                            idems += 1
                    if idems == 2:  # only 0 and 1
                        found.add(m.dim)
        assert found == {(1, 0), (0, 1), (1, 1)}

    def test_cap_guard(self):
        # the Kronecker quiver is representation-infinite
        kron = Quiver(("1", "2"), (Arrow("1", "2", "a"), Arrow("1", "2", "b")))
        with pytest.raises(NotRepresentationFinite):
            build_catalog(kron, p=2, cap=30)


def _all_endos(m):
    from exlat.rep import enumerate_homs

    return enumerate_homs(m, m)


class TestAnClosedForm:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_linear_orientation_counts(self, n):
        c = build_catalog(linear_quiver(n), p=2)
        assert len(c.indecomposables) == n * (n + 1) // 2
        assert len(c.ar_sequences) == n * (n + 1) // 2 - n
        # type A indecomposables are interval-supported with 0/1 dimensions
        for m in c.indecomposables:
            assert all(d in (0, 1) for d in m.dim)
            support = [i for i, d in enumerate(m.dim) if d]
            assert support == list(range(support[0], support[-1] + 1))

    def test_alternating_orientation(self):
        q = Quiver(("1", "2", "3", "4"), (Arrow("1", "2", "a"), Arrow("3", "2", "b"), Arrow("3", "4", "c")))
        c = build_catalog(q, p=2)
        assert len(c.indecomposables) == 10
        assert len(c.ar_sequences) == 6

    def test_field_does_not_change_counts(self, a3_sink):
        for p in (2, 3, 5):
            c = build_catalog(a3_sink, p=p)
            assert len(c.indecomposables) == 6
            assert len(c.ar_sequences) == 3


class TestCatalogServices:
    def test_hom_dims_table(self, a3_catalog):
        c = a3_catalog
        for i, a in enumerate(c.indecomposables):
            for j, b in enumerate(c.indecomposables):
                assert c.hom_dims[i][j] == hom_dim(a, b)
            assert c.hom_dims[i][i] == 1  # bricks

    def test_identify_matches_decompose(self, a3_catalog):
        c = a3_catalog
        for cls in [(0,), (0, 2), (1, 1), (0, 1, 3), (4, 5)]:
            x = c.rep_of(cls)
            assert c.identify(x) == tuple(sorted(cls))
            assert c.decompose(x) == tuple(sorted(cls))

    def test_decompose_exhaustive_small_dims(self, a3_catalog):
        """decompose agrees with exhaustive multiset enumeration for dim <= 4."""
        c = a3_catalog
        classes = _classes_up_to(c, 4)
        for cls in classes:
            x = c.rep_of(cls)
            matches = [other for other in classes if c.class_dim_vector(other) == x.dim and iso_test(c.rep_of(other), x)]
            assert matches == [cls]
            assert c.decompose(x) == cls

    def test_labels(self, a3_catalog):
        labels = {a3_catalog.label(i) for i in range(6)}
        assert labels == {"S1", "S2", "S3", "P1", "P3", "I2"}


def _classes_up_to(catalog, cap):
    out = []

    def rec(start, acc, total):
        if acc:
            out.append(tuple(acc))
        for i in range(start, len(catalog.indecomposables)):
            d = catalog.indecomposables[i].total_dim
            if total + d <= cap:
                rec(i, acc + [i], total + d)

    rec(0, [], 0)
    return sorted(set(out))
