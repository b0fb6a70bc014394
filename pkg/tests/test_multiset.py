import pytest
from hypothesis import given
from hypothesis import strategies as st

from paritykit.core.errors import CountOverflowError, DimensionMismatchError, NegativeCountError
from paritykit.core.multiset import (MAX_COUNT, GeneratorId, Multiset, SignedVector, difference, disjoint_union,
                                     is_radical, meet, meet_join, pairwise_disjoint, parts, union_all)

A, B, C = (GeneratorId(name, 0) for name in "abc")
KEYS = [GeneratorId(name, 1) for name in ("01", "02", "12", "x")]

multisets = st.dictionaries(st.sampled_from(KEYS), st.integers(min_value=0, max_value=5)).map(
    lambda counts: Multiset(counts, 1))
vectors = st.dictionaries(st.sampled_from(KEYS), st.integers(min_value=-5, max_value=5)).map(
    lambda counts: SignedVector(counts, 1))


def ms(**counts):
    return Multiset({GeneratorId(name, 0): count for name, count in counts.items()}, 0)


class TestExamples:
    def test_disjoint_union(self):
        assert disjoint_union(ms(a=1), ms(a=1, b=1)) == ms(a=2, b=1)
        assert disjoint_union(Multiset.empty(0), ms(a=3)) == ms(a=3)

    def test_difference(self):
        assert difference(ms(a=2, b=1), ms(a=1, c=3)) == ms(a=1, b=1)
        assert difference(ms(a=2), ms(a=2)) == Multiset.empty(0)

    def test_meet_join(self):
        low, high = meet_join(ms(a=2, b=1), ms(a=1, c=1))
        assert low == ms(a=1)
        assert high == ms(a=2, b=1, c=1)
        assert meet(ms(a=1), ms(c=1)) == Multiset.empty()

    def test_parts_of_simplex_boundary(self):
        e01, e02, e12 = (GeneratorId(name, 1) for name in ("01", "02", "12"))
        neg, pos = parts(SignedVector({e01: 1, e02: -1, e12: 1}))
        assert neg == Multiset.subset([e02])
        assert pos == Multiset.subset([e01, e12])

    def test_parts_with_multiplicity(self):
        neg, pos = parts(SignedVector({A: 1, B: -2}))
        assert neg == ms(b=2)
        assert pos == ms(a=1)

    def test_is_radical(self):
        assert is_radical(ms(a=1, b=1))
        assert not is_radical(ms(a=2))
        assert is_radical(Multiset.empty())

    def test_zero_counts_are_dropped(self):
        assert ms(a=0, b=1) == ms(b=1)
        assert len(ms(a=0)) == 0

    def test_repr_is_canonical(self):
        assert repr(ms(b=1, a=2)) == "{a:2, b:1}"


class TestErrors:
    def test_negative_count(self):
        with pytest.raises(NegativeCountError):
            Multiset({A: -1})

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            disjoint_union(ms(a=1), Multiset.subset([KEYS[0]]))
        with pytest.raises(DimensionMismatchError):
            Multiset({A: 1, KEYS[0]: 1})

    def test_overflow(self):
        with pytest.raises(CountOverflowError):
            disjoint_union(Multiset({A: MAX_COUNT}), Multiset({A: 1}))

    def test_bad_generator_names(self):
        with pytest.raises(ValueError):
            GeneratorId("two words", 0)
        with pytest.raises(ValueError):
            GeneratorId("x", -1)


class TestLaws:
    @given(multisets, multisets)
    def test_disjoint_union_commutes(self, s, t):
        assert s + t == t + s

    @given(multisets, multisets, multisets)
    def test_disjoint_union_associates(self, s, t, u):
        assert (s + t) + u == s + (t + u)

    @given(multisets)
    def test_empty_is_unit(self, s):
        assert s + Multiset.empty(1) == s

    @given(multisets, multisets)
    def test_difference_and_meet_rebuild(self, s, t):
        assert disjoint_union(difference(s, t), meet(s, t)) == s

    @given(multisets, multisets)
    def test_absorption(self, s, t):
        assert (s & (s | t)) == s
        assert (s | (s & t)) == s

    @given(vectors)
    def test_parts_split_the_vector(self, v):
        neg, pos = parts(v)
        assert not meet(neg, pos)
        assert pos.to_vector() - neg.to_vector() == v

    @given(multisets, multisets)
    def test_parts_inverts_disjoint_pairs(self, m, p):
        common = meet(m, p)
        m, p = difference(m, common), difference(p, common)
        assert parts(p.to_vector() - m.to_vector()) == (m, p)

    @given(st.lists(st.sampled_from(KEYS), unique=True), st.lists(st.sampled_from(KEYS), unique=True))
    def test_radical_union_iff_disjoint(self, first, second):
        s, t = Multiset.subset(first, 1), Multiset.subset(second, 1)
        assert is_radical(union_all([s, t], 1)) == pairwise_disjoint([s, t])
