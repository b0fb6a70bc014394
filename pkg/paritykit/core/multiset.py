"""
ParityKit Multiset Module
=========================

Overview:
---------
Finite multisets and signed integer vectors over the generators of a single
dimension. A Multiset is an element of the free commutative monoid on one
dimension's generators (the positive cone of the chain group), a SignedVector
an element of the free abelian group. Together they carry the lattice and monoid
algebra used by every other module: disjoint union, truncated difference,
pointwise meet and join, and the split of a vector into disjoint negative and
positive parts.

Key Features:
-------------
1. Immutable, hashable values with canonical (dim, name) ordering.
2. Counts are bounded to a machine word; overflow raises instead of wrapping.
3. Operands of different dimensions are rejected, never coerced.

Usage:
------
    from paritykit.core.multiset import GeneratorId, Multiset, parts

    a, b = GeneratorId("a", 0), GeneratorId("b", 0)
    s = Multiset({a: 2, b: 1})
    neg, pos = parts(s.to_vector() - Multiset({b: 3}).to_vector())
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from paritykit.core.errors import CountOverflowError, DimensionMismatchError, NegativeCountError

MAX_COUNT = 2 ** 63 - 1

_TOKEN = re.compile(r"^\S+$")


def _checked(count: int) -> int:
    if abs(count) > MAX_COUNT:
        raise CountOverflowError(f"Count {count} exceeds the machine-word bound {MAX_COUNT}")
    return count


@dataclass(frozen=True, order=True)
class GeneratorId:
    """A named generator of a graded set. Ordered by (dim, name)."""
    dim: int
    name: str

    def __init__(self, name: str, dim: int):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "dim", dim)
        self.__post_init__()

    def __post_init__(self):
        if not isinstance(self.name, str) or not _TOKEN.match(self.name) or not self.name.isprintable():
            raise ValueError(f"Generator name must be a printable token without whitespace: {self.name!r}")
        if not isinstance(self.dim, int) or self.dim < 0:
            raise ValueError(f"Generator dimension must be a natural number: {self.dim!r}")

    @property
    def sort_key(self) -> Tuple[int, str]:
        return self.dim, self.name

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"GeneratorId({self.name!r}, {self.dim})"


def _common_dim(keys: Iterable[GeneratorId], declared: Optional[int]) -> Optional[int]:
    dim = declared
    for key in keys:
        if dim is None:
            dim = key.dim
        elif key.dim != dim:
            raise DimensionMismatchError(f"Generator {key!r} does not have dimension {dim}")
    return dim


def _join_dims(left: Optional[int], right: Optional[int]) -> Optional[int]:
    if left is not None and right is not None and left != right:
        raise DimensionMismatchError(f"Operands live in dimensions {left} and {right}")
    return left if left is not None else right


class _Graded:
    """Shared storage for Multiset and SignedVector: a frozen mapping with a dimension."""

    __slots__ = ("_entries", "_dim", "_hash")

    def __init__(self, entries: Mapping[GeneratorId, int], dim: Optional[int]):
        ordered = dict(sorted(entries.items()))
        self._entries = MappingProxyType(ordered)
        self._dim = _common_dim(ordered, dim)
        self._hash = None

    @property
    def dim(self) -> Optional[int]:
        """Dimension of the entries; None only for an undeclared zero element."""
        return self._dim

    def count(self, key: GeneratorId) -> int:
        return self._entries.get(key, 0)

    def __getitem__(self, key: GeneratorId) -> int:
        return self.count(key)

    def __contains__(self, key: object) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[GeneratorId]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def items(self):
        return self._entries.items()

    def support(self) -> Tuple[GeneratorId, ...]:
        return tuple(self._entries)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._entries.items())))
        return self._hash

    def _with_dim(self, other: "_Graded") -> Optional[int]:
        return _join_dims(self._dim, other._dim)


class Multiset(_Graded):
    """A finite multiset of generators of one dimension (no zero counts stored)."""

    __slots__ = ()

    def __init__(self, entries: Optional[Mapping[GeneratorId, int]] = None, dim: Optional[int] = None):
        cleaned: Dict[GeneratorId, int] = {}
        for key, count in (entries or {}).items():
            if not isinstance(count, int) or count < 0:
                raise NegativeCountError(f"Illegal multiset count {count!r} for {key!r}")
            if count:
                cleaned[key] = _checked(count)
        super().__init__(cleaned, dim)

    @classmethod
    def from_iterable(cls, keys: Iterable[GeneratorId], dim: Optional[int] = None) -> "Multiset":
        counts: Dict[GeneratorId, int] = {}
        for key in keys:
            counts[key] = _checked(counts.get(key, 0) + 1)
        return cls(counts, dim)

    @classmethod
    def subset(cls, keys: Iterable[GeneratorId], dim: Optional[int] = None) -> "Multiset":
        return cls({key: 1 for key in keys}, dim)

    @classmethod
    def empty(cls, dim: Optional[int] = None) -> "Multiset":
        return cls({}, dim)

    def total(self) -> int:
        """Sum of all counts; the augmentation of a dimension-0 chain."""
        return _checked(sum(self._entries.values()))

    def elements(self) -> Iterator[GeneratorId]:
        """Iterate keys with multiplicity."""
        for key, count in self._entries.items():
            for _ in range(count):
                yield key

    def issubset(self, other: "Multiset") -> bool:
        self._with_dim(other)
        return all(count <= other.count(key) for key, count in self._entries.items())

    def __le__(self, other: "Multiset") -> bool:
        return self.issubset(other)

    def isdisjoint(self, other: "Multiset") -> bool:
        return not meet(self, other)

    def to_vector(self) -> "SignedVector":
        return SignedVector(dict(self._entries), self._dim)

    def __add__(self, other: "Multiset") -> "Multiset":
        return disjoint_union(self, other)

    def __and__(self, other: "Multiset") -> "Multiset":
        return meet(self, other)

    def __or__(self, other: "Multiset") -> "Multiset":
        return join(self, other)

    def __repr__(self):
        body = ", ".join(f"{key.name}:{count}" for key, count in self._entries.items())
        return f"{{{body}}}"


class SignedVector(_Graded):
    """An element of the free abelian group on one dimension's generators."""

    __slots__ = ()

    def __init__(self, entries: Optional[Mapping[GeneratorId, int]] = None, dim: Optional[int] = None):
        cleaned = {key: _checked(value) for key, value in (entries or {}).items() if value}
        super().__init__(cleaned, dim)

    @classmethod
    def from_parts(cls, neg: Multiset, pos: Multiset) -> "SignedVector":
        return pos.to_vector() - neg.to_vector()

    def __add__(self, other: "SignedVector") -> "SignedVector":
        dim = self._with_dim(other)
        summed = dict(self._entries)
        for key, value in other.items():
            summed[key] = _checked(summed.get(key, 0) + value)
        return SignedVector(summed, dim)

    def __neg__(self) -> "SignedVector":
        return SignedVector({key: -value for key, value in self._entries.items()}, self._dim)

    def __sub__(self, other: "SignedVector") -> "SignedVector":
        return self + (-other)

    def scale(self, factor: int) -> "SignedVector":
        return SignedVector({key: _checked(value * factor) for key, value in self._entries.items()}, self._dim)

    def parts(self) -> Tuple[Multiset, Multiset]:
        return parts(self)

    def __repr__(self):
        body = " ".join(f"{'+' if value > 0 else '-'}{abs(value) if abs(value) != 1 else ''}{key.name}"
                        for key, value in self._entries.items())
        return f"({body or '0'})"


def disjoint_union(left: Multiset, right: Multiset) -> Multiset:
    dim = left._with_dim(right)
    summed = dict(left.items())
    for key, count in right.items():
        summed[key] = _checked(summed.get(key, 0) + count)
    return Multiset(summed, dim)


def difference(left: Multiset, right: Multiset) -> Multiset:
    """Truncated difference (S - T) v 0."""
    dim = left._with_dim(right)
    return Multiset({key: max(count - right.count(key), 0) for key, count in left.items()}, dim)


def meet(left: Multiset, right: Multiset) -> Multiset:
    dim = left._with_dim(right)
    return Multiset({key: min(count, right.count(key)) for key, count in left.items()}, dim)


def join(left: Multiset, right: Multiset) -> Multiset:
    dim = left._with_dim(right)
    merged = dict(left.items())
    for key, count in right.items():
        merged[key] = max(merged.get(key, 0), count)
    return Multiset(merged, dim)


def meet_join(left: Multiset, right: Multiset) -> Tuple[Multiset, Multiset]:
    return meet(left, right), join(left, right)


def parts(vector: SignedVector) -> Tuple[Multiset, Multiset]:
    """Split a vector into its (negative, positive) parts; the two are disjoint."""
    neg = Multiset({key: -value for key, value in vector.items() if value < 0}, vector.dim)
    pos = Multiset({key: value for key, value in vector.items() if value > 0}, vector.dim)
    return neg, pos


def is_radical(multiset: Multiset) -> bool:
    return all(count == 1 for _, count in multiset.items())


def union_all(multisets: Iterable[Multiset], dim: Optional[int] = None) -> Multiset:
    """Disjoint union of a family."""
    result = Multiset.empty(dim)
    for item in multisets:
        result = disjoint_union(result, item)
    return result


def pairwise_disjoint(multisets: Iterable[Multiset]) -> bool:
    seen: Dict[GeneratorId, int] = {}
    for item in multisets:
        for key in item:
            if key in seen:
                return False
            seen[key] = 1
    return True


if __name__ == "__main__":
    zero, one, two = (GeneratorId(name, 0) for name in "012")
    boundary = SignedVector({GeneratorId("01", 1): 1, GeneratorId("02", 1): -1, GeneratorId("12", 1): 1})
    print(f"Boundary: {boundary}")
    print(f"Parts: {parts(boundary)}")
    print(f"Difference: {difference(Multiset.subset([zero, one]), Multiset.subset([one, two]))}")
