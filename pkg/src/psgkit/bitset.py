"""Fixed-width bit vectors used for subsets of elements or points."""

from __future__ import annotations

from typing import Iterable, Iterator


class SubsetMask:
    """A subset of {0, .., width-1} stored as an integer bitmask.

    Instances are immutable and hashable; set operations require equal
    widths (the carrier must match).
    """

    __slots__ = ("width", "bits")

    def __init__(self, width: int, bits: int = 0):
        if width < 0:
            raise ValueError("width must be nonnegative")
        if bits < 0:
            raise ValueError("bits must be nonnegative")
        if bits >> width:
            raise ValueError(f"bit set outside carrier of width {width}")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("SubsetMask is immutable")

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValueError(f"index {i} outside carrier of width {width}")
            bits |= 1 << i
        return cls(width, bits)

    @classmethod
    def full(cls, width: int) -> "SubsetMask":
        return cls(width, (1 << width) - 1)

    @classmethod
    def empty(cls, width: int) -> "SubsetMask":
        return cls(width, 0)

    @classmethod
    def singleton(cls, width: int, i: int) -> "SubsetMask":
        return cls.from_indices(width, (i,))

    def indices(self) -> list[int]:
        return [i for i in range(self.width) if self.bits >> i & 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.width and bool(self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubsetMask)
            and self.width == other.width
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.width, self.bits))

    def __repr__(self) -> str:
        return f"SubsetMask({self.width}, {{{', '.join(map(str, self))}}})"

    def _check(self, other: "SubsetMask") -> None:
        if self.width != other.width:
            raise ValueError("carrier widths differ")

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.width, self.bits | other.bits)

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.width, self.bits & other.bits)

    def __sub__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.width, self.bits & ~other.bits)

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.width, ~self.bits & (1 << self.width) - 1)

    def issubset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0


def iter_submasks(bits: int) -> Iterator[int]:
    """All submasks of an integer bitmask, including 0 and bits itself."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


def iter_nonempty_submasks(bits: int) -> Iterator[int]:
    for sub in iter_submasks(bits):
        if sub:
            yield sub


def bit_indices(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out
