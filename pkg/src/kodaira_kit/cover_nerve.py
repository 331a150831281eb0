"""Finite indexed covers and the simplices of their nerve."""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import IndexOutOfRange


@dataclass(frozen=True)
class Cover:
    size: int
    labels: tuple = field(default=())

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a cover needs at least one open set")
        labels = tuple(self.labels) or tuple(f"U{i}" for i in range(self.size))
        if len(labels) != self.size:
            raise ValueError("one label per open set")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def projective_standard(cls, n):
        """The ``n + 1`` affine charts ``{x_i != 0}`` of projective n-space."""
        return cls(n + 1, tuple(f"x{i} != 0" for i in range(n + 1)))


@dataclass(frozen=True, order=True)
class Simplex:
    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if not idx:
            raise ValueError("a simplex has at least one index")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"simplex indices must be strictly increasing: {idx}")
        if idx[0] < 0:
            raise IndexOutOfRange("negative chart index")
        object.__setattr__(self, "indices", idx)

    @property
    def dim(self):
        return len(self.indices) - 1

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i):
        return i in self.indices


def nerve(cover, p):
    """All ``p``-simplices (strictly increasing ``(p+1)``-tuples), in lex order."""
    if p < 0:
        return []
    return [Simplex(c) for c in combinations(range(cover.size), p + 1)]


def face(s, j):
    """``s`` with its ``j``-th index omitted."""
    if not 0 <= j < len(s.indices):
        raise IndexOutOfRange(f"face index {j} out of range for {s.indices}")
    if len(s.indices) == 1:
        raise IndexOutOfRange("a vertex has no faces")
    return Simplex(s.indices[:j] + s.indices[j + 1 :])
