"""Permutations of {1..n}.

Internally a permutation is a read-only numpy array of 0-based images; the
public surface (cycles, ``images``) is 1-based.  Products act left to right:
``p * q`` applies ``p`` first, then ``q``.
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

import numpy as np

DTYPE = np.int32


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class Permutation:
    __slots__ = ("arr", "_hash")

    def __init__(self, arr: np.ndarray, *, check: bool = False):
        arr = np.asarray(arr, dtype=DTYPE)
        if check:
            n = arr.shape[0]
            if n < 1:
                raise ValueError("degree must be at least 1")
            seen = np.zeros(n, dtype=bool)
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError("image out of range")
            seen[arr] = True
            if not seen.all():
                raise ValueError("not a bijection")
        if arr.flags.writeable:
            arr = _freeze(arr.copy())
        self.arr = arr
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(np.arange(degree, dtype=DTYPE))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from 1-based images: ``images[i-1]`` is the image of ``i``."""
        return cls(np.asarray(images, dtype=DTYPE) - 1, check=True)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles; cycles are applied left to right."""
        arr = np.arange(degree, dtype=DTYPE)
        for cyc in cycles:
            cyc = [int(c) - 1 for c in cyc]
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            if any(c < 0 or c >= degree for c in cyc):
                raise ValueError(f"cycle {cyc} outside 1..{degree}")
            if len(cyc) < 2:
                continue
            step = np.arange(degree, dtype=DTYPE)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                step[a] = b
            arr = step[arr]
        return cls(arr)

    # -- accessors ------------------------------------------------------
    @property
    def degree(self) -> int:
        return int(self.arr.shape[0])

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(x) + 1 for x in self.arr)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return int(self.arr[point - 1]) + 1

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        a = self.arr
        for i in range(self.degree):
            if seen[i] or a[i] == i:
                continue
            cyc = [i + 1]
            seen[i] = True
            j = int(a[i])
            while j != i:
                seen[j] = True
                cyc.append(j + 1)
                j = int(a[j])
            out.append(cyc)
        return out

    def cycle_lengths(self) -> list[int]:
        return [len(c) for c in self.cycles()]

    def is_identity(self) -> bool:
        return bool((self.arr == np.arange(self.degree)).all())

    def support(self) -> list[int]:
        return [int(i) + 1 for i in np.nonzero(self.arr != np.arange(self.degree))[0]]

    # -- algebra --------------------------------------------------------
    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.arr)
        inv[self.arr] = np.arange(self.degree, dtype=DTYPE)
        return Permutation(inv)

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = np.arange(self.degree, dtype=DTYPE)
        base = self.arr
        while k:
            if k & 1:
                result = base[result]
            base = base[base]
            k >>= 1
        return Permutation(result)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def order(self) -> int:
        return element_order(self)

    def parity(self) -> int:
        return sum(len(c) - 1 for c in self.cycles()) % 2

    # -- dunder ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.arr.shape == other.arr.shape and bool((self.arr == other.arr).all())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.arr.tobytes())
        return self._hash

    def key(self) -> bytes:
        return self.arr.tobytes()

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(degree={self.degree}, ())"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation(degree={self.degree}, {body})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Map ``i -> q(p(i))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(q.arr[p.arr])


def element_order(p: Permutation) -> int:
    return lcm(1, *p.cycle_lengths())


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def to_cycles_json(p: Permutation) -> list[list[int]]:
    return p.cycles()
