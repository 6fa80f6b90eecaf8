"""Permutation groups backed by a stabilizer chain."""
from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .chain import StabChain, build_chain
from .perm import DTYPE, Permutation, commutator


class GroupError(ValueError):
    pass


class Group:
    """Finite permutation group on {1..degree}.

    ``order`` may be supplied when it is known by construction; the chain
    is then built by random Schreier-Sims up to that order, which is exact.
    """

    def __init__(self, degree: int, gens: Iterable[Permutation] = (), *, order: int | None = None,
                 name: str | None = None, chain: StabChain | None = None):
        if degree < 1:
            raise GroupError("degree must be at least 1")
        gens = list(gens)
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError(f"expected Permutation, got {type(g).__name__}")
            if g.degree != degree:
                raise GroupError(f"generator degree {g.degree} differs from {degree}")
        self.degree = degree
        self.gens: tuple[Permutation, ...] = tuple(g for g in gens if not g.is_identity())
        self.name = name
        self._known_order = order
        if chain is not None:
            self.__dict__["chain"] = chain

    # -- chain and order ----------------------------------------------------
    @cached_property
    def chain(self) -> StabChain:
        return build_chain(self.degree, [g.arr for g in self.gens], order=self._known_order)

    @property
    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:  # pragma: no cover - only for small groups
        return self.order

    def is_trivial(self) -> bool:
        return not self.gens

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise GroupError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self.chain.contains(p.arr)

    __contains__ = contains

    def random_element(self, seed: int | random.Random) -> Permutation:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        return Permutation(self.chain.random_element(rng))

    def elements(self) -> list[Permutation]:
        return [Permutation(row) for row in self.chain.enumerate()]

    # -- orbits -------------------------------------------------------------
    def orbit(self, point: int) -> set[int]:
        if not 1 <= point <= self.degree:
            raise GroupError(f"point {point} out of range 1..{self.degree}")
        return {p + 1 for p in self._orbit0(point - 1)}

    def _orbit0(self, pt: int) -> list[int]:
        gl = [g.arr.tolist() for g in self.gens]
        seen = {pt}
        out = [pt]
        for x in out:
            for g in gl:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return out

    def orbits(self) -> list[list[int]]:
        """All orbits (0-based, sorted), including fixed points."""
        seen = np.zeros(self.degree, dtype=bool)
        res = []
        for p in range(self.degree):
            if not seen[p]:
                orb = sorted(self._orbit0(p))
                seen[orb] = True
                res.append(orb)
        return res

    def moved_points(self) -> list[int]:
        """0-based points moved by some generator."""
        if not self.gens:
            return []
        ident = np.arange(self.degree)
        mask = np.zeros(self.degree, dtype=bool)
        for g in self.gens:
            mask |= g.arr != ident
        return [int(i) for i in np.nonzero(mask)[0]]

    def is_transitive(self) -> bool:
        return len(self._orbit0(0)) == self.degree

    # -- subgroups ----------------------------------------------------------
    def subgroup(self, gens: Iterable[Permutation], *, order: int | None = None,
                 name: str | None = None) -> "Group":
        return Group(self.degree, gens, order=order, name=name)

    def is_subgroup_of(self, other: "Group") -> bool:
        return all(other.contains(g) for g in self.gens)

    def is_normal_in(self, other: "Group") -> bool:
        return self.is_subgroup_of(other) and all(
            self.contains(h.conjugate(g)) for h in self.gens for g in other.gens)

    def same_as(self, other: "Group") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def conjugate(self, g: Permutation) -> "Group":
        return Group(self.degree, [h.conjugate(g) for h in self.gens], order=self.order)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "Group":
        """Stabilizer of the given 0-based points, via a chain with those points first."""
        pts = [int(p) for p in points]
        if not self.gens:
            return self
        ch = build_chain(self.degree, [g.arr for g in self.gens], order=self.order,
                         base_prefix=pts)
        k = len(pts)
        sub_order = 1
        for lv in ch.levels[k:]:
            sub_order *= len(lv)
        gens = ch.levels[k].gens if len(ch.levels) > k else []
        return Group(self.degree, [Permutation(g) for g in gens], order=sub_order)

    def point_stabilizer(self, point: int) -> "Group":
        """Stabilizer of a 1-based point."""
        return self.pointwise_stabilizer([point - 1])

    # -- closures -----------------------------------------------------------
    def normal_closure(self, seed: Iterable[Permutation], *, check: bool = True) -> "Group":
        return normal_closure(self, seed, check=check)

    def derived_subgroup(self) -> "Group":
        return derived_subgroup(self)

    def is_solvable(self) -> bool:
        return is_solvable(self)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Group{label} degree={self.degree} gens={len(self.gens)}>"


def group_from_generators(degree: int, gens: Iterable[Permutation], *, order: int | None = None,
                          name: str | None = None) -> Group:
    """Group handle with its chain built eagerly."""
    G = Group(degree, gens, order=order, name=name)
    G.chain  # noqa: B018 - force construction
    return G


def trivial_group(degree: int) -> Group:
    return Group(degree, [], order=1, name="1")


def contains(G: Group, p: Permutation) -> bool:
    return G.contains(p)


def orbit(G: Group, point: int) -> set[int]:
    return G.orbit(point)


def random_element(G: Group, rng_seed: int) -> Permutation:
    return G.random_element(rng_seed)


def _closure_pass(chain: StabChain, gens: list[np.ndarray], conj: list[tuple[np.ndarray, np.ndarray]]) -> bool:
    added = False
    k = 0
    while k < len(gens):
        n = gens[k]
        for g, ginv in conj:
            c = g[n[ginv]]
            if not chain.contains(c):
                chain.extend(c)
                gens.append(c)
                added = True
        k += 1
    return added


def normal_closure(G: Group, seed: Iterable[Permutation], *, check: bool = True) -> Group:
    """Smallest normal subgroup of G containing ``seed``."""
    seed = [s for s in seed if not s.is_identity()]
    if check:
        for s in seed:
            if not G.contains(s):
                raise GroupError("seed element not in group")
    if not seed:
        return trivial_group(G.degree)
    conj = []
    for g in G.gens:
        conj.append((g.arr, g.inverse().arr))
    # keep only seeds that enlarge the chain: at most log2 |N| of them
    chain = StabChain(G.degree)
    gens = []
    for s in seed:
        if chain.extend(s.arr):
            gens.append(s.arr)
    rng = random.Random(1)
    while True:
        if not _closure_pass(chain, gens, conj):
            chain.verify_schreier()
            if not _closure_pass(chain, gens, conj):
                break
        chain.random_schreier_sims(gens, rng)
    return Group(G.degree, [Permutation(g) for g in gens], chain=chain)


def derived_subgroup(G: Group) -> Group:
    comms = []
    seen = set()
    for i, a in enumerate(G.gens):
        for b in G.gens[i + 1:]:
            c = commutator(a, b)
            if not c.is_identity() and c.key() not in seen:
                seen.add(c.key())
                comms.append(c)
    return normal_closure(G, comms, check=False)


def derived_series(G: Group) -> list[Group]:
    series = [G]
    while not series[-1].is_trivial():
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            break
        series.append(D)
    return series


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_abelian(G: Group) -> bool:
    return all((a * b) == (b * a) for i, a in enumerate(G.gens) for b in G.gens[i + 1:])


def group_to_json(G: Group) -> dict:
    return {"degree": G.degree, "generators": [g.cycles() for g in G.gens]}


def group_from_json(data) -> Group:
    """Parse ``{"degree": n, "generators": [[cycle, ...], ...]}`` (1-based cycles)."""
    if not isinstance(data, dict) or "degree" not in data or "generators" not in data:
        raise GroupError("group JSON needs 'degree' and 'generators'")
    degree = data["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise GroupError("degree must be a positive integer")
    gens = []
    for cycles in data["generators"]:
        if not isinstance(cycles, list) or not all(isinstance(c, list) for c in cycles):
            raise GroupError("each generator is a list of cycles")
        if not all(isinstance(x, int) and not isinstance(x, bool) for c in cycles for x in c):
            raise GroupError("cycle entries must be integers")
        try:
            gens.append(Permutation.from_cycles(degree, cycles))
        except ValueError as exc:
            raise GroupError(str(exc)) from exc
    return Group(degree, gens)


def restrict_to_support(G: Group) -> Group:
    """G acting on its moved points only; an isomorphic copy."""
    moved = G.moved_points()
    if len(moved) == G.degree or not moved:
        return G
    relabel = np.full(G.degree, -1, dtype=DTYPE)
    relabel[moved] = np.arange(len(moved), dtype=DTYPE)
    idx = np.array(moved)
    gens = [Permutation(relabel[g.arr[idx]]) for g in G.gens]
    return Group(len(moved), gens, order=G._known_order, name=G.name)


def subgroup_join(G: Group, parts: Iterable[Group]) -> Group:
    gens = [g for H in parts for g in H.gens]
    return Group(G.degree, gens)


def direct_product(G1: Group, G2: Group) -> Group:
    """G1 x G2 on the disjoint union of the domains (G1 first)."""
    d1, d2 = G1.degree, G2.degree
    gens = []
    for g in G1.gens:
        gens.append(Permutation(np.concatenate([g.arr, np.arange(d1, d1 + d2, dtype=DTYPE)])))
    for g in G2.gens:
        gens.append(Permutation(np.concatenate([np.arange(d1, dtype=DTYPE), g.arr + d1])))
    return Group(d1 + d2, gens, order=G1.order * G2.order)


def wreath_imprimitive(base: Group, top: Group) -> Group:
    """base wr top acting on ``top.degree`` blocks of ``base.degree`` points.

    Point ``(j, i)`` (block j, position i) is ``j*b + i`` in 0-based terms.
    """
    b, k = base.degree, top.degree
    n = b * k
    gens = []
    reps = [orb[0] for orb in top.orbits()]
    for j in reps:
        for g in base.gens:
            arr = np.arange(n, dtype=DTYPE)
            arr[j * b:(j + 1) * b] = g.arr + j * b
            gens.append(Permutation(arr))
    idx = np.arange(n)
    blk, pos = idx // b, idx % b
    for t in top.gens:
        gens.append(Permutation((t.arr[blk] * b + pos).astype(DTYPE)))
    return Group(n, gens, order=base.order ** k * top.order)
