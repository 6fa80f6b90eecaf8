"""Action homomorphisms (blocks, cosets, orbits) and block systems.

Kernels and preimages use the diagonal group D = <(phi(g), g)> acting on
image points followed by source points.  Its order equals |G|, so its chain
is built exactly by random Schreier-Sims with that target.  Basing D on the
image points first makes the stabilizer of those points the kernel.
"""
from __future__ import annotations

from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .chain import build_chain
from .group import Group, GroupError, trivial_group
from .perm import DTYPE, Permutation

DEFAULT_COSET_CAP = 10 ** 5


class CapExceeded(GroupError):
    """A configured size cap was exceeded; exactness is unavailable."""


class Homomorphism:
    """Homomorphism from ``source`` onto a permutation group of degree ``image_degree``.

    ``map_arr`` sends a 0-based source image array to a 0-based image array.
    """

    def __init__(self, source: Group, image_degree: int, map_arr: Callable[[np.ndarray], np.ndarray],
                 description: str = ""):
        self.source = source
        self.image_degree = image_degree
        self.map_arr = map_arr
        self.description = description

    def __call__(self, g: Permutation) -> Permutation:
        return Permutation(self.map_arr(g.arr))

    @property
    def is_identity(self) -> bool:
        return self.description == "identity"

    @cached_property
    def image(self) -> Group:
        if self.is_identity:
            return self.source
        gens = [self(g) for g in self.source.gens]
        return Group(self.image_degree, gens, order=self._image_order)

    @cached_property
    def _diag(self):
        G = self.source
        d1 = self.image_degree
        gens = [np.concatenate([self.map_arr(g.arr), g.arr + d1]).astype(DTYPE) for g in G.gens]
        img_moved = set()
        ident = np.arange(d1)
        for g in gens:
            img_moved.update(np.nonzero(g[:d1] != ident)[0].tolist())
        prefix = sorted(img_moved)
        ch = build_chain(d1 + G.degree, gens, order=G.order, base_prefix=prefix)
        return ch, len(prefix)

    @cached_property
    def _image_order(self) -> int:
        ch, k = self._diag
        o = 1
        for lv in ch.levels[:k]:
            o *= len(lv)
        return o

    @cached_property
    def kernel(self) -> Group:
        if self.is_identity:
            return trivial_group(self.source.degree)
        ch, k = self._diag
        d1 = self.image_degree
        korder = 1
        for lv in ch.levels[k:]:
            korder *= len(lv)
        gens = ch.levels[k].gens if len(ch.levels) > k else []
        return Group(self.source.degree, [Permutation(g[d1:] - d1) for g in gens], order=korder)

    def lift(self, y: Permutation) -> Permutation:
        """Some preimage of an image element."""
        ch, k = self._diag
        d1 = self.image_degree
        x = y.arr
        z = ch.identity
        for lv in ch.levels[:k]:
            j = lv.index[x[lv.point]]
            if j < 0:
                raise GroupError("element not in image")
            if j:
                x = lv.inv_reps[j][:d1][x]
                z = z[lv.reps[j]]
        if not (x == np.arange(d1)).all():
            raise GroupError("element not in image")
        return Permutation(z[d1:] - d1)

    def preimage(self, K: Group) -> Group:
        if self.is_identity:
            return K
        ker = self.kernel
        gens = list(ker.gens) + [self.lift(g) for g in K.gens]
        return Group(self.source.degree, gens, order=K.order * ker.order)

    def image_of(self, H: Group, order: int | None = None) -> Group:
        return Group(self.image_degree, [self(h) for h in H.gens], order=order)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Composite ``other o self`` (self first)."""
        if other.source.degree != self.image_degree:
            raise GroupError("homomorphisms do not compose")
        if self.is_identity:
            return Homomorphism(self.source, other.image_degree, other.map_arr, other.description)
        if other.is_identity:
            return self
        f, g = self.map_arr, other.map_arr
        return Homomorphism(self.source, other.image_degree, lambda a: g(f(a)),
                            f"{self.description}; {other.description}".strip("; "))


def identity_hom(G: Group) -> Homomorphism:
    return Homomorphism(G, G.degree, lambda a: a, "identity")


# -- concrete actions -------------------------------------------------------

def block_action(G: Group, blocks: Sequence[Sequence[int]]) -> Homomorphism:
    """Action on a G-invariant partition given by 0-based blocks."""
    block_of = np.full(G.degree, -1, dtype=np.int64)
    for j, b in enumerate(blocks):
        block_of[list(b)] = j
    if (block_of < 0).any():
        raise GroupError("blocks must partition the domain")
    reps = np.array([b[0] for b in blocks])
    for g in G.gens:
        for b in blocks:
            imgs = block_of[g.arr[list(b)]]
            if (imgs != imgs[0]).any():
                raise GroupError("partition is not invariant under the group")

    def mp(a: np.ndarray) -> np.ndarray:
        return block_of[a[reps]].astype(DTYPE)

    return Homomorphism(G, len(blocks), mp, f"blocks({len(blocks)})")


def orbit_action(G: Group, points: Sequence[int]) -> Homomorphism:
    """Restriction to a G-invariant set of 0-based points."""
    pts = np.array(sorted(points))
    pos = np.full(G.degree, -1, dtype=np.int64)
    pos[pts] = np.arange(len(pts))
    for g in G.gens:
        if (pos[g.arr[pts]] < 0).any():
            raise GroupError("point set is not invariant under the group")

    def mp(a: np.ndarray) -> np.ndarray:
        return pos[a[pts]].astype(DTYPE)

    return Homomorphism(G, len(pts), mp, f"orbit({len(pts)})")


def _coset_canonical(H: Group, x: np.ndarray) -> np.ndarray:
    cur = x
    for lv in H.chain.levels:
        orb = np.asarray(lv.orbit)
        j = int(np.argmin(cur[orb]))
        if j:
            cur = cur[lv.reps[j]]
    return cur


def coset_action(G: Group, H: Group, cap: int = DEFAULT_COSET_CAP) -> Homomorphism:
    """Action of G on the right cosets of H by right multiplication."""
    index = G.order // H.order
    if index > cap:
        raise CapExceeded(f"coset index {index} exceeds cap {cap}")
    def key(c: np.ndarray) -> bytes:
        return c.tobytes()

    start = _coset_canonical(H, np.arange(G.degree, dtype=DTYPE))
    reps = [start]
    lookup = {key(start): 0}
    gl = [g.arr for g in G.gens]
    for c in reps:
        for g in gl:
            nc = _coset_canonical(H, g[c])
            k = key(nc)
            if k not in lookup:
                lookup[k] = len(reps)
                reps.append(nc)
    if len(reps) != index:
        raise GroupError("H is not a subgroup of G")

    def mp(a: np.ndarray) -> np.ndarray:
        out = np.empty(len(reps), dtype=DTYPE)
        for i, c in enumerate(reps):
            out[i] = lookup[key(_coset_canonical(H, a[c]))]
        return out

    return Homomorphism(G, len(reps), mp, f"cosets({len(reps)})")


def action_homomorphism(G: Group, action, *, kind: str | None = None,
                        cap: int = DEFAULT_COSET_CAP) -> Homomorphism:
    """Dispatch: ``kind`` in {'blocks', 'cosets', 'orbit'}; inferred when omitted
    (a Group means cosets, a list of lists means blocks, a flat list an orbit)."""
    if kind is None:
        if isinstance(action, Group):
            kind = "cosets"
        elif action and isinstance(action[0], (list, tuple, set, frozenset)):
            kind = "blocks"
        else:
            kind = "orbit"
    if kind == "cosets":
        return coset_action(G, action, cap)
    if kind == "blocks":
        return block_action(G, [sorted(b) for b in action])
    if kind == "orbit":
        return orbit_action(G, action)
    raise GroupError(f"unknown action kind {kind!r}")


def normal_orbit_quotient(G: Group, N: Group) -> Homomorphism | None:
    """Action on the N-orbits when its kernel is exactly N, else None."""
    if N.is_trivial():
        return identity_hom(G)
    orbs = N.orbits()
    hom = block_action(G, orbs)
    if hom.kernel.order == N.order:
        return hom
    return None


def quotient_hom(G: Group, N: Group, cap: int = DEFAULT_COSET_CAP) -> Homomorphism:
    """A homomorphism with kernel N: N-orbit action when faithful enough,
    else the coset action (regular representation of G/N)."""
    hom = normal_orbit_quotient(G, N)
    if hom is not None:
        return hom
    return coset_action(G, N, cap)


# -- block systems ------------------------------------------------------------

def _minimal_block(gens: list[list[int]], points: list[int], alpha: int, beta: int) -> dict[int, int]:
    parent = {p: p for p in points}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[find(beta)] = find(alpha)
    queue = [(alpha, beta)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[v] = u
                queue.append((u, v))
    return {p: find(p) for p in points}


def minimal_block_systems(G: Group) -> list[list[list[int]]]:
    """All minimal nontrivial block systems (1-based blocks) of G on its moved points."""
    pts = G.moved_points()
    if not pts:
        return []
    alpha = pts[0]
    if set(G._orbit0(alpha)) != set(pts):
        raise GroupError("group is not transitive on its moved points")
    stab = G.point_stabilizer(alpha + 1)
    seen_beta = {alpha}
    candidates = []
    gl = [g.arr.tolist() for g in G.gens]
    for beta in pts:
        if beta in seen_beta:
            continue
        orb = stab._orbit0(beta)
        seen_beta.update(orb)
        labels = _minimal_block(gl, pts, alpha, beta)
        root = labels[alpha]
        block_alpha = frozenset(p for p in pts if labels[p] == root)
        if len(block_alpha) == len(pts):
            continue
        candidates.append((block_alpha, labels))
    systems = []
    seen = set()
    for block, labels in candidates:
        if any(other < block for other, _ in candidates):
            continue
        if block in seen:
            continue
        seen.add(block)
        groups: dict[int, list[int]] = {}
        for p in pts:
            groups.setdefault(labels[p], []).append(p + 1)
        systems.append(sorted(sorted(b) for b in groups.values()))
    return systems


def is_primitive(G: Group) -> bool:
    return not minimal_block_systems(G)
