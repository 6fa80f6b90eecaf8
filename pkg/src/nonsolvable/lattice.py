"""Subgroups of small groups as boolean masks over an element table."""
from __future__ import annotations

import numpy as np

from .actions import CapExceeded
from .config import DEFAULT, Config
from .group import Group
from .perm import DTYPE
from .table import ElementTable


def _table(G: Group, cap: int) -> ElementTable:
    cache = G.__dict__.setdefault("_lattice_table", {})
    if cap not in cache:
        cache[cap] = ElementTable(G, cap)
    return cache[cap]


class MaskGroup:
    """A subgroup of the table's group held as a mask plus generator indices."""

    __slots__ = ("mask", "gens", "order")

    def __init__(self, mask: np.ndarray, gens: list[int]):
        self.mask = mask
        self.gens = gens
        self.order = int(mask.sum())

    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()


def _all_inverses(T: ElementTable) -> np.ndarray:
    E = T.E
    inv = np.empty_like(E)
    inv[np.arange(T.n)[:, None], E] = np.arange(E.shape[1], dtype=DTYPE)[None, :]
    return inv


def conjugates_of_element_by_all(T: ElementTable, x: int, inv: np.ndarray) -> np.ndarray:
    """Index of g^-1 x g for every g (row order of the table)."""
    X = T.E[x]
    # (g^-1 x g)[i] = g[x[ginv[i]]]
    Y = np.take_along_axis(T.E, X[inv], axis=1)
    return T.rank(Y)


def normalizer_mask(T: ElementTable, H: MaskGroup, inv: np.ndarray) -> np.ndarray:
    ok = np.ones(T.n, dtype=bool)
    for h in H.gens:
        ok &= H.mask[conjugates_of_element_by_all(T, h, inv)]
    return ok


def _class_histogram(T: ElementTable, mask: np.ndarray) -> bytes:
    return np.bincount(T.class_labels[mask], minlength=T.class_labels.max() + 1).tobytes()


def are_conjugate(T: ElementTable, A: MaskGroup, B: MaskGroup, inv: np.ndarray) -> bool:
    if A.order != B.order:
        return False
    ok = np.ones(T.n, dtype=bool)
    for a in A.gens:
        ok &= B.mask[conjugates_of_element_by_all(T, a, inv)]
        if not ok.any():
            return False
    return True


def solvable_subgroup_classes(G: Group, config: Config = DEFAULT, *, maximal_only: bool = False) -> list[Group]:
    """Representatives of the conjugacy classes of solvable subgroups.

    Every solvable subgroup has a normal subgroup of prime index, so the
    classes are reached from the trivial group by adjoining one element x of
    prime-power order that normalizes H with x^p in H.  With
    ``maximal_only`` only classes admitting no such extension are returned;
    these include every maximal solvable subgroup.
    """
    if G.order > config.lattice_cap:
        raise CapExceeded(f"group order {G.order} exceeds subgroup-lattice cap {config.lattice_cap}")
    T = _table(G, config.lattice_cap)
    inv = _all_inverses(T)
    orders = T.orders
    prime_of = np.zeros(T.n, dtype=np.int64)
    for i, o in enumerate(orders.tolist()):
        if o > 1:
            p = _smallest_prime(o)
            if _is_p_power(o, p):
                prime_of[i] = p
    candidates = np.nonzero(prime_of)[0]
    power_cache: dict[tuple[int, int], int] = {}

    def power(x: int, p: int) -> int:
        k = (x, p)
        if k not in power_cache:
            arr = T.E[x]
            y = arr
            for _ in range(p - 1):
                y = arr[y]
            power_cache[k] = int(T.rank(y)[0])
        return power_cache[k]

    trivial = np.zeros(T.n, dtype=bool)
    trivial[0] = True
    reps = [MaskGroup(trivial, [])]
    by_invariant: dict[tuple[int, bytes], list[int]] = {(1, _class_histogram(T, trivial)): [0]}
    extendable = [False]
    k = 0
    while k < len(reps):
        H = reps[k]
        N = normalizer_mask(T, H, inv) if H.gens else np.ones(T.n, dtype=bool)
        covered = H.mask.copy()
        hidx = np.nonzero(H.mask)[0]
        for x in candidates[N[candidates] & ~H.mask[candidates]]:
            x = int(x)
            if covered[x]:
                continue
            p = int(prime_of[x])
            if not H.mask[power(x, p)]:
                continue
            # K = H <x> is the union of the cosets H x^i
            mask = H.mask.copy()
            cur = hidx
            for _ in range(p - 1):
                cur = T.mul(cur, np.full(cur.shape, x))
                mask[cur] = True
            covered |= mask
            extendable[k] = True
            K = MaskGroup(mask, H.gens + [x])
            inv_key = (K.order, _class_histogram(T, mask))
            bucket = by_invariant.setdefault(inv_key, [])
            if any(are_conjugate(T, K, reps[j], inv) for j in bucket):
                continue
            bucket.append(len(reps))
            reps.append(K)
            extendable.append(False)
        k += 1
    out = []
    for K, ext in zip(reps, extendable):
        if maximal_only and ext:
            continue
        out.append(Group(G.degree, [T.perm(i) for i in K.gens], order=K.order))
    return out


def normalizer(Y: Group, K: Group, config: Config = DEFAULT) -> Group:
    """N_Y(K) for K <= Y, by testing every element of Y on the generators of K."""
    T = _table(Y, config.exact_cap)
    inv = _all_inverses(T)
    Kmask = T.mask_of(K)
    ok = np.ones(T.n, dtype=bool)
    for h in K.gens:
        ok &= Kmask[conjugates_of_element_by_all(T, T.index_of(h), inv)]
    return T.group_of(ok)


def product_order(Y: Group, X: Group, N: Group, config: Config = DEFAULT) -> int:
    """|X N| for subgroups X, N of Y."""
    T = _table(Y, config.exact_cap)
    inter = int((T.mask_of(X) & T.mask_of(N)).sum())
    return X.order * N.order // inter


def _smallest_prime(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
