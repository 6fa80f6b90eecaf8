"""Full element enumeration for groups below the exact-mode cap.

Element ``r`` is the row of rank ``r`` in the chain's mixed-radix order, so
rank lookups are a vectorised sift rather than a hash table.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .actions import CapExceeded
from .group import Group
from .perm import DTYPE, Permutation

ROW_BATCH = 1 << 17


class ElementTable:
    def __init__(self, G: Group, cap: int):
        if G.order > cap:
            raise CapExceeded(f"group order {G.order} exceeds exact-mode cap {cap}")
        self.group = G
        self.chain = G.chain
        self.E = self.chain.enumerate()
        self.n = self.E.shape[0]

    def rank(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        if X.shape[0] <= ROW_BATCH:
            return self.chain.rank(X)
        return np.concatenate([self.chain.rank(X[i:i + ROW_BATCH])
                               for i in range(0, X.shape[0], ROW_BATCH)])

    def index_of(self, p: Permutation) -> int:
        return int(self.rank(p.arr)[0])

    def perm(self, i: int) -> Permutation:
        return Permutation(self.E[i])

    def mul(self, a, b) -> np.ndarray:
        """Indices of E[a]*E[b] (a first), broadcasting a and b."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        X = np.take_along_axis(self.E[b.ravel()], self.E[a.ravel()], axis=1)
        return self.rank(X).reshape(a.shape)

    def right_mul_map(self, g: np.ndarray) -> np.ndarray:
        """Index permutation x -> x*g."""
        return self.rank(g[self.E])

    def conj_map(self, g: np.ndarray) -> np.ndarray:
        """Index permutation x -> g^-1 x g."""
        ginv = np.empty_like(g)
        ginv[g] = np.arange(g.shape[0], dtype=DTYPE)
        return self.rank(g[self.E[:, ginv]])

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.empty_like(self.E)
        rows = np.arange(self.n)[:, None]
        inv[rows, self.E] = np.arange(self.E.shape[1], dtype=DTYPE)[None, :]
        return self.rank(inv)

    @cached_property
    def orders(self) -> np.ndarray:
        out = np.ones(self.n, dtype=np.int64)
        cur = self.E.copy()
        ident = self.chain.identity
        alive = np.nonzero((cur != ident).any(axis=1))[0]
        k = 1
        while alive.size:
            k += 1
            cur[alive] = np.take_along_axis(self.E[alive], cur[alive], axis=1)
            done = (cur[alive] == ident).all(axis=1)
            out[alive[done]] = k
            alive = alive[~done]
        out[0] = 1
        return out

    @cached_property
    def gen_conj_maps(self) -> list[np.ndarray]:
        return [self.conj_map(g.arr) for g in self.group.gens]

    @cached_property
    def class_labels(self) -> np.ndarray:
        """Conjugacy class label of every element; labels ordered by smallest member."""
        n = self.n
        if not self.gen_conj_maps:
            return np.zeros(n, dtype=np.int64)
        src = np.concatenate([np.arange(n)] * len(self.gen_conj_maps))
        dst = np.concatenate(self.gen_conj_maps)
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        first = np.full(labels.max() + 1, n, dtype=np.int64)
        np.minimum.at(first, labels, np.arange(n))
        order = np.argsort(first)
        relabel = np.empty_like(order)
        relabel[order] = np.arange(order.size)
        return relabel[labels]

    @cached_property
    def class_reps(self) -> np.ndarray:
        """Smallest-index member of each class, identity first."""
        labels = self.class_labels
        first = np.full(labels.max() + 1, self.n, dtype=np.int64)
        np.minimum.at(first, labels, np.arange(self.n))
        return first

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return np.bincount(self.class_labels)

    def class_of(self, i: int) -> np.ndarray:
        return np.nonzero(self.class_labels == self.class_labels[i])[0]

    # -- subgroups as boolean masks -------------------------------------------
    def closure_mask(self, gen_idx) -> np.ndarray:
        """Subgroup generated by the given element indices."""
        gen_idx = np.unique(np.asarray(gen_idx, dtype=np.int64))
        mask = np.zeros(self.n, dtype=bool)
        mask[0] = True
        if gen_idx.size == 0:
            return mask
        maps = None
        if gen_idx.size * self.n <= 4 * 10 ** 7:
            maps = [self.right_mul_map(self.E[g]) for g in gen_idx]
        frontier = np.array([0])
        while frontier.size:
            if maps is not None:
                new = np.concatenate([m[frontier] for m in maps])
            else:
                new = self.mul(frontier[:, None], gen_idx[None, :]).ravel()
            new = np.unique(new)
            new = new[~mask[new]]
            mask[new] = True
            frontier = new
        return mask

    def mask_of(self, H: Group) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        mask[self.rank(H.chain.enumerate())] = True
        return mask

    def group_of(self, mask: np.ndarray) -> Group:
        """Group handle for a subgroup mask, with a small generating set."""
        idx = np.nonzero(mask)[0]
        size = idx.size
        gens: list[int] = []
        cur = np.zeros(self.n, dtype=bool)
        cur[0] = True
        count = 1
        for i in idx:
            if count == size:
                break
            if not cur[i]:
                gens.append(int(i))
                cur = self.closure_mask(gens)
                count = int(cur.sum())
        return Group(self.group.degree, [self.perm(i) for i in gens], order=size)

    def conjugate_mask(self, mask: np.ndarray, g_idx: int) -> np.ndarray:
        idx = np.nonzero(mask)[0]
        g = self.E[g_idx]
        ginv = np.empty_like(g)
        ginv[g] = np.arange(g.shape[0], dtype=DTYPE)
        out = np.zeros(self.n, dtype=bool)
        out[self.rank(g[self.E[idx][:, ginv]])] = True
        return out
