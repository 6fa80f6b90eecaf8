"""Brute-force reference computations for small groups.

Nothing here touches the stabilizer chain: elements are enumerated by
breadth-first search over generator products, and every subgroup is a
boolean mask over that list.  Normal subgroups are joins of normal
closures of conjugacy classes; the Frattini subgroup is the intersection
of the cores of maximal subgroups, found from subgroup classes built by
joining cyclic subgroups of prime-power order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .actions import CapExceeded
from .group import Group, GroupError

NORMAL_CAP = 10_000
SUBGROUP_CAP = 2_000


class Oracle:
    def __init__(self, G: Group, cap: int = NORMAL_CAP):
        self.degree = G.degree
        gens = [g.arr.astype(np.int64) for g in G.gens]
        ident = np.arange(G.degree, dtype=np.int64)
        seen = {ident.tobytes()}
        elems = [ident]
        for x in elems:
            for g in gens:
                y = g[x]
                k = y.tobytes()
                if k not in seen:
                    if len(elems) >= cap:
                        raise CapExceeded(f"oracle refuses groups of order above {cap}")
                    seen.add(k)
                    elems.append(y)
        self.E = np.array(elems)
        self.n = len(elems)
        self._build_codes()
        self.inv = self.encode(np.argsort(self.E, axis=1))
        self.gens = [int(self.encode(g[None, :])[0]) for g in gens]
        self.table = None
        if self.n <= SUBGROUP_CAP:
            # row b holds e_a * e_b for every a
            self.table = np.stack([self.encode(self.E[b][self.E]) for b in range(self.n)], axis=1)

    # -- encoding ---------------------------------------------------------------
    def _build_codes(self):
        """Pick points whose images separate all elements, then mixed-radix codes."""
        base: list[int] = []
        key = np.zeros(self.n, dtype=np.int64)
        while len(np.unique(key)) < self.n:
            # greedily add the point that separates the most elements
            best, best_cnt = None, -1
            for p in range(self.degree):
                if p in base:
                    continue
                cnt = len(np.unique(key * self.degree + self.E[:, p]))
                if cnt > best_cnt:
                    best, best_cnt = p, cnt
            base.append(best)
            key = key * self.degree + self.E[:, best]
        self.base = np.array(base)
        self.order_idx = np.argsort(key)
        self.sorted_keys = key[self.order_idx]

    def encode(self, X: np.ndarray) -> np.ndarray:
        key = np.zeros(X.shape[0], dtype=np.int64)
        for p in self.base:
            key = key * self.degree + X[:, p]
        pos = np.searchsorted(self.sorted_keys, key)
        return self.order_idx[pos]

    def mul(self, a, b) -> np.ndarray:
        """Index of e_a * e_b (e_a applied first)."""
        a = np.atleast_1d(a)
        b = np.atleast_1d(b)
        if self.table is not None:
            return self.table[a, b]
        A, B = self.E[a], self.E[b]
        if A.shape[0] == 1 and B.shape[0] > 1:
            A = np.broadcast_to(A, B.shape)
        if B.shape[0] == 1 and A.shape[0] > 1:
            B = np.broadcast_to(B, A.shape)
        return self.encode(np.take_along_axis(B, A, axis=1))

    def conj_all(self, x: int) -> np.ndarray:
        """g^-1 x g for every g."""
        allg = np.arange(self.n)
        return self.mul(self.mul(self.inv, np.full(self.n, x)), allg)

    # -- subgroups --------------------------------------------------------------
    def closure(self, gens) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        mask[0] = True
        gens = [int(g) for g in gens if g != 0]
        frontier = np.array([0])
        while frontier.size:
            new = []
            for g in gens:
                y = self.mul(frontier, np.array([g]))
                y = np.unique(y[~mask[y]])
                mask[y] = True
                new.append(y)
            frontier = np.unique(np.concatenate(new)) if new else np.array([], dtype=int)
        return mask

    def gens_of(self, mask: np.ndarray) -> list[int]:
        gens: list[int] = []
        cur = np.zeros(self.n, dtype=bool)
        cur[0] = True
        for x in np.nonzero(mask)[0]:
            if not cur[x]:
                gens.append(int(x))
                cur = self.closure(gens)
                if cur.sum() == mask.sum():
                    break
        return gens

    def join(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.closure(self.gens_of(a) + self.gens_of(b))

    @property
    def classes(self) -> list[np.ndarray]:
        if not hasattr(self, "_classes"):
            label = np.full(self.n, -1)
            out = []
            for x in range(self.n):
                if label[x] < 0:
                    c = np.unique(self.conj_all(x))
                    label[c] = len(out)
                    out.append(c)
            self._classes = out
            self._label = label
        return self._classes

    def normal_closure(self, elems) -> np.ndarray:
        seeds = []
        for x in elems:
            seeds.extend(self.classes[self._label[x]].tolist())
        return self.closure(sorted(set(seeds)))

    def commutator_subgroup(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """[A, B] for subgroups normalizing each other."""
        ga, gb = self.gens_of(A), self.gens_of(B)
        comms = []
        for a in ga:
            for b in gb:
                ab = self.mul(a, b)[0]
                ba = self.mul(b, a)[0]
                comms.append(int(self.mul(self.inv[ba], ab)[0]))
        D = self.closure(comms)
        # close under conjugation by A and B
        conj = ga + gb
        changed = True
        while changed:
            changed = False
            for d in self.gens_of(D):
                for g in conj:
                    y = int(self.mul(self.mul(self.inv[g], d), g)[0])
                    if not D[y]:
                        D = self.closure(self.gens_of(D) + [y])
                        changed = True
        return D

    def solvable_over(self, N: np.ndarray, M: np.ndarray) -> bool:
        """N/M solvable, for M <= N."""
        cur = N
        while not (cur <= M).all():
            nxt = self.commutator_subgroup(cur, cur)
            if nxt.sum() == cur.sum():
                return False
            cur = nxt
        return True

    def normal_subgroups(self) -> list[np.ndarray]:
        if hasattr(self, "_normals"):
            return self._normals
        found: dict[bytes, np.ndarray] = {}
        for c in self.classes:
            N = self.normal_closure([int(c[0])])
            found.setdefault(np.packbits(N).tobytes(), N)
        items = list(found.values())
        k = 0
        while k < len(items):
            for j in range(k):
                J = self.join(items[k], items[j])
                key = np.packbits(J).tobytes()
                if key not in found:
                    found[key] = J
                    items.append(J)
            k += 1
        self._normals = sorted(items, key=lambda m: int(m.sum()))
        return self._normals

    # -- derived invariants ----------------------------------------------------------
    def radical_over(self, M: np.ndarray) -> np.ndarray:
        """Largest normal N >= M with N/M solvable."""
        best = M
        for N in self.normal_subgroups():
            if (M <= N).all() and N.sum() > best.sum() and self.solvable_over(N, M):
                best = self.join(best, N)
        return best

    def minimal_normals_over(self, M: np.ndarray) -> list[np.ndarray]:
        over = [N for N in self.normal_subgroups() if (M <= N).all() and N.sum() > M.sum()]
        return [N for N in over
                if not any((M <= K).all() and (K <= N).all() and M.sum() < K.sum() < N.sum()
                           for K in over)]

    def socle_over(self, M: np.ndarray) -> np.ndarray:
        """Join of the minimal normal N > M with N/M nonabelian."""
        S = M
        for N in self.minimal_normals_over(M):
            if not (self.commutator_subgroup(N, N) <= M).all():
                S = self.join(S, N)
        return S

    def trivial(self) -> np.ndarray:
        m = np.zeros(self.n, dtype=bool)
        m[0] = True
        return m

    def whole(self) -> np.ndarray:
        return np.ones(self.n, dtype=bool)

    def rs_orders(self) -> list[int]:
        terms = []
        S = self.trivial()
        while True:
            R = self.radical_over(S)
            terms.append(int(R.sum()))
            if R.all():
                return terms
            S = self.socle_over(R)
            terms.append(int(S.sum()))

    def lam(self) -> int:
        return len(self.rs_orders()) // 2

    # -- Frattini via maximal subgroups ------------------------------------------
    def _zuppos(self) -> list[tuple[np.ndarray, int]]:
        """Cyclic subgroups of prime-power order with a generator."""
        out: dict[bytes, tuple[np.ndarray, int]] = {}
        for x in range(1, self.n):
            C = self.closure([x])
            o = int(C.sum())
            p = _smallest_prime(o)
            while o % p == 0:
                o //= p
            if o == 1:
                out.setdefault(np.packbits(C).tobytes(), (C, x))
        return list(out.values())

    def _conjugate_subgroups(self, A: np.ndarray, a_gens: list[int], B: np.ndarray) -> bool:
        if A.sum() != B.sum():
            return False
        ok = np.ones(self.n, dtype=bool)
        for a in a_gens:
            ok &= B[self.conj_all(a)]
            if not ok.any():
                return False
        return True

    def subgroup_classes(self) -> list[tuple[np.ndarray, list[int]]]:
        """Conjugacy class representatives of all subgroups, with generators."""
        if self.n > SUBGROUP_CAP:
            raise CapExceeded(f"subgroup enumeration refuses groups of order above {SUBGROUP_CAP}")
        zuppos = self._zuppos()
        reps = [(self.trivial(), [])]
        buckets: dict[tuple, list[int]] = {(1, self._hist(reps[0][0])): [0]}
        k = 0
        while k < len(reps):
            H, hg = reps[k]
            for Z, z in zuppos:
                if H[z]:
                    continue
                J = self.closure(hg + [z])
                key = (int(J.sum()), self._hist(J))
                bucket = buckets.setdefault(key, [])
                jg = hg + [z]
                if any(self._conjugate_subgroups(J, jg, reps[j][0]) for j in bucket):
                    continue
                bucket.append(len(reps))
                reps.append((J, jg))
            k += 1
        return reps

    def _hist(self, mask: np.ndarray) -> bytes:
        self.classes  # noqa: B018 - ensure labels
        return np.bincount(self._label[mask], minlength=len(self._classes)).tobytes()

    def maximal_subgroup_classes(self) -> list[np.ndarray]:
        zuppos = self._zuppos()
        out = []
        for M, mg in self.subgroup_classes():
            if M.all():
                continue
            if all(self.closure(mg + [z]).all() for _, z in zuppos if not M[z]):
                out.append(M)
        return out

    def core(self, M: np.ndarray) -> np.ndarray:
        mem = np.nonzero(M)[0]
        keep = np.ones(mem.size, dtype=bool)
        for i, x in enumerate(mem):
            keep[i] = M[self.conj_all(int(x))].all()
        out = np.zeros(self.n, dtype=bool)
        out[mem[keep]] = True
        return out

    def frattini(self) -> np.ndarray:
        phi = self.whole()
        for M in self.maximal_subgroup_classes():
            phi &= self.core(M)
        return phi

    # -- comparison helpers ------------------------------------------------------------
    def mask_of(self, H: Group) -> np.ndarray | None:
        """Mask of the subgroup generated by H's generators, or None when a
        generator lies outside this group."""
        idx = []
        for g in H.gens:
            i = int(self.encode(g.arr.astype(np.int64)[None, :])[0])
            if not (self.E[i] == g.arr).all():
                return None
            idx.append(i)
        return self.closure(idx)


def _smallest_prime(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@dataclass
class OracleReport:
    order: int
    radical: int
    socle: int
    minimal_normals: list[int]
    lam: int
    rs_orders: list[int]
    frattini: int | None
    normal_subgroup_orders: list[int] = field(default_factory=list)


def oracle_invariants(G: Group, with_frattini: bool = True) -> OracleReport:
    o = Oracle(G)
    triv = o.trivial()
    return OracleReport(
        order=o.n,
        radical=int(o.radical_over(triv).sum()),
        socle=int(o.socle_over(triv).sum()),
        minimal_normals=sorted(int(N.sum()) for N in o.minimal_normals_over(triv)),
        lam=o.lam(),
        rs_orders=o.rs_orders(),
        frattini=int(o.frattini().sum()) if with_frattini and o.n <= SUBGROUP_CAP else None,
        normal_subgroup_orders=[int(N.sum()) for N in o.normal_subgroups()],
    )
