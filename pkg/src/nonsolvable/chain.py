"""Base and strong generating set (stabilizer chain) on raw image arrays.

Elements are 0-based ``int32`` numpy arrays; ``a * b`` (apply ``a`` then
``b``) is ``b[a]``.  Construction runs a seeded random Schreier-Sims phase and
then, unless the group order is known in advance, a deterministic
Schreier-generator check that sifts Schreier generators in vectorised
batches.  When the order is known the random phase alone is exact: it stops
exactly when the chain's order reaches the target.
"""
from __future__ import annotations

import random
from math import prod

import numpy as np

from .perm import DTYPE

BATCH_ROWS = 1 << 14


class Level:
    """One stabilizer level: base point, strong generators, transversal."""

    __slots__ = ("point", "gens", "orbit", "index", "reps", "inv_reps", "_stack", "_istack")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit = [point]
        self.index = np.full(degree, -1, dtype=np.int64)
        self.index[point] = 0
        ident = np.arange(degree, dtype=DTYPE)
        self.reps = [ident]
        self.inv_reps = [ident]
        self._stack = None
        self._istack = None

    def _append(self, pt: int, rep: np.ndarray) -> None:
        self.index[pt] = len(self.orbit)
        self.orbit.append(pt)
        self.reps.append(rep)
        inv = np.empty_like(rep)
        inv[rep] = np.arange(rep.shape[0], dtype=DTYPE)
        self.inv_reps.append(inv)
        self._stack = None
        self._istack = None

    def add_gen(self, g: np.ndarray) -> None:
        self.gens.append(g)
        # extend the orbit incrementally: new edges from old points, then BFS
        queue = []
        for pos in range(len(self.orbit)):
            beta = self.orbit[pos]
            gamma = int(g[beta])
            if self.index[gamma] < 0:
                self._append(gamma, g[self.reps[pos]])
                queue.append(gamma)
        while queue:
            beta = queue.pop()
            rep = self.reps[self.index[beta]]
            for s in self.gens:
                gamma = int(s[beta])
                if self.index[gamma] < 0:
                    self._append(gamma, s[rep])
                    queue.append(gamma)

    @property
    def stack(self) -> np.ndarray:
        if self._stack is None:
            self._stack = np.stack(self.reps)
        return self._stack

    @property
    def istack(self) -> np.ndarray:
        if self._istack is None:
            self._istack = np.stack(self.inv_reps)
        return self._istack

    def __len__(self) -> int:
        return len(self.orbit)


class StabChain:
    def __init__(self, degree: int, base_prefix: list[int] | None = None):
        self.degree = degree
        self.levels: list[Level] = []
        self.identity = np.arange(degree, dtype=DTYPE)
        self.base_prefix = list(base_prefix or [])
        for pt in self.base_prefix:
            self.levels.append(Level(pt, degree))

    # -- queries --------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        return prod(len(lv) for lv in self.levels)

    def strong_gens(self) -> list[np.ndarray]:
        seen = {}
        for lv in self.levels:
            for g in lv.gens:
                seen.setdefault(g.tobytes(), g)
        return list(seen.values())

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        """Return (residue, level reached).  Level == len(levels) means the
        residue fixes every base point."""
        x = g
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            j = lv.index[x[lv.point]]
            if j < 0:
                return x, i
            if j:
                x = lv.inv_reps[j][x]
        return x, len(levels)

    def contains(self, g: np.ndarray) -> bool:
        x, lvl = self.sift(g)
        return lvl == len(self.levels) and bool((x == self.identity).all())

    def _batch_sift(self, X: np.ndarray, start: int):
        """Sift rows of X from level ``start``; return first nontrivial residue."""
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            j = lv.index[X[:, lv.point]]
            bad = np.nonzero(j < 0)[0]
            if bad.size:
                r = int(bad[0])
                # residue of row r at level i; sifting is row-independent
                return X[r].copy(), i
            X = lv.istack[j[:, None], X]
        nontriv = np.nonzero((X != self.identity).any(axis=1))[0]
        if nontriv.size:
            return X[int(nontriv[0])].copy(), len(levels)
        return None, -1

    # -- construction ---------------------------------------------------
    def _new_point(self, h: np.ndarray) -> int:
        moved = np.nonzero(h != self.identity)[0]
        return int(moved[0])

    def add_strong_gen(self, h: np.ndarray, level: int) -> None:
        if level == len(self.levels):
            self.levels.append(Level(self._new_point(h), self.degree))
        for i in range(level + 1):
            self.levels[i].add_gen(h)

    def extend(self, g: np.ndarray) -> bool:
        """Sift g and add its residue as a strong generator if nontrivial."""
        h, lvl = self.sift(g)
        if lvl == len(self.levels) and bool((h == self.identity).all()):
            return False
        self.add_strong_gen(h, lvl)
        return True

    def random_schreier_sims(self, gens, rng: random.Random, *, target: int | None = None,
                             patience: int = 30) -> None:
        for g in gens:
            self.extend(g)
        if target is not None and self.order() == target:
            return
        pr = ProductReplacement(gens, rng)
        quiet = 0
        while True:
            if target is not None:
                if self.order() >= target:
                    if self.order() > target:
                        raise ValueError(f"group order exceeds stated order {target}")
                    return
            elif quiet >= patience:
                return
            if self.extend(pr.next()):
                quiet = 0
            else:
                quiet += 1

    def verify_schreier(self) -> None:
        """Deterministic completion: every Schreier generator of every level
        sifts through the levels below it."""
        i = len(self.levels) - 1
        while i >= 0:
            res = self._level_residue(i)
            if res is None:
                i -= 1
                continue
            h, lvl = res
            self.add_strong_gen(h, lvl)
            i = lvl if lvl < len(self.levels) else len(self.levels) - 1

    def _level_residue(self, i: int):
        lv = self.levels[i]
        if not lv.gens:
            return None
        stack = lv.stack
        pt = lv.point
        m = stack.shape[0]
        per = max(1, BATCH_ROWS // m)
        for k0 in range(0, len(lv.gens), per):
            S = np.stack(lv.gens[k0:k0 + per])
            # u_beta * s, then times inverse of u_{beta^s}
            A = S[np.arange(S.shape[0])[:, None, None], stack[None, :, :]].reshape(-1, self.degree)
            gamma = lv.index[A[:, pt]]
            SG = lv.istack[gamma[:, None], A]
            h, lvl = self._batch_sift(SG, i + 1)
            if h is not None:
                return h, lvl
        return None

    # -- element access -------------------------------------------------
    def random_element(self, rng: random.Random) -> np.ndarray:
        x = self.identity
        for lv in reversed(self.levels):
            x = lv.reps[rng.randrange(len(lv))][x]
        return x

    def rank(self, X: np.ndarray) -> np.ndarray:
        """Mixed-radix index of each row of X (rows must be group elements)."""
        X = np.atleast_2d(X)
        r = np.zeros(X.shape[0], dtype=np.int64)
        mult = 1
        for lv in self.levels:
            j = lv.index[X[:, lv.point]]
            if (j < 0).any():
                raise ValueError("element not in group")
            r += j * mult
            mult *= len(lv)
            X = lv.istack[j[:, None], X]
        return r

    def enumerate(self) -> np.ndarray:
        """All elements, row r having rank r."""
        E = self.identity[None, :]
        for lv in reversed(self.levels):
            m = len(lv)
            U = lv.stack
            E = U[np.arange(m)[None, :, None], E[:, None, :]].reshape(-1, self.degree)
        return np.ascontiguousarray(E)


class ProductReplacement:
    """Seeded product-replacement generator of pseudo-random elements."""

    def __init__(self, gens, rng: random.Random, slots: int = 10, warmup: int = 50):
        gens = [g for g in gens]
        if not gens:
            raise ValueError("need at least one generator")
        self.rng = rng
        self.state = [gens[i % len(gens)] for i in range(max(slots, len(gens)))]
        self.acc = gens[0]
        for _ in range(warmup):
            self.next()

    def next(self) -> np.ndarray:
        n = len(self.state)
        i = self.rng.randrange(n)
        j = self.rng.randrange(n - 1)
        if j >= i:
            j += 1
        if self.rng.random() < 0.5:
            self.state[i] = self.state[j][self.state[i]]
        else:
            self.state[i] = self.state[i][self.state[j]]
        self.acc = self.state[i][self.acc]
        return self.acc


def build_chain(degree: int, gens, *, order: int | None = None, seed: int = 0,
                base_prefix: list[int] | None = None, verify: bool = True) -> StabChain:
    """Stabilizer chain for the group generated by ``gens``.

    With ``order`` given the result is exact as soon as the chain reaches that
    order.  Otherwise the deterministic Schreier check runs when ``verify``.
    """
    ch = StabChain(degree, base_prefix)
    gens = [g for g in gens if not (g == ch.identity).all()]
    if not gens:
        if order not in (None, 1):
            raise ValueError("trivial generators but nontrivial order requested")
        return ch
    ch.random_schreier_sims(gens, random.Random(seed), target=order)
    if order is None and verify:
        ch.verify_schreier()
    return ch
