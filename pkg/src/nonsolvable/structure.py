"""Normal structure: radical, cores, minimal normal subgroups, socle, Frattini, 2-length.

Two tiers.  Exact mode enumerates elements and conjugacy classes (below the
exact cap) and builds every normal subgroup as a normal closure of class
representatives.  Structural mode never enumerates: it finds a simple
subnormal subgroup by descending through orbit and block kernels, takes its
conjugates as socle components, and computes the centralizer C of the socle
found so far.  Once C is solvable, C is the radical and the components are
complete, which certifies the result.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

import numpy as np

from .actions import CapExceeded, Homomorphism, block_action, orbit_action
from .class_l import SimpleId, identify_simple_by_order
from .config import DEFAULT, Config
from .group import (Group, GroupError, derived_series, is_abelian, normal_closure,
                    trivial_group)
from .perm import DTYPE, Permutation, commutator
from .table import ElementTable


# -- small helpers -----------------------------------------------------------

def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].is_trivial()


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _tiebreak_key(H: Group):
    return (H.order, sorted(g.images for g in H.gens))


def join(G_degree: int, parts, order: int | None = None) -> Group:
    return Group(G_degree, [g for H in parts for g in H.gens], order=order)


def resolve_mode(G: Group, mode: str, cfg: Config) -> str:
    if mode == "auto":
        return "exact" if G.order <= cfg.exact_cap else "mc"
    if mode not in ("exact", "mc"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


class _Exact:
    """Per-group cache of the element table and class-rep normal closures."""

    def __init__(self, G: Group, cfg: Config):
        self.G = G
        self.table = ElementTable(G, cfg.exact_cap)
        self._closures: dict[int, Group] = {}

    @property
    def reps(self) -> list[int]:
        return [int(r) for r in self.table.class_reps[1:]]

    def rep_perm(self, r: int) -> Permutation:
        return self.table.perm(r)

    def closure(self, r: int) -> Group:
        if r not in self._closures:
            self._closures[r] = normal_closure(self.G, [self.rep_perm(r)], check=False)
        return self._closures[r]


def exact_data(G: Group, cfg: Config = DEFAULT) -> _Exact:
    cache = G.__dict__.setdefault("_exact_cache", {})
    if cfg.exact_cap not in cache:
        cache[cfg.exact_cap] = _Exact(G, cfg)
    return cache[cfg.exact_cap]


def conjugacy_class_reps(G: Group, config: Config = DEFAULT) -> list[Permutation]:
    ex = exact_data(G, config)
    return [ex.table.perm(int(r)) for r in ex.table.class_reps]


def solvable_mod(C: Group, N: Group) -> bool:
    """Whether C/N is solvable (N normal in C)."""
    D = C
    while True:
        if D.order == N.order:
            return True
        comms = [commutator(a, b) for i, a in enumerate(D.gens) for b in D.gens[i + 1:]]
        D2 = normal_closure(D, comms + list(N.gens), check=False)
        if D2.order == D.order:
            return False
        D = D2


def _relative_core(G: Group, ex: _Exact, accept, N: Group | None = None) -> Group:
    """Largest normal K >= N with ``accept(K, N)`` true, built from class reps.

    ``accept`` must be closed under products of normal subgroups (p-groups,
    p'-groups, solvable), so testing <g^G>K/N is the same as testing <g^G>N/N.
    """
    N = N if N is not None else trivial_group(G.degree)
    K = N
    for r in ex.reps:
        g = ex.rep_perm(r)
        if K.contains(g):
            continue
        if N.is_trivial():
            C0 = ex.closure(r)
            if not accept(C0, N):
                continue
            C = normal_closure(G, [g] + list(K.gens), check=False) if not K.is_trivial() else C0
        else:
            C = normal_closure(G, [g] + list(K.gens), check=False)
            if not accept(C, N):
                continue
        K = C
    return K


# -- radical and cores ---------------------------------------------------------

def solvable_radical(G: Group, mode: str = "auto", config: Config = DEFAULT, seed: int | None = None) -> Group:
    mode = resolve_mode(G, mode, config)
    if mode == "exact":
        if G.is_trivial():
            return G
        ex = exact_data(G, config)
        return _relative_core(G, ex, lambda C, N: solvable_mod(C, N))
    return structural(G, config, seed).radical


def p_core(G: Group, p: int, config: Config = DEFAULT, modulo: Group | None = None) -> Group:
    """O_p(G), or the preimage of O_p(G/N) when ``modulo`` is N."""
    ex = exact_data(G, config)
    return _relative_core(G, ex, lambda C, N: _is_p_power(C.order // N.order, p), modulo)


def p_prime_core(G: Group, p: int, config: Config = DEFAULT, modulo: Group | None = None) -> Group:
    ex = exact_data(G, config)
    return _relative_core(G, ex, lambda C, N: (C.order // N.order) % p != 0, modulo)


@dataclass
class TwoSeries:
    terms: list[Group]
    kinds: list[str]  # kind of each factor terms[i+1]/terms[i]: "odd" or "2"
    l2: int

    def orders(self) -> list[int]:
        return [T.order for T in self.terms]


def two_length(H: Group, modulo: Group | None = None, config: Config = DEFAULT) -> TwoSeries:
    """Upper 2,2'-series of H (or of H/modulo) and its number of 2-factors."""
    if not is_solvable(H):
        raise GroupError("two_length needs a solvable group")
    base = modulo if modulo is not None else trivial_group(H.degree)
    terms, kinds = [base], []
    cur = base
    want_odd = True
    while cur.order < H.order:
        nxt = p_prime_core(H, 2, config, cur) if want_odd else p_core(H, 2, config, cur)
        if nxt.order > cur.order:
            terms.append(nxt)
            kinds.append("odd" if want_odd else "2")
            cur = nxt
        want_odd = not want_odd
    return TwoSeries(terms, kinds, kinds.count("2"))


# -- minimal normal subgroups and socle ----------------------------------------

def _inclusion_minimal(groups: list[Group]) -> list[Group]:
    groups = sorted(groups, key=_tiebreak_key)
    out: list[Group] = []
    for H in groups:
        if any(M.order <= H.order and M.is_subgroup_of(H) for M in out):
            continue
        out.append(H)
    return out


def _minimal_normals_exact(G: Group, cfg: Config) -> list[Group]:
    if G.is_trivial():
        return []
    ex = exact_data(G, cfg)
    return _inclusion_minimal([ex.closure(r) for r in ex.reps])


def minimal_normal_subgroups(G: Group, mode: str = "auto", config: Config = DEFAULT,
                             seed: int | None = None) -> list[Group]:
    mode = resolve_mode(G, mode, config)
    if mode == "exact":
        return _minimal_normals_exact(G, config)
    rng = random.Random(config.seed if seed is None else seed)
    found = []
    stagnant = 0
    while stagnant < config.mc_stagnant:
        before = len(found)
        for _ in range(config.mc_samples):
            g = G.random_element(rng)
            if g.is_identity() or any(M.contains(g) for M in found):
                continue
            C = normal_closure(G, [g], check=False)
            found = _inclusion_minimal(found + [C])
        stagnant = stagnant + 1 if len(found) == before else 0
    return found


def is_simple_exact(T: Group, cfg: Config = DEFAULT) -> bool:
    if T.is_trivial():
        return False
    ex = exact_data(T, cfg)
    return all(ex.closure(r).order == T.order for r in ex.reps)


@dataclass
class SocleDecomposition:
    socle: Group
    components: list[Group]
    component_ids: list[SimpleId]
    complete: bool
    mode: str

    def to_dict(self) -> dict:
        return {"order": self.socle.order, "components": [c.order for c in self.components],
                "component_ids": [c.to_dict() for c in self.component_ids],
                "complete": self.complete, "mode": self.mode}


def _components_exact(N: Group, cfg: Config) -> list[Group]:
    """Simple direct factors of a group that is a direct product of nonabelian simples."""
    comps = []
    for M in _minimal_normals_exact(N, cfg):
        if M.order == N.order:
            if not is_simple_exact(M, cfg):
                raise GroupError("socle component failed the simplicity test")
            comps.append(M)
        else:
            comps.extend(_components_exact(M, cfg))
    return comps


def socle_nonabelian(G: Group, mode: str = "auto", config: Config = DEFAULT,
                     seed: int | None = None) -> SocleDecomposition:
    mode = resolve_mode(G, mode, config)
    if mode == "exact":
        mins = [M for M in _minimal_normals_exact(G, config) if not is_abelian(M)]
        order = 1
        for M in mins:
            order *= M.order
        S = join(G.degree, mins, order=order)
        comps = []
        for M in mins:
            comps.extend(_components_exact(M, config))
        comps.sort(key=_tiebreak_key)
        ids = [identify_simple_by_order(c.order) for c in comps]
        return SocleDecomposition(S, comps, ids, True, "exact")
    st = structural(G, config, seed)
    return st.socle


# -- structural (large-group) mode ----------------------------------------------

def block_systems_from_pairs(G: Group, points: list[int]) -> list[list[list[int]]]:
    """Distinct nontrivial block systems of G on the orbit ``points`` (0-based),
    each the finest system joining the first point with some other point."""
    from .actions import _minimal_block
    alpha = points[0]
    gl = [g.arr.tolist() for g in G.gens]
    seen = set()
    out = []
    stab = None
    if len(points) > 2:
        stab = G.pointwise_stabilizer([alpha])
    done = {alpha}
    for beta in points[1:]:
        if beta in done:
            continue
        done.update(stab._orbit0(beta) if stab is not None else [beta])
        labels = _minimal_block(gl, points, alpha, beta)
        groups: dict[int, list[int]] = {}
        for p in points:
            groups.setdefault(labels[p], []).append(p)
        if len(groups) == 1:
            continue
        key = frozenset(groups[labels[alpha]])
        if key in seen:
            continue
        seen.add(key)
        out.append(sorted(groups.values()))
    return out


def _restricted_block_kernel(G: Group, blocks: list[list[int]]) -> Group:
    block_of = np.full(G.degree, -1, dtype=np.int64)
    for j, b in enumerate(blocks):
        block_of[b] = j
    reps = np.array([b[0] for b in blocks])
    hom = Homomorphism(G, len(blocks), lambda a: block_of[a[reps]].astype(DTYPE))
    return hom.kernel


@dataclass
class StructuralResult:
    radical: Group
    socle: SocleDecomposition
    certified: bool
    notes: list[str] = field(default_factory=list)


class _Descent:
    """Search for a simple subnormal subgroup inside a subnormal subgroup."""

    def __init__(self, cfg: Config, rng: random.Random, small_cap: int = 10 ** 5):
        self.cfg = cfg
        self.rng = rng
        self.small_cap = min(small_cap, cfg.exact_cap)
        self.exact_simplicity = True

    def find(self, M: Group, depth: int = 0) -> Group | None:
        if M.is_trivial():
            return None
        if M.order <= self.small_cap:
            return self._exact(M)
        for K in self._candidates(M):
            T = self.find(K, depth + 1)
            if T is not None:
                return T
        if M.order <= self.cfg.exact_cap:
            return self._exact(M)
        # no structural handle: look for a proper normal closure of a random element
        for _ in range(self.cfg.mc_samples):
            g = M.random_element(self.rng)
            if g.is_identity():
                continue
            C = normal_closure(M, [g], check=False)
            if C.order < M.order:
                T = self.find(C, depth + 1)
                if T is not None:
                    return T
        # M looks simple but is too large to test exactly
        if is_solvable(M):
            return None
        self.exact_simplicity = False
        return M

    def _exact(self, M: Group) -> Group | None:
        D = derived_series(M)[-1]
        if D.is_trivial():
            return None
        for N in _minimal_normals_exact(D, self.cfg):
            if is_abelian(N):
                continue
            comps = _components_exact(N, self.cfg)
            if comps:
                return comps[0]
        return None

    def _candidates(self, M: Group):
        """Proper nontrivial normal subgroups of M, produced lazily."""
        mset = set(M.moved_points())
        orbs = [o for o in M.orbits() if len(o) > 1]
        if len(orbs) > 1:
            for o in orbs:
                K = M.pointwise_stabilizer(sorted(mset - set(o)))
                if 1 < K.order < M.order:
                    yield K
        for o in orbs:
            if len(o) < 4:
                continue
            for blocks in block_systems_from_pairs(M, o):
                K = _restricted_block_kernel(M, blocks)
                if 1 < K.order < M.order:
                    yield K


def _support_key(H: Group) -> frozenset:
    return frozenset(p for g in H.gens for p in np.nonzero(g.arr != np.arange(H.degree))[0].tolist())


def conjugates_orbit(Q: Group, T: Group) -> list[Group]:
    """Distinct Q-conjugates of T (compared by membership within equal supports)."""
    orbit = [T]
    buckets: dict[frozenset, list[Group]] = {_support_key(T): [T]}
    for X in orbit:
        for q in Q.gens:
            Y = X.conjugate(q)
            key = _support_key(Y)
            bucket = buckets.setdefault(key, [])
            if any(Z.order == Y.order and Y.is_subgroup_of(Z) for Z in bucket):
                continue
            bucket.append(Y)
            orbit.append(Y)
    return orbit


def _component_action(Q: Group, comps: list[Group]) -> Homomorphism:
    keys = [_support_key(T) for T in comps]
    distinct = len(set(keys)) == len(keys)
    lookup = {k: i for i, k in enumerate(keys)}
    supports = [np.array(sorted(k)) for k in keys]

    def mp(a: np.ndarray) -> np.ndarray:
        out = np.empty(len(comps), dtype=DTYPE)
        q = Permutation(a)
        for i, T in enumerate(comps):
            if distinct:
                out[i] = lookup[frozenset(a[supports[i]].tolist())]
            else:
                Y = T.conjugate(q)
                out[i] = next(j for j, Z in enumerate(comps) if Y.is_subgroup_of(Z))
        return out

    return Homomorphism(Q, len(comps), mp, "components")


def centralizer_of_components(Q: Group, comps: list[Group]) -> Group:
    """C_Q(T_1 ... T_k) for pairwise commuting simple subnormal T_i."""
    S_order = 1
    for T in comps:
        S_order *= T.order
    K1 = _component_action(Q, comps).kernel
    if K1.order == S_order:
        return trivial_group(Q.degree)
    # K1 normalizes every component; let it act by conjugation on the
    # orbits of component generators
    points: list[bytes] = []
    index: dict[bytes, int] = {}
    elems: list[np.ndarray] = []
    kg = [(g.arr, g.inverse().arr) for g in K1.gens]
    for T in comps:
        for t in T.gens:
            if t.key() in index:
                continue
            index[t.key()] = len(points)
            points.append(t.key())
            elems.append(t.arr)
            k = len(points) - 1
            while k < len(points):
                x = elems[k]
                for g, ginv in kg:
                    y = g[x[ginv]]
                    key = y.tobytes()
                    if key not in index:
                        index[key] = len(points)
                        points.append(key)
                        elems.append(y)
                k += 1

    def mp(a: np.ndarray) -> np.ndarray:
        ainv = np.empty_like(a)
        ainv[a] = np.arange(a.shape[0], dtype=DTYPE)
        return np.array([index[a[x[ainv]].tobytes()] for x in elems], dtype=DTYPE)

    return Homomorphism(K1, len(points), mp, "conjugation").kernel


def structural(G: Group, config: Config = DEFAULT, seed: int | None = None) -> StructuralResult:
    """Radical and nonabelian socle without element enumeration."""
    cache = G.__dict__.setdefault("_structural_cache", {})
    key = (config.exact_cap, config.mc_samples, config.seed if seed is None else seed)
    if key in cache:
        return cache[key]
    rng = random.Random(config.seed if seed is None else seed)
    descent = _Descent(config, rng)
    comps: list[Group] = []
    C = G
    certified = False
    notes: list[str] = []
    while True:
        T = descent.find(C)
        if T is None:
            if C.order <= config.exact_cap or is_solvable(C):
                certified = is_solvable(C)
                if not certified:
                    notes.append("nonsolvable centralizer without a detectable component")
            else:
                notes.append("component search exhausted")
            break
        comps.extend(conjugates_orbit(G, T))
        C = centralizer_of_components(G, comps)
        if C.is_trivial():
            certified = True
            break
    if not descent.exact_simplicity:
        certified = False
        notes.append("component simplicity not verified exactly")
    order = 1
    for T in comps:
        order *= T.order
    S = join(G.degree, comps, order=order)
    comps.sort(key=_tiebreak_key)
    ids = [identify_simple_by_order(T.order) for T in comps]
    soc = SocleDecomposition(S, comps, ids, certified, "mc")
    radical = C if certified else _radical_lower_bound(C, config)
    res = StructuralResult(radical, soc, certified, notes)
    cache[key] = res
    return res


def _radical_lower_bound(C: Group, cfg: Config) -> Group:
    if C.order <= cfg.exact_cap:
        return solvable_radical(C, "exact", cfg)
    return trivial_group(C.degree)


# -- Frattini -------------------------------------------------------------------

def _generating_pair(G: Group, rng: random.Random, tries: int = 200) -> list[Permutation]:
    for _ in range(tries):
        x, y = G.random_element(rng), G.random_element(rng)
        if Group(G.degree, [x, y]).order == G.order:
            return [x, y]
    return list(G.gens)


def _has_proper_supplement(G: Group, gens: list[Permutation], N: Group) -> bool:
    """Some choice h_i in g_i N generates a proper subgroup."""
    elems = N.elements()
    k = len(gens)
    idx = [0] * k
    while True:
        hs = [gens[i] * elems[idx[i]] for i in range(k)]
        if Group(G.degree, hs).order < G.order:
            return True
        j = 0
        while j < k:
            idx[j] += 1
            if idx[j] < len(elems):
                break
            idx[j] = 0
            j += 1
        if j == k:
            return False


def frattini(G: Group, config: Config = DEFAULT, radical: Group | None = None) -> tuple[Group, str]:
    """Phi(G) with the evidence mode ("fastpath" or "exact").

    Phi is nilpotent and normal, so it lies in the radical; a normal subgroup
    lies in Phi exactly when it has no proper supplement.
    """
    if G.is_trivial():
        return G, "exact"
    R = radical if radical is not None else solvable_radical(G, "auto", config)
    if R.is_trivial():
        return R, "fastpath"
    if G.order > config.lattice_cap:
        raise CapExceeded(f"group order {G.order} exceeds Frattini cap {config.lattice_cap}")
    ex = exact_data(G, config)
    gens = _generating_pair(G, random.Random(config.seed))
    phi = trivial_group(G.degree)
    for r in ex.reps:
        g = ex.rep_perm(r)
        if not R.contains(g) or phi.contains(g):
            continue
        Ncl = ex.closure(r)
        if not _has_proper_supplement(G, gens, Ncl):
            phi = normal_closure(G, list(phi.gens) + list(Ncl.gens), check=False)
    return phi, "exact"


# -- solvable subgroups and L2 ----------------------------------------------------

def max_two_length_over_solvable(G: Group, config: Config = DEFAULT) -> int:
    from .lattice import solvable_subgroup_classes
    best = 0
    for H in solvable_subgroup_classes(G, config, maximal_only=True):
        best = max(best, two_length(H, config=config).l2)
    return best
