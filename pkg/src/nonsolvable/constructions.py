"""Builders: alternating and symmetric groups, A5 wreath towers, matrix groups
over small fields acting on nonzero vectors, subdirect products, and the
solvable 2-length witness."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial

import numpy as np

from .actions import CapExceeded, block_action, identity_hom
from .class_l import identify_simple_by_order
from .config import DEFAULT, Config
from .fields import GF, determinant, field as gf, gl_generators, gl_order, mat_mul
from .group import Group, GroupError, direct_product, trivial_group, wreath_imprimitive
from .perm import DTYPE, Permutation
from .rs_series import Level, RSCertificate


@dataclass
class BuiltGroup:
    group: Group
    provenance: dict
    claimed_certificate: RSCertificate | None = None
    claimed_lambda: int | None = None
    extras: dict = field(default_factory=dict)


def alt(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n < 3:
        return Group(n, [], order=1, name=f"A{n}")
    gens = [Permutation.from_cycles(n, [[1, 2, 3]])]
    if n > 3:
        # (1 2 ... n) when n is odd, (2 3 ... n) when n is even
        cyc = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
        gens.append(Permutation.from_cycles(n, [cyc]))
    return Group(n, gens, order=factorial(n) // 2, name=f"A{n}")


def sym(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return Group(1, [], order=1, name="S1")
    gens = [Permutation.from_cycles(n, [[1, 2]])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [list(range(1, n + 1))]))
    return Group(n, gens, order=factorial(n), name=f"S{n}")


def _check_degree(degree: int, cfg: Config) -> None:
    if degree > cfg.degree_cap:
        raise CapExceeded(f"degree {degree} exceeds degree cap {cfg.degree_cap}")


def wreath_tower(n: int) -> Group:
    """W_n: A5 wr W_{n-1}, acting on 5^n points; blocks of 5 consecutive points."""
    if n < 1:
        raise ValueError("tower height must be at least 1")
    W = alt(5)
    for _ in range(n - 1):
        W = wreath_imprimitive(alt(5), W)
    W.name = f"W{n}"
    return W


def _tower_component(degree: int, block: int) -> Group:
    """A5 acting on points 5*block .. 5*block+4 of a tower quotient."""
    base = 5 * block
    gens = []
    for cyc in ([1, 2, 3, 4, 5], [1, 2, 3]):
        gens.append(Permutation.from_cycles(degree, [[base + c for c in cyc]]))
    return Group(degree, gens, order=60)


def wreath_tower_A5(n: int, config: Config = DEFAULT) -> BuiltGroup:
    """W_n with the claimed certificate R_i = S_{i-1}, S_i = kernel on blocks of size 5^i."""
    if n > 5:
        raise CapExceeded("towers above height 5 are refused")
    _check_degree(5 ** n, config)
    W = wreath_tower(n)
    d = 5 ** n
    levels = []
    prev = trivial_group(d)
    homs = [identity_hom(W)]
    for i in range(1, n + 1):
        size = 5 ** i
        blocks = [list(range(j, j + size)) for j in range(0, d, size)]
        hom = block_action(W, blocks)
        # kernel on blocks of size 5^i has order |W_n| / |W_{n-i}|
        order = 60 ** ((5 ** n - 1) // 4) // 60 ** ((5 ** (n - i) - 1) // 4)
        S_i = W if i == n else Group(d, hom.kernel.gens, order=order)
        to_R = homs[-1]
        qdeg = 5 ** (n - i + 1)
        comps = [_tower_component(qdeg, b) for b in range(qdeg // 5)]
        ids = [identify_simple_by_order(60)] * len(comps)
        levels.append(Level(prev, S_i, to_R, comps, ids, 0, "exact", True))
        homs.append(hom)
        prev = S_i
    levels.append(Level(W, None, None, [], [], 0, "exact", True))
    cert = RSCertificate(levels, provenance=f"builder W:{n}")
    return BuiltGroup(W, {"recipe": f"W:{n}", "degree": d}, cert, n)


def lambda_m_witness(m: int, config: Config = DEFAULT) -> BuiltGroup:
    """The tower of height floor(log_5 m) inside Sym(m), fixing the last points."""
    if m < 5:
        raise GroupError("need m >= 5")
    _check_degree(m, config)
    k = floor_log(m, 1, 5)
    W = wreath_tower(k)
    pad = np.arange(W.degree, m, dtype=DTYPE)
    gens = [Permutation(np.concatenate([g.arr, pad])) for g in W.gens]
    G = Group(m, gens, order=W.order, name=f"W{k} in S{m}")
    return BuiltGroup(G, {"recipe": f"lambda-m:{m}", "degree": m, "tower": k}, None, k)


def floor_log(num: int, den: int, base: int) -> int:
    """Largest k with base**k <= num/den (num >= den)."""
    if num < den:
        raise ValueError("argument below 1")
    k = 0
    while base ** (k + 1) * den <= num:
        k += 1
    return k


def cyclic(n: int) -> Group:
    if n == 1:
        return trivial_group(1)
    return Group(n, [Permutation.from_cycles(n, [list(range(1, n + 1))])], order=n, name=f"C{n}")


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n on n points (n >= 3)."""
    if n < 3:
        raise GroupError("dihedral groups need n >= 3")
    refl = [[i, n + 2 - i] for i in range(2, n // 2 + 2) if i < n + 2 - i]
    return Group(n, [Permutation.from_cycles(n, [list(range(1, n + 1))]),
                     Permutation.from_cycles(n, refl)], order=2 * n, name=f"D{2 * n}")


# -- matrix groups -----------------------------------------------------------------

def _vectors(F: GF, m: int) -> list[tuple[int, ...]]:
    return [v for v in product(range(F.q), repeat=m) if any(v)]


def matrix_perm(F: GF, A, vectors, index) -> Permutation:
    m = len(A)
    images = []
    for v in vectors:
        w = []
        for j in range(m):
            s = 0
            for t in range(m):
                s = F.add_table[s][F.mul(v[t], A[t][j])]
            w.append(s)
        images.append(index[tuple(w)])
    return Permutation(np.array(images, dtype=DTYPE))


def matrix_group_perm(q: int, m: int, gens, config: Config = DEFAULT, order: int | None = None) -> Group:
    """Matrix group over GF(q) acting on the q^m - 1 nonzero row vectors (v -> vA)."""
    if q > 9:
        raise GroupError("fields above GF(9) are not supported")
    F = gf(q)
    _check_degree(q ** m - 1, config)
    vectors = _vectors(F, m)
    index = {v: i for i, v in enumerate(vectors)}
    perms = []
    for A in gens:
        A = tuple(tuple(int(x) for x in row) for row in A)
        if len(A) != m or any(len(r) != m for r in A):
            raise GroupError("matrix has the wrong shape")
        if determinant(F, A) == 0:
            raise GroupError("singular matrix")
        perms.append(matrix_perm(F, A, vectors, index))
    return Group(q ** m - 1, perms, order=order)


def general_linear(q: int, d: int, config: Config = DEFAULT) -> Group:
    G = matrix_group_perm(q, d, gl_generators(gf(q), d), config, order=gl_order(q, d))
    G.name = f"GL({d},{q})"
    return G


def special_linear(q: int, d: int, config: Config = DEFAULT) -> Group:
    F = gf(q)
    gens = [g for g in gl_generators(F, d)[1:]] or [tuple(tuple(int(i == j) for j in range(d)) for i in range(d))]
    G = matrix_group_perm(q, d, gens, config, order=gl_order(q, d) // (q - 1))
    G.name = f"SL({d},{q})"
    return G


def linear_lower_bound_group(q: int, d: int, n: int, config: Config = DEFAULT) -> BuiltGroup:
    """GL(d,q) wr W_n on 5^n disjoint copies of the nonzero vectors of GF(q)^d."""
    _check_degree(5 ** n * (q ** d - 1), config)
    base = general_linear(q, d, config)
    if n == 0:
        G = base
    else:
        G = wreath_imprimitive(base, wreath_tower(n))
    G.name = f"GL({d},{q}) wr W{n}"
    lam_base = None
    if base.order > 1:
        from .rs_series import lam
        lam_base = lam(base, "exact", config)
    claimed = n + (lam_base or 0)
    return BuiltGroup(G, {"recipe": f"GLwr:q={q},d={d},n={n}", "degree": G.degree,
                          "note": "faithful copy on disjoint vector blocks, not the linear action on GF(q)^(d*5^n)"},
                      None, claimed)


def _kv(body: str) -> dict[str, int]:
    out = {}
    for part in body.split(","):
        k, _, v = part.partition("=")
        if not v:
            raise GroupError(f"expected key=value, got {part!r}")
        out[k.strip()] = int(v)
    return out


def from_recipe(recipe: str, config: Config = DEFAULT) -> BuiltGroup:
    """Build a group from a recipe string such as ``alt:5``, ``W:2``,
    ``GLwr:q=4,d=2,n=1``, ``product:alt:4;alt:5`` or ``wreath:alt:5;cyc:2``."""
    kind, _, body = recipe.strip().partition(":")
    try:
        if kind in ("product", "wreath"):
            parts = [from_recipe(r, config).group for r in body.split(";")]
            if kind == "product":
                G = parts[0]
                for H in parts[1:]:
                    G = direct_product(G, H)
            else:
                if len(parts) != 2:
                    raise GroupError("wreath needs exactly two parts: base;top")
                G = wreath_imprimitive(parts[0], parts[1])
            return BuiltGroup(G, {"recipe": recipe, "degree": G.degree})
        if kind == "W":
            n = int(body)
            if n <= 4:
                return wreath_tower_A5(n, config)
            raise CapExceeded("towers above height 4 are refused by the recipe parser")
        if kind == "GLwr":
            kv = _kv(body)
            return linear_lower_bound_group(kv["q"], kv["d"], kv["n"], config)
        if kind == "lambda-m":
            return lambda_m_witness(int(body), config)
        if kind == "witness":
            return solvable_l2_witness(int(body), config)
        simple = {"alt": alt, "sym": sym, "cyc": cyclic, "dih": dihedral}
        if kind in simple:
            n = int(body)
            _check_degree(n, config)
            G = simple[kind](n)
        elif kind in ("GL", "SL"):
            kv = _kv(body)
            G = (general_linear if kind == "GL" else special_linear)(kv["q"], kv["d"], config)
        else:
            raise GroupError(f"unknown recipe kind {kind!r}")
    except (KeyError, ValueError) as exc:
        if isinstance(exc, GroupError):
            raise
        raise GroupError(f"malformed recipe {recipe!r}: {exc}") from exc
    return BuiltGroup(G, {"recipe": recipe, "degree": G.degree})


# -- subdirect products ----------------------------------------------------------

def subdirect_product(factors: list[Group], identifications: list[tuple[int, int, list]] | None = None) -> BuiltGroup:
    """Subgroup of the direct product on disjoint domains.

    With no identifications this is the full direct product.  Otherwise
    ``identifications`` lists (i, j, images) meaning generator k of factor i
    is paired with ``images[k]`` (a Permutation of factor j's domain); all
    paired factors must share a generator count, and the result is
    generated by the paired tuples.
    """
    offsets = np.cumsum([0] + [F.degree for F in factors])
    d = int(offsets[-1])

    def embed(parts: dict[int, Permutation]) -> Permutation:
        arr = np.arange(d, dtype=DTYPE)
        for i, p in parts.items():
            arr[offsets[i]:offsets[i + 1]] = p.arr + offsets[i]
        return Permutation(arr)

    if not identifications:
        gens = [embed({i: g}) for i, F in enumerate(factors) for g in F.gens]
        order = 1
        for F in factors:
            order *= F.order
        G = Group(d, gens, order=order)
    else:
        paired = {j for _, j, _ in identifications}
        gens = []
        for i, j, images in identifications:
            Fi = factors[i]
            if len(images) != len(Fi.gens):
                raise GroupError("identification needs one image per generator")
            for g, h in zip(Fi.gens, images):
                if not factors[j].contains(h):
                    raise GroupError("identified image not in the target factor")
                gens.append(embed({i: g, j: h}))
        for i, F in enumerate(factors):
            if i not in paired and not any(i == a for a, _, _ in identifications):
                gens.extend(embed({i: g}) for g in F.gens)
        G = Group(d, gens)
    kernels = []
    for i in range(len(factors)):
        pts = list(range(int(offsets[i]), int(offsets[i + 1])))
        from .actions import orbit_action
        hom = orbit_action(G, pts)
        if hom.image.order != factors[i].order:
            raise GroupError(f"projection onto factor {i} is not surjective")
        kernels.append(hom.kernel)
    return BuiltGroup(G, {"recipe": "subdirect", "factors": [F.order for F in factors]},
                      extras={"kernels": kernels})


# -- solvable witness ----------------------------------------------------------------

def d10() -> Group:
    """Dihedral group of order 10 inside A5 on 5 points."""
    return Group(5, [Permutation.from_cycles(5, [[1, 2, 3, 4, 5]]),
                     Permutation.from_cycles(5, [[2, 5], [3, 4]])], order=10)


def solvable_l2_witness(n: int, config: Config = DEFAULT) -> BuiltGroup:
    """H_n = D10 wr H_{n-1} inside W_n (D10 in each A5 base copy)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return BuiltGroup(trivial_group(1), {"recipe": "witness:0"}, extras={"ambient": None})
    if n > 3:
        raise CapExceeded("witness towers above height 3 are refused")
    H = d10()
    for _ in range(n - 1):
        H = wreath_imprimitive(d10(), H)
    return BuiltGroup(H, {"recipe": f"witness:{n}", "degree": H.degree},
                      extras={"ambient": wreath_tower(n)})
