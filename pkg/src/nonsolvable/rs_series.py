"""The RS-series (alternating solvable radical / nonabelian socle layers) and lambda.

A certificate stores, per level i, the terms R_i <= S_i as subgroups of G,
a homomorphism G -> G/R_i, and the components of S_i/R_i inside that
quotient.  Verification uses only these data: if S_i/R_i is a product of
pairwise commuting simple groups with trivial centralizer in G/R_i, then
G/R_i has trivial radical and S_i/R_i is its whole nonabelian socle.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .actions import CapExceeded, Homomorphism, identity_hom, orbit_action, quotient_hom
from .class_l import SimpleId, identify_simple_by_order
from .config import DEFAULT, Config
from .group import Group, GroupError, derived_series, trivial_group
from .perm import DTYPE, Permutation
from .reports import VerifyReport, timed
from .structure import (centralizer_of_components, is_simple_exact, resolve_mode,
                        socle_nonabelian, solvable_mod, solvable_radical, structural)


@dataclass
class Level:
    R: Group
    S: Group | None
    to_R: Homomorphism | None = None          # G -> G/R_i
    components: list[Group] = field(default_factory=list)   # in the image domain of to_R
    component_ids: list[SimpleId] = field(default_factory=list)
    derived_length: int | None = None         # of R_i / S_{i-1}
    mode: str = "exact"
    certified: bool = True


@dataclass
class RSCertificate:
    levels: list[Level]
    provenance: str = "computed"

    @property
    def lam(self) -> int:
        return sum(1 for lv in self.levels if lv.S is not None)

    @property
    def certified(self) -> bool:
        return all(lv.certified for lv in self.levels)

    @property
    def mode(self) -> str:
        return "exact" if all(lv.mode == "exact" for lv in self.levels) else "mc"

    def terms(self) -> list[tuple[str, Group]]:
        out = []
        for lv in self.levels:
            out.append(("R", lv.R))
            if lv.S is not None:
                out.append(("S", lv.S))
        return out

    def lambda_display(self):
        return self.lam if self.certified else f">= {self.lam}"

    def to_json(self) -> dict:
        entries = []
        prev = 1
        for lv in self.levels:
            ev = {"factor": "solvable", "derived_length": lv.derived_length,
                  "factor_order": lv.R.order // prev}
            entries.append({"kind": "R", "order": lv.R.order, "evidence": ev, "mode": lv.mode})
            prev = lv.R.order
            if lv.S is not None:
                ev = {"factor": "semisimple", "factor_order": lv.S.order // prev,
                      "components": [c.to_dict() for c in lv.component_ids]}
                entries.append({"kind": "S", "order": lv.S.order, "evidence": ev, "mode": lv.mode})
                prev = lv.S.order
        return {"lambda": self.lambda_display(), "certified": self.certified, "mode": self.mode,
                "provenance": self.provenance, "terms": entries}


def _derived_length(H: Group) -> int:
    return len(derived_series(H)) - 1


def _preimage(hom: Homomorphism, K: Group) -> Group:
    return hom.preimage(K)


def rs_series(G: Group, mode: str = "auto", config: Config = DEFAULT, seed: int | None = None) -> RSCertificate:
    """Compute R_1 <= S_1 <= ... <= R_{n+1} = G with per-level evidence."""
    cache = G.__dict__.setdefault("_rs_cache", {})
    ckey = (mode, config, seed)
    if ckey in cache:
        return cache[ckey]
    levels: list[Level] = []
    hom_S = identity_hom(G)          # G -> G/S_{i-1}
    S_prev = trivial_group(G.degree)
    while True:
        Q = hom_S.image
        qmode = resolve_mode(Q, mode, config)
        certified = True
        if qmode == "exact":
            Rb = solvable_radical(Q, "exact", config)
        else:
            st = structural(Q, config, seed)
            Rb, certified = st.radical, st.certified
        R = _preimage(hom_S, Rb) if not Rb.is_trivial() else S_prev
        dl = _derived_length(Rb)
        if R.order == G.order:
            levels.append(Level(G, None, None, [], [], dl, qmode, certified))
            break
        hom_R = hom_S.then(quotient_hom(Q, Rb, config.coset_cap)) if not Rb.is_trivial() else hom_S
        Q2 = hom_R.image
        q2mode = resolve_mode(Q2, mode, config)
        if q2mode == "exact":
            soc = socle_nonabelian(Q2, "exact", config)
        else:
            st2 = structural(Q2, config, seed)
            soc = st2.socle
            certified = certified and st2.certified and st2.radical.is_trivial()
        if soc.socle.is_trivial():
            # only reachable when the structural search missed the socle
            levels.append(Level(R, None, hom_R, [], [], dl, q2mode, False))
            break
        S = _preimage(hom_R, soc.socle)
        levels.append(Level(R, S, hom_R, soc.components, soc.component_ids, dl,
                            "exact" if qmode == q2mode == "exact" else "mc", certified))
        hom_S = hom_R.then(quotient_hom(Q2, soc.socle, config.coset_cap))
        S_prev = S
    cert = RSCertificate(levels)
    cache[ckey] = cert
    return cert


@dataclass
class LambdaResult:
    value: int
    certified: bool
    mode: str
    route: str = "rs-series"

    def to_dict(self) -> dict:
        return {"lambda": self.value if self.certified else f">= {self.value}",
                "certified": self.certified, "mode": self.mode, "route": self.route}


def nonsolvable_length(G: Group, mode: str = "auto", config: Config = DEFAULT,
                       seed: int | None = None) -> LambdaResult:
    """lambda(G); falls back to the maximum over orbit/block quotients when no
    single quotient representation fits the caps."""
    try:
        cert = rs_series(G, mode, config, seed)
        return LambdaResult(cert.lam, cert.certified, cert.mode)
    except CapExceeded:
        kernels = _trivially_intersecting_kernels(G)
        if len(kernels) < 2:
            raise
        val, certified, md = 0, True, "exact"
        for hom in kernels:
            r = nonsolvable_length(hom.image, mode, config, seed)
            val = max(val, r.value)
            certified &= r.certified
            if r.mode != "exact":
                md = "mc"
        return LambdaResult(val, certified, md, "subdirect")


def lam(G: Group, mode: str = "auto", config: Config = DEFAULT, seed: int | None = None) -> int:
    """lambda(G) as an integer; raises if the value is only a lower bound."""
    r = nonsolvable_length(G, mode, config, seed)
    if not r.certified:
        raise GroupError(f"lambda only known as a lower bound (>= {r.value})")
    return r.value


def _trivially_intersecting_kernels(G: Group) -> list[Homomorphism]:
    orbs = [o for o in G.orbits() if len(o) > 1]
    if len(orbs) > 1:
        return [orbit_action(G, o) for o in orbs]
    return []


def lambda_subdirect(G: Group, kernels: list[Group], mode: str = "auto",
                     config: Config = DEFAULT) -> int:
    """max lambda(G/N_i) for normal N_i with trivial intersection."""
    for N in kernels:
        if not N.is_normal_in(G):
            raise GroupError("kernel is not normal in G")
    homs = [quotient_hom(G, N, config.coset_cap) for N in kernels]
    offsets = np.cumsum([0] + [h.image_degree for h in homs])

    def mp(a):
        return np.concatenate([h.map_arr(a) + off for h, off in zip(homs, offsets)]).astype(DTYPE)

    joint = Homomorphism(G, int(offsets[-1]), mp, "product of quotients")
    if joint.kernel.order != 1:
        raise GroupError("kernels have nontrivial intersection")
    return max(lam(h.image, mode, config) for h in homs)


def lambda_preserving_orbit(H: Group, mode: str = "auto", config: Config = DEFAULT):
    """An orbit (1-based points) whose action image has the same lambda as H."""
    target = lam(H, mode, config)
    report = VerifyReport("orbit image preserves lambda", f"degree {H.degree}", expected=target)
    with timed(report):
        orbs = [o for o in H.orbits() if len(o) > 1] or [H.orbits()[0]]
        for o in orbs:
            val = lam(orbit_action(H, o).image, mode, config)
            if val == target:
                report.computed = val
                report.verdict = "pass"
                return [p + 1 for p in o], report
        report.verdict = "fail"
        report.details.append("no orbit attains lambda(H) within caps")
    return None, report


# -- verification ----------------------------------------------------------------

def _commute(a: Permutation, b: Permutation) -> bool:
    return bool((b.arr[a.arr] == a.arr[b.arr]).all())


def verify_certificate(G: Group, cert: RSCertificate, config: Config = DEFAULT) -> VerifyReport:
    report = VerifyReport("RS-series certificate", cert.provenance,
                          expected={"lambda": cert.lam})
    fails = report.details
    unknown = []
    with timed(report):
        terms = cert.terms()
        if not cert.levels:
            if not G.is_trivial():
                fails.append("empty chain for a nontrivial group")
        else:
            top = cert.levels[-1]
            if top.S is not None or top.R.order != G.order or not G.is_subgroup_of(top.R):
                fails.append("last term is not G")
        prev = trivial_group(G.degree)
        for kind, T in terms:
            if not prev.is_subgroup_of(T) or T.order % prev.order:
                fails.append(f"{kind}-term of order {T.order} does not contain its predecessor")
            if not T.is_subgroup_of(G) or not T.is_normal_in(G):
                fails.append(f"{kind}-term of order {T.order} is not normal in G")
            prev = T
        S_prev = trivial_group(G.degree)
        for i, lv in enumerate(cert.levels, 1):
            if S_prev.order < lv.R.order and not solvable_mod(lv.R, S_prev):
                fails.append(f"R_{i}/S_{i - 1} is not solvable")
            if lv.S is None:
                break
            if lv.S.order == lv.R.order:
                fails.append(f"S_{i}/R_{i} is trivial")
                break
            hom = lv.to_R if lv.to_R is not None else quotient_hom(G, lv.R, config.coset_cap)
            if hom.kernel.order != lv.R.order or not all(hom(r).is_identity() for r in lv.R.gens):
                fails.append(f"quotient map at level {i} does not have kernel R_{i}")
                break
            Q = hom.image
            Sbar_order = lv.S.order // lv.R.order
            Sbar = hom.image_of(lv.S, Sbar_order)
            comps = lv.components
            prod = 1
            for c in comps:
                prod *= c.order
                if not c.is_subgroup_of(Sbar):
                    fails.append(f"component of order {c.order} outside S_{i}/R_{i}")
                if c.order <= config.exact_cap:
                    if not is_simple_exact(c, config):
                        fails.append(f"component of order {c.order} is not simple")
                else:
                    unknown.append(f"simplicity of a component of order {c.order} not checked")
            if prod != Sbar_order:
                fails.append(f"component orders multiply to {prod}, not |S_{i}/R_{i}| = {Sbar_order}")
            for a_i, A in enumerate(comps):
                for B in comps[a_i + 1:]:
                    if not all(_commute(a, b) for a in A.gens for b in B.gens):
                        fails.append("two components do not commute")
                        break
            if fails:
                break
            try:
                C = centralizer_of_components(Q, comps)
            except (KeyError, StopIteration):
                fails.append(f"component set at level {i} is not closed under conjugation")
                break
            if not C.is_trivial():
                fails.append(f"C(S_{i}/R_{i}) in G/R_{i} is nontrivial: R_{i} is not the full radical layer")
            S_prev = lv.S
        report.computed = {"lambda": cert.lam, "failed_checks": len(fails)}
        if fails:
            report.verdict = "fail"
        elif unknown:
            report.verdict = "unknown"
            report.details.extend(unknown)
        else:
            report.verdict = "pass"
    return report
