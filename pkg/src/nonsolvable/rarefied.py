"""n-rarefied groups: the three-condition check, the extension test and a
witness search that descends through subgroups of the same nonsolvable length."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .actions import CapExceeded, quotient_hom
from .class_l import SimpleId
from .config import DEFAULT, Config
from .group import Group, GroupError, is_solvable
from .lattice import normalizer, product_order
from .reports import VerifyReport, timed
from .rs_series import RSCertificate, nonsolvable_length, rs_series, verify_certificate
from .structure import conjugates_orbit, frattini

# tri-state evidence: True, False, or None for "unknown"
Tri = bool | None


def _conj(values: list[Tri]) -> Tri:
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _fmt(v: Tri):
    return "unknown" if v is None else v


@dataclass
class RarefiedReport:
    n: int
    cond_unique_min_normal: list[Tri] = field(default_factory=list)
    cond_components_in_L: list[Tri] = field(default_factory=list)
    component_ids: list[list[SimpleId]] = field(default_factory=list)
    cond_frattini: list[Tri] = field(default_factory=list)
    frattini_evidence: list[str] = field(default_factory=list)
    reasons: list[str] = field(default_factory=list)
    strict_verdict: Tri = None
    strong_verdict: Tri = None
    mode: str = "exact"
    certified: bool = True
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "cond_unique_min_normal": [_fmt(v) for v in self.cond_unique_min_normal],
            "cond_components_in_L": [
                {"holds": _fmt(v), "components": [c.to_dict() for c in ids]}
                for v, ids in zip(self.cond_components_in_L, self.component_ids)],
            "cond_frattini": [{"holds": _fmt(v), "evidence": e}
                              for v, e in zip(self.cond_frattini, self.frattini_evidence)],
            "reasons": self.reasons,
            "strict_verdict": _fmt(self.strict_verdict),
            "strong_verdict": _fmt(self.strong_verdict),
            "mode": self.mode,
            "certified": self.certified,
            "seed": self.seed,
        }


def _in_L(sid: SimpleId) -> Tri:
    if sid.flag == "ambiguous" and sid.in_L:
        return None
    return sid.in_L


def _frattini_matches(Q: Group, expected_order: int, cfg: Config) -> tuple[Tri, str]:
    """Whether |Phi(Q)| equals ``expected_order`` (the radical of Q)."""
    if expected_order == 1:
        return True, "radical trivial, so Phi = 1"
    try:
        phi, how = frattini(Q, cfg)
    except CapExceeded as exc:
        return None, f"unknown: {exc}"
    return phi.order == expected_order, f"|Phi| = {phi.order}, |radical| = {expected_order} ({how})"


def check_rarefied(G: Group, mode: str = "auto", config: Config = DEFAULT,
                   seed: int | None = None) -> RarefiedReport:
    cert = rs_series(G, mode, config, seed)
    n = cert.lam
    rep = RarefiedReport(n, mode=cert.mode, certified=cert.certified, seed=seed)
    if n == 0:
        # every condition ranges over i = 1..n
        rep.strict_verdict = True
        rep.strong_verdict = G.is_trivial()
        rep.reasons.append("lambda = 0: vacuously 0-rarefied")
        return rep
    levels = cert.levels
    for i, lv in enumerate(levels[:n], 1):
        Q = lv.to_R.image
        comps = lv.components
        if not lv.certified:
            rep.cond_unique_min_normal.append(None)
        else:
            # with trivial radical, the socle is minimal normal iff Q is
            # transitive on its components
            unique = len(conjugates_orbit(Q, comps[0])) == len(comps)
            rep.cond_unique_min_normal.append(unique)
            if not unique:
                rep.reasons.append(f"level {i}: {len(comps)} components in more than one orbit")
        ids = lv.component_ids
        rep.component_ids.append(ids)
        inL = _conj([_in_L(s) for s in ids])
        rep.cond_components_in_L.append(inL)
        for s in ids:
            if _in_L(s) is False:
                rep.reasons.append(f"component order {s.order} ∉ \U0001d4db")
                break
    # R_1 = Phi(G), then R_{i+1}/S_i = Phi(G/S_i) for i < n
    v, ev = _frattini_matches(G, levels[0].R.order, config)
    rep.cond_frattini.append(v)
    rep.frattini_evidence.append(ev)
    for i in range(1, n):
        S_i, R_next = levels[i - 1].S, levels[i].R
        if R_next.order == S_i.order:
            v, ev = True, "radical trivial, so Phi = 1"
        else:
            try:
                Q = quotient_hom(G, S_i, config.coset_cap).image
                v, ev = _frattini_matches(Q, R_next.order // S_i.order, config)
            except CapExceeded as exc:
                v, ev = None, f"unknown: {exc}"
        rep.cond_frattini.append(v)
        rep.frattini_evidence.append(ev)
    for i, v in enumerate(rep.cond_frattini):
        if v is False:
            rep.reasons.append(f"Frattini condition fails at level {i}")
    rep.strict_verdict = _conj(rep.cond_unique_min_normal + rep.cond_components_in_L
                               + rep.cond_frattini)
    if not cert.certified and rep.strict_verdict:
        rep.strict_verdict = None
    top = levels[n - 1].S.order == G.order
    rep.strong_verdict = rep.strict_verdict if top or rep.strict_verdict is False else False
    if not top:
        rep.reasons.append("G is not S_n(G)")
    return rep


def extends_test(K: Group, X: Group, Y: Group, config: Config = DEFAULT) -> bool:
    """Y = X N_Y(K) for K <= X normal in Y."""
    if not K.is_subgroup_of(X):
        raise GroupError("K is not a subgroup of X")
    if not X.is_normal_in(Y):
        raise GroupError("X is not normal in Y")
    if Y.order > config.exact_cap:
        raise CapExceeded(f"group order {Y.order} exceeds normalizer cap {config.exact_cap}")
    if X.order == Y.order:
        return True
    NK = normalizer(Y, K, config)
    return product_order(Y, X, NK, config) == Y.order


# -- witness search ------------------------------------------------------------------

@dataclass
class _Search:
    n: int
    cfg: Config
    rng: random.Random
    mode: str
    seen: set = field(default_factory=set)

    def lam_ok(self, H: Group) -> bool:
        if H.is_trivial() or is_solvable(H):
            return False
        try:
            r = nonsolvable_length(H, self.mode, self.cfg)
        except CapExceeded:
            return False
        return r.certified and r.value == self.n

    def fresh(self, H: Group) -> bool:
        key = (H.order, frozenset(g.key() for g in H.gens))
        if key in self.seen:
            return False
        self.seen.add(key)
        return True

    def mono(self, H: Group, cert: RSCertificate) -> list[Group]:
        """Preimage of one simple factor of the top semisimple layer."""
        lv = cert.levels[self.n - 1]
        if len(lv.components) == 1 and lv.S.order == H.order:
            return []
        return [lv.to_R.preimage(lv.components[0])]

    def normalizer_step(self, H: Group, cert: RSCertificate) -> list[Group]:
        """Inside a top component outside the class, take nonsolvable point
        stabilizers and pass to their normalizers."""
        lv = cert.levels[self.n - 1]
        ids = lv.component_ids
        if all(_in_L(s) for s in ids):
            return []
        Q = lv.to_R.image
        T = lv.components[0]
        out = []
        for pts in T.orbits():
            if len(pts) < 2:
                continue
            Hs = T.point_stabilizer(pts[0] + 1)
            if Hs.is_trivial() or is_solvable(Hs):
                continue
            if Q.order <= self.cfg.exact_cap:
                try:
                    Hs = normalizer(Q, Hs, self.cfg)
                except CapExceeded:
                    pass
            out.append(lv.to_R.preimage(Hs))
        return out

    def supplements(self, H: Group, tries: int) -> list[Group]:
        """Proper subgroups of H generated by random pairs."""
        out = []
        for _ in range(tries):
            K = Group(H.degree, [H.random_element(self.rng), H.random_element(self.rng)])
            if K.order < H.order:
                out.append(K)
        return out

    def fallback(self, H: Group) -> list[Group]:
        out = []
        for o in H.orbits():
            if len(o) > 1:
                K = H.point_stabilizer(o[0] + 1)
                if K.order < H.order:
                    out.append(K)
        return out


def find_rarefied_subgroup(G: Group, seed: int = 0, config: Config = DEFAULT,
                           mode: str = "auto", budget: int = 60) -> tuple[Group, RarefiedReport]:
    """A subgroup H of G with lambda(H) = lambda(G) passing the strict check.

    Candidates are explored largest first and each step produces strictly
    smaller subgroups, so the search terminates.  A strong witness is
    preferred; otherwise the first strict witness is returned.
    """
    r = nonsolvable_length(G, mode, config, seed)
    if not r.certified:
        raise GroupError("lambda(G) is only a lower bound")
    n = r.value
    if n < 1:
        raise GroupError("G is solvable: lambda(G) = 0")
    search = _Search(n, config, random.Random(seed), mode)
    queue = [G]
    search.fresh(G)
    strict: tuple[Group, RarefiedReport] | None = None
    visited = 0
    while queue and visited < budget:
        queue.sort(key=lambda H: -H.order)
        H = queue.pop(0)
        visited += 1
        rep = check_rarefied(H, mode, config, seed)
        rep.seed = seed
        if rep.strong_verdict is True:
            return _accept(H, n, rep)
        if rep.strict_verdict is True and strict is None:
            strict = (H, rep)
        cert = rs_series(H, mode, config, seed)
        children = search.mono(H, cert) + search.normalizer_step(H, cert)
        if not children:
            children = search.supplements(H, 6)
        if not children and H.order <= config.lattice_cap:
            children = search.fallback(H)
        for K in children:
            if K.order < H.order and search.fresh(K) and search.lam_ok(K):
                queue.append(K)
    if strict is not None:
        return _accept(strict[0], n, strict[1])
    raise CapExceeded(f"no rarefied subgroup found within a budget of {budget} candidates")


def _accept(H: Group, n: int, rep: RarefiedReport):
    assert rep.strict_verdict is True and rep.n == n, "witness failed its own check"
    return H, rep


# -- closure properties ------------------------------------------------------------

def quotient_stays_rarefied(G: Group, N: Group, mode: str = "auto",
                            config: Config = DEFAULT) -> VerifyReport:
    report = VerifyReport("quotient of a rarefied group is rarefied",
                          f"|G| = {G.order}, |N| = {N.order}")
    with timed(report):
        if not N.is_normal_in(G):
            raise GroupError("N is not normal in G")
        base = check_rarefied(G, mode, config)
        if base.strict_verdict is not True:
            report.verdict = "unknown"
            report.details.append("G is not strict-rarefied")
            return report
        Q = quotient_hom(G, N, config.coset_cap).image
        rq = check_rarefied(Q, mode, config)
        report.computed = {"m": rq.n, "strict": _fmt(rq.strict_verdict)}
        report.expected = {"m_at_most": base.n, "strict": True}
        if rq.strict_verdict is None:
            report.verdict = "unknown"
        else:
            report.verdict = "pass" if rq.strict_verdict and rq.n <= base.n else "fail"
        report.details.extend(rq.reasons)
    return report


def lambda_additivity(G: Group, N: Group, mode: str = "auto", config: Config = DEFAULT,
                      certificate: RSCertificate | None = None) -> VerifyReport:
    """lambda(G) = lambda(N) + lambda(G/N).  A supplied certificate for G is
    verified and then used for lambda(G)."""
    report = VerifyReport("lambda is additive over a normal subgroup",
                          f"|G| = {G.order}, |N| = {N.order}")
    with timed(report):
        if not N.is_normal_in(G):
            raise GroupError("N is not normal in G")
        if certificate is not None and verify_certificate(G, certificate, config).passed:
            lg = certificate.lam
        else:
            lg = nonsolvable_length(G, mode, config).value
        ln = nonsolvable_length(N, mode, config).value
        lq = nonsolvable_length(quotient_hom(G, N, config.coset_cap).image, mode, config).value
        report.computed = {"lambda_G": lg, "lambda_N": ln, "lambda_quotient": lq}
        report.expected = {"lambda_G": ln + lq}
        report.verdict = "pass" if lg == ln + lq else "fail"
    return report
