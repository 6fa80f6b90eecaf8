"""Recognition of nonabelian simple groups by order, and the class L test.

The order table is generated from the family order formulas up to a bound.
Recognition by order rests on the classification fact that only two kinds
of order coincidence exist between non-isomorphic simple groups: A8 and
PSL3(4), and B_m(q) with C_m(q) for m >= 3 and q odd.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd, prod

DEFAULT_BOUND = 10 ** 12

# orders of sporadic groups that fall under the default bound
SPORADIC = {
    "M11": 7920, "M12": 95040, "J1": 175560, "M22": 443520, "J2": 604800,
    "M23": 10200960, "HS": 44352000, "J3": 50232960, "M24": 244823040,
    "McL": 898128000, "He": 4030387200, "Ru": 145926144000,
    "Suz": 448345497600, "O'N": 460815505920, "Co3": 495766656000,
}

# names of one group under different families
ISOMORPHISMS = [
    {"A5", "PSL2(4)", "PSL2(5)"},
    {"A6", "PSL2(9)"},
    {"PSL2(7)", "PSL3(2)"},
    {"A8", "PSL4(2)"},
    {"PSU4(2)", "PSp4(3)"},
]


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p^k, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_power(n) == (n, 1)


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def l_membership_for_parameters(family: str, q: int) -> bool:
    """Whether the simple group of ``family`` with parameter ``q`` is in L."""
    if family == "Alt":
        return q in (5, 6)
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if family == "PSL2":
        if p == 2:
            return _is_prime(k)
        if p == 3 and _is_prime(k):
            return True
        return _is_power_of_two(k)
    if family in ("PSL3_3", "PSL3"):
        return q == 3
    if family == "Sz":
        return p == 2 and k % 2 == 1 and _is_prime(k)
    return False


# -- order formulas -------------------------------------------------------------

def order_psl2(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def order_sz(q: int) -> int:
    return q * q * (q * q + 1) * (q - 1)


def order_psl(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(2, n + 1)) // gcd(n, q - 1)


def order_psu(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(2, n + 1)) // gcd(n, q + 1)


def order_psp(m: int, q: int) -> int:
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // gcd(2, q - 1)


def order_pomega(m: int, q: int, eps: int) -> int:
    return (q ** (m * (m - 1)) * (q ** m - eps) * prod(q ** (2 * i) - 1 for i in range(1, m))
            // gcd(4, q ** m - eps))


def _prime_powers(limit: int):
    for q in range(2, limit + 1):
        if prime_power(q):
            yield q


@lru_cache(maxsize=4)
def order_table(bound: int = DEFAULT_BOUND) -> dict[int, list[tuple[str, int | None, str]]]:
    """order -> list of (family, parameter, name) for simple groups up to ``bound``."""
    table: dict[int, list[tuple[str, int | None, str]]] = {}

    def add(order, family, q, name):
        if order <= bound:
            table.setdefault(order, []).append((family, q, name))

    n = 5
    while factorial(n) // 2 <= bound:
        add(factorial(n) // 2, "Alt", n, f"A{n}")
        n += 1
    q = 4
    while order_psl2(q) <= bound:
        if prime_power(q):
            add(order_psl2(q), "PSL2", q, f"PSL2({q})")
        q += 1
    s = 3
    while order_sz(2 ** s) <= bound:
        add(order_sz(2 ** s), "Sz", 2 ** s, f"Sz({2 ** s})")
        s += 2
    for dim in range(3, 12):
        for q in _prime_powers(10 ** 6):
            o = order_psl(dim, q)
            if o > bound:
                break
            fam = "PSL3_3" if (dim, q) == (3, 3) else "Other"
            add(o, fam, q, f"PSL{dim}({q})")
        for q in _prime_powers(10 ** 6):
            o = order_psu(dim, q)
            if o > bound:
                break
            if (dim, q) != (3, 2):
                add(o, "Other", q, f"PSU{dim}({q})")
    for m in range(2, 8):
        for q in _prime_powers(10 ** 6):
            o = order_psp(m, q)
            if o > bound:
                break
            if (m, q) != (2, 2):
                add(o, "Other", q, f"PSp{2 * m}({q})")
                if m >= 3 and q % 2:
                    add(o, "Other", q, f"O{2 * m + 1}({q})")
    for m in range(4, 8):
        for eps, tag in ((1, "+"), (-1, "-")):
            for q in _prime_powers(10 ** 6):
                o = order_pomega(m, q, eps)
                if o > bound:
                    break
                add(o, "Other", q, f"O{tag}{2 * m}({q})")
    for q in _prime_powers(10 ** 6):
        o = q ** 6 * (q ** 6 - 1) * (q * q - 1)
        if o > bound:
            break
        if q > 2:
            add(o, "Other", q, f"G2({q})")
    s = 3
    while (q := 3 ** s) ** 3 * (q ** 3 + 1) * (q - 1) <= bound:
        add(q ** 3 * (q ** 3 + 1) * (q - 1), "Other", q, f"2G2({q})")
        s += 2
    for q in _prime_powers(10 ** 6):
        o = q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q * q - 1)
        if o > bound:
            break
        add(o, "Other", q, f"3D4({q})")
    add(17971200, "Other", None, "2F4(2)'")
    for name, o in SPORADIC.items():
        add(o, "Other", None, name)
    return table


@dataclass
class SimpleId:
    family: str
    q: int | None
    order: int
    in_L: bool
    names: list[str] = field(default_factory=list)
    flag: str = ""  # "", "ambiguous" or "unrecognized"

    def to_dict(self) -> dict:
        d = {"family": self.family, "q": self.q, "order": self.order, "in_L": self.in_L,
             "names": self.names}
        if self.flag:
            d["flag"] = self.flag
        return d


def _isomorphism_classes(names: list[str]) -> list[set[str]]:
    classes: list[set[str]] = []
    for nm in names:
        for iso in ISOMORPHISMS:
            if nm in iso:
                hit = next((c for c in classes if c & iso), None)
                if hit is None:
                    classes.append({nm})
                else:
                    hit.add(nm)
                break
        else:
            classes.append({nm})
    return classes


_FAMILY_RANK = {"PSL2": 0, "PSL3_3": 1, "Sz": 2, "Alt": 3, "Other": 4}


def identify_simple_by_order(order: int, bound: int = DEFAULT_BOUND) -> SimpleId:
    if order > bound:
        return SimpleId("Other", None, order, False, [], "unrecognized")
    entries = order_table(bound).get(order)
    if not entries:
        return SimpleId("Other", None, order, False, [], "unrecognized")
    entries = sorted(entries, key=lambda e: (_FAMILY_RANK[e[0]], e[1] or 0))
    names = [e[2] for e in entries]
    in_L = any(fam != "Other" and q is not None and l_membership_for_parameters(fam, q)
               for fam, q, _ in entries)
    fam, q, _ = entries[0]
    flag = "ambiguous" if len(_isomorphism_classes(names)) > 1 else ""
    return SimpleId(fam, q, order, in_L, names, flag)
