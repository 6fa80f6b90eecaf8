"""Small finite fields GF(p^k), p in {2,3,5,7}, k <= 2, via log/exp tables.

An element is an int 0..q-1 whose base-p digits are polynomial
coefficients (constant term first).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

SUPPORTED_PRIMES = (2, 3, 5, 7)


class GF:
    def __init__(self, q: int):
        pk = _split(q)
        if pk is None:
            raise ValueError(f"GF({q}) not supported: need p^k with p in {SUPPORTED_PRIMES}, k <= 2")
        self.q = q
        self.p, self.k = pk
        p = self.p
        if self.k == 1:
            self.modulus = None
        else:
            # monic irreducible x^2 + a x + b: no root in GF(p)
            self.modulus = next((a, b) for a, b in product(range(p), range(1, p))
                                if all((x * x + a * x + b) % p for x in range(p)))
        self._build_tables()

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.k)]

    def _from_digits(self, d) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, x: int, y: int) -> int:
        return self._from_digits([(a + b) % self.p for a, b in zip(self._digits(x), self._digits(y))])

    def neg(self, x: int) -> int:
        return self._from_digits([(-a) % self.p for a in self._digits(x)])

    def _slow_mul(self, x: int, y: int) -> int:
        p = self.p
        if self.k == 1:
            return x * y % p
        a0, a1 = self._digits(x)
        b0, b1 = self._digits(y)
        c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        # x^2 = -a x - b
        ma, mb = self.modulus
        return self._from_digits([(c0 - c2 * mb) % p, (c1 - c2 * ma) % p])

    def _build_tables(self):
        q = self.q
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._slow_mul(x, g)
                exp.append(x)
            if len(set(exp)) == q - 1:
                break
        self.primitive = g
        self.exp = exp
        self.log = {v: i for i, v in enumerate(exp)}
        self.add_table = [[self.add(a, b) for b in range(q)] for a in range(q)]

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[x]) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)


def _split(q: int):
    for p in SUPPORTED_PRIMES:
        for k in (1, 2):
            if p ** k == q:
                return p, k
    return None


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


Matrix = tuple[tuple[int, ...], ...]


def mat_mul(F: GF, A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for t in range(n):
                s = F.add_table[s][F.mul(A[i][t], B[t][j])]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def determinant(F: GF, A: Matrix) -> int:
    """Determinant by Gaussian elimination."""
    n = len(A)
    M = [list(r) for r in A]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        ic = F.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c]:
                f = F.mul(M[r][c], ic)
                M[r] = [F.add_table[M[r][j]][F.neg(F.mul(f, M[c][j]))] for j in range(n)]
    return det


def gl_generators(F: GF, d: int) -> list[Matrix]:
    """diag(w, 1, ..., 1) and the transvections E_ij(1), E_ij(w) for adjacent i, j;
    together they generate GL(d, q)."""
    w = F.primitive
    ident = [[int(i == j) for j in range(d)] for i in range(d)]
    gens = []
    D = [r[:] for r in ident]
    D[0][0] = w
    gens.append(D)
    for i in range(d - 1):
        for a in {1, w}:
            for (r, c) in ((i, i + 1), (i + 1, i)):
                E = [row[:] for row in ident]
                E[r][c] = a
                gens.append(E)
    return [tuple(tuple(r) for r in g) for g in gens]


def gl_order(q: int, d: int) -> int:
    o = 1
    for i in range(d):
        o *= q ** d - q ** i
    return o
