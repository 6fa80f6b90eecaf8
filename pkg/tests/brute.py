"""Tiny brute-force helpers for tests, independent of the package's chain code."""
from itertools import permutations


def closure(degree, gens):
    """All elements of <gens> as image tuples (0-based), by breadth-first search."""
    ident = tuple(range(degree))
    seen = {ident}
    todo = [ident]
    for x in todo:
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def compose(p, q):
    """p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def all_perms(n):
    return set(permutations(range(n)))
