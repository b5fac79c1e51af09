"""Slow, obviously-correct reference checks used as test oracles.

Nothing here imports the code paths under test; everything is plain loops
over the raw tables.
"""

from itertools import combinations, product


def brute_brace_ok(add, mul):
    n = len(add)
    E = range(n)
    neg = [next(b for b in E if add[a][b] == 0) for a in E]
    for a, b, c in product(E, repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return False
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return False
        if mul[a][add[b][c]] != add[add[mul[a][b]][mul[a][c]]][neg[a]]:
            return False
    for a, b in product(E, repeat=2):
        if add[a][b] != add[b][a]:
            return False
    for a in E:
        if add[0][a] != a or mul[0][a] != a or mul[a][0] != a:
            return False
        if not any(mul[a][b] == 0 == mul[b][a] for b in E):
            return False
    return True


def brute_star(add, mul, a, b):
    n = len(add)
    neg = lambda x: next(y for y in range(n) if add[x][y] == 0)  # noqa: E731
    return add[add[mul[a][b]][neg(a)]][neg(b)]


def brute_subbraces(add, mul):
    """Every subset containing 0 closed under both operations (all 2^(n-1) candidates)."""
    n = len(add)
    out = []
    for k in range(n):
        for rest in combinations(range(1, n), k):
            S = (0,) + rest
            Sset = set(S)
            if all(add[x][y] in Sset and mul[x][y] in Sset for x in S for y in S):
                out.append(S)
    return sorted(out, key=lambda s: (len(s), s))


def brute_socle(add, mul):
    n = len(add)
    return {a for a in range(n) if all(brute_star(add, mul, a, x) == 0 for x in range(n))}


def brute_ybe_ok(lam, rho):
    """lam[x][y] = lambda_x(y), rho[y][x] = rho_y(x)."""
    n = len(lam)

    def r(x, y):
        return lam[x][y], rho[y][x]

    for x in range(n):
        if sorted(lam[x]) != list(range(n)) or sorted(rho[x]) != list(range(n)):
            return False
    for x, y in product(range(n), repeat=2):
        if r(*r(x, y)) != (x, y):
            return False
    for x, y, z in product(range(n), repeat=3):
        a, b = r(x, y)
        b, c = r(b, z)
        a, b = r(a, b)
        lhs = (a, b, c)
        b, c = r(y, z)
        a, b = r(x, b)
        b, c = r(b, c)
        if lhs != (a, b, c):
            return False
    return True
