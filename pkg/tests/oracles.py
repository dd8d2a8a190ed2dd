"""Independent dense reference implementations used to cross-check the
sparse library routines. Nothing here imports weakhopf internals."""

from fractions import Fraction


def matmul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    assert all(len(row) == m for row in a)
    return [[sum(a[i][t] * b[t][j] for t in range(m)) for j in range(k)] for i in range(n)]


def kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    return [[a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)]
            for i in range(ra * rb)]


def flip_matrix(a, b):
    """Permutation with column i*b + j -> row j*a + i."""
    out = [[0] * (a * b) for _ in range(a * b)]
    for i in range(a):
        for j in range(b):
            out[j * a + i][i * b + j] = 1
    return out


def eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rank(rows, p=None):
    """Plain Gaussian elimination over Q (or GF(p) when ``p`` is given)."""
    m = [[Fraction(x) if p is None else x % p for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if p is None else pow(m[r][c], -1, p)
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y if p is None else (x - f * y) % p
                        for x, y in zip(m[i], m[r])]
        r += 1
    return r


def random_matrix(rng, rows, cols, lo=-3, hi=3, denominators=(1, 2, 3)):
    return [[Fraction(rng.randint(lo, hi), rng.choice(denominators)) for _ in range(cols)]
            for _ in range(rows)]


def random_idempotent(rng, n, r):
    """``e = C R`` with ``R C = id_r``: C is the first ``r`` columns of a random
    invertible ``P`` and R the first ``r`` rows of its inverse."""
    while True:
        P = random_matrix(rng, n, n)
        if rank(P) == n:
            break
    Pinv = _inverse(P)
    D = [[int(i == j and i < r) for j in range(n)] for i in range(n)]
    return matmul(matmul(P, D), Pinv)


def _inverse(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def loop_algebra_products(table):
    """Dense multiplication matrix of a loop algebra, built directly from the table."""
    n = len(table)
    mul = [[0] * (n * n) for _ in range(n)]
    for x in range(n):
        for y in range(n):
            mul[table[x][y]][x * n + y] = 1
    return mul
