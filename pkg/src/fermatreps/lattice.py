"""Lattice-point counts in the triangle 0 <= i, j, i+j <= M under congruences.

The quantity I_M(X, Y) is a double root-of-unity sum that collapses to n^2
times the number of points of the triangle E_M with i = -X and j = -Y mod n;
J_M(X) is the one-dimensional analogue over 0 <= i <= floor(M/2).  The
closed forms below evaluate the differences I_M - I_{M-n} and J_M - J_{M-n}
without enumeration; `count_triangle` is the deliberately naive O(M^2)
enumeration oracle the closed forms are tested against.

Empty ranges (M < 0) count as zero throughout, and floors of negative
integers round toward minus infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclo, root_power


@dataclass(frozen=True)
class TriangleQuery:
    """Triangle size M (M < 0 means empty), modulus n, congruence shifts X, Y."""

    M: int
    n: int
    X: int
    Y: int


def residue(k: int, n: int) -> int:
    """The remainder of k by n, in 0 .. n-1."""
    return k % n


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def count_triangle(q: TriangleQuery) -> int:
    """Enumerate {(i,j) in E_M : i = -X, j = -Y mod n}. Brute force on purpose."""
    if q.M < 0:
        return 0
    a = (-q.X) % q.n
    b = (-q.Y) % q.n
    total = 0
    for i in range(q.M + 1):
        for j in range(q.M - i + 1):
            if i % q.n == a and j % q.n == b:
                total += 1
    return total


def triangle_residue_counts(M: int, n: int) -> list[list[int]]:
    """counts[a][b] = #{(i,j) in E_M : i = a, j = b mod n}, one enumeration pass."""
    counts = [[0] * n for _ in range(n)]
    for i in range(M + 1):
        for j in range(M - i + 1):
            counts[i % n][j % n] += 1
    return counts


def I_M(q: TriangleQuery) -> int:
    return q.n * q.n * count_triangle(q)


def I_M_rootsum(q: TriangleQuery) -> Cyclo:
    """The defining double sum of root powers, evaluated directly in Z[zeta_n].

    Exists to confirm the collapse to n^2 * count_triangle; only usable for
    small M and n.
    """
    n = q.n
    total = Cyclo.zero(n)
    for alpha in range(n):
        for beta in range(n):
            for i in range(q.M + 1):
                for j in range(q.M - i + 1):
                    total = total + root_power(n, alpha * (i + q.X) + beta * (j + q.Y))
    return total


def J_M(M: int, n: int, X: int) -> int:
    """n^2 * #{0 <= i <= floor(M/2) : i = -X mod n}; zero for M < 0."""
    if M < 0:
        return 0
    v = (-X) % n
    return n * n * sum(1 for i in range(M // 2 + 1) if i % n == v)


def J_M_rootsum(M: int, n: int, X: int, form: tuple[int, int] = (1, 1)) -> Cyclo:
    """Direct root-power evaluation of the J sum for one of the three linear forms.

    `form` gives the coefficients (ca, cb) of alpha and beta in the exponent;
    the sums for (1, 1), (1, -2) and (-2, 1) all agree.
    """
    ca, cb = form
    total = Cyclo.zero(n)
    for alpha in range(n):
        for beta in range(n):
            c = ca * alpha + cb * beta
            for i in range(M // 2 + 1):
                total = total + root_power(n, c * (i + X))
    return total


def alpha(n: int, m: int, X: int, Y: int) -> int:
    """Branch correction in {-1, 0, 1} for the difference count I_diff / n^2.

    Main branch (m(n-3) + 1 >= n): the difference count is
    m - ceil((3m-1)/n) + alpha.  Small branch: the count is alpha itself,
    which is then 0 or 1.
    """
    M = m * (n - 3)
    v_x = (-X) % n
    v_y = (-Y) % n
    if M + 1 >= n:
        r = (1 - 3 * m) % n  # = residue of M + 1
        if v_x + v_y < r:
            return 1
        if v_x >= r and v_x - r + v_y >= n:
            return -1
        return 0
    return 1 if v_x + v_y <= M else 0


def I_diff(n: int, m: int, X: int, Y: int) -> int:
    """Closed form for I_{m(n-3)}(X,Y) - I_{m(n-3)-n}(X,Y), both branches."""
    base = m - _ceil_div(3 * m - 1, n)
    return n * n * (base + alpha(n, m, X, Y))


def J_diff(n: int, m: int, X: int) -> int:
    """Normalized count (no n^2 factor) of i in (floor((M-n)/2), floor(M/2)]
    with i = -X mod n, M = m(n-3).  Always 0 or 1."""
    M = m * (n - 3)
    v = (-X) % n
    if M + 1 >= n:
        lo = (M - n) // 2 + 1
        hi = M // 2
        count = (hi - v) // n - _ceil_div(lo - v, n) + 1
    else:
        count = (M // 2 - v) // n + 1
    assert count in (0, 1), f"J_diff out of range: {count}"
    return count
