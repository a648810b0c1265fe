"""Independent reference computations used to freeze expected values.

Nothing here imports the package; every routine is a direct, slow
enumeration or textbook elimination.
"""

from fractions import Fraction
from itertools import product


def brute_force_monomials(weights, k):
    """All exponent tuples with sum k_i w_i == k, by exhaustive product."""
    ranges = [range(k // w + 1) for w in weights]
    return [e for e in product(*ranges) if sum(a * w for a, w in zip(e, weights)) == k]


def series_coefficients(weights, top):
    """Coefficients of prod 1/(1 - t^w) up to t^top, by repeated series multiplication."""
    coeffs = [1] + [0] * top
    for w in weights:
        # multiply by 1 + t^w + t^2w + ...
        new = [0] * (top + 1)
        for i, c in enumerate(coeffs):
            if c:
                for j in range(i, top + 1, w):
                    new[j] += c
        coeffs = new
    return coeffs


def fermat_hilbert_oracle(k, caps=(8, 8, 3, 0), weights=(1, 1, 2, 5)):
    """Count monomials of degree k with k_i <= caps[i] (x4 excluded: cap 0)."""
    count = 0
    for e in brute_force_monomials(weights, k):
        if all(a <= c for a, c in zip(e, caps)):
            count += 1
    return count


def gauss_rank(rows):
    """Plain Gaussian elimination over Fractions, partial pivoting on nonzero."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        pivot = None
        for i in range(r, nr):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nr):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                for j in range(c, nc):
                    m[i][j] -= f * m[r][j]
        r += 1
    return r
