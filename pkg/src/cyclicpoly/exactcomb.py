"""Exact binomial coefficients and rows of Pascal's triangle."""

from math import comb


def binom(n: int, k: int) -> int:
    """Return C(n, k) exactly, with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def pascal_row(n: int) -> tuple[int, ...]:
    """Return (C(n,0), ..., C(n,n))."""
    if n < 0:
        raise ValueError(f"pascal_row requires n >= 0, got n={n}")
    row = [1]
    # running product; each division is exact
    for k in range(1, n + 1):
        row.append(row[-1] * (n - k + 1) // k)
    return tuple(row)
