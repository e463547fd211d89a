"""Exact rational helpers used throughout the package."""

try:
    from gmpy2 import mpq, mpz
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq
    mpz = int


def QQ(a, b=1):
    """Exact rational from ints (or anything mpq accepts)."""
    return mpq(a, b)


def is_rational(x):
    return isinstance(x, (int, type(mpq(0)))) or type(x).__name__ in ("mpz", "Fraction")


def as_rational(x):
    if isinstance(x, int):
        return mpq(x)
    return mpq(x)


def int_val(n, p):
    """Valuation of a nonzero integer at p."""
    n = int(n)
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rat_val(q, p):
    """Valuation of a nonzero rational at p."""
    q = as_rational(q)
    num, den = int(q.numerator), int(q.denominator)
    if num == 0:
        raise ValueError("valuation of 0")
    if num % p == 0:
        return int_val(num, p)
    if den % p == 0:
        return -int_val(den, p)
    return 0


def rat_unit_mod(q, p, k):
    """For q = p^v * (a/b) with a,b prime to p, return (a * b^-1) mod p^k."""
    q = as_rational(q)
    v = rat_val(q, p)
    num, den = int(q.numerator), int(q.denominator)
    num //= p ** max(v, 0)
    den //= p ** max(-v, 0)
    m = p ** k
    return (num * pow(den, -1, m)) % m
