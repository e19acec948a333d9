"""Factorization of integer polynomials modulo p, plus irreducibility
checks over Q used as input sanity guards.

Lifts of mod-p factors use symmetric representatives in (-p/2, p/2] so the
coefficients of phi-adic developments stay small.
"""

from math import isqrt

from .arith import check_prime, symmetric_rep
from .errors import NotIrreducibleError
from .fq import DEFAULT_SEED, FqField, FqPoly, factor_fqpoly
from .intpoly import IntPoly

_X = IntPoly([0, 1])


def _to_fp_poly(f, p):
    field = FqField(p, (0, 1))  # F_p as F_p[t]/(t)
    return FqPoly(field, [c % p for c in f.coeffs])


def _lift_symmetric(g, p):
    return IntPoly([symmetric_rep(c.scalar(), p) for c in g.coeffs])


def factor_mod_p(f, p, seed=DEFAULT_SEED):
    """Complete factorization of f mod p.

    Returns a list of (lift, multiplicity) pairs where each lift is a monic
    IntPoly with symmetric coefficients reducing to an irreducible factor of
    f mod p.  The list is deterministically ordered."""
    check_prime(p)
    fbar = _to_fp_poly(f, p)
    if fbar.is_zero():
        raise ValueError("f vanishes mod p")
    _, factors = factor_fqpoly(fbar, seed)
    return [(_lift_symmetric(g, p), m) for g, m in factors]


def is_irreducible_mod_p(phi, p, seed=DEFAULT_SEED):
    gbar = _to_fp_poly(phi, p)
    if gbar.degree < 1:
        return False
    _, factors = factor_fqpoly(gbar, seed)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == gbar.degree


def ord_mod_p(f, phi, p):
    """Largest a with phi^a | f mod p (0 when phi does not divide f mod p)."""
    fbar = _to_fp_poly(f, p)
    pbar = _to_fp_poly(phi, p)
    a = 0
    while True:
        q, r = divmod(fbar, pbar)
        if not r.is_zero():
            return a
        a += 1
        fbar = q


def integer_roots(f):
    """All integer roots of a monic integer polynomial."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    if f[0] == 0:
        roots.append(0)
        while f[0] == 0:
            f = f // _X
    c0 = abs(f[0])
    if c0 == 0:
        return sorted(set(roots))
    divs = set()
    for d in range(1, isqrt(c0) + 1):
        if c0 % d == 0:
            divs.update((d, -d, c0 // d, -(c0 // d)))
    roots.extend(d for d in divs if f(d) == 0)
    return sorted(set(roots))


def is_irreducible_quartic(a, b, c):
    """Exact irreducibility test for x^4 + a*x^2 + b*x + c over Q.

    A monic quartic splits as 1+3 (giving an integer root) or as 2+2:
    (x^2+ux+v)(x^2-ux+w) with vw = c, v+w-u^2 = a, u(w-v) = b."""
    f = IntPoly.monic_quartic(a, b, c)
    if c == 0 or integer_roots(f):
        return False
    divs = set()
    for d in range(1, isqrt(abs(c)) + 1):
        if c % d == 0:
            divs.update((d, -d, c // d, -(c // d)))
    for v in divs:
        w = c // v
        u2 = v + w - a
        if u2 < 0:
            continue
        u = isqrt(u2)
        if u * u != u2:
            continue
        if u * (w - v) == b or -u * (w - v) == b:
            return False
    return True


_WITNESS_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def is_irreducible(f, tries=10):
    """Best-effort irreducibility test for a monic integer polynomial.

    Returns True (proved irreducible), False (proved reducible), or None when
    the mod-q degree patterns stay ambiguous.  Degree <= 3 and quartics of
    the shape x^4+ax^2+bx+c are decided exactly."""
    n = f.degree
    if n <= 0:
        return False
    if not f.monic:
        raise ValueError("monic polynomial required")
    if n == 1:
        return True
    if f[0] == 0 or integer_roots(f):
        return False
    if n <= 3:
        return True  # no roots, so no factor of degree 1 and none of degree n-1
    if n == 4 and f[3] == 0:
        return is_irreducible_quartic(f[2], f[1], f[0])
    possible = set(range(1, n))
    used = 0
    for q in _WITNESS_PRIMES:
        fq = _to_fp_poly(f, q)
        if fq.degree != n:
            continue
        _, factors = factor_fqpoly(fq, seed=DEFAULT_SEED)
        degs = []
        for g, m in factors:
            degs.extend([g.degree] * m)
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        possible &= sums
        used += 1
        if not possible:
            return True
        if used >= tries:
            break
    return None


def require_irreducible_quartic(a, b, c):
    if not is_irreducible_quartic(a, b, c):
        raise NotIrreducibleError(
            f"x^4{'+' if a >= 0 else ''}{a}x^2{'+' if b >= 0 else ''}{b}x"
            f"{'+' if c >= 0 else ''}{c} is reducible over Q"
        )


def sanity_check_irreducible(f):
    """Raise NotIrreducibleError when a rational root or (for shape
    x^4+ax^2+bx+c) a quadratic factor is detected; silent otherwise."""
    if f.degree >= 1 and f.monic:
        if f.degree > 1 and (f[0] == 0 or integer_roots(f)):
            raise NotIrreducibleError(f"{f.render()} has a rational root")
        if f.degree == 4 and f[3] == 0 and not is_irreducible_quartic(f[2], f[1], f[0]):
            raise NotIrreducibleError(f"{f.render()} factors over Q")
