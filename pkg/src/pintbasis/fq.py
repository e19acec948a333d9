"""Finite fields F_p[x]/(m(x)) and univariate polynomials over them.

Residual polynomials of Newton polygon sides live over F_phi = F_p[x]/(p, phi),
so we need field arithmetic, gcds, separability tests and full factorization
(squarefree split + distinct-degree + Cantor-Zassenhaus equal-degree) over
these small fields.  Equal-degree splitting is randomized; the generator is
seeded so every run is reproducible (see DEFAULT_SEED).
"""

import random

from .arith import check_prime, inv_mod
from .intpoly import IntPoly

DEFAULT_SEED = 20259

# -- arithmetic on coefficient tuples over F_p --------------------------------


def _trim(t):
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    inv = inv_mod(b[-1], p)
    rem = list(a)
    if len(a) < len(b):
        return (), _trim(rem)
    quot = [0] * (len(a) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        q = rem[k + len(b) - 1] * inv % p
        quot[k] = q
        if q:
            for j, c in enumerate(b):
                rem[k + j] = (rem[k + j] - q * c) % p
    return _trim(quot), _trim(rem)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = inv_mod(a[-1], p)
        a = _trim([c * inv % p for c in a])
    return a


class FqField:
    """F_p[x]/(modulus); modulus is a monic polynomial irreducible mod p.
    When deg(modulus) = 1 this is just F_p with scalar representatives."""

    def __init__(self, p, modulus):
        check_prime(p)
        if isinstance(modulus, IntPoly):
            modulus = _trim(c % p for c in modulus.coeffs)
        self.p = p
        self.modulus = _trim(modulus)
        if len(self.modulus) < 2:
            raise ValueError("modulus must have degree >= 1")
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.degree = len(self.modulus) - 1
        self.order = p**self.degree

    def __eq__(self, other):
        return (
            isinstance(other, FqField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.degree}"

    def elem(self, rep):
        """Coerce an int, coefficient sequence, or IntPoly into the field."""
        if isinstance(rep, FqElem):
            if rep.field != self:
                raise ValueError("element of a different field")
            return rep
        if isinstance(rep, int):
            rep = (rep % self.p,)
        elif isinstance(rep, IntPoly):
            rep = tuple(c % self.p for c in rep.coeffs)
        else:
            rep = tuple(c % self.p for c in rep)
        if len(rep) >= len(self.modulus):
            rep = _pdivmod(rep, self.modulus, self.p)[1]
        return FqElem(self, _trim(rep))

    def zero(self):
        return FqElem(self, ())

    def one(self):
        return FqElem(self, (1,))

    def gen(self):
        return self.elem((0, 1))

    def elements(self):
        """All field elements (small fields only; used by tests)."""
        from itertools import product

        for rep in product(range(self.p), repeat=self.degree):
            yield FqElem(self, _trim(rep))


class FqElem:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def is_zero(self):
        return not self.rep

    def __eq__(self, other):
        return (
            isinstance(other, FqElem)
            and self.field == other.field
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.rep))

    def __add__(self, other):
        return FqElem(self.field, _padd(self.rep, self.field.elem(other).rep, self.field.p))

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, _trim(-c % self.field.p for c in self.rep))

    def __sub__(self, other):
        return self + (-self.field.elem(other))

    def __rsub__(self, other):
        return (-self) + self.field.elem(other)

    def __mul__(self, other):
        other = self.field.elem(other)
        prod = _pmul(self.rep, other.rep, self.field.p)
        return self.field.elem(prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        # extended euclid in F_p[x]
        p = self.field.p
        a, b = self.rep, self.field.modulus
        s0, s1 = (1,), ()
        while b:
            q, r = _pdivmod(a, b, p)
            a, b = b, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        inv = inv_mod(a[0], p)
        return self.field.elem(_trim(c * inv % p for c in s0))

    def __truediv__(self, other):
        return self * self.field.elem(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self):
        return self ** self.field.p

    def pth_root(self):
        """Inverse of Frobenius: c^(q/p); exact in a perfect field."""
        return self ** (self.field.order // self.field.p)

    def scalar(self):
        """Value as an int when the field is F_p."""
        if self.field.degree != 1:
            raise ValueError("not a prime-field element")
        return self.rep[0] if self.rep else 0

    def __repr__(self):
        if not self.rep:
            return "0"
        if len(self.rep) == 1:
            return str(self.rep[0])
        return "(" + IntPoly(self.rep).render("t") + ")"


# -- polynomials over F_q ------------------------------------------------------


class FqPoly:
    """Univariate polynomial over an FqField, used for residual polynomials."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        cs = [field.elem(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def __eq__(self, other):
        return (
            isinstance(other, FqPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return FqPoly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return FqPoly(self.field, [self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return FqPoly(self.field, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return FqPoly(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return FqPoly(self.field, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        inv = other.lc().inverse()
        rem = list(self.coeffs)
        if self.degree < other.degree:
            return FqPoly(self.field), self
        quot = [self.field.zero()] * (self.degree - other.degree + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + other.degree] * inv
            quot[k] = q
            if not q.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * b
        return FqPoly(self.field, quot), FqPoly(self.field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero() or self.lc() == self.field.one():
            return self
        inv = self.lc().inverse()
        return self * inv

    def derivative(self):
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * self.field.elem(i))
        return FqPoly(self.field, out)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, n, modulus):
        result = FqPoly(self.field, [1])
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def evaluate(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def roots(self):
        """Roots in the base field (exhaustive; fields here are tiny)."""
        return [x for x in self.field.elements() if self.evaluate(x).is_zero()]

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c.is_zero():
                continue
            ys = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            cs = repr(c)
            if i > 0 and cs == "1":
                cs = ""
            parts.append((cs + ("*" if cs and ys else "") + ys) or "1")
        return " + ".join(parts)


def is_separable(r):
    """True iff gcd(r, r') has degree 0 over the coefficient field."""
    if r.is_zero():
        raise ValueError("separability of the zero polynomial is undefined")
    return r.gcd(r.derivative()).degree == 0


def _squarefree_factor(r, rng):
    """[(irreducible monic, multiplicity)]; recursion on gcd with derivative."""
    r = r.monic()
    if r.degree == 0:
        return []
    d = r.derivative()
    if d.is_zero():
        # r = t(y^p) with t built from p-th roots of the coefficients
        p = r.field.p
        t = FqPoly(r.field, [r[i * p].pth_root() for i in range(r.degree // p + 1)])
        return [(g, p * m) for g, m in _squarefree_factor(t, rng)]
    g = r.gcd(d)
    if g.degree == 0:
        return [(h, 1) for h in _factor_squarefree(r, rng)]
    w = r // g
    out = []
    for h in _factor_squarefree(w, rng):
        m = 0
        rr = r
        while True:
            q, rem = divmod(rr, h)
            if not rem.is_zero():
                break
            m += 1
            rr = q
        out.append((h, m))
    # factors of g that do not divide w (possible when char divides multiplicity)
    rest = r
    for h, m in out:
        for _ in range(m):
            rest = rest // h
    if rest.degree > 0:
        seen = {h: m for h, m in out}
        for h, m in _squarefree_factor(rest, rng):
            seen[h] = seen.get(h, 0) + m
        out = sorted(seen.items(), key=_factor_sort_key)
    return sorted(out, key=_factor_sort_key)


def _factor_sort_key(item):
    poly = item[0] if isinstance(item, tuple) else item
    return (poly.degree, [c.rep for c in poly.coeffs])


def _factor_squarefree(r, rng):
    """Factor a squarefree monic polynomial: DDF then CZ splitting."""
    out = []
    q = r.field.order
    y = FqPoly(r.field, [0, 1])
    h = y
    rem = r
    d = 0
    while rem.degree > 0:
        d += 1
        if 2 * d > rem.degree:
            out.append(rem)
            break
        h = h.pow_mod(q, rem)
        g = rem.gcd(h - y)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            rem = rem // g
            h = h % rem
    return sorted(out, key=_factor_sort_key)


def _equal_degree_split(g, d, rng):
    """Cantor-Zassenhaus: g is a monic squarefree product of irreducibles of
    degree d."""
    if g.degree == d:
        return [g.monic()]
    field = g.field
    q = field.order
    while True:
        rand = FqPoly(
            field,
            [field.elem([rng.randrange(field.p) for _ in range(field.degree)])
             for _ in range(g.degree)],
        )
        if rand.degree < 1:
            continue
        if q % 2 == 1:
            s = rand.pow_mod((q**d - 1) // 2, g)
            cand = g.gcd(s - FqPoly(field, [1]))
        else:
            # trace map sum_{i<d*deg(field)} rand^(2^i)
            tr = rand % g
            acc = tr
            for _ in range(d * field.degree - 1):
                tr = (tr * tr) % g
                acc = acc + tr
            cand = g.gcd(acc)
        if 0 < cand.degree < g.degree:
            return sorted(
                _equal_degree_split(cand, d, rng)
                + _equal_degree_split(g // cand, d, rng),
                key=_factor_sort_key,
            )


def factor_fqpoly(r, seed=DEFAULT_SEED):
    """Complete factorization of a nonzero polynomial over F_q.

    Returns (unit, [(monic irreducible, multiplicity)]), deterministically
    ordered; the randomized splitting uses its own seeded generator."""
    if r.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    unit = r.lc()
    return unit, _squarefree_factor(r, rng)


def multiple_factors(r, seed=DEFAULT_SEED):
    """Irreducible factors of r with multiplicity > 1."""
    _, factors = factor_fqpoly(r, seed)
    return [(g, m) for g, m in factors if m > 1]
