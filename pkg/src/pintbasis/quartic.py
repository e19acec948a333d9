"""p-integral bases of quartic fields x^4 + a x^2 + b x + c, by explicit
case analysis on the factorization of f mod p.

The classifier distinguishes thirteen mutually exclusive cases; each case
picks regular lifts of the repeated factors (iterating a shift s -> s + y p^d
when a chosen lift is irregular) and then reads the basis off the polygon
ordinates.  Every dispatch table is encoded as literal rows with guard
predicates so individual rows are unit-testable, and the row that fired is
recorded in the result metadata.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import INFINITY, check_prime, inv_mod, is_finite, legendre, sqrt_mod_pk, symmetric_rep, vp
from .errors import (
    InconsistentError,
    IterationPreconditionError,
    NoRowError,
    NonIntegerSlopeError,
)
from .factor import DEFAULT_SEED, factor_mod_p, require_irreducible_quartic
from .intpoly import IntPoly
from .newton import is_phi_regular, ordinates, phi_index, phi_polygon_data
from .basis import BasisElement, PIntegralBasis, p_integral_basis_regular, triangularize
from . import order2

_X = IntPoly([0, 1])
_ONE = IntPoly([1])


class QuarticCase(Enum):
    SEPARABLE = "SEPARABLE"
    A1 = "A1"
    A2 = "A2"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    C1 = "C1"
    C2 = "C2"
    D1 = "D1"
    D2 = "D2"
    E1 = "E1"
    E2 = "E2"


@dataclass(frozen=True)
class QuarticContext:
    a: int
    b: int
    c: int
    p: int
    f: IntPoly
    disc: int
    Delta: int


def make_context(a, b, c, p):
    f = IntPoly.monic_quartic(a, b, c)
    disc = (
        16 * a**4 * c - 128 * a**2 * c**2 + 144 * a * b**2 * c
        - 4 * a**3 * b**2 + 256 * c**3 - 27 * b**4
    )
    if disc != f.discriminant():
        raise InconsistentError("closed-form discriminant disagrees with resultant")
    return QuarticContext(a, b, c, p, f, disc, vp(disc, p) if disc else 0)


def classify(a, b, c, p):
    """The factorization shape of x^4+ax^2+bx+c mod p, assuming f irreducible
    over Q.  Exactly one case applies; Inconsistent would indicate a bug."""
    check_prime(p)
    ctx = make_context(a, b, c, p)
    if ctx.disc % p != 0:
        return QuarticCase.SEPARABLE
    if p == 2:
        # 2 | disc forces 2 | b; split on the parities of a and c
        if b % 2 != 0:
            raise InconsistentError("2 | disc(f) requires 2 | b")
        if a % 2 and c % 2:
            return QuarticCase.A2
        if a % 2:
            return QuarticCase.C2
        if c % 2:
            return QuarticCase.E2
        return QuarticCase.E1
    if a % p and b % p == 0 and c % p == 0:
        return QuarticCase.B1
    if a % p and b % p and c % p == 0:
        if (4 * a**3 + 27 * b**2) % p == 0:
            return QuarticCase.B2
    if a % p == 0 and b % p and c % p:
        if (256 * c**3 - 27 * b**4) % p == 0:
            return QuarticCase.B3
    if a % p and b % p and c % p:
        if (2 * a * (a**2 - 4 * c) + 9 * b**2) % p:
            return QuarticCase.B4
        if p > 3:
            return QuarticCase.D1
    if p == 3 and a % 3 == 0 and b % 3 and c % 3 == 0:
        return QuarticCase.D2
    if a % p == 0 and b % p == 0 and c % p == 0:
        return QuarticCase.E1
    if a % p and b % p == 0 and c % p:
        half = inv_mod(2, p)
        if (a * a - 4 * c) % p == 0:
            s = legendre(-a * half % p, p)
            if s == -1:
                return QuarticCase.A1
            if s == 1:
                return QuarticCase.C1
    raise InconsistentError(f"no factorization case matches ({a},{b},{c}) at p={p}")


# -- valuation profiles and the shift iteration ---------------------------------


@dataclass(frozen=True)
class ValuationProfile:
    """Exact Taylor data of a monic quartic F at the integer s:
    u_i = v_p of F(s), F'(s), F''(s)/2, F'''(s)/6 and the p-free parts."""

    s: int
    u0: object
    u1: object
    u2: object
    u3: object
    sigma0: int
    sigma1: int
    sigma2: int
    sigma3: int

    def us(self):
        return (self.u0, self.u1, self.u2, self.u3)


def valuation_profile(F, s, p):
    if F.degree != 4 or not F.monic:
        raise ValueError("monic quartic required")
    d1 = F.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    vals = [F(s), d1(s), d2(s) // 2, d3(s) // 6]
    us = [vp(v, p) for v in vals]
    sigmas = [v // p**u if is_finite(u) and v else 0 for v, u in zip(vals, us)]
    return ValuationProfile(s, *us, *sigmas)


def check_initial_conditions(F, profile, p):
    """Which admissible starting pattern the integer s satisfies: 'I', 'II',
    'III', or None.  Pattern III also demands a separable residual on the
    right part [2,4] of the polygon."""
    u0, u1, u2, u3 = profile.us()
    if u2 == 0 and u1 > 0 and u0 > 0:
        return "I"
    if u3 == 0 and u2 > 0 and u1 > 0 and u0 > 0:
        return "II"
    if (
        is_finite(u2)
        and u2 > 0
        and u0 > 2 * u2
        and 2 * u1 > 3 * u2
        and 2 * u3 >= u2
        and _right_part_separable(F, profile.s, p)
    ):
        return "III"
    return None


def _right_part_separable(F, s, p):
    _, _, data = phi_polygon_data(F, IntPoly([-s, 1]), p)
    return all(sd.separable for sd in data if sd.side.start[0] >= 2)


@dataclass(frozen=True)
class Table1Row:
    rid: int
    cond: str
    pclass: str  # '2', '>2', '3', '>3'
    guard: object  # (profile, p) -> bool
    delta: object  # profile -> int
    accelerated: bool = False


def _sbar(sig, p):
    return sig % p


def _table1_guard_quadratic(pr, p):
    # sigma1^2 = 4 sigma0 sigma2 mod p
    return (pr.sigma1 * pr.sigma1 - 4 * pr.sigma0 * pr.sigma2) % p == 0


TABLE1_ROWS = (
    Table1Row(1, "I", "2",
              lambda pr, p: is_finite(pr.u0) and pr.u0 % 2 == 0 and pr.u0 < 2 * pr.u1,
              lambda pr: pr.u0 // 2),
    Table1Row(2, "I", ">2",
              lambda pr, p: pr.u0 == 2 * pr.u1 and _table1_guard_quadratic(pr, p),
              lambda pr: pr.u0 // 2, accelerated=True),
    Table1Row(3, "II", "2",
              lambda pr, p: pr.u0 > 3 * pr.u2 and is_finite(pr.u0) and is_finite(pr.u2)
              and (pr.u0 + pr.u2) % 2 == 0 and pr.u0 + pr.u2 < 2 * pr.u1,
              lambda pr: (pr.u0 - pr.u2) // 2),
    Table1Row(4, "II", ">2",
              lambda pr, p: pr.u0 > 3 * pr.u2 and is_finite(pr.u1)
              and pr.u0 + pr.u2 == 2 * pr.u1 and _table1_guard_quadratic(pr, p),
              lambda pr: (pr.u0 - pr.u2) // 2, accelerated=True),
    Table1Row(5, "II", "2",
              lambda pr, p: is_finite(pr.u1) and 2 * pr.u0 > 3 * pr.u1
              and pr.u1 % 2 == 0 and pr.u1 < 2 * pr.u2,
              lambda pr: pr.u1 // 2),
    Table1Row(6, "II", ">2",
              lambda pr, p: pr.u0 > 3 * pr.u2 and is_finite(pr.u1) and pr.u1 == 2 * pr.u2
              and (pr.sigma2**2 - 4 * pr.sigma1 * pr.sigma3) % p == 0,
              lambda pr: pr.u1 // 2),
    Table1Row(7, "II", "2",
              lambda pr, p: is_finite(pr.u2) and pr.u0 == 3 * pr.u2 and pr.u1 == 2 * pr.u2,
              lambda pr: pr.u0 // 3),
    Table1Row(8, "II", "3",
              lambda pr, p: is_finite(pr.u0) and pr.u0 % 3 == 0 and pr.u0 < 3 * pr.u2
              and 2 * pr.u0 < 3 * pr.u1,
              lambda pr: pr.u0 // 3),
    Table1Row(9, "II", ">3",
              lambda pr, p: is_finite(pr.u2) and pr.u0 == 3 * pr.u2 and pr.u1 == 2 * pr.u2
              and (3 * pr.sigma3 * pr.sigma1 - pr.sigma2**2) % p == 0
              and (27 * pr.sigma3**2 * pr.sigma0 - pr.sigma2**3) % p == 0,
              lambda pr: pr.u0 // 3),
    Table1Row(10, "II", ">3",
              lambda pr, p: is_finite(pr.u1) and 2 * pr.u0 == 3 * pr.u1
              and 3 * pr.u1 < 6 * pr.u2
              and (4 * pr.sigma1**3 + 27 * pr.sigma0**2 * pr.sigma3) % p == 0,
              lambda pr: pr.u0 // 3),
    Table1Row(11, "II", ">3",
              lambda pr, p: is_finite(pr.u2) and pr.u0 == 3 * pr.u2
              and 2 * pr.u0 < 3 * pr.u1
              and (4 * pr.sigma2**3 + 27 * pr.sigma0 * pr.sigma3**2) % p == 0,
              lambda pr: pr.u0 // 3),
    Table1Row(12, "III", "2",
              lambda pr, p: is_finite(pr.u0) and is_finite(pr.u2)
              and (pr.u0 + pr.u2) % 2 == 0 and pr.u0 + pr.u2 < 2 * pr.u1,
              lambda pr: (pr.u0 - pr.u2) // 2),
    Table1Row(13, "III", ">2",
              lambda pr, p: is_finite(pr.u1) and pr.u0 + pr.u2 == 2 * pr.u1
              and _table1_guard_quadratic(pr, p),
              lambda pr: (pr.u0 - pr.u2) // 2, accelerated=True),
)


def _match_table1(F, profile, p, cond):
    pcl = "2" if p == 2 else (">2")
    rows = []
    for row in TABLE1_ROWS:
        if row.cond != cond:
            continue
        if row.pclass == "2" and p != 2:
            continue
        if row.pclass == ">2" and p == 2:
            continue
        if row.pclass == "3" and p != 3:
            continue
        if row.pclass == ">3" and p <= 3:
            continue
        if row.guard(profile, p):
            rows.append(row)
    return rows


@dataclass
class IterationStep:
    s: int
    ind: int
    delta: int
    y: int
    row: int


def iterate_to_regular(F, s0, p, seed=DEFAULT_SEED, record=None):
    """Shift s -> s + y p^delta until F is (x-s)-regular; delta is the slope
    of the unique inseparable side and y lifts its multiple residual root.

    The phi-index strictly increases across irregular steps (asserted), so
    the loop ends within v_p(disc F)/2 + 1 steps.  A fractional inseparable
    slope cannot be repaired by shifts and raises NonIntegerSlopeError."""
    profile = valuation_profile(F, s0, p)
    cond = check_initial_conditions(F, profile, p)
    if cond is None:
        raise IterationPreconditionError(
            f"s={s0} matches no admissible starting pattern at p={p}"
        )
    bound = vp(F.discriminant(), p) // 2 + 1
    s = s0
    prev_ind = None
    steps = []
    while True:
        phi = IntPoly([-s, 1])
        reg = is_phi_regular(F, phi, p, seed)
        ind = phi_index(F, phi, p)
        if prev_ind is not None and not reg.regular and ind <= prev_ind:
            raise InconsistentError(
                f"phi-index did not grow across the iteration ({prev_ind} -> {ind})"
            )
        if reg.regular:
            if record is not None:
                record.extend(steps)
            return s
        if len(steps) > bound:
            raise InconsistentError("iteration exceeded its index bound")
        bad_sides = {w[0] for w in reg.witnesses}
        if len(bad_sides) != 1:
            raise InconsistentError("more than one inseparable side")
        side, factor, mult = reg.witnesses[0]
        if side.slope.denominator != 1:
            raise NonIntegerSlopeError(
                f"inseparable side of slope {side.slope}: use a second-order polygon"
            )
        delta = -int(side.slope)
        if factor.degree != 1:
            raise InconsistentError("multiple residual factor of degree > 1")
        root = (-factor[0].scalar()) % p
        if root == 0:
            raise InconsistentError("residual polynomial divisible by y")
        profile = valuation_profile(F, s, p)
        cond = check_initial_conditions(F, profile, p)
        if cond is None:
            raise InconsistentError("iteration left the admissible patterns")
        rows = _match_table1(F, profile, p, cond)
        if len(rows) != 1:
            raise InconsistentError(
                f"irregular profile matches {len(rows)} rows of the iteration table"
            )
        row = rows[0]
        if row.delta(profile) != delta:
            raise InconsistentError("table slope disagrees with the polygon")
        if row.accelerated and p > 2:
            # solve 2 sigma2 y + sigma1 = 0 mod p^delta for faster convergence
            m = p**delta
            y = (-profile.sigma1 * inv_mod(2 * profile.sigma2, m)) % m
            y = symmetric_rep(y, m)
            if (y - root) % p:
                raise InconsistentError("accelerated shift does not lift the root")
        else:
            y = symmetric_rep(root, p)
        steps.append(IterationStep(s, ind, delta, y, row.rid))
        s = s + y * p**delta
        prev_ind = ind


# -- shared construction helpers -------------------------------------------------


def _lifts_with_override(f, p, replacements, seed=DEFAULT_SEED):
    """Symmetric lifts of the factors of f mod p, with any lift whose
    reduction matches a replacement swapped for that replacement."""
    keyed = {}
    for r in replacements:
        keyed[tuple(c % p for c in r.coeffs)] = r
    out = []
    for phi, _ in factor_mod_p(f, p, seed):
        key = tuple(c % p for c in phi.coeffs)
        out.append(keyed.pop(key, phi))
    if keyed:
        raise InconsistentError("replacement lift matches no factor of f mod p")
    return out


def _construct(ctx, lifts, display, meta, seed=DEFAULT_SEED):
    """Basis from the regular-case construction for the given lifts, with the
    table's display family retained as generators."""
    basis = p_integral_basis_regular(ctx.f, ctx.p, lifts=lifts, seed=seed)
    return PIntegralBasis(
        ctx.p, basis.elements, basis.index_valuation,
        tuple(display) if display else basis.generators, dict(meta),
    )


def _emit_family(ctx, family, meta):
    """Triangularize an explicitly assembled family (used on second-order
    paths, where the generic first-order construction does not apply)."""
    basis = triangularize(family, ctx.p, 4, generators=family, meta=dict(meta))
    return basis


def _ordinate_floor(f, s, p, abscissa):
    """floor of the principal-polygon ordinate of f w.r.t. x - s."""
    _, principal, _ = phi_polygon_data(f, IntPoly([-s, 1]), p)
    ys = ordinates(principal)
    return int(ys[abscissa] // 1)


def _quartic_q1(F, s):
    """First quotient of the (x-s)-adic development of a monic quartic."""
    return (F - IntPoly.const(F(s))) // IntPoly([-s, 1])


def _quartic_q2(F, s):
    """Second quotient: quotient of F by (x-s)^2."""
    return F // (IntPoly([-s, 1]) ** 2)


# -- case A: square of a quadratic -----------------------------------------------


def basis_case_A(ctx, seed=DEFAULT_SEED):
    a, b, c, p = ctx.a, ctx.b, ctx.c, ctx.p
    if p > 2:
        mprime = _v(4 * c - a * a, p)
        if is_finite(mprime):
            M = p ** (mprime // 2 + 1)
            s = a * inv_mod(2, M) % M
        else:
            s = a // 2  # 4c = a^2 exactly forces a even; s = a/2 is exact
        phi = IntPoly([s, 0, 1])
        vb = _v(b, p)
        twonu = min(vb, mprime)
        nu = int(Fraction(twonu, 2) // 1)
        display = [
            BasisElement(_ONE, 0), BasisElement(_X, 0),
            BasisElement(IntPoly([s, 0, 1]), nu),
            BasisElement(IntPoly([0, s, 0, 1]), nu),
        ]
        return _construct(ctx, [phi], display,
                          {"case": "A1", "rows": ["A1"], "s": s})
    phi = IntPoly([1, 1, 1])
    k = min(vp(b + 1 - a, 2), vp(c - a, 2))
    if k == 1:
        display = [BasisElement(IntPoly.x(i), 0) for i in range(4)]
        rows = ["eq10-r1"]
    else:
        display = [
            BasisElement(_ONE, 0), BasisElement(_X, 0),
            BasisElement(IntPoly([1, 1, 1]), 1),
            BasisElement(IntPoly([0, 1, 1, 1]), 1),
        ]
        rows = ["eq10-r2"]
    return _construct(ctx, [phi], display, {"case": "A2", "rows": rows})


# -- case B: one double root -----------------------------------------------------


def _hensel_root_of_derivative(f, s0, p, K):
    """Lift the simple root s0 of f' mod p to s with v_p(f'(s)) >= K; f''(s0)
    is a p-unit, so Newton steps converge quadratically."""
    g = f.derivative()
    g2 = g.derivative()
    m = p**K
    s = s0 % m
    for _ in range(K + 2):
        gs = g(s) % m
        if gs == 0:
            break
        s = (s - gs * inv_mod(g2(s) % m, m)) % m
    if g(s) % m:
        raise InconsistentError("Hensel lifting of the derivative root failed")
    return symmetric_rep(s, m)


def basis_case_B(ctx, seed=DEFAULT_SEED):
    f, p = ctx.f, ctx.p
    doubles = [phi for phi, mult in factor_mod_p(f, p, seed)
               if mult == 2 and phi.degree == 1]
    if len(doubles) != 1:
        raise InconsistentError("case B expects exactly one double linear factor")
    s0 = -doubles[0][0]
    s = _hensel_root_of_derivative(f, s0, p, ctx.Delta // 2 + 1)
    nu = ctx.Delta // 2
    display = [
        BasisElement(_ONE, 0), BasisElement(_X, 0), BasisElement(_X**2, 0),
        BasisElement(_quartic_q1(f, s), nu),
    ]
    lifts = _lifts_with_override(f, p, [IntPoly([-s, 1])], seed)
    return _construct(ctx, lifts, display,
                      {"case": ctx_case_name(ctx), "rows": ["eq13"], "s": s})


def ctx_case_name(ctx):
    return classify(ctx.a, ctx.b, ctx.c, ctx.p).value


# -- case C: two double roots ----------------------------------------------------


def _nu_at(f, s, p):
    return _ordinate_floor(f, s, p, 1)


def basis_case_C1(ctx, seed=DEFAULT_SEED):
    a, b, c, p, f = ctx.a, ctx.b, ctx.c, ctx.p, ctx.f
    m = vp(b, p) if b else INFINITY
    mprime = vp(a * a - 4 * c, p)
    r = min(m, mprime)
    M = p ** (r + 1)
    s = sqrt_mod_pk(-a * inv_mod(2, M) % M, p, r + 1)
    if s is None:
        raise InconsistentError("case C1 requires -a/2 to be a square mod p")
    iterated = False
    reg_plus = is_phi_regular(f, IntPoly([-s, 1]), p, seed).regular
    reg_minus = is_phi_regular(f, IntPoly([s, 1]), p, seed).regular
    if not reg_plus or not reg_minus:
        if not reg_plus and not reg_minus:
            raise InconsistentError("both square-root lifts irregular in case C1")
        bad = s if not reg_plus else -s
        bad = iterate_to_regular(f, bad, p, seed)
        s = bad if not reg_plus else -bad
        iterated = True
        for t in (s, -s):
            if not is_phi_regular(f, IntPoly([-t, 1]), p, seed).regular:
                raise InconsistentError("iterate left an irregular companion lift")
    nu_plus = _nu_at(f, s, p)
    nu_minus = _nu_at(f, -s, p)
    if nu_minus > nu_plus:
        s = -s
        nu_plus, nu_minus = nu_minus, nu_plus
    display = [
        BasisElement(_ONE, 0), BasisElement(_X, 0),
        BasisElement(IntPoly([s * s + a, 0, 1]), nu_minus),
        BasisElement(_quartic_q1(f, s), nu_plus),
    ]
    lifts = _lifts_with_override(f, p, [IntPoly([-s, 1]), IntPoly([s, 1])], seed)
    return _construct(ctx, lifts, display,
                      {"case": "C1", "rows": ["eq14"], "s": s,
                       "iterated": iterated})


def basis_case_C2(ctx, seed=DEFAULT_SEED):
    a, b, c, p, f = ctx.a, ctx.b, ctx.c, ctx.p, ctx.f
    vc = vp(c, 2)
    vs1 = vp(a + b + c + 1, 2)
    rows = []
    if vc == 1 and vs1 == 1:
        t, s = 0, 1
        rows.append("eq15-r1")
        display = [BasisElement(IntPoly.x(i), 0) for i in range(4)]
    elif vc == 1:
        t = 0
        s = iterate_to_regular(f, 1, 2, seed)
        rows.append("eq15-r2")
        display = None
    elif vs1 == 1:
        t = 1
        s = iterate_to_regular(f, 0, 2, seed)
        rows.append("eq15-r3")
        display = None
    else:
        rows.append("eq15-r4")
        if a % 4 == 1:
            t = 0
            s = iterate_to_regular(f, 1, 2, seed)
        else:
            t = 1
            s = iterate_to_regular(f, 0, 2, seed)
        display = None
    if display is None:
        nu = _nu_at(f, s, 2)
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0)]
        if rows[-1] == "eq15-r4":
            display.append(BasisElement(IntPoly([0, 1, 1]), 1))
        else:
            display.append(BasisElement(_X**2, 0))
        display.append(BasisElement(_quartic_q1(f, s), nu))
    if not is_phi_regular(f, IntPoly([-t, 1]), 2, seed).regular:
        raise InconsistentError(f"claimed-regular lift {t} is irregular in case C2")
    lifts = [IntPoly([-t, 1]), IntPoly([-s, 1])]
    return _construct(ctx, lifts, display,
                      {"case": "C2", "rows": rows, "s": s, "t": t})


# -- case D: triple root ---------------------------------------------------------


def _deep_derivative_root(f, p, K, congruent_to):
    """Integer s = congruent_to mod p with v_p(f'(s)) >= K, found by lifting
    the root set of f' digit by digit (the reduction is not simple, so plain
    Hensel does not apply)."""
    g = f.derivative()
    roots = [congruent_to % p]
    mod = p
    for _ in range(K - 1):
        nxt = []
        for r0 in roots:
            for t in range(p):
                cand = r0 + t * mod
                if g(cand) % (mod * p) == 0:
                    nxt.append(cand)
        mod *= p
        roots = nxt
        if not roots:
            raise InconsistentError("derivative root lifting died out")
        if len(roots) > 200:
            raise InconsistentError("derivative root lifting exploded")
    for r0 in roots:
        if vp(g(r0), p) >= K or g(r0) == 0:
            return symmetric_rep(r0, mod)
    raise InconsistentError("no deep derivative root found")


def basis_case_D(ctx, seed=DEFAULT_SEED):
    a, b, c, p, f = ctx.a, ctx.b, ctx.c, ctx.p, ctx.f
    rows = []
    meta = {"case": ctx_case_name(ctx)}
    if p > 3:
        k = ctx.Delta // 6 + 1
        M = p**k
        s0 = sqrt_mod_pk(-a * inv_mod(6, M) % M, p, k)
        if s0 is None:
            raise InconsistentError("-a/6 must be a square mod p in case D1")
        if (b - 8 * s0**3) % p:
            s0 = -s0
        if (b - 8 * s0**3) % p:
            raise InconsistentError("neither square root matches b = 8 s^3 mod p")
        pr = valuation_profile(f, s0, p)
        irregular = (
            is_finite(pr.u1) and 2 * pr.u0 == 3 * pr.u1
            and (pr.sigma1**3 + 27 * s0 * pr.sigma0**2) % p == 0
        )
        rows.append("L42-irregular" if irregular else
                    ("L42-one-side" if 2 * pr.u0 < 3 * pr.u1 else "L42-two-sides"))
        s = iterate_to_regular(f, s0, p, seed) if irregular else s0
    else:
        if a % 9 == 3:
            k = ctx.Delta // 6 + 1
            M = 3**k
            aprime = a // 3
            s0 = sqrt_mod_pk(-aprime * inv_mod(2, M) % M, 3, k)
            if s0 is None:
                raise InconsistentError("-a'/2 must be a square mod 3")
            if (s0 + b) % 3:
                s0 = -s0
            if (s0 + b) % 3:
                raise InconsistentError("no square root is congruent to -b mod 3")
            pr = valuation_profile(f, s0, 3)
            irregular = 2 * pr.u0 < 3 * pr.u1 and is_finite(pr.u0) and pr.u0 % 3 == 0
            if not irregular:
                s = s0
                rows.append("L43-regular")
            else:
                y = 1 if (pr.sigma0 - b) % 3 == 0 else -1
                s1 = s0 + y * 3 ** (pr.u0 // 3)
                if is_phi_regular(f, IntPoly([-s1, 1]), 3, seed).regular:
                    s = s1
                    rows.append("L43-s1")
                else:
                    s = iterate_to_regular(f, s1, 3, seed)
                    rows.append("L43-beyond-s1")
                    meta["beyond_s1"] = 1
        else:
            s = -b
            if not (vp(f(s), 3) <= 2 or vp(f.derivative()(s), 3) == 1):
                s = _deep_derivative_root(f, 3, ctx.Delta // 2 + 1, -b)
                rows.append("L44-deep")
            else:
                rows.append("L44-direct")
            if not is_phi_regular(f, IntPoly([-s, 1]), 3, seed).regular:
                raise InconsistentError("deep derivative root is irregular")
    nu2 = _ordinate_floor(f, s, p, 2)
    nu1 = _ordinate_floor(f, s, p, 1)
    display = [
        BasisElement(_ONE, 0), BasisElement(_X, 0),
        BasisElement(_quartic_q2(f, s), nu2),
        BasisElement(_quartic_q1(f, s), nu1),
    ]
    lifts = _lifts_with_override(f, p, [IntPoly([-s, 1])], seed)
    meta.update({"rows": rows, "s": s})
    return _construct(ctx, lifts, display, meta)


# -- case E1: 4-tuple root, p | a, b, c -------------------------------------------


def reduce_E1(a, b, c, p):
    """Divide (a, b, c) by (p^2, p^3, p^4) while possible; the reduced
    polynomial generates the same field with root theta/p^k."""
    k = 0
    while (
        (a == 0 or vp(a, p) >= 2)
        and (b == 0 or vp(b, p) >= 3)
        and (c == 0 or vp(c, p) >= 4)
    ):
        if c == 0:
            raise InconsistentError("c = 0 cannot occur for irreducible f")
        a, b, c = a // p**2, b // p**3, c // p**4
        k += 1
    return a, b, c, k


def _v(n, p):
    return vp(n, p) if n else INFINITY


@dataclass(frozen=True)
class TableRow:
    rid: str
    guard: object
    strategy: str


# Table of the reduced 4-tuple-root case; guards take (vc, vb, va, p).
E1_ROWS = (
    TableRow("T2r1", lambda vc, vb, va, p: vc == 1, "power"),
    TableRow("T2r2", lambda vc, vb, va, p: vc > 1 and vb == 1, "theta3"),
    TableRow("T2r3", lambda vc, vb, va, p: vc == 2 and vb > 1 and va == 1 and p > 2,
             "half-a"),
    TableRow("T2r4", lambda vc, vb, va, p: vc == 2 and vb > 1 and va == 1 and p == 2,
             "x-reg"),
    TableRow("T2r5", lambda vc, vb, va, p: vc == 2 and vb > 1 and va > 1 and p > 2,
             "x-reg"),
    TableRow("T2r6", lambda vc, vb, va, p: vc == 2 and vb > 1 and va > 1 and p == 2,
             "table3"),
    TableRow("T2r7", lambda vc, vb, va, p: vc > 2 and vb > 1 and va == 1 and p > 2,
             "iterate"),
    TableRow("T2r8", lambda vc, vb, va, p: vc > 2 and vb > 1 and va == 1 and p == 2,
             "iterate"),
    TableRow("T2r9", lambda vc, vb, va, p: vc > 2 and vb == 2 and va > 1, "x-reg"),
    TableRow("T2r10", lambda vc, vb, va, p: vc == 3 and vb > 2 and va > 1, "x-reg"),
)


def _match_rows(rows, *args):
    hits = [r for r in rows if r.guard(*args)]
    if len(hits) != 1:
        raise (NoRowError if not hits else InconsistentError)(
            f"{len(hits)} rows match {args}"
        )
    return hits[0]


# (Q, nu) selection expanding the p = 2, v(c)=2, v(b)>1, v(a)>1 row; the
# guards take (va, vb, vacm4, vab) = (v(a), v(b), v(2a+c-4), v(2a+b)).
TABLE3_ROWS = (
    TableRow("T3r1", lambda va, vb, g4, gb: vb == 2, None),
    TableRow("T3r2", lambda va, vb, g4, gb: vb == 3 and g4 == 3, None),
    TableRow("T3r3", lambda va, vb, g4, gb: va == 2 and vb == 3 and g4 >= 4, None),
    TableRow("T3r4", lambda va, vb, g4, gb: va >= 3 and vb == 3 and g4 >= 4, None),
    TableRow("T3r5", lambda va, vb, g4, gb: va == 2 and vb >= 4 and g4 >= 4, None),
    TableRow("T3r6", lambda va, vb, g4, gb: va == 2 and vb >= 4 and g4 == 3, None),
    TableRow("T3r7", lambda va, vb, g4, gb: va >= 3 and vb >= 4 and g4 == 3, None),
    TableRow("T3r8", lambda va, vb, g4, gb: va >= 3 and vb >= 4 and g4 == 4 and gb > 4,
             None),
    TableRow("T3r9", lambda va, vb, g4, gb: va >= 3 and vb >= 4 and g4 == 4 and gb == 4,
             None),
    TableRow("T3r10", lambda va, vb, g4, gb: va >= 3 and vb >= 4 and g4 >= 5 and gb == 4,
             None),
    TableRow("T3r11", lambda va, vb, g4, gb: va >= 3 and vb >= 4 and g4 >= 5 and gb > 4,
             None),
)


def _table3_q_nu(a, b, c):
    """(Q, nu, row ids) for the second-order subcase of the reduced
    4-tuple-root table at p = 2."""
    va, vb = _v(a, 2), _v(b, 2)
    g4 = _v(2 * a + c - 4, 2)
    gb = _v(2 * a + b, 2)
    row = _match_rows(TABLE3_ROWS, va, vb, g4, gb)
    rid = row.rid
    if rid == "T3r1":
        return IntPoly([0, 0, 1]), Fraction(5, 4), [rid]
    if rid in ("T3r2", "T3r4", "T3r5"):
        return IntPoly([2, 0, 1]), Fraction(7, 4), [rid]
    if rid == "T3r3":
        return IntPoly([2, 2, 1]), Fraction(2), [rid]
    if rid == "T3r7":
        return IntPoly([2, 0, 1]), Fraction(2), [rid]
    if rid in ("T3r8", "T3r10"):
        return IntPoly([2, 2, 1]), Fraction(9, 4), [rid]
    if rid in ("T3r9", "T3r11"):
        return IntPoly([2, 2, 1]), Fraction(5, 2), [rid]
    # T3r6: keyed by u = v(b), v = v(c - a^2/4), d.  No closed nu form is
    # pinned for these deep cells (simple candidates fail against the
    # saturation oracle), so only the row is identified here and the
    # denominators are read off the certified second-order polygon.
    u = vb
    v = _v(c - a * a // 4, 2)
    half = a // 2
    if u <= v:
        return IntPoly([half, 0, 1]), Fraction(2 * u + 1, 4), [rid, "T3r6s1"]
    d = ((c - a * a // 4) >> v) % 4
    w = v // 2
    if v % 2 == 0:
        q = IntPoly([half + 2**w, 2**w if (u - 1 == v and d == 1) else 0, 1])
        sub = {(True, 3): "T3r6s2", (False, 3): "T3r6s3",
               (True, 1): "T3r6s4", (False, 1): "T3r6s5"}[(u - 1 == v, d)]
        return q, None, [rid, sub]
    plus = d == (a // 4) % 4
    if not plus and d != (-a // 4) % 4:
        raise NoRowError(f"no (Q, nu) subrow for (a,b,c)=({a},{b},{c})")
    sub = {(True, True): "T3r6s6", (False, True): "T3r6s7",
           (True, False): "T3r6s8", (False, False): "T3r6s9"}[(u - 1 == v, plus)]
    q = IntPoly([half + (2 ** (w + 1) if sub == "T3r6s8" else 0), 2**w, 1])
    return q, None, [rid, sub]


def _order2_family(ctx, F, phi, tag, nu_table, rows, meta_extra=None):
    """The family 1, theta, Q/p^[nu], theta*Q/p^[nu+1/2] with Q the first
    quotient of the certified phi-development.  The tabled nu is only
    cross-checked against the second-order index: its floors must reproduce
    ind_p = floor(Y) - 2.  (The row data also carries simplified numerators;
    those are display sugar and not always integral in the theta*Q slot, so
    the construction never uses them.)"""
    o2 = order2.basis_order2(order2.SecondOrderContext(F, ctx.p, phi, tag))
    if nu_table is not None:
        e2 = int(nu_table // 1)
        e3 = int((nu_table + Fraction(1, 2)) // 1)
        if e2 + e3 != o2.ind_p:
            raise InconsistentError(
                f"table nu {nu_table} disagrees with the second-order index {o2.ind_p}"
            )
    meta = {"case": ctx_case_name(ctx), "rows": list(rows) + [tag],
            "Y": str(o2.Y), "order2": 1}
    if meta_extra:
        meta.update(meta_extra)
    return list(o2.elements), meta


def basis_case_E1(ctx, seed=DEFAULT_SEED):
    """Reduced 4-tuple-root dispatch; the caller guarantees the reduction
    step has already been applied."""
    a, b, c, p, f = ctx.a, ctx.b, ctx.c, ctx.p, ctx.f
    vc, vb, va = _v(c, p), _v(b, p), _v(a, p)
    row = _match_rows(E1_ROWS, vc, vb, va, p)
    meta = {"case": "E1", "rows": [row.rid]}
    if row.strategy == "power":
        display = [BasisElement(IntPoly.x(i), 0) for i in range(4)]
        return _construct(ctx, [_X], display, meta, seed)
    if row.strategy == "theta3":
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(_X**2, 0), BasisElement(_X**3, 1)]
        return _construct(ctx, [_X], display, meta, seed)
    if row.strategy == "x-reg":
        return _construct(ctx, [_X], None, meta, seed)
    if row.strategy == "iterate":
        s = iterate_to_regular(f, 0, p, seed)
        nu = _ordinate_floor(f, s, p, 1)
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(_X**2, 1), BasisElement(_quartic_q1(f, s), nu)]
        meta.update({"s": s, "nu": nu})
        return _construct(ctx, [IntPoly([-s, 1])], display, meta, seed)
    if row.strategy == "half-a":
        mprime = vp(a * a - 4 * c, p)
        if mprime == 2:
            return _construct(ctx, [_X], None, meta, seed)
        M = p ** (mprime // 2 + 2)
        s = symmetric_rep(a * inv_mod(2, M) % M, M)
        nu = Fraction(min(_v(b, p), mprime), 2)
        phi, tag = order2.choose_phi("E1_row3", {"s": s})
        family, meta2 = _order2_family(ctx, f, phi, tag, nu, [row.rid], {"s": s})
        return _emit_family(ctx, family, meta2)
    if row.strategy == "table3":
        Q, nu, rows = _table3_q_nu(a, b, c)
        phi, tag = order2.choose_phi("E1_row6", {"a": a, "b": b, "c": c})
        family, meta2 = _order2_family(ctx, f, phi, tag, nu, [row.rid] + rows)
        return _emit_family(ctx, family, meta2)
    raise InconsistentError(f"unhandled strategy {row.strategy}")


# -- case E2: p = 2, a, b even, c odd ---------------------------------------------


# Rows of the shifted-polynomial table; guards take (vC, vB, vA) for
# g(x) = f(x+m) = x^4 + 4m x^3 + A x^2 + B x + C.
E2_ROWS = (
    TableRow("T4r1", lambda vC, vB, vA: vC == 1, "direct"),
    TableRow("T4r2", lambda vC, vB, vA: vC > 1 and vB == 1, "direct"),
    TableRow("T4r3", lambda vC, vB, vA: vC == 2 and vB > 1 and vA == 1, "direct"),
    TableRow("T4r4", lambda vC, vB, vA: vC == 2 and vB > 1 and vA > 1, "table5"),
    TableRow("T4r5", lambda vC, vB, vA: vC > 2 and vB > 1 and vA == 1, "iterate"),
    TableRow("T4r6", lambda vC, vB, vA: vC > 2 and vB == 2 and vA > 1, "direct"),
    TableRow("T4r7", lambda vC, vB, vA: vC == 3 and vB > 2 and vA > 1, "direct"),
    TableRow("T4r8", lambda vC, vB, vA: vC == 4 and vB == 3 and vA == 2, "direct"),
    TableRow("T4r9", lambda vC, vB, vA: vC == 4 and vB == 3 and vA > 2, "direct"),
    TableRow("T4r10", lambda vC, vB, vA: vC == 4 and vB > 3 and vA == 2, "table6"),
    TableRow("T4r11", lambda vC, vB, vA: vC > 4 and vB > 3 and vA == 2, "twodouble"),
    TableRow("T4r12", lambda vC, vB, vA: vC > 4 and vB == 3 and vA >= 2, "direct"),
    TableRow("T4r13", lambda vC, vB, vA: vC == 5 and vB > 3 and vA > 2, "direct"),
    TableRow("T4r14", lambda vC, vB, vA: vC > 5 and vB == 4 and vA > 2, "direct"),
    TableRow("T4r15", lambda vC, vB, vA: vC == 6 and vB > 4 and vA == 3, "direct"),
    TableRow("T4r16", lambda vC, vB, vA: vC == 6 and vB == 5 and vA >= 4, "order2-54"),
    TableRow("T4r17", lambda vC, vB, vA: vC == 6 and vB > 5 and vA >= 4, "order2-54"),
    TableRow("T4r18", lambda vC, vB, vA: vC > 6 and vB > 4 and vA == 3, "iterate"),
    TableRow("T4r19", lambda vC, vB, vA: vC > 6 and vB == 5 and vA >= 4, "direct"),
    TableRow("T4r20", lambda vC, vB, vA: vC == 7 and vB > 5 and vA >= 4, "direct"),
    TableRow("T4r21", lambda vC, vB, vA: vC == 8 and vB == 6 and vA == 4, "direct"),
    TableRow("T4r22", lambda vC, vB, vA: vC == 8 and vB > 6 and vA >= 4, "direct"),
    TableRow("T4r23", lambda vC, vB, vA: vC > 8 and vB == 6 and vA > 4, "direct"),
    TableRow("T4r24", lambda vC, vB, vA: vC > 8 and vB > 6 and vA == 4, "iterate"),
    TableRow("T4r25", lambda vC, vB, vA: vC > 8 and vB > 6 and vA > 4, "scale4"),
)

# Explicit 2-power denominator patterns (deg 1..3) for the direct rows.
E2_DIRECT_DENOMS = {
    "T4r1": (0, 0, 0), "T4r2": (0, 0, 1), "T4r3": (0, 1, 1),
    "T4r6": (0, 1, 2), "T4r7": (0, 1, 2), "T4r8": (1, 2, 3), "T4r9": (1, 2, 3),
    "T4r12": (1, 2, 3), "T4r13": (1, 2, 3), "T4r14": (1, 2, 4),
    "T4r15": (1, 3, 4), "T4r19": (1, 3, 5), "T4r20": (1, 3, 5),
    "T4r21": (2, 4, 6), "T4r22": (2, 4, 6), "T4r23": (2, 4, 6),
}


def _bad_shift(vC, vB, vA):
    """The three (vA, vB, vC) patterns excluded by adjusting the odd shift m."""
    if vA > 2 and vB > 3 and vC == 4:
        return 2
    if vA > 4 and vB == 6 and vC == 8:
        return 4
    if vA == 4 and vB == 6 and vC > 8:
        return 4
    return 0


def _table5_q_nu(A, B, C):
    """(Q, nu, rows) expanding the vC=2, vB>1, vA>1 row of the shifted table."""
    vA, vB8 = _v(A, 2), _v(B + 8, 2)
    vac = _v(2 * A + C + 4, 2)
    x2 = IntPoly([0, 0, 1])
    if vB8 == 2:
        return x2, Fraction(5, 4), ["T5r1"]
    if vB8 == 3 and vac >= 4:
        return x2 + 2, Fraction(7, 4), ["T5r2"]
    if vA == 2:
        if vB8 == 3 and vac == 3:
            return IntPoly([2, 2, 1]), Fraction(2), ["T5r3"]
        if vB8 >= 4 and vac == 3:
            return x2 + 2, Fraction(7, 4), ["T5r4"]
        # oracle-pinned: nu = 5/2 exactly when v(B+8) = 4 iff v(2A+C+4) = 4
        # (the two diagonal cells share 5/2, the two off-diagonal ones 9/4)
        if vB8 == 4 and vac >= 5:
            return x2 + 2, Fraction(9, 4), ["T5r5"]
        if vB8 == 4 and vac == 4:
            return x2 + 2, Fraction(5, 2), ["T5r5d"]
        if vB8 >= 5 and vac >= 5:
            return x2 - 2, Fraction(5, 2), ["T5r6"]
        if vB8 >= 5 and vac == 4:
            return x2 + 2, Fraction(9, 4), ["T5r7"]
    if vA >= 3:
        if vB8 == 3 and vac == 3:
            return x2 + 2, Fraction(7, 4), ["T5r8"]
        if vB8 >= 4 and vac >= 4:
            return x2 + 2, Fraction(2), ["T5r10"]
        if vB8 >= 4 and vac == 3:
            # sub-table keyed by u, v, d, e.  As with the reduced-case
            # expansion, no closed nu form is pinned for deep cells, so rows
            # are identified for coverage and the denominators come from the
            # certified second-order polygon.
            u = _v(B + 8 - 2 * A, 2)
            v = _v(C - (A - 4) ** 2 // 4, 2)
            base = IntPoly([-2 + A // 2, 2, 1])
            if u < v or (u == v and is_finite(v) and v % 2 == 0):
                return base, Fraction(2 * u + 1, 4), ["T5r9", "T5r9s1"]
            d = ((C - (A - 4) ** 2 // 4) >> v) % 4
            w = v // 2
            if u == v:
                e = ((B + 8 - 2 * A) >> u) % 4
                q = IntPoly([-2 + A // 2, 2 + 2**w, 1])
                plus = d == (1 + A // 4) % 4
                if not plus and d != (-1 + A // 4) % 4:
                    raise NoRowError(f"no subrow for (A,B,C)=({A},{B},{C})")
                sub = {(True, 1): "T5r9s2", (True, 3): "T5r9s3",
                       (False, 3): "T5r9s4", (False, 1): "T5r9s5"}[(plus, e)]
                if sub == "T5r9s3":
                    q = q + 2 ** (w + 1)
                return q, None, ["T5r9", sub]
            if v % 2 == 0:
                if u - 1 == v:
                    return base + 2**w, None, ["T5r9", "T5r9s6"]
                if d == 3:
                    return base + 2**w, None, ["T5r9", "T5r9s7"]
                return IntPoly([-2 + A // 2 + 2**w, 2 + 2**w, 1]), None, ["T5r9", "T5r9s8"]
            return base, None, ["T5r9", "T5r9s9"]
    raise NoRowError(f"no (Q, nu) row for (A,B,C)=({A},{B},{C})")


def _scale_down(g, k):
    """g(2^k x) / 2^(4k), exact when the coefficient valuations allow it."""
    return g.scale_arg(2**k).divide_exact(2 ** (4 * k))


def _transport(elements, p, scale_pow=0, shift=0):
    """Rewrite tau-coordinate elements (tau = (theta - shift)/p^scale_pow) in
    theta coordinates; numerators stay integral, denominators absorb p^(3k)."""
    out = []
    for el in elements:
        n, e = el.numerator, el.denom_exp
        if scale_pow:
            k = scale_pow
            n = IntPoly([n[j] * p ** ((3 - j) * k) for j in range(4)])
            e += 3 * k
        if shift:
            n = n.shift(-shift)
        out.append(BasisElement(n, e))
    return out


def basis_case_E2(ctx, seed=DEFAULT_SEED):
    f, p = ctx.f, ctx.p
    m = 1
    for _ in range(10):
        g = f.shift(m)
        A, B, C = g[2], g[1], g[0]
        vC, vB, vA = _v(C, 2), _v(B, 2), _v(A, 2)
        step = _bad_shift(vC, vB, vA)
        if not step:
            break
        m += step
    else:
        raise InconsistentError("shift adjustment failed to leave the bad patterns")
    row = _match_rows(E2_ROWS, vC, vB, vA)
    meta = {"case": "E2", "rows": [row.rid], "m": m}
    omega_shift = m  # omega = theta - m

    def finish(elements_tau, scale_pow, display_tau, extra_rows=(), extra_meta=None):
        meta2 = dict(meta)
        meta2["rows"] = meta["rows"] + list(extra_rows)
        if extra_meta:
            meta2.update(extra_meta)
        gens = _transport(display_tau, 2, scale_pow, omega_shift) if display_tau else None
        els = _transport(elements_tau, 2, scale_pow, omega_shift)
        basis = triangularize(els, 2, 4, generators=gens or els, meta=meta2)
        return basis

    if row.strategy == "direct":
        constructed = p_integral_basis_regular(g, 2, lifts=[_X], seed=seed)
        denoms = E2_DIRECT_DENOMS[row.rid]
        display = [BasisElement(_ONE, 0)] + [
            BasisElement(_X ** (i + 1), denoms[i]) for i in range(3)
        ]
        return finish(list(constructed.elements), 0, display)
    if row.strategy == "iterate":
        s = iterate_to_regular(g, 0, 2, seed)
        constructed = p_integral_basis_regular(
            g, 2, lifts=[IntPoly([-s, 1])], seed=seed)
        nu = _ordinate_floor(g, s, 2, 1)
        pre = {"T4r5": (0, 1), "T4r18": (1, 3), "T4r24": (2, 4)}[row.rid]
        display = [BasisElement(_ONE, 0), BasisElement(_X, pre[0]),
                   BasisElement(_X**2, pre[1]),
                   BasisElement(_quartic_q1(g, s), nu)]
        return finish(list(constructed.elements), 0, display,
                      extra_meta={"s": s, "nu": nu})
    if row.strategy == "table5":
        Q, nu, rows = _table5_q_nu(A, B, C)
        phi, tag = order2.choose_phi("E2_row4", {"A": A, "B": B, "C": C})
        family, meta2 = _order2_family(ctx, g, phi, tag, nu, rows)
        return finish(family, 0, None, extra_rows=meta2["rows"],
                      extra_meta={"Y": meta2["Y"], "order2": 1})
    if row.strategy == "order2-54":
        h = _scale_down(g, 1)
        phi, tag = order2.choose_phi("E2_rows16_17", {})
        o2 = order2.basis_order2(
            order2.SecondOrderContext(h, 2, phi, tag))
        expected_Y = Fraction(9, 2) if _v(h[1], 2) >= 3 else Fraction(5)
        if o2.Y != expected_Y:
            raise InconsistentError(
                f"second-order ordinate {o2.Y} differs from the tabled {expected_Y}"
            )
        return finish(list(o2.elements), 1, None, extra_rows=[tag],
                      extra_meta={"Y": str(o2.Y), "order2": 1})
    if row.strategy == "table6":
        h = _scale_down(g, 1)
        Ap, Bp, Cp = h[2], h[1], h[0]
        phi, tag = order2.choose_phi("E2_row10", {"Ap": Ap, "Bp": Bp, "Cp": Cp})
        constructed = p_integral_basis_regular(h, 2, lifts=[phi], seed=seed)
        return finish(list(constructed.elements), 1, None, extra_rows=[tag])
    if row.strategy == "twodouble":
        h = _scale_down(g, 1)
        return _basis_e2_twodouble(ctx, h, finish, seed)
    if row.strategy == "scale4":
        h = _scale_down(g, 2)
        s = iterate_to_regular(h, 0, 2, seed)
        lifts = [IntPoly([-s, 1]), IntPoly([-1, 1])]
        constructed = p_integral_basis_regular(h, 2, lifts=lifts, seed=seed)
        nu1 = _ordinate_floor(h, s, 2, 1)
        nu2 = _ordinate_floor(h, s, 2, 2)
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(_quartic_q2(h, s), nu2),
                   BasisElement(_quartic_q1(h, s), nu1)]
        return finish(list(constructed.elements), 2, display, ["eq-last"],
                      {"s": s})
    raise InconsistentError(f"unhandled strategy {row.strategy}")


def _basis_e2_twodouble(ctx, h, finish, seed):
    """Expansion of the two-double-roots subcase of the shifted table:
    h = g(2x)/16 with h = x^2 (x+1)^2 mod 2."""
    Ap, Bp, Cp = h[2], h[1], h[0]
    vCp = _v(Cp, 2)
    vS = _v(Ap + Bp + Cp + 3, 2)
    x2x = IntPoly([0, 1, 1])
    if vCp == 1 and vS == 1:
        t, s = 0, 1
        rows = ["Tdd2-r1"]
        display = [BasisElement(IntPoly.x(i), 0) for i in range(4)]
    elif vCp == 1:
        t = 0
        s = iterate_to_regular(h, 1, 2, seed)
        rows = ["Tdd2-r2"]
        display = None
    elif vS == 1:
        t = 1
        s = iterate_to_regular(h, 0, 2, seed)
        rows = ["Tdd2-r3"]
        display = None
    elif Ap % 4 == 3:
        t = 0
        s = iterate_to_regular(h, 1, 2, seed)
        rows = ["Tdd2-r4"]
        nu_s = _ordinate_floor(h, s, 2, 1)
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(x2x, 1),
                   BasisElement(_quartic_q1(h, s), nu_s)]
    else:
        s_even = iterate_to_regular(h, 0, 2, seed)
        s_odd = iterate_to_regular(h, 1, 2, seed)
        nu_even = _ordinate_floor(h, s_even, 2, 1)
        nu_odd = _ordinate_floor(h, s_odd, 2, 1)
        if nu_even > nu_odd:
            s, t, nu_s, nu_t = s_even, s_odd, nu_even, nu_odd
        else:
            s, t, nu_s, nu_t = s_odd, s_even, nu_odd, nu_even
        beta = IntPoly([s * s + s * t + t * t + 2 * (s + t) + Ap, s + t + 2, 1])
        rows = ["Tdd2-r5"]
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(beta, nu_t),
                   BasisElement(_quartic_q1(h, s), nu_s)]
    if display is None:
        nu_s = _ordinate_floor(h, s, 2, 1)
        display = [BasisElement(_ONE, 0), BasisElement(_X, 0),
                   BasisElement(_X**2, 0),
                   BasisElement(_quartic_q1(h, s), nu_s)]
    if not is_phi_regular(h, IntPoly([-t, 1]), 2, seed).regular:
        raise InconsistentError("claimed-regular double-root lift is irregular")
    lifts = [IntPoly([-t, 1]), IntPoly([-s, 1])]
    constructed = p_integral_basis_regular(h, 2, lifts=lifts, seed=seed)
    return finish(list(constructed.elements), 1, display, rows, {"s": s, "t": t})


# -- top-level dispatch -----------------------------------------------------------


def quartic_p_integral_basis(a, b, c, p, seed=DEFAULT_SEED):
    """p-integral basis of Q[x]/(x^4+ax^2+bx+c) by the quartic fast path.
    The result records the case and every table row used in meta."""
    check_prime(p)
    require_irreducible_quartic(a, b, c)
    ctx = make_context(a, b, c, p)
    case = classify(a, b, c, p)
    if case == QuarticCase.SEPARABLE:
        els = tuple(BasisElement(IntPoly.x(i), 0) for i in range(4))
        return PIntegralBasis(p, els, 0, els, {"case": "SEPARABLE", "rows": []})
    if case in (QuarticCase.A1, QuarticCase.A2):
        return basis_case_A(ctx, seed)
    if case in (QuarticCase.B1, QuarticCase.B2, QuarticCase.B3, QuarticCase.B4):
        return basis_case_B(ctx, seed)
    if case == QuarticCase.C1:
        return basis_case_C1(ctx, seed)
    if case == QuarticCase.C2:
        return basis_case_C2(ctx, seed)
    if case in (QuarticCase.D1, QuarticCase.D2):
        return basis_case_D(ctx, seed)
    if case == QuarticCase.E2:
        return basis_case_E2(ctx, seed)
    # E1: normalize, dispatch the reduced polynomial, transport back
    a2, b2, c2, k = reduce_E1(a, b, c, p)
    if k == 0:
        return basis_case_E1(ctx, seed)
    inner = quartic_p_integral_basis(a2, b2, c2, p, seed)
    els = _transport(list(inner.elements), p, scale_pow=k, shift=0)
    gens = _transport(list(inner.generators), p, scale_pow=k, shift=0)
    meta = dict(inner.meta)
    meta["reduced_by"] = k
    meta["case"] = "E1->" + meta.get("case", "?")
    return triangularize(els, p, 4, generators=gens, meta=meta)
