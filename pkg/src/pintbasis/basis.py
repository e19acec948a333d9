"""p-integral bases for p-regular polynomials of arbitrary degree, the
decomposition type of p, the index lower bound, and canonical
triangularization of generating sets over the localization at p.

A basis element represents g(theta)/p^e by an integer numerator polynomial
of degree < n and a denominator exponent e.  Triangularized bases have one
element per degree 0..n-1 with pivot coefficient a power of p, reduced
entries above it, and minimal denominators; two modules are equal iff their
triangularized forms are identical.
"""

from dataclasses import dataclass, field

from .arith import vp
from .errors import InconsistentError, NotRegularError, RankDeficientError
from .factor import DEFAULT_SEED, factor_mod_p, sanity_check_irreducible
from .fq import factor_fqpoly
from .intpoly import IntPoly
from .newton import is_p_regular, ordinates, phi_index, phi_polygon_data

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class BasisElement:
    """numerator(theta) / p^denom_exp with deg numerator < deg f."""

    numerator: IntPoly
    denom_exp: int

    def render(self, p, var="θ"):
        num = self.numerator.render(var, unicode_powers=True)
        if self.denom_exp == 0:
            return num
        den = p**self.denom_exp
        if self.numerator.degree > 0 and len([c for c in self.numerator.coeffs if c]) > 1:
            return f"({num})/{den}"
        return f"{num}/{den}"

    def to_json(self):
        return {"numerator": self.numerator.render("x"), "denom_exp": self.denom_exp}


@dataclass(frozen=True)
class PIntegralBasis:
    p: int
    elements: tuple  # one BasisElement per degree 0..n-1, triangular
    index_valuation: int
    generators: tuple = ()  # pre-triangularization family, for display
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self):
        return len(self.elements)

    def render(self, var="θ"):
        return ", ".join(e.render(self.p, var) for e in self.elements)

    def render_generators(self, var="θ"):
        return ", ".join(e.render(self.p, var) for e in self.generators)

    def same_module(self, other):
        return self.p == other.p and self.elements == other.elements

    def to_json(self, decomposition=None):
        out = {
            "p": self.p,
            "index_valuation": self.index_valuation,
            "elements": [e.to_json() for e in self.elements],
        }
        if decomposition is not None:
            out["decomposition"] = [
                {"e": entry.e, "f": entry.f} for entry in decomposition.entries
            ]
        if self.meta:
            out["meta"] = {
                k: v for k, v in self.meta.items() if isinstance(v, (str, int, list))
            }
        return out


def power_basis(p, n):
    els = tuple(BasisElement(IntPoly.x(k), 0) for k in range(n))
    return PIntegralBasis(p, els, 0, els)


# -- triangularization -----------------------------------------------------------


def _hnf_rows(rows, n):
    """Row-style Hermite form of the lattice spanned by integer rows: returns
    a list indexed by pivot column (degree), entries reduced upward, or None
    in positions without a pivot."""
    rows = [list(r) for r in rows if any(r)]
    result = [None] * n
    for col in range(n - 1, -1, -1):
        pivot = None
        rest = []
        for r in rows:
            if r[col]:
                if pivot is None:
                    pivot = r
                else:
                    a, b = pivot[col], r[col]
                    g, x, y = _xgcd(a, b)
                    pivot, r = (
                        [x * u + y * v for u, v in zip(pivot, r)],
                        [(a // g) * v - (b // g) * u for u, v in zip(pivot, r)],
                    )
                    if any(r):
                        rest.append(r)
            else:
                rest.append(r)
        if pivot is not None:
            if pivot[col] < 0:
                pivot = [-u for u in pivot]
            result[col] = pivot
        rows = rest
    # reduce the off-pivot entries of each row into [0, pivot), walking the
    # reference pivots downward so a subtraction never disturbs a column that
    # was already reduced (pivot rows vanish above their own column)
    for col2 in range(n):
        if result[col2] is None:
            continue
        for col in range(col2 - 1, -1, -1):
            piv = result[col]
            if piv is None:
                continue
            q = result[col2][col] // piv[col]
            if q:
                result[col2] = [u - q * v for u, v in zip(result[col2], piv)]
    return result


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def triangularize(elements, p, n=None, generators=None, meta=None):
    """Canonical triangular basis of the Z_(p)-module spanned by the given
    elements.

    Denominators are cleared to a common power of p; the integer row lattice
    is augmented by q*Z^n with q = p^{v_p(det)+1}, which leaves the local
    span unchanged but forces every Hermite pivot to be a power of p.  The
    result is one element per degree with minimal denominator and entries
    reduced modulo the pivot."""
    elements = list(elements)
    if n is None:
        n = max(e.numerator.degree for e in elements) + 1
    E = max((e.denom_exp for e in elements), default=0)
    rows = []
    for e in elements:
        if e.numerator.degree >= n:
            raise ValueError("numerator degree exceeds ambient rank")
        scale = p ** (E - e.denom_exp)
        rows.append([e.numerator[k] * scale for k in range(n)])
    hnf = _hnf_rows(rows, n)
    if any(r is None for r in hnf):
        raise RankDeficientError("elements do not span a rank-n module")
    det_v = sum(vp(r[k], p) for k, r in enumerate(hnf))
    q = p ** (det_v + 1)
    aug = rows + [[q if j == k else 0 for j in range(n)] for k in range(n)]
    hnf = _hnf_rows(aug, n)
    out = []
    index_valuation = 0
    for k in range(n):
        row = hnf[k]
        piv_v = vp(row[k], p)
        if p**piv_v != row[k]:
            raise InconsistentError("pivot is not a power of p after saturation")
        index_valuation += E - piv_v
        strip = min([E] + [vp(c, p) for c in row if c])
        num = IntPoly([c // p**strip for c in row])
        out.append(BasisElement(num, E - strip))
    return PIntegralBasis(
        p,
        tuple(out),
        index_valuation,
        tuple(generators if generators is not None else elements),
        dict(meta or {}),
    )


# -- decomposition data ----------------------------------------------------------


@dataclass(frozen=True)
class PrimeEntry:
    """One p-adic prime (or unresolved cluster) attached to an irreducible
    residual factor: e and f are None when the factor is multiple."""

    phi: IntPoly
    slope: object
    residual_factor: object
    multiplicity: int
    e: int | None
    f: int | None


@dataclass(frozen=True)
class DecompositionType:
    entries: tuple
    complete: bool

    def ef_pairs(self):
        return [(en.e, en.f) for en in self.entries]


def decomposition_type(f, p, lifts=None, seed=DEFAULT_SEED):
    """Slopes and residual factorizations for every lift; when every residual
    factor is simple the full list of (e, f) invariants of the primes above p
    is emitted and checked against deg f."""
    sanity_check_irreducible(f)
    if lifts is None:
        lifts = [phi for phi, _ in factor_mod_p(f, p, seed)]
    entries = []
    complete = True
    for phi in lifts:
        _, principal, data = phi_polygon_data(f, phi, p)
        if principal.length == 0:
            raise InconsistentError(f"lift {phi.render()} does not divide f mod {p}")
        for sd in data:
            _, factors = factor_fqpoly(sd.residual, seed)
            for g, m in factors:
                if m == 1:
                    entries.append(
                        PrimeEntry(
                            phi,
                            sd.side.slope,
                            g,
                            1,
                            sd.side.ramification,
                            phi.degree * g.degree,
                        )
                    )
                else:
                    complete = False
                    entries.append(PrimeEntry(phi, sd.side.slope, g, m, None, None))
    if complete:
        total = sum(en.e * en.f for en in entries)
        if total != f.degree:
            raise InconsistentError(
                f"sum of e*f = {total} differs from deg f = {f.degree}"
            )
    return DecompositionType(tuple(entries), complete)


def ind_p_lower_bound(f, p, lifts=None, seed=DEFAULT_SEED):
    """sum of ind_phi(f) over the lifts; equals ind_p(f) when f is p-regular."""
    if lifts is None:
        lifts = [phi for phi, _ in factor_mod_p(f, p, seed)]
    return sum(phi_index(f, phi, p) for phi in lifts)


def regular_basis_generators(f, p, lifts, seed=DEFAULT_SEED):
    """The n elements q_{i,j}(theta) theta^k / p^{floor(y_{i,j})} of the
    regular-case basis construction: quotients of the phi-adic developments
    over the floored polygon ordinates.  Raises NotRegularError when some
    residual polynomial is inseparable."""
    reg = is_p_regular(f, p, lifts, seed)
    if not reg.regular:
        phi, side, g, m = reg.first_witness()
        raise NotRegularError(phi, side, g, m)
    n = f.degree
    gens = []
    total_m = 0
    for phi in lifts:
        expansion, principal, _ = phi_polygon_data(f, phi, p)
        ell = principal.length
        if ell == 0:
            raise InconsistentError(f"lift {phi.render()} does not divide f mod {p}")
        ys = ordinates(principal)
        total_m += ell * phi.degree
        for j in range(1, ell + 1):
            denom = int(ys[j] // 1)
            q = expansion.quotients[j - 1]
            for k in range(phi.degree):
                num = q * IntPoly.x(k)
                if num.degree >= n:
                    raise InconsistentError("generator degree out of range")
                gens.append(BasisElement(num, denom))
    if total_m != n:
        raise InconsistentError(
            "lifts do not cover f mod p: sum ell_i * m_i != deg f"
        )
    return gens


def p_integral_basis_regular(f, p, lifts=None, seed=DEFAULT_SEED, meta=None):
    """Triangularized p-integral basis for a p-regular monic irreducible f,
    from the quotients of the phi-adic developments and the polygon
    ordinates.  The index valuation is checked against the sum of the
    phi-indices (they must agree in the regular case) before returning."""
    sanity_check_irreducible(f)
    if lifts is None:
        lifts = [phi for phi, _ in factor_mod_p(f, p, seed)]
    gens = regular_basis_generators(f, p, lifts, seed)
    expected = sum(phi_index(f, phi, p) for phi in lifts)
    basis = triangularize(gens, p, f.degree, generators=gens, meta=meta)
    if basis.index_valuation != expected:
        raise InconsistentError(
            f"index valuation {basis.index_valuation} != sum of phi-indices {expected}"
        )
    return basis
