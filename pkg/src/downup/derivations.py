"""Skew derivations of the weighted algebra, twisted by the degree
automorphism sigma_mu.

Two elementary families:

  * weight 0 ("c-type"): vanishes on the polynomial part, sends x to
    c0(h,k)*x and y to -mu*c0(h/r, k/s)*y, for an arbitrary c0;
  * weight w != 0 ("alpha-type"): determined by a twisted derivation
    alpha_w of the polynomial part whose values on h and k are drawn
    from the two index-set families, with x or y (by the sign of w)
    sent to zero.

Everything extends by the twisted Leibniz rule
    D(a*b) = D(a) sigma_mu(b) + a D(b)
along factorizations into generators; the test suites confirm the
answer is factorization-independent for every constructed derivation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bipoly import BiPoly, apply_phi_power, diff_h, exact_divide_by_a
from .gwa import GwaElement, apply_sigma_mu, basis_word, from_poly, gwa_mul
from .scalars import ONE, Scalar


class DerivationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# index sets

@dataclass(frozen=True)
class IndexSet:
    """Admissible exponents: a finite list, or a residue class with a
    threshold, or nothing."""

    kind: str                       # "finite" | "progression" | "empty"
    elements: tuple = ()
    offset: int = 0
    modulus: int = 1
    threshold: int = 0

    @classmethod
    def finite(cls, elements):
        elements = tuple(sorted(set(elements)))
        if not elements:
            return cls("empty")
        return cls("finite", elements)

    @classmethod
    def progression(cls, offset, modulus, threshold):
        return cls("progression", (), offset % modulus, modulus, threshold)

    @classmethod
    def empty(cls):
        return cls("empty")

    def __contains__(self, t):
        if t < 0:
            return False
        if self.kind == "finite":
            return t in self.elements
        if self.kind == "progression":
            return t >= self.threshold and t % self.modulus == self.offset
        return False

    def members_up_to(self, bound):
        if self.kind == "finite":
            return [t for t in self.elements if t <= bound]
        if self.kind == "empty":
            return []
        start = self.threshold + ((self.offset - self.threshold) % self.modulus)
        return list(range(start, bound + 1, self.modulus))

    def is_empty(self):
        return self.kind == "empty"

    def __str__(self):
        if self.kind == "finite":
            return "{%s}" % ", ".join(str(t) for t in self.elements)
        if self.kind == "empty":
            return "{}"
        if self.modulus == 1:
            if self.threshold == 0:
                return "N"
            return "{t in N : t >= %d}" % self.threshold
        return "{t in N : t >= %d, t = %d (mod %d)}" % (
            self.threshold, self.offset, self.modulus)


def _solve_membership(b1, c):
    """{t in N : c - t*b1 is a natural number} for rational b1 != 0, c."""
    if b1 > 0:
        bound = int(c / b1) if c >= 0 else -1
        hits = [t for t in range(bound + 1)
                if (c - t * b1).denominator == 1 and c - t * b1 >= 0]
        return IndexSet.finite(hits)
    # b1 < 0: nonnegativity holds for all large t, so membership is a
    # congruence  t*A = C (mod L)  on the common denominator lattice
    lcm = math.lcm(b1.denominator, c.denominator)
    a_coef = int(b1 * lcm)
    c_coef = int(c * lcm)
    g = math.gcd(a_coef, lcm)
    if c_coef % g:
        return IndexSet.empty()
    modulus = lcm // g
    if modulus == 1:
        offset = 0
    else:
        inv = pow((a_coef // g) % modulus, -1, modulus)
        offset = ((c_coef // g) * inv) % modulus
    # smallest t with c - t*b1 >= 0, i.e. t >= c/b1
    low = c / b1
    t0 = max(0, math.ceil(low))
    threshold = t0 + ((offset - t0) % modulus)
    return IndexSet.progression(offset, modulus, threshold)


def index_sets_from_b(b1, b2):
    """Index sets for the exponent vector (b1, b2) directly.

    I collects t with b2 + (1-t)*b1 natural (values on h); J collects t
    with b2 - t*b1 + 1 natural (values on k).
    """
    b1, b2 = Fraction(b1), Fraction(b2)
    if b1 == 0:
        raise DerivationError("b1 zero")
    return (_solve_membership(b1, b2 + b1),
            _solve_membership(b1, b2 + 1))


def index_sets(spec):
    """Index sets (I, J) of the parameter point."""
    return index_sets_from_b(spec.b1, spec.b2)


# ---------------------------------------------------------------------------
# derivation data

@dataclass(frozen=True)
class CTypeSpec:
    c0: BiPoly


@dataclass(frozen=True)
class AlphaSpec:
    w: int
    coeffs_h: dict = field(default_factory=dict)
    coeffs_k: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NonInnerWitness:
    """Monomial of c0 where the inner equation degenerates."""
    beta: int
    gamma: int


class Derivation:
    """A twisted derivation, stored as scalar combinations of elementary
    actions sharing one parameter point (hence one coarseness mu)."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms):
        self.spec = spec
        self.terms = tuple((c, act) for c, act in terms if c)

    @property
    def coarseness(self):
        return Scalar.z_power(-self.spec.n2)

    def weights(self):
        return sorted({act.weight for _, act in self.terms})

    def __repr__(self):
        kinds = ",".join(type(act).__name__.strip("_") for _, act in self.terms)
        return "Derivation(%s)" % (kinds or "zero")


class _CTypeAction:
    weight = 0

    def __init__(self, spec, c0):
        self.spec = spec
        self.c0 = c0
        mu = Scalar.z_power(-spec.n2)
        self.dx = GwaElement({1: c0})
        self.dy = GwaElement({-1: apply_phi_power(spec, c0, -1) * (-mu)})
        self.word_memo = {}

    def on_poly(self, algebra, p):
        return GwaElement()

    def on_x(self, algebra):
        return self.dx

    def on_y(self, algebra):
        return self.dy


def _qnum(exp, w, n):
    # 1 + q + ... + q^(n-1) for q = z^(exp*w)
    total = Scalar(())
    for t in range(n):
        total = total + Scalar.z_power(exp * w * t)
    return total


class _AlphaAction:
    def __init__(self, spec, g, w, alpha_h, alpha_k):
        self.spec = spec
        self.g = g
        self.weight = w
        self.alpha_h = alpha_h
        self.alpha_k = alpha_k
        a = BiPoly.var_k() + g
        if w > 0:
            self.dx = GwaElement()
            self.dy = GwaElement(
                {w - 1: self.on_base(a) * Scalar.z_power(-spec.n2)})
        else:
            phi_a = apply_phi_power(spec, a, 1)
            self.dy = GwaElement()
            self.dx = GwaElement(
                {w + 1: self.on_base(phi_a) * Scalar.z_power(spec.n2)})
        self.word_memo = {}

    def on_base(self, p):
        # twisted Leibniz on monomials: the h factor passes phi^w across
        # the k block, paid for by the two q-brackets
        spec, w = self.spec, self.weight
        out = BiPoly()
        for (a, c), coeff in p.terms.items():
            if a:
                scale = coeff * _qnum(spec.n1, w, a) * Scalar.z_power(spec.d * w * c)
                out = out + self.alpha_h * BiPoly.monomial(a - 1, c, scale)
            if c:
                scale = coeff * _qnum(spec.d, w, c)
                out = out + self.alpha_k * BiPoly.monomial(a, c - 1, scale)
        return out

    def on_poly(self, algebra, p):
        return GwaElement({self.weight: self.on_base(p)})

    def on_x(self, algebra):
        return self.dx

    def on_y(self, algebra):
        return self.dy


def c_type_admissible(spec, w):
    """Weight-w maps that kill the polynomial part are derivations only
    in weight zero (elsewhere the commutation with phi^w forces 0)."""
    return w == 0


def build_c_derivation(spec, cspec):
    return Derivation(spec, ((ONE, _CTypeAction(spec, cspec.c0)),))


def _alpha_exponent(spec, which, t):
    # k-exponent paired with h^t on the h side / k side value
    if which == "h":
        num = spec.n2 + (1 - t) * spec.n1
    else:
        num = spec.n2 - t * spec.n1 + spec.d
    if num < 0 or num % spec.d:
        return None
    return num // spec.d


def _alpha_value_polys(spec, aspec):
    alpha_h = {}
    for i, c in aspec.coeffs_h.items():
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            continue
        j = _alpha_exponent(spec, "h", i)
        if j is None:
            raise DerivationError(
                "support violation: i=%d is not in the h index set" % i)
        alpha_h[(i, j)] = c
    alpha_k = {}
    for m, c in aspec.coeffs_k.items():
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            continue
        n = _alpha_exponent(spec, "k", m)
        if n is None:
            raise DerivationError(
                "support violation: m=%d is not in the k index set" % m)
        alpha_k[(m, n)] = c
    return BiPoly(alpha_h), BiPoly(alpha_k)


def verify_alpha_compat(spec, aspec):
    """Exact check that the tabulated values commute with phi as the
    coarseness demands: r*alpha(h) = mu*phi(alpha(h)) and likewise for k.

    Keys outside the index sets cannot carry a natural k-exponent, so a
    forcibly injected bad key reports False.
    """
    try:
        alpha_h, alpha_k = _alpha_value_polys(spec, aspec)
    except DerivationError:
        return False
    mu = Scalar.z_power(-spec.n2)
    ok_h = alpha_h * Scalar.z_power(spec.n1) == apply_phi_power(spec, alpha_h, 1) * mu
    ok_k = alpha_k * Scalar.z_power(spec.d) == apply_phi_power(spec, alpha_k, 1) * mu
    return ok_h and ok_k


def build_alpha_derivation(spec, g, aspec):
    """Construct the weight-w derivation from tabulated values.

    Raises on weight zero, on keys outside the index sets, and on value
    pairs that fail the commutativity coupling

        (s^w - 1) k alpha(h) = (r^w - 1) h alpha(k),

    without which no twisted derivation takes those values on h and k
    (the two factorizations of hk would disagree).
    """
    w = int(aspec.w)
    if w == 0:
        raise DerivationError("alpha weight must be nonzero")
    sets = index_sets(spec)
    for i in aspec.coeffs_h:
        if aspec.coeffs_h[i] and i not in sets[0]:
            raise DerivationError(
                "support violation: i=%d is not in the h index set" % i)
    for m in aspec.coeffs_k:
        if aspec.coeffs_k[m] and m not in sets[1]:
            raise DerivationError(
                "support violation: m=%d is not in the k index set" % m)
    alpha_h, alpha_k = _alpha_value_polys(spec, aspec)
    lhs = BiPoly.var_k() * alpha_h * (Scalar.z_power(spec.d * w) - ONE)
    rhs = BiPoly.var_h() * alpha_k * (Scalar.z_power(spec.n1 * w) - ONE)
    mismatch = lhs - rhs
    if mismatch:
        key = min(mismatch.terms)
        raise DerivationError(
            "alpha values do not couple into a derivation "
            "(hk = kh fails at h^%d*k^%d)" % key)
    return Derivation(spec, ((ONE, _AlphaAction(spec, g, w, alpha_h, alpha_k)),))


def coupled_alpha_spec(spec, w, h_coeffs):
    """Fill in the k-side values forced by the commutativity coupling.

    h_coeffs maps indices i >= 1 from the h index set to coefficients;
    each pairs with index i-1 on the k side, scaled by
    (s^w - 1)/(r^w - 1).  The index 0 value on h admits no partner and
    is therefore not offered.
    """
    w = int(w)
    if w == 0:
        raise DerivationError("alpha weight must be nonzero")
    ratio = (Scalar.z_power(spec.d * w) - ONE) / (Scalar.z_power(spec.n1 * w) - ONE)
    coeffs_h, coeffs_k = {}, {}
    for i, c in h_coeffs.items():
        if i < 1:
            raise DerivationError(
                "support violation: i=%d has no coupling partner" % i)
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if not c:
            continue
        coeffs_h[i] = c
        coeffs_k[i - 1] = c * ratio
    return AlphaSpec(w, coeffs_h, coeffs_k)


# ---------------------------------------------------------------------------
# application

def _sigma_word(algebra, w):
    # sigma_mu(v_w) = mu^{-w} v_w
    return GwaElement({w: BiPoly.const(Scalar.z_power(algebra.spec.n2 * w))})


def _word_derivative(algebra, action, w):
    """D(v_w), peeling one generator from the left each step."""
    if w == 0:
        return GwaElement()
    memo = action.word_memo
    if w in memo:
        return memo[w]
    step = 1 if w > 0 else -1
    gen_d = action.on_x(algebra) if step == 1 else action.on_y(algebra)
    rest = w - step
    if rest == 0:
        value = gen_d
    else:
        value = gwa_mul(algebra, gen_d, _sigma_word(algebra, rest)) \
            + gwa_mul(algebra, basis_word(step), _word_derivative(algebra, action, rest))
    memo[w] = value
    return value


def apply_derivation(algebra, deriv, u):
    """Evaluate the derivation on an element, component by component:
    D(p v_w) = D(p) sigma_mu(v_w) + p D(v_w)."""
    if algebra.spec != deriv.spec:
        raise DerivationError("derivation and algebra parameters differ")
    total = GwaElement()
    for c, action in deriv.terms:
        if isinstance(action, _AlphaAction) and action.g != algebra.g:
            raise DerivationError(
                "derivation was built over a different conformal polynomial")
        part = GwaElement()
        for w, p in u.components.items():
            dp = action.on_poly(algebra, p)
            if dp:
                part = part + gwa_mul(algebra, dp, _sigma_word(algebra, w))
            dword = _word_derivative(algebra, action, w)
            if dword:
                part = part + gwa_mul(algebra, from_poly(p), dword)
        total = total + part * c
    return total


def combine(parts):
    """Scalar combination of derivations over one parameter point."""
    spec = None
    terms = []
    for c, deriv in parts:
        c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
        if spec is None:
            spec = deriv.spec
        elif deriv.spec != spec:
            raise DerivationError("coarseness mismatch")
        if not c:
            continue
        terms.extend((c * ci, act) for ci, act in deriv.terms)
    if spec is None:
        raise DerivationError("nothing to combine")
    return Derivation(spec, terms)


# ---------------------------------------------------------------------------
# innerness

def solve_inner(spec, cspec):
    """Solve c0 = mu^{-1} p - phi(p) coefficientwise.

    Each monomial divides by mu^{-1} - r^beta s^gamma; the witness is
    the first monomial (in exponent order) where that factor vanishes,
    i.e. where n2 = n1*beta + d*gamma.
    """
    terms = {}
    for (beta, gamma) in sorted(cspec.c0.terms):
        if spec.n2 == spec.n1 * beta + spec.d * gamma:
            return NonInnerWitness(beta, gamma)
        denom = Scalar.z_power(spec.n2) \
            - Scalar.z_power(spec.n1 * beta + spec.d * gamma)
        terms[(beta, gamma)] = cspec.c0.terms[(beta, gamma)] / denom
    return BiPoly(terms)


def twisted_commutator(algebra, b, u):
    """u -> b sigma_mu(u) - u b, the inner derivation attached to b."""
    return gwa_mul(algebra, b, apply_sigma_mu(algebra, u)) \
        - gwa_mul(algebra, u, b)


def check_weight0_alpha_condition(algebra, alpha0_h, alpha0_k):
    """Weight-zero alpha data is admissible iff alpha_0(a) is divisible
    by a; returns (flag, quotient).  Here sigma is the identity, so
    alpha_0(a) = alpha_0(k) + g'(h) alpha_0(h)."""
    value = alpha0_k + diff_h(algebra.g) * alpha0_h
    quotient = exact_divide_by_a(value, algebra.g)
    return (quotient is not None), quotient


# ---------------------------------------------------------------------------
# text form

def _parse_index_map(text, scalar_parser):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("expected {index: value, ...}, got %r" % text)
    inner = text[1:-1].strip()
    out = {}
    if not inner:
        return out
    for entry in inner.split(","):
        key, sep, value = entry.partition(":")
        if not sep:
            raise ValueError("bad map entry %r" % entry)
        out[int(key.strip())] = scalar_parser(value.strip())
    return out


def parse_derivation_spec(text):
    """Parse the textual derivation form.

    Either `c0 = <polynomial in h, k>` or
    `w = <int>; alpha_h = {i: <scalar>, ...}; alpha_k = {m: <scalar>, ...}`.
    """
    from .expressions import parse_bipoly, parse_scalar

    fields = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ValueError("bad derivation field %r" % chunk)
        fields[key.strip()] = value.strip()
    if set(fields) == {"c0"}:
        return CTypeSpec(parse_bipoly(fields["c0"]))
    if "w" not in fields or not set(fields) <= {"w", "alpha_h", "alpha_k"}:
        raise ValueError(
            "expected either c0 = ... or w = ...; alpha_h = {...}; alpha_k = {...}")
    return AlphaSpec(
        int(fields["w"]),
        _parse_index_map(fields.get("alpha_h", "{}"), parse_scalar),
        _parse_index_map(fields.get("alpha_k", "{}"), parse_scalar),
    )
