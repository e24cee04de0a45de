"""The weighted normal form of a down-up algebra: a generalized Weyl algebra.

Elements are finite sums  sum_w  p_w(h, k) * v_w  with p_w a BiPoly and

    v_w = x^w  (w > 0),    v_0 = 1,    v_w = y^(-w)  (w < 0).

The defining data are x*y = phi(a), y*x = a for the distinguished
polynomial a = k + g(h), together with x*p = phi(p)*x and y*p =
phi^{-1}(p)*y, where phi scales h by r and k by s.  Products of basis
words are reduced one adjacent x,y pair at a time, so every answer is a
chain of the two defining rewrites.
"""

from __future__ import annotations

from .bipoly import BiPoly, apply_phi_power, _as_bipoly
from .scalars import Scalar, _as_scalar


class GwaElement:
    __slots__ = ("components", "_hash")

    def __init__(self, components=None):
        clean = {}
        if components:
            for w, p in components.items():
                if not isinstance(p, BiPoly):
                    p = _as_bipoly(p)
                if p:
                    clean[int(w)] = p
        self.components = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    def weights(self):
        return sorted(self.components)

    def component(self, w):
        return self.components.get(w, BiPoly())

    def is_poly(self):
        return set(self.components) <= {0}

    def as_poly(self):
        if not self.is_poly():
            raise ValueError("element has nonzero weights")
        return self.components.get(0, BiPoly())

    def __add__(self, other):
        o = _as_element(other)
        if o is None:
            return NotImplemented
        out = dict(self.components)
        for w, p in o.components.items():
            v = out.get(w)
            v = p if v is None else v + p
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({w: -p for w, p in self.components.items()})

    def __sub__(self, other):
        o = _as_element(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_element(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        # scaling only; products of elements go through gwa_mul(A, u, v)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return GwaElement()
        return _raw({w: p * c for w, p in self.components.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        o = _as_element(other)
        if o is None:
            return NotImplemented
        return self.components == o.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.components.items()))
        return self._hash

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        for w in self.weights():
            p = self.components[w]
            if w == 0:
                parts.append(str(p))
                continue
            word = _word_text(w)
            ptext = str(p)
            if len(p.terms) > 1 or (set(p.terms) == {(0, 0)}
                                    and p.terms[(0, 0)].needs_parens()):
                ptext = "(" + ptext + ")"
            if p == BiPoly.one():
                parts.append(word)
            elif p == -BiPoly.one():
                parts.append("-" + word)
            else:
                parts.append(ptext + "*" + word)
        text = parts[0]
        for part in parts[1:]:
            text += (" - " + part[1:]) if part.startswith("-") else (" + " + part)
        return text

    def __repr__(self):
        return "GwaElement(%s)" % self


def _word_text(w):
    if w > 0:
        return "x" if w == 1 else "x^%d" % w
    return "y" if w == -1 else "y^%d" % (-w)


def _raw(components):
    e = GwaElement.__new__(GwaElement)
    e.components = components
    e._hash = None
    return e


def _as_element(x):
    if isinstance(x, GwaElement):
        return x
    if isinstance(x, BiPoly):
        return from_poly(x)
    c = _as_scalar(x)
    if c is None:
        return None
    return from_poly(BiPoly.const(c))


class GwaAlgebra:
    """Parameters plus the distinguished polynomial a = k + g(h)."""

    __slots__ = ("spec", "g", "a", "phi_a")

    def __init__(self, spec, g):
        if not g.is_h_only():
            raise ValueError("g must depend on h only")
        self.spec = spec
        self.g = g
        self.a = BiPoly.var_k() + g
        self.phi_a = apply_phi_power(spec, self.a, 1)

    def x(self):
        return basis_word(1)

    def y(self):
        return basis_word(-1)

    def h(self):
        return from_poly(BiPoly.var_h())

    def k(self):
        return from_poly(BiPoly.var_k())

    def one(self):
        return basis_word(0)

    def mul(self, u, v):
        return gwa_mul(self, u, v)

    def __eq__(self, other):
        if not isinstance(other, GwaAlgebra):
            return NotImplemented
        return self.spec == other.spec and self.g == other.g

    def __hash__(self):
        return hash((self.spec, self.g))

    def __repr__(self):
        return "GwaAlgebra(d=%d, n1=%d, n2=%d, g=%s)" % (
            self.spec.d, self.spec.n1, self.spec.n2, self.g)


def basis_word(w):
    """The basis word v_w as an element (v_0 = 1)."""
    return _raw({int(w): BiPoly.one()})


def from_poly(p):
    """Embed a polynomial as the weight-zero component."""
    return _raw({0: p}) if p else GwaElement()


def gwa_add(u, v):
    return u + v


def gwa_scale(c, u):
    return u * c


def _word_product(A, m, n):
    """Reduce v_m * v_n to (coefficient, v_{m+n}) one rewrite at a time.

    Each loop turn eliminates the innermost adjacent x,y pair via
    x*y -> phi(a) or y*x -> a and commutes the result leftward, which
    costs one power of phi.  Same-sign words multiply freely.
    """
    weight = m + n
    coeff = BiPoly.one()
    while m > 0 and n < 0:
        # x^m y^(...)  ->  phi^m(a) x^(m-1) y^(...-1)
        coeff = coeff * apply_phi_power(A.spec, A.a, m)
        m -= 1
        n += 1
    while m < 0 and n > 0:
        # y^(...) x^n  ->  phi^(m+1)(a) y^(...-1) x^(n-1)
        coeff = coeff * apply_phi_power(A.spec, A.a, m + 1)
        m += 1
        n -= 1
    return coeff, weight


def gwa_mul(A, u, v):
    """Product in the algebra.

    Polynomials pass through the basis word on their left by phi:
    (p v_m)(q v_n) = p phi^m(q) (v_m v_n).
    """
    out = {}
    for m, p in u.components.items():
        for n, q in v.components.items():
            coeff, w = _word_product(A, m, n)
            term = p * apply_phi_power(A.spec, q, m) * coeff
            prev = out.get(w)
            term = term if prev is None else prev + term
            if term:
                out[w] = term
            elif w in out:
                del out[w]
    return _raw(out)


def apply_sigma_mu(A, u, power=1):
    """The degree automorphism: weight-w components scale by mu^(-w).

    power = -1 applies the inverse (coarseness mu^{-1}); general integer
    powers compose the closed form.
    """
    n2 = A.spec.n2 * int(power)
    return _raw({w: p * Scalar.z_power(n2 * w)
                 for w, p in u.components.items()})
