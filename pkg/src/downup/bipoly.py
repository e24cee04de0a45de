"""Sparse polynomials in the commuting pair h, k over the scalar field.

Terms are keyed by exponent pairs (i, j); zero coefficients are never
stored, so equality is dictionary equality.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, Scalar, _as_scalar


class BiPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError("negative exponent (%d, %d)" % (i, j))
                c = c if isinstance(c, Scalar) else Scalar.from_rational(c)
                if (i, j) in clean:
                    c = clean[(i, j)] + c
                if c:
                    clean[(i, j)] = c
                elif (i, j) in clean:
                    del clean[(i, j)]
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): ONE})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def var_h(cls, e=1):
        return cls({(e, 0): ONE})

    @classmethod
    def var_k(cls, e=1):
        return cls({(0, e): ONE})

    def coefficient(self, i, j):
        return self.terms.get((i, j), Scalar(()))

    def degree_h(self):
        return max((i for i, _ in self.terms), default=-1)

    def degree_k(self):
        return max((j for _, j in self.terms), default=-1)

    def is_h_only(self):
        return all(j == 0 for _, j in self.terms)

    def is_const(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a scalar polynomial")
        return self.terms.get((0, 0), Scalar(()))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _as_bipoly(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        o = _as_bipoly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_bipoly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    key = (i1 + i2, j1 + j2)
                    c = c1 * c2
                    v = out.get(key)
                    v = c if v is None else v + c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
            return _raw(out)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return BiPoly()
        return _raw({key: v * c for key, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self * c.inverse()

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = BiPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = _as_bipoly(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [_term_text(key, c) for key, c in sorted(self.terms.items())]
        text = parts[0]
        for p in parts[1:]:
            text += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return text

    def __repr__(self):
        return "BiPoly(%s)" % self


def _raw(terms):
    p = BiPoly.__new__(BiPoly)
    p.terms = terms
    p._hash = None
    return p


def _as_bipoly(x):
    if isinstance(x, BiPoly):
        return x
    c = _as_scalar(x)
    if c is None:
        return None
    return BiPoly.const(c) if c else BiPoly()


def _term_text(key, c):
    i, j = key
    vars_ = []
    if i:
        vars_.append("h" if i == 1 else "h^%d" % i)
    if j:
        vars_.append("k" if j == 1 else "k^%d" % j)
    if not vars_:
        return str(c)
    body = "*".join(vars_)
    if c == ONE:
        return body
    if c == -ONE:
        return "-" + body
    ctext = str(c)
    if c.needs_parens():
        ctext = "(" + ctext + ")"
    return ctext + "*" + body


def poly_arith(p, q, op):
    """Ring arithmetic entry point; op is one of add, sub, mul."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError("unknown op %r" % (op,))


def support_of(p):
    """The set of exponent pairs carrying nonzero coefficients."""
    return frozenset(p.terms)


def apply_phi_power(spec, p, w):
    """The scaling automorphism applied w times: h -> r^w h, k -> s^w k.

    Closed form: the coefficient at (i, j) picks up z^(w*(n1*i + d*j)).
    Negative w inverts exactly; w = 0 is the identity.
    """
    w = int(w)
    if w == 0:
        return p
    return _raw({(i, j): c * Scalar.z_power(w * (spec.n1 * i + spec.d * j))
                 for (i, j), c in p.terms.items()})


def diff_h(p):
    """Formal derivative with respect to h."""
    out = {}
    for (i, j), c in p.terms.items():
        if i:
            out[(i - 1, j)] = c * Fraction(i)
    return _raw(out)


def exact_divide_by_a(p, g):
    """Divide p by k + g(h) exactly; None when the division leaves a remainder.

    g must involve h only, so the divisor is monic of degree 1 in k and
    the quotient is computed by peeling the top k-degree.
    """
    if not g.is_h_only():
        raise ValueError("divisor polynomial must depend on h only")
    quo = BiPoly()
    rem = p
    while True:
        m = rem.degree_k()
        if m < 1:
            break
        lead = _raw({(i, m - 1): c for (i, j), c in rem.terms.items() if j == m})
        quo = quo + lead
        # lead*k cancels the whole top layer; lead*g refills one layer down
        rem = rem - lead * (BiPoly.var_k() + g)
    if rem:
        return None
    return quo
