"""Named verification suites behind `downup verify`.

Each suite draws seeded samples, checks exact identities, and reports
pass/total with a short failure description per miss.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import sampling
from .bipoly import BiPoly, apply_phi_power, support_of
from .derivations import apply_derivation, index_sets, index_sets_from_b
from .expressions import parse_element
from .gwa import apply_sigma_mu, basis_word, gwa_mul
from .oracle import oracle_normalize
from .presentation import (DownUpPresentation, conformal_residue, gwa_algebra,
                           relation_residues, solve_conformal,
                           witness_support_matches)
from .scalars import Scalar, param_power, validate_param_spec


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok, describe):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 10:
            self.failures.append(describe() if callable(describe) else describe)

    @property
    def ok(self):
        return self.passed == self.total


class SuiteContext:
    def __init__(self, spec=None, f_coeffs=None, seed=0, samples=200):
        self.spec = spec
        self.f_coeffs = f_coeffs
        self.seed = seed
        self.samples = samples

    def require_spec(self):
        if self.spec is None:
            raise ValueError("missing parameters: d, n1, n2")
        return self.spec

    def presentation(self):
        if self.f_coeffs is None:
            raise ValueError("missing f")
        return DownUpPresentation.from_coefficients(
            self.require_spec(), self.f_coeffs)

    def algebra(self):
        return gwa_algebra(self.presentation())


def suite_field(ctx):
    res = SuiteResult("field")
    rng = sampling.rng_for(ctx.seed)
    for n in range(ctx.samples):
        a = sampling.random_scalar(rng, with_denominator=True)
        b = sampling.random_scalar(rng, with_denominator=True)
        c = sampling.random_scalar(rng, with_denominator=True, nonzero=True)
        ok = ((a + b) + c == a + (b + c)
              and (a * b) * c == a * (b * c)
              and a * (b + c) == a * b + a * c
              and a + b == b + a
              and a - a == Scalar(())
              and c * c.inverse() == Scalar.from_rational(1))
        res.check(ok, lambda: "sample %d: (%s, %s, %s)" % (n, a, b, c))
    return res


def suite_params(ctx):
    # no accepted point may have s equal to a positive power of r
    res = SuiteResult("params")
    for d in range(1, 5):
        for n1 in range(-6, 7):
            for n2 in range(-4, 5):
                try:
                    spec = validate_param_spec(d, n1, n2)
                except ValueError:
                    continue
                clash = any(param_power(spec, "s", 1) == param_power(spec, "r", q)
                            for q in range(1, 65))
                res.check(not clash,
                          "accepted d=%d n1=%d with s a power of r" % (d, n1))
    return res


def suite_phi(ctx):
    res = SuiteResult("phi")
    spec = ctx.require_spec()
    rng = sampling.rng_for(ctx.seed)
    for n in range(ctx.samples):
        p = sampling.random_bipoly(rng)
        q = sampling.random_bipoly(rng)
        w = rng.randint(-5, 5)
        hom = apply_phi_power(spec, p * q, w) == \
            apply_phi_power(spec, p, w) * apply_phi_power(spec, q, w)
        back = apply_phi_power(spec, apply_phi_power(spec, p, w), -w) == p
        res.check(hom and back, lambda: "sample %d (w=%d)" % (n, w))
    return res


def suite_assoc(ctx):
    res = SuiteResult("assoc")
    algebra = ctx.algebra()
    rng = sampling.rng_for(ctx.seed)
    for n in range(ctx.samples):
        u = sampling.random_element(rng, max_degree=2, max_terms=2)
        v = sampling.random_element(rng, max_degree=2, max_terms=2)
        t = sampling.random_element(rng, max_degree=2, max_terms=2)
        lhs = gwa_mul(algebra, gwa_mul(algebra, u, v), t)
        rhs = gwa_mul(algebra, u, gwa_mul(algebra, v, t))
        res.check(lhs == rhs, lambda: "sample %d" % n)
    return res


def suite_sigma(ctx):
    res = SuiteResult("sigma")
    algebra = ctx.algebra()
    rng = sampling.rng_for(ctx.seed)
    for n in range(ctx.samples):
        u = sampling.random_element(rng, max_degree=2, max_terms=2)
        v = sampling.random_element(rng, max_degree=2, max_terms=2)
        mult = apply_sigma_mu(algebra, gwa_mul(algebra, u, v)) == \
            gwa_mul(algebra, apply_sigma_mu(algebra, u), apply_sigma_mu(algebra, v))
        back = apply_sigma_mu(algebra, apply_sigma_mu(algebra, u), -1) == u
        res.check(mult and back, lambda: "sample %d" % n)
    return res


def suite_oracle(ctx):
    res = SuiteResult("oracle")
    algebra = ctx.algebra()
    letters = ("x", "y", "h", "k")
    words = []
    for length in range(1, 5):
        words.extend(product(letters, repeat=length))

    def eval_word(word):
        out = basis_word(0)
        for ch in word:
            out = gwa_mul(algebra, out, parse_element(ch, algebra))
        return out

    one = Scalar.from_rational(1)
    for word in words:
        left = oracle_normalize(algebra, [(one, word)])
        right = oracle_normalize(algebra, [(one, word)], strategy="rightmost")
        res.check(left == eval_word(word) and left == right,
                  lambda: "word %s" % "".join(word))
    for w1, w2 in product(words, repeat=2):
        if len(w1) + len(w2) > 4:
            continue
        direct = oracle_normalize(algebra, [(one, w1 + w2)])
        split = gwa_mul(algebra,
                        oracle_normalize(algebra, [(one, w1)]),
                        oracle_normalize(algebra, [(one, w2)]))
        res.check(direct == split, lambda: "pair %s|%s" % ("".join(w1), "".join(w2)))
    return res


def suite_conformal(ctx):
    res = SuiteResult("conformal")
    spec = ctx.require_spec()
    rng = sampling.rng_for(ctx.seed)
    for n in range(min(ctx.samples, 50)):
        coeffs = sampling.random_f_coefficients(rng)
        pres = DownUpPresentation.from_coefficients(spec, coeffs)
        wit = solve_conformal(pres)
        ok = (not conformal_residue(pres, wit)
              and witness_support_matches(pres, wit))
        res.check(ok, lambda: "sample %d" % n)
    return res


def suite_indices(ctx):
    res = SuiteResult("indices")
    spec = ctx.require_spec()

    def enumerated(b1, b2, shift, bound=1000):
        return [t for t in range(bound + 1)
                if (b2 + shift - t * b1).denominator == 1
                and b2 + shift - t * b1 >= 0]

    i_set, j_set = index_sets_from_b(spec.b1, spec.b2)
    res.check(i_set.members_up_to(1000) == enumerated(spec.b1, spec.b2, spec.b1),
              "I disagrees with enumeration")
    res.check(j_set.members_up_to(1000) == enumerated(spec.b1, spec.b2, 1),
              "J disagrees with enumeration")
    return res


def suite_leibniz(ctx):
    res = SuiteResult("leibniz")
    algebra = ctx.algebra()
    spec = algebra.spec
    rng = sampling.rng_for(ctx.seed)
    derivs = sampling.random_derivations(rng, spec, algebra.g, 5)
    per = max(1, ctx.samples // len(derivs))
    for idx, deriv in enumerate(derivs):
        for n in range(per):
            u = sampling.random_element(rng, max_degree=2, max_terms=2)
            v = sampling.random_element(rng, max_degree=2, max_terms=2)
            lhs = apply_derivation(algebra, deriv, gwa_mul(algebra, u, v))
            rhs = gwa_mul(algebra, apply_derivation(algebra, deriv, u),
                          apply_sigma_mu(algebra, v)) \
                + gwa_mul(algebra, u, apply_derivation(algebra, deriv, v))
            res.check(lhs == rhs,
                      lambda: "derivation %d sample %d" % (idx, n))
    return res


def suite_relations(ctx):
    res = SuiteResult("relations")
    spec = ctx.require_spec()
    rng = sampling.rng_for(ctx.seed)
    for n in range(min(ctx.samples, 25)):
        coeffs = sampling.random_f_coefficients(rng)
        pres = DownUpPresentation.from_coefficients(spec, coeffs)
        for name, residue in relation_residues(pres).items():
            res.check(not residue, lambda: "%s (sample %d)" % (name, n))
    return res


def suite_roundtrip(ctx):
    res = SuiteResult("roundtrip")
    algebra = ctx.algebra()
    rng = sampling.rng_for(ctx.seed)
    for n in range(ctx.samples):
        u = sampling.random_element(rng, with_denominator=True)
        text = str(u)
        back = parse_element(text, algebra)
        res.check(back == u and str(back) == text,
                  lambda: "sample %d: %s" % (n, text))
    return res


SUITES = {
    "field": (suite_field, ()),
    "params": (suite_params, ()),
    "phi": (suite_phi, ("spec",)),
    "assoc": (suite_assoc, ("spec", "f")),
    "sigma": (suite_sigma, ("spec", "f")),
    "oracle": (suite_oracle, ("spec", "f")),
    "conformal": (suite_conformal, ("spec",)),
    "indices": (suite_indices, ("spec",)),
    "leibniz": (suite_leibniz, ("spec", "f")),
    "relations": (suite_relations, ("spec",)),
    "roundtrip": (suite_roundtrip, ("spec", "f")),
}


def run_suites(names, ctx):
    if names == ["all"]:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError("unknown suite %r (have: %s)"
                             % (name, ", ".join(sorted(SUITES))))
        fn, _ = SUITES[name]
        results.append(fn(ctx))
    return results
