"""Brute-force normalizer for free words on x, y, h, k.

Knows nothing about the closed-form product: it rewrites one adjacent
pair at a time until no rule applies, so it serves as ground truth for
the structured multiplication.  Rules: x, y pass h and k by single
powers of r, s (inverse powers for y), and the pairs xy, yx collapse to
the defining polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly
from .gwa import GwaElement
from .scalars import Scalar


@dataclass(frozen=True)
class FreeWord:
    coeff: Scalar
    letters: tuple


_LETTERS = ("x", "y", "h", "k")


def _is_redex(a, b):
    if a == "x":
        return b in ("y", "h", "k")
    if a == "y":
        return b in ("x", "h", "k")
    return False


def _find_redex(letters, strategy):
    span = range(len(letters) - 1)
    if strategy == "rightmost":
        span = reversed(span)
    elif strategy != "leftmost":
        raise ValueError("unknown strategy %r" % (strategy,))
    for t in span:
        if _is_redex(letters[t], letters[t + 1]):
            return t
    return None


def _rewrite(algebra, coeff, letters, t):
    spec = algebra.spec
    a, b = letters[t], letters[t + 1]
    head, tail = letters[:t], letters[t + 2:]
    if b in ("h", "k"):
        exp = spec.n1 if b == "h" else spec.d
        if a == "y":
            exp = -exp
        return [(coeff * Scalar.z_power(exp), head + (b, a) + tail)]
    poly = algebra.phi_a if a == "x" else algebra.a
    out = []
    for (i, j), c in poly.terms.items():
        out.append((coeff * c, head + ("h",) * i + ("k",) * j + tail))
    return out


def oracle_normalize(algebra, terms, strategy="leftmost", max_length=8):
    """Rewrite a combination of free words to a GwaElement.

    Accepts FreeWord instances or (coeff, letters) pairs.  Words longer
    than max_length are refused up front, keeping runs finite and small.
    """
    stack = []
    for term in terms:
        if isinstance(term, FreeWord):
            coeff, letters = term.coeff, term.letters
        else:
            coeff, letters = term
        coeff = coeff if isinstance(coeff, Scalar) else Scalar.from_rational(coeff)
        letters = tuple(letters)
        for ch in letters:
            if ch not in _LETTERS:
                raise ValueError("unknown letter %r" % (ch,))
        if len(letters) > max_length:
            raise ValueError("length bound exceeded")
        if coeff:
            stack.append((coeff, letters))

    acc = {}
    while stack:
        coeff, letters = stack.pop()
        t = _find_redex(letters, strategy)
        if t is not None:
            stack.extend(_rewrite(algebra, coeff, letters, t))
            continue
        # normal words are h,k powers followed by a run of x or of y
        i = sum(1 for ch in letters if ch == "h")
        j = sum(1 for ch in letters if ch == "k")
        m = sum(1 for ch in letters if ch == "x")
        n = sum(1 for ch in letters if ch == "y")
        assert m == 0 or n == 0
        w = m - n
        bucket = acc.setdefault(w, {})
        key = (i, j)
        prev = bucket.get(key)
        total = coeff if prev is None else prev + coeff
        if total:
            bucket[key] = total
        elif key in bucket:
            del bucket[key]
    return GwaElement({w: BiPoly(bucket) for w, bucket in acc.items()})


def free_expand(node):
    """Multiply out a syntax tree in the free algebra: no relations are
    applied, products only concatenate letters."""
    op = node[0]
    if op == "int":
        c = Scalar.from_rational(node[1])
        return {(): c} if c else {}
    if op == "z":
        return {(): Scalar.z_power(1)}
    if op == "gen":
        return {(node[1],): Scalar.from_rational(1)}
    if op == "pow":
        out = {(): Scalar.from_rational(1)}
        for _ in range(node[2]):
            out = _free_mul(out, free_expand(node[1]))
        return out
    if op == "neg":
        return {word: -c for word, c in free_expand(node[1]).items()}
    a = free_expand(node[1])
    b = free_expand(node[2])
    if op == "mul":
        return _free_mul(a, b)
    if op == "add":
        return _free_add(a, b)
    if op == "sub":
        return _free_add(a, {w: -c for w, c in b.items()})
    if op == "div":
        if any(word for word in b):
            raise ValueError("division by a non-scalar expression")
        divisor = b.get((), Scalar(()))
        inv = divisor.inverse()
        return {word: c * inv for word, c in a.items()}
    raise ValueError("bad node %r" % (op,))


def _free_add(a, b):
    out = dict(a)
    for word, c in b.items():
        v = out.get(word)
        v = c if v is None else v + c
        if v:
            out[word] = v
        elif word in out:
            del out[word]
    return out


def _free_mul(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            word = wa + wb
            c = ca * cb
            v = out.get(word)
            v = c if v is None else v + c
            if v:
                out[word] = v
            elif word in out:
                del out[word]
    return out


def oracle_normalize_text(algebra, text, strategy="leftmost", max_length=8):
    """Parse, expand freely, then rewrite to normal form."""
    from .expressions import parse_expression

    tree = parse_expression(text, "gwa")
    terms = [(c, word) for word, c in free_expand(tree).items()]
    return oracle_normalize(algebra, terms, strategy, max_length)
