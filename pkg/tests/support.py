"""Shared helpers: independent oracles the tests check the library against."""

from fractions import Fraction

from downup import (BiPoly, DownUpPresentation, Scalar, apply_derivation,
                    apply_sigma_mu, gwa_algebra, gwa_mul, validate_param_spec)

ZERO = Scalar(())
ONE = Scalar.from_rational(1)


def std_spec(d=1, n1=3, n2=2):
    return validate_param_spec(d, n1, n2)


def std_algebra(spec=None, f_coeffs=(0, 1)):
    spec = spec or std_spec()
    pres = DownUpPresentation.from_coefficients(spec, list(f_coeffs))
    return gwa_algebra(pres)


def leibniz_holds(algebra, deriv, u, v):
    lhs = apply_derivation(algebra, deriv, gwa_mul(algebra, u, v))
    rhs = gwa_mul(algebra, apply_derivation(algebra, deriv, u),
                  apply_sigma_mu(algebra, v)) \
        + gwa_mul(algebra, u, apply_derivation(algebra, deriv, v))
    return lhs == rhs


def enumerate_indices(b1, b2, bound=1000):
    """Brute-force membership from the defining conditions, by rational
    arithmetic only: I from b2 + (1-t)b1, J from b2 - t*b1 + 1."""
    b1, b2 = Fraction(b1), Fraction(b2)
    i_hits, j_hits = [], []
    for t in range(bound + 1):
        vi = b2 + (1 - t) * b1
        if vi.denominator == 1 and vi >= 0:
            i_hits.append(t)
        vj = b2 - t * b1 + 1
        if vj.denominator == 1 and vj >= 0:
            j_hits.append(t)
    return i_hits, j_hits


def gaussian_solvable(columns, rhs):
    """Whether rhs is a Scalar-linear combination of the given columns.

    Plain Gaussian elimination over the scalar field on the augmented
    matrix; independent of any structure in the columns.
    """
    rows = len(rhs)
    aug = [[col[r] for col in columns] + [rhs[r]] for r in range(rows)]
    ncols = len(columns)
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, rows) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        inv = aug[pivot_row][col].inverse()
        aug[pivot_row] = [c * inv for c in aug[pivot_row]]
        for r in range(rows):
            if r != pivot_row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
    # inconsistent iff some zero row has nonzero augment
    for r in range(pivot_row, rows):
        if any(aug[r][:ncols]):
            continue
        if aug[r][ncols]:
            return False
    return True


def inner_system_solvable(spec, c0):
    """Set up c0 = mu^{-1} p - phi(p) as a linear system over supp(c0)
    and decide feasibility by elimination."""
    from downup import apply_phi_power

    support = sorted(c0.terms)
    columns = []
    for key in support:
        basis = BiPoly.monomial(*key, ONE)
        image = basis * Scalar.z_power(spec.n2) - apply_phi_power(spec, basis, 1)
        columns.append([image.terms.get(k, ZERO) for k in support])
    rhs = [c0.terms.get(k, ZERO) for k in support]
    return gaussian_solvable(columns, rhs)
