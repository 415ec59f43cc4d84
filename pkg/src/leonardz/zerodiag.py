"""The zero diagonal space of a Leonard system.

Central objects: the 4x(d+1) moment matrix M built from the dual
eigenvalues and the diagonal intersection numbers, whose left null space
parameterizes the elements f0*I + f1*A* + f2*A + f3*A*A* with vanishing
projected diagonal; the boundary-product scalars (a_minus, a_plus); and
the companion matrices T and L = T*M used for the dependence criterion.

The kernel route (z_basis_kernel) is the authoritative computation; the
closed-form route (z_basis_closed, coefficients supplied by the analysis
tables) is an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import DependenceDetected, ZeroDiagCheckFailed


@dataclass
class ZCoefficients:
    """Coefficients of f0*I + f1*A_star + f2*A + f3*A*A_star."""

    f0: object
    f1: object
    f2: object
    f3: object

    def as_list(self):
        return [self.f0, self.f1, self.f2, self.f3]


@dataclass
class APMData:
    """Boundary products (a_i - a_0)(ts_i - ts_d) and (a_i - a_d)(ts_i - ts_0)."""

    a_minus: list
    a_plus: list


@dataclass
class ZSpaceReport:
    M: list
    L: list
    T: list
    rank_m: int
    dim_z: int
    coeff_basis: list
    matrix_basis: list


def compute_apm(a, theta_star):
    d = len(a) - 1
    a_minus = [(a[i] - a[0]) * (theta_star[i] - theta_star[d]) for i in range(d + 1)]
    a_plus = [(a[i] - a[d]) * (theta_star[i] - theta_star[0]) for i in range(d + 1)]
    return APMData(a_minus, a_plus)


def matrix_m(a, theta_star, ctx):
    """Rows: all-ones, theta_star, a, and the entrywise product a*theta_star."""
    one = ctx.one
    return [
        [one for _ in a],
        list(theta_star),
        list(a),
        [x * t for x, t in zip(a, theta_star)],
    ]


def matrix_t(a0, ad, ts0, tsd, ctx):
    zero, one = ctx.zero, ctx.one
    return [
        [one, zero, zero, zero],
        [zero, one, zero, zero],
        [a0 * tsd, -a0, -tsd, one],
        [ad * ts0, -ad, -ts0, one],
    ]


def matrix_l(apm, theta_star, ctx):
    one = ctx.one
    return [
        [one for _ in theta_star],
        list(theta_star),
        list(apm.a_minus),
        list(apm.a_plus),
    ]


def rank_exact(mtx):
    """Exact rank by pivoting Gaussian elimination."""
    return linalg.rank(mtx)


def z_dimension(rank_m):
    """Dimension of the zero diagonal space: 4 - rank(M)."""
    return 4 - rank_m


def has_zero_diagonal(x, estar):
    """Whether E*_i X E*_i vanishes for every i."""
    for e in estar:
        if not linalg.is_zero_matrix(linalg.mat_mul(linalg.mat_mul(e, x), e)):
            return False
    return True


def combination_matrix(coeffs, real):
    """The element f0*I + f1*A_star + f2*A + f3*(A @ A_star) in real's basis."""
    ctx = real.array.field
    n = real.dim
    out = linalg.mat_scale(coeffs.f2, real.A)
    for i in range(n):
        out[i][i] = out[i][i] + coeffs.f0
    out = linalg.mat_add(out, linalg.mat_scale(coeffs.f1, real.A_star))
    out = linalg.mat_add(
        out, linalg.mat_scale(coeffs.f3, linalg.mat_mul(real.A, real.A_star)))
    return out


def z_basis_kernel(m, real, estar):
    """Basis of the zero diagonal space from the left null space of M.

    Each kernel row becomes a matrix in real's basis; every matrix is
    re-verified to have zero diagonal against the supplied projections.
    """
    ctx = real.array.field
    out = []
    for row in linalg.left_nullspace(m, ctx):
        coeffs = ZCoefficients(*row)
        x = combination_matrix(coeffs, real)
        if not has_zero_diagonal(x, estar):
            raise ZeroDiagCheckFailed(
                f"kernel element {[str(c) for c in row]} fails the diagonal check")
        out.append((coeffs, x))
    return out


def z_basis_closed_dim2(real, a0):
    """Closed-form basis when the space is 2-dimensional: A - a0*I and A @ A_star - a0*A_star."""
    n = real.dim
    first = [row[:] for row in real.A]
    for i in range(n):
        first[i][i] = first[i][i] - a0
    second = linalg.mat_sub(linalg.mat_mul(real.A, real.A_star),
                            linalg.mat_scale(a0, real.A_star))
    return [first, second]


def boundary_products(real, a):
    """The pair (A - a0*I)(A_star - ts_d*I) and (A - ad*I)(A_star - ts_0*I)."""
    arr = real.array
    n = real.dim
    d = arr.d

    def shifted(mtx, c):
        out = [row[:] for row in mtx]
        for i in range(n):
            out[i][i] = out[i][i] - c
        return out

    p1 = linalg.mat_mul(shifted(real.A, a[0]), shifted(real.A_star, arr.theta_star[d]))
    p2 = linalg.mat_mul(shifted(real.A, a[d]), shifted(real.A_star, arr.theta_star[0]))
    return p1, p2


def z_basis_closed_dim1(real, a, u, v):
    """Closed-form generator u*P1 - v*P2 from a relation row u*a_minus = v*a_plus."""
    p1, p2 = boundary_products(real, a)
    return linalg.mat_sub(linalg.mat_scale(u, p1), linalg.mat_scale(v, p2))


def x_space_basis(real):
    """The five canonical generators I, A_star, A, A @ A_star, A_star @ A, with an independence certificate."""
    ctx = real.array.field
    n = real.dim
    mats = [
        linalg.identity(n, ctx),
        real.A_star,
        real.A,
        linalg.mat_mul(real.A, real.A_star),
        linalg.mat_mul(real.A_star, real.A),
    ]
    flat = [linalg.flatten(m) for m in mats]
    rk = linalg.rank(flat)
    if rk != 5:
        raise DependenceDetected(f"generators span only {rk} dimensions")
    return mats


def dependence_equivalences(apm):
    """The three equivalent nonzero-space criteria on (a_minus, a_plus).

    Returns (rank_le_1, all_products_equal, interior_products_equal); the
    three booleans must agree on every instance.
    """
    d = len(apm.a_minus) - 1
    rank_le_1 = linalg.rank([apm.a_minus[:], apm.a_plus[:]]) <= 1
    full = all(apm.a_minus[i] * apm.a_plus[j] == apm.a_plus[i] * apm.a_minus[j]
               for i in range(d + 1) for j in range(d + 1))
    interior = all(apm.a_minus[i] * apm.a_plus[j] == apm.a_plus[i] * apm.a_minus[j]
                   for i in range(1, d) for j in range(1, d))
    return rank_le_1, full, interior


def build_zspace_report(arr, a, real, estar, ctx=None):
    """Assemble M, T, L, ranks, and both Z bases for one instance."""
    ctx = ctx or arr.field
    d = arr.d
    m = matrix_m(a, arr.theta_star, ctx)
    t = matrix_t(a[0], a[d], arr.theta_star[0], arr.theta_star[d], ctx)
    l = matrix_l(compute_apm(a, arr.theta_star), arr.theta_star, ctx)
    rank_m = rank_exact(m)
    kernel = z_basis_kernel(m, real, estar)
    return ZSpaceReport(
        M=m, L=l, T=t,
        rank_m=rank_m,
        dim_z=z_dimension(rank_m),
        coeff_basis=[coeffs for coeffs, _ in kernel],
        matrix_basis=[x for _, x in kernel],
    )
