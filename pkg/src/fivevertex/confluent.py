"""Confluent determinant ratios.

Evaluates

    lim  det_N[ Phi(u_j, v_k) ] / prod_{j<k} (u_k - u_j)

as groups of u-points collide: a group of r coincident points t contributes
the derivative rows Phi(t, .), Phi'(t, .), ..., Phi^{(r-1)}(t, .)/(r-1)! and
the within-group Vandermonde factors cancel, leaving the across-group factor
prod_{g<h} (t_h - t_g)^{r_g r_h}.  With all points distinct this reduces to
a plain determinant ratio.

Coincidence is decided by exact equality for exact scalars and by an
absolute tolerance (default 1e-12) for complex ones.
"""

from __future__ import annotations

from math import factorial

from .linalg import Matrix, det
from .ratfunc import RatFunc
from .scalars import COINCIDENCE_TOL, exact_div, is_inexact, is_zero


def group_points(points, tol: float = COINCIDENCE_TOL):
    """Group coincident points by first occurrence; returns [(value, count)]."""
    groups = []
    for p in points:
        for i, (q, cnt) in enumerate(groups):
            zero_tol = tol if (is_inexact(p) or is_inexact(q)) else 0
            if is_zero(p - q, zero_tol):
                groups[i] = (q, cnt + 1)
                break
        else:
            groups.append((p, 1))
    return groups


def confluent_det_ratio(phi, u_points, v_points, u_derivative=None,
                        tol: float = COINCIDENCE_TOL):
    """lim det[phi(u_j, v_k)] / prod_{j<k}(u_k - u_j) with coincident u's.

    ``phi(u, v)`` evaluates the matrix entry; ``u_derivative(order, u, v)``
    must supply its order-th u-derivative (order >= 1) whenever u-points
    coincide (symbolic for exact scalars, caller-supplied closed forms
    otherwise).  The value is invariant under permutations of ``u_points``.
    """
    n = len(u_points)
    if len(v_points) != n:
        raise ValueError("need as many v-points as u-points")
    if n == 0:
        return 1
    groups = group_points(u_points, tol)
    if len(groups) == n:
        mat = Matrix([[phi(u, v) for v in v_points] for u in u_points])
        vandermonde = 1
        for k in range(n):
            for j in range(k):
                vandermonde = vandermonde * (u_points[k] - u_points[j])
        return exact_div(det(mat), vandermonde)
    if u_derivative is None:
        raise ValueError("coincident u-points need u-derivatives of phi")
    rows = []
    for t, count in groups:
        for order in range(count):
            if order == 0:
                rows.append([phi(t, v) for v in v_points])
            else:
                rows.append([exact_div(u_derivative(order, t, v), factorial(order))
                             for v in v_points])
    cross = 1
    for h in range(len(groups)):
        th, rh = groups[h]
        for g in range(h):
            tg, rg = groups[g]
            cross = cross * (th - tg) ** (rg * rh)
    return exact_div(det(Matrix(rows)), cross)


def det_ratio_columns(columns, points, tol: float = COINCIDENCE_TOL):
    """det[columns[k](points[j])] / prod_{j<k}(points[k] - points[j]).

    ``columns`` are RatFunc objects in the row variable; coincident points
    are routed through the confluent path with exact derivatives.
    """
    cols = [c if isinstance(c, RatFunc) else RatFunc(c) for c in columns]

    def phi(u, k):
        return cols[k](u, tol)

    def dphi(order, u, k):
        return cols[k].nth_derivative(order)(u, tol)

    return confluent_det_ratio(phi, list(points), list(range(len(cols))), dphi, tol)


def sign_pairs(n: int) -> int:
    """(-1)^(n(n-1)/2): converts prod_{j<k}(p_k - p_j) to prod_{j<k}(p_j - p_k)."""
    return -1 if (n * (n - 1) // 2) % 2 else 1
