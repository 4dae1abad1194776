"""Determinant wavefunctions and their matrix-product construction.

Overlaps of off-shell Bethe states with configuration states (homogeneous
chain, x_1 < ... < x_N):

    <x|psi({v}_N)>  = prod_j v_j^(M-1) (alpha v_j^2 - 1)^-1
                      * det[ v_j^(2k) (alpha - v_j^-2)^(x_k) ] / prod_{j<k}(v_k^2 - v_j^2)

    <psi({u}_N)|x>  = prod_j (alpha u_j - 1/u_j)^M u_j^(2N-1)
                      * det[ u_j^(-2k) (alpha - u_j^-2)^(-x_k) ] / prod_{j<k}(u_j^2 - u_k^2)

Both are symmetric in the spectral parameters and, under
z_j = alpha - v_j^-2, are Grothendieck polynomials up to explicit factors.

The independent construction behind these formulas is a matrix product over
the 2^N auxiliary product space: the column-to-row transposed monodromy
splits into operators A_n, B_n, C_n obeying simple exchange relations, and

    <psi({u}_N)|x> = Tr[ A^(M-x_N) B A^(x_N - x_{N-1} - 1) ... B A^(x_1 - 1) P ],

P = |0^N><1^N| (the dual overlap uses C and Q = |1^N><0^N|).  Both routes
are implemented; their agreement is one of the package's master checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .confluent import det_ratio_columns, sign_pairs
from .linalg import Matrix, det
from .partitions import ParticleConfiguration
from .ratfunc import linear_power
from .scalars import eq, exact_div, is_inexact, is_zero

from math import comb


def _positions(x, M=None):
    if isinstance(x, ParticleConfiguration):
        return x.positions
    return tuple(x)


def wavefunction_det(x, v, alpha, M):
    """<x_1...x_N | psi({v}_N)> as a determinant; poles at v = 0, alpha v^2 = 1."""
    pos = _positions(x)
    v = list(v)
    n = len(v)
    if len(pos) != n:
        raise ValueError("configuration size must match the number of parameters")
    if n == 0:
        return 1
    pref = 1
    for vj in v:
        if is_zero(vj, 0) or is_zero(alpha * vj * vj - 1, 0):
            raise ZeroDivisionError("wavefunction pole at v = 0 or alpha v^2 = 1")
        pref = pref * vj ** (M - 1) * (alpha * vj * vj - 1) ** -1
    # entry v^(2k) (alpha - v^-2)^(x_k) = s^(k - x_k) (alpha s - 1)^(x_k), s = v^2
    cols = [linear_power(k - pos[k - 1], -1, alpha, pos[k - 1]) for k in range(1, n + 1)]
    return pref * det_ratio_columns(cols, [vj * vj for vj in v])


def dual_wavefunction_det(x, u, alpha, M):
    """<psi({u}_N) | x_1...x_N> as a determinant; also needs alpha != u^-2."""
    pos = _positions(x)
    u = list(u)
    n = len(u)
    if len(pos) != n:
        raise ValueError("configuration size must match the number of parameters")
    if n == 0:
        return 1
    pref = 1
    for uj in u:
        if is_zero(uj, 0) or is_zero(alpha * uj * uj - 1, 0):
            raise ZeroDivisionError("dual wavefunction pole at u = 0 or alpha = u^-2")
        pref = pref * (alpha * uj - uj ** -1) ** M * uj ** (2 * n - 1)
    cols = [linear_power(pos[k - 1] - k, -1, alpha, -pos[k - 1]) for k in range(1, n + 1)]
    return pref * sign_pairs(n) * det_ratio_columns(cols, [uj * uj for uj in u])


def step_overlap_value(u, alpha, M):
    """Closed form <psi({u}_N)|12...N> = alpha^(N(N-1)/2) prod u^(N-1) (alpha u - 1/u)^(M-N)."""
    n = len(u)
    out = alpha ** (n * (n - 1) // 2)
    for uj in u:
        out = out * uj ** (n - 1) * (alpha * uj - uj ** -1) ** (M - n)
    return out


def staircase_overlap_value(u, alpha, M):
    """Closed form for x_j = 2j-1: prod (alpha u - 1/u)^(M-2N+1) prod_{j<k} (alpha^2 u_j^2 u_k^2 - 1)."""
    n = len(u)
    out = 1
    for uj in u:
        out = out * (alpha * uj - uj ** -1) ** (M - 2 * n + 1)
    for j in range(n):
        for k in range(j + 1, n):
            out = out * (alpha ** 2 * u[j] ** 2 * u[k] ** 2 - 1)
    return out


@dataclass
class MatrixProductState:
    """Transposed-monodromy operators on the 2^n auxiliary product space.

    A, B, C, D are the plain-frame operators; ``a_diag`` is the diagonal of
    the conjugated A (frame G), and ``b_split``/``c_split`` decompose the
    conjugated B and C into the parts attached to each spectral parameter,
    classified by their exchange weight u_j/(alpha u_j - 1/u_j) against the
    diagonal A.
    """

    u: tuple
    alpha: object
    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix
    G: Matrix
    G_inv: Matrix
    a_diag: list
    b_split: dict = field(default_factory=dict)
    c_split: dict = field(default_factory=dict)
    h_list: list = field(default_factory=list)

    @property
    def n(self):
        return len(self.u)

    def b_script(self):
        return self.G_inv * self.B * self.G

    def c_script(self):
        return self.G_inv * self.C * self.G

    def a_script(self):
        dim = len(self.a_diag)
        return Matrix([[self.a_diag[i] if i == j else 0 for j in range(dim)] for i in range(dim)])


def _block2(tl, tr, bl, br):
    """Assemble a 2x2 block matrix (new auxiliary bit is the outer index)."""
    dim = tl.rows
    out = []
    for r in range(dim):
        out.append(list(tl.data[r]) + list(tr.data[r]))
    for r in range(dim):
        out.append(list(bl.data[r]) + list(br.data[r]))
    return Matrix(out)


def _split_by_weight(mat, a_diag, q_weights, conjugation="B"):
    """Split entries of ``mat`` by their exchange weight against diag(a_diag).

    For B-type operators the entry (r, c) belongs to parameter j when
    a_diag[c]/a_diag[r] equals q_j; for C-type when a_diag[r]/a_diag[c]
    does.  Unclassifiable nonzero entries mean the spectral parameters are
    degenerate.
    """
    dim = mat.rows
    split = {j: Matrix.zeros(dim, dim) for j in range(1, len(q_weights) + 1)}
    for r in range(dim):
        for c in range(dim):
            val = mat[r, c]
            if is_zero(val, 0 if not is_inexact(val) else 1e-14):
                continue
            ratio = a_diag[c] / a_diag[r] if conjugation == "B" else a_diag[r] / a_diag[c]
            for j, q in enumerate(q_weights, start=1):
                if eq(ratio, q, 1e-9):
                    split[j][r, c] = val
                    break
            else:
                raise ValueError("degenerate spectral parameters break the operator split")
    return split


def matrix_product_build(u, alpha) -> MatrixProductState:
    """Build A_n, B_n, C_n, D_n with the diagonalizing frame and split parts.

    Recursion (new auxiliary space outermost; dted = alpha t - 1/t):

        A_{n+1} = [[t A_n, B_n], [0, d A_n]]      B_{n+1} = [[0, 0], [A_n, alpha t B_n]]
        C_{n+1} = [[t C_n, D_n], [0, d C_n]]      D_{n+1} = [[0, 0], [C_n, alpha t D_n]]

    starting from A_1 = diag(u_1, alpha u_1 - 1/u_1), B_1 = |1><0|.
    """
    u = tuple(u)
    if not u:
        raise ValueError("need at least one spectral parameter")
    if len(u) > 6:
        raise ValueError("matrix product is a verification artifact, capped at n <= 6 "
                         "(2^n auxiliary dimension); use the determinants instead")
    for uj in u:
        if is_zero(uj, 0) or is_zero(alpha * uj * uj - 1, 0):
            raise ZeroDivisionError("matrix product needs u != 0 and alpha u^2 != 1")
    u1 = u[0]
    d1 = alpha * u1 - u1 ** -1
    a_mat = Matrix([[u1, 0], [0, d1]])
    b_mat = Matrix([[0, 0], [1, 0]])
    c_mat = Matrix([[0, 1], [0, 0]])
    d_mat = Matrix([[0, 0], [0, alpha * u1]])
    g_mat = Matrix.identity(2)
    g_inv = Matrix.identity(2)
    a_diag = [u1, d1]
    h_list = []
    q_weights = [uj / (alpha * uj - uj ** -1) for uj in u]
    for step in range(1, len(u)):
        t = u[step]
        dt = alpha * t - t ** -1
        dim = a_mat.rows
        # script-frame B of the current level, split by exchange weight
        b_script = g_inv * b_mat * g_mat
        split = _split_by_weight(b_script, a_diag, q_weights[:step], "B")
        h_mat = Matrix.zeros(dim, dim)
        for j in range(1, step + 1):
            uj = u[j - 1]
            coeff = (alpha * uj - uj ** -1) / (uj ** -1 * t - uj * t ** -1)
            h_mat = h_mat + split[j].scale(coeff)
        h_mat = Matrix([[exact_div(h_mat[r, c], a_diag[r]) for c in range(dim)]
                        for r in range(dim)])
        h_list.append(h_mat)
        zero = Matrix.zeros(dim, dim)
        a_new = _block2(a_mat.scale(t), b_mat, zero, a_mat.scale(dt))
        b_new = _block2(zero, zero, a_mat, b_mat.scale(alpha * t))
        c_new = _block2(c_mat.scale(t), d_mat, zero, c_mat.scale(dt))
        d_new = _block2(zero, zero, c_mat, d_mat.scale(alpha * t))
        g_new = _block2(g_mat, g_mat * h_mat, zero, g_mat)
        g_inv_new = _block2(g_inv, (-1) * (h_mat * g_inv), zero, g_inv)
        a_mat, b_mat, c_mat, d_mat = a_new, b_new, c_new, d_new
        g_mat, g_inv = g_new, g_inv_new
        a_diag = [t * x for x in a_diag] + [dt * x for x in a_diag]
    mps = MatrixProductState(u, alpha, a_mat, b_mat, c_mat, d_mat,
                             g_mat, g_inv, a_diag, h_list=h_list)
    mps.b_split = _split_by_weight(mps.b_script(), a_diag, q_weights, "B")
    mps.c_split = _split_by_weight(mps.c_script(), a_diag, q_weights, "C")
    return mps


def wavefunction_trace(x, u, alpha, M, mps: MatrixProductState = None, dual: bool = True):
    """Trace-formula evaluation of the overlap through the matrix product.

    dual=True gives <psi({u}_N)|x> (B-string against P = |0^N><1^N|),
    dual=False gives <x|psi({u}_N)> (C-string against Q = |1^N><0^N|).
    """
    pos = _positions(x)
    n = len(pos)
    if mps is None:
        mps = matrix_product_build(u, alpha)
    if mps.n != n:
        raise ValueError("matrix product state size must match the configuration")
    a_mat = mps.A
    x_mat = mps.B if dual else mps.C
    powers = [pos[0] - 1]
    for k in range(1, n):
        powers.append(pos[k] - pos[k - 1] - 1)
    powers.append(M - pos[-1])
    result = Matrix.identity(a_mat.rows)
    for k in range(n + 1):
        for _ in range(powers[k]):
            result = a_mat * result
        if k < n:
            result = x_mat * result
    top = 2 ** n - 1
    return result[top, 0] if dual else result[0, top]


def wavefunction_sum(v, alpha, M):
    """sum_x alpha^(MN - sum x_j) <x|psi({v}_N)> over increasing configurations."""
    v = list(v)
    n = len(v)
    rows = []
    for j in range(1, n + 1):
        row = []
        for vk in v:
            if j <= n - 1:
                val = 0
                for m in range(0, j):
                    val = val + (-1) ** m * alpha ** (M - m) * comb(M, m) * vk ** (-2 * (m - j + 1))
            else:
                val = 0
                for m in range(max(n - 1, 1), M + 1):
                    val = val - (-1) ** m * alpha ** (M - m) * comb(M, m) * vk ** (-2 * (m - n + 1))
            row.append(val)
        rows.append(row)
    pref = 1
    for vj in v:
        pref = pref * vj ** (M + 1)
    for j in range(n):
        for k in range(j + 1, n):
            pref = exact_div(pref, v[k] ** 2 - v[j] ** 2)
    return pref * det(Matrix(rows))


def dual_wavefunction_sum(u, alpha, M):
    """sum_x alpha^(sum x_j - N) <psi({u}_N)|x> over increasing configurations."""
    u = list(u)
    n = len(u)
    rows = []
    for j in range(1, n + 1):
        row = []
        for uk in u:
            if j == 1:
                val = 0
                for m in range(max(n - 1, 1), M + 1):
                    val = val - (-1) ** m * alpha ** (M - m) * comb(M, m) * uk ** (-2 * (m - n + 1))
            else:
                val = 0
                for m in range(0, n - j + 1):
                    val = val + (-1) ** m * alpha ** (M - m) * comb(M, m) * uk ** (-2 * (m + j - n))
            row.append(val)
        rows.append(row)
    pref = 1
    for uj in u:
        pref = pref * uj ** (M + 1)
    for j in range(n):
        for k in range(j + 1, n):
            pref = exact_div(pref, u[j] ** 2 - u[k] ** 2)
    return pref * det(Matrix(rows))
