"""Wavefunctions as determinants, and their Grothendieck-polynomial form.

Three independent routes to the same overlap <x|psi({v}_N)>:

  1. brute force: apply B-operators to the vacuum on the sector basis;
  2. the N x N determinant formula;
  3. the 2^N-dimensional matrix-product trace.

Under z_j = alpha - v_j^-2, beta = -1/alpha the overlap equals
alpha^(N(N-1)/2) prod v^(M-1) G_lambda(z; beta).
"""

from fractions import Fraction as F

from fivevertex import (ModelParameters, bethe_state, config_to_partition,
                        grothendieck_eval, matrix_product_build, sector_basis,
                        wavefunction_det, wavefunction_trace)
from fivevertex.partitions import ParticleConfiguration

M, N = 5, 2
alpha = F(3, 4)
v = [F(3, 5), F(7, 4)]
params = ModelParameters(alpha=alpha, M=M)

ket = bethe_state(v, params)
mps = matrix_product_build(v, alpha)
print(f"M={M}, N={N}, alpha={alpha}, v={v}")
print(f"{'config':>10} {'oracle':>16} {'determinant':>16} {'matrix product':>16}")
for i, x in enumerate(sector_basis(M, N)):
    det_val = wavefunction_det(x, v, alpha, M)
    tr_val = wavefunction_trace(x, v, alpha, M, mps, dual=False)
    print(f"{str(x):>10} {str(ket[i]):>16} {str(det_val):>16} {str(tr_val):>16}")
    assert ket[i] == det_val == tr_val

# the Grothendieck dictionary
beta = -1 / alpha
z = [alpha - vj ** -2 for vj in v]
print("\ndictionary z = alpha - v^-2:", z, " beta =", beta)
for x in [(1, 3), (2, 5)]:
    lam = config_to_partition(ParticleConfiguration(x, M))
    prefactor = alpha ** (N * (N - 1) // 2) * v[0] ** (M - 1) * v[1] ** (M - 1)
    print(f"  x={x}: {lam.text()},  <x|psi> / prefactor = G_lambda:",
          wavefunction_det(x, v, alpha, M) == prefactor * grothendieck_eval(lam, z, beta))
