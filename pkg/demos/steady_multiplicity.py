"""Degenerate fixed spaces: when the steady state is not unique.

The undriven lambda system at zero temperature keeps any mixture (and
any coherence) of its two lower levels forever: the generator's null
space is four-dimensional. The solver reports the multiplicity and a
spanning set of valid density matrices instead of silently picking one.
Any drive or finite temperature collapses the degeneracy.
"""

import numpy as np

from fewlevel import build_liouvillian, lambda_preset, steady_states

result = steady_states(build_liouvillian(lambda_preset(omega=0.0, temperature=0.0)))
print(f"undriven, T=0: null dimension = {result.null_dimension}")
for k, rho in enumerate(result.states):
    eigs = np.sort(np.linalg.eigvalsh(rho))
    print(f"  state {k}: diag = {np.real(np.diag(rho)).round(6)}, "
          f"eigenvalues = {eigs.round(6)}, residual = {result.residuals[k]:.1e}")

for omega, temperature in ((0.5, 0.0), (0.0, 0.1)):
    result = steady_states(
        build_liouvillian(lambda_preset(omega=omega, temperature=temperature)))
    print(f"omega={omega}, T={temperature}: null dimension = "
          f"{result.null_dimension}, populations = "
          f"{np.real(np.diag(result.state)).round(6)}")
