"""Stationary states and closed-form benchmarks.

Steady states come from the null space of the vectorized generator via
singular-value decomposition, which copes with the degenerate case (a
multidimensional fixed-point space) that plain linear solves mishandle.
The closed-form results for the two three-level benchmark systems are
provided as independent oracles for the numerical paths, together with
the integrated work/heat consistency checks of the energy-avoiding
transition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .liouvillian import assert_density_matrix, unvec, vec

SVD_RELATIVE_TOL = 1e-10
RESIDUAL_LIMIT = 1e-10


@dataclass(frozen=True)
class SteadyResult:
    """Null-space summary: admissible states, dimension, residuals."""

    states: tuple
    null_dimension: int
    residuals: tuple

    @property
    def state(self):
        """The unique steady state; raises when the fixed space is degenerate."""
        if self.null_dimension != 1:
            raise ValueError(
                f"steady state is not unique (null dimension "
                f"{self.null_dimension})")
        return self.states[0]

    @property
    def residual(self):
        return max(self.residuals)


def _hermitian_basis(null_columns, dim):
    """Orthonormal Hermitian basis of a conjugation-closed matrix space."""
    candidates = []
    for col in null_columns.T:
        x = unvec(col, dim)
        candidates.append(0.5 * (x + x.conj().T))
        candidates.append(-0.5j * (x - x.conj().T))
    basis = []
    for cand in candidates:
        v = vec(cand)
        for b in basis:
            v = v - vec(b) * float(np.real(np.vdot(vec(b), v)))
        norm = float(np.linalg.norm(v))
        if norm > 1e-7:
            basis.append(unvec(v / norm, dim))
    return basis


def _shift_to_state(direction, anchor):
    """Mix a traceless-ish Hermitian direction with a state until positive."""
    lo = float(np.min(np.linalg.eigvalsh(direction)))
    c = max(1.0, 4.0 * abs(lo))
    for _ in range(80):
        candidate = direction + c * anchor
        trace = float(np.real(np.trace(candidate)))
        if trace > 1e-12:
            candidate = candidate / trace
            if float(np.min(np.linalg.eigvalsh(candidate))) >= -1e-12:
                return candidate
        c *= 2.0
    raise RuntimeError("could not build an admissible state from the null space")


def steady_states(liouvillian, svd_tol=SVD_RELATIVE_TOL):
    """All physically admissible stationary states of a generator.

    The null space of the d^2 x d^2 matrix is found by SVD with a
    relative singular-value threshold. A one-dimensional null space
    yields the unique state. A degenerate space yields its dimension and
    a spanning set of valid density matrices built from an orthogonal
    Hermitian basis of the space.
    """
    d = liouvillian.dim
    _, svals, vh = np.linalg.svd(liouvillian.matrix)
    null_dim = int(np.sum(svals < svd_tol * svals[0]))
    if null_dim == 0:
        raise RuntimeError("generator has no null vector; not trace-preserving?")
    null_columns = vh[d * d - null_dim:].conj().T

    basis = _hermitian_basis(null_columns, d)
    if len(basis) != null_dim:
        raise RuntimeError(
            f"Hermitian null basis has rank {len(basis)}, expected {null_dim}")

    # projection of the identity onto the fixed space is positive here
    anchor = sum(float(np.real(np.trace(b))) * b for b in basis)
    anchor_trace = float(np.real(np.trace(anchor)))
    if anchor_trace <= 1e-12:
        raise RuntimeError("no unit-trace direction in the null space")
    anchor = 0.5 * (anchor + anchor.conj().T) / anchor_trace

    if null_dim == 1:
        states = [anchor]
    else:
        a_vec = vec(anchor)
        a_unit = a_vec / np.linalg.norm(a_vec)
        rest = []
        for b in basis:
            v = vec(b) - a_unit * float(np.real(np.vdot(a_unit, vec(b))))
            norm = float(np.linalg.norm(v))
            if norm > 1e-7:
                rest.append(unvec(v / norm, d))
        states = [anchor] + [_shift_to_state(b, anchor) for b in rest[:null_dim - 1]]

    residuals = []
    for rho in states:
        assert_density_matrix(rho)
        residuals.append(float(np.max(np.abs(liouvillian.matrix @ vec(rho)))))
    result = SteadyResult(states=tuple(states), null_dimension=null_dim,
                          residuals=tuple(residuals))
    if result.residual > RESIDUAL_LIMIT:
        raise RuntimeError(
            f"steady-state residual {result.residual:.3e} exceeds "
            f"{RESIDUAL_LIMIT:.0e}")
    return result


def gibbs_state(spec, temperature):
    """Thermal equilibrium state of the bare level Hamiltonian.

    At zero temperature this is the projector onto the lowest level,
    which must be non-degenerate.
    """
    if temperature < 0:
        raise ValueError(f"temperature must be nonnegative, got {temperature}")
    energies = np.array([lv.energy for lv in spec.levels])
    d = spec.dim
    if temperature == 0:
        order = np.argsort(energies)
        if energies[order[1]] == energies[order[0]]:
            raise ValueError(
                "zero-temperature Gibbs state undefined: lowest level degenerate")
        rho = np.zeros((d, d), dtype=complex)
        rho[order[0], order[0]] = 1.0
        return rho
    weights = np.exp(-(energies - energies.min()) / temperature)
    return np.diag(weights / weights.sum()).astype(complex)


# ---------------------------------------------------------------------------
# Closed-form benchmarks for the three-level systems
# ---------------------------------------------------------------------------

def lambda_power_closed_form(omega, n_ea, n_eb, kappa=1.0, e_ea=1.0):
    """Stationary absorbed power of the energy-avoiding three-level system.

    Exact rational function of the drive coupling and the two thermal
    occupancies (the level energies enter the dynamics only through the
    occupancies). Requires a finite drive.
    """
    if omega <= 0:
        raise ValueError(f"closed form requires a positive drive, got {omega}")
    if n_ea < 0 or n_eb < 0:
        raise ValueError("occupancies must be nonnegative")
    num = 4.0 * kappa * omega**2 * n_eb * e_ea
    den = (4.0 * omega**2
           + 2.0 * (kappa**2 + 6.0 * omega**2) * n_eb
           + kappa**2 * n_eb**2
           + 2.0 * kappa**2 * n_ea**2 * (1.0 + 3.0 * n_eb)
           + kappa**2 * n_ea * (2.0 + 3.0 * n_eb * (3.0 + n_eb)))
    return num / den


def lambda_power_low_t(omega, n_ea, n_eb, kappa=1.0, e_ea=1.0):
    """Second-order low-temperature expansion of the stationary power."""
    if omega <= 0:
        raise ValueError(f"expansion requires a positive drive, got {omega}")
    return (e_ea * kappa * n_eb
            - (3.0 * kappa * e_ea + kappa**3 * e_ea / (2.0 * omega**2)) * n_eb**2
            - kappa**3 * e_ea * n_ea * n_eb / (2.0 * omega**2))


def v_steady_closed_form(omega, kappa=1.0, e_ag=1.0):
    """Zero-temperature steady state of the energy-seeking three-level system.

    Returns (rho_aa, rho_ag, power): the driven-level population, the
    complex ground-excited coherence, and the stationary absorbed power.
    """
    if omega < 0:
        raise ValueError(f"drive coupling must be nonnegative, got {omega}")
    den = kappa**2 + 8.0 * omega**2
    rho_aa = 4.0 * omega**2 / den
    rho_ag = -2j * kappa * omega / den
    power = e_ag * 4.0 * kappa * omega**2 / den
    return rho_aa, rho_ag, power


def lambda_work_heat_relations(trajectory):
    """Consistency checks tying the final population to total work and heat.

    For the energy-avoiding system at zero temperature, started in the
    lowest level and run to steady state, the final population of the
    intermediate level must equal W / (2 E_ea) and |Q| / (2 E_ea - E_ba)
    (lowest level pinned at zero energy). Returns the two absolute
    deviations.
    """
    spec = trajectory.spec
    labels = [lv.label for lv in spec.levels]
    if labels != ["a", "b", "e"]:
        raise ValueError(
            f"work/heat relations apply to the a/b/e three-level system, "
            f"got levels {labels}")
    if any(tr.temperature != 0 for tr in spec.transitions):
        raise ValueError("work/heat relations require zero bath temperature")
    first_rho = trajectory.samples[0][1]
    if abs(first_rho[0, 0] - 1.0) > 1e-9:
        raise ValueError("work/heat relations require the lowest level "
                         "as initial state")
    if trajectory.termination != "steady_detected":
        raise ValueError("trajectory did not reach steady state; "
                         "increase t_max or loosen steady_eps")
    e_ea = spec.gap("e", "a")
    e_ba = spec.gap("b", "a")
    final = trajectory.final_state
    sample = trajectory.final_energetics
    rho_bb = float(np.real(final[1, 1]))
    w_check = abs(rho_bb - sample.work_accum / (2.0 * e_ea))
    q_check = abs(rho_bb - abs(sample.heat_accum_total) / (2.0 * e_ea - e_ba))
    return w_check, q_check
