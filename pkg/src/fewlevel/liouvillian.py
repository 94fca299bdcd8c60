"""Assembly of the master-equation generator as a vectorized superoperator.

Vectorization is column-stacking throughout, so vec(A rho B) =
(B^T kron A) vec(rho) and the full right-hand side is one dense
d^2 x d^2 complex matrix acting on vec(rho). The coherent part and each
thermal dissipator are kept as separate slices because the per-channel
heat currents are traces against the individual slices.

The drive Hamiltonian enters the commutator; the bare level Hamiltonian
does not (interaction picture) and is carried along only for the
energy-flow observables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-9


def vec(mat):
    """Column-stack a matrix into a vector."""
    return np.asarray(mat).reshape(-1, order="F")


def unvec(v, dim):
    """Inverse of :func:`vec`."""
    return np.asarray(v).reshape(dim, dim, order="F")


def assert_density_matrix(rho, herm_tol=HERMITICITY_TOL, trace_tol=TRACE_TOL,
                          psd_tol=POSITIVITY_TOL):
    """Raise ValueError unless rho is Hermitian, unit-trace and positive.

    Tolerances: elementwise Hermiticity defect, |trace - 1|, and the
    allowed (small, negative) floor for the minimum eigenvalue.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > herm_tol:
        raise ValueError(f"density matrix not Hermitian (defect {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace deviates from 1 by {abs(tr - 1.0):.3e}")
    lo = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    if lo < -psd_tol:
        raise ValueError(f"density matrix not positive (min eigenvalue {lo:.3e})")


@dataclass(frozen=True)
class Liouvillian:
    """Vectorized generator with its coherent and dissipative slices.

    ``matrix`` equals ``coherent + sum(dissipators)`` exactly;
    ``dissipators`` is aligned with the transitions of the originating
    SystemSpec. ``h_sys``/``h_drive`` are the level and drive
    Hamiltonians used when it was built.
    """

    dim: int
    matrix: np.ndarray
    coherent: np.ndarray
    dissipators: tuple
    h_sys: np.ndarray
    h_drive: np.ndarray


def build_hamiltonians(spec):
    """Level Hamiltonian (diagonal) and drive Hamiltonian (real symmetric)."""
    d = spec.dim
    energies = np.array([lv.energy for lv in spec.levels], dtype=float)
    h_sys = np.diag(energies)
    h_drive = np.zeros((d, d))
    for dr in spec.drives:
        i, j = spec.index(dr.upper), spec.index(dr.lower)
        h_drive[i, j] += dr.rabi
        h_drive[j, i] += dr.rabi
    return h_sys, h_drive


def _jump_superoperator(c):
    """Vectorized form of rho -> c rho c+ - (c+c rho + rho c+c)/2."""
    d = c.shape[0]
    eye = np.eye(d)
    cdc = c.conj().T @ c
    return (np.kron(c.conj(), c)
            - 0.5 * (np.kron(eye, cdc) + np.kron(cdc.T, eye)))


def build_dissipator(spec, transition):
    """d^2 x d^2 matrix of one thermal channel (emission + absorption).

    Emission i->j runs at kappa (n+1), absorption j->i at kappa n, with n
    the thermal occupancy at the transition gap.
    """
    d = spec.dim
    i, j = spec.index(transition.upper), spec.index(transition.lower)
    n = spec.occupancy(transition)
    emit = np.zeros((d, d))
    emit[j, i] = 1.0
    absorb = emit.T.copy()
    out = transition.kappa * (n + 1.0) * _jump_superoperator(emit)
    if n > 0:
        out += transition.kappa * n * _jump_superoperator(absorb)
    return out.astype(complex)


def build_liouvillian(spec):
    """Assemble the full generator for a SystemSpec."""
    d = spec.dim
    h_sys, h_drive = build_hamiltonians(spec)
    eye = np.eye(d)
    coherent = -1j * (np.kron(eye, h_drive) - np.kron(h_drive.T, eye))
    dissipators = tuple(build_dissipator(spec, tr) for tr in spec.transitions)
    matrix = coherent.copy()
    for slab in dissipators:
        matrix += slab
    return Liouvillian(dim=d, matrix=matrix, coherent=coherent,
                       dissipators=dissipators, h_sys=h_sys, h_drive=h_drive)


def apply_rhs(liouvillian, rho):
    """Time derivative of rho under the generator."""
    rho = np.asarray(rho)
    d = liouvillian.dim
    if rho.shape != (d, d):
        raise ValueError(f"state shape {rho.shape} does not match dimension {d}")
    return unvec(liouvillian.matrix @ vec(rho), d)
