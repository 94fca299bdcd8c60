"""Energy-flow observables of a driven, dissipative few-level system.

Absorbed power is the unitary contribution to dE/dt and is evaluated two
ways on every call (trace against the commutator, and the per-drive
coherence form); heat currents are the non-unitary contribution,
evaluated from the per-channel generator slices and cross-checked
against the population form. The two routes must agree to near machine
precision or something is inconsistent, so disagreement raises.

Sign convention: a positive heat current means energy flowing from that
bath into the system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .liouvillian import build_hamiltonians, vec, unvec

CROSS_CHECK_TOL = 1e-12


def energy(spec, rho):
    """Mean level energy Tr(H rho)."""
    energies = np.array([lv.energy for lv in spec.levels])
    return float(np.real(np.sum(energies * np.diag(rho))))


def power(spec, rho):
    """Absorbed power and its per-drive decomposition.

    Returns ``(total, by_drive)`` where ``by_drive`` maps the drive's
    (upper, lower) label pair to its contribution
    gap * rabi * i(rho_ij - rho_ji). The independently computed trace
    form must agree with the sum within ``CROSS_CHECK_TOL``.
    """
    rho = np.asarray(rho)
    by_drive = {}
    for dr in spec.drives:
        i, j = spec.index(dr.upper), spec.index(dr.lower)
        gap = spec.gap(dr.upper, dr.lower)
        by_drive[dr.pair] = float(np.real(
            gap * dr.rabi * 1j * (rho[i, j] - rho[j, i])))
    total = sum(by_drive.values())

    h_sys, h_drive = build_hamiltonians(spec)
    commutator = h_drive @ rho - rho @ h_drive
    trace_form = -1j * np.trace(h_sys @ commutator)
    scale = max(1.0, abs(total))
    if abs(trace_form.imag) > CROSS_CHECK_TOL * scale:
        raise AssertionError(
            f"power trace form has imaginary residue {trace_form.imag:.3e}")
    if abs(trace_form.real - total) > CROSS_CHECK_TOL * scale:
        raise AssertionError(
            f"power cross-check failed: trace form {trace_form.real} vs "
            f"coherence form {total}")
    return total, by_drive


def gamma(spec, transition, rho):
    """Broken-detailed-balance measure of one thermal channel.

    kappa * [(1+n) rho_ii - n rho_jj]; zero exactly when the two
    populations satisfy local detailed balance at the channel's own
    temperature.
    """
    rho = np.asarray(rho)
    i, j = spec.index(transition.upper), spec.index(transition.lower)
    n = spec.occupancy(transition)
    return float(np.real(
        transition.kappa * ((1.0 + n) * rho[i, i] - n * rho[j, j])))


def heat_currents(spec, liouvillian, rho):
    """Per-channel heat currents, their sum, and optional bath grouping.

    Each current is Tr(H_sys applied-slice(rho)), evaluated from the
    generator slice the integrator uses, and cross-checked against
    -gap * gamma. Returns ``(by_transition, total, by_group)``;
    ``by_group`` is None unless the spec defines bath groups.
    """
    rho = np.asarray(rho)
    v = vec(rho)
    hvec = vec(liouvillian.h_sys).conj()
    by_transition = {}
    for tr, slab in zip(spec.transitions, liouvillian.dissipators):
        current = float(np.real(hvec @ (slab @ v)))
        gap = spec.gap(tr.upper, tr.lower)
        closed_form = -gap * gamma(spec, tr, rho)
        scale = max(1.0, abs(current))
        if abs(current - closed_form) > CROSS_CHECK_TOL * scale:
            raise AssertionError(
                f"heat-current cross-check failed on {tr.pair}: slice form "
                f"{current} vs population form {closed_form}")
        by_transition[tr.pair] = current
    total = sum(by_transition.values())

    by_group = None
    if spec.bath_groups is not None:
        by_group = {
            name: sum(by_transition[spec.transitions[i].pair] for i in members)
            for name, members in spec.bath_groups.items()
        }
    return by_transition, total, by_group


@dataclass(frozen=True)
class EnergeticsSample:
    """All energy-flow observables at one instant of a trajectory."""

    time: float
    power_total: float
    power_by_drive: dict
    current_by_transition: dict
    gamma_by_transition: dict
    current_total: float
    group_currents: dict | None
    energy: float
    work_accum: float
    heat_accum_total: float
    heat_accum_by_transition: dict


def sample_energetics(spec, liouvillian, rho, time=0.0, work=0.0,
                      heat_by_transition=None):
    """Bundle every observable at one time point into an EnergeticsSample.

    ``work`` and ``heat_by_transition`` are the externally integrated
    accumulators; they are carried through, not recomputed here.
    """
    p_total, p_by_drive = power(spec, rho)
    j_by_tr, j_total, j_by_group = heat_currents(spec, liouvillian, rho)
    gammas = {tr.pair: gamma(spec, tr, rho) for tr in spec.transitions}
    if heat_by_transition is None:
        heat_by_transition = {tr.pair: 0.0 for tr in spec.transitions}
    return EnergeticsSample(
        time=float(time),
        power_total=p_total,
        power_by_drive=p_by_drive,
        current_by_transition=j_by_tr,
        gamma_by_transition=gammas,
        current_total=j_total,
        group_currents=j_by_group,
        energy=energy(spec, rho),
        work_accum=float(work),
        heat_accum_total=float(sum(heat_by_transition.values())),
        heat_accum_by_transition=dict(heat_by_transition),
    )
