"""Time evolution under the Lindblad generator.

The integrator is an embedded adaptive Runge-Kutta 5(4) pair
(Dormand-Prince coefficients) with PI step-size control. The state
vector is the vectorized density matrix augmented with the work
accumulator and one heat accumulator per thermal channel, so the
accumulated work and heat are integrated at the same accuracy as the
state itself. Because power and currents are linear in rho, the
augmented system is a single linear ODE and each stage costs one
matrix-vector product.

The drive switches on at t = 0: the undriven generator defines the
initial condition and the nominally flat t < 0 segment of the output;
the driven generator takes over with an exact restart at t = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .energetics import sample_energetics
from .liouvillian import build_liouvillian, unvec, vec
from . import steady

TRACE_DRIFT_LIMIT = 1e-9
POSITIVITY_LIMIT = 1e-9

# Dormand-Prince 5(4) tableau
_STAGE_TIMES = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_COUPLINGS = [
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
_WEIGHTS = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784,
                     11 / 84, 0.0])
_ERROR_WEIGHTS = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920,
                           -17253 / 339200, 22 / 525, -1 / 40])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
# PI controller exponents for a 4th-order error estimate
_ALPHA = 0.7 / 5
_BETA = 0.4 / 5


class IntegrationError(RuntimeError):
    """Integration failed; ``time`` carries the offending instant."""

    def __init__(self, message, time):
        super().__init__(f"{message} (t = {time:.6g})")
        self.time = time


@dataclass(frozen=True)
class RunProtocol:
    """How to run one evolution.

    ``initial_state`` is one of the strings "gibbs" or "undriven_steady",
    or an explicit density matrix. ``steady_eps = 0`` disables steady
    detection. The pre-window only affects reporting: the initial state
    is emitted at times in [-pre_window, 0) to show the undriven
    baseline.
    """

    pre_window: float = 2.0
    t_max: float = 200.0
    sample_interval: float = 0.05
    rtol: float = 1e-8
    atol: float = 1e-10
    steady_eps: float = 1e-10
    initial_state: object = "gibbs"

    def __post_init__(self):
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if not self.sample_interval > 0:
            raise ValueError(
                f"sample_interval must be positive, got {self.sample_interval}")
        for name in ("rtol", "atol"):
            value = getattr(self, name)
            if not 0 < value < 1e-2:
                raise ValueError(f"{name} must lie in (0, 1e-2), got {value}")
        if self.steady_eps < 0:
            raise ValueError(f"steady_eps must be nonnegative, got {self.steady_eps}")
        if self.pre_window < 0:
            raise ValueError(f"pre_window must be nonnegative, got {self.pre_window}")
        if isinstance(self.initial_state, str):
            if self.initial_state not in ("gibbs", "undriven_steady"):
                raise ValueError(
                    f"unknown initial_state mode {self.initial_state!r}")
        else:
            object.__setattr__(self, "initial_state",
                               np.array(self.initial_state, dtype=complex))


@dataclass
class Trajectory:
    """Time-ordered (time, state, energetics) samples plus run metadata."""

    spec: object
    protocol: RunProtocol
    samples: list = field(default_factory=list)
    termination: str = "reached_t_max"

    @property
    def times(self):
        return np.array([t for t, _, _ in self.samples])

    @property
    def final_state(self):
        return self.samples[-1][1]

    @property
    def final_energetics(self):
        return self.samples[-1][2]

    def states(self):
        return [rho for _, rho, _ in self.samples]

    def energetics(self):
        return [e for _, _, e in self.samples]


def initial_state(spec, protocol):
    """Resolve the protocol's initial-state request to a density matrix."""
    requested = protocol.initial_state
    if isinstance(requested, np.ndarray):
        from .liouvillian import assert_density_matrix
        assert_density_matrix(requested)
        return requested.copy()
    if requested == "gibbs":
        temp = spec.single_temperature()
        if temp is None:
            raise ValueError(
                "gibbs initial state needs a single shared bath temperature; "
                "use initial_state='undriven_steady' for unequal baths")
        return steady.gibbs_state(spec, temp)
    # undriven_steady
    result = steady.steady_states(build_liouvillian(spec.without_drives()))
    if result.null_dimension > 1:
        raise ValueError(
            f"undriven steady state is not unique (null dimension "
            f"{result.null_dimension}); supply an explicit initial state")
    return result.states[0]


def propagate_exact(liouvillian, rho0, t):
    """Evolve by the exact matrix exponential (validation oracle).

    Not used by :func:`evolve`; kept as the independent reference path.
    """
    if t < 0:
        raise ValueError(f"propagation time must be nonnegative, got {t}")
    return unvec(expm(liouvillian.matrix * t) @ vec(rho0), liouvillian.dim)


def _augmented_generator(spec, liouvillian):
    """Linear generator for (vec rho, work, heat per channel)."""
    d2 = liouvillian.dim ** 2
    n_tr = len(spec.transitions)
    m = np.zeros((d2 + 1 + n_tr, d2 + 1 + n_tr), dtype=complex)
    m[:d2, :d2] = liouvillian.matrix
    hvec = vec(liouvillian.h_sys).conj()
    m[d2, :d2] = hvec @ liouvillian.coherent
    for k, slab in enumerate(liouvillian.dissipators):
        m[d2 + 1 + k, :d2] = hvec @ slab
    return m


def _check_state(rho, t):
    tr_drift = abs(np.trace(rho).real - 1.0) + abs(np.trace(rho).imag)
    if tr_drift > TRACE_DRIFT_LIMIT:
        raise IntegrationError(f"trace drifted by {tr_drift:.3e}", t)
    lo = float(np.min(np.linalg.eigvalsh(rho)))
    if lo < -POSITIVITY_LIMIT:
        raise IntegrationError(f"state lost positivity (min eig {lo:.3e})", t)


def evolve(spec, protocol=None):
    """Integrate the master equation with the t = 0 switch-on protocol.

    Returns a :class:`Trajectory` sampled at the protocol cadence; the
    run stops early with termination "steady_detected" once the max-norm
    of d rho/dt falls below ``protocol.steady_eps``.
    """
    if protocol is None:
        protocol = RunProtocol()
    d = spec.dim
    d2 = d * d

    spec_off = spec.without_drives()
    liou_on = build_liouvillian(spec)
    liou_off = build_liouvillian(spec_off)
    rho0 = initial_state(spec, protocol)

    traj = Trajectory(spec=spec, protocol=protocol)
    dt = protocol.sample_interval

    # t < 0 reporting: the undriven state is stationary by construction
    n_pre = int(math.ceil(protocol.pre_window / dt - 1e-9))
    zero_heat = {tr.pair: 0.0 for tr in spec.transitions}
    for k in range(n_pre):
        t = (k - n_pre) * dt
        traj.samples.append((t, rho0.copy(), sample_energetics(
            spec_off, liou_off, rho0, time=t, work=0.0,
            heat_by_transition=zero_heat)))

    gen = _augmented_generator(spec, liou_on)

    def rhs(y):
        return gen @ y

    y = np.zeros(d2 + 1 + len(spec.transitions), dtype=complex)
    y[:d2] = vec(rho0)

    def record(t, y):
        rho = unvec(y[:d2], d)
        heat = {tr.pair: float(y[d2 + 1 + k].real)
                for k, tr in enumerate(spec.transitions)}
        traj.samples.append((t, rho, sample_energetics(
            spec, liou_on, rho, time=t, work=float(y[d2].real),
            heat_by_transition=heat)))

    record(0.0, y)

    t = 0.0
    h = min(dt, 1e-2)
    err_prev = 1.0
    k_stages = np.empty((7, y.size), dtype=complex)
    steady_now = False

    while t < protocol.t_max - 1e-12:
        t_next_sample = min(protocol.t_max, (len(traj.samples) - n_pre) * dt)
        while t < t_next_sample - 1e-12:
            h = min(h, t_next_sample - t)
            if h < 1e-14 * max(1.0, t):
                raise IntegrationError("step size underflow", t)

            k_stages[0] = rhs(y)
            for s in range(1, 6):
                y_stage = y + h * (_COUPLINGS[s - 1] @ k_stages[:s])
                k_stages[s] = rhs(y_stage)
            y_new = y + h * (_COUPLINGS[5] @ k_stages[:6])
            k_stages[6] = rhs(y_new)
            err_vec = h * (_ERROR_WEIGHTS @ k_stages)

            scale = protocol.atol + protocol.rtol * np.maximum(np.abs(y),
                                                               np.abs(y_new))
            err = math.sqrt(float(np.mean(np.abs(err_vec / scale) ** 2)))

            if err > 1.0:
                h *= max(_MIN_FACTOR, _SAFETY * err ** (-0.2))
                continue

            t += h
            y = y_new
            # re-impose exact Hermiticity; the generator preserves it
            # analytically, so this only sheds rounding noise
            rho = unvec(y[:d2], d)
            rho = 0.5 * (rho + rho.conj().T)
            y[:d2] = vec(rho)
            _check_state(rho, t)

            if protocol.steady_eps > 0:
                if float(np.max(np.abs(k_stages[6][:d2]))) < protocol.steady_eps:
                    steady_now = True

            if err == 0.0:
                factor = _MAX_FACTOR
            else:
                factor = min(_MAX_FACTOR, max(
                    _MIN_FACTOR,
                    _SAFETY * err ** (-_ALPHA) * err_prev ** _BETA))
            err_prev = max(err, 1e-16)
            h *= factor

            if steady_now:
                break
        if steady_now:
            if abs(t - t_next_sample) > 1e-12:
                record(t, y)
            else:
                record(t_next_sample, y)
            traj.termination = "steady_detected"
            break
        record(t_next_sample, y)
        t = t_next_sample
    return traj
