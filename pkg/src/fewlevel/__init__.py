"""Driven-dissipative few-level quantum systems.

Lindblad dynamics, absorbed power and heat currents, accumulated
work/heat, and nonequilibrium steady states for systems of up to 16
levels, with preset builders for the three benchmark configurations.
"""

__version__ = "0.1.0"

from .model import (
    DriveSpec,
    LevelSpec,
    SpecError,
    SystemSpec,
    TransitionSpec,
    bose_occupancy,
    diamond_preset,
    lambda_preset,
    spec_from_dict,
    spec_to_dict,
    v_preset,
)
from .liouvillian import (
    Liouvillian,
    apply_rhs,
    assert_density_matrix,
    build_dissipator,
    build_hamiltonians,
    build_liouvillian,
    unvec,
    vec,
)
from .energetics import (
    EnergeticsSample,
    energy,
    gamma,
    heat_currents,
    power,
    sample_energetics,
)
from .dynamics import (
    IntegrationError,
    RunProtocol,
    Trajectory,
    evolve,
    initial_state,
    propagate_exact,
)
from .steady import (
    SteadyResult,
    gibbs_state,
    lambda_power_closed_form,
    lambda_power_low_t,
    lambda_work_heat_relations,
    steady_states,
    v_steady_closed_form,
)

__all__ = [
    "DriveSpec", "LevelSpec", "SpecError", "SystemSpec", "TransitionSpec",
    "bose_occupancy", "diamond_preset", "lambda_preset", "v_preset",
    "spec_from_dict", "spec_to_dict",
    "Liouvillian", "apply_rhs", "assert_density_matrix", "build_dissipator",
    "build_hamiltonians", "build_liouvillian", "unvec", "vec",
    "EnergeticsSample", "energy", "gamma", "heat_currents", "power",
    "sample_energetics",
    "IntegrationError", "RunProtocol", "Trajectory", "evolve",
    "initial_state", "propagate_exact",
    "SteadyResult", "gibbs_state", "lambda_power_closed_form",
    "lambda_power_low_t", "lambda_work_heat_relations", "steady_states",
    "v_steady_closed_form",
]
