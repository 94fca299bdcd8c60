"""Declarative model of a driven, dissipative few-level quantum system.

A system is a list of labeled energy levels, a list of thermal decay
channels (each attached to a bath at its own temperature), and a list of
resonant coherent drives. The three benchmark configurations used
throughout the test suite are provided as presets: a three-level system
driven on its large gap (``lambda_preset``, energy-avoiding), a
three-level system driven from the ground state (``v_preset``,
energy-seeking), and a four-level diamond that can be driven either way
and split between two baths (``diamond_preset``).

Units: hbar = k_B = 1, rates in units of the reference decay rate,
energies in units of the reference gap (the large gap of each preset),
temperatures in reference-gap / k_B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

MAX_LEVELS = 16


class SpecError(ValueError):
    """Raised for an inconsistent or malformed system description."""


def bose_occupancy(gap, temperature):
    """Mean excitation number of a bath mode at energy ``gap``.

    Evaluates 1/(exp(gap/T) - 1) in the overflow-safe form
    exp(-x)/(1 - exp(-x)). Zero temperature returns exactly 0.0.

    Parameters
    ----------
    gap : float
        Transition energy, must be positive.
    temperature : float
        Bath temperature, must be nonnegative.
    """
    if gap <= 0:
        raise SpecError(f"transition gap must be positive, got {gap}")
    if temperature < 0:
        raise SpecError(f"temperature must be nonnegative, got {temperature}")
    if temperature == 0:
        return 0.0
    x = gap / temperature
    return math.exp(-x) / (-math.expm1(-x))


@dataclass(frozen=True)
class LevelSpec:
    """One energy eigenstate: a short label and its energy."""

    label: str
    energy: float


@dataclass(frozen=True)
class TransitionSpec:
    """A thermal decay channel between two levels.

    ``kappa`` is the spontaneous-emission rate; the attached bath is
    identified by ``bath`` and sits at ``temperature``. The thermal
    occupancy at the transition gap is derived, not stored.
    """

    upper: str
    lower: str
    kappa: float
    bath: str
    temperature: float

    @property
    def pair(self):
        return (self.upper, self.lower)


@dataclass(frozen=True)
class DriveSpec:
    """A resonant coherent drive on one level pair with coupling ``rabi``."""

    upper: str
    lower: str
    rabi: float

    @property
    def pair(self):
        return (self.upper, self.lower)


@dataclass(frozen=True)
class SystemSpec:
    """Full model definition: levels, thermal transitions, drives.

    ``bath_groups`` optionally maps a bath label to the tuple of
    transition indices it aggregates, used to report grouped heat
    currents (e.g. left/right environments of the diamond system).
    """

    levels: tuple = ()
    transitions: tuple = ()
    drives: tuple = ()
    bath_groups: dict | None = None

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "drives", tuple(self.drives))
        if self.bath_groups is not None:
            groups = {str(k): tuple(int(i) for i in v)
                      for k, v in self.bath_groups.items()}
            object.__setattr__(self, "bath_groups", groups)
        self._validate()

    def _validate(self):
        if not 2 <= len(self.levels) <= MAX_LEVELS:
            raise SpecError(
                f"need between 2 and {MAX_LEVELS} levels, got {len(self.levels)}")
        labels = [lv.label for lv in self.levels]
        if len(set(labels)) != len(labels):
            raise SpecError(f"level labels must be unique, got {labels}")
        for lv in self.levels:
            if not math.isfinite(lv.energy):
                raise SpecError(f"level {lv.label!r} has non-finite energy")
        index = {lb: k for k, lb in enumerate(labels)}

        seen_pairs = set()
        for k, tr in enumerate(self.transitions):
            for lb in (tr.upper, tr.lower):
                if lb not in index:
                    raise SpecError(f"transitions[{k}] references unknown level {lb!r}")
            if self.energy_of(tr.upper) <= self.energy_of(tr.lower):
                raise SpecError(
                    f"transitions[{k}] ({tr.upper}->{tr.lower}): upper level must "
                    f"lie strictly above lower level")
            if tr.kappa < 0:
                raise SpecError(f"transitions[{k}] has negative rate {tr.kappa}")
            if tr.temperature < 0:
                raise SpecError(
                    f"transitions[{k}] has negative temperature {tr.temperature}")
            key = frozenset(tr.pair)
            if key in seen_pairs:
                raise SpecError(f"duplicate transition on pair {tr.pair}")
            seen_pairs.add(key)

        seen_pairs = set()
        for k, dr in enumerate(self.drives):
            for lb in (dr.upper, dr.lower):
                if lb not in index:
                    raise SpecError(f"drives[{k}] references unknown level {lb!r}")
            if dr.upper == dr.lower:
                raise SpecError(f"drives[{k}] must connect two distinct levels")
            if dr.rabi < 0:
                raise SpecError(f"drives[{k}] has negative coupling {dr.rabi}")
            key = frozenset(dr.pair)
            if key in seen_pairs:
                raise SpecError(f"duplicate drive on pair {dr.pair}")
            seen_pairs.add(key)

        if self.bath_groups is not None:
            for name, members in self.bath_groups.items():
                for i in members:
                    if not 0 <= i < len(self.transitions):
                        raise SpecError(
                            f"bath_groups[{name!r}] references transition index {i}, "
                            f"but only {len(self.transitions)} transitions exist")

    # -- lookups -------------------------------------------------------

    @property
    def dim(self):
        return len(self.levels)

    def index(self, label):
        for k, lv in enumerate(self.levels):
            if lv.label == label:
                return k
        raise SpecError(f"unknown level label {label!r}")

    def energy_of(self, label):
        return self.levels[self.index(label)].energy

    def gap(self, upper, lower):
        return self.energy_of(upper) - self.energy_of(lower)

    def occupancy(self, transition):
        """Thermal occupancy n at the transition's gap and temperature."""
        return bose_occupancy(self.gap(transition.upper, transition.lower),
                              transition.temperature)

    def single_temperature(self):
        """The shared bath temperature, or None if baths disagree."""
        temps = {tr.temperature for tr in self.transitions}
        if len(temps) == 1:
            return temps.pop()
        return None

    def coherence_pairs(self):
        """Level pairs carrying a transition or a drive, transitions first."""
        pairs = [tr.pair for tr in self.transitions]
        for dr in self.drives:
            if dr.pair not in pairs and (dr.lower, dr.upper) not in pairs:
                pairs.append(dr.pair)
        return pairs

    # -- derived variants ----------------------------------------------

    def without_drives(self):
        return replace(self, drives=())

    def with_rabi(self, rabi):
        """Copy with every drive coupling set to ``rabi`` (0 removes them)."""
        if not self.drives:
            raise SpecError("system has no drives to override")
        if rabi == 0:
            return replace(self, drives=())
        return replace(self, drives=tuple(replace(d, rabi=float(rabi))
                                          for d in self.drives))

    def with_temperatures(self, by_bath=None, everywhere=None):
        """Copy with bath temperatures overridden.

        ``everywhere`` sets all transitions; ``by_bath`` maps bath label
        to temperature and wins over ``everywhere`` for its members.
        """
        by_bath = dict(by_bath or {})
        for name in by_bath:
            if not any(tr.bath == name for tr in self.transitions):
                raise SpecError(f"no transitions attached to bath {name!r}")
        new = []
        for tr in self.transitions:
            if tr.bath in by_bath:
                new.append(replace(tr, temperature=float(by_bath[tr.bath])))
            elif everywhere is not None:
                new.append(replace(tr, temperature=float(everywhere)))
            else:
                new.append(tr)
        return replace(self, transitions=tuple(new))


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

def lambda_preset(omega=0.5, temperature=0.0):
    """Three-level energy-avoiding configuration.

    Levels a < b << e with the two upper gaps differing by 1% (E_eb/E_ea
    = 0.99); both decay channels leave e at unit rate into a common bath;
    the drive couples a and e. With ``omega=0`` the drive is omitted.
    """
    if omega < 0:
        raise SpecError(f"drive coupling must be nonnegative, got {omega}")
    drives = (DriveSpec("e", "a", float(omega)),) if omega > 0 else ()
    return SystemSpec(
        levels=(LevelSpec("a", 0.0), LevelSpec("b", 0.01), LevelSpec("e", 1.0)),
        transitions=(
            TransitionSpec("e", "a", 1.0, "env", float(temperature)),
            TransitionSpec("e", "b", 1.0, "env", float(temperature)),
        ),
        drives=drives,
    )


def v_preset(omega=0.5, temperature=0.0):
    """Three-level energy-seeking configuration.

    Levels g << b < a with the two gaps differing by 1% (E_bg/E_ag =
    0.99); both upper levels decay to g at unit rate; the drive couples
    g and a.
    """
    if omega < 0:
        raise SpecError(f"drive coupling must be nonnegative, got {omega}")
    drives = (DriveSpec("a", "g", float(omega)),) if omega > 0 else ()
    return SystemSpec(
        levels=(LevelSpec("g", 0.0), LevelSpec("b", 0.99), LevelSpec("a", 1.0)),
        transitions=(
            TransitionSpec("a", "g", 1.0, "env", float(temperature)),
            TransitionSpec("b", "g", 1.0, "env", float(temperature)),
        ),
        drives=drives,
    )


def diamond_preset(mode, omega=0.5, t_left=0.5, t_right=0.5):
    """Four-level diamond split between a left and a right bath.

    Levels g << a < b << e with gaps (ag, bg, eb) = (0.9, 1.1, 0.8) in
    units of the ea gap. The left bath couples the g-a-e ladder, the
    right bath the g-b-e ladder. ``mode='seek'`` drives g-a,
    ``mode='avoid'`` drives a-e.
    """
    if mode not in ("avoid", "seek"):
        raise SpecError(f"mode must be 'avoid' or 'seek', got {mode!r}")
    if omega < 0:
        raise SpecError(f"drive coupling must be nonnegative, got {omega}")
    if omega == 0:
        drives = ()
    elif mode == "seek":
        drives = (DriveSpec("a", "g", float(omega)),)
    else:
        drives = (DriveSpec("e", "a", float(omega)),)
    return SystemSpec(
        levels=(LevelSpec("g", 0.0), LevelSpec("a", 0.9),
                LevelSpec("b", 1.1), LevelSpec("e", 1.9)),
        transitions=(
            TransitionSpec("e", "a", 1.0, "L", float(t_left)),
            TransitionSpec("a", "g", 1.0, "L", float(t_left)),
            TransitionSpec("e", "b", 1.0, "R", float(t_right)),
            TransitionSpec("b", "g", 1.0, "R", float(t_right)),
        ),
        drives=drives,
        bath_groups={"L": (0, 1), "R": (2, 3)},
    )


# ---------------------------------------------------------------------------
# JSON system-description schema
# ---------------------------------------------------------------------------

def spec_to_dict(spec):
    """Serialize a SystemSpec to the plain-dict JSON schema."""
    doc = {
        "levels": [{"label": lv.label, "energy": lv.energy} for lv in spec.levels],
        "transitions": [
            {"upper": tr.upper, "lower": tr.lower, "kappa": tr.kappa,
             "bath": tr.bath, "temperature": tr.temperature}
            for tr in spec.transitions
        ],
        "drives": [
            {"upper": dr.upper, "lower": dr.lower, "rabi": dr.rabi}
            for dr in spec.drives
        ],
    }
    if spec.bath_groups is not None:
        doc["bath_groups"] = {k: list(v) for k, v in spec.bath_groups.items()}
    return doc


def _need(item, key, kind, where):
    if not isinstance(item, dict):
        raise SpecError(f"{where}: expected an object, got {type(item).__name__}")
    if key not in item:
        raise SpecError(f"{where}.{key}: missing required field")
    value = item[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SpecError(f"{where}.{key}: expected a number, got {value!r}")
        return float(value)
    if not isinstance(value, kind):
        raise SpecError(f"{where}.{key}: expected {kind.__name__}, got {value!r}")
    return value


def spec_from_dict(data):
    """Build a SystemSpec from the JSON schema, with field diagnostics."""
    if not isinstance(data, dict):
        raise SpecError(f"top level: expected an object, got {type(data).__name__}")
    unknown = set(data) - {"levels", "transitions", "drives", "bath_groups"}
    if unknown:
        raise SpecError(f"top level: unknown fields {sorted(unknown)}")
    for key in ("levels", "transitions"):
        if key not in data:
            raise SpecError(f"top level: missing required field {key!r}")
        if not isinstance(data[key], list):
            raise SpecError(f"{key}: expected a list")
    if "drives" in data and not isinstance(data["drives"], list):
        raise SpecError("drives: expected a list")

    levels = tuple(
        LevelSpec(_need(item, "label", str, f"levels[{k}]"),
                  _need(item, "energy", float, f"levels[{k}]"))
        for k, item in enumerate(data["levels"]))
    transitions = tuple(
        TransitionSpec(_need(item, "upper", str, f"transitions[{k}]"),
                       _need(item, "lower", str, f"transitions[{k}]"),
                       _need(item, "kappa", float, f"transitions[{k}]"),
                       _need(item, "bath", str, f"transitions[{k}]"),
                       _need(item, "temperature", float, f"transitions[{k}]"))
        for k, item in enumerate(data["transitions"]))
    drives = tuple(
        DriveSpec(_need(item, "upper", str, f"drives[{k}]"),
                  _need(item, "lower", str, f"drives[{k}]"),
                  _need(item, "rabi", float, f"drives[{k}]"))
        for k, item in enumerate(data.get("drives", [])))

    groups = data.get("bath_groups")
    if groups is not None:
        if not isinstance(groups, dict):
            raise SpecError("bath_groups: expected an object")
        for name, members in groups.items():
            if (not isinstance(members, list)
                    or any(isinstance(i, bool) or not isinstance(i, int)
                           for i in members)):
                raise SpecError(
                    f"bath_groups[{name!r}]: expected a list of transition indices")

    return SystemSpec(levels=levels, transitions=transitions,
                      drives=drives, bath_groups=groups)
