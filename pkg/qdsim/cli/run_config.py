import json
import numpy as np
from dataclasses import asdict, dataclass, fields, replace
from ..analysis.scenario import Scenario, ScenarioMode
from ..channel.damping import DecoherenceParams
from ..core.errors import ConfigError, DomainError
from ..file_reading import read_tool
from ..file_reading.state_reader import load_state
from ..states.families import HorodeckiParams, IsotropicParams, StateFamily, build_state


@dataclass(frozen=True)
class RunConfig:
    """
    One CLI run.
    family: horodecki, rotated, isotropic or raw
    family_param: alpha (horodecki, rotated) or p (isotropic); unused for raw
    scenario: global, multilocal or collective
    gamma1, gamma2: multi-local and collective dephasing rates
    t_max: end of the Gamma t grid
    steps: number of grid points, both ends included
    raw_state_path: JSON state file, required for the raw family
    """
    family: str = 'horodecki'
    family_param: float = 4.3
    scenario: str = 'global'
    gamma1: float = 1.0
    gamma2: float = 1.0
    t_max: float = 0.5
    steps: int = 251
    raw_state_path: str | None = None

    def __post_init__(self):
        self.validate()

    def validate(self):
        try:
            family = StateFamily(self.family)
            ScenarioMode(self.scenario)
        except (ValueError, TypeError) as e:
            raise ConfigError(str(e))
        for name in ('family_param', 'gamma1', 'gamma2', 't_max'):
            _check_number(name, getattr(self, name))
        if not (isinstance(self.steps, (int, np.integer)) and not isinstance(self.steps, bool)
                and self.steps >= 2):
            raise ConfigError(f'steps must be an integer >= 2, got {self.steps!r}.')
        if not self.t_max > 0:
            raise ConfigError(f't_max must be positive, got {self.t_max}.')
        if not (self.gamma1 >= 0 and self.gamma2 >= 0):
            raise ConfigError('Dephasing rates must be non-negative.')
        if self.raw_state_path is not None and not isinstance(self.raw_state_path, str):
            raise ConfigError(f'raw_state_path must be a string, got {self.raw_state_path!r}.')
        try:
            if family in (StateFamily.HORODECKI, StateFamily.ROTATED):
                HorodeckiParams(self.family_param)
            elif family is StateFamily.ISOTROPIC:
                IsotropicParams(self.family_param)
        except DomainError as e:
            raise ConfigError(str(e))
        if family is StateFamily.RAW and not self.raw_state_path:
            raise ConfigError('The raw family needs a state file (--state).')
        return self

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f'Unknown configuration keys: {sorted(unknown)}.')
        return cls(**data)

    @classmethod
    def from_file(cls, filename) -> 'RunConfig':
        """
        Construct a run configuration from a JSON file whose keys are the field names.
        """
        try:
            data = json.loads(read_tool.read_text(filename))
        except json.JSONDecodeError as e:
            raise ConfigError(f'Invalid configuration file {filename}: {e}')
        if not isinstance(data, dict):
            raise ConfigError(f'Configuration file {filename} must hold a JSON object.')
        return cls.from_dict(data)

    def save(self, filename):
        read_tool.write_text(filename, json.dumps(asdict(self), indent=2) + '\n')
        return self

    def with_overrides(self, **overrides) -> 'RunConfig':
        " Copy with every non-None override applied "
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    @property
    def decoherence(self):
        return DecoherenceParams(self.gamma1, self.gamma2)

    def build_scenario(self) -> Scenario:
        return Scenario(ScenarioMode(self.scenario), self.decoherence)

    def build_state(self):
        if StateFamily(self.family) is StateFamily.RAW:
            return load_state(self.raw_state_path)
        return build_state(self.family, self.family_param)

    def grid(self):
        return np.linspace(0.0, self.t_max, self.steps)


def _check_number(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise ConfigError(f'{name} must be a number, got {value!r}.')
    if not np.isfinite(value):
        raise ConfigError(f'{name} must be finite, got {value!r}.')
