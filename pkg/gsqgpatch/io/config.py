"""Run configuration documents."""
import dataclasses
import json
import re
from typing import Optional, Tuple

import numpy

import gsqgpatch

DEFAULTS = {
    # Geometry.
    "mode": "corotating",
    "alpha": 1.0,
    "b1": 1.0,
    "b2": 1.0,
    "gamma1": 1.0,
    "gamma2": 1.0,
    "d": 10.0,
    # Continuation and Newton.
    "eps_schedule": [0.0],
    "order": 64,
    "grid_size": 512,
    "tol": 1e-10,
    "max_iters": 20,
    "damping": 1.0,
    "max_bisections": 4,
    # Quadrature.
    "scheme": "spectral",
    "near_width": numpy.pi/8,
    "near_nodes": 64,
    "far_nodes": None,
    "taylor_threshold": 1e-3,
    # Outputs.
    "output": "output",
    "branch_json": True,
    "boundary_csv": True,
    "diagnostics_json": True,
    "convergence_log": True,
}

ERROR_KEYS = (
    # Configuration key blamed for a settings error mentioning the name.
    ("scheme", "scheme"),
    ("near_width", "near_width"),
    ("near_nodes", "near_nodes"),
    ("taylor_threshold", "taylor_threshold"),
    ("eps_schedule", "eps_schedule"),
    ("damping", "damping"),
    ("tol_residual", "tol"),
    ("max_newton_iters", "max_iters"),
    ("max_bisections", "max_bisections"),
)


class ConfigError(ValueError):
    """Invalid run configuration; the message starts with its location."""


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    Validated run configuration.

    Every key of `DEFAULTS` is a field. Use `geometry`, `solver_config` and
    `quadrature_config` to obtain the library objects.

    """

    mode: str
    alpha: float
    b1: float
    b2: float
    gamma1: float
    gamma2: float
    d: float
    eps_schedule: Tuple[float, ...]
    order: int
    grid_size: int
    tol: float
    max_iters: int
    damping: float
    max_bisections: int
    scheme: str
    near_width: float
    near_nodes: int
    far_nodes: Optional[int]
    taylor_threshold: float
    output: str
    branch_json: bool
    boundary_csv: bool
    diagnostics_json: bool
    convergence_log: bool

    def geometry(self):
        """Pair geometry at ``eps = 0``."""
        return gsqgpatch.PairGeometry(
            alpha=self.alpha, b1=self.b1, b2=self.b2, gamma1=self.gamma1,
            gamma2=self.gamma2, d=self.d)

    def quadrature_config(self):
        """Quadrature settings."""
        return gsqgpatch.QuadratureConfig(
            scheme=self.scheme, near_width=self.near_width,
            near_nodes=self.near_nodes, far_nodes=self.far_nodes,
            taylor_threshold=self.taylor_threshold)

    def solver_config(self):
        """Newton and continuation settings."""
        return gsqgpatch.SolverConfig(
            tol_residual=self.tol, max_newton_iters=self.max_iters,
            eps_schedule=self.eps_schedule, damping=self.damping,
            order=self.order, grid_size=self.grid_size,
            quadrature=self.quadrature_config(),
            max_bisections=self.max_bisections)

    def to_dict(self):
        """Plain dictionary in the document layout."""
        values = dataclasses.asdict(self)
        values["eps_schedule"] = list(self.eps_schedule)
        return values


def _location(text, key, overrides):
    if key in overrides:
        return "command line"
    match = re.search(r'"%s"\s*:' % re.escape(key), text)
    return "line %d" % (1 if match is None else text.count("\n", 0, match.start())+1)


def _check_type(key, value):
    default = DEFAULTS[key]
    number = (isinstance(value, (int, float)) and not isinstance(value, bool))
    if isinstance(default, bool):
        valid = isinstance(value, bool)
    elif isinstance(default, float):
        valid = number
    elif isinstance(default, int):
        valid = isinstance(value, int) and not isinstance(value, bool)
    elif isinstance(default, list):
        valid = isinstance(value, list) and all(
            isinstance(item, (int, float)) and not isinstance(item, bool)
            for item in value)
    elif default is None:
        valid = value is None or (isinstance(value, int) and not isinstance(value, bool))
    else:
        valid = isinstance(value, str)
    return valid


def parse_config(text, overrides=None):
    """
    Parse and validate a run configuration document.

    The document is a flat JSON object whose keys are those of `DEFAULTS`;
    missing keys take their default. `overrides` replace document values,
    as command line flags do.

    Args:
        text (str):
            The document.
        overrides (Optional[Dict[str, Any]]):
            Values taking precedence over the document.

    Returns:
        (RunConfig):
            The validated configuration.

    Raises:
        ConfigError:
            With a ``line L:`` prefix locating the offending key, for syntax
            errors, unknown keys, wrong types and violated invariants.

    Examples:
        >>> config = gsqgpatch.parse_config('{"alpha": 1.5}')
        >>> config.alpha, config.order, config.eps_schedule
        (1.5, 64, (0.0,))
        >>> gsqgpatch.parse_config('{\\n  "b1": 1,\\n  "d": 1\\n}')
        Traceback (most recent call last):
            ...
        gsqgpatch.io.config.ConfigError: line 3: d > 2(b1+b2) required; found d=1, b1=1, b2=1

    """
    overrides = {} if overrides is None else dict(overrides)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("line %d: column %d: %s" % (err.lineno, err.colno, err.msg))
    if not isinstance(document, dict):
        raise ConfigError("line 1: a JSON object of settings is required")
    document.update(overrides)

    for key, value in document.items():
        if key not in DEFAULTS:
            raise ConfigError("%s: unknown key %r" % (
                _location(text, key, overrides), key))
        if not _check_type(key, value):
            raise ConfigError("%s: invalid value %r for %r" % (
                _location(text, key, overrides), value, key))
    values = dict(DEFAULTS, **document)
    values["eps_schedule"] = tuple(float(eps) for eps in values["eps_schedule"])
    for key in ("alpha", "b1", "b2", "gamma1", "gamma2", "d", "tol", "damping",
                "near_width", "taylor_threshold"):
        values[key] = float(values[key])
    config = RunConfig(**values)

    if config.mode not in gsqgpatch.MODES:
        raise ConfigError("%s: mode must be one of %s; found %r" % (
            _location(text, "mode", overrides), gsqgpatch.MODES, config.mode))
    try:
        gsqgpatch.check_geometry(config.geometry(), config.mode)
    except gsqgpatch.GeometryError as err:
        raise ConfigError("%s: %s" % (
            _location(text, err.field or "alpha", overrides), err))
    try:
        gsqgpatch.CollocationGrid(config.grid_size, config.order)
    except gsqgpatch.GridError as err:
        raise ConfigError("%s: %s" % (_location(text, "grid_size", overrides), err))
    try:
        config.solver_config()
    except ValueError as err:
        key = next((key for name, key in ERROR_KEYS if name in str(err)), "order")
        raise ConfigError("%s: %s" % (_location(text, key, overrides), err))
    return config


def load_config(path, overrides=None):
    """Read and parse a configuration file."""
    with open(path, encoding="utf-8") as src:
        return parse_config(src.read(), overrides)
