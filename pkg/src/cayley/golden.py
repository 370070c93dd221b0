"""Loaders for the frozen golden tables shipped with the package.

The JSON files under ``data/`` pin every externally published value this
package re-derives: the coordinate expansions of the three calibration
forms, the two linear equation systems, the localized system on the 0123
chart, the eigenvalue tables, the fixed-point and singular-point lists, the
7x16 Jacobian at 0123, the singular-locus generators on the 0246 chart and
all 38 tangent-weight tables.  Checks recompute everything from scratch and
diff against these.
"""

from __future__ import annotations

import json
from importlib import resources

from .exactnum import GaussianRational


def _load(name: str):
    path = resources.files(__package__) / "data" / name
    return json.loads(path.read_text())


def load_forms() -> dict:
    """Golden coefficients of the degree-3 form, the degree-4 form and the
    seven components of the vector-valued 4-form, keyed by index strings."""
    return _load("forms.json")


def load_linear_systems() -> dict:
    """Golden coefficient tables of the seven defining linear functionals, in
    the standard basis and in the torus eigenbasis."""
    return _load("linear_systems.json")


def load_localized_0123() -> list:
    """Golden localized equations on the standard-basis 0123 chart: seven
    term lists ``[coeff, [variables...]]``."""
    return _load("localized_0123.json")


def load_eigen_tables() -> dict:
    """Golden basis weights (8 rows) and wedge-degree-4 weight classes
    (33 classes covering all 70 index sets)."""
    return _load("eigen_tables.json")


def load_fixed_points() -> dict:
    """Golden fixed-point membership: the 44 index sets on the variety, the
    six singular ones among them, and the two weight-zero exclusions."""
    return _load("fixed_points.json")


def load_jacobian_0123() -> dict:
    """Golden 7x16 Jacobian at the 0123 eigenbasis chart, bit-exact."""
    return _load("jacobian_0123.json")


def load_sigma_0246() -> dict:
    """Golden linear generators of the singular locus on the 0246 chart."""
    return _load("sigma_0246.json")


def load_tangent_tables() -> dict:
    """Golden tangent-weight tables: per smooth fixed point, twelve
    ``[weight, combination]`` generators plus the positive-weight count."""
    return _load("tangent_tables.json")


def report_schema() -> dict:
    return _load("report_schema.json")


def parse_combo(combo: dict) -> dict[str, GaussianRational]:
    """Decode a ``{"0124": "-1", ...}`` coefficient map."""
    return {key: GaussianRational.parse(val) for key, val in combo.items()}
