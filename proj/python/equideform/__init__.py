"""Covariant dimension counts for curves with automorphisms."""

import json as _json

from ._equideform import (
    EquideformError,
    FiniteGroup,
    GModule,
    __version__,
    catalog_names,
    rank_mod_p,
    run_job,
    smith_normal_form,
)
from . import _equideform as _core

__all__ = [
    "EquideformError",
    "FiniteGroup",
    "GModule",
    "__version__",
    "catalog_group",
    "catalog_names",
    "dim_im_alpha",
    "ordinary_report",
    "psi_report",
    "rank_mod_p",
    "run_job",
    "smith_normal_form",
    "validate_cover",
    "verify",
]


def _text(cover):
    return cover if isinstance(cover, str) else _json.dumps(cover)


def catalog_group(name, max_order=64):
    return FiniteGroup.from_spec(_json.dumps(name), max_order)


def psi_report(group, p, subgroup_generators):
    """Ranks of psi1 and psi2 for subgroups given by generator lists."""
    return _json.loads(_core._psi_report(group, p, subgroup_generators))


def dim_im_alpha(cover, convention="paper"):
    """Returns (value, nonspecial, diagnostics) for a cover document (dict or JSON text)."""
    return _core._dim_im_alpha(_text(cover), convention)


def ordinary_report(cover, convention="paper"):
    return _json.loads(_core._ordinary_report(_text(cover), convention))


def validate_cover(cover):
    """List of (code, message) pairs; empty when the cover is valid."""
    return _core._validate_cover(_text(cover))


def verify(scope="fast"):
    code, out, err = run_job("verify", scope=scope)
    report = _json.loads(out)
    return code, report["result"]
