"""Subset sums in finite abelian groups."""

from fractions import Fraction

from . import _core
from ._core import (
    Group,
    __version__,
    abelian_groups,
    arithmetic_progression,
    claims,
    critical_number,
    enumerate_subsets,
    hp_representation,
    is_aperiodic,
    is_faithful,
    is_super_faithful,
    is_vosper,
    k_wedge,
    lam,
    period,
    run_cli,
    sigma,
    sigma_star,
    subset,
    sumset,
)


def _fraction(text):
    return None if text is None else Fraction(text)


def bound_value(claim, group, set):
    """Exact right-hand side of a closed-form claim."""
    return Fraction(_core.bound_value(claim, group, set))


def check(claim, group, set, **aux):
    """Claim report as a dict; rhs and slack are Fractions or None."""
    report = _core.check(claim, group, set, **aux)
    report["rhs"] = _fraction(report["rhs"])
    report["slack"] = _fraction(report["slack"])
    return report


def fuzz_conjecture(groups, threads=1):
    """Conjecture check over zero-free S with aperiodic subset sums."""
    verdict = _core.fuzz_conjecture([Group(g) if isinstance(g, str) else g for g in groups], threads)
    verdict["min_slack"] = _fraction(verdict["min_slack"])
    verdict["min_slack_by_size"] = {k: Fraction(v) for k, v in verdict["min_slack_by_size"].items()}
    return verdict


__all__ = [
    "Group",
    "__version__",
    "abelian_groups",
    "arithmetic_progression",
    "bound_value",
    "check",
    "claims",
    "critical_number",
    "enumerate_subsets",
    "fuzz_conjecture",
    "hp_representation",
    "is_aperiodic",
    "is_faithful",
    "is_super_faithful",
    "is_vosper",
    "k_wedge",
    "lam",
    "period",
    "run_cli",
    "sigma",
    "sigma_star",
    "subset",
    "sumset",
]
