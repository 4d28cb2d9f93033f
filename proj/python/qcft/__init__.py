"""Exact q-series, partition identities and conformal field theory checks."""

import json as _json

from ._qcft import *  # noqa: F401,F403
from ._qcft import QcftError, run_report

__all__ = [name for name in dir() if not name.startswith("_")]


def run(subcommand, order=None, exact_only=False):
    """Run a report subcommand and return the parsed list of check records."""
    kwargs = {"exact_only": exact_only}
    if order is not None:
        kwargs["order"] = order
    return _json.loads(run_report(subcommand, **kwargs))
