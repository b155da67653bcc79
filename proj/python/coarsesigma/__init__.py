"""Scale-N ends of locally finite metric presentations.

Computes the per-scale end classes of a pointed metric presentation, the
direct sequence they form under the scale bonding maps, direct limits,
and the cardinality obstruction that separates sequences whose limits
agree. Inputs and outputs are plain dicts mirroring the JSON formats of
the csigma CLI; exact rationals travel as "p/q" strings.
"""

import json as _json

from coarsesigma._core import (  # noqa: F401
    OracleGuardError,
    SpecError,
    ThinTruncationError,
    __version__,
)
from coarsesigma import _core


def _dump(value):
    return value if isinstance(value, str) else _json.dumps(value)


def _rational(value):
    return str(value)


def sigma_report(space, first, last, radius, inner=None, witness=None):
    """End classes for scales first..last: per-level counts, canonical
    path representatives, bonding maps, and the window-relative
    stability verdict."""
    raw = _core.sigma_report(
        _dump(space), first, last, _rational(radius),
        "" if inner is None else _rational(inner),
        "" if witness is None else _rational(witness),
    )
    return _json.loads(raw)


def ball(space, radius):
    """Point labels within `radius` of the basepoint, canonical order."""
    return _core.ball(_dump(space), _rational(radius))


def distance(space, a, b, radius):
    """Exact distance between enumerated points a and b, as 'p/q'."""
    return _core.distance(_dump(space), a, b, _rational(radius))


def direct_limit(sequence):
    return _json.loads(_core.direct_limit(_dump(sequence)))


def cardinality_obstruction(a, b):
    return _json.loads(_core.cardinality_obstruction(_dump(a), _dump(b)))


def check_equivalence(f, g, a, b):
    return _json.loads(_core.check_equivalence(_dump(f), _dump(g), _dump(a), _dump(b)))


def oracle_agreement(space, scale, radius, witness=None, walk_budget=2_000_000):
    """Cross-check the computed classes against the brute-force oracle.

    Raises OracleGuardError when the model is too large to enumerate."""
    raw = _core.oracle_agreement(
        _dump(space), scale, _rational(radius),
        "" if witness is None else _rational(witness), walk_budget,
    )
    return _json.loads(raw)


def run_cases(filter=""):
    """Run the built-in reference cases and return the full report."""
    return _json.loads(_core.run_cases(filter))
