"""Exact cylindrical-decomposition solver for nonlinear real arithmetic.

The core pipeline: exact polynomial algebra (poly), real root isolation and
algebraic-point signs (realalg), projection operators with equation-aware
reduction (projection), stack lifting (lifting), and the orchestrating solver
with incremental constraint editing (engine).  The frontend modules (parser,
runner, bench) drive scripts; service exposes everything over HTTP and cli is
a thin client of that API.
"""

__version__ = "0.1.0"

from .engine import (  # noqa: F401
    BuildOptions,
    SolverState,
    Verdict,
    add_constraint,
    build,
    check_sat,
    decide,
    remove_constraint,
    true_cells,
)
from .formula import And, Atom, Formula, Not, Or  # noqa: F401
from .poly import Polynomial  # noqa: F401
from .realalg import AlgebraicNumber, SamplePoint  # noqa: F401
