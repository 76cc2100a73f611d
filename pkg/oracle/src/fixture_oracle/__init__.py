"""Reference-solution generator for the joint graph-inference solver.

Solves small instances of the joint estimation program with CVXPY and
emits fixture JSON files that the main package's test suite replays.
Everything here is intentionally independent of the main package: the two
sides share only the on-disk JSON schema.
"""

from .containers import matrix_from_json, matrix_to_json
from .objective import evaluate_objective
from .model import oracle_solve
from .prox_ref import oracle_prox

__version__ = "0.1.0"
