"""Grade-2 truth functions (coevents) over a finite outcome space, computed over GF(2).

Coevents are degree-at-most-2 polynomials in the containment maps.  The package
covers truth-table classification, the coevent algebra, projections on the
coevent space with the master observable, and preclusion analysis, together
with exhaustive brute-force checks of their properties at small sizes.
"""

from .coevent import Coevent, enumerate_coevents, from_table, interpolate, to_table
from .errors import AnhomError, CapacityError, NotACoeventError, NotIdempotentError, ParseError
from .events import Event, OutcomeSpace, ProductEvent
from .gf2 import Gf2Matrix, Gf2Vector
from .poset import ProjectionUniverse, lattice_search, verify_orthomodular
from .preclusion import CoeventSubspace, PrecludedFamily, duality_report, occurrence_query
from .projections import MasterObservable, Projection, master_projection
from .suites import run_suite
from .textio import ProblemSpec, format_coevent, parse_coevent, parse_problem, render_problem
from .truth import TruthTable, classify

__all__ = [
    "AnhomError", "CapacityError", "Coevent", "CoeventSubspace", "Event", "Gf2Matrix",
    "Gf2Vector", "MasterObservable", "NotACoeventError", "NotIdempotentError", "OutcomeSpace",
    "ParseError", "PrecludedFamily", "ProblemSpec", "ProductEvent", "Projection",
    "ProjectionUniverse", "TruthTable", "classify", "duality_report", "enumerate_coevents",
    "format_coevent", "from_table", "interpolate", "lattice_search", "master_projection",
    "occurrence_query", "parse_coevent", "parse_problem", "render_problem", "run_suite",
    "to_table", "verify_orthomodular",
]
