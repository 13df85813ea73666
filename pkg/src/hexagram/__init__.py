"""Exact-arithmetic toolkit for the enumerative geometry of Pascal's
hexagram over prime fields: how many six-point configurations on a
conic realise three prescribed Pascal lines."""

from .conic import (Conic, Hexad, ProjectiveLine, ProjectivePoint, chord,
                    hexad_ring, join, meet, pascal_coords, pascal_line,
                    pascal_line_symbolic, second_intersection, tau)
from .fields import GF, ExtElement, ExtField, FieldElement, Prime, Rational, ext_field
from .groebner import (ExtensionFamily, GroebnerBasis, Ideal, PointSolutions,
                       buchberger, eliminate, is_zero_dimensional,
                       minimal_polynomial, normal_form, quotient_dimension,
                       radical_zero_dim, rational_points, saturate)
from .labels import (Orbit, PascalLabel, PascalSymbol, Permutation,
                     all_labels, enumerate_orbits, label_to_symbol,
                     parse_triple, pointwise_stabilizer, setwise_stabilizer,
                     symbol_to_label, triple_str, zeta, zeta_inv)
from .pipeline import (IntersectionResult, RunConfig, SolutionSet,
                       TripleInstance, TrialRecord, brute_force_count,
                       build_ideal, intersection_number, parametrized_count,
                       random_instance, run_trial, solve_points)
from .polynomials import Polynomial, PolyRing, root_scan, squarefree_part, univ_gcd
from .table_data import TABLE_ENTRIES, known_colour, known_value
from .theorems import (CurveSpec, fiber_degree, kirkman_triple,
                       random_curve_spec, steiner_triple, verify_kirkman,
                       verify_steiner, verify_trivial_concurrency)

__version__ = "0.1.0"
