"""Global separation of the real roots of f(x) = 0 with educated quasi-step maps.

Newton and Halley iteration maps are filtered by two predicates (vertical
displacement and slope); the points where a predicate holds form plateaus
that each enclose one fixed point.  Composing the educated map refines
every plateau to its root.
"""
from .expression import ParseError, UnknownIdentifierError, format_expression, parse_expression
from .funcmodel import (FunctionModel, Interval, Jet2, eval_jet2, model_from_spec,
                        oscillating_model, polynomial_model, expression_model, pruitt_model)
from .itermaps import IterationMap, halley_eval, iterate_r, make_map, newton_eval
from .predicates import PredicateConfig, PredicateOutcome, eval_both, eval_p0, eval_p1
from .quasistep import (EducatedMap, RootSet, educated_eval, pruitt_step_map, resolution,
                        separation_bound)
from .sweep import (GridSpec, PredicateRun, RootReport, SeparationResult, SweepTable,
                    analyze, detect_runs, refine_run, separate, sweep_grid)
from .pruitt import MultiplicityTable, classify_multiplicity, sieve_primes, zero_set

__version__ = "0.1.0"
