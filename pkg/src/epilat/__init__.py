"""Tools for epigroup varieties: unary-semigroup terms, finite
epigroups, variety word problems, finite lattices with special-element
profiles, first-order lattice formulas, and equational deduction."""

from .terms import (Identity, Letter, ParseError, Product, PseudoInverse,
                    Term, classify_identity, content, format_term,
                    k_sigma_is_variety, mk_product, occurrences, omega,
                    parse_identity, parse_term, substitute, word)
from .epigroups import (FiniteEpigroup, builtin, builtin_names,
                        classify_epigroup, direct_product, eval_term,
                        from_cayley, from_table, parse_cayley_file, satisfies)
from .varieties import (VarietyId, basis, contains, contains_atom, decide,
                        degree, family_meet, generator, normal_form,
                        oracle_check, parse_variety, theorem_status,
                        variety_equal)
from .lattice import (FiniteLattice, LatticeError, enumerate_lattices,
                      is_special, lattice_from_covers, lattice_from_leq,
                      lattice_props, neutral_subdirect_check,
                      parse_lattice_file, special_profile, special_witness,
                      to_dot)
from .formulas import (defined_set, dualize, fo_eval, parse_formula,
                       special_formula)
from .sublattice import (UnresolvableOrderError, VarietyNode, build_LI,
                         build_sublattice, expected_LI, label_isomorphic)
from .deduction import (Theory, named_theory, one_step, match_instance,
                        parse_deduction_file, search_deduction, theory,
                        verify_deduction)
from .suites import SUITE_NAMES, SuiteReport, run_suite

__version__ = "0.1.0"
