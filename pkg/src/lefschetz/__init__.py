"""p-local invariants behind the Lefschetz homomorphism of a finite group.

The package works with permutation groups small enough to enumerate.  It
computes Borel-Smith function lattices, Burnside ring unit groups and
their stable parts, and reduced coherent character tuple groups.  It then
combines them into surjectivity verdicts and kernel tests.
"""
from .borel_smith import (borel_smith_basis, borel_smith_lattice, build_constraints,
                          check_borel_smith, diagonal_basis, extend_from_cyclics,
                          trace_to_stable)
from .errors import (ExtensionError, GroupTooLarge, InvalidPermutation, LefschetzError, NoLift,
                     NotBorelSmith, NotNormal, ParseError, UnknownFamily)
from .families import FAMILIES, named_group, parse_family
from .perm import FiniteGroup, Permutation, Subgroup, group_from_cycles, group_from_generators
from .serialize import AnalysisReport, build_report, parse_group_file, parse_group_text
from .structure import SubgroupClassTable, p_subgroup_classes
from .superclass import (SignFunction, SuperclassFunction, SylowLevelFunction, dim_function,
                         is_G_stable, mark_function)
from .tuples import FiniteAbelianGroup, min_generators, reduced_tuple_group
from .units import lift_unit, p2_surjectivity, stable_unit_space, unit_space
from .verdict import (HMarkCandidate, Verdict, kernel_membership_cyclic, kernel_necessary,
                      lefschetz_verdict, period_cyclic)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
