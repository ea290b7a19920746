"""Avoidable and saturated sets in finite groups, the integers and the naturals.

A subset ``U`` of a group is avoidable when the group can be split into two
parts so that no element of ``U`` is a product of two distinct elements from
the same part.  Saturated sets are the maximal avoidable sets.
"""

from .abelian import (
    AbelianShape,
    ConjectureReport,
    ParityForm,
    Unsupported,
    abelian_groups_of_order,
    abelian_max_avoidable,
    abelian_shape,
    abelian_witness_set,
    conjecture_no_even_check,
    parity_form_sets,
)
from .avoidance import (
    AssociatedGraph,
    AvoidabilityOutcome,
    BudgetExceeded,
    NotAvoidable,
    SearchBudget,
    build_associated_graph,
    decide_avoidable,
    enumerate_saturated_sets,
    is_saturated,
    max_avoidable_containing_even,
    saturate,
    verify_avoiding_partition,
    verify_odd_cycle,
)
from .catalogs import (
    SaturatedCatalog,
    catalog_for,
    cyclic_saturated,
    dihedral_saturated,
    pq_saturated,
    quaternion_saturated,
    semidihedral_saturated,
)
from .density import (
    DensityReport,
    SequenceSpec,
    block_density_check,
    density_report,
    eld_bound_check,
    evensum_obstruction,
    fibonacci_growth_check,
    ld_conjecture_probe,
    nat_is_avoidable,
    parse_sequence,
    prefix_avoidable,
)
from .groups import (
    Group,
    GroupSpec,
    build_group,
    even_elements,
    format_element,
    format_subset,
    group_op,
    index_two_subgroups,
    is_even_element,
    parse_element,
    parse_subset,
    square_roots,
)
from .integers import (
    integers_is_avoidable,
    integers_is_saturated,
    integers_partition_window,
    integers_window_outcome,
    verify_window_partition,
)
from .verify import ComparisonReport, index2_coset_rule_check, verify_family

__version__ = "0.1.0"
