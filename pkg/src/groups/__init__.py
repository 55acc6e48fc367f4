from src.groups.model import FiniteGroup, Subgroup
from src.groups.centralizers import (
    CentralSeries,
    all_subgroups,
    center,
    centralizer,
    centralizer_of_set,
    commutator_subgroup,
    commuting_pairs_by_classes,
    commuting_tuple_count,
    commuting_tuple_count_brute_force,
    conjugacy_classes,
    descending_central_series,
    distinct_centralizers,
    is_simple,
    l_stage_centralizer,
    maximal_abelian_subgroups,
    nilpotency_class,
    normal_closure,
)
from src.groups.tc import PartitionLawReport, TCEquivalences, is_k_tc, l_stage_partition_law, tc_class, tc_equivalences
from src.groups.loader import MAXIMAL_ABELIAN, load_group, load_subgroups, parse_group_text, parse_subgroups_text
from src.groups import library

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "CentralSeries",
    "all_subgroups",
    "center",
    "centralizer",
    "centralizer_of_set",
    "commutator_subgroup",
    "commuting_pairs_by_classes",
    "commuting_tuple_count",
    "commuting_tuple_count_brute_force",
    "conjugacy_classes",
    "descending_central_series",
    "distinct_centralizers",
    "is_simple",
    "l_stage_centralizer",
    "maximal_abelian_subgroups",
    "nilpotency_class",
    "normal_closure",
    "PartitionLawReport",
    "TCEquivalences",
    "is_k_tc",
    "l_stage_partition_law",
    "tc_class",
    "tc_equivalences",
    "MAXIMAL_ABELIAN",
    "load_group",
    "load_subgroups",
    "parse_group_text",
    "parse_subgroups_text",
    "library",
]
