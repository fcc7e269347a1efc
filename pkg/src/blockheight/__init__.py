"""Exact computational group theory: character tables, p-blocks, heights.

Everything is computed in exact arithmetic (integers and cyclotomics with
rational coefficients).  The package splits into construction layers
(``permgroup``, ``matgroup``, ``catalog``), the character-table engine
(``chartab`` over ``cyclo``/``gf``/``numtheory``), block-theoretic
invariants (``blocks``), partition and orbit combinatorics (``combinat``),
and a verification harness (``verify``) with a command-line front end
(``cli``).
"""

from .blocks import (
    BlockDistribution,
    block_distribution,
    covering_relation,
    height_profile,
    is_p_constrained_single_block,
    mh_of_p_group,
)
from .catalog import (
    CatalogEntry,
    catalog_from_directory,
    default_catalog,
    load_fixture,
    parse_mat_group,
    parse_perm_group,
    serialize_mat_group,
    serialize_perm_group,
)
from .chartab import CharacterTable, character_table
from .combinat import (
    Partition,
    hook_degree,
    hook_partition,
    is_p_concealed,
    maximal_block_system,
    regular_orbit_on_partitions,
)
from .cyclo import Cyclotomic
from .matgroup import MatGroup, is_p_exceptional
from .permgroup import PermGroup
from .verify import (
    EmReport,
    SuiteResult,
    check_theorem_A,
    run_em_sweep,
    run_lemma_suites,
)

__version__ = "1.0.0"

__all__ = [
    "BlockDistribution",
    "CatalogEntry",
    "CharacterTable",
    "Cyclotomic",
    "EmReport",
    "MatGroup",
    "Partition",
    "PermGroup",
    "SuiteResult",
    "__version__",
    "block_distribution",
    "catalog_from_directory",
    "character_table",
    "check_theorem_A",
    "covering_relation",
    "default_catalog",
    "height_profile",
    "hook_degree",
    "hook_partition",
    "is_p_concealed",
    "is_p_constrained_single_block",
    "is_p_exceptional",
    "load_fixture",
    "maximal_block_system",
    "mh_of_p_group",
    "parse_mat_group",
    "parse_perm_group",
    "regular_orbit_on_partitions",
    "run_em_sweep",
    "run_lemma_suites",
    "serialize_mat_group",
    "serialize_perm_group",
]
