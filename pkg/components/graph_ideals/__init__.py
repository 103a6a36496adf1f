"""
Graph Ideals Component

Weighted oriented graphs and their edge ideals: forests and cycles, blocks
and blockends, sinking and ironing, canonical orders, Betti recursions,
path/cycle partners and E-K splittings of classic cycles.
"""

from .graphs import (
    WeightedOrientedGraph,
    EdgeIdealMap,
    edge_ideal,
    sinking,
    disjoint_sum_order,
    path_graph,
    naturally_oriented_cycle,
    classic_cycle,
    parse_graph_text,
    parse_graph_json,
    load_graph,
    graph_to_text,
    graph_to_json,
)
from .forests import (
    ForestBlocks,
    betti_add,
    betti_product,
    koszul_shift,
    projective_dimension,
    is_forest,
    is_naturally_oriented_forest,
    roots,
    vertex_ranks,
    natural_forest_order,
    is_potential_block,
    blocks_forest,
    blockends_forest,
    blockends_from_blocks,
    forest_is_bridge,
    forest_is_gap,
    forest_is_true_gap,
    forest_betti_recursion_total,
    forest_betti_recursion_graded,
    iron_forest,
)
from .cycles import (
    CycleOrder,
    CycleBlocks,
    is_cycle,
    is_path,
    cycle_order,
    is_naturally_oriented,
    blockends_cycle,
    is_classic,
    rotate_to_blockend,
    blocks_cycle,
    descending_cycle_order,
    kflip_order,
    cycle_is_bridge,
    cycle_is_gap,
    cycle_is_true_gap,
    ironing,
    canonical_cycle,
    cycle_betti_recursion_total,
    path_to_cycle,
    cycle_to_path,
    path_cycle_transfer,
    no_path_partner_cycle,
)
from .splitting import (
    SplittingLevel,
    EKSplitting,
    ek_split_cycle,
    validate_ek,
    validate_splitting,
    betti_splitting_holds,
)

__all__ = [
    'WeightedOrientedGraph',
    'EdgeIdealMap',
    'edge_ideal',
    'sinking',
    'disjoint_sum_order',
    'path_graph',
    'naturally_oriented_cycle',
    'classic_cycle',
    'parse_graph_text',
    'parse_graph_json',
    'load_graph',
    'graph_to_text',
    'graph_to_json',
    'ForestBlocks',
    'betti_add',
    'betti_product',
    'koszul_shift',
    'projective_dimension',
    'is_forest',
    'is_naturally_oriented_forest',
    'roots',
    'vertex_ranks',
    'natural_forest_order',
    'is_potential_block',
    'blocks_forest',
    'blockends_forest',
    'blockends_from_blocks',
    'forest_is_bridge',
    'forest_is_gap',
    'forest_is_true_gap',
    'forest_betti_recursion_total',
    'forest_betti_recursion_graded',
    'iron_forest',
    'CycleOrder',
    'CycleBlocks',
    'is_cycle',
    'is_path',
    'cycle_order',
    'is_naturally_oriented',
    'blockends_cycle',
    'is_classic',
    'rotate_to_blockend',
    'blocks_cycle',
    'descending_cycle_order',
    'kflip_order',
    'cycle_is_bridge',
    'cycle_is_gap',
    'cycle_is_true_gap',
    'ironing',
    'canonical_cycle',
    'cycle_betti_recursion_total',
    'path_to_cycle',
    'cycle_to_path',
    'path_cycle_transfer',
    'no_path_partner_cycle',
    'SplittingLevel',
    'EKSplitting',
    'ek_split_cycle',
    'validate_ek',
    'validate_splitting',
    'betti_splitting_holds',
]
