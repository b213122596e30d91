"""Packings of 3-vertex paths in small graphs.

Thin re-export of the compiled core. Paths are (end, center, end)
triples; graphs are immutable and limited to 62 vertices (the graph6
short form).
"""

from lampack._core import (
    Graph,
    all_theorem_ids,
    blocks,
    check_theorem,
    emit_graph6,
    gen_H,
    gen_Q,
    gen_R,
    gen_class_A,
    gen_net,
    has_factor,
    is_class_A,
    is_claw_free,
    is_connected,
    is_cubic,
    lambda_number,
    max_packing,
    parse_graph6,
    read_graph6_file,
    recognize_blowup,
    sample_cubic,
    triangle_blowup,
    triangles,
    vertex_connectivity,
)

__all__ = [
    "Graph",
    "all_theorem_ids",
    "blocks",
    "check_theorem",
    "emit_graph6",
    "gen_H",
    "gen_Q",
    "gen_R",
    "gen_class_A",
    "gen_net",
    "has_factor",
    "is_class_A",
    "is_claw_free",
    "is_connected",
    "is_cubic",
    "lambda_number",
    "max_packing",
    "parse_graph6",
    "read_graph6_file",
    "recognize_blowup",
    "sample_cubic",
    "triangle_blowup",
    "triangles",
    "vertex_connectivity",
]
