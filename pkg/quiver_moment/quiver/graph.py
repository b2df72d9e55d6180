"""
Graph procedures on quivers: cycle search, acyclicity, support restriction
and source arrows.

Every procedure is a pure function of its (immutable) inputs and breaks ties
by declaration order, so reports built on top of them are reproducible.
"""

import logging
from typing import Dict, List, Optional

import networkx as nx

from ..utils.errors import CyclicQuiverError, EmptyArrowSetError
from .model import Arrow, DimensionVector, Path, Quiver

logger = logging.getLogger(__name__)


def _outgoing_table(quiver: Quiver) -> Dict[str, List[Arrow]]:
    table: Dict[str, List[Arrow]] = {vertex: [] for vertex in quiver.vertices}
    for arrow in quiver.arrows:
        table.setdefault(arrow.src, []).append(arrow)
    return table


def find_cycle(quiver: Quiver) -> Optional[Path]:
    """
    Find a simple cycle, if the quiver has one.

    Depth-first search from each vertex in declaration order, following
    outgoing arrows in declaration order. The first arrow that closes back
    onto the current search path yields the cycle, which starts at the
    vertex it closes onto and repeats no intermediate vertex.

    Returns:
        The cycle as a Path, or None if the quiver is acyclic
    """
    outgoing = _outgoing_table(quiver)
    finished = set()

    for root in quiver.vertices:
        if root in finished:
            continue
        path_vertices = [root]
        path_arrows: List[str] = []
        position = {root: 0}
        frontier = [iter(outgoing.get(root, []))]

        while frontier:
            arrow = next(frontier[-1], None)
            if arrow is None:
                vertex = path_vertices.pop()
                position.pop(vertex)
                finished.add(vertex)
                frontier.pop()
                if path_arrows:
                    path_arrows.pop()
                continue

            target = arrow.tgt
            if target in position:
                cycle = tuple(path_arrows[position[target]:]) + (arrow.id,)
                logger.debug(f"Cycle found through '{target}': {' '.join(cycle)}")
                return Path(cycle, quiver)
            if target in finished:
                continue
            position[target] = len(path_vertices)
            path_vertices.append(target)
            path_arrows.append(arrow.id)
            frontier.append(iter(outgoing.get(target, [])))

    return None


def is_acyclic(quiver: Quiver) -> bool:
    """True iff the quiver contains no cycle (loops count as cycles)."""
    return find_cycle(quiver) is None


def topological_order(quiver: Quiver) -> Optional[List[str]]:
    """
    Topological order of the vertices, or None if there is a cycle.

    Computed with networkx on a multigraph, independently of find_cycle;
    ties are broken by declaration order.
    """
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(quiver.vertices)
    graph.add_edges_from((arrow.src, arrow.tgt) for arrow in quiver.arrows)
    order_key = quiver.vertex_index
    try:
        return list(nx.lexicographical_topological_sort(graph, key=lambda v: order_key.get(v, len(order_key))))
    except nx.NetworkXUnfeasible:
        return None


def support_subquiver(quiver: Quiver, dims: DimensionVector) -> Quiver:
    """
    Full subquiver on the vertices with positive dimension.

    Arrows touching a zero-dimensional vertex carry the zero map only, so
    they are dropped together with that vertex. Idempotent.
    """
    kept = tuple(vertex for vertex in quiver.vertices if dims.dims.get(vertex, 0) > 0)
    alive = set(kept)
    arrows = tuple(
        arrow for arrow in quiver.arrows if arrow.src in alive and arrow.tgt in alive
    )
    if len(kept) != len(quiver.vertices):
        logger.debug(
            f"Support keeps {len(kept)}/{len(quiver.vertices)} vertices, "
            f"{len(arrows)}/{len(quiver.arrows)} arrows"
        )
    return Quiver(kept, arrows)


def _require_source_arrow_preconditions(quiver: Quiver) -> None:
    if not quiver.arrows:
        raise EmptyArrowSetError("quiver has no arrows")
    cycle = find_cycle(quiver)
    if cycle is not None:
        raise CyclicQuiverError(list(cycle.arrows))


def find_source_arrow(quiver: Quiver) -> str:
    """
    An arrow whose source vertex is the target of no arrow.

    Uses in-degree counting; the first qualifying arrow in declaration order
    is returned. Such an arrow exists in every finite acyclic quiver with at
    least one arrow.

    Raises:
        EmptyArrowSetError: If the quiver has no arrows
        CyclicQuiverError: If the quiver has a cycle
    """
    _require_source_arrow_preconditions(quiver)
    in_degree = quiver.in_degrees()
    for arrow in quiver.arrows:
        if in_degree.get(arrow.src, 0) == 0:
            return arrow.id
    # unreachable for acyclic input
    raise CyclicQuiverError()


def walk_to_source_arrow(quiver: Quiver, start: Optional[str] = None) -> str:
    """
    Constructive search for a source arrow by walking arrows backwards.

    Starting from ``start`` (default: the first arrow), repeatedly replace the
    current arrow by an unused arrow ending at its source; the walk stops at
    an arrow whose source is the target of no other arrow. Acyclicity makes
    the walk finite.

    Raises:
        EmptyArrowSetError: If the quiver has no arrows
        CyclicQuiverError: If the quiver has a cycle
    """
    _require_source_arrow_preconditions(quiver)
    current = quiver.arrow(start) if start is not None else quiver.arrows[0]
    used = {current.id}
    for _ in range(len(quiver.arrows)):
        predecessor = next(
            (a for a in quiver.arrows if a.id not in used and a.tgt == current.src),
            None,
        )
        if predecessor is None:
            return current.id
        used.add(predecessor.id)
        current = predecessor
    raise CyclicQuiverError()
