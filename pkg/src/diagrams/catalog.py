"""Generators for the Dynkin and Euclidean diagram catalog."""
from __future__ import annotations

from collections.abc import Iterator, Sequence

from .models import DiagramTag, DiagramType, UndirectedGraph

# Arm lengths (vertices beyond the centre) of the star-shaped members.
STAR_ARMS: dict[DiagramTag, tuple[int, ...]] = {
    DiagramTag.E6: (1, 2, 2),
    DiagramTag.E7: (1, 2, 3),
    DiagramTag.E8: (1, 2, 4),
    DiagramTag.E6_TILDE: (2, 2, 2),
    DiagramTag.E7_TILDE: (1, 3, 3),
    DiagramTag.E8_TILDE: (1, 2, 5),
}


def path_graph(n: int, prefix: str = "v") -> UndirectedGraph:
    vertices = tuple(f"{prefix}{i}" for i in range(n))
    return UndirectedGraph(
        vertices, tuple((vertices[i], vertices[i + 1], 1) for i in range(n - 1))
    )


def cycle_graph(n: int, prefix: str = "v") -> UndirectedGraph:
    """Cycle on n >= 3 vertices; n = 2 gives the double edge."""
    if n == 2:
        a, b = f"{prefix}0", f"{prefix}1"
        return UndirectedGraph((a, b), ((a, b, 2),))
    vertices = tuple(f"{prefix}{i}" for i in range(n))
    return UndirectedGraph(
        vertices, tuple((vertices[i], vertices[(i + 1) % n], 1) for i in range(n))
    )


def star_graph(arms: Sequence[int], prefix: str = "v") -> UndirectedGraph:
    """Centre v0 with one path of the given length per arm."""
    vertices = [f"{prefix}0"]
    edges = []
    for length in arms:
        previous = vertices[0]
        for _ in range(length):
            vertex = f"{prefix}{len(vertices)}"
            vertices.append(vertex)
            edges.append((previous, vertex, 1))
            previous = vertex
    return UndirectedGraph(tuple(vertices), tuple(edges))


def d_tilde_graph(n: int, prefix: str = "v") -> UndirectedGraph:
    """D̃(n): a path of n-3 vertices with two leaves at each end."""
    spine = [f"{prefix}{i}" for i in range(n - 3)]
    leaves = [f"{prefix}{i}" for i in range(n - 3, n + 1)]
    edges = [(spine[i], spine[i + 1], 1) for i in range(len(spine) - 1)]
    edges += [(spine[0], leaves[0], 1), (spine[0], leaves[1], 1)]
    edges += [(spine[-1], leaves[2], 1), (spine[-1], leaves[3], 1)]
    return UndirectedGraph(tuple(spine + leaves), tuple(edges))


def catalog_graph(dtype: DiagramType, prefix: str = "v") -> UndirectedGraph:
    """Canonical graph of a finite catalog type."""
    tag, n = dtype.tag, dtype.n
    if tag is DiagramTag.A and n is not None and n >= 1:
        return path_graph(n, prefix)
    if tag is DiagramTag.D and n is not None and n >= 4:
        return star_graph((1, 1, n - 3), prefix)
    if tag is DiagramTag.A_TILDE and n is not None and n >= 1:
        return cycle_graph(n + 1, prefix)
    if tag is DiagramTag.D_TILDE and n is not None and n >= 4:
        return d_tilde_graph(n, prefix)
    if tag in STAR_ARMS:
        return star_graph(STAR_ARMS[tag], prefix)
    raise ValueError(f"no finite catalog graph for {dtype}")


def iter_catalog(max_vertices: int) -> Iterator[DiagramType]:
    """Every Dynkin and Euclidean type with at most max_vertices vertices."""
    for n in range(1, max_vertices + 1):
        yield DiagramType(DiagramTag.A, n)
    for n in range(4, max_vertices + 1):
        yield DiagramType(DiagramTag.D, n)
    for tag in (DiagramTag.E6, DiagramTag.E7, DiagramTag.E8):
        if sum(STAR_ARMS[tag]) + 1 <= max_vertices:
            yield DiagramType(tag)
    for n in range(1, max_vertices):
        yield DiagramType(DiagramTag.A_TILDE, n)
    for n in range(4, max_vertices):
        yield DiagramType(DiagramTag.D_TILDE, n)
    for tag in (DiagramTag.E6_TILDE, DiagramTag.E7_TILDE, DiagramTag.E8_TILDE):
        if sum(STAR_ARMS[tag]) + 1 <= max_vertices:
            yield DiagramType(tag)
