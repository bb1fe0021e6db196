"""Graphs as copresheaves on the graph-indexing category ``g``."""
import networkx as nx

from .category import graph_indexing_category
from .copresheaf import Copresheaf

G = graph_indexing_category()


def graph(vertices, edges, name="graph"):
    """Copresheaf on ``g`` from vertices and ``{edge: (source, target)}``."""
    return Copresheaf(
        G,
        {"v": list(vertices), "e": list(edges)},
        {"s": {e: st[0] for e, st in edges.items()}, "t": {e: st[1] for e, st in edges.items()}},
        name=name,
    )


def vec(n):
    """The walking path of length ``n``: vertices 0..n, edge i from i-1 to i."""
    return graph(range(n + 1), {i: (i - 1, i) for i in range(1, n + 1)}, name=f"vec{n}")


def ul(n):
    """``n`` vertices and no edges."""
    return graph(range(n), {}, name=f"ul{n}")


def disjoint_paths(lengths):
    """Paths of the given lengths side by side.

    Vertex ``(i, k)`` is the k-th vertex of path ``i``; edge ``(i, k)`` runs
    from ``(i, k-1)`` to ``(i, k)``.
    """
    vertices = [(i, k) for i, m in enumerate(lengths) for k in range(m + 1)]
    edges = {(i, k): ((i, k - 1), (i, k)) for i, m in enumerate(lengths) for k in range(1, m + 1)}
    return graph(vertices, edges, name="paths" + "".join(f".{m}" for m in lengths))


def disjoint_edges(n):
    """``n`` edges ``i: (i, 0) -> (i, 1)`` with distinct endpoints."""
    vertices = [(i, k) for i in range(n) for k in (0, 1)]
    return graph(vertices, {i: ((i, 0), (i, 1)) for i in range(n)}, name=f"edges{n}")


def underlying_graph(C):
    """Objects as vertices, every morphism (identities included) as an edge."""
    return graph(C.objects, {f: C.ends(f) for f in C.morphisms}, name=f"U{C.name}")


def to_networkx(X):
    g = nx.MultiDiGraph(name=X.name)
    for v in X.elements("v"):
        g.add_node(v)
    for e in X.elements("e"):
        g.add_edge(X.act("s", e), X.act("t", e), key=e)
    return g


def longest_path_length(X):
    """Length of the longest edge path, or None if the graph has a cycle."""
    g = nx.DiGraph(to_networkx(X))
    if not nx.is_directed_acyclic_graph(g):
        return None
    return nx.dag_longest_path_length(g)
