import itertools
import logging

import networkx as nx
import numpy as np
from tqdm import tqdm

from ..utils import LawViolation, Report, label, sort_ids, sort_key

logger = logging.getLogger(__name__)


class FinCategory:
    """A finite category given by explicit tables.

    ``compose(f, g)`` is diagrammatic: first ``f`` then ``g`` (that is
    ``g ∘ f``), defined when ``tgt(f) == src(g)``. Composites with an
    identity may be left out of ``composition``; they are filled in.

    Args:
        objects (iterable): object ids
        morphisms (dict): morphism id -> (source, target)
        identities (dict): object -> identity morphism id
        composition (dict): (f, g) -> composite
        name (str, optional): display name
    """

    def __init__(self, objects, morphisms, identities, composition, name=None):
        self.name = name or "C"
        self._objects = sort_ids(objects)
        self._ends = dict(morphisms)
        self._identities = dict(identities)
        self._composition = dict(composition)
        self._index()

    def _index(self):
        object_set = set(self._objects)
        self._out = {a: [] for a in self._objects}
        self._in = {a: [] for a in self._objects}
        self._hom = {}
        for f, (a, b) in self._ends.items():
            if a not in object_set or b not in object_set:
                raise LawViolation(f"{self.name}: morphism {label(f)} has unknown ends {a!r}, {b!r}")
            self._out[a].append(f)
            self._in[b].append(f)
            self._hom.setdefault((a, b), []).append(f)
        for a in self._objects:
            i = self._identities.get(a)
            if i is None or self._ends.get(i) != (a, a):
                raise LawViolation(f"{self.name}: object {label(a)} has no identity")
        self._identity_set = frozenset(self._identities.values())
        for a in self._objects:
            self._out[a] = sort_ids(self._out[a])
            self._in[a] = sort_ids(self._in[a])
        for key in self._hom:
            self._hom[key] = sort_ids(self._hom[key])
        self._morphisms = sort_ids(self._ends)
        for f, (a, b) in self._ends.items():
            self._composition.setdefault((self._identities[a], f), f)
            self._composition.setdefault((f, self._identities[b]), f)

    @property
    def objects(self):
        return self._objects

    @property
    def morphisms(self):
        return self._morphisms

    def src(self, f):
        return self._ends[f][0]

    def tgt(self, f):
        return self._ends[f][1]

    def ends(self, f):
        return self._ends[f]

    def identity(self, a):
        return self._identities[a]

    def is_identity(self, f):
        return f in self._identity_set

    def has_morphism(self, f):
        return f in self._ends

    def compose(self, f, g):
        """First ``f`` then ``g``."""
        try:
            return self._composition[(f, g)]
        except KeyError:
            if self.tgt(f) != self.src(g):
                raise ValueError(f"{label(f)} and {label(g)} are not composable") from None
            raise LawViolation(f"{self.name}: composite of {label(f)} then {label(g)} missing") from None

    def compose_path(self, fs):
        result = fs[0]
        for g in fs[1:]:
            result = self.compose(result, g)
        return result

    def hom(self, a, b):
        return self._hom.get((a, b), ())

    def out(self, a):
        return self._out[a]

    def into(self, b):
        return self._in[b]

    def non_identity_out(self, a):
        return tuple(f for f in self._out[a] if f not in self._identity_set)

    def size(self):
        return len(self._objects), len(self._morphisms)

    def composition_items(self):
        return self._composition.items()

    def hom_counts(self, objects=None):
        """Matrix of hom-set sizes, rows are sources."""
        objects = self._objects if objects is None else tuple(objects)
        return np.array([[len(self.hom(a, b)) for b in objects] for a in objects], dtype=int)

    def __repr__(self):
        n, m = self.size()
        return f"FinCategory({self.name}: {n} objects, {m} morphisms)"


class FinFunctor:
    def __init__(self, source, target, on_objects, on_morphisms, name=None):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        self.name = name or "F"

    def __call__(self, f):
        return self.on_morphisms[f]

    def obj(self, a):
        return self.on_objects[a]


def same_category(C, D):
    if C is D:
        return True
    if C.objects != D.objects or C.morphisms != D.morphisms:
        return False
    if any(C.ends(f) != D.ends(f) for f in C.morphisms):
        return False
    return dict(C.composition_items()) == dict(D.composition_items())


def _composite(report, C, law, f, g):
    """``C.compose(f, g)``, or None with a violation when it is not typed."""
    try:
        return C.compose(f, g)
    except (LawViolation, ValueError) as e:
        report.fail(law, (label(f), label(g)), str(e))
        return None


def check_category(C, objects=None, progress=True):
    """Check the typing, unit and associativity laws of ``C``.

    Never raises on a bad table: missing or ill-typed composites are
    reported as violations. Composites are read once into an index table;
    associativity is then compared row by row on the indices.

    Args:
        C (FinCategory): category to check
        objects (iterable, optional): restrict the check to morphisms whose
            ends lie in these objects
    """
    report = Report(f"category {C.name}")
    keep = set(C.objects if objects is None else objects)
    morphisms = [f for f in C.morphisms if C.src(f) in keep and C.tgt(f) in keep]
    index = {f: i for i, f in enumerate(morphisms)}
    for f in morphisms:
        a, b = C.ends(f)
        left = _composite(report, C, "left-unit", C.identity(a), f)
        report.expect(left is None or left == f, "left-unit", label(f))
        right = _composite(report, C, "right-unit", f, C.identity(b))
        report.expect(right is None or right == f, "right-unit", label(f))

    table = np.full((len(morphisms), len(morphisms)), -1, dtype=np.int32)
    for i, f in enumerate(morphisms):
        for g in C.out(C.tgt(f)):
            c = C.tgt(g)
            if c not in keep:
                continue
            fg = _composite(report, C, "typing", f, g)
            if fg is None:
                continue
            typed = C.has_morphism(fg) and C.ends(fg) == (C.src(f), c)
            if report.expect(typed, "typing", (label(f), label(g)), f"composite is {label(fg)}"):
                table[i, index[g]] = index[fg]

    rows = tqdm(range(len(morphisms)), desc=f"assoc {C.name}", disable=None if progress else True, leave=False)
    for i in rows:
        row = table[i]
        gs = np.flatnonzero(row >= 0)
        gh = table[gs]
        composable = gh >= 0
        lhs = table[row[gs]]
        rhs = row[np.where(composable, gh, 0)]
        report.checked += int(composable.sum())
        bad = composable & (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
        for r, h in zip(*np.nonzero(bad)):
            f, g = morphisms[i], morphisms[gs[r]]
            report.fail("associativity", (label(f), label(g), label(morphisms[h])),
                        f"{label(morphisms[lhs[r, h]])} != {label(morphisms[rhs[r, h]])}")
    return report


def check_functor(F):
    report = Report(f"functor {F.name}")
    S, T = F.source, F.target
    for a in S.objects:
        report.expect(F(S.identity(a)) == T.identity(F.obj(a)), "identities", label(a))
    for f in S.morphisms:
        a, b = S.ends(f)
        report.expect(T.ends(F(f)) == (F.obj(a), F.obj(b)), "typing", label(f))
        for g in S.out(b):
            report.expect(F(S.compose(f, g)) == T.compose(F(f), F(g)), "composition",
                          (label(f), label(g)))
    return report


def opposite(C):
    composition = {(g, f): h for (f, g), h in C.composition_items()}
    return FinCategory(
        C.objects,
        {f: (b, a) for f, (a, b) in ((f, C.ends(f)) for f in C.morphisms)},
        {a: C.identity(a) for a in C.objects},
        composition,
        name=f"{C.name}^op",
    )


def terminal_category():
    """The one-object one-morphism category; copresheaves on it are sets."""
    return FinCategory(["*"], {"id": ("*", "*")}, {"*": "id"}, {}, name="1")


def discrete_category(objects, name="disc"):
    objects = list(objects)
    return FinCategory(objects, {("id", a): (a, a) for a in objects},
                       {a: ("id", a) for a in objects}, {}, name=name)


def graph_indexing_category():
    """Objects ``v`` and ``e``; besides identities, ``s, t: e -> v``."""
    morphisms = {"id_v": ("v", "v"), "id_e": ("e", "e"), "s": ("e", "v"), "t": ("e", "v")}
    return FinCategory(["v", "e"], morphisms, {"v": "id_v", "e": "id_e"}, {}, name="g")


def poset_category(elements, relations, name="P"):
    """Category of a preorder generated by ``relations`` (pairs a <= b)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    graph.add_edges_from(relations)
    closure = nx.transitive_closure_dag(graph) if nx.is_directed_acyclic_graph(graph) \
        else nx.transitive_closure(graph, reflexive=False)
    pairs = set(closure.edges()) | {(a, a) for a in elements}
    morphisms = {(a, b): (a, b) for a, b in pairs}
    composition = {}
    for a, b in pairs:
        for c in elements:
            if (b, c) in pairs:
                composition[((a, b), (b, c))] = (a, c)
    return FinCategory(elements, morphisms, {a: (a, a) for a in elements}, composition, name=name)


def chain_category(n):
    """The ordinal ``[n] = {0 < 1 < ... < n}``."""
    elements = list(range(n + 1))
    return poset_category(elements, [(i, i + 1) for i in range(n)], name=f"[{n}]")


def commutative_square():
    return poset_category(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
                          name="square")


def monoid_category(elements, unit, product, name="M"):
    """One-object category of a finite monoid.

    ``product[x][y]`` is ``x·y``; composing ``f`` then ``g`` gives ``g·f``.
    """
    morphisms = {x: ("*", "*") for x in elements}
    composition = {(f, g): product[g][f] for f in elements for g in elements}
    return FinCategory(["*"], morphisms, {"*": unit}, composition, name=name)


def free_category(objects, edges, name="F"):
    """Free category on a finite acyclic graph.

    Args:
        edges (dict): edge id -> (source, target)

    Morphisms are ``("path", e1, ..., ek)``; identities are ``("id", a)``.
    """
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(objects)
    for e, (a, b) in edges.items():
        graph.add_edge(a, b, key=e)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError("free_category needs an acyclic graph")
    paths = {("id", a): (a, a) for a in objects}
    frontier = {(e,): edges[e] for e in edges}
    while frontier:
        paths.update({("path",) + p: ends for p, ends in frontier.items()})
        grown = {}
        for p, (a, b) in frontier.items():
            for e, (c, d) in edges.items():
                if c == b:
                    grown[p + (e,)] = (a, d)
        frontier = grown
    composition = {}
    for f, (a, b) in paths.items():
        for g, (c, d) in paths.items():
            if b != c:
                continue
            if f[0] == "id":
                composition[(f, g)] = g
            elif g[0] == "id":
                composition[(f, g)] = f
            else:
                composition[(f, g)] = f + g[1:]
    return FinCategory(objects, paths, {a: ("id", a) for a in objects}, composition, name=name)


def random_category(rng, n_objects=4, edge_probability=0.5, free=None):
    """Small random category from a seeded generator.

    Draws a random acyclic graph on ``0..n_objects-1`` and returns either
    its free category or its poset of reachability.
    """
    objects = list(range(n_objects))
    edges = {}
    for a, b in itertools.combinations(objects, 2):
        if rng.random() < edge_probability:
            edges[f"x{a}{b}"] = (a, b)
            if rng.random() < 0.3:
                edges[f"y{a}{b}"] = (a, b)
    if free is None:
        free = bool(rng.integers(0, 2))
    if free:
        return free_category(objects, edges, name=f"free{n_objects}")
    return poset_category(objects, sorted(set(edges.values()), key=sort_key), name=f"poset{n_objects}")


def monotone_map_category(n):
    """Monotone maps between the ordinals ``{0..k}``, ``k <= n``.

    Objects are ``k``; a morphism ``k -> l`` is the tuple of values of a
    weakly increasing map.
    """
    objects = list(range(n + 1))
    morphisms = {}
    for k in objects:
        for l in objects:
            for values in itertools.combinations_with_replacement(range(l + 1), k + 1):
                morphisms[(k, l, values)] = (k, l)
    composition = {}
    for f, (k, l) in morphisms.items():
        for g, (l2, m) in morphisms.items():
            if l2 != l:
                continue
            composition[(f, g)] = (k, m, tuple(g[2][v] for v in f[2]))
    identities = {k: (k, k, tuple(range(k + 1))) for k in objects}
    return FinCategory(objects, morphisms, identities, composition, name=f"Delta<={n}")
