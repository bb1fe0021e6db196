"""Categories of elements, and (co)limits indexed by them."""
import logging

from scipy.cluster.hierarchy import DisjointSet

from ..utils import FrozenMap, InducedActionIllDefined, label, least, sort_key
from .category import FinCategory, FinFunctor
from .copresheaf import Copresheaf, set_copresheaf

logger = logging.getLogger(__name__)


def category_of_elements(P):
    """``∫P`` with its projection to the base.

    Objects are ``(a, x)`` with ``x ∈ P(a)``; morphisms are ``((a, x), f)``.
    """
    C = P.base
    objects = list(P.all_elements())
    morphisms = {}
    for a, x in objects:
        for f in C.out(a):
            morphisms[((a, x), f)] = ((a, x), (C.tgt(f), P.act(f, x)))
    composition = {}
    for (z, f), (_, w) in morphisms.items():
        for g in C.out(w[0]):
            composition[((z, f), (w, g))] = (z, C.compose(f, g))
    identities = {(a, x): ((a, x), C.identity(a)) for a, x in objects}
    el = FinCategory(objects, morphisms, identities, composition, name=f"∫{P.name}")
    projection = FinFunctor(el, C, {z: z[0] for z in objects}, {m: m[1] for m in morphisms},
                            name=f"π_{P.name}")
    return el, projection


def _callable(t):
    if isinstance(t, dict):
        return t.__getitem__
    return t


class ElementsDiagram:
    """A diagram of copresheaves indexed by the elements of ``shape``.

    Args:
        shape (Copresheaf): the indexing copresheaf ``P``
        value (callable): ``(a, x) -> Copresheaf`` (or an iterable, read as
            a finite set); all values share one base
        transition (callable): ``(f, a, x) -> map`` keyed by
            ``(object, element)``. Contravariant diagrams map
            ``value(b, x·f) -> value(a, x)``; covariant ones the other way.
        covariant (bool): direction of the transitions
    """

    def __init__(self, shape, value, transition, covariant=False, name=None, value_base=None):
        self.shape = shape
        self.value_base = value_base
        self._value = value
        self._transition = transition
        self.covariant = covariant
        self.name = name or f"D[{shape.name}]"
        self._values = {}

    def value(self, z):
        try:
            return self._values[z]
        except KeyError:
            v = self._value(*z)
            if not isinstance(v, Copresheaf):
                v = set_copresheaf(v)
            self._values[z] = v
            return v

    def transition(self, f, z):
        return _callable(self._transition(f, *z))

    def arrows(self):
        """Yield ``(z, f, z·f)`` for every non-identity generating morphism."""
        P = self.shape
        for a, x in P.all_elements():
            for f in P.base.non_identity_out(a):
                yield (a, x), f, (P.base.tgt(f), P.act(f, x))


class Colimit:
    """Quotient of the disjoint union of a diagram's values.

    Elements are represented by the least pair ``(z, w)`` of their class,
    with ``z`` a shape element and ``w`` an element of ``value(z)``.
    """

    def __init__(self, diagram, copresheaf, rep):
        self.diagram = diagram
        self.copresheaf = copresheaf
        self._rep = rep

    def cls(self, obj, z, w):
        return self._rep[(obj, z, w)]

    def injection(self, z):
        V = self.diagram.value(z)
        return FrozenMap({(e, w): self._rep[(e, z, w)] for e, w in V.all_elements()})

    def size(self):
        return self.copresheaf.size()


def colimit_over_elements(D, name=None):
    """Colimit of an elements-indexed diagram, computed by union-find.

    Raises:
        InducedActionIllDefined: the action of the value base does not
            descend to the quotient
    """
    P = D.shape
    nodes = []
    base = None
    for z in P.all_elements():
        V = D.value(z)
        if base is None:
            base = V.base
        nodes.extend((e, z, w) for e, w in V.all_elements())
    if base is None:
        base = D.value_base
    if base is None:
        raise ValueError(f"{D.name}: empty shape needs an explicit value_base")
    ds = DisjointSet(nodes)
    for z, f, z2 in D.arrows():
        T = D.transition(f, z)
        if D.covariant:
            for e, w in D.value(z).all_elements():
                ds.merge((e, z, w), (e, z2, T((e, w))))
        else:
            for e, w in D.value(z2).all_elements():
                ds.merge((e, z2, w), (e, z, T((e, w))))

    rep = {}
    members = {}
    for subset in ds.subsets():
        e, z, w = least(subset)
        r = (z, w)
        members[(e, r)] = subset
        for node in subset:
            rep[node] = r

    sets = {a: [] for a in base.objects}
    for (e, r) in members:
        sets[e].append(r)
    action = {}
    for h in base.morphisms:
        if base.is_identity(h):
            continue
        a, b = base.ends(h)
        table = {}
        for r in sets[a]:
            images = {rep[(b, z, D.value(z).act(h, w))] for (_, z, w) in members[(a, r)]}
            if len(images) != 1:
                raise InducedActionIllDefined(
                    f"{label(h)} does not descend to the class of {label(r)} in {D.name}")
            table[r] = images.pop()
        action[h] = table
    colim = Copresheaf(base, sets, action, name=name or f"colim {D.name}", check=False)
    logger.debug("colimit %s: %d nodes -> %d classes", D.name, len(nodes), len(members))
    return Colimit(D, colim, rep)


class Limit:
    def __init__(self, diagram, families):
        self.diagram = diagram
        self.elements = families

    def projection(self, z):
        return lambda family: family(z)

    def __len__(self):
        return len(self.elements)


def limit_over_elements(D):
    """Compatible families of a diagram of finite sets.

    For a covariant diagram a family ``(x_z)`` satisfies
    ``T_f(x_z) = x_{z·f}``; for a contravariant one ``T_f(x_{z·f}) = x_z``.
    """
    P = D.shape
    C = P.base
    order = sorted(P.all_elements(),
                   key=lambda z: (-len(C.non_identity_out(z[0])), sort_key(z)))
    if not D.covariant:
        order.reverse()
    position = {z: i for i, z in enumerate(order)}
    checks = {z: [] for z in order}
    for z, f, z2 in D.arrows():
        T = D.transition(f, z)
        later = z if position[z] > position[z2] else z2
        checks[later].append((z, z2, T))

    def consistent(family, z):
        for z1, z2, T in checks[z]:
            if D.covariant:
                if T(("*", family[z1])) != family[z2]:
                    return False
            elif T(("*", family[z2])) != family[z1]:
                return False
        return True

    families = []
    family = {}

    def extend(i):
        if i == len(order):
            families.append(FrozenMap(family))
            return
        z = order[i]
        for x in D.value(z).elements("*"):
            family[z] = x
            if consistent(family, z):
                extend(i + 1)
        family.pop(z, None)

    extend(0)
    return Limit(D, tuple(families))
