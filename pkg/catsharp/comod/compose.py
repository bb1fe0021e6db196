"""Composition ``p ◁_d q`` of bicomodules."""
import itertools
import logging

from scipy.cluster.hierarchy import DisjointSet

from ..fincat import (
    Copresheaf,
    ElementsDiagram,
    colimit_over_elements,
    iter_copresheaf_maps,
    map_weight,
    same_category,
)
from ..poly import associator, identity_morphism, tri_morphisms
from ..utils import FrameMismatch, FrozenMap, label, least
from .base_bicomodule import Bicomodule
from .bicomodule import FiniteBicomodule

logger = logging.getLogger(__name__)


def _check_frames(p, q):
    if not same_category(p.right.category, q.left.category):
        raise FrameMismatch(f"{p.name} ends at {p.right.name} but {q.name} starts at {q.left.name}")


class CompositeBicomodule(Bicomodule):
    """``p ◁_d q: c ↛ e`` for ``p: c ↛ d`` and ``q: d ↛ e``.

    Operations are ``(I, J)`` with ``J: p[I] -> q(1)`` a map of
    copresheaves; the arity of ``(I, J)`` is the colimit of ``z ↦ q[J z]``
    over the elements of ``p[I]``, with elements ``(z, w)``.

    Elements of the composite applied to ``X`` are kept in iterated form
    ``(I, g)`` with ``g: p[I] -> q(X)``; ``split`` and ``join`` convert to
    and from the composite form ``((I, J), h)``.
    """

    def __init__(self, p, q, name=None):
        _check_frames(p, q)
        super().__init__(p.left, q.right, name=name or f"{p.name}◁{q.name}")
        self.p = p
        self.q = q
        self.is_finite = p.is_finite and q.is_finite
        self._colimits = {}

    def _operations(self, bound):
        p, q = self.p, self.q
        Q = q.positions()
        for I in p.operations(bound):
            budget = None if bound is None else bound - p.degree(I)
            for J in iter_copresheaf_maps(p.arity(I), Q, budget=budget):
                yield (I, J)

    def exactness_at(self, bound):
        return self.p.exactness_at(bound).meet(self.q.exactness_at(bound))

    def degree_cap(self, X):
        return None

    def output(self, I):
        return self.p.output(I[0])

    def degree(self, I):
        P, J = I
        return self.p.degree(P) + map_weight(J, self.q.positions())

    def colimit(self, I):
        try:
            return self._colimits[I]
        except KeyError:
            pass
        P, J = I
        q = self.q
        D = ElementsDiagram(
            self.p.arity(P),
            lambda E, w: q.arity(J((E, w))),
            lambda g, E, w: q.restrict(g, J((E, w))),
            name=f"{self.name}[{label(I)}]",
            value_base=q.right.category,
        )
        colim = self._colimits[I] = colimit_over_elements(D)
        return colim

    def arity(self, I):
        return self.colimit(I).copresheaf

    def act(self, f, I):
        P, J = I
        r = self.p.restrict(f, P)
        return (self.p.act(f, P), FrozenMap({k: J((k[0], w)) for k, w in r.items()}))

    def restrict(self, f, I):
        P, _ = I
        r = self.p.restrict(f, P)
        target = self.colimit(I)
        table = {}
        for F, (z, w) in self.arity(self.act(f, I)).all_elements():
            table[(F, (z, w))] = target.cls(F, (z[0], r(z)), w)
        return FrozenMap(table)

    def split(self, elem):
        P, g = elem
        parts = {z: self.q.split(x) for z, x in g.items()}
        J = FrozenMap({z: part[0] for z, part in parts.items()})
        colim = self.colimit((P, J))
        h = {}
        for F, (z, w) in colim.copresheaf.all_elements():
            h[(F, (z, w))] = parts[z][1]((F, w))
        return (P, J), FrozenMap(h)

    def join(self, I, h):
        P, J = I
        colim = self.colimit(I)
        g = {}
        for z, Jz in J.items():
            A = self.q.arity(Jz)
            g[z] = self.q.join(Jz, FrozenMap({(F, w): h((F, colim.cls(F, z, w)))
                                               for F, w in A.all_elements()}))
        return (P, FrozenMap(g))

    def fmap(self, h):
        inner = self.q.fmap(h)
        return lambda elem: (elem[0], elem[1].compose(inner))

    def apply(self, X, bound=None, outer=None, name=None):
        """``p ◁ (q ◁ X)``, the iterated form."""
        Y = self.q.apply(X, bound)
        return self.p.apply(Y, bound if outer is None else None, outer=outer,
                            name=name or f"{self.name}◁{X.name}")


def compose_bicomodules(p, q, bound=None, name=None):
    """``p ◁_d q`` with its operations enumerated at ``bound``.

    Raises:
        FrameMismatch: the middle comonoids differ
        BoundExhausted: an infinite factor was given no bound
    """
    r = CompositeBicomodule(p, q, name=name)
    ops = r.operations(bound)
    logger.info("%s: %d operations at bound %s [%s]", r.name, len(ops), bound, r.exactness_at(bound))
    return r


def _functions(keys, targets, degree, budget):
    for values in itertools.product(targets, repeat=len(keys)):
        if budget is None or sum(degree(J) for J in values) <= budget:
            yield FrozenMap(zip(keys, values))


def compose_bicomodules_equalizer_oracle(p, q, bound=None, name=None):
    """``p ◁_d q`` as the equalizer of ``ρ_p ◁ q`` and ``p ◁ λ_q``.

    Positions of the plain composite ``p ◁ q`` are kept when the two maps
    into ``p ◁ d ◁ q`` agree on them; the directions of a kept position are
    the coequalizer of the two direction maps. Exponential, and only used
    to cross-check ``compose_bicomodules``.
    """
    _check_frames(p, q)
    P, Q = p.carrier(), q.carrier()
    d = p.right.carrier
    rho, lam = p.right_coaction(), q.left_coaction()
    via_rho = tri_morphisms(rho, identity_morphism(Q)).then(associator(P, d, Q))
    via_lam = tri_morphisms(identity_morphism(P), lam)
    E = q.right.category

    operations = {}
    degrees = {}
    classes = {}
    for I in p.operations(bound):
        budget = None if bound is None else bound - p.degree(I)
        keys = P.directions(I)
        for J in _functions(keys, q.operations(budget), q.degree, budget):
            position = (I, J)
            if via_rho(position) != via_lam(position):
                continue
            A, rep = _coequalized_directions(p, q, I, J, via_rho, via_lam, position, E)
            operations[position] = (p.output(I), A)
            degrees[position] = p.degree(I) + sum(q.degree(x) for x in J.values())
            classes[position] = rep

    act = {}
    restrict = {}
    C = p.left.category
    for (I, J) in operations:
        for f in C.non_identity_out(p.output(I)):
            r = p.restrict(f, I)
            image = (p.act(f, I), FrozenMap({k: J((k[0], w)) for k, w in r.items()}))
            act[(f, (I, J))] = image
            target = classes[(I, J)]
            restrict[(f, (I, J))] = {(F, (z, w)): target[(F, (z[0], r(z)), w)]
                                     for F, (z, w) in operations[image][1].all_elements()}
    result = FiniteBicomodule(p.left, q.right, operations, act, restrict, degrees,
                              name=name or f"eq({p.name}◁{q.name})")
    result.is_finite = p.is_finite and q.is_finite
    logger.info("equalizer oracle %s: %d operations", result.name, len(operations))
    return result


def _coequalized_directions(p, q, I, J, via_rho, via_lam, position, E):
    """Quotient of ``Σ_z q[J z]`` identifying the two direction maps."""
    nodes = [(F, z, w) for z in J.keys() for F, w in q.arity(J(z)).all_elements()]
    ds = DisjointSet(nodes)
    image = via_rho(position)
    for z, (_, inner) in image[1].items():
        for g, Jzg in inner.items():
            for F, w in q.arity(Jzg).all_elements():
                d = (z, (g, (F, w)))
                z1, (F1, w1) = via_rho.sharp(position, d)
                z2, (F2, w2) = via_lam.sharp(position, d)
                ds.merge((F1, z1, w1), (F2, z2, w2))
    rep = {}
    sets = {a: [] for a in E.objects}
    for subset in ds.subsets():
        F, z, w = least(subset)
        sets[F].append((z, w))
        for node in subset:
            rep[node] = (z, w)
    action = {}
    for h in E.morphisms:
        if E.is_identity(h):
            continue
        a, b = E.ends(h)
        action[h] = {(z, w): rep[(b, z, q.arity(J(z)).act(h, w))] for z, w in sets[a]}
    A = Copresheaf(E, sets, action, name=f"eq[{label(position)}]", check=False)
    return A, rep
