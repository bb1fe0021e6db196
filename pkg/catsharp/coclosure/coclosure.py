"""The right coclosure ``[p, q]`` and its adjunction with ``- ◁ q``.

For ``p: c ↛ e`` and ``q: d ↛ e`` the coclosure ``[p, q]: c ↛ d`` has the
operations of ``p`` and arity ``q ◁_e p[I]`` at ``I``. Maps
``[p, q] -> r`` correspond to maps ``p -> r ◁ q``.
"""
import logging

from ..comod import (
    Bicomodule,
    BicomoduleMap,
    CompositeBicomodule,
    enumerate_bicomodule_maps,
    identity_map_of,
    maps_equal,
    whisker_right,
)
from ..fincat import same_category
from ..utils import FrameMismatch, FrozenMap, Report, meet_all, memoize_method, sort_ids

logger = logging.getLogger(__name__)


class Coclosure(Bicomodule):
    """``[p, q]`` with arities enumerated at ``bound``.

    Args:
        p (Bicomodule): ``c ↛ e``
        q (Bicomodule): ``d ↛ e``
        bound (int, optional): degree bound for the arities ``q ◁ p[I]``
        selection (iterable, optional): operations of ``q`` to use in every
            arity instead of a degree budget; must be closed under the left
            action of ``d``
        operations (iterable, optional): restrict ``[p, q]`` to these
            operations of ``p``; must be closed under the left action of ``c``
    """

    def __init__(self, p, q, bound=None, selection=None, operations=None, name=None):
        if not same_category(p.right.category, q.right.category):
            raise FrameMismatch(f"[{p.name}, {q.name}]: {p.name} and {q.name} end at different comonoids")
        super().__init__(p.left, q.left, name=name or f"[{p.name},{q.name}]")
        self.p = p
        self.q = q
        self.bound = bound
        self.selection = None if selection is None else sort_ids(selection)
        self.restricted_to = None if operations is None else sort_ids(operations)
        self.is_finite = p.is_finite or self.restricted_to is not None

    def _operations(self, bound):
        if self.restricted_to is not None:
            return (I for I in self.restricted_to if bound is None or self.p.degree(I) <= bound)
        return self.p.operations(bound)

    def output(self, I):
        return self.p.output(I)

    def degree(self, I):
        return self.p.degree(I)

    @memoize_method
    def arity(self, I):
        A = self.p.arity(I)
        return self.q.apply(A, self.bound, outer=self.selection, name=f"{self.q.name}◁{A.name}")

    def act(self, f, I):
        return self.p.act(f, I)

    @memoize_method
    def restrict(self, f, I):
        lift = self.q.fmap(self.p.restrict(f, I))
        return FrozenMap({(D, k): lift(k) for D, k in self.arity(self.act(f, I)).all_elements()})

    def exactness_at(self, bound):
        ops = self.operations(bound)
        outer = [] if self.restricted_to is not None else [self.p.exactness_at(bound)]
        return meet_all(outer + [self.arity(I).exactness for I in ops])


def coclosure(p, q, bound=None, selection=None, operations=None, name=None):
    """``[p, q]`` and its unit ``p -> [p, q] ◁ q``."""
    cc = Coclosure(p, q, bound=bound, selection=selection, operations=operations, name=name)
    return cc, coclosure_unit(cc)


def coclosure_unit(cc):
    """``η: p -> [p, q] ◁ q``, sending ``I`` to ``(I, k ↦ q-operation of k)``."""
    p, q = cc.p, cc.q
    square = CompositeBicomodule(cc, q)

    def on_operations(I):
        return (I, FrozenMap({(D, k): q.split(k)[0] for D, k in cc.arity(I).all_elements()}))

    def on_arities(I):
        table = {}
        for E, (z, w) in square.arity(on_operations(I)).all_elements():
            _, h = q.split(z[1])
            table[(E, (z, w))] = h((E, w))
        return FrozenMap(table)

    dom = p if cc.restricted_to is None else _RestrictedOperations(p, cc.restricted_to)
    return BicomoduleMap(dom, square, on_operations, on_arities, name=f"η_{cc.name}")


class _RestrictedOperations(Bicomodule):
    """``p`` with only the given operations; everything else delegates."""

    is_finite = True

    def __init__(self, p, operations):
        super().__init__(p.left, p.right, name=p.name)
        self.p = p
        self._selected = sort_ids(operations)

    def _operations(self, bound):
        return (I for I in self._selected if bound is None or self.p.degree(I) <= bound)

    def output(self, I):
        return self.p.output(I)

    def degree(self, I):
        return self.p.degree(I)

    def arity(self, I):
        return self.p.arity(I)

    def act(self, f, I):
        return self.p.act(f, I)

    def restrict(self, f, I):
        return self.p.restrict(f, I)

    def split(self, elem):
        return self.p.split(elem)

    def join(self, I, h):
        return self.p.join(I, h)


def transpose(f, cc):
    """``f: [p, q] -> r`` to ``(f ◁ q) ∘ η: p -> r ◁ q``."""
    if f.dom is not cc:
        raise FrameMismatch(f"{f.name} does not start at {cc.name}")
    return coclosure_unit(cc).then(whisker_right(f, cc.q))


def untranspose(g, cc, r):
    """``g: p -> r ◁ q`` to the unique ``ĝ: [p, q] -> r`` with
    ``(ĝ ◁ q) ∘ η = g``."""
    q = cc.q
    composite = CompositeBicomodule(r, q)

    def on_operations(I):
        return g(I)[0]

    def on_arities(I):
        R, J = g(I)
        colim = composite.colimit((R, J))
        s = g.sharp(I)
        table = {}
        for D, z in r.arity(R).all_elements():
            Jz = J((D, z))
            h = FrozenMap({(F, w): s((F, colim.cls(F, (D, z), w)))
                           for F, w in q.arity(Jz).all_elements()})
            table[(D, z)] = q.join(Jz, h)
        return FrozenMap(table)

    return BicomoduleMap(cc, r, on_operations, on_arities, name=f"{g.name}^♭")


def coclosure_counit(r, q, bound=None, selection=None):
    """``ε: [r ◁ q, q] -> r``, the transpose of the identity of ``r ◁ q``."""
    rq = CompositeBicomodule(r, q)
    cc = Coclosure(rq, q, bound=bound, selection=selection)
    eps = untranspose(identity_map_of(rq), cc, r)
    eps.name = f"ε_{r.name}"
    return eps


def coclosure_map(gamma, q, bound=None, selection=None):
    """``[γ, q]: [p, q] -> [p', q]`` for ``γ: p -> p'``."""
    dom = Coclosure(gamma.dom, q, bound=bound, selection=selection)
    cod = Coclosure(gamma.cod, q, bound=bound, selection=selection)

    def on_arities(I):
        lift = q.fmap(gamma.sharp(I))
        return FrozenMap({(D, k): lift(k) for D, k in cod.arity(gamma(I)).all_elements()})

    return BicomoduleMap(dom, cod, gamma, on_arities, name=f"[{gamma.name},{q.name}]")


def check_triangles(p, q, r, bound=None, selection=None):
    """Both triangle identities at ``bound``, in the frames of
    ``check_adjunction``: ``(ε_r ◁ q) ∘ η_{r◁q} = id`` on ``r ◁ q`` for
    ``r: c ↛ d``, and ``ε_{[p,q]} ∘ [η_p, q] = id`` on ``[p, q]`` for
    ``p: c ↛ e``."""
    report = Report(f"triangles {p.name}, {q.name}, {r.name}", bound=bound)

    rq = CompositeBicomodule(r, q)
    cc = Coclosure(rq, q, bound=bound, selection=selection)
    eps = coclosure_counit(r, q, bound=bound, selection=selection)
    first = coclosure_unit(cc).then(whisker_right(eps, q))
    report.add(maps_equal(first, identity_map_of(rq), bound, law="unit-counit"))

    cc = Coclosure(p, q, bound=bound, selection=selection)
    eta = coclosure_unit(cc)
    lifted = coclosure_map(eta, q, bound=bound, selection=selection)
    eps = coclosure_counit(cc, q, bound=bound, selection=selection)
    second = lifted.then(eps)
    report.add(maps_equal(second, identity_map_of(cc), bound, law="counit-unit"))
    logger.info("%s", report.summary())
    return report


def check_adjunction(p, q, r, bound=None, selection=None):
    """Counts maps on both sides of the adjunction and checks that
    transposition is a bijection between them."""
    cc = Coclosure(p, q, bound=bound, selection=selection)
    rq = CompositeBicomodule(r, q)
    left = list(enumerate_bicomodule_maps(cc, r, bound))
    right = list(enumerate_bicomodule_maps(p, rq, bound))
    report = Report(f"[{p.name},{q.name}] -> {r.name} vs {p.name} -> {rq.name}", bound=bound,
                    exactness=cc.exactness_at(bound))
    report.expect(len(left) == len(right), "bijection", (len(left), len(right)),
                  f"{len(left)} maps out of the coclosure, {len(right)} into the composite")
    for f in left:
        back = untranspose(transpose(f, cc), cc, r)
        report.add(maps_equal(back, f, bound, law="round-trip"))
    for g in right:
        there = transpose(untranspose(g, cc, r), cc)
        report.add(maps_equal(there, g, bound, law="round-trip"))
    logger.info("%s", report.summary())
    return report
