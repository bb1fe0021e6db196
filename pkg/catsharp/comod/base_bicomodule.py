"""Bicomodules ``p: c ↛ d`` in their familial form.

A bicomodule is described by its operations, each sitting over an object of
``c`` with a degree and an arity copresheaf on ``d``, together with the
left action of ``c`` on operations and the restriction maps between arities
that the action induces. The carrier polynomial and both coactions are
derived from this data.
"""
import logging
from abc import ABC, abstractmethod

from ..fincat import (
    Copresheaf,
    check_copresheaf,
    check_copresheaf_map,
    identity_map,
    iter_copresheaf_maps,
    map_weight,
    same_category,
)
from ..poly import (
    CompositePolynomial,
    Polynomial,
    PolyMorphism,
    associator,
    compare_morphisms,
    identity_morphism,
    left_unitor_inverse,
    right_unitor_inverse,
    tri_morphisms,
)
from ..utils import EXACT, BoundExhausted, Exactness, FrozenMap, Report, label, sort_ids
from .comonoid import as_comonoid

logger = logging.getLogger(__name__)


class PositionsCopresheaf:
    """``p(1)`` as a graded copresheaf on the left base.

    Follows the copresheaf protocol used by hom enumeration: weights are
    operation degrees, so a budget bounds the summed degree of a map.
    """

    is_finite = False

    def __init__(self, p):
        self.p = p
        self.base = p.left.category
        self.name = f"{p.name}(1)"

    def elements(self, a):
        return self.p.operations_over(a)

    def elements_over(self, a, budget=None):
        return self.p.operations_over(a, budget)

    def act(self, f, I):
        return self.p.act(f, I)

    def weight(self, a, I):
        return self.p.degree(I)

    def exactness_at(self, budget):
        return self.p.exactness_at(budget)


class BicomoduleCarrier(Polynomial):
    """Carrier polynomial ``Σ_I y^{p[I]}``; directions are ``(object, element)``."""

    def __init__(self, p):
        self.p = p
        self.name = p.name
        self.is_finite = p.is_finite

    def positions(self, bound=None):
        return self.p.operations(bound)

    def directions(self, position):
        return tuple(self.p.arity(position).all_elements())

    def degree(self, position):
        return self.p.degree(position)

    def exactness_at(self, bound):
        return self.p.exactness_at(bound)


class Bicomodule(ABC):
    """Base class of ``(c, d)``-bicomodules.

    Args:
        left, right (Comonoid or FinCategory): the frames ``c`` and ``d``
        name (str): display name

    Subclasses provide ``_operations``, ``output``, ``degree``, ``arity``,
    ``act`` and ``restrict``. Elements of ``p(X)`` are pairs ``(I, h)`` with
    ``h`` a FrozenMap ``p[I] -> X``; composites override ``split`` and
    ``join`` to convert their own element form to that one.
    """

    is_finite = False

    def __init__(self, left, right, name="p"):
        self.left = as_comonoid(left)
        self.right = as_comonoid(right)
        self.name = name
        self._ops_cache = {}
        self._over_cache = {}

    @abstractmethod
    def _operations(self, bound):
        """Iterate over the operations of degree at most ``bound``."""

    @abstractmethod
    def output(self, I):
        """The object of ``c`` the operation sits over."""

    @abstractmethod
    def degree(self, I):
        pass

    @abstractmethod
    def arity(self, I):
        """The arity copresheaf ``p[I]`` on ``d``."""

    @abstractmethod
    def act(self, f, I):
        """``f · I`` for ``f`` out of ``output(I)``."""

    @abstractmethod
    def restrict(self, f, I):
        """FrozenMap ``p[f · I] -> p[I]`` keyed by ``(object, element)``."""

    def operations(self, bound=None):
        if bound is None and not self.is_finite:
            raise BoundExhausted(f"{self.name} has infinitely many operations; give a bound")
        try:
            return self._ops_cache[bound]
        except KeyError:
            ops = self._ops_cache[bound] = sort_ids(self._operations(bound))
            return ops

    def operations_over(self, a, bound=None):
        key = (a, bound)
        try:
            return self._over_cache[key]
        except KeyError:
            ops = tuple(I for I in self.operations(bound) if self.output(I) == a)
            self._over_cache[key] = ops
            return ops

    def exactness_at(self, bound):
        if self.is_finite:
            return EXACT
        return Exactness.truncated(bound)

    def degree_cap(self, X):
        """Largest degree of an operation admitting a map ``p[I] -> X``, or
        None when no cap is known."""
        if self.is_finite:
            return max((self.degree(I) for I in self.operations()), default=0)
        return None

    def positions(self):
        return PositionsCopresheaf(self)

    def carrier(self):
        try:
            return self.__dict__["_carrier"]
        except KeyError:
            carrier = self.__dict__["_carrier"] = BicomoduleCarrier(self)
            return carrier

    def split(self, elem):
        return elem

    def join(self, I, h):
        return (I, h)

    def act_element(self, f, I, h):
        """``f · (I, h) = (f · I, h ∘ restrict(f, I))`` in split form."""
        r = self.restrict(f, I)
        return self.act(f, I), FrozenMap({k: h((k[0], w)) for k, w in r.items()})

    def apply(self, X, bound=None, outer=None, name=None):
        """``p ◁_d X`` as a copresheaf on ``c``.

        Args:
            X (Copresheaf): a copresheaf on ``d``
            bound (int, optional): bound on the total degree of an element,
                the degree of its operation plus the weights of its values
            outer (iterable, optional): use exactly these operations and no
                degree budget; the selection must be closed under the action
        """
        C = self.left.category
        if outer is None:
            ops = self.operations(bound)
            budgeted = bound is not None
        else:
            ops = sort_ids(outer)
            budgeted = False
        sets = {a: [] for a in C.objects}
        split_form = {}
        weights = {}
        for I in ops:
            a = self.output(I)
            budget = bound - self.degree(I) if budgeted else None
            for h in iter_copresheaf_maps(self.arity(I), X, budget=budget):
                elem = self.join(I, h)
                split_form[elem] = (I, h)
                sets[a].append(elem)
                w = self.degree(I) + map_weight(h, X)
                if w:
                    weights[(a, elem)] = w
        action = {}
        for f in C.morphisms:
            if C.is_identity(f):
                continue
            table = {}
            for elem in sets[C.src(f)]:
                table[elem] = self.join(*self.act_element(f, *split_form[elem]))
            action[f] = table
        Y = Copresheaf(C, sets, action, weights, name=name or f"{self.name}◁{X.name}",
                       check=outer is not None)
        Y.with_exactness(self._apply_exactness(X, bound, budgeted))
        logger.debug("applied %s to %s: %s", self.name, X.name, Y.sizes())
        return Y

    def _apply_exactness(self, X, bound, budgeted):
        if not budgeted:
            return X.exactness
        cap = self.degree_cap(X)
        if cap is not None and cap <= bound and not X.is_weighted:
            return X.exactness
        return X.exactness.meet(Exactness.truncated(bound))

    def fmap(self, h):
        """``p(h)`` on elements, for ``h`` keyed by ``(object, element)``."""

        def mapped(elem):
            I, g = self.split(elem)
            return self.join(I, FrozenMap({k: h((k[0], x)) for k, x in g.items()}))

        return mapped

    def left_coaction(self):
        """``λ: p -> c ◁ p``."""
        C = self.left.category
        P = self.carrier()
        return PolyMorphism(
            P,
            CompositePolynomial(self.left.carrier, P),
            lambda I: (self.output(I), FrozenMap({f: self.act(f, I) for f in C.out(self.output(I))})),
            lambda I, d: (d[1][0], self.restrict(d[0], I)(d[1])),
            name=f"λ_{self.name}",
        )

    def right_coaction(self):
        """``ρ: p -> p ◁ d``."""
        D = self.right.category
        P = self.carrier()
        return PolyMorphism(
            P,
            CompositePolynomial(P, self.right.carrier),
            lambda I: (I, FrozenMap({(E, w): E for E, w in self.arity(I).all_elements()})),
            lambda I, d: (D.tgt(d[1]), self.arity(I).act(d[1], d[0][1])),
            name=f"ρ_{self.name}",
        )

    def __repr__(self):
        return f"{type(self).__name__}({self.name}: {self.left.name} ↛ {self.right.name})"


def _check_operation(report, p, I):
    C, D = p.left.category, p.right.category
    a = p.output(I)
    if not report.expect(a in C.objects, "output", label(I), f"{label(a)} is not an object"):
        return
    A = p.arity(I)
    if not report.expect(A.base is D or same_category(A.base, D), "arity-base", label(I)):
        return
    for v in check_copresheaf(A).all_violations():
        report.fail("arity", (label(I), v.where), v.law)
    report.expect(p.act(C.identity(a), I) == I, "act-identity", label(I))
    report.expect(p.restrict(C.identity(a), I) == identity_map(A), "restrict-identity", label(I))
    for f in C.non_identity_out(a):
        J = p.act(f, I)
        if not report.expect(p.output(J) == C.tgt(f), "act-typing", (label(f), label(I))):
            continue
        report.expect(p.degree(J) <= p.degree(I), "act-degree", (label(f), label(I)),
                      f"{p.degree(J)} > {p.degree(I)}")
        r = p.restrict(f, I)
        for v in check_copresheaf_map(r, p.arity(J), A).all_violations():
            report.fail("restrict-" + v.law, (label(f), label(I), v.where))
        for g in C.out(C.tgt(f)):
            fg = C.compose(f, g)
            K = p.act(g, J)
            if not report.expect(K == p.act(fg, I), "act-functoriality", (label(f), label(g), label(I))):
                continue
            r2, r12 = p.restrict(g, J), p.restrict(fg, I)
            for k, w in r12.items():
                report.expect(w == r((k[0], r2(k))), "restrict-functoriality",
                              (label(f), label(g), label(I), label(k)))


def check_bicomodule(p, bound=None):
    """Familial laws of every operation of degree at most ``bound``, then the
    coaction laws as polynomial morphism equations."""
    report = Report(f"bicomodule {p.name}", bound=bound, exactness=p.exactness_at(bound))
    ops = p.operations(bound)
    familial = report.add(Report("familial", bound=bound))
    for I in ops:
        try:
            _check_operation(familial, p, I)
        except KeyError as e:
            familial.fail("totality", label(I), f"missing {e}")
    if not familial.ok:
        return report

    coactions = report.add(Report("coactions", bound=bound))
    c, d = p.left.carrier, p.right.carrier
    P = p.carrier()
    lam, rho = p.left_coaction(), p.right_coaction()
    idP, idc, idd = identity_morphism(P), identity_morphism(c), identity_morphism(d)
    compare_morphisms(coactions, "left-counit", lam.then(tri_morphisms(p.left.counit, idP)),
                      left_unitor_inverse(P), ops)
    compare_morphisms(coactions, "left-coassociativity",
                      lam.then(tri_morphisms(p.left.comult, idP)).then(associator(c, c, P)),
                      lam.then(tri_morphisms(idc, lam)), ops)
    compare_morphisms(coactions, "right-counit", rho.then(tri_morphisms(idP, p.right.counit)),
                      right_unitor_inverse(P), ops)
    compare_morphisms(coactions, "right-coassociativity",
                      rho.then(tri_morphisms(rho, idd)).then(associator(P, d, d)),
                      rho.then(tri_morphisms(idP, p.right.comult)), ops)
    compare_morphisms(coactions, "coactions-commute",
                      lam.then(tri_morphisms(idc, rho)),
                      rho.then(tri_morphisms(lam, idd)).then(associator(c, P, d)), ops)
    return report
