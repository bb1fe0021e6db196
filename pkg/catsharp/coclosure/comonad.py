"""Comonads on a comonoid, presented elementwise, and their comonoids.

A comonad ``e: d ↛ d`` is described by what its counit and
comultiplication do to arity elements: an element ``k`` of ``e[I]`` behaves
like a morphism out of ``I`` ending at the operation ``cod(I, k)``; the
counit lifts morphisms of ``d`` to such elements and the comultiplication
composes them.
"""
import logging

from tqdm import tqdm

from ..comod import (
    Bicomodule,
    BicomoduleMap,
    CompositeBicomodule,
    IdentityBicomodule,
    as_comonoid,
    check_bicomodule,
    check_square,
    comonoid_from_category,
    cofunctor,
)
from ..fincat import FinCategory, check_category
from ..utils import ComoduleLawViolation, FrozenMap, LawViolation, Report, label, memoize_method
from .coclosure import Coclosure

logger = logging.getLogger(__name__)


class ComonadOnObject:
    """A comonad ``e: d ↛ d`` in elementwise form.

    Args:
        carrier (Bicomodule): ``e``
        counit_sharp (callable): ``(I, f) -> k``, for ``f`` a morphism of
            ``d`` out of the output of ``I`` ending at ``D``, an element of
            ``e[I]`` over ``D``
        comult_cod (callable): ``(I, k) -> J``, the operation at the end of ``k``
        comult_sharp (callable): ``(I, k, l) -> kl`` for ``l`` in
            ``e[cod(I, k)]``
    """

    def __init__(self, carrier, counit_sharp, comult_cod, comult_sharp, name=None):
        self.carrier = carrier
        self.base = carrier.left
        self.counit_sharp = counit_sharp
        self.comult_cod = comult_cod
        self.comult_sharp = comult_sharp
        self.name = name or carrier.name

    def operations(self, bound=None):
        return self.carrier.operations(bound)

    def counit_map(self):
        """``ε: e -> d``."""
        e = self.carrier
        d = IdentityBicomodule(self.base)

        def on_arities(I):
            return FrozenMap({(D, f): self.counit_sharp(I, f) for D, f in d.arity(e.output(I)).all_elements()})

        return BicomoduleMap(e, d, e.output, on_arities, name=f"ε_{self.name}")

    def comult_map(self):
        """``δ: e -> e ◁ e``."""
        e = self.carrier
        square = CompositeBicomodule(e, e)

        def on_operations(I):
            return (I, FrozenMap({(D, k): self.comult_cod(I, k) for D, k in e.arity(I).all_elements()}))

        def on_arities(I):
            table = {}
            for F, (z, w) in square.arity(on_operations(I)).all_elements():
                table[(F, (z, w))] = self.comult_sharp(I, z[1], w)
            return FrozenMap(table)

        return BicomoduleMap(e, square, on_operations, on_arities, name=f"δ_{self.name}")

    def __repr__(self):
        return f"ComonadOnObject({self.name} on {self.base.name})"


def identity_comonad(d):
    d = as_comonoid(d)
    C = d.category
    return ComonadOnObject(IdentityBicomodule(d), lambda I, f: f, lambda I, k: C.tgt(k),
                           lambda I, k, l: C.compose(k, l), name=f"id_{d.name}")


def _default_selection(p, bound, selection, operations):
    """Operations of degree at most ``bound``, used both as the objects and
    as the outer operations of every arity."""
    if operations is None:
        operations = p.operations(bound)
    if selection is None:
        selection = operations
    return operations, selection


def endo_comonad(p, bound=None, selection=None, operations=None):
    """``[p, p]``: elements of ``[p, p][I]`` are ``(J, g)`` with
    ``g: p[J] -> p[I]``; composition composes the maps."""
    operations, selection = _default_selection(p, bound, selection, operations)
    e = Coclosure(p, p, bound=bound, selection=selection, operations=operations)

    def counit_sharp(I, f):
        return p.join(p.act(f, I), p.restrict(f, I))

    def comult_cod(I, k):
        return p.split(k)[0]

    def comult_sharp(I, k, l):
        _, g = p.split(k)
        K, h = p.split(l)
        return p.join(K, FrozenMap({x: g((x[0], w)) for x, w in h.items()}))

    return ComonadOnObject(e, counit_sharp, comult_cod, comult_sharp, name=e.name)


def coclosure_comonad(p, m, bound=None, selection=None, operations=None):
    """``[p, p ◁ m]`` for ``p: d ↛ c`` and a familial monad ``m`` on ``c``.

    An element of ``[p, p ◁ m][I]`` is ``(J, g)`` with ``g: p[J] -> m ◁ p[I]``,
    a Kleisli map. The counit sends ``f`` to ``f · I`` with the restriction
    followed by the unit of ``m``; the comultiplication is Kleisli
    composition.
    """
    operations, selection = _default_selection(p, bound, selection, operations)
    q = CompositeBicomodule(p, m.carrier)
    e = Coclosure(p, q, bound=bound, selection=selection, operations=operations,
                  name=f"[{p.name},{p.name}◁{m.name}]")

    def counit_sharp(I, f):
        A = p.arity(I)
        r = p.restrict(f, I)
        return p.join(p.act(f, I), FrozenMap({k: m.unit_at(A, k[0], w) for k, w in r.items()}))

    def comult_cod(I, k):
        return p.split(k)[0]

    def comult_sharp(I, k, l):
        _, g = p.split(k)
        K, h = p.split(l)
        lift = m.fmap(g)
        return p.join(K, FrozenMap({x: m.mult_at(lift(v)) for x, v in h.items()}))

    return ComonadOnObject(e, counit_sharp, comult_cod, comult_sharp, name=e.name)


def check_comonad(E, bound=None, squares=True, coassociativity=True, progress=True):
    """Counit, coassociativity and compatibility with ``d`` of the comonad
    ``E`` on every operation of degree at most ``bound``.

    Every element produced by the counit or the comultiplication must also
    be an enumerated arity element. With ``coassociativity`` off the
    triple loop is skipped; ``comonad_to_comonoid`` checks the same law as
    associativity of the decoded table.
    """
    e = E.carrier
    C = E.base.category
    ops = e.operations(bound)
    report = Report(f"comonad {E.name}", bound=bound, exactness=e.exactness_at(bound))
    report.add(check_bicomodule(e, bound))
    laws = report.add(Report("laws", bound=bound))
    for I in tqdm(ops, desc=f"comonad laws {E.name}", disable=None if progress else True, leave=False):
        A = e.arity(I)
        a = e.output(I)
        for D, f in [(C.tgt(f), f) for f in C.out(a)]:
            k = E.counit_sharp(I, f)
            if not laws.expect(A.has_element(D, k), "counit-typing", (label(I), label(f))):
                continue
            laws.expect(E.comult_cod(I, k) == e.act(f, I), "counit-codomain", (label(I), label(f)))
        unit = E.counit_sharp(I, C.identity(a))
        for D, k in A.all_elements():
            J = E.comult_cod(I, k)
            if e.output(J) != D:
                laws.fail("codomain-typing", (label(I), label(k)))
                continue
            left = E.comult_sharp(I, unit, k)
            right = E.comult_sharp(I, k, E.counit_sharp(J, C.identity(D)))
            laws.checked += 2
            if left != k:
                laws.fail("left-counit", (label(I), label(k)), f"{label(left)}")
            if right != k:
                laws.fail("right-counit", (label(I), label(k)), f"{label(right)}")
            if coassociativity:
                _check_coassociativity(laws, E, I, A, k, J)
        for f in C.out(a):
            for g in C.out(C.tgt(f)):
                lhs = E.counit_sharp(I, C.compose(f, g))
                rhs = E.comult_sharp(I, E.counit_sharp(I, f), E.counit_sharp(e.act(f, I), g))
                laws.expect(lhs == rhs, "counit-functoriality", (label(I), label(f), label(g)))
    if squares and laws.ok:
        report.add(check_square(E.counit_map(), bound))
        report.add(check_square(E.comult_map(), bound))
    logger.info("%s", report.summary())
    return report


def _check_coassociativity(laws, E, I, A, k, J):
    e = E.carrier
    for D2, l in e.arity(J).all_elements():
        kl = E.comult_sharp(I, k, l)
        laws.checked += 1
        if not A.has_element(D2, kl):
            laws.fail("comultiplication-typing", (label(I), label(k), label(l)))
            continue
        K = E.comult_cod(J, l)
        if E.comult_cod(I, kl) != K:
            laws.fail("comultiplication-codomain", (label(I), label(k), label(l)))
        for _, n in e.arity(K).all_elements():
            laws.checked += 1
            if E.comult_sharp(I, kl, n) != E.comult_sharp(I, k, E.comult_sharp(J, l, n)):
                laws.fail("coassociativity", (label(I), label(k), label(l), label(n)))


def comonad_to_comonoid(E, bound=None, check=True):
    """The category whose objects are the operations of ``E`` and whose
    morphisms out of ``I`` are ``(I, k)`` for ``k`` in ``e[I]``, with the
    cofunctor to ``d`` sending ``I`` to its output.

    Raises:
        LawViolation: the comonad laws fail, or a composite leaves the
            enumerated arities
    """
    if check:
        check_comonad(E, bound, squares=False, coassociativity=False, progress=False).raise_if_failed()
    e = E.carrier
    d = E.base
    objects = e.operations(bound)
    morphisms = {}
    for I in objects:
        for _, k in e.arity(I).all_elements():
            morphisms[(I, k)] = (I, E.comult_cod(I, k))
    identities = {I: (I, E.counit_sharp(I, d.category.identity(e.output(I)))) for I in objects}
    composition = {}
    for (I, k), (_, J) in morphisms.items():
        if J not in e.operations_over(e.output(J), bound):
            raise LawViolation(f"{E.name}: {label(k)} ends at {label(J)}, outside the enumerated operations")
        for _, l in e.arity(J).all_elements():
            kl = (I, E.comult_sharp(I, k, l))
            if kl not in morphisms:
                raise LawViolation(f"{E.name}: composite of {label(k)} and {label(l)} is not an enumerated element")
            composition[((I, k), (J, l))] = kl
    C = FinCategory(objects, morphisms, identities, composition, name=f"cat {E.name}")
    if check:
        check_category(C, progress=False).raise_if_failed()
    comonoid = comonoid_from_category(C, name=C.name)
    phi = cofunctor(comonoid, d, e.output, lambda I, f: (I, E.counit_sharp(I, f)), name=f"π_{E.name}")
    logger.info("comonoid of %s: %d objects, %d morphisms", E.name, len(objects), len(morphisms))
    return comonoid, phi


class LeftComodule:
    """A left ``E``-comodule structure on ``p: c ↛ d``.

    Args:
        p (Bicomodule)
        E (ComonadOnObject): a comonad on ``c``
        coaction_op (callable): ``I -> A``, an operation of ``E`` over the
            output of ``I``
        coaction_act (callable): ``(I, k) -> k · I`` for ``k`` in ``e[A]``
        coaction_restrict (callable): ``(I, k) ->`` FrozenMap
            ``p[k · I] -> p[I]``
    """

    def __init__(self, p, E, coaction_op, coaction_act, coaction_restrict, name=None):
        self.p = p
        self.E = E
        self.coaction_op = coaction_op
        self.coaction_act = coaction_act
        self.coaction_restrict = coaction_restrict
        self.name = name or f"{E.name}⟲{p.name}"


def check_comodule(M, bound=None):
    """Counit and coassociativity of the coaction, and agreement of its
    counit part with the left action of ``c`` on ``p``."""
    p, E = M.p, M.E
    e = E.carrier
    C = p.left.category
    report = Report(f"comodule {M.name}", bound=bound)
    for I in p.operations(bound):
        A = M.coaction_op(I)
        a = p.output(I)
        if not report.expect(e.output(A) == a, "coaction-typing", label(I)):
            continue
        for f in C.out(a):
            k = E.counit_sharp(A, f)
            report.expect(M.coaction_act(I, k) == p.act(f, I), "counit", (label(I), label(f)))
            report.expect(M.coaction_restrict(I, k) == p.restrict(f, I), "counit-restrict",
                          (label(I), label(f)))
        for D, k in e.arity(A).all_elements():
            I2 = M.coaction_act(I, k)
            if not report.expect(p.output(I2) == D and M.coaction_op(I2) == E.comult_cod(A, k),
                                 "coaction-codomain", (label(I), label(k))):
                continue
            r1 = M.coaction_restrict(I, k)
            for _, l in e.arity(M.coaction_op(I2)).all_elements():
                kl = E.comult_sharp(A, k, l)
                I3 = M.coaction_act(I2, l)
                if not report.expect(M.coaction_act(I, kl) == I3, "coassociativity",
                                     (label(I), label(k), label(l))):
                    continue
                r2, r12 = M.coaction_restrict(I2, l), M.coaction_restrict(I, kl)
                for x, w in r12.items():
                    report.expect(w == r1((x[0], r2(x))), "coassociativity-restrict",
                                  (label(I), label(k), label(l), label(x)))
    return report


class TransferredBicomodule(Bicomodule):
    """``p`` re-read over the comonoid of ``E``: same operations and arities,
    output ``coaction_op`` and the left action by the coaction."""

    def __init__(self, M, comonoid, name=None):
        super().__init__(comonoid, M.p.right, name=name or f"{M.p.name}^{M.E.name}")
        self.module = M
        self.is_finite = M.p.is_finite

    def _operations(self, bound):
        return self.module.p.operations(bound)

    def output(self, I):
        return self.module.coaction_op(I)

    def degree(self, I):
        return self.module.p.degree(I)

    def arity(self, I):
        return self.module.p.arity(I)

    def act(self, f, I):
        if self.left.category.is_identity(f):
            return I
        return self.module.coaction_act(I, f[1])

    @memoize_method
    def restrict(self, f, I):
        if self.left.category.is_identity(f):
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        return FrozenMap(self.module.coaction_restrict(I, f[1]))

    def split(self, elem):
        return self.module.p.split(elem)

    def join(self, I, h):
        return self.module.p.join(I, h)


def comodule_transfer(M, bound=None, comonoid=None, check=True):
    """A left ``E``-comodule ``c ↛ d`` as a bicomodule from the comonoid of
    ``E`` to ``d``, carrier unchanged.

    Raises:
        ComoduleLawViolation: the coaction is not counital or coassociative
    """
    if check:
        check_comodule(M, bound).raise_if_failed(ComoduleLawViolation)
    if comonoid is None:
        comonoid, _ = comonad_to_comonoid(M.E, bound, check=check)
    return TransferredBicomodule(M, comonoid)


class RestrictedBicomodule(Bicomodule):
    """A bicomodule over the comonoid of ``E`` read back over ``c`` along the
    cofunctor: ``f · I`` is the action of the lift of ``f``."""

    def __init__(self, q, E, name=None):
        super().__init__(E.base, q.right, name=name or f"{q.name}|{E.base.name}")
        self.q = q
        self.E = E
        self.is_finite = q.is_finite

    def _operations(self, bound):
        return self.q.operations(bound)

    def output(self, I):
        return self.E.carrier.output(self.q.output(I))

    def degree(self, I):
        return self.q.degree(I)

    def arity(self, I):
        return self.q.arity(I)

    def _lift(self, I, f):
        A = self.q.output(I)
        return (A, self.E.counit_sharp(A, f))

    def act(self, f, I):
        return self.q.act(self._lift(I, f), I)

    def restrict(self, f, I):
        return self.q.restrict(self._lift(I, f), I)

    def split(self, elem):
        return self.q.split(elem)

    def join(self, I, h):
        return self.q.join(I, h)


def comodule_untransfer(q, E):
    """Inverse of ``comodule_transfer``: a bicomodule out of the comonoid of
    ``E`` (morphisms ``(A, k)``) as a left ``E``-comodule over ``c``."""
    p = RestrictedBicomodule(q, E)
    return LeftComodule(
        p, E,
        q.output,
        lambda I, k: q.act((q.output(I), k), I),
        lambda I, k: q.restrict((q.output(I), k), I),
        name=f"{E.name}⟲{q.name}",
    )
