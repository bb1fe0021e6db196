"""Polynomial comonoids and the categories they encode."""
import logging

from ..fincat import FinCategory, terminal_category
from ..poly import (
    CompositePolynomial,
    FinitePolynomial,
    PolyMorphism,
    associator,
    compare_morphisms,
    identity_morphism,
    left_unitor_inverse,
    right_unitor_inverse,
    tri_morphisms,
    y,
)
from ..utils import FrozenMap, Report, label

logger = logging.getLogger(__name__)


class Comonoid:
    """A polynomial ``c`` with counit ``ε: c -> y`` and comultiplication
    ``δ: c -> c ◁ c``.

    Args:
        carrier (Polynomial): total-finite carrier
        counit (PolyMorphism): ``carrier -> y``
        comult (PolyMorphism): ``carrier -> carrier ◁ carrier``
        category (FinCategory, optional): the decoded category, when the
            comonoid was built from one
    """

    def __init__(self, carrier, counit, comult, category=None, name=None):
        self.carrier = carrier
        self.counit = counit
        self.comult = comult
        self.name = name or carrier.name
        self._category = category

    @property
    def category(self):
        if self._category is None:
            self._category = category_from_comonoid(self)
        return self._category

    @property
    def objects(self):
        return self.carrier.positions()

    def __repr__(self):
        return f"Comonoid({self.name}: {len(self.objects)} objects)"


def comonoid_from_category(C, name=None):
    """``Σ_a y^{C[a]}`` with ε picking identities and δ recording codomains
    and composites."""
    carrier = FinitePolynomial({a: C.out(a) for a in C.objects}, name=name or C.name)
    counit = PolyMorphism(carrier, y(), lambda a: "*", lambda a, d: C.identity(a), name="ε")
    comult = PolyMorphism(
        carrier,
        CompositePolynomial(carrier, carrier),
        lambda a: (a, FrozenMap({f: C.tgt(f) for f in C.out(a)})),
        lambda a, d: C.compose(d[0], d[1]),
        name="δ",
    )
    return Comonoid(carrier, counit, comult, category=C, name=name or C.name)


def category_from_comonoid(c, check=True):
    """Decode a comonoid into a FinCategory.

    Morphism ids are the directions themselves when no direction is shared
    between two positions, and ``(object, direction)`` otherwise.

    Raises:
        LawViolation: the comonoid laws fail (only with ``check``)
    """
    if check:
        check_comonoid(c).raise_if_failed()
    objects = c.carrier.positions()
    seen = set()
    disjoint = True
    for a in objects:
        for d in c.carrier.directions(a):
            if d in seen:
                disjoint = False
            seen.add(d)

    def mid(a, d):
        return d if disjoint else (a, d)

    morphisms = {}
    codomain = {}
    for a in objects:
        a0, J = c.comult(a)
        for d in c.carrier.directions(a):
            codomain[(a, d)] = J(d)
            morphisms[mid(a, d)] = (a, J(d))
    identities = {a: mid(a, c.counit.sharp(a, "*")) for a in objects}
    composition = {}
    for a in objects:
        for f in c.carrier.directions(a):
            b = codomain[(a, f)]
            for g in c.carrier.directions(b):
                composition[(mid(a, f), mid(b, g))] = mid(a, c.comult.sharp(a, (f, g)))
    C = FinCategory(objects, morphisms, identities, composition, name=c.name)
    logger.debug("decoded %r", C)
    return C


def check_comonoid(c, bound=None):
    """Counit and coassociativity laws of ``c`` as polynomial morphism
    equations, checked position by position."""
    report = Report(f"comonoid {c.name}", bound=bound)
    p = c.carrier
    positions = p.positions(bound)
    for a in positions:
        a0, _ = c.comult(a)
        report.expect(a0 == a, "comultiplication-base", label(a), f"δ sends it over {label(a0)}")
    if not report.ok:
        return report
    counit_left = c.comult.then(tri_morphisms(c.counit, identity_morphism(p)))
    compare_morphisms(report, "counit-left", counit_left, left_unitor_inverse(p), positions)
    counit_right = c.comult.then(tri_morphisms(identity_morphism(p), c.counit))
    compare_morphisms(report, "counit-right", counit_right, right_unitor_inverse(p), positions)
    lhs = c.comult.then(tri_morphisms(c.comult, identity_morphism(p))).then(associator(p, p, p))
    rhs = c.comult.then(tri_morphisms(identity_morphism(p), c.comult))
    compare_morphisms(report, "coassociativity", lhs, rhs, positions)
    return report


def check_cofunctor(phi, c, d):
    """A cofunctor ``c -> d`` is a carrier morphism commuting with the
    counits and comultiplications."""
    report = Report(f"cofunctor {phi.name}: {c.name} -> {d.name}")
    positions = c.carrier.positions()
    targets = set(d.carrier.positions())
    for a in positions:
        report.expect(phi(a) in targets, "typing", label(a), f"{label(phi(a))} is not an object")
    if not report.ok:
        return report
    compare_morphisms(report, "counit", phi.then(d.counit), c.counit, positions)
    compare_morphisms(report, "comultiplication", phi.then(d.comult),
                      c.comult.then(tri_morphisms(phi, phi)), positions)
    return report


def cofunctor(c, d, on_objects, lift, name="φ"):
    """Cofunctor from an object map and a lift ``(a, g) -> f`` of every
    morphism ``g`` out of ``φ(a)`` to a morphism ``f`` out of ``a``."""
    return PolyMorphism(c.carrier, d.carrier, on_objects, lift, name=name)


def identity_cofunctor(c):
    return identity_morphism(c.carrier)


def comonoid_y():
    return comonoid_from_category(terminal_category(), name="y")


def empty_comonoid():
    """The comonoid ``0``; bicomodules into it are copresheaves."""
    return comonoid_from_category(FinCategory([], {}, {}, {}, name="0"), name="0")


def as_comonoid(c):
    """Accept a FinCategory or a Comonoid; comonoids are re-encoded so that
    their directions are the morphism ids of the decoded category."""
    if isinstance(c, FinCategory):
        return comonoid_from_category(c)
    if c._category is not None:
        return c
    return comonoid_from_category(category_from_comonoid(c), name=c.name)
