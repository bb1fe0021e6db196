"""The Segal condition for copresheaves on ``Θ_m^op``.

Two forms are checked. The limit form compares the cells over ``M`` with
the compatible families of cells over the unit objects indexed by the
elements of ``m[M]``. The reconstruction form reads a ``c``-copresheaf
``X'`` off the unit objects and compares the restriction of the nerve to
the inert category with ``m ◁ X'``.
"""
import logging

from ..fincat import (
    Copresheaf,
    ElementsDiagram,
    check_copresheaf_map,
    iter_copresheaf_maps,
    limit_over_elements,
    restrict_along,
)
from ..utils import BoundExhausted, FrozenMap, Report, label, meet_all
from .theory_category import inert_embedding

logger = logging.getLogger(__name__)

FORMS = ("limit", "reconstruction")


def unit_point(m, M, C, z):
    """The element of ``[m, m][M]`` picking ``z ∈ m[M]`` over ``C``: the map
    ``m[η(C)] ≅ c[C] -> m[M]``."""
    p = m.carrier
    A = p.arity(M)
    g = {(E, w): A.act(f, z) for (E, f), w in m.unit_iso(C).items()}
    return p.join(m.unit_op(C), FrozenMap(g))


def kleisli_lift(m, M, k):
    """An element of ``[m, m][M]`` postcomposed with the unit."""
    p = m.carrier
    J, g = p.split(k)
    A = p.arity(M)
    return p.join(J, FrozenMap({key: m.unit_at(A, key[0], x) for key, x in g.items()}))


def unit_restriction(P):
    """``X'``: the cells over the unit objects as a copresheaf on ``c``,
    acted on by the lifts of the morphisms of ``c``."""
    theory = P.theory
    m, E = theory.monad, theory.comonad
    C = m.category
    sets = {a: P.cells(m.unit_op(a)) for a in C.objects}
    action = {}
    for f in C.morphisms:
        if C.is_identity(f):
            continue
        u = m.unit_op(C.src(f))
        lift = (u, E.counit_sharp(u, f))
        action[f] = {x: P.act(lift, x) for x in sets[C.src(f)]}
    return Copresheaf(C, sets, action, name=f"{P.name}'")


def segal_images(P, M):
    """Each cell over ``M`` sent to its family ``z ↦`` (its restriction to
    the unit object of ``z``)."""
    m = P.theory.monad
    points = {z: (M, kleisli_lift(m, M, unit_point(m, M, *z))) for z in m.carrier.arity(M).all_elements()}
    return {x: FrozenMap({z: P.act(f, x) for z, f in points.items()}) for x in P.cells(M)}


def _limit_form(P, units, report):
    theory = P.theory
    m, E = theory.monad, theory.comonad

    def value(C, z):
        return P.cells(units[C])

    def transition(f, C, z):
        u = units[C]
        lift = (u, E.counit_sharp(u, f))
        return lambda key: P.act(lift, key[1])

    unit_ops = set(units.values())
    for M in theory.objects:
        if M in unit_ops:
            continue
        D = ElementsDiagram(m.carrier.arity(M), value, transition, covariant=True, name=f"segal {label(M)}")
        families = set(limit_over_elements(D).elements)
        images = segal_images(P, M)
        distinct = set(images.values())
        report.expect(len(distinct) == len(images), "segal-injective", label(M),
                      f"{len(images)} cells, {len(distinct)} images")
        report.expect(distinct == families, "segal-surjective", label(M),
                      f"{len(families)} families, {len(distinct & families)} hit")


def _reconstruction_form(P, report):
    theory = P.theory
    m = theory.monad
    p = m.carrier
    Xp = unit_restriction(P)
    j, j_report = inert_embedding(m, theory=theory)
    report.add(j_report)
    if not j_report.ok:
        return
    jX = restrict_along(j, P.data)
    inert = j.source
    sets = {I: [p.join(I, h) for h in iter_copresheaf_maps(p.arity(I), Xp)] for I in inert.objects}
    action = {}
    for f in inert.morphisms:
        if inert.is_identity(f):
            continue
        I, k = f
        J, g = p.split(k)
        table = {}
        for x in sets[I]:
            h = p.split(x)[1]
            table[x] = p.join(J, FrozenMap({key: h((key[0], w)) for key, w in g.items()}))
        action[f] = table
    R = Copresheaf(inert, sets, action, name=f"{p.name}◁{Xp.name}")

    canonical = {}
    for I in inert.objects:
        for x, family in segal_images(P, I).items():
            canonical[(I, x)] = p.join(I, family)
    canonical = FrozenMap(canonical)
    for v in check_copresheaf_map(canonical, jX, R).all_violations():
        report.fail("reconstruction-" + v.law, v.where, v.detail)
    for I in inert.objects:
        images = {canonical((I, x)) for x in jX.elements(I)}
        report.expect(len(images) == len(jX.elements(I)) == len(R.elements(I)), "reconstruction-bijection",
                      label(I), f"{len(jX.elements(I))} cells, {len(R.elements(I))} maps")


def segal_check(P, bound=None, forms=FORMS):
    """Both forms of the Segal condition for a copresheaf on ``Θ_m^op``.

    Raises:
        BoundExhausted: ``P`` lives on a partial theory
        ValueError: the theory is not the theory of ``m`` itself
    """
    theory = P.theory
    m = theory.monad
    if P.data is None:
        raise BoundExhausted(f"{P.name}: the Segal check needs a complete theory", bound=bound, partial=P)
    if theory.p is not m.carrier:
        raise ValueError(f"{theory.name} is not the theory of {m.name}")
    report = Report(f"segal {P.name}", bound=bound, exactness=meet_all(theory.exactness.values()))
    units = {C: m.unit_op(C) for C in m.category.objects}
    missing = [label(C) for C, u in units.items() if u not in theory.objects]
    if not report.expect(not missing, "unit-objects", theory.name, f"no unit object over {missing}"):
        return report
    if "limit" in forms:
        _limit_form(P, units, report.add(Report("limit", bound=bound)))
    if "reconstruction" in forms:
        _reconstruction_form(P, report.add(Report("reconstruction", bound=bound)))
    logger.info("%s", report.summary())
    return report
