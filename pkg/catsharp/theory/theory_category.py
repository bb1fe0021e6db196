"""Theory categories ``Θ_m`` computed as the comonoid of ``[p, p ◁ m]``.

The comonoid produced by the coclosure is ``Θ_m^op``: a morphism out of
``J`` is an element ``k`` of ``[p, p ◁ m][J]``, that is a Kleisli map
``g: p[I] -> m ◁ p[J]`` ending at ``I``. ``TheoryCategory`` keeps that
presentation and answers hom questions in the orientation of ``Θ_m``.
"""
import logging
from collections import Counter

import numpy as np

from ..coclosure import Coclosure, coclosure_comonad, comonad_to_comonoid, endo_comonad
from ..comod import CompositeBicomodule
from ..fincat import FinCategory, FinFunctor, check_functor, iter_copresheaf_maps, opposite
from ..utils import EXACT, BoundExhausted, FrozenMap, Report, label, meet_all, sort_ids

logger = logging.getLogger(__name__)


class TheoryCategory:
    """``Θ_m`` on a finite selection of operations.

    Args:
        monad (FamilialMonad): ``m`` on ``c``
        p (Bicomodule): ``p: d ↛ c``; ``m.carrier`` for the theory of ``m``
        objects (tuple): the selected operations of ``p``
        comonad (ComonadOnObject): ``[p, p ◁ m]`` on the selection
        exactness (dict): ``(I, J) -> Exactness`` of ``hom(I, J)``
        comonoid (Comonoid, optional): the decoded comonoid; None when some
            hom-set is truncated and composites cannot be trusted
        cofunctor (optional): the cofunctor from ``comonoid`` to ``d``
    """

    #: the presentation is ``Θ_m^op``; ``category()`` flips it
    presents_opposite = True

    def __init__(self, monad, p, objects, comonad, exactness, comonoid=None, cofunctor=None,
                 bound=None, name=None):
        self.monad = monad
        self.p = p
        self.objects = objects
        self.comonad = comonad
        self.exactness = exactness
        self.comonoid = comonoid
        self.cofunctor = cofunctor
        self.bound = bound
        if name is None:
            name = f"Θ_{monad.name}" if p is monad.carrier else f"Θ_{monad.name}^{p.name}"
        self.name = name
        self._theta = None

    @property
    def presentation(self):
        return None if self.comonoid is None else self.comonoid.category

    @property
    def is_partial(self):
        return self.comonoid is None

    @property
    def is_exact(self):
        return all(e.exact for e in self.exactness.values())

    def category(self):
        """``Θ_m`` itself.

        Raises:
            BoundExhausted: the theory is partial
        """
        if self.is_partial:
            raise BoundExhausted(f"{self.name} is partial at bound {self.bound}", bound=self.bound,
                                 partial=self)
        if self._theta is None:
            self._theta = opposite(self.presentation)
            self._theta.name = self.name
        return self._theta

    def kleisli_maps(self, I, J):
        """``hom(I, J)`` in ``Θ_m`` as Kleisli maps ``p[I] -> m ◁ p[J]``."""
        maps = []
        for _, k in self.comonad.carrier.arity(J).all_elements():
            K, g = self.p.split(k)
            if K == I:
                maps.append(g)
        return tuple(maps)

    def hom(self, I, J):
        return self.kleisli_maps(I, J)

    def morphism(self, I, J, g):
        """The presentation morphism ``J -> I`` of the Kleisli map ``g``."""
        return (J, self.p.join(I, g))

    def hom_counts(self, objects=None):
        """Matrix of ``|hom(I, J)|`` in ``Θ_m``, rows are sources."""
        objects = self.objects if objects is None else tuple(objects)
        counts = {J: Counter(self.p.split(k)[0] for _, k in self.comonad.carrier.arity(J).all_elements())
                  for J in objects}
        return np.array([[counts[J][I] for J in objects] for I in objects], dtype=int)

    def __repr__(self):
        status = "partial" if self.is_partial else f"{len(self.presentation.morphisms)} morphisms"
        return f"TheoryCategory({self.name}: {len(self.objects)} objects, {status})"


def _check_selection(p, objects):
    C = p.left.category
    selected = set(objects)
    for I in objects:
        for f in C.non_identity_out(p.output(I)):
            J = p.act(f, I)
            if J not in selected:
                raise ValueError(f"selection is not closed: {label(f)} sends {label(I)} to {label(J)}")


def _profile(p, A):
    return Counter(p.split(k)[0] for _, k in A.all_elements())


def _certify(E, p, m, objects, bound):
    """Per-hom exactness; a truncated hom-set whose count does not change
    at ``bound + 1`` is taken as exact."""
    e = E.carrier
    exactness = {}
    wider = None
    for J in objects:
        A = e.arity(J)
        if A.exactness.exact:
            exactness.update({(I, J): EXACT for I in objects})
            continue
        if wider is None:
            wider = Coclosure(p, CompositeBicomodule(p, m.carrier), bound=bound + 1,
                              selection=objects, operations=objects)
        now, later = _profile(p, A), _profile(p, wider.arity(J))
        for I in objects:
            if now[I] == later[I]:
                logger.debug("hom(%s, %s) stable at %d elements", label(I), label(J), now[I])
                exactness[(I, J)] = EXACT
            else:
                exactness[(I, J)] = A.exactness
    return exactness


def theory_category(m, objects, bound=None, p=None, strict=True, check=True, name=None):
    """``Θ_m`` on the selected operations, decoded from ``[p, p ◁ m]``.

    Args:
        m (FamilialMonad): monad on ``c``
        objects (iterable): operations of ``p`` to use as objects; must be
            closed under the left action
        bound (int, optional): degree bound for ``m ◁ p[I]``
        p (Bicomodule, optional): defaults to ``m.carrier``
        strict (bool): raise when a hom-set is truncated instead of
            returning a partial theory

    Raises:
        BoundExhausted: a hom-set is truncated and ``strict`` is set; the
            partial theory is attached
        LawViolation: the comonad or the decoded category fails its laws
    """
    p = m.carrier if p is None else p
    objects = sort_ids(objects)
    _check_selection(p, objects)
    E = coclosure_comonad(p, m, bound, operations=objects)
    exactness = _certify(E, p, m, objects, bound)
    theory = TheoryCategory(m, p, objects, E, exactness, bound=bound, name=name)
    if not theory.is_exact:
        truncated = [(label(I), label(J)) for (I, J), e in exactness.items() if not e.exact]
        logger.warning("%s: %d truncated hom-sets at bound %s", theory.name, len(truncated), bound)
        if strict:
            raise BoundExhausted(f"{theory.name}: hom-sets {truncated[:3]} are truncated", bound=bound,
                                 partial=theory)
        return theory
    theory.comonoid, theory.cofunctor = comonad_to_comonoid(E, None, check=check)
    logger.info("%s: %d objects, %d morphisms", theory.name, len(objects),
                len(theory.presentation.morphisms))
    return theory


def kleisli_oracle(m, objects, bound=None, name=None):
    """``Θ_m^op`` enumerated directly from Kleisli maps.

    The morphism ``(J, I, g)`` runs from ``J`` to ``I`` for a map
    ``g: m[I] -> m ◁ m[J]``; composition is Kleisli composition.

    Raises:
        BoundExhausted: a Kleisli composite is not among the enumerated maps
    """
    p = m.carrier
    objects = sort_ids(objects)
    free = {J: m.apply(p.arity(J), bound) for J in objects}
    homs = {}
    morphisms = {}
    for J in objects:
        for I in objects:
            maps = tuple(iter_copresheaf_maps(p.arity(I), free[J]))
            homs[(J, I)] = frozenset(maps)
            for g in maps:
                morphisms[(J, I, g)] = (J, I)
    identities = {J: (J, J, m.unit_map(p.arity(J))) for J in objects}
    composition = {}
    for (J, I, g) in morphisms:
        for K in objects:
            for h in homs[(I, K)]:
                gh = m.kleisli(h, g)
                if gh not in homs[(J, K)]:
                    raise BoundExhausted(f"Kleisli composite {label(J)} -> {label(K)} leaves the "
                                         f"enumeration at bound {bound}", bound=bound)
                composition[((J, I, g), (I, K, h))] = (J, K, gh)
    C = FinCategory(objects, morphisms, identities, composition, name=name or f"Kl_{m.name}^op")
    logger.debug("kleisli oracle %s: %d morphisms", C.name, len(morphisms))
    return C


def compare_with_oracle(theory, oracle):
    """The canonical comparison ``(J, k) ↦ (J, I, g)`` between the decoded
    presentation and ``kleisli_oracle``: a bijective functor."""
    pres = theory.presentation
    p = theory.p
    report = Report(f"{theory.name} vs {oracle.name}", exactness=meet_all(theory.exactness.values()))
    on_morphisms = {}
    for J, k in pres.morphisms:
        I, g = p.split(k)
        target = (J, I, g)
        if report.expect(oracle.has_morphism(target), "totality", (label(J), label(I))):
            on_morphisms[(J, k)] = target
    if not report.ok:
        return report
    report.expect(len(set(on_morphisms.values())) == len(oracle.morphisms), "bijection", theory.name,
                  f"{len(on_morphisms)} vs {len(oracle.morphisms)}")
    F = FinFunctor(pres, oracle, {a: a for a in pres.objects}, on_morphisms, name="compare")
    report.add(check_functor(F))
    return report


def inert_category(p, bound=None, operations=None, check=True):
    """The decoded ``[p, p]``: morphisms ``I -> J`` are copresheaf maps
    ``p[J] -> p[I]``."""
    E = endo_comonad(p, bound, operations=operations)
    comonoid, _ = comonad_to_comonoid(E, None, check=check)
    C = comonoid.category
    C.name = f"inert {p.name}"
    return C


def inert_embedding(m, objects=None, bound=None, theory=None, inert=None):
    """``j``: the inert category of ``m`` into the presentation of its
    theory, postcomposing every map with the unit.

    Returns:
        (FinFunctor, Report): the functor and its functoriality and
        faithfulness report
    """
    if theory is None:
        theory = theory_category(m, objects, bound)
    p = theory.p
    if inert is None:
        inert = inert_category(p, operations=theory.objects)
    pres = theory.presentation
    on_morphisms = {}
    for I, k in inert.morphisms:
        J, g = p.split(k)
        A = p.arity(I)
        lifted = FrozenMap({z: m.unit_at(A, z[0], x) for z, x in g.items()})
        on_morphisms[(I, k)] = theory.morphism(J, I, lifted)
    j = FinFunctor(inert, pres, {a: a for a in inert.objects}, on_morphisms, name=f"j_{m.name}")
    report = Report(f"inert embedding {theory.name}")
    missing = [f for f in on_morphisms.values() if not pres.has_morphism(f)]
    if report.expect(not missing, "typing", theory.name, f"{len(missing)} images are not morphisms"):
        report.add(check_functor(j))
        report.expect(len(set(on_morphisms.values())) == len(on_morphisms), "faithful", theory.name)
    return j, report
