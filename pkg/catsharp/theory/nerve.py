"""Nerves of algebras as copresheaves on theory categories.

For an ``m``-algebra ``ψ: m ◁ X -> X`` the copresheaf ``p ◁ X`` is a left
``[p, p ◁ m]``-comodule: a cell ``h: p[I] -> X`` is sent along a Kleisli
map ``κ: p[J] -> m ◁ p[I]`` to ``ψ ∘ m(h) ∘ κ``. Transferring that coaction
gives a copresheaf on the decoded theory.
"""
import logging

from ..coclosure import LeftComodule, check_comodule, comodule_transfer
from ..comod import CopresheafBicomodule, bicomodule_as_copresheaf
from ..fincat import Copresheaf, iter_copresheaf_maps, restrict_along
from ..monad import check_algebra
from ..utils import BoundExhausted, ComoduleLawViolation, FrozenMap, label
from .theory_category import inert_embedding, theory_category

logger = logging.getLogger(__name__)


class NervePresheaf:
    """A nerve: a copresheaf on the presentation of ``theory`` (a presheaf
    on ``Θ``).

    Cells over an object ``I`` are ``(a, x)`` with ``a`` the output of
    ``I`` and ``x = (I, h)`` for ``h: p[I] -> X``.

    Args:
        theory (TheoryCategory)
        algebra (Algebra)
        data (Copresheaf, optional): None when the theory is partial
        cells (dict, optional): object -> cells, used when ``data`` is None
        module (LeftComodule, optional): the coaction, which still acts on
            cells when ``data`` is None
    """

    def __init__(self, theory, algebra, data=None, cells=None, module=None, name=None):
        self.theory = theory
        self.algebra = algebra
        self.data = data
        self._cells = cells
        self.module = module
        self.name = name or f"N_{theory.name}({algebra.carrier.name})"

    def cells(self, I):
        if self.data is not None:
            return self.data.elements(I)
        return self._cells[I]

    def sizes(self):
        return {I: len(self.cells(I)) for I in self.theory.objects}

    def act(self, f, x):
        """Action of a presentation morphism ``(I, k)`` on a cell over ``I``."""
        if self.data is not None:
            return self.data.act(f, x)
        if self.module is None:
            raise BoundExhausted(f"{self.name} has no action on a partial theory", partial=self)
        return self.module.coaction_act(x, f[1])

    def __repr__(self):
        return f"NervePresheaf({self.name}: {self.sizes()})"


def _extension(m, A, h):
    """``ψ ∘ m(h)``: the algebra map out of the free algebra induced by ``h``."""
    lift = m.fmap(h)
    return lambda v: A.action(lift(v))


def nerve_comodule(p, m, A, E, Y):
    """The coaction of ``[p, p ◁ m]`` on ``p ◁ X``, with ``Y = p ◁ X``
    restricted to the objects of ``E``."""

    def coaction_op(cell):
        return p.split(cell[1])[0]

    def coaction_act(cell, k):
        _, h = p.split(cell[1])
        J, kappa = p.split(k)
        extend = _extension(m, A, h)
        return (p.output(J), p.join(J, FrozenMap({z: extend(v) for z, v in kappa.items()})))

    P = CopresheafBicomodule(Y, name=Y.name)
    return LeftComodule(P, E, coaction_op, coaction_act, lambda cell, k: FrozenMap(),
                        name=f"{E.name}⟲{Y.name}")


def generalized_nerve(p, m, A, objects, bound=None, theory=None, check=True):
    """``p ◁ X`` as a copresheaf on the decoded ``[p, p ◁ m]``.

    The cells over ``I`` are exactly the maps ``p[I] -> X``. When the theory
    is partial the comodule laws are still checked and cells are acted on
    through the coaction directly.

    Raises:
        ComoduleLawViolation: the coaction fails its laws, which happens
            when ``A`` is not an algebra
    """
    if theory is None:
        theory = theory_category(m, objects, bound, p=p, strict=False, check=check)
    X = A.carrier
    Y = p.apply(X, outer=theory.objects, name=f"{p.name}◁{X.name}")
    M = nerve_comodule(p, m, A, theory.comonad, Y)
    if theory.is_partial:
        if check:
            check_comodule(M).raise_if_failed(ComoduleLawViolation)
        cells = {I: [] for I in theory.objects}
        for a, x in Y.all_elements():
            cells[p.split(x)[0]].append((a, x))
        logger.info("nerve of %s over partial %s", X.name, theory.name)
        return NervePresheaf(theory, A, cells={I: tuple(xs) for I, xs in cells.items()}, module=M)
    q = comodule_transfer(M, None, comonoid=theory.comonoid, check=check)
    data = bicomodule_as_copresheaf(q)
    data.name = f"N({X.name})"
    nerve = NervePresheaf(theory, A, data=data, module=M)
    logger.info("%r", nerve)
    return nerve


def nerve(m, A, objects=None, bound=None, theory=None, check=True):
    """``N_m A`` on the selected objects of ``Θ_m``.

    Raises:
        LawViolation: ``A`` is not an ``m``-algebra at ``bound``
        BoundExhausted: ``Θ_m`` is truncated on the selection
    """
    if check:
        check_algebra(A, bound).raise_if_failed()
    if theory is None:
        theory = theory_category(m, objects, bound)
    return generalized_nerve(m.carrier, m, A, theory.objects, bound, theory=theory, check=check)


def nerve_oracle(m, A, objects=None, bound=None, theory=None):
    """The nerve computed cell by cell: ``Hom(m[I], X)`` at ``I``, acted on
    by precomposing the free algebra maps ``m ◁ m[I] -> X`` with Kleisli
    maps."""
    if theory is None:
        theory = theory_category(m, objects, bound)
    pres = theory.presentation
    if pres is None:
        raise BoundExhausted(f"{theory.name} is partial", bound=bound, partial=theory)
    p, X = theory.p, A.carrier
    sets = {}
    extensions = {}
    for I in pres.objects:
        free = m.apply(p.arity(I), bound)
        cells = []
        for h in iter_copresheaf_maps(p.arity(I), X):
            cell = (p.output(I), p.join(I, h))
            cells.append(cell)
            extensions[cell] = {v: A.action(m.fmap(h)(v)) for _, v in free.all_elements()}
        sets[I] = cells
    action = {}
    for f in pres.morphisms:
        if pres.is_identity(f):
            continue
        I, k = f
        J, kappa = p.split(k)
        table = {}
        for cell in sets[I]:
            ext = extensions[cell]
            table[cell] = (p.output(J), p.join(J, FrozenMap({z: ext[v] for z, v in kappa.items()})))
        action[f] = table
    data = Copresheaf(pres, sets, action, name=f"N'({X.name})")
    return NervePresheaf(theory, A, data=data, name=f"oracle N_{theory.name}({X.name})")


def nerve_map(h, source, target):
    """The map of nerves induced by a map of carriers ``h``, keyed by
    ``(object, cell)``."""
    p = source.theory.p
    table = {}
    for I in source.theory.objects:
        for a, x in source.cells(I):
            J, g = p.split(x)
            image = (a, p.join(J, FrozenMap({z: h((z[0], v)) for z, v in g.items()})))
            table[(I, (a, x))] = image
    result = FrozenMap(table)
    missing = [k for k, v in table.items() if v not in target.cells(k[0])]
    if missing:
        logger.warning("nerve map misses %d cells, first %s", len(missing), label(missing[0]))
    return result


def inert_nerve(P):
    """The restriction of a nerve along the inert embedding, a copresheaf on
    the inert category whose cells over ``I`` are the maps ``p[I] -> X``.

    Raises:
        LawViolation: the inert embedding is not a faithful functor
        BoundExhausted: ``P`` lives on a partial theory
    """
    if P.data is None:
        raise BoundExhausted(f"{P.name} lives on a partial theory", partial=P)
    j, report = inert_embedding(P.theory.monad, theory=P.theory)
    report.raise_if_failed()
    return restrict_along(j, P.data)
