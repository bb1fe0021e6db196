"""Lawvere theories as ``[List, List ◁ o]`` for a monad ``o`` on sets.

Objects are arities ``N``; ``hom(N, N')`` in the theory is the set of
``N``-tuples of ``o``-terms in ``N'`` variables. Models are generalized
nerves of ``o``-algebras: the cells over ``N`` are ``X^N``.
"""
import logging

from ..monad import ListBicomodule, SymmetricOperad, monad_from_operad
from ..utils import FrozenMap, Report, label
from .nerve import generalized_nerve
from .theory_category import theory_category

logger = logging.getLogger(__name__)


def _as_monad(o):
    if isinstance(o, SymmetricOperad):
        return monad_from_operad(o)
    return o


def lawvere_theory(o, arities, bound=None, strict=False, check=True):
    """The Lawvere theory of ``o`` on the given arities.

    Args:
        o (FamilialMonad or SymmetricOperad): a monad on the terminal
            category; operads are turned into their monads
        arities (iterable): natural numbers used as objects
        bound (int, optional): bound on term size
        strict (bool): raise instead of returning a partial theory

    Raises:
        NotSigmaFree: ``o`` is an operad with a nontrivial stabiliser
        BoundExhausted: some hom-set is truncated and ``strict`` is set
    """
    o = _as_monad(o)
    theory = theory_category(o, arities, bound, p=ListBicomodule(), strict=strict, check=check,
                             name=f"Law_{o.name}")
    logger.info("%r", theory)
    return theory


def lawvere_model(o, A, arities, bound=None, theory=None, check=True):
    """The model of the Lawvere theory sending ``N`` to ``X^N``."""
    o = _as_monad(o)
    if theory is None:
        theory = lawvere_theory(o, arities, bound, check=check)
    return generalized_nerve(theory.p, o, A, theory.objects, bound, theory=theory, check=check)


def projection(theory, N, i):
    """The presentation morphism ``N -> 1`` whose term is the variable ``i``."""
    o, p = theory.monad, theory.p
    term = o.unit_at(p.arity(N), "*", i)
    return theory.morphism(1, N, FrozenMap({("*", 0): term}))


def check_products(model):
    """A model preserves products: ``x ↦ (π_i x)_i`` is a bijection from the
    cells over ``N`` to ``N``-tuples of cells over ``1``."""
    theory = model.theory
    report = Report(f"products {model.name}")
    if not report.expect(1 in theory.objects, "arity-one", theory.name, "object 1 is not selected"):
        return report
    ones = len(model.cells(1))
    for N in theory.objects:
        projections = [projection(theory, N, i) for i in range(N)]
        tuples = {tuple(model.act(f, x) for f in projections) for x in model.cells(N)}
        report.expect(len(tuples) == len(model.cells(N)) == ones ** N, "product-preservation", label(N),
                      f"{len(model.cells(N))} cells, {len(tuples)} tuples, {ones}^{N} expected")
    return report
