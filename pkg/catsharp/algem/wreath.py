"""Wreaths: monads in EM(Cat♯), and their composite familial monads."""
import logging

from ..comod import CompositeBicomodule
from ..fincat import representable
from ..monad import FamilialMonad, check_monad
from ..utils import FrameMismatch, FrozenMap, Report, memoize_method
from .base_morphism import (
    TwoCell,
    check_2cell,
    check_monad_morphism,
    compose_morphisms,
    identity_morphism,
    unit_after,
)

logger = logging.getLogger(__name__)


class Wreath:
    """An endomorphism ``(q, α)`` of ``(c, m)`` with unit ``id => q`` and
    multiplication ``q ∘ q => q`` 2-cells.

    Args:
        monad (FamilialMonad): ``m``
        morphism (MonadMorphism): ``(q, α): (c, m) -> (c, m)``
        unit (TwoCell): from ``identity_morphism(m)``
        mult (TwoCell): from ``compose_morphisms(morphism, morphism)``
    """

    def __init__(self, monad, morphism, unit, mult, name=None):
        for cell in (morphism, unit.target, mult.target):
            if cell.target is not monad or cell.source is not monad:
                raise FrameMismatch(f"{cell.name} is not an endomorphism of {monad.name}")
        if unit.target is not morphism or mult.target is not morphism:
            raise FrameMismatch("unit and multiplication must end at the wreath's morphism")
        self.monad = monad
        self.morphism = morphism
        self.unit = unit
        self.mult = mult
        self.name = name or morphism.name

    def __repr__(self):
        return f"Wreath({self.name} over {self.monad.name})"


def trivial_wreath(m):
    """The identity endomorphism with its canonical cells; its composite is
    ``m`` up to the unitor."""
    phi = identity_morphism(m)
    p = phi.carrier
    C = m.category

    def collapse(elem):
        a, g = elem
        return unit_after(m, p, (a, g((a, C.identity(a)))[1]))

    unit = TwoCell(identity_morphism(m), phi, lambda elem: unit_after(m, p, elem), name=f"η^{phi.name}")
    mult = TwoCell(compose_morphisms(phi, phi), phi, collapse, name=f"μ^{phi.name}")
    return Wreath(m, phi, unit, mult, name=phi.name)


class WreathComposite(FamilialMonad):
    """The monad on ``q ◁ m`` with unit ``η^q`` and multiplication

    ``q m q m --α--> q q m m --μ^q--> q m m m --μ^m μ^m--> q m``.

    Units and composites are read off generic elements.
    """

    def __init__(self, wreath):
        q, m = wreath.morphism.carrier, wreath.monad.carrier
        super().__init__(CompositeBicomodule(q, m, name=f"{q.name}◁{m.name}"), name=f"{q.name}◁{m.name}")
        self.wreath = wreath

    @memoize_method
    def _unit(self, C):
        X = representable(self.category, C)
        elem = (C, FrozenMap({(E, f): f for E, f in X.all_elements()}))
        I, h = self.carrier.split(self.wreath.unit.rho_at(elem))
        return I, FrozenMap({(E, f): d for (E, d), f in h.items()})

    def unit_op(self, C):
        return self._unit(C)[0]

    def unit_iso(self, C):
        return self._unit(C)[1]

    def multiply(self, elem):
        """``μ_X`` on an element of ``q ◁ m ◁ q ◁ m ◁ X`` in iterated form."""
        w = self.wreath
        q, m = w.morphism.carrier, w.monad
        swapped = q.fmap(lambda k: w.morphism.alpha_at(k[1]))(elem)
        merged = w.mult.rho_at(swapped)
        return q.fmap(lambda k: m.mult_at(m.mult_at(k[1])))(merged)

    @memoize_method
    def _composite(self, M, N):
        X = self.square.arity((M, N))
        _, g = self.square.join((M, N), FrozenMap({k: k[1] for k in X.all_elements()}))
        return self.carrier.split(self.multiply(self.carrier.join(M, g)))

    def mult_op(self, M, N):
        return self._composite(M, N)[0]

    def mult_witness(self, M, N):
        return self._composite(M, N)[1]


def wreath_composite(w):
    T = WreathComposite(w)
    logger.debug("%r", T)
    return T


def check_wreath(w, bound):
    """The endomorphism, both 2-cells and the monad laws of the composite."""
    report = Report(f"wreath {w.name}", bound=bound)
    report.add(check_monad_morphism(w.morphism, bound))
    report.add(check_2cell(w.unit, bound))
    report.add(check_2cell(w.mult, bound))
    if report.ok:
        report.add(check_monad(wreath_composite(w), bound, progress=False))
    logger.info("%s", report.summary())
    return report
