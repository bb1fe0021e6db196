import logging

from ..comod import FiniteBicomodule
from ..fincat import iter_copresheaf_maps, set_copresheaf, terminal
from ..utils import FrozenMap, SpecError, label
from .base_monad import FamilialMonad

logger = logging.getLogger(__name__)


class ExplicitMonad(FamilialMonad):
    """A familial monad on a finite bicomodule, given by tables.

    Args:
        carrier (Bicomodule): a finite ``m: c ↛ c``
        unit (dict): object ``C`` -> ``(η(C), iso)``, the iso keyed as in
            ``unit_iso``
        mult (dict): ``(M, N)`` -> ``(μ(M, N), witness)``, ``N`` a FrozenMap
            or dict keyed by ``(object, element)`` of ``m[M]``
        check (bool): require an entry for every ``(M, N)``
    """

    def __init__(self, carrier, unit, mult, name=None, check=True):
        super().__init__(carrier, name=name)
        self._unit = {C: (op, FrozenMap(iso)) for C, (op, iso) in unit.items()}
        self._mult = {(M, FrozenMap(N)): (op, FrozenMap(W)) for (M, N), (op, W) in mult.items()}
        if check:
            self._check_tables()

    def _check_tables(self):
        p = self.carrier
        for C in self.category.objects:
            if C not in self._unit:
                raise SpecError(f"{self.name}: no unit over {label(C)}")
        Q = p.positions()
        for M in p.operations():
            for N in iter_copresheaf_maps(p.arity(M), Q):
                if (M, N) not in self._mult:
                    raise SpecError(f"{self.name}: no composite for ({label(M)}, {label(N)})")

    def unit_op(self, C):
        return self._unit[C][0]

    def unit_iso(self, C):
        return self._unit[C][1]

    def mult_op(self, M, N):
        return self._mult[(M, FrozenMap(N))][0]

    def mult_witness(self, M, N):
        return self._mult[(M, FrozenMap(N))][1]


def monad_maybe():
    """``y + 1`` on the terminal category: ``just`` has one argument,
    ``nothing`` none."""
    T = terminal()
    carrier = FiniteBicomodule(
        T, T,
        {"just": ("*", set_copresheaf([0], name="1")), "nothing": ("*", set_copresheaf([], name="0"))},
        name="Maybe",
    )
    point = ("*", 0)
    unit = {"*": ("just", {("*", "id"): 0})}
    mult = {
        ("nothing", FrozenMap()): ("nothing", {}),
        ("just", FrozenMap({point: "just"})): ("just", {point: (point, 0)}),
        ("just", FrozenMap({point: "nothing"})): ("nothing", {}),
    }
    return ExplicitMonad(carrier, unit, mult, name="Maybe")
