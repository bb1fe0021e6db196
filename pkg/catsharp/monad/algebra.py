"""Algebras of familial monads and their law checks."""
import functools
import logging

from ..fincat import set_copresheaf, terminal_copresheaf, underlying_graph
from ..utils import FrozenMap, Report, label

logger = logging.getLogger(__name__)


class Algebra:
    """An ``m``-algebra ``ψ: m ◁ X -> X``.

    Args:
        monad (FamilialMonad)
        carrier (Copresheaf): ``X`` on the monad's base
        action (callable): element of ``m ◁ X`` (joined form) -> element of ``X``
        bound (int, optional): working degree bound for checks
    """

    def __init__(self, monad, carrier, action, bound=None, name=None):
        self.monad = monad
        self.carrier = carrier
        self.action = action
        self.bound = bound
        self.name = name or f"{monad.name}-alg {carrier.name}"

    def act_on(self, key):
        """The action keyed by ``(object, element)``."""
        return self.action(key[1])

    def __repr__(self):
        return f"Algebra({self.name})"


def free_algebra(m, X, bound=None):
    """``m ◁ X`` acted on by the multiplication."""
    Y = m.apply(X, bound, name=f"{m.name}◁{X.name}")
    logger.info("free %s-algebra on %s: %s (%s)", m.name, X.name, Y.sizes(), Y.exactness)
    return Algebra(m, Y, m.mult_at, bound=bound, name=f"free {m.name}-alg on {X.name}")


def check_algebra(A, bound=None):
    """Typing, naturality, unit and multiplication laws of ``A`` on elements
    of total degree at most ``bound``."""
    m, Y = A.monad, A.carrier
    bound = A.bound if bound is None else bound
    p, C = m.carrier, m.category
    MY = m.apply(Y, bound)
    report = Report(f"algebra {A.name}", bound=bound, exactness=MY.exactness)
    for a, elem in MY.all_elements():
        y = A.action(elem)
        if not report.expect(Y.has_element(a, y), "action-typing", label(elem), f"{label(y)} not in {label(a)}"):
            continue
        for f in C.non_identity_out(a):
            lhs = A.action(MY.act(f, elem))
            report.expect(lhs == Y.act(f, y), "action-naturality", (label(f), label(elem)))
    if not report.ok:
        return report
    for a, x in Y.all_elements():
        y = A.action(m.unit_at(Y, a, x))
        report.expect(y == x, "unit", label(x), f"acts as {label(y)}")
    MMY = m.apply(MY, bound)
    lift = p.fmap(A.act_on)
    for a, elem in MMY.all_elements():
        lhs = A.action(m.mult_at(elem))
        rhs = A.action(lift(elem))
        report.expect(lhs == rhs, "multiplication", label(elem), f"{label(lhs)} != {label(rhs)}")
    logger.info("%s", report.summary())
    return report


def check_algebra_map(A, B, h, bound=None):
    """``h ∘ ψ_A = ψ_B ∘ m(h)`` for ``h`` keyed by ``(object, element)``."""
    m = A.monad
    bound = A.bound if bound is None else bound
    MA = m.apply(A.carrier, bound)
    report = Report(f"algebra map {A.name} -> {B.name}", bound=bound, exactness=MA.exactness)
    lift = m.fmap(h)
    for a, elem in MA.all_elements():
        lhs = h((a, A.action(elem)))
        rhs = B.action(lift(elem))
        report.expect(lhs == rhs, "homomorphism", label(elem), f"{label(lhs)} != {label(rhs)}")
    return report


def category_as_path_algebra(C, m, bound=None):
    """A category as an algebra of the free category monad ``m``.

    The carrier is the underlying graph of ``C`` with every morphism as an
    edge; a path acts as its composite and the empty path at an object as
    its identity.
    """
    X = underlying_graph(C)

    def action(elem):
        I, h = m.carrier.split(elem)
        if I == "v":
            return h(("v", 0))
        n = I[1]
        if n == 0:
            return C.identity(h(("v", 0)))
        return C.compose_path([h(("e", i)) for i in range(1, n + 1)])

    return Algebra(m, X, action, bound=bound, name=f"{C.name} as {m.name}-alg")


def monoid_as_list_algebra(elements, unit, product, m, bound=None, name="M"):
    """A finite monoid as an algebra of the list monad ``m``;
    ``product[x][y]`` is ``x·y``."""
    X = set_copresheaf(elements, name=name)

    def action(elem):
        N, h = m.carrier.split(elem)
        return functools.reduce(lambda x, y: product[x][y], (h(("*", i)) for i in range(N)), unit)

    return Algebra(m, X, action, bound=bound, name=f"{name} as {m.name}-alg")


def algebra_from_table(m, X, table, bound=None, name=None):
    """An action given by a table from joined elements of ``m ◁ X``."""
    table = FrozenMap(table)
    return Algebra(m, X, table, bound=bound, name=name)


def identity_algebra(m, X):
    """A copresheaf as an algebra of the identity monad ``m``."""
    C = m.category
    return Algebra(m, X, lambda elem: elem[1]((elem[0], C.identity(elem[0]))), name=f"{X.name} as {m.name}-alg")


def terminal_algebra(m):
    """The terminal ``m``-algebra on ``1``."""
    return Algebra(m, terminal_copresheaf(m.category), lambda elem: "*", name=f"1 as {m.name}-alg")
