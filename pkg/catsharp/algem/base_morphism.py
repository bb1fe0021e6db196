"""Monad morphisms and their 2-cells in EM(Cat♯).

A monad morphism ``(p, α): (c, m) -> (d, n)`` is kept as the natural
transformation ``α_X: m ◁ p ◁ X -> p ◁ n ◁ X`` acting on elements. The
action only ever relabels the values of an element, so the bicomodule map
``α: m ◁ p -> p ◁ n`` and its transposed form ``(α₁, α♯)`` are read off the
generic elements, and every law is checked exactly on generic elements.
"""
import logging

from ..comod import BicomoduleMap, CompositeBicomodule, IdentityBicomodule, check_square
from ..fincat import iter_copresheaf_maps
from ..monad import Algebra, check_algebra, terminal_algebra
from ..utils import FrameMismatch, FrozenMap, Report, label, memoize_method

logger = logging.getLogger(__name__)


def act_on(r, f, elem):
    """``f · elem`` for an element of ``r ◁ X`` in the iterated form."""
    return r.join(*r.act_element(f, *r.split(elem)))


def generic_element(r, I):
    """The element ``(I, id)`` of ``r ◁ r[I]`` and its arity."""
    X = r.arity(I)
    return X, r.join(I, FrozenMap({k: k[1] for k in X.all_elements()}))


def unit_on(m, p, a, x):
    """``η_{p ◁ X}(x)`` for ``x ∈ (p ◁ X)(a)``."""
    g = {(E, w): act_on(p, f, x) for (E, f), w in m.unit_iso(a).items()}
    return m.carrier.join(m.unit_op(a), FrozenMap(g))


def unit_after(n, p, elem):
    """``p(η^n)`` on an element of ``p ◁ X``."""
    I, h = p.split(elem)
    A = p.arity(I)
    q = n.carrier
    g = {}
    for (E, w) in A.all_elements():
        iso = n.unit_iso(E)
        g[(E, w)] = q.join(n.unit_op(E), FrozenMap({(F, iso((F, f))): h((F, A.act(f, w))) for F, f in iso.keys()}))
    return p.join(I, FrozenMap(g))


def mult_after(n, p, elem):
    """``p(μ^n)`` on an element of ``p ◁ n ◁ n ◁ X``."""
    return p.fmap(lambda k: n.mult_at(k[1]))(elem)


def element_violations(report, law, r, s, elem, where):
    """Report where the values of ``elem ∈ r ◁ s ◁ X`` fail to form a
    copresheaf map ``r[I] -> s ◁ X``."""
    I, g = r.split(elem)
    A = r.arity(I)
    C = r.right.category
    for E, w in A.all_elements():
        for f in C.non_identity_out(E):
            moved = act_on(s, f, g((E, w)))
            report.expect(moved == g((C.tgt(f), A.act(f, w))), law, (where, label(f), label(w)))


def law_instances(m, p, bound):
    """Operations ``(M, I)`` of ``m ◁ p`` with ``deg M`` and ``Σ deg I``
    each at most ``bound``."""
    Q = p.positions()
    for M in m.carrier.operations(bound):
        for I in iter_copresheaf_maps(m.carrier.arity(M), Q, budget=bound):
            yield M, I


def demultiply(m, M, N, elem):
    """The element of ``m ◁ m ◁ Y`` over ``(M, N)`` that ``μ`` sends to
    ``elem ∈ m ◁ Y``."""
    q = m.carrier
    _, g = q.split(elem)
    colim, W = m.mult_colimit(M, N), m.mult_witness(M, N)
    back = {(E, colim.cls(E, *W((E, d)))): (E, d) for E, d in W.keys()}
    inner = {}
    for z, Nz in N.items():
        A = q.arity(Nz)
        inner[z] = q.join(Nz, FrozenMap({(F, w): g(back[(F, colim.cls(F, z, w))]) for F, w in A.all_elements()}))
    return q.join(M, FrozenMap(inner))


class MonadMorphism:
    """A morphism of monads ``(p, α)`` from ``(c, m)`` to ``(d, n)``.

    Args:
        target (FamilialMonad): ``m`` on ``c``
        source (FamilialMonad): ``n`` on ``d``
        carrier (Bicomodule): ``p: c ↛ d``
        alpha_at (callable): element of ``m ◁ p ◁ X`` (iterated form) to
            element of ``p ◁ n ◁ X``; must only relabel values
    """

    def __init__(self, target, source, carrier, alpha_at, name="φ"):
        if carrier.left.category.objects != target.category.objects:
            raise FrameMismatch(f"{name}: {carrier.name} does not start at {target.category.name}")
        if carrier.right.category.objects != source.category.objects:
            raise FrameMismatch(f"{name}: {carrier.name} does not end at {source.category.name}")
        self.target = target
        self.source = source
        self.carrier = carrier
        self.alpha_at = alpha_at
        self.name = name
        self.dom = CompositeBicomodule(target.carrier, carrier)
        self.cod = CompositeBicomodule(carrier, source.carrier)

    @memoize_method
    def _generic(self, I):
        _, x = generic_element(self.dom, I)
        return self.alpha_at(x)

    def alpha_one(self, I):
        """``α₁`` on an operation ``(M, I)`` of ``m ◁ p``."""
        return self.carrier.split(self._generic(I))[0]

    def alpha_sharp(self, I):
        """``α♯``: ``p[α₁] -> n ◁ colim``, keyed by ``(object, element)``."""
        return self.carrier.split(self._generic(I))[1]

    def as_bicomodule_map(self):
        """``α: m ◁ p -> p ◁ n``."""
        cod = self.cod
        return BicomoduleMap(self.dom, cod, lambda I: cod.split(self._generic(I))[0],
                             lambda I: cod.split(self._generic(I))[1], name=f"α_{self.name}")

    def __repr__(self):
        return f"MonadMorphism({self.name}: {self.target.name} -> {self.source.name} via {self.carrier.name})"


def identity_morphism(m, name=None):
    """``(c, α)`` with ``α`` the canonical ``m ◁ c ≅ c ◁ m``."""
    C = m.category
    q = m.carrier
    p = IdentityBicomodule(m.base)

    def alpha_at(elem):
        M, Phi = q.split(elem)
        base = FrozenMap({z: Phi(z)[1]((z[0], C.identity(z[0]))) for z in Phi.keys()})
        g = {(E, f): q.join(*q.act_element(f, M, base)) for E, f in p.arity(q.output(M)).all_elements()}
        return p.join(q.output(M), FrozenMap(g))

    return MonadMorphism(m, m, p, alpha_at, name=name or f"id_{m.name}")


def compose_morphisms(phi, psi, name=None):
    """``φ`` then ``ψ``: carrier ``p ◁ q``, ``α = (p ◁ β)(α ◁ q)``."""
    if phi.source is not psi.target:
        raise FrameMismatch(f"{phi.name} ends at {phi.source.name}, {psi.name} starts at {psi.target.name}")
    p = phi.carrier
    carrier = CompositeBicomodule(p, psi.carrier)

    def alpha_at(elem):
        return p.fmap(lambda k: psi.alpha_at(k[1]))(phi.alpha_at(elem))

    return MonadMorphism(phi.target, psi.source, carrier, alpha_at, name=name or f"{psi.name}∘{phi.name}")


def induced_algebra_functor(phi, A, bound=None):
    """The ``m``-algebra ``p ◁ X`` induced by an ``n``-algebra ``A`` on ``X``:
    ``m ◁ p ◁ X -> p ◁ n ◁ X -> p ◁ X``."""
    p = phi.carrier
    bound = A.bound if bound is None else bound
    Y = p.apply(A.carrier, bound, name=f"{p.name}◁{A.carrier.name}")
    lift = p.fmap(A.act_on)

    def action(elem):
        return lift(phi.alpha_at(elem))

    return Algebra(phi.target, Y, action, bound=bound, name=f"{phi.name}^*({A.name})")


def _check_units(report, phi, bound):
    m, n, p = phi.target, phi.source, phi.carrier
    for P in p.operations(bound):
        _, x = generic_element(p, P)
        lhs = phi.alpha_at(unit_on(m, p, p.output(P), x))
        rhs = unit_after(n, p, x)
        report.expect(lhs == rhs, "unit", label(P), f"{label(lhs)} != {label(rhs)}")


def _check_multiplication(report, phi, bound):
    m, n, p = phi.target, phi.source, phi.carrier
    q = m.carrier
    Q = q.positions()
    for M in q.operations(bound):
        for N in iter_copresheaf_maps(q.arity(M), Q, budget=bound - q.degree(M)):
            R = m.mult_op(M, N)
            for I in iter_copresheaf_maps(q.arity(R), p.positions(), budget=bound):
                _, e = generic_element(phi.dom, (R, I))
                x = demultiply(m, M, N, e)
                lhs = phi.alpha_at(m.mult_at(x))
                rhs = mult_after(n, p, phi.alpha_at(q.fmap(lambda k: phi.alpha_at(k[1]))(x)))
                report.expect(lhs == rhs, "multiplication", (label(M), label(N), label(I)),
                              f"{label(lhs)} != {label(rhs)}")


def _check_naturality(report, phi, bound):
    C = phi.target.category
    for M, I in law_instances(phi.target, phi.carrier, bound):
        _, x = generic_element(phi.dom, (M, I))
        y = phi.alpha_at(x)
        element_violations(report, "alpha-typing", phi.carrier, phi.source.carrier, y, (label(M), label(I)))
        for f in C.non_identity_out(phi.dom.output((M, I))):
            lhs = phi.alpha_at(act_on(phi.dom, f, x))
            report.expect(lhs == act_on(phi.cod, f, y), "naturality", (label(f), label(M), label(I)))


def check_monad_morphism(phi, bound):
    """Unit, multiplication and naturality of ``α`` on generic elements, and
    the ``m``-algebra structure ``α₁`` puts on ``p(1)``.

    The bound applies separately to the ``m``-degree and to the summed
    ``p``-degree of an instance.
    """
    report = Report(f"monad morphism {phi.name}", bound=bound, exactness=phi.carrier.exactness_at(bound))
    _check_naturality(report.add(Report("naturality", bound=bound)), phi, bound)
    _check_units(report.add(Report("unit", bound=bound)), phi, bound)
    _check_multiplication(report.add(Report("multiplication", bound=bound)), phi, bound)
    positions = induced_algebra_functor(phi, terminal_algebra(phi.source), bound)
    report.add(check_algebra(positions, bound))
    logger.info("%s", report.summary())
    return report


class TwoCell:
    """A 2-cell ``ρ: (p, α) => (q, β)`` between parallel monad morphisms.

    ``ρ_X: p ◁ X -> q ◁ n ◁ X`` acts on elements by relabeling, like
    ``MonadMorphism.alpha_at``.
    """

    def __init__(self, source, target, rho_at, name="ρ"):
        if source.target is not target.target or source.source is not target.source:
            raise FrameMismatch(f"{name}: {source.name} and {target.name} are not parallel")
        self.source = source
        self.target = target
        self.rho_at = rho_at
        self.name = name
        self.cod = CompositeBicomodule(target.carrier, target.source.carrier)

    @memoize_method
    def _generic(self, P):
        _, x = generic_element(self.source.carrier, P)
        return self.rho_at(x)

    def rho_one(self, P):
        return self.target.carrier.split(self._generic(P))[0]

    def rho_sharp(self, P):
        return self.target.carrier.split(self._generic(P))[1]

    def as_bicomodule_map(self):
        """``ρ: p -> q ◁ n``."""
        cod = self.cod
        return BicomoduleMap(self.source.carrier, cod, lambda P: cod.split(self._generic(P))[0],
                             lambda P: cod.split(self._generic(P))[1], name=self.name)

    def __repr__(self):
        return f"TwoCell({self.name}: {self.source.name} => {self.target.name})"


def identity_2cell(phi):
    """``p ◁ η^n``."""
    n, p = phi.source, phi.carrier
    return TwoCell(phi, phi, lambda elem: unit_after(n, p, elem), name=f"1_{phi.name}")


def check_2cell(rho, bound):
    """``(q ◁ μ^n)(ρ ◁ n)α = (q ◁ μ^n)(β ◁ n)(m ◁ ρ)`` on generic elements,
    and that ``ρ`` is a map of bicomodules."""
    phi, psi = rho.source, rho.target
    m, n = phi.target, phi.source
    q = psi.carrier
    report = Report(f"2-cell {rho.name}", bound=bound, exactness=phi.carrier.exactness_at(bound))
    typing = report.add(Report("typing", bound=bound))
    for P in phi.carrier.operations(bound):
        element_violations(typing, "rho-typing", q, n.carrier, rho._generic(P), label(P))
    if not typing.ok:
        return report
    report.add(check_square(rho.as_bicomodule_map(), bound))
    law = report.add(Report("transformation", bound=bound))
    for M, I in law_instances(m, phi.carrier, bound):
        _, x = generic_element(phi.dom, (M, I))
        lhs = mult_after(n, q, rho.rho_at(phi.alpha_at(x)))
        rhs = mult_after(n, q, psi.alpha_at(m.carrier.fmap(lambda k: rho.rho_at(k[1]))(x)))
        law.expect(lhs == rhs, "transformation", (label(M), label(I)), f"{label(lhs)} != {label(rhs)}")
    logger.info("%s", report.summary())
    return report


def vertical_compose(rho, sigma, name=None):
    """``ρ: φ => ψ`` then ``σ: ψ => χ``: ``p -> q ◁ n -> r ◁ n ◁ n -> r ◁ n``."""
    if rho.target is not sigma.source:
        raise FrameMismatch(f"{rho.name} ends at {rho.target.name}, {sigma.name} starts at {sigma.source.name}")
    n, r = rho.source.source, sigma.target.carrier

    def rho_at(elem):
        return mult_after(n, r, sigma.rho_at(rho.rho_at(elem)))

    return TwoCell(rho.source, sigma.target, rho_at, name=name or f"{sigma.name}·{rho.name}")
