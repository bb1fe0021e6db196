import logging

from ..utils import FrozenMap, label
from .polynomial import CompositePolynomial, FinitePolynomial, y

logger = logging.getLogger(__name__)


def _as_callable(m):
    if isinstance(m, dict):
        return m.__getitem__
    return m


class PolyMorphism:
    """A morphism of polynomials ``φ: p -> q``.

    Args:
        dom, cod (Polynomial): domain and codomain
        on_positions (callable or dict): ``I -> φ₁(I)``
        on_directions (callable): ``(I, d) -> φ♯_I(d)`` for ``d`` a direction
            of ``φ₁(I)`` in ``cod``, returning a direction of ``I`` in ``dom``
    """

    def __init__(self, dom, cod, on_positions, on_directions, name="φ"):
        self.dom = dom
        self.cod = cod
        self._on_positions = _as_callable(on_positions)
        self._on_directions = on_directions
        self.name = name

    def __call__(self, I):
        return self._on_positions(I)

    def sharp(self, I, d):
        return self._on_directions(I, d)

    def sharp_map(self, I):
        return FrozenMap({d: self.sharp(I, d) for d in self.cod.directions(self(I))})

    def then(self, other):
        """First ``self`` then ``other``."""
        first, second = self, other
        return PolyMorphism(
            first.dom,
            second.cod,
            lambda I: second(first(I)),
            lambda I, d: first.sharp(I, second.sharp(first(I), d)),
            name=f"{second.name}∘{first.name}",
        )

    def __repr__(self):
        return f"PolyMorphism({self.name}: {self.dom.name} -> {self.cod.name})"


def identity_morphism(p):
    return PolyMorphism(p, p, lambda I: I, lambda I, d: d, name=f"id_{p.name}")


def compose_morphisms(phi, psi):
    """``psi ∘ phi``."""
    return phi.then(psi)


def tri_morphisms(phi, psi, dom=None, cod=None):
    """Whiskered morphism ``φ ◁ ψ: p ◁ q -> p' ◁ q'``."""
    dom = dom or CompositePolynomial(phi.dom, psi.dom)
    cod = cod or CompositePolynomial(phi.cod, psi.cod)

    def on_positions(position):
        I, J = position
        image = phi(I)
        return (image, FrozenMap({i2: psi(J(phi.sharp(I, i2))) for i2 in phi.cod.directions(image)}))

    def on_directions(position, d):
        I, J = position
        i2, j2 = d
        i = phi.sharp(I, i2)
        return (i, psi.sharp(J(i), j2))

    return PolyMorphism(dom, cod, on_positions, on_directions, name=f"{phi.name}◁{psi.name}")


def associator(p, q, r):
    """``(p ◁ q) ◁ r -> p ◁ (q ◁ r)``."""
    dom = CompositePolynomial(CompositePolynomial(p, q), r)
    cod = CompositePolynomial(p, CompositePolynomial(q, r))

    def on_positions(position):
        (I, J), K = position
        return (I, FrozenMap({i: (J(i), FrozenMap({j: K((i, j)) for j in q.directions(J(i))}))
                              for i in p.directions(I)}))

    def on_directions(position, d):
        i, (j, k) = d
        return ((i, j), k)

    return PolyMorphism(dom, cod, on_positions, on_directions, name="α")


def left_unitor_inverse(p):
    """``p -> y ◁ p``."""
    return PolyMorphism(p, CompositePolynomial(y(), p),
                        lambda I: ("*", FrozenMap({"*": I})),
                        lambda I, d: d[1], name="λ⁻¹")


def right_unitor_inverse(p):
    """``p -> p ◁ y``."""
    return PolyMorphism(p, CompositePolynomial(p, y()),
                        lambda I: (I, FrozenMap({i: "*" for i in p.directions(I)})),
                        lambda I, d: d[0], name="ρ⁻¹")


def compare_morphisms(report, law, phi, psi, positions):
    """Record every position where ``φ`` and ``ψ`` disagree."""
    for I in positions:
        a, b = phi(I), psi(I)
        if not report.expect(a == b, law, label(I), f"positions {label(a)} != {label(b)}"):
            continue
        for d in phi.cod.directions(a):
            x, z = phi.sharp(I, d), psi.sharp(I, d)
            report.expect(x == z, law, (label(I), label(d)), f"directions {label(x)} != {label(z)}")
    return report


def classify_morphism(phi, bound=None):
    """Whether ``φ`` is cartesian (bijective on directions) and vertical
    (bijective on positions), over the positions enumerated at ``bound``."""
    positions = phi.dom.positions(bound)
    cartesian = True
    for I in positions:
        target = phi.cod.directions(phi(I))
        images = {phi.sharp(I, d) for d in target}
        if len(images) != len(target) or len(images) != len(phi.dom.directions(I)):
            cartesian = False
            break
    images = {phi(I) for I in positions}
    vertical = len(images) == len(positions) and images == set(phi.cod.positions(bound))
    exactness = phi.dom.exactness_at(bound).meet(phi.cod.exactness_at(bound))
    return {"cartesian": cartesian, "vertical": vertical, "exactness": exactness}


def find_polynomial_isomorphism(p, q, bound=None):
    """Pair positions with equal direction counts; None if impossible."""
    ps, qs = p.positions(bound), q.positions(bound)
    if len(ps) != len(qs):
        return None
    by_count = {}
    for J in qs:
        by_count.setdefault(len(q.directions(J)), []).append(J)
    on_positions = {}
    for I in ps:
        bucket = by_count.get(len(p.directions(I)))
        if not bucket:
            return None
        on_positions[I] = bucket.pop(0)
    sharps = {I: dict(zip(q.directions(J), p.directions(I))) for I, J in on_positions.items()}
    return PolyMorphism(p, q, on_positions, lambda I, d: sharps[I][d], name="iso")


def materialize(p, bound=None, name=None):
    """Finite table of ``p`` at ``bound``."""
    positions = p.positions(bound)
    return FinitePolynomial({I: p.directions(I) for I in positions},
                            {I: p.degree(I) for I in positions}, name=name or p.name)
