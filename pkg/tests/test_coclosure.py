from math import comb

import pytest

from catsharp.coclosure import (
    Coclosure,
    ComonadOnObject,
    LeftComodule,
    check_adjunction,
    check_comodule,
    check_comonad,
    check_triangles,
    coclosure,
    coclosure_comonad,
    comodule_transfer,
    comodule_untransfer,
    comonad_to_comonoid,
    endo_comonad,
    identity_comonad,
)
from catsharp.comod import CopresheafBicomodule, IdentityBicomodule, check_bicomodule, check_square
from catsharp.fincat import G, chain_category, commutative_square, find_isomorphism, terminal_category, vec
from catsharp.monad import monad_maybe, monad_path
from catsharp.utils import FrameMismatch, LawViolation


@pytest.fixture(scope="module")
def path_carrier():
    return monad_path().carrier


@pytest.mark.parametrize("n", range(4))
def test_path_coclosure_arity_counts_subpaths(path_carrier, n):
    cc = Coclosure(path_carrier, path_carrier, bound=n)
    A = cc.arity(("e", n))
    assert A.sizes() == {"v": n + 1, "e": comb(n + 2, 2)}
    assert A.exactness.exact


def test_coclosure_unit_is_a_square():
    X = CopresheafBicomodule(vec(1))
    cc, eta = coclosure(X, CopresheafBicomodule(vec(2)))
    assert check_bicomodule(cc).ok
    assert check_square(eta).ok


def test_coclosure_needs_a_common_right_frame(path_carrier):
    with pytest.raises(FrameMismatch):
        Coclosure(path_carrier, IdentityBicomodule(commutative_square()))


@pytest.mark.parametrize("p, q, r", [
    (lambda: IdentityBicomodule(chain_category(1)), lambda: IdentityBicomodule(chain_category(1)),
     lambda: IdentityBicomodule(chain_category(1))),
    (lambda: CopresheafBicomodule(vec(1)), lambda: CopresheafBicomodule(vec(1)), lambda: IdentityBicomodule(G)),
    (lambda: CopresheafBicomodule(vec(2)), lambda: CopresheafBicomodule(vec(1)), lambda: IdentityBicomodule(G)),
    (lambda: CopresheafBicomodule(vec(0)), lambda: CopresheafBicomodule(vec(2)), lambda: IdentityBicomodule(G)),
], ids=["identity", "vec1-vec1", "vec2-vec1", "vec0-vec2"])
def test_triangle_identities(p, q, r):
    report = check_triangles(p(), q(), r())
    assert report.ok, report.summary()
    assert len(report.children) == 2


@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (0, 1), (2, 1), (0, 0), (2, 2)])
def test_adjunction_is_a_bijection(n, m):
    p, q = CopresheafBicomodule(vec(n)), CopresheafBicomodule(vec(m))
    report = check_adjunction(p, q, IdentityBicomodule(G))
    assert report.ok, report.summary()


def test_adjunction_over_identity_bicomodules():
    C = chain_category(1)
    report = check_adjunction(IdentityBicomodule(C), IdentityBicomodule(C), IdentityBicomodule(C))
    assert report.ok, report.summary()


def test_identity_comonad_gives_back_the_category():
    C = commutative_square()
    E = identity_comonad(C)
    assert check_comonad(E, progress=False).ok
    c, phi = comonad_to_comonoid(E)
    assert find_isomorphism(C, c.category) is not None


def test_comonad_with_a_forgetful_comultiplication_is_rejected():
    E = identity_comonad(chain_category(1))
    bad = ComonadOnObject(E.carrier, E.counit_sharp, E.comult_cod, lambda I, k, l: k, name="bad")
    assert "left-counit" in check_comonad(bad, progress=False).laws_violated()
    with pytest.raises(LawViolation):
        comonad_to_comonoid(bad)


def test_endo_comonad_on_short_paths(path_carrier):
    E = endo_comonad(path_carrier, bound=2)
    assert check_comonad(E, bound=2, progress=False).ok
    c, _ = comonad_to_comonoid(E, bound=2)
    assert len(c.category.objects) == 4
    assert len(c.category.morphisms) == 18


def test_kleisli_comonad_of_maybe():
    m = monad_maybe()
    E = coclosure_comonad(IdentityBicomodule(m.carrier.left), m)
    assert check_comonad(E, progress=False).ok
    c, phi = comonad_to_comonoid(E)
    assert len(c.category.objects) == 1
    assert len(c.category.morphisms) == 2


def _identity_coaction(p, E):
    return LeftComodule(p, E, p.output, lambda I, k: p.act(k, I), lambda I, k: p.restrict(k, I))


def test_comodule_transfer_round_trip():
    E = identity_comonad(G)
    M = _identity_coaction(CopresheafBicomodule(vec(2)), E)
    assert check_comodule(M).ok
    q = comodule_transfer(M)
    assert check_bicomodule(q).ok
    back = comodule_untransfer(q, E)
    assert check_comodule(back).ok
    assert sorted(back.p.operations(), key=str) == sorted(M.p.operations(), key=str)


def test_broken_coaction_is_reported():
    E = identity_comonad(chain_category(1))
    p = IdentityBicomodule(chain_category(1))
    M = LeftComodule(p, E, p.output, lambda I, k: I, lambda I, k: p.restrict(k, I))
    assert not check_comodule(M).ok


def test_terminal_coclosure_is_y():
    T = terminal_category()
    cc = Coclosure(IdentityBicomodule(T), IdentityBicomodule(T))
    assert [cc.arity(I).size() for I in cc.operations()] == [1]
