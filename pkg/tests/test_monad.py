import pytest

from catsharp.fincat import commutative_square, find_isomorphism, representable, set_copresheaf, vec
from catsharp.monad import (
    Algebra,
    SmcMonad,
    associative_operad,
    category_as_path_algebra,
    check_algebra,
    check_algebra_map,
    check_monad,
    check_operad,
    commutative_operad,
    compare_monads,
    free_algebra,
    identity_algebra,
    monad_from_operad,
    monad_maybe,
    monoid_as_list_algebra,
    terminal_algebra,
)
from catsharp.utils import FrozenMap, NotSigmaFree

Z2 = {"e": {"e": "e", "a": "a"}, "a": {"e": "a", "a": "e"}}


@pytest.fixture(scope="module")
def assoc():
    return monad_from_operad(associative_operad())


def test_identity_monad_laws(identity_square):
    assert check_monad(identity_square, bound=0, progress=False).ok


def test_path_monad_laws(path):
    report = check_monad(path, bound=3, progress=False)
    assert report.ok, report.summary()
    assert str(report.exactness) == "truncated@3"


def test_list_monad_laws(lists):
    assert check_monad(lists, bound=3, progress=False).ok


def test_maybe_monad_laws():
    report = check_monad(monad_maybe(), bound=1, progress=False)
    assert report.ok
    assert report.exactness.exact


def test_associative_operad_monad_laws(assoc):
    assert check_operad(associative_operad()).ok
    assert check_monad(assoc, bound=3, progress=False).ok


@pytest.mark.slow
def test_smc_monad_laws(smc):
    assert check_monad(smc, bound=2, progress=False).ok


def test_commutative_operad_is_not_sigma_free():
    with pytest.raises(NotSigmaFree):
        monad_from_operad(commutative_operad())
    monad_from_operad(commutative_operad(), allow_non_free=True)


def test_free_list_algebra_counts_words(lists):
    A = free_algebra(lists, set_copresheaf(["a", "b"]), bound=2)
    assert A.carrier.size() == 1 + 2 + 4
    assert not A.carrier.exactness.exact


def test_free_path_algebra_on_an_edge(path):
    A = free_algebra(path, vec(1), bound=3)
    assert A.carrier.sizes() == {"v": 2, "e": 3}
    assert A.carrier.exactness.exact
    assert check_algebra(A, bound=3).ok


def test_free_maybe_algebra():
    A = free_algebra(monad_maybe(), set_copresheaf(["a", "b"]))
    assert A.carrier.size() == 3


def test_list_and_associative_operad_agree(lists, assoc):
    assert compare_monads(lists, assoc, bound=3) is not None


def test_list_and_maybe_differ(lists):
    assert compare_monads(lists, monad_maybe(), bound=2) is None


def test_category_is_a_path_algebra(path):
    A = category_as_path_algebra(commutative_square(), path, bound=3)
    assert check_algebra(A).ok


def test_monoid_is_a_list_algebra(lists):
    A = monoid_as_list_algebra(["e", "a"], "e", Z2, lists, bound=3, name="Z2")
    assert check_algebra(A).ok


def test_first_letter_is_not_a_list_algebra(lists):
    def first(elem):
        N, h = lists.carrier.split(elem)
        return h(("*", 0)) if N else "e"

    A = Algebra(lists, set_copresheaf(["e", "a"]), first, bound=3, name="first")
    report = check_algebra(A)
    assert not report.ok
    assert "multiplication" in report.laws_violated()


def test_map_to_the_terminal_algebra(lists):
    A = monoid_as_list_algebra(["e", "a"], "e", Z2, lists, bound=3, name="Z2")
    T = terminal_algebra(lists)
    assert check_algebra(T, bound=3).ok
    assert check_algebra_map(A, T, lambda k: "*", bound=3).ok


def test_identity_algebra(identity_square, square):
    X = representable(square, "a")
    A = identity_algebra(identity_square, X)
    assert check_algebra(A, bound=0).ok
    assert find_isomorphism(identity_square.apply(X), X) is not None


def test_maybe_composites_are_looked_up_by_value():
    m = monad_maybe()
    point = ("*", 0)
    assert m.mult_op("just", {point: "nothing"}) == "nothing"
    assert m.mult_op("just", FrozenMap({point: "just"})) == "just"
    assert m.mult_witness("just", {point: "just"})(point) == (point, 0)
    assert m.mult_op("nothing", {}) == "nothing"


def _fill(lengths, vertex, edge):
    """Map out of ``disjoint_paths(lengths)``: every vertex to ``vertex``,
    edge ``(i, k)`` to ``edge(i, k)``."""
    h = {("v", (i, k)): vertex for i, n in enumerate(lengths) for k in range(n + 1)}
    h.update({("e", (i, k)): edge(i, k) for i, n in enumerate(lengths) for k in range(1, n + 1)})
    return FrozenMap(h)


IDENTITY_EDGE = ("e", 1, (0,), (1,))
SWAP = ("e", 2, (1, 0), (0, 0))
PARALLEL = ("e", 2, (0, 1), (1, 1))


def test_smc_composition_of_tensors_is_the_tensor_of_composites(smc):
    in_parallel = smc.mult_op(PARALLEL, _fill((1, 1), ("v", 1), lambda i, k: ("e", 1, (0,), (2,))))
    in_series = smc.mult_op(("e", 1, (0,), (2,)), _fill((2,), ("v", 2), lambda i, k: PARALLEL))
    assert in_parallel == in_series == ("e", 2, (0, 1), (2, 2))


def test_smc_identity_of_a_tensor_is_the_tensor_of_identities(smc):
    empty = ("e", 1, (0,), (0,))
    lhs = smc.mult_op(PARALLEL, _fill((1, 1), ("v", 1), lambda i, k: empty))
    rhs = smc.mult_op(empty, _fill((0,), ("v", 2), None))
    assert lhs == rhs == ("e", 2, (0, 1), (0, 0))


def test_smc_symmetry_is_natural(smc):
    twice = ("e", 1, (0,), (2,))
    swap_first = smc.mult_op(twice, _fill((2,), ("v", 2), lambda i, k: SWAP if k == 1 else PARALLEL))
    swap_last = smc.mult_op(twice, _fill((2,), ("v", 2), lambda i, k: PARALLEL if k == 1 else SWAP))
    assert swap_first == swap_last == ("e", 2, (1, 0), (1, 1))


def test_smc_symmetries_compose_as_permutations(smc):
    three = ("e", 1, (0,), (2,))
    rotate, flip = ("e", 3, (1, 2, 0), (0, 0, 0)), ("e", 3, (1, 0, 2), (0, 0, 0))
    composite = smc.mult_op(three, _fill((2,), ("v", 3), lambda i, k: rotate if k == 1 else flip))
    assert composite == ("e", 3, (2, 1, 0), (0, 0, 0))
    reverse = smc.mult_op(three, _fill((2,), ("v", 3), lambda i, k: flip if k == 1 else rotate))
    assert reverse == ("e", 3, (0, 2, 1), (0, 0, 0))


class TwistedSmc(SmcMonad):
    """Swaps the first two target slots of a composite whenever exactly two
    of the substituted edge operations carry a non-identity symmetry."""

    def _composite(self, M, N):
        R, W = super()._composite(M, N)
        twisted = [op for (E, _), op in N.items() if E == "e" and op[2] != tuple(range(op[1]))]
        if R[0] == "e" and len(twisted) == 2:
            R = ("e", R[1], (R[2][1], R[2][0]) + R[2][2:], R[3])
        return R, W


def _twisted_triple():
    twice = ("e", 1, (0,), (2,))
    N = _fill((2,), ("v", 2), lambda i, k: PARALLEL)
    P = _fill((2, 2), ("v", 2), lambda i, k: SWAP)
    return twice, N, P


def test_wrong_permutation_sum_breaks_associativity():
    report = check_monad(TwistedSmc(), bound=1, progress=False, triples=[_twisted_triple()])
    assert not report.ok
    assert report.laws_violated() == ["associativity"]


def test_smc_passes_the_same_associativity_instance(smc):
    report = check_monad(smc, bound=1, progress=False, triples=[_twisted_triple()])
    assert report.ok, report.summary()
