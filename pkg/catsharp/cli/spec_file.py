"""Spec files: named categories, copresheaves, monads, algebras, monad
morphisms and wreaths read from YAML.

Names that are not declared fall back to builtins (``g``, ``square``,
``vec2``, ``path``, ``smc``, ``sm``, ...). Everything is built lazily and
cached, so two references to ``path`` see the same monad.
"""
import logging
import re
from pathlib import Path

import numpy as np
import yaml

from ..algem import builtin_el, builtin_sm, identity_morphism, sm_morphism, trivial_wreath
from ..comod import FiniteBicomodule, copresheaf_as_bicomodule
from ..fincat import (
    Copresheaf,
    FinCategory,
    chain_category,
    commutative_square,
    discrete_category,
    free_category,
    graph,
    graph_indexing_category,
    monoid_category,
    monotone_map_category,
    poset_category,
    random_category,
    representable,
    set_copresheaf,
    terminal,
    terminal_copresheaf,
    ul,
    vec,
)
from ..monad import (
    ExplicitMonad,
    IdentityMonad,
    ListMonad,
    OperadMonad,
    PathMonad,
    SmcMonad,
    algebra_from_table,
    associative_operad,
    category_as_path_algebra,
    commutative_operad,
    free_algebra,
    identity_algebra,
    monad_from_operad,
    monad_identity,
    monad_list,
    monad_maybe,
    monad_path,
    monad_smc,
    monoid_as_list_algebra,
    terminal_algebra,
)
from ..utils import FrozenMap, LawViolation, SpecError, label

logger = logging.getLogger(__name__)

SECTIONS = ("categories", "copresheaves", "monads", "algebras", "morphisms", "wreaths")

BUILTIN_CATEGORIES = {
    "1": lambda: terminal(),
    "g": graph_indexing_category,
    "square": commutative_square,
}

BUILTIN_MONADS = {
    "path": monad_path,
    "list": monad_list,
    "smc": monad_smc,
    "maybe": monad_maybe,
}

_CHAIN = re.compile(r"^\[(\d+)\]$")
_GRAPH = re.compile(r"^(vec|ul)(\d+)$")
_PATH_OP = re.compile(r"^e(\d+)$")
_SMC_VERTEX = re.compile(r"^v(\d+)$")
_SMC_EDGE = re.compile(r"^e(\d+)((?:\.\d*)*)$")


def _require(decl, key, where):
    try:
        return decl[key]
    except (KeyError, TypeError):
        raise SpecError(f"{where}: missing '{key}'") from None


def _lookup(table, key, where, what):
    """``table[key]``, also trying the key's string form (YAML keys are
    often read as ints)."""
    if key in table:
        return table[key]
    for k, v in table.items():
        if str(k) == str(key):
            return v
    raise SpecError(f"{where}: unknown {what} {key!r}")


def category_from_tables(decl, name):
    """A FinCategory from ``objects``, non-identity ``morphisms``
    ``{f: [a, b]}``, optional ``identities`` and ``compose`` triples
    ``[first, second, composite]``."""
    objects = list(_require(decl, "objects", name))
    known = set(objects)
    identities = dict(decl.get("identities") or {})
    for a in identities:
        if a not in known:
            raise SpecError(f"{name}: identity for unknown object {a!r}")
    identities = {a: identities.get(a, f"id_{a}") for a in objects}
    morphisms = {i: (a, a) for a, i in identities.items()}
    for f, ends in (decl.get("morphisms") or {}).items():
        if not isinstance(ends, (list, tuple)) or len(ends) != 2:
            raise SpecError(f"{name}: morphism {f!r} needs [source, target]")
        a, b = ends
        if a not in known or b not in known:
            raise SpecError(f"{name}: morphism {f!r} has unknown ends {a!r}, {b!r}")
        if f in morphisms:
            raise SpecError(f"{name}: morphism {f!r} declared twice")
        morphisms[f] = (a, b)
    composition = {}
    for entry in decl.get("compose") or ():
        if len(entry) != 3:
            raise SpecError(f"{name}: compose entries are [first, second, composite], got {entry!r}")
        for f in entry:
            if f not in morphisms:
                raise SpecError(f"{name}: compose mentions unknown morphism {f!r}")
        f, g, h = entry
        composition[(f, g)] = h
    try:
        return FinCategory(objects, morphisms, identities, composition, name=name)
    except LawViolation as e:
        raise SpecError(str(e)) from e


def builtin_category(decl, name):
    kind = decl["builtin"]
    if kind == "terminal":
        return terminal()
    if kind == "g":
        return graph_indexing_category()
    if kind == "chain":
        return chain_category(int(_require(decl, "n", name)))
    if kind == "square":
        return commutative_square()
    if kind == "discrete":
        return discrete_category(_require(decl, "objects", name), name=name)
    if kind == "poset":
        relations = [tuple(r) for r in decl.get("relations") or ()]
        return poset_category(list(_require(decl, "elements", name)), relations, name=name)
    if kind == "monoid":
        return monoid_category(_require(decl, "elements", name), _require(decl, "unit", name),
                               _require(decl, "product", name), name=name)
    if kind == "free":
        edges = {e: tuple(ends) for e, ends in (decl.get("edges") or {}).items()}
        return free_category(list(_require(decl, "objects", name)), edges, name=name)
    if kind == "monotone":
        return monotone_map_category(int(_require(decl, "n", name)))
    if kind == "random":
        rng = np.random.default_rng(int(decl.get("seed", 0)))
        return random_category(rng, n_objects=int(decl.get("n", 4)),
                               edge_probability=float(decl.get("p", 0.5)), free=decl.get("free"))
    raise SpecError(f"{name}: unknown builtin category {kind!r}")


class SpecFile:
    """The resolved contents of a spec file.

    Args:
        data (dict): the parsed YAML document
        path (Path, optional): where it was read from
    """

    def __init__(self, data=None, path=None):
        data = data or {}
        if not isinstance(data, dict):
            raise SpecError(f"{path}: a spec file is a mapping of sections")
        unknown = set(data) - set(SECTIONS) - {"bound", "tasks"}
        if unknown:
            raise SpecError(f"{path}: unknown sections {sorted(unknown)}")
        self.path = path
        self.bound = data.get("bound")
        self.tasks = list(data.get("tasks") or ())
        self.declarations = {s: dict(data.get(s) or {}) for s in SECTIONS}
        self._cache = {s: {} for s in SECTIONS}
        self._resolving = set()

    def __repr__(self):
        counts = {s: len(d) for s, d in self.declarations.items() if d}
        return f"SpecFile({self.path}: {counts})"

    def names(self, section):
        return tuple(self.declarations[section])

    def _resolve(self, section, name, build, builtin=None):
        cache = self._cache[section]
        if name in cache:
            return cache[name]
        decl = self.declarations[section].get(name)
        if decl is None:
            value = builtin(name) if builtin is not None else None
            if value is None:
                raise SpecError(f"unknown {section[:-1] if section != 'categories' else 'category'} "
                                f"{name!r}")
        else:
            if (section, name) in self._resolving:
                raise SpecError(f"{name!r} refers to itself")
            self._resolving.add((section, name))
            try:
                value = build(decl, name)
            finally:
                self._resolving.discard((section, name))
        cache[name] = value
        logger.debug("resolved %s %s: %r", section, name, value)
        return value

    # categories

    def category(self, name):
        if isinstance(name, dict):
            return self._build_category(name, name.get("name", "C"))
        return self._resolve("categories", str(name), self._build_category, self._builtin_category)

    def _builtin_category(self, name):
        if name in BUILTIN_CATEGORIES:
            return BUILTIN_CATEGORIES[name]()
        match = _CHAIN.match(name)
        if match:
            return chain_category(int(match.group(1)))
        return None

    def _build_category(self, decl, name):
        if "builtin" in decl:
            return builtin_category(decl, name)
        return category_from_tables(decl, name)

    # copresheaves

    def copresheaf(self, name):
        return self._resolve("copresheaves", str(name), self._build_copresheaf, self._builtin_copresheaf)

    def _builtin_copresheaf(self, name):
        match = _GRAPH.match(name)
        if match:
            return (vec if match.group(1) == "vec" else ul)(int(match.group(2)))
        return None

    def _build_copresheaf(self, decl, name):
        kind = decl.get("builtin")
        if kind == "vec":
            return vec(int(_require(decl, "n", name)))
        if kind == "ul":
            return ul(int(_require(decl, "n", name)))
        if kind == "graph":
            edges = {e: tuple(ends) for e, ends in (decl.get("edges") or {}).items()}
            return graph(_require(decl, "vertices", name), edges, name=name)
        if kind == "set":
            return set_copresheaf(_require(decl, "elements", name), name=name)
        if kind == "representable":
            C = self.category(_require(decl, "category", name))
            return representable(C, _lookup({a: a for a in C.objects}, _require(decl, "object", name),
                                            name, "object"))
        if kind == "terminal":
            return terminal_copresheaf(self.category(_require(decl, "category", name)))
        if kind is not None:
            raise SpecError(f"{name}: unknown builtin copresheaf {kind!r}")
        C = self.category(_require(decl, "base", name))
        sets = {}
        for a, xs in (decl.get("sets") or {}).items():
            sets[_lookup({b: b for b in C.objects}, a, name, "object")] = list(xs)
        action = {}
        for f, table in (decl.get("action") or {}).items():
            action[_lookup({g: g for g in C.morphisms}, f, name, "morphism")] = dict(table)
        try:
            return Copresheaf(C, sets, action, name=name)
        except LawViolation as e:
            raise SpecError(str(e)) from e

    # monads

    def monad(self, name):
        return self._resolve("monads", str(name), self._build_monad, self._builtin_monad)

    def _builtin_monad(self, name):
        if name in BUILTIN_MONADS:
            return BUILTIN_MONADS[name]()
        if name == "associative":
            return monad_from_operad(associative_operad())
        return None

    def _build_monad(self, decl, name):
        if "tables" in decl:
            return explicit_monad(decl["tables"], name)
        kind = _require(decl, "builtin", name)
        if kind in BUILTIN_MONADS:
            return self.monad(kind) if kind not in self.declarations["monads"] else BUILTIN_MONADS[kind]()
        if kind == "identity":
            return monad_identity(self.category(_require(decl, "category", name)))
        if kind == "operad":
            operads = {"associative": associative_operad, "commutative": commutative_operad}
            operad = _lookup(operads, decl.get("operad", "associative"), name, "operad")()
            return monad_from_operad(operad, check_arity=int(decl.get("check_arity", 4)),
                                     allow_non_free=bool(decl.get("allow_non_free", False)))
        raise SpecError(f"{name}: unknown builtin monad {kind!r}")

    # algebras

    def algebra(self, name, bound=None):
        return self._resolve("algebras", str(name), lambda decl, n: self._build_algebra(decl, n, bound))

    def _build_algebra(self, decl, name, bound):
        m = self.monad(_require(decl, "monad", name))
        if "category" in decl:
            if not isinstance(m, PathMonad):
                raise SpecError(f"{name}: a category is an algebra of the path monad, not {m.name}")
            return category_as_path_algebra(self.category(decl["category"]), m, bound)
        if "free" in decl:
            return free_algebra(m, self.copresheaf(decl["free"]), bound)
        if "monoid" in decl:
            if not isinstance(m, ListMonad):
                raise SpecError(f"{name}: a monoid is an algebra of the list monad, not {m.name}")
            M = decl["monoid"]
            return monoid_as_list_algebra(_require(M, "elements", name), _require(M, "unit", name),
                                          _require(M, "product", name), m, bound, name=name)
        if "copresheaf" in decl:
            if not isinstance(m, IdentityMonad):
                raise SpecError(f"{name}: a bare copresheaf is an algebra of an identity monad")
            return identity_algebra(m, self.copresheaf(decl["copresheaf"]))
        if decl.get("terminal"):
            return terminal_algebra(m)
        if "action" in decl:
            return self._table_algebra(m, decl, name, bound)
        raise SpecError(f"{name}: an algebra needs one of category, free, monoid, copresheaf, "
                        f"terminal or action")

    def _table_algebra(self, m, decl, name, bound):
        """``action: [{op, args, value}]`` for monads on sets."""
        if m.category.objects != ("*",):
            raise SpecError(f"{name}: action tables are only read for monads on sets")
        X = set_copresheaf(_require(decl, "carrier", name), name=f"{name}.carrier")
        p = m.carrier
        ops = {label(I): I for I in p.operations(bound)}
        table = {}
        for entry in decl["action"]:
            I = _lookup(ops, _require(entry, "op", name), name, "operation")
            args = list(entry.get("args") or ())
            if len(args) != p.arity(I).size():
                raise SpecError(f"{name}: {label(I)} takes {p.arity(I).size()} arguments, got {len(args)}")
            key = p.join(I, FrozenMap({("*", i): x for i, x in enumerate(args)}))
            table[key] = _require(entry, "value", name)
        for _, elem in m.apply(X, bound).all_elements():
            if elem not in table:
                raise SpecError(f"{name}: no action given for {label(elem)}")
        return algebra_from_table(m, X, table, bound=bound, name=name)

    # monad morphisms and wreaths

    def morphism(self, name):
        return self._resolve("morphisms", str(name), self._build_morphism, self._builtin_morphism)

    def _builtin_morphism(self, name):
        if name == "sm":
            return sm_morphism(self.monad("path"))
        return None

    def _build_morphism(self, decl, name):
        kind = _require(decl, "builtin", name)
        if kind == "sm":
            return sm_morphism(self.monad(decl.get("monad", "path")), constant=bool(decl.get("constant")))
        if kind == "el":
            C = self.category(_require(decl, "category", name))
            return builtin_el(C, path=self.monad(decl.get("monad", "path")))
        if kind == "identity":
            return identity_morphism(self.monad(_require(decl, "monad", name)), name=name)
        raise SpecError(f"{name}: unknown builtin monad morphism {kind!r}")

    def wreath(self, name):
        return self._resolve("wreaths", str(name), self._build_wreath, self._builtin_wreath)

    def _builtin_wreath(self, name):
        if name == "sm":
            return builtin_sm(self.monad("path"))
        return None

    def _build_wreath(self, decl, name):
        kind = _require(decl, "builtin", name)
        if kind == "sm":
            return builtin_sm(self.monad(decl.get("monad", "path")))
        if kind == "trivial":
            return trivial_wreath(self.monad(_require(decl, "monad", name)))
        raise SpecError(f"{name}: unknown builtin wreath {kind!r}")

    # bicomodules for compose and coclosure

    def bicomodule(self, name):
        """A monad's carrier, or a copresheaf read as a bicomodule ``c ↛ 0``."""
        name = str(name)
        try:
            return self.monad(name).carrier
        except SpecError:
            pass
        try:
            return copresheaf_as_bicomodule(self.copresheaf(name))
        except SpecError:
            raise SpecError(f"unknown bicomodule {name!r}: not a monad or a copresheaf") from None


def explicit_monad(tables, name):
    """An ExplicitMonad on sets.

    ``operations`` maps each operation to its number of arguments (and
    ``degrees`` optionally to a degree); ``unit`` is a one-argument
    operation; ``mult`` lists ``{outer, inner, result, witness}`` entries,
    ``witness[r] = [i, a]`` saying that argument ``r`` of the result is
    argument ``a`` of the ``i``-th inner operation.
    """
    T = terminal()
    arities = dict(_require(tables, "operations", name))
    degrees = dict(tables.get("degrees") or {})
    ops = {I: ("*", set_copresheaf(range(int(n)), name=f"ul{n}")) for I, n in arities.items()}
    for I in degrees:
        _lookup(arities, I, name, "operation")
    carrier = FiniteBicomodule(T, T, ops, degrees=degrees, name=name)
    u = _require(tables, "unit", name)
    if int(_lookup(arities, u, name, "operation")) != 1:
        raise SpecError(f"{name}: the unit {u!r} must take exactly one argument")
    unit = {"*": (u, {("*", "id"): 0})}
    mult = {}
    for entry in tables.get("mult") or ():
        M = _require(entry, "outer", name)
        inner = list(entry.get("inner") or ())
        if len(inner) != int(_lookup(arities, M, name, "operation")):
            raise SpecError(f"{name}: {M!r} takes {arities[M]} arguments, got {len(inner)}")
        for J in inner:
            _lookup(arities, J, name, "operation")
        R = _require(entry, "result", name)
        witness = list(entry.get("witness") or ())
        if len(witness) != int(_lookup(arities, R, name, "operation")):
            raise SpecError(f"{name}: the witness of ({M}; {inner}) needs {arities[R]} entries")
        W = {}
        for r, (i, a) in enumerate(witness):
            if not 0 <= i < len(inner) or not 0 <= a < int(arities[inner[i]]):
                raise SpecError(f"{name}: witness entry {[i, a]} of ({M}; {inner}) is out of range")
            W[("*", r)] = (("*", i), a)
        N = {("*", i): J for i, J in enumerate(inner)}
        mult[(M, FrozenMap(N))] = (R, W)
    return ExplicitMonad(carrier, unit, mult, name=name)


def load_spec(path):
    """Read a spec file.

    Raises:
        SpecError: the file is missing or is not valid YAML
    """
    path = Path(path)
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise SpecError(f"{path} is not valid YAML: {e}") from e
    spec = SpecFile(data, path=path)
    logger.info("%r", spec)
    return spec


def parse_operation(m, token, bound=None):
    """An operation of ``m`` from its command line notation.

    ``v``, ``e3`` for path; ``0``, ``2`` for list and operads; ``v2``,
    ``e2.10.1.1`` for smc (``N``, the symmetry's digits, then the path
    lengths); object names for identity monads; otherwise the operation's
    label. The operation may lie above ``bound``: whether its hom-sets are
    complete is for the consumer to certify. ``bound`` only limits the
    label lookup on infinite carriers.
    """
    token = str(token).strip()
    p = m.carrier
    if isinstance(m, PathMonad):
        match = _PATH_OP.match(token)
        I = "v" if token == "v" else ("e", int(match.group(1))) if match else None
    elif isinstance(m, (ListMonad, OperadMonad)):
        I = None
        if token.isdigit():
            N = int(token)
            I = N if isinstance(m, ListMonad) else next((J for J in p.operations(N) if J[0] == N), None)
    elif isinstance(m, SmcMonad):
        I = _smc_operation(token)
    else:
        I = None
    if I is None and (p.is_finite or bound is not None):
        I = {label(J): J for J in p.operations(None if p.is_finite else bound)}.get(token)
    if I is None or I not in set(p.operations(p.degree(I))):
        raise SpecError(f"{m.name} has no operation {token!r}")
    return I


def _smc_operation(token):
    match = _SMC_VERTEX.match(token)
    if match:
        return ("v", int(match.group(1)))
    match = _SMC_EDGE.match(token)
    if not match:
        return None
    N = int(match.group(1))
    rest = [s for s in match.group(2).split(".")[1:]]
    if N == 0:
        return ("e", 0, (), ()) if not any(rest) else None
    if len(rest) != N + 1 or len(rest[0]) != N:
        return None
    return ("e", N, tuple(int(c) for c in rest[0]), tuple(int(L) for L in rest[1:]))


def parse_operations(m, tokens, bound=None):
    if isinstance(tokens, str):
        tokens = [t for t in tokens.split(",") if t.strip()]
    return tuple(parse_operation(m, t, bound) for t in tokens)
