# Copyright 2025 The tautring Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Evaluator for the expression language.

Values are exact: numbers are Fractions, lower-case names that are not bound
become polynomial variables (weight taken from the trailing digits, else 1),
and everything else is a library object (bundle, ring presentation,
Grassmannian, Hirzebruch surface or class, matrix, Schur decomposition).

    >>> Evaluator().run("nf(k1^4, M6)")
    36864/113 * k2^2
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..algebra import ExactMatrix, GradedPoly, VariableTable, format_scalar, unify
from ..bundles import (
    DEFAULT_TRUNC,
    MAX_ROOTS,
    FormalBundle,
    chern_character,
    determinant,
    direct_sum,
    dual,
    sequence_quotient,
    solve_hyperelliptic_twist,
    solve_sl_twist,
    solve_trigonal_twist,
    sym_power,
    tensor,
    todd_class,
    twist,
    wedge_power,
)
from ..geometry import (
    GrassmannData,
    HirzebruchClass,
    canonical_quadrics,
    forms_dim,
    genus_of_class,
    grass_integrate,
    grassmannian,
    h0_hirzebruch,
    intersect,
    maroni_k,
    mukai_bookkeeping,
    plucker_degree,
    schubert_class,
    stratum_dimensions,
)
from ..grr import PsiSeries, omega_power_bundle, push_psi
from ..rings import RingPresentation, m6_presentation, tautological_presentation
from ..schur import (
    Partition,
    SchurDecomposition,
    decompose_sym2_wedge2,
    dim_schur,
    kostka,
    lr_product,
    syt_count,
)
from .ast import Assign, BinOp, Call, Expr, Neg, Node, Num, Var
from .parser import parse


POLY_VARIABLE = re.compile(r"^[a-z][a-z_]*?(\d*)$")


class EvalError(ValueError):
    """Type errors, arity errors and unknown identifiers."""


@dataclass(frozen=True)
class HirzebruchSurface:
    n: int

    def __str__(self) -> str:
        return f"F[{self.n}]"


def kind(value: Any) -> str:
    if isinstance(value, bool):
        return "boolean"
    elif isinstance(value, (int, Fraction)):
        return "number"
    elif isinstance(value, GradedPoly):
        return "polynomial"
    elif isinstance(value, FormalBundle):
        return "bundle"
    elif isinstance(value, RingPresentation):
        return "ring"
    elif isinstance(value, GrassmannData):
        return "grassmannian"
    elif isinstance(value, HirzebruchSurface):
        return "surface"
    elif isinstance(value, HirzebruchClass):
        return "surface class"
    elif isinstance(value, ExactMatrix):
        return "matrix"
    elif isinstance(value, SchurDecomposition):
        return "representation"
    elif isinstance(value, (tuple, list)):
        return "tuple"
    else:
        return type(value).__name__


def ring_source(ring: RingPresentation) -> str:
    """``ring[vars; weights](relations)``, parseable back into the same presentation."""
    names = ", ".join(ring.table.names)
    weights = ", ".join(str(w) for w in ring.table.weights)
    relations = ", ".join(str(r) for r in ring.relations)
    return f"ring[{names}; {weights}]({relations})"


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    elif isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, (int, Fraction)):
        return format_scalar(value)
    elif isinstance(value, RingPresentation):
        return ring_source(value)
    elif isinstance(value, (tuple, list)):
        return "(" + ", ".join(format_value(item) for item in value) + ")"
    elif isinstance(value, dict):
        return "{" + ", ".join(f"{key}: {format_value(item)}" for key, item in value.items()) + "}"
    else:
        return str(value)


def variable_weight(name: str) -> int:
    match = POLY_VARIABLE.match(name)
    digits = match.group(1) if match else ""
    return int(digits) if digits and int(digits) > 0 else 1


class Environment:
    """Name bindings with an optional enclosing scope."""

    def __init__(self, bindings: Optional[Dict[str, Any]] = None, parent: Optional["Environment"] = None):
        self.bindings: Dict[str, Any] = dict(bindings or {})
        self.parent = parent

    def lookup(self, name: str) -> Any:
        scope = self
        while scope is not None:
            if name in scope.bindings:
                return scope.bindings[name]

            scope = scope.parent

        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        try:
            self.lookup(name)
        except KeyError:
            return False

        return True

    def assign(self, name: str, value: Any) -> None:
        self.bindings[name] = value

    def child(self, bindings: Dict[str, Any]) -> "Environment":
        return Environment(bindings, parent=self)


def default_environment(trunc: int = DEFAULT_TRUNC) -> Environment:
    """M6 and the named bundles: V (rank 5), W (2), E (6, classes l_i), F (4), Q (3)."""
    return Environment(
        {
            "M6": m6_presentation(),
            "V": FormalBundle.free(5, "v", trunc),
            "W": FormalBundle.free(2, "w", trunc),
            "E": FormalBundle.free(6, "l", trunc),
            "F": FormalBundle.free(4, "f", trunc),
            "Q": FormalBundle.free(3, "q", trunc),
        }
    )


Builtin = Callable[["Evaluator", Call], Any]
BUILTINS: Dict[str, Builtin] = {}


def builtin(name: str) -> Callable[[Builtin], Builtin]:
    def decorator(func: Builtin) -> Builtin:
        BUILTINS[name] = func
        return func

    return decorator


class Evaluator:
    def __init__(self, env: Optional[Environment] = None, trunc: int = DEFAULT_TRUNC, max_roots: int = MAX_ROOTS):
        self.trunc = trunc
        self.max_roots = max_roots
        self.env = default_environment(trunc) if env is None else env

    def run(self, source: str) -> Any:
        return self.evaluate(parse(source))

    def evaluate(self, node: Node, env: Optional[Environment] = None) -> Any:
        env = self.env if env is None else env
        if isinstance(node, Assign):
            value = self.evaluate(node.value, env)
            env.assign(node.name, value)
            return value
        elif isinstance(node, Num):
            return Fraction(node.value)
        elif isinstance(node, Var):
            return self._variable(node.name, env)
        elif isinstance(node, Neg):
            return self._negate(self.evaluate(node.operand, env))
        elif isinstance(node, BinOp):
            return self._binary(node.op, self.evaluate(node.left, env), self.evaluate(node.right, env))
        elif isinstance(node, Call):
            func = BUILTINS.get(node.name)
            if func is None:
                raise EvalError(f"unknown function '{node.name}'")

            evaluator = self if env is self.env else Evaluator(env, self.trunc, self.max_roots)
            result = func(evaluator, node)
            # builtins hand back plain ints for counts and dimensions
            return Fraction(result) if isinstance(result, int) and not isinstance(result, bool) else result
        else:
            raise EvalError(f"cannot evaluate {node!r}")

    def _variable(self, name: str, env: Environment) -> Any:
        try:
            return env.lookup(name)
        except KeyError:
            pass

        if POLY_VARIABLE.match(name) is None:
            raise EvalError(f"unknown identifier '{name}'")

        return GradedPoly.variable(VariableTable((name,), (variable_weight(name),)), name)

    @staticmethod
    def _negate(value: Any) -> Any:
        if isinstance(value, (Fraction, GradedPoly, HirzebruchClass)):
            return -value

        raise EvalError(f"cannot negate a {kind(value)}")

    def _binary(self, op: str, left: Any, right: Any) -> Any:
        if isinstance(left, GradedPoly) and isinstance(right, GradedPoly):
            left, right = unify(left, right)

        numeric = (Fraction, GradedPoly)
        if op == "^":
            if isinstance(left, numeric) and isinstance(right, Fraction):
                if right.denominator != 1:
                    raise EvalError(f"exponent {format_scalar(right)} is not an integer")

                if isinstance(left, GradedPoly) and right < 0:
                    raise EvalError("polynomials only take nonnegative powers")

                if left == 0 and right < 0:
                    raise EvalError("division by zero")

                return left ** int(right)
        elif op in ("+", "-") and isinstance(left, numeric) and isinstance(right, numeric):
            return left + right if op == "+" else left - right
        elif op == "*" and isinstance(left, numeric) and isinstance(right, numeric):
            return left * right
        elif op == "/" and isinstance(left, numeric) and isinstance(right, Fraction):
            if right == 0:
                raise EvalError("division by zero")

            return left / right
        elif isinstance(left, FormalBundle) and isinstance(right, FormalBundle):
            if op == "+":
                return direct_sum(left, right)
            elif op == "*":
                return tensor(left, right, self.max_roots)
            elif op == "/":
                return sequence_quotient(left, right)
        elif isinstance(left, HirzebruchClass) and isinstance(right, HirzebruchClass):
            if op in ("+", "-"):
                return left + right if op == "+" else left - right
            elif op == "*":
                return intersect(left, right)
        elif op == "*" and isinstance(right, HirzebruchClass) and isinstance(left, Fraction):
            return left * right
        elif op == "*" and isinstance(left, HirzebruchClass) and isinstance(right, Fraction):
            return right * left

        raise EvalError(f"unsupported operand types for {op}: {kind(left)} and {kind(right)}")

    def args(self, call: Call, count: Optional[int] = None, minimum: int = 0) -> List[Any]:
        """Evaluate the flat argument list, checking arity."""
        nodes = call.flat_args()
        if count is not None and len(nodes) != count:
            raise EvalError(f"{call.name} takes {count} argument(s), got {len(nodes)}")

        if len(nodes) < minimum:
            raise EvalError(f"{call.name} takes at least {minimum} argument(s), got {len(nodes)}")

        return [self.evaluate(node) for node in nodes]


def expect(value: Any, expected: type, what: str) -> Any:
    if not isinstance(value, expected) or isinstance(value, bool):
        raise EvalError(f"{what} must be a {kind_name(expected)}, got a {kind(value)}")

    return value


def kind_name(expected: type) -> str:
    names = {Fraction: "number", GradedPoly: "polynomial", FormalBundle: "bundle", RingPresentation: "ring"}
    names.update({GrassmannData: "grassmannian", HirzebruchSurface: "surface", HirzebruchClass: "surface class"})
    return names.get(expected, expected.__name__)


def as_int(value: Any, what: str) -> int:
    value = expect(value, Fraction, what)
    if value.denominator != 1:
        raise EvalError(f"{what} must be an integer, got {format_scalar(value)}")

    return value.numerator


def as_poly(value: Any, what: str) -> GradedPoly:
    if isinstance(value, Fraction):
        return GradedPoly.constant(VariableTable((), ()), value)

    return expect(value, GradedPoly, what)


def as_partition(values: Sequence[Any], what: str) -> Partition:
    return Partition.of(*(as_int(v, what) for v in values))


def _groups(ev: Evaluator, call: Call, count: int) -> List[List[Any]]:
    groups = call.args or ()
    if len(groups) != count:
        raise EvalError(f"{call.name} takes {count} ';'-separated group(s), got {len(groups)}")

    return [[ev.evaluate(item) for item in group] for group in groups]


@builtin("ring")
def _ring(ev: Evaluator, call: Call) -> RingPresentation:
    if call.index is None or len(call.index) != 2:
        raise EvalError("ring needs ring[variables; weights](relations)")

    names, weight_nodes = call.index
    if not all(isinstance(node, Var) for node in names):
        raise EvalError("ring variables must be plain names")

    weights = [as_int(ev.evaluate(node), "ring weight") for node in weight_nodes]
    if len(weights) != len(names):
        raise EvalError(f"ring has {len(names)} variables but {len(weights)} weights")

    table = VariableTable(tuple(node.name for node in names), tuple(weights))
    scope = ev.env.child({name: GradedPoly.variable(table, name) for name in table.names})
    relations = [as_poly(ev.evaluate(node, scope), "relation") for node in call.flat_args()]
    return RingPresentation(table, relations)


@builtin("taut")
def _taut(ev: Evaluator, call: Call) -> RingPresentation:
    (g,) = ev.args(call, 1)
    return tautological_presentation(as_int(g, "genus"))


@builtin("hilbert")
def _hilbert(ev: Evaluator, call: Call) -> tuple:
    ring, max_d = ev.args(call, 2)
    return expect(ring, RingPresentation, "hilbert's ring").hilbert_function(as_int(max_d, "degree"))


@builtin("nf")
def _nf(ev: Evaluator, call: Call) -> GradedPoly:
    x, ring = ev.args(call, 2)
    return expect(ring, RingPresentation, "nf's ring").normal_form(as_poly(x, "nf's argument"))


@builtin("pairing")
def _pairing(ev: Evaluator, call: Call) -> ExactMatrix:
    ring, i, top = ev.args(call, 3)
    return expect(ring, RingPresentation, "pairing's ring").pairing_matrix(as_int(i, "degree"), as_int(top, "degree"))


@builtin("gorenstein")
def _gorenstein(ev: Evaluator, call: Call) -> bool:
    ring, top = ev.args(call, 2)
    return expect(ring, RingPresentation, "gorenstein's ring").is_poincare_duality(as_int(top, "degree")).holds


@builtin("socle")
def _socle(ev: Evaluator, call: Call) -> Optional[int]:
    ring, max_d = ev.args(call, 2)
    return expect(ring, RingPresentation, "socle's ring").socle_degree(as_int(max_d, "degree"))


@builtin("det")
def _det(ev: Evaluator, call: Call) -> Any:
    (value,) = ev.args(call, 1)
    if isinstance(value, ExactMatrix):
        return value.determinant()

    return determinant(expect(value, FormalBundle, "det's argument"))


@builtin("G")
def _grassmannian(ev: Evaluator, call: Call) -> GrassmannData:
    k, n = ev.args(call, 2)
    k, n = as_int(k, "k"), as_int(n, "n")
    if not 1 <= k < n:
        raise EvalError(f"G({k},{n}) needs 1 <= k < n")

    return grassmannian(k, n)


@builtin("dim")
def _dim(ev: Evaluator, call: Call) -> int:
    values = ev.args(call, minimum=1)
    if isinstance(values[0], GrassmannData) and len(values) == 1:
        return values[0].dim
    elif isinstance(values[0], RingPresentation) and len(values) == 2:
        return values[0].dim(as_int(values[1], "degree"))
    elif isinstance(values[0], SchurDecomposition) and len(values) == 2:
        return values[0].dimension(as_int(values[1], "n"))

    raise EvalError(f"dim takes G(k,n), (ring, degree) or (representation, n), got {format_kinds(values)}")


def format_kinds(values: Sequence[Any]) -> str:
    return "(" + ", ".join(kind(v) for v in values) + ")"


@builtin("integrate")
def _integrate(ev: Evaluator, call: Call) -> Fraction:
    grass, x = ev.args(call, 2)
    return grass_integrate(expect(grass, GrassmannData, "integrate's space"), as_poly(x, "integrand"))


@builtin("schubert")
def _schubert(ev: Evaluator, call: Call) -> GradedPoly:
    values = ev.args(call, minimum=1)
    grass = expect(values[0], GrassmannData, "schubert's space")
    return schubert_class(grass, as_partition(values[1:], "partition part"))


@builtin("plucker")
def _plucker(ev: Evaluator, call: Call) -> int:
    k, n = ev.args(call, 2)
    return plucker_degree(as_int(k, "k"), as_int(n, "n"))


@builtin("syt")
def _syt(ev: Evaluator, call: Call) -> int:
    return syt_count(as_partition(ev.args(call, minimum=1), "partition part"))


@builtin("schur_dim")
def _schur_dim(ev: Evaluator, call: Call) -> int:
    (n,), parts = _groups(ev, call, 2)
    return dim_schur(as_partition(parts, "partition part"), as_int(n, "n"))


@builtin("kostka")
def _kostka(ev: Evaluator, call: Call) -> int:
    shape, content = _groups(ev, call, 2)
    return kostka(as_partition(shape, "shape part"), tuple(as_int(c, "content") for c in content))


@builtin("lr")
def _lr(ev: Evaluator, call: Call) -> SchurDecomposition:
    left, right = _groups(ev, call, 2)
    return lr_product(as_partition(left, "partition part"), as_partition(right, "partition part"))


@builtin("plethysm")
def _plethysm(ev: Evaluator, call: Call) -> SchurDecomposition:
    (n,) = ev.args(call, 1)
    return decompose_sym2_wedge2(as_int(n, "n"))


@builtin("F")
def _surface(ev: Evaluator, call: Call) -> HirzebruchSurface:
    if call.index is None or call.args is not None or len(call.index) != 1 or len(call.index[0]) != 1:
        raise EvalError("Hirzebruch surfaces are written F[n]")

    n = as_int(ev.evaluate(call.index[0][0]), "n")
    if n < 0:
        raise EvalError(f"F[{n}] needs n >= 0")

    return HirzebruchSurface(n)


def _surface_classes(ev: Evaluator, call: Call, count: int) -> List[HirzebruchClass]:
    """Evaluate the classes after the surface with S, E and F bound to its generators."""
    nodes = call.flat_args()
    if len(nodes) != count + 1:
        raise EvalError(f"{call.name} takes a surface and {count} class(es), got {len(nodes)} argument(s)")

    surface = expect(ev.evaluate(nodes[0]), HirzebruchSurface, f"{call.name}'s surface")
    n = surface.n
    scope = ev.env.child({"S": HirzebruchClass.S(n), "E": HirzebruchClass.E(n), "F": HirzebruchClass.F(n)})
    return [expect(ev.evaluate(node, scope), HirzebruchClass, f"{call.name}'s class") for node in nodes[1:]]


@builtin("genus")
def _genus(ev: Evaluator, call: Call) -> Fraction:
    (cls,) = _surface_classes(ev, call, 1)
    return genus_of_class(cls)


@builtin("h0")
def _h0(ev: Evaluator, call: Call) -> int:
    (cls,) = _surface_classes(ev, call, 1)
    return h0_hirzebruch(cls)


@builtin("intersect")
def _intersect(ev: Evaluator, call: Call) -> Fraction:
    x, y = _surface_classes(ev, call, 2)
    return intersect(x, y)


@builtin("maroni")
def _maroni(ev: Evaluator, call: Call) -> Fraction:
    g, n = ev.args(call, 2)
    return maroni_k(as_int(g, "genus"), as_int(n, "n"))


@builtin("forms")
def _forms(ev: Evaluator, call: Call) -> int:
    m, d = ev.args(call, 2)
    return forms_dim(as_int(m, "m"), as_int(d, "d"))


@builtin("quadrics")
def _quadrics(ev: Evaluator, call: Call) -> int:
    (g,) = ev.args(call, 1)
    return canonical_quadrics(as_int(g, "genus"))


@builtin("strata")
def _strata(ev: Evaluator, call: Call) -> tuple:
    (g,) = ev.args(call, 1)
    return tuple(stratum.dimension for stratum in stratum_dimensions(as_int(g, "genus")))


@builtin("mukai")
def _mukai(ev: Evaluator, call: Call) -> dict:
    ev.args(call, 0)
    return mukai_bookkeeping()


@builtin("bundle")
def _bundle(ev: Evaluator, call: Call) -> FormalBundle:
    groups = call.args or ()
    if len(groups) not in (1, 2) or len(groups[0]) != 1:
        raise EvalError("bundle takes bundle(rank) or bundle(rank; c1, c2, ...)")

    rank = as_int(ev.evaluate(groups[0][0]), "rank")
    if rank < 0:
        raise EvalError(f"rank must be nonnegative, got {rank}")

    classes = [as_poly(ev.evaluate(node), "Chern class") for node in (groups[1] if len(groups) == 2 else ())]
    if len(classes) > ev.trunc:
        raise EvalError(f"bundle lists {len(classes)} Chern classes beyond the truncation order {ev.trunc}")

    return FormalBundle(rank, classes, trunc=ev.trunc)


@builtin("rank")
def _rank(ev: Evaluator, call: Call) -> int:
    (b,) = ev.args(call, 1)
    return expect(b, FormalBundle, "rank's argument").rank


@builtin("c")
def _chern(ev: Evaluator, call: Call) -> GradedPoly:
    b, i = ev.args(call, 2)
    return expect(b, FormalBundle, "c's bundle").c(as_int(i, "index"))


@builtin("dual")
def _dual(ev: Evaluator, call: Call) -> FormalBundle:
    (b,) = ev.args(call, 1)
    return dual(expect(b, FormalBundle, "dual's argument"))


@builtin("twist")
def _twist(ev: Evaluator, call: Call) -> FormalBundle:
    b, t = ev.args(call, 2)
    return twist(expect(b, FormalBundle, "twist's bundle"), as_poly(t, "twisting class"))


def _power(ev: Evaluator, call: Call) -> Any:
    k, b = ev.args(call, 2)
    k, b = as_int(k, "power"), expect(b, FormalBundle, f"{call.name}'s bundle")
    if call.name == "wedge" and not 0 <= k <= b.rank:
        raise EvalError(f"wedge({k}, ...) of a rank {b.rank} bundle is out of range")

    if k < 0:
        raise EvalError(f"sym power must be nonnegative, got {k}")

    return (wedge_power if call.name == "wedge" else sym_power)(b, k, ev.max_roots)


BUILTINS["sym"] = _power
BUILTINS["wedge"] = _power


@builtin("ch")
def _ch(ev: Evaluator, call: Call) -> Any:
    values = ev.args(call, minimum=1)
    character = chern_character(expect(values[0], FormalBundle, "ch's bundle"))
    if len(values) == 1:
        return tuple(character)
    elif len(values) == 2:
        k = as_int(values[1], "degree")
        if not 0 <= k < len(character):
            raise EvalError(f"ch_{k} is beyond the truncation order {len(character) - 1}")

        return character[k]

    raise EvalError(f"ch takes a bundle and an optional degree, got {len(values)} arguments")


@builtin("td")
def _td(ev: Evaluator, call: Call) -> tuple:
    (b,) = ev.args(call, 1)
    return tuple(todd_class(expect(b, FormalBundle, "td's bundle")))


@builtin("push")
def _push(ev: Evaluator, call: Call) -> GradedPoly:
    x, g = ev.args(call, 2)
    return push_psi(PsiSeries(as_int(g, "genus"), as_poly(x, "class on the universal curve"), ev.trunc))


@builtin("hodge")
def _hodge(ev: Evaluator, call: Call) -> FormalBundle:
    (g,) = ev.args(call, 1)
    return omega_power_bundle(1, as_int(g, "genus"), ev.trunc)


@builtin("omega")
def _omega(ev: Evaluator, call: Call) -> FormalBundle:
    k, g = ev.args(call, 2)
    return omega_power_bundle(as_int(k, "power"), as_int(g, "genus"), ev.trunc)


@builtin("hyperelliptic")
def _hyperelliptic(ev: Evaluator, call: Call) -> GradedPoly:
    (g,) = ev.args(call, 1)
    return solve_hyperelliptic_twist(as_int(g, "genus"), ev.trunc)["w1"]


@builtin("sltwist")
def _sltwist(ev: Evaluator, call: Call) -> GradedPoly:
    (rank,) = ev.args(call, 1)
    return solve_sl_twist(as_int(rank, "rank"), ev.trunc)["t"]


@builtin("trigonal")
def _trigonal(ev: Evaluator, call: Call) -> tuple:
    g, n = ev.args(call, 2)
    solution = solve_trigonal_twist(as_int(g, "genus"), as_int(n, "n"), trunc=ev.trunc)
    return solution.q, solution.r, solution.s


def evaluate(source: str, env: Optional[Environment] = None, trunc: int = DEFAULT_TRUNC) -> Any:
    return Evaluator(env, trunc=trunc).run(source)


def evaluate_expr(expr: Expr, env: Optional[Environment] = None, trunc: int = DEFAULT_TRUNC) -> Any:
    return Evaluator(env, trunc=trunc).evaluate(expr)
