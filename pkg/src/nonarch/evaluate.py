"""Evaluation of parsed expressions into tagged results."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import expr as ast
from .errors import NonArchError, TypeMismatch, UnknownFunction
from .germ import Germ, embed_rational, omega
from .magnitude import (
    Magnitude,
    ScalingCase,
    archimedean_witness,
    classify,
    in_galaxy,
    in_monad,
    inversion_map,
    scaling_case,
    standard_part,
)
from .worlds import (
    StepSituation,
    WalkableWorld,
    WWRelation,
    step_situation,
    ww_iso,
    ww_member,
    ww_relation,
)

KINDS = {
    Germ: "germ",
    Fraction: "rational",
    Magnitude: "magnitude",
    bool: "boolean",
    WalkableWorld: "world",
    WWRelation: "relation",
    ScalingCase: "case",
    StepSituation: "situation",
}


@dataclass(frozen=True)
class Result:
    kind: str
    value: Any

    @property
    def text(self) -> str:
        return format_value(self.value)


def kind_of(value) -> str:
    return KINDS[type(value)]


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, WWRelation):
        return value.value
    if isinstance(value, ScalingCase):
        return str(value.case_id)
    return str(value)


def _germ(value, node) -> Germ:
    if isinstance(value, Germ):
        return value
    if isinstance(value, Fraction):
        return embed_rational(value)
    raise TypeMismatch(f"expected a number, got {kind_of(value)}", node.line, node.column)


def _world(value, node) -> WalkableWorld:
    if isinstance(value, WalkableWorld):
        return value
    raise TypeMismatch(f"expected a world, got {kind_of(value)}", node.line, node.column)


_G, _W = "germ", "world"

# name -> (argument types, optional trailing germ count, implementation)
_FUNCTIONS: dict[str, tuple[tuple[str, ...], int, Callable]] = {
    "st": ((_G,), 0, standard_part),
    "class": ((_G,), 0, classify),
    "inv": ((_G,), 1, inversion_map),
    "in_monad": ((_G, _G), 0, in_monad),
    "in_galaxy": ((_G, _G), 0, in_galaxy),
    "WW": ((_G, _G), 0, WalkableWorld),
    "rel": ((_W, _W), 0, ww_relation),
    "case": ((_G, _G), 0, scaling_case),
    "sit": ((_G, _G), 0, step_situation),
    "witness": ((_G,), 0, archimedean_witness),
    "member": ((_W, _G), 0, ww_member),
    "iso": ((_W, _G), 0, ww_iso),
}

FUNCTION_NAMES = tuple(sorted(_FUNCTIONS))


def _call(node: ast.Call):
    entry = _FUNCTIONS.get(node.name)
    if entry is None:
        raise UnknownFunction(
            f"unknown function {node.name!r}; known: {', '.join(FUNCTION_NAMES)}", node.line, node.column
        )
    types, optional, fn = entry
    n = len(node.args)
    if not len(types) <= n <= len(types) + optional:
        want = str(len(types)) if not optional else f"{len(types)} to {len(types) + optional}"
        raise TypeMismatch(f"{node.name} takes {want} arguments, got {n}", node.line, node.column)
    args = []
    for i, arg in enumerate(node.args):
        v = _eval(arg)
        kind = types[i] if i < len(types) else _G
        args.append(_germ(v, arg) if kind == _G else _world(v, arg))
    try:
        return fn(*args)
    except NonArchError as e:
        raise e.located(node.line, node.column)


def _eval(node: ast.Node):
    if isinstance(node, ast.Num):
        return embed_rational(node.value)
    if isinstance(node, ast.Omega):
        return omega()
    try:
        if isinstance(node, ast.Neg):
            return -_germ(_eval(node.operand), node.operand)
        if isinstance(node, ast.BinOp):
            a = _germ(_eval(node.left), node.left)
            b = _germ(_eval(node.right), node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
        if isinstance(node, ast.Pow):
            return _germ(_eval(node.base), node.base) ** node.exponent
        if isinstance(node, ast.Compare):
            a = _germ(_eval(node.left), node.left)
            b = _germ(_eval(node.right), node.right)
            return {
                "<": a < b,
                "<=": a <= b,
                "==": a == b,
                ">=": a >= b,
                ">": a > b,
            }[node.op]
    except NonArchError as e:
        raise e.located(node.line, node.column)
    if isinstance(node, ast.Call):
        return _call(node)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: ast.Node) -> Result:
    value = _eval(node)
    return Result(kind_of(value), value)


def evaluate_text(text: str):
    """Parse and evaluate, returning the raw value."""
    return _eval(ast.parse(text))


def run(text: str) -> Result:
    return evaluate(ast.parse(text))
