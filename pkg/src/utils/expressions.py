"""Safe evaluation of numeric CLI inputs with ``pi`` literals ("2pi/3", "-pi/4", "sqrt(2)*pi")."""

from __future__ import annotations

import ast
import math
import operator
import re
from collections.abc import Callable
from fractions import Fraction

from src.errors import ParseError

_NAMES: dict[str, float] = {"pi": math.pi, "π": math.pi, "tau": math.tau}
_FUNCS: dict[str, Callable[[float], float]] = {
    "sqrt": math.sqrt,
    "acos": math.acos,
    "arccos": math.acos,
    "cos": math.cos,
    "sin": math.sin,
}
_BINOPS: dict[type[ast.operator], Callable[[float, float], float]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY: dict[type[ast.unaryop], Callable[[float], float]] = {
    ast.UAdd: operator.pos,
    ast.USub: operator.neg,
}

# "2pi", "3sqrt(2)", "2(pi+1)", ")(" → explicit products
_IMPLICIT = re.compile(r"(?<=[\d.)π])\s*(?=pi|π|tau|sqrt|acos|arccos|cos|sin|\()")


def _eval(node: ast.AST) -> float:
    match node:
        case ast.Expression(body=body):
            return _eval(body)
        case ast.Constant(value=value) if isinstance(value, int | float) and not isinstance(
            value, bool
        ):
            return float(value)
        case ast.Name(id=name) if name in _NAMES:
            return _NAMES[name]
        case ast.BinOp(left=left, op=op, right=right) if type(op) in _BINOPS:
            return _BINOPS[type(op)](_eval(left), _eval(right))
        case ast.UnaryOp(op=op, operand=operand) if type(op) in _UNARY:
            return _UNARY[type(op)](_eval(operand))
        case ast.Call(func=ast.Name(id=name), args=[arg], keywords=[]) if name in _FUNCS:
            return _FUNCS[name](_eval(arg))
    raise ParseError(f"Unsupported element in numeric expression: {ast.dump(node)}")


def parse_number(text: str) -> float:
    """Evaluate a numeric expression.

    Raises:
        ParseError: If the text is not a finite arithmetic expression over numbers, ``pi``
            and the whitelisted functions.
    """
    source = _IMPLICIT.sub("*", text.strip().replace("π", "pi"))
    if not source:
        raise ParseError("Empty numeric expression")
    try:
        tree = ast.parse(source, mode="eval")
        value = _eval(tree)
    except ParseError:
        raise
    except (SyntaxError, ValueError, ZeroDivisionError, OverflowError, TypeError) as exc:
        raise ParseError(f"Cannot evaluate '{text}': {exc}") from exc
    if not math.isfinite(value):
        raise ParseError(f"'{text}' does not evaluate to a finite number")
    return value


parse_angle = parse_number


def parse_list(text: str) -> list[float]:
    """Comma-separated expressions; the empty string is the empty list."""
    return [parse_number(part) for part in text.split(",") if part.strip()]


def parse_range(text: str) -> tuple[float, float, float]:
    """Parse ``a:b:step``.

    Raises:
        ParseError: If the text does not have three fields, the step is not positive, or
            b < a.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"Range must look like a:b:step, got '{text}'")
    start, stop, step = (parse_number(p) for p in parts)
    if step <= 0:
        raise ParseError(f"Range step must be positive, got {step!r}")
    if stop < start:
        raise ParseError(f"Range end {stop!r} lies below its start {start!r}")
    return start, stop, step


def format_pi_multiple(value: float, max_denominator: int = 12) -> str:
    """Render an angle as a multiple of π when it is a small rational one, else in radians."""
    ratio = value / math.pi
    frac = Fraction(ratio).limit_denominator(max_denominator)
    if abs(float(frac) - ratio) > 1e-9:
        return f"{ratio:.6g}π"
    if frac == 0:
        return "0"
    num, den = frac.numerator, frac.denominator
    head = {1: "", -1: "-"}.get(num, str(num))
    return f"{head}π" if den == 1 else f"{head}π/{den}"
