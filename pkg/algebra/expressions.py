"""
Textual expressions for elements of the plane, H, F and the form algebra.

    expr   := term (('+' | '-') term)*      with an optional leading '-'
    term   := factor ('*' factor)*
    factor := primary ('^' integer)?
    primary:= generator | rational | 'q' | '(' expr ')'

Negative exponents are accepted on q, x, y, K and Kinv only. The output of
str() on any element parses back to the same element.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, NamedTuple, Union

import ply.lex as lex
import ply.yacc as yacc

from algebra.cyclo import CycScalar, check_root
from algebra.elements import AlgebraElement, MonomialAlgebra
from algebra.errors import ExpressionError
from algebra.hopf import f_algebra, f_generator, h_algebra, h_generator
from algebra.qplane import plane_algebra, plane_generator

logger = logging.getLogger(__name__)

ALGEBRAS = ("plane", "H", "F", "wz")
ALIASES = {"plane": "plane", "M": "plane", "H": "H", "F": "F", "wz": "wz", "omega": "wz"}
GENERATORS = {
    "plane": ("x", "y"),
    "H": ("K", "Kinv", "Xp", "Xm"),
    "F": ("a", "b", "c", "d"),
    "wz": ("x", "y", "dx", "dy"),
}
INVERTIBLE = ("q", "x", "y", "K", "Kinv")


class Number(NamedTuple):
    value: Fraction


class Generator(NamedTuple):
    name: str
    position: int


class BinaryOp(NamedTuple):
    op: str
    left: "Node"
    right: "Node"


class Negate(NamedTuple):
    operand: "Node"


class Power(NamedTuple):
    base: "Node"
    exponent: int
    position: int


Node = Union[Number, Generator, BinaryOp, Negate, Power]


class _Grammar:
    """ply lexer and LALR parser; rule docstrings are the grammar."""

    tokens = ("NUMBER", "NAME", "PLUS", "MINUS", "TIMES", "CARET", "LPAREN", "RPAREN")

    t_PLUS = r"\+"
    t_MINUS = r"-"
    t_TIMES = r"\*"
    t_CARET = r"\^"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_NAME = r"[A-Za-z][A-Za-z0-9]*"
    t_ignore = " \t\n"

    def t_NUMBER(self, t):
        r"\d+(/\d+)?"
        try:
            t.value = Fraction(t.value)
        except ZeroDivisionError:
            raise ExpressionError(f"zero denominator in {t.value!r}", t.lexpos)
        return t

    def t_error(self, t):
        raise ExpressionError(f"illegal character {t.value[0]!r}", t.lexpos)

    def p_expression_sum(self, p):
        """expression : expression PLUS term
                      | expression MINUS term"""
        p[0] = BinaryOp(p[2], p[1], p[3])

    def p_expression_negate(self, p):
        "expression : MINUS term"
        p[0] = Negate(p[2])

    def p_expression_term(self, p):
        "expression : term"
        p[0] = p[1]

    def p_term_product(self, p):
        "term : term TIMES factor"
        p[0] = BinaryOp("*", p[1], p[3])

    def p_term_factor(self, p):
        "term : factor"
        p[0] = p[1]

    def p_factor_power(self, p):
        "factor : primary CARET exponent"
        exponent, position = p[3]
        base = p[1]
        if exponent < 0 and not (isinstance(base, Generator) and base.name in INVERTIBLE):
            raise ExpressionError(f"negative power of a non-invertible factor; allowed on {', '.join(INVERTIBLE)}", position)
        p[0] = Power(base, exponent, position)

    def p_factor_primary(self, p):
        "factor : primary"
        p[0] = p[1]

    def p_exponent(self, p):
        """exponent : NUMBER
                    | MINUS NUMBER"""
        value = p[len(p) - 1]
        position = p.lexpos(1)
        if value.denominator != 1:
            raise ExpressionError(f"exponent {value} is not an integer", position)
        p[0] = (-int(value) if len(p) == 3 else int(value), position)

    def p_primary_number(self, p):
        "primary : NUMBER"
        p[0] = Number(p[1])

    def p_primary_name(self, p):
        "primary : NAME"
        p[0] = Generator(p[1], p.lexpos(1))

    def p_primary_group(self, p):
        "primary : LPAREN expression RPAREN"
        p[0] = p[2]

    def p_error(self, t):
        if t is None:
            raise ExpressionError("unexpected end of input", self.text_length)
        raise ExpressionError(f"unexpected {t.value!r}", t.lexpos)

    def __init__(self):
        self.text_length = 0
        self.lexer = lex.lex(module=self)
        self.parser = yacc.yacc(module=self, write_tables=False, debug=False, errorlog=yacc.NullLogger())

    def parse(self, text: str) -> Node:
        self.text_length = len(text)
        return self.parser.parse(text, lexer=self.lexer.clone())


@lru_cache(maxsize=None)
def _grammar() -> _Grammar:
    return _Grammar()


def _algebra_name(algebra: str) -> str:
    if algebra not in ALIASES:
        raise ExpressionError(f"unknown algebra {algebra!r}; expected one of {', '.join(ALGEBRAS)}", 0)
    return ALIASES[algebra]


def _check_generators(node: Node, algebra: str) -> None:
    if isinstance(node, Generator):
        if node.name == "q" or node.name in GENERATORS[algebra]:
            return
        owners = [name for name, generators in GENERATORS.items() if node.name in generators]
        if owners:
            raise ExpressionError(f"generator {node.name!r} belongs to {owners[0]}, not {algebra}", node.position)
        raise ExpressionError(f"unknown symbol {node.name!r}", node.position)
    if isinstance(node, BinaryOp):
        _check_generators(node.left, algebra)
        _check_generators(node.right, algebra)
    elif isinstance(node, Negate):
        _check_generators(node.operand, algebra)
    elif isinstance(node, Power):
        _check_generators(node.base, algebra)


class Expression:
    """A parsed expression bound to one algebra."""

    __slots__ = ("text", "algebra", "tree")

    def __init__(self, text: str, algebra: str, tree: Node):
        self.text = text
        self.algebra = algebra
        self.tree = tree

    def evaluate(self, N: int = 3, convention: str = "wz") -> AlgebraElement:
        """
        Normalize the expression in the algebra over ℚ(ζ_N).

        Args:
            N: Order of q
            convention: Two-form convention, used by the form algebra only

        Returns:
            The element in normal form
        """
        N = check_root(N)
        target = algebra_for(self.algebra, N, convention)
        generators = _generator_values(self.algebra, N, convention)
        return _evaluate(self.tree, target, generators)

    def __repr__(self) -> str:
        return f"Expression({self.algebra}: {self.text!r})"


def algebra_for(algebra: str, N: int, convention: str = "wz") -> MonomialAlgebra:
    name = _algebra_name(algebra)
    if name == "plane":
        return plane_algebra(N)
    if name == "H":
        return h_algebra(N)
    if name == "F":
        return f_algebra(N)
    from calculus.wz import wz_algebra

    return wz_algebra(N, convention)


def _generator_values(algebra: str, N: int, convention: str) -> Dict[str, AlgebraElement]:
    if algebra == "plane":
        return {name: plane_generator(N, name) for name in GENERATORS["plane"]}
    if algebra == "H":
        return {name: h_generator(N, name) for name in GENERATORS["H"]}
    if algebra == "F":
        return {name: f_generator(N, name) for name in GENERATORS["F"]}
    from calculus.wz import wz_algebra

    forms = wz_algebra(N, convention)
    return {
        "x": forms.monomial((1, 0, "")),
        "y": forms.monomial((0, 1, "")),
        "dx": forms.monomial((0, 0, "dx")),
        "dy": forms.monomial((0, 0, "dy")),
    }


def _evaluate(node: Node, target: MonomialAlgebra, generators: Dict[str, AlgebraElement]) -> AlgebraElement:
    N = target.N
    if isinstance(node, Number):
        return target.one().scale(CycScalar.from_rational(N, node.value))
    if isinstance(node, Generator):
        if node.name == "q":
            return target.one().scale(CycScalar.q_power(N))
        return generators[node.name]
    if isinstance(node, Negate):
        return -_evaluate(node.operand, target, generators)
    if isinstance(node, Power):
        base = _evaluate(node.base, target, generators)
        exponent = node.exponent
        if exponent < 0:
            if isinstance(node.base, Generator) and node.base.name == "q":
                return target.one().scale(CycScalar.q_power(N, exponent))
            exponent %= N
        return base ** exponent
    left = _evaluate(node.left, target, generators)
    right = _evaluate(node.right, target, generators)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse(text: str, algebra: str = "plane") -> Expression:
    """
    Parse text against the generators of one algebra.

    Raises:
        ExpressionError: on a syntax error, a generator of another algebra, or a
            negative power of a non-invertible factor; position is the offset in text
    """
    name = _algebra_name(algebra)
    if not text.strip():
        raise ExpressionError("empty expression", 0)
    tree = _grammar().parse(text)
    _check_generators(tree, name)
    logger.debug("parsed %r in %s", text, name)
    return Expression(text, name, tree)


def parse_element(text: str, algebra: str = "plane", N: int = 3, convention: str = "wz") -> AlgebraElement:
    return parse(text, algebra).evaluate(N, convention)


def format_element(element: AlgebraElement) -> str:
    return str(element)

