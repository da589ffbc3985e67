"""A small expression language for bundle identities, and their checker.

Grammar (whitespace-insensitive):

    expr    := term ('+' term)*
    term    := atom ('*' atom)*
    atom    := primary twist*
    twist   := '(' INT ')'
    primary := 'E' '[' INT (',' INT)* ']'      irreducible bundle
             | 'V' '[' INT (',' INT)* ']'      full-system module, restricted
             | 'O'                              trivial bundle
             | 'wedge' '^' INT '(' expr ')'
             | 'sym' '^' INT '(' expr ')'
             | 'dual' '(' expr ')'
             | 'gr' '(' expr ')'                associated graded: identity on characters
             | '(' expr ')'

Identities are checked at character level: an isomorphism must give a
zero difference, an exact sequence a zero alternating sum.  This
certifies equality in the representation ring of the parabolic; it
cannot distinguish a bundle from its associated graded, which is
exactly the granularity the checked statements live at.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Union

from .characters import (
    Character,
    char_add,
    char_dual,
    char_mul,
    char_scale,
    char_sub,
    char_twist,
    decompose,
    irrep_character,
    power_op,
)
from .errors import NotDecomposable, ParseError
from .lie_core import Subsystem, Weight
from .parabolic import ParabolicSetup, bundle_char
from .presets import get_preset

GRADED_NOTE = (
    "identities are checked at character (Grothendieck-group) level; "
    "filtered objects are compared through their associated graded"
)


# -- syntax trees ------------------------------------------------------------


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class Irr(Expr):
    weight: Weight


@dataclass(frozen=True)
class Rep(Expr):
    weight: Weight


@dataclass(frozen=True)
class Triv(Expr):
    pass


@dataclass(frozen=True)
class Twist(Expr):
    inner: Expr
    t: int


@dataclass(frozen=True)
class Dual(Expr):
    inner: Expr


@dataclass(frozen=True)
class Gr(Expr):
    inner: Expr


@dataclass(frozen=True)
class Tensor(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Oplus(Expr):
    terms: tuple[Expr, ...]


@dataclass(frozen=True)
class Wedge(Expr):
    k: int
    inner: Expr


@dataclass(frozen=True)
class Sym(Expr):
    k: int
    inner: Expr


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z]+)|([\[\](),*+^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(len(text) - len(stripped), "a token")
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("punct", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != "end":
            self.pos += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, offset = self.peek()
        if val != value:
            raise ParseError(offset, f"'{value}'")
        self.next()

    def parse(self) -> Expr:
        e = self.expr()
        kind, _, offset = self.peek()
        if kind != "end":
            raise ParseError(offset, "end of input")
        return e

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.next()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Oplus(tuple(terms))

    def term(self) -> Expr:
        e = self.atom()
        while self.peek()[1] == "*":
            self.next()
            e = Tensor(e, self.atom())
        return e

    def atom(self) -> Expr:
        e = self.primary()
        # A parenthesized integer right after a primary is a twist.
        while (
            self.peek()[1] == "("
            and self.peek(1)[0] == "int"
            and self.peek(2)[1] == ")"
        ):
            self.next()
            t = int(self.next()[1])
            self.next()
            e = Twist(e, t)
        return e

    def weight_list(self) -> Weight:
        self.expect("[")
        coords = []
        while True:
            kind, val, offset = self.peek()
            if kind != "int":
                raise ParseError(offset, "an integer coordinate")
            coords.append(int(val))
            self.next()
            kind, val, offset = self.peek()
            if val == ",":
                self.next()
                continue
            if val == "]":
                self.next()
                return tuple(coords)
            raise ParseError(offset, "',' or ']'")

    def power(self) -> int:
        self.expect("^")
        kind, val, offset = self.peek()
        if kind != "int" or int(val) < 0:
            raise ParseError(offset, "a nonnegative exponent")
        self.next()
        return int(val)

    def primary(self) -> Expr:
        kind, val, offset = self.peek()
        if kind == "name":
            if val == "E":
                self.next()
                return Irr(self.weight_list())
            if val == "V":
                self.next()
                return Rep(self.weight_list())
            if val == "O":
                self.next()
                return Triv()
            if val == "wedge":
                self.next()
                k = self.power()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Wedge(k, inner)
            if val == "sym":
                self.next()
                k = self.power()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Sym(k, inner)
            if val == "dual":
                self.next()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Dual(inner)
            if val == "gr":
                self.next()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Gr(inner)
            raise ParseError(offset, "one of E, V, O, wedge, sym, dual, gr")
        if val == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(offset, "an expression")


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# -- serialization ------------------------------------------------------------


def to_text(expr: Expr) -> str:
    """Round-trippable canonical text: parse(to_text(e)) evaluates like e."""
    if isinstance(expr, Irr):
        return "E[" + ",".join(str(x) for x in expr.weight) + "]"
    if isinstance(expr, Rep):
        return "V[" + ",".join(str(x) for x in expr.weight) + "]"
    if isinstance(expr, Triv):
        return "O"
    if isinstance(expr, Twist):
        inner = to_text(expr.inner)
        if isinstance(expr.inner, (Tensor, Oplus, Twist)):
            inner = f"({inner})"
        return f"{inner}({expr.t})"
    if isinstance(expr, Dual):
        return f"dual({to_text(expr.inner)})"
    if isinstance(expr, Gr):
        return f"gr({to_text(expr.inner)})"
    if isinstance(expr, Wedge):
        return f"wedge^{expr.k}({to_text(expr.inner)})"
    if isinstance(expr, Sym):
        return f"sym^{expr.k}({to_text(expr.inner)})"
    if isinstance(expr, Tensor):
        parts = []
        for side in (expr.left, expr.right):
            text = to_text(side)
            if isinstance(side, Oplus):
                text = f"({text})"
            parts.append(text)
        return " * ".join(parts)
    if isinstance(expr, Oplus):
        return " + ".join(to_text(t) for t in expr.terms)
    raise TypeError(f"unknown expression node {expr!r}")


# -- evaluation ----------------------------------------------------------------


def eval_expr(setup: ParabolicSetup, expr: Expr) -> Character:
    """Character of the expression over the Levi weight lattice."""
    rs = setup.rs
    if isinstance(expr, Irr):
        return bundle_char(setup, expr.weight)
    if isinstance(expr, Rep):
        return irrep_character(rs, Subsystem.full(rs.rank), rs.check_rank(expr.weight))
    if isinstance(expr, Triv):
        return {(0,) * rs.rank: 1}
    if isinstance(expr, Twist):
        return char_twist(eval_expr(setup, expr.inner), setup.crossed, expr.t)
    if isinstance(expr, Dual):
        return char_dual(eval_expr(setup, expr.inner))
    if isinstance(expr, Gr):
        return eval_expr(setup, expr.inner)
    if isinstance(expr, Tensor):
        return char_mul(eval_expr(setup, expr.left), eval_expr(setup, expr.right))
    if isinstance(expr, Oplus):
        acc: Character = {}
        for t in expr.terms:
            acc = char_add(acc, eval_expr(setup, t))
        return acc
    if isinstance(expr, Wedge):
        return power_op(eval_expr(setup, expr.inner), expr.k, "wedge")
    if isinstance(expr, Sym):
        return power_op(eval_expr(setup, expr.inner), expr.k, "sym")
    raise TypeError(f"unknown expression node {expr!r}")


# -- identities -----------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    """Either an isomorphism (two terms) or an exact sequence (any length)."""

    name: str
    kind: str  # "iso" | "exactseq"
    terms: tuple[Expr, ...]

    def __post_init__(self):
        if self.kind not in ("iso", "exactseq"):
            raise ValueError(f"kind must be iso or exactseq, got {self.kind!r}")
        if self.kind == "iso" and len(self.terms) != 2:
            raise ValueError("an isomorphism needs exactly two terms")
        if self.kind == "exactseq" and len(self.terms) < 2:
            raise ValueError("an exact sequence needs at least two terms")


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str
    passed: bool
    difference: Character
    diff_components: Optional[tuple[tuple[Weight, int], ...]]


def check_identity(setup: ParabolicSetup, ident: Identity) -> CheckResult:
    if ident.kind == "iso":
        diff = char_sub(eval_expr(setup, ident.terms[0]), eval_expr(setup, ident.terms[1]))
    else:
        diff = {}
        for idx, term in enumerate(ident.terms):
            sign = 1 if idx % 2 == 0 else -1
            diff = char_add(diff, char_scale(eval_expr(setup, term), sign))
    comps: Optional[tuple[tuple[Weight, int], ...]] = None
    if diff:
        try:
            comps = tuple(decompose(setup.rs, setup.levi, diff, virtual=True))
        except NotDecomposable:
            comps = None
    return CheckResult(ident.name, ident.kind, not diff, diff, comps)


# -- built-in ledger --------------------------------------------------------------

# Identities on the E6-paper setup with node 1 crossed.  Shorthand:
# S = E[0,0,0,0,0,1] (rank 10), T = E[0,0,0,1,0,0] (tangent bundle),
# Om = E[-2,1,0,0,0,0] (cotangent), and twists are O(t) shifts at node 1.
_BUILTIN: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("wedge2_s", "iso", ("wedge^2(E[0,0,0,0,0,1])", "E[0,0,0,0,1,0]")),
    ("wedge3_s", "iso", ("wedge^3(E[0,0,0,0,0,1])", "E[0,0,1,0,0,0]")),
    ("wedge4_s", "iso", ("wedge^4(E[0,0,0,0,0,1])", "E[0,1,0,1,0,0]")),
    ("wedge2_tangent", "iso", ("wedge^2(E[0,0,0,1,0,0])", "E[0,0,1,0,0,0]")),
    ("wedge3_tangent", "iso", ("wedge^3(E[0,0,0,1,0,0])", "E[0,1,0,0,1,0]")),
    ("wedge2_cotangent", "iso", ("wedge^2(E[-2,1,0,0,0,0])", "E[-3,0,1,0,0,0]")),
    ("wedge3_cotangent", "iso", ("wedge^3(E[-2,1,0,0,0,0])", "E[-4,0,0,1,1,0]")),
    ("wedge2_t_twists", "iso", ("wedge^2(E[0,0,0,1,0,0])", "wedge^2(E[-2,1,0,0,0,0])(3)")),
    (
        "euler_cotangent",
        "exactseq",
        ("E[-1,0,0,0,0,1]", "V[1,0,0,0,0,0] * O", "E[-1,1,0,0,0,0] + O(1)"),
    ),
    (
        "euler_tangent",
        "exactseq",
        ("O", "V[0,0,0,0,0,1] * O(1)", "E[0,0,0,1,0,0] + E[1,0,0,0,0,1]"),
    ),
    (
        "adjoint_restriction",
        "iso",
        (
            "V[0,0,0,1,0,0] * O",
            "E[0,0,0,1,0,0] + E[-2,1,0,0,0,0] + E[-1,0,0,0,1,0] + O",
        ),
    ),
    (
        "minimal27_restriction",
        "iso",
        ("V[1,0,0,0,0,0] * O", "O(1) + E[-1,1,0,0,0,0] + E[-1,0,0,0,0,1]"),
    ),
    (
        "dual27_restriction",
        "iso",
        ("V[0,0,0,0,0,1] * O", "O(-1) + E[-1,0,0,1,0,0] + E[0,0,0,0,0,1]"),
    ),
    (
        "six_term",
        "exactseq",
        (
            "E[-2,0,0,0,0,2]",
            "V[1,0,0,0,0,0] * E[-1,0,0,0,0,1]",
            "(V[0,0,0,0,0,1] + V[0,1,0,0,0,0]) * O",
            "(V[1,0,0,0,0,0] + V[0,0,0,0,1,0]) * O(1)",
            "V[0,0,0,0,0,1] * E[1,0,0,0,0,1]",
            "E[1,0,0,0,0,2]",
        ),
    ),
    (
        "sym2_dual_s",
        "iso",
        ("sym^2(dual(E[0,0,0,0,0,1]))", "E[-2,0,0,0,0,2] + O(-1)"),
    ),
    ("sym3_s", "iso", ("sym^3(E[0,0,0,0,0,1])", "E[0,0,0,0,0,3] + E[1,0,0,0,0,1]")),
    (
        "wedge_sym_exchange",
        "iso",
        (
            "wedge^2(dual(E[0,0,0,0,0,1])) * dual(E[0,0,0,0,0,1]) + E[-3,0,0,0,0,3]",
            "E[-2,0,0,0,0,2] * dual(E[0,0,0,0,0,1]) + wedge^3(dual(E[0,0,0,0,0,1]))",
        ),
    ),
    (
        "dual_s_squared",
        "iso",
        (
            "dual(E[0,0,0,0,0,1]) * dual(E[0,0,0,0,0,1])",
            "E[-2,0,0,0,0,2] + E[-2,0,0,0,1,0] + O(-1)",
        ),
    ),
    (
        "cotangent_x_tangent",
        "iso",
        (
            "E[0,1,0,0,0,0] * E[0,0,0,1,0,0]",
            "E[0,1,0,1,0,0] + E[1,0,0,0,1,0] + O(2)",
        ),
    ),
    (
        "tangent_x_wedge2s",
        "iso",
        (
            "gr(E[0,0,0,1,0,0] * E[0,0,0,0,1,0](-1))",
            "E[-1,0,0,1,1,0] + E[-1,1,0,0,0,1] + E[0,0,0,1,0,0]",
        ),
    ),
    (
        "spinor_x_s",
        "iso",
        ("gr(E[0,1,0,0,0,0] * E[0,0,0,0,0,1](-1))", "E[-1,1,0,0,0,1] + E[0,0,0,1,0,0]"),
    ),
    ("dual_s_is_twist", "iso", ("dual(E[0,0,0,0,0,1])", "E[0,0,0,0,0,1](-1)")),
)


def builtin_ledger() -> list[Identity]:
    """The shipped identity list for the E6-paper setup with node 1 crossed."""
    return [
        Identity(name, kind, tuple(parse_expr(t) for t in terms))
        for name, kind, terms in _BUILTIN
    ]


def builtin_ledger_obj() -> list[dict]:
    return [
        {"name": name, "kind": kind, "terms": list(terms)}
        for name, kind, terms in _BUILTIN
    ]


def identities_from_obj(data: list) -> list[Identity]:
    out = []
    for item in data:
        for key in ("name", "kind", "terms"):
            if key not in item:
                raise ValueError(f"identity entry is missing required key '{key}'")
        kind = str(item["kind"]).lower()
        out.append(
            Identity(
                str(item["name"]),
                kind,
                tuple(parse_expr(t) for t in item["terms"]),
            )
        )
    return out


def load_ledger(path: str) -> list[Identity]:
    with open(path, "r", encoding="utf-8") as fh:
        return identities_from_obj(json.load(fh))


def identity_to_obj(ident: Identity) -> dict:
    return {
        "name": ident.name,
        "kind": ident.kind,
        "terms": [to_text(t) for t in ident.terms],
    }


def check_ledger(
    setup: ParabolicSetup, identities: list[Identity]
) -> list[CheckResult]:
    return [check_identity(setup, ident) for ident in identities]


def ledger_report_obj(results: list[CheckResult]) -> dict:
    return {
        "note": GRADED_NOTE,
        "verdict": "pass" if all(r.passed for r in results) else "fail",
        "results": [
            {
                "name": r.name,
                "kind": r.kind,
                "passed": r.passed,
                "difference": [
                    {"weight": list(w), "mult": m} for w, m in sorted(r.difference.items())
                ],
                "difference_components": (
                    [{"weight": list(w), "mult": m} for w, m in r.diff_components]
                    if r.diff_components is not None
                    else None
                ),
            }
            for r in results
        ],
    }


def render_ledger_text(results: list[CheckResult]) -> str:
    lines = [f"note: {GRADED_NOTE}", ""]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name} ({r.kind})")
        if not r.passed:
            if r.diff_components is not None:
                comps = ", ".join(f"{m} x E{list(w)}" for w, m in r.diff_components)
                lines.append(f"      difference: {comps}")
            else:
                lines.append(f"      difference has {len(r.difference)} weights")
    verdict = "pass" if all(r.passed for r in results) else "fail"
    lines.append("")
    lines.append(f"verdict: {verdict}")
    return "\n".join(lines)
