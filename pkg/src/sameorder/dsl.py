"""Group-expression language.

Grammar, whitespace-insensitive:

    expr  := term ('x' term)*
    term  := atom | '(' expr ')'
    atom  := NAME '(' int-list ')' | 'Perm' '[' cycles ']' | 'cex3'

Families: C, D, Dic, Q, S, A, F take integers; SL, PSL, SU, PSU take
(degree, field size); Perm lists explicit generators in 1-indexed
disjoint-cycle notation, commas separating generators; cex3 is the fixed
order-168 construction and takes no parameters.  Q(n) is sugar for
Dic(n/4).  Products flatten, so reassociation changes nothing.  All parse
errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perms
from .core import DEFAULT_CAP, Group, product_group
from .errors import ArityError, DslSyntaxError, InvalidParameterError, UnknownFamilyError
from .matrices import psl_group, psu_group, sl_group, su_group

ARITY = {
    "C": 1, "D": 1, "Dic": 1, "Q": 1, "S": 1, "A": 1, "F": 3,
    "SL": 2, "PSL": 2, "SU": 2, "PSU": 2, "cex3": 0,
}

PERM_FAMILIES = {"C", "D", "Dic", "S", "A", "F", "cex3"}
MATRIX_FAMILIES = {"SL": sl_group, "PSL": psl_group, "SU": su_group, "PSU": psu_group}


@dataclass(frozen=True)
class Atom:
    family: str
    params: tuple


@dataclass(frozen=True)
class PermAtom:
    """Explicit generators: each a tuple of cycles of 1-indexed points."""

    gens: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


# -- lexer ----------------------------------------------------------------------

_SYMBOLS = {"(": "LP", ")": "RP", "[": "LB", "]": "RB", ",": "COMMA"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SYMBOLS:
            toks.append(_Token(_SYMBOLS[c], c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            toks.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        raise DslSyntaxError(f"unexpected character {c!r}", position=i)
    toks.append(_Token("END", "", n))
    return toks


# -- parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            got = repr(t.text) if t.kind != "END" else "end of input"
            raise DslSyntaxError(f"expected {what}, got {got}", position=t.pos)
        return self.take()

    def expression(self):
        factors = [self.term()]
        while self.peek().kind == "NAME" and self.peek().text == "x":
            self.take()
            factors.append(self.term())
        if len(factors) == 1:
            return factors[0]
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        return Product(tuple(flat))

    def term(self):
        t = self.peek()
        if t.kind == "LP":
            self.take()
            inner = self.expression()
            self.expect("RP", "')'")
            return inner
        if t.kind == "NAME" and t.text != "x":
            return self.atom()
        got = repr(t.text) if t.kind != "END" else "end of input"
        raise DslSyntaxError(f"expected a group name or '(', got {got}", position=t.pos)

    def atom(self):
        name = self.take()
        if name.text == "Perm":
            return self.perm_atom(name)
        if name.text not in ARITY:
            raise UnknownFamilyError(f"unknown family {name.text!r}", position=name.pos)
        if name.text == "cex3":
            # parameter-free; a trailing empty () is tolerated
            if self.peek().kind == "LP":
                self.take()
                self.expect("RP", "')' (cex3 takes no parameters)")
            return Atom("cex3", ())
        self.expect("LP", "'('")
        params = [int(self.expect("INT", "an integer").text)]
        while self.peek().kind == "COMMA":
            self.take()
            params.append(int(self.expect("INT", "an integer").text))
        self.expect("RP", "')'")
        arity = ARITY[name.text]
        if len(params) != arity:
            raise ArityError(
                f"{name.text} takes {arity} parameter(s), got {len(params)}",
                position=name.pos,
            )
        if name.text == "Q":
            m = params[0]
            if m < 8 or m % 4:
                raise InvalidParameterError(
                    f"Q({m}): group order must be a multiple of 4, at least 8"
                )
            return Atom("Dic", (m // 4,))
        return Atom(name.text, tuple(params))

    def perm_atom(self, name_tok):
        self.expect("LB", "'['")
        gens = []
        while True:
            cycles = [self.cycle()]
            while self.peek().kind == "LP":
                cycles.append(self.cycle())
            gens.append(tuple(cycles))
            if self.peek().kind == "COMMA":
                self.take()
                continue
            self.expect("RB", "']' or ','")
            break
        return PermAtom(tuple(gens))

    def cycle(self):
        self.expect("LP", "'(' starting a cycle")
        pts = [self.point()]
        while self.peek().kind == "COMMA":
            self.take()
            pts.append(self.point())
        self.expect("RP", "')'")
        return tuple(pts)

    def point(self) -> int:
        t = self.expect("INT", "a point number")
        v = int(t.text)
        if v < 1:
            raise DslSyntaxError("points are 1-indexed, so must be >= 1", position=t.pos)
        return v


def parse_expr(text: str):
    p = _Parser(text)
    ast = p.expression()
    t = p.peek()
    if t.kind != "END":
        raise DslSyntaxError(f"unexpected trailing {t.text!r}", position=t.pos)
    return ast


def print_expr(ast) -> str:
    """Canonical text form; parsing it back yields an equal AST."""
    if isinstance(ast, Product):
        return " x ".join(print_expr(f) for f in ast.factors)
    if isinstance(ast, PermAtom):
        gens = []
        for cycles in ast.gens:
            gens.append("".join("(" + ",".join(map(str, c)) + ")" for c in cycles))
        return "Perm[" + ", ".join(gens) + "]"
    if ast.family == "cex3":
        return "cex3"
    return f"{ast.family}({','.join(map(str, ast.params))})"


def normalize_expr(text: str) -> str:
    return print_expr(parse_expr(text))


# -- evaluation --------------------------------------------------------------------


def _eval_atom(ast, cap: int) -> Group:
    name = print_expr(ast)
    if isinstance(ast, PermAtom):
        degree = max(p for cycles in ast.gens for c in cycles for p in c)
        gens = [
            perms.perm_from_cycles([tuple(p - 1 for p in c) for c in cycles], degree)
            for cycles in ast.gens
        ]
        return perms.permutation_group(gens, name=name, cap=cap)
    if ast.family in PERM_FAMILIES:
        return perms.family_group(ast.family, ast.params, name=name, cap=cap)
    builder = MATRIX_FAMILIES[ast.family]
    n, q = ast.params
    grp = builder(n, q, cap=cap)
    grp.name = name
    return grp


def eval_expr(ast, cap: int = DEFAULT_CAP) -> Group:
    """Build the group an expression denotes.

    Products of two permutation groups act on disjoint point sets; any other
    combination composes pairwise.
    """
    if not isinstance(ast, Product):
        return _eval_atom(ast, cap)
    parts = [_eval_atom(f, cap) for f in ast.factors]
    result = parts[0]
    for nxt in parts[1:]:
        if result.identity.kind == "perm" and nxt.identity.kind == "perm":
            result = perms.direct_product(result, nxt, cap=cap)
        else:
            result = product_group(result, nxt, cap=cap)
    result.name = print_expr(ast)
    return result


def group_for(text: str, cap: int = DEFAULT_CAP) -> Group:
    return eval_expr(parse_expr(text), cap)
