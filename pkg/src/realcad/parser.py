"""S-expression script language: a strict subset of SMT-LIB 2 surface syntax.

Terms are polynomial: +, -, * over declared Real variables and integer,
decimal or (/ p q) literals; division of non-literals is rejected.  Relations
are binary =, <, <=, >, >=.  Boolean structure uses and/or/not, and a single
assertion may carry a forall/exists prefix.  Commands: declare-fun /
declare-const / declare-var, assert, check-sat, decide, get-model, get-cells,
push, pop, set-option, set-logic / set-info (accepted, ignored), exit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import ParseError
from .formula import And, Atom, Node, Not, Or
from .poly import Polynomial, format_poly
from .rational import QQ

# ---------------------------------------------------------------------------
# tokenizing and reading
# ---------------------------------------------------------------------------


@dataclass
class Token:
    kind: str  # lparen rparen symbol numeral decimal keyword string
    text: str
    line: int
    col: int


_SYMBOL_EXTRA = set("~!@$%^&*_-+=<>.?/")


def _tokenize(text: str):
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch == "(":
            yield Token("lparen", "(", start_line, start_col)
            i += 1
            col += 1
            continue
        if ch == ")":
            yield Token("rparen", ")", start_line, start_col)
            i += 1
            col += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                j += 1
            if j >= n:
                raise ParseError("unterminated string", start_line, start_col)
            yield Token("string", text[i + 1:j], start_line, start_col)
            col += j + 1 - i
            i = j + 1
            continue
        j = i
        while j < n and (text[j].isalnum() or text[j] in _SYMBOL_EXTRA or text[j] == ":"):
            j += 1
        if j == i:
            raise ParseError(f"unexpected character {ch!r}", start_line, start_col)
        word = text[i:j]
        col += j - i
        i = j
        if word[0] == ":":
            yield Token("keyword", word, start_line, start_col)
        elif word[0].isdigit() or (word[0] == "-" and len(word) > 1 and word[1].isdigit()):
            kind = "decimal" if "." in word else "numeral"
            yield Token(kind, word, start_line, start_col)
        else:
            yield Token("symbol", word, start_line, start_col)


@dataclass
class SExpr:
    items: Optional[list]  # None for leaves
    token: Optional[Token]
    line: int
    col: int

    @property
    def is_list(self) -> bool:
        return self.items is not None

    def head(self) -> Optional[str]:
        if self.is_list and self.items and not self.items[0].is_list:
            return self.items[0].token.text
        return None


def _read_all(text: str) -> list:
    out = []
    stack = []
    for tok in _tokenize(text):
        if tok.kind == "lparen":
            stack.append(SExpr([], None, tok.line, tok.col))
        elif tok.kind == "rparen":
            if not stack:
                raise ParseError("unmatched ')'", tok.line, tok.col)
            done = stack.pop()
            (stack[-1].items if stack else out).append(done)
        else:
            leaf = SExpr(None, tok, tok.line, tok.col)
            (stack[-1].items if stack else out).append(leaf)
    if stack:
        raise ParseError("unclosed '('", stack[-1].line, stack[-1].col)
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@dataclass
class DeclareVar:
    name: str


@dataclass
class AssertCommand:
    binders: tuple  # ((quantifier, name), ...) outermost first; empty when free
    node: Node


@dataclass
class CheckSat:
    pass


@dataclass
class Decide:
    pass


@dataclass
class GetModel:
    pass


@dataclass
class GetCells:
    pass


@dataclass
class Push:
    count: int = 1


@dataclass
class Pop:
    count: int = 1


@dataclass
class SetOption:
    key: str
    value: Union[str, int, float, bool]


@dataclass
class Exit:
    pass


Command = Union[DeclareVar, AssertCommand, CheckSat, Decide, GetModel, GetCells,
                Push, Pop, SetOption, Exit]


@dataclass
class Script:
    commands: list = field(default_factory=list)
    declared: list = field(default_factory=list)  # free variable names, in order
    binder_vars: list = field(default_factory=list)  # (quantifier, name), in order

    def var_names(self) -> list:
        return list(self.declared) + [name for _, name in self.binder_vars]


_KNOWN_OPTIONS = {
    "operator", "mode", "product-ec", "cell-cap", "time-cap", "model-digits", "stats",
}


class _Parser:
    def __init__(self):
        self.env: dict = {}
        self.script = Script()

    def _declare(self, name: str, sx: SExpr, quantifier: Optional[str] = None) -> int:
        if name in self.env:
            raise ParseError(f"variable {name!r} already declared", sx.line, sx.col)
        index = len(self.env)
        self.env[name] = index
        if quantifier is None:
            if self.script.binder_vars:
                raise ParseError(
                    "free declarations must precede quantified variables", sx.line, sx.col
                )
            self.script.declared.append(name)
        else:
            self.script.binder_vars.append((quantifier, name))
        return index

    # -- terms ----------------------------------------------------------------

    def term(self, sx: SExpr) -> Polynomial:
        if not sx.is_list:
            tok = sx.token
            if tok.kind == "numeral":
                return Polynomial.constant(QQ(int(tok.text)))
            if tok.kind == "decimal":
                whole, frac = tok.text.split(".")
                sign = -1 if whole.startswith("-") else 1
                whole = whole.lstrip("-")
                scale = 10 ** len(frac)
                value = QQ(int(whole or "0") * scale + int(frac or "0"), scale)
                return Polynomial.constant(sign * value)
            if tok.kind == "symbol":
                if tok.text not in self.env:
                    raise ParseError(f"undeclared variable {tok.text!r}", sx.line, sx.col)
                return Polynomial.variable(self.env[tok.text])
            raise ParseError(f"unexpected token {tok.text!r} in term", sx.line, sx.col)
        head = sx.head()
        args = sx.items[1:] if sx.items else []
        if head == "+":
            if not args:
                raise ParseError("'+' needs at least one argument", sx.line, sx.col)
            acc = self.term(args[0])
            for a in args[1:]:
                acc = acc + self.term(a)
            return acc
        if head == "-":
            if not args:
                raise ParseError("'-' needs at least one argument", sx.line, sx.col)
            if len(args) == 1:
                return -self.term(args[0])
            acc = self.term(args[0])
            for a in args[1:]:
                acc = acc - self.term(a)
            return acc
        if head == "*":
            if not args:
                raise ParseError("'*' needs at least one argument", sx.line, sx.col)
            acc = self.term(args[0])
            for a in args[1:]:
                acc = acc * self.term(a)
            return acc
        if head == "/":
            if len(args) != 2:
                raise ParseError("'/' needs exactly two arguments", sx.line, sx.col)
            num = self.term(args[0])
            den = self.term(args[1])
            if not (num.is_constant() and den.is_constant()):
                raise ParseError(
                    "division is restricted to numeric literals", sx.line, sx.col
                )
            if den.const == 0:
                raise ParseError("division by zero", sx.line, sx.col)
            return Polynomial.constant(num.const / den.const)
        raise ParseError(f"unknown term operator {head!r}", sx.line, sx.col,
                         expected=("+", "-", "*", "/"))

    # -- formulas --------------------------------------------------------------

    def formula(self, sx: SExpr) -> Node:
        if not sx.is_list:
            raise ParseError("expected a formula", sx.line, sx.col,
                             expected=("=", "<", "<=", ">", ">=", "and", "or", "not"))
        head = sx.head()
        args = sx.items[1:] if sx.items else []
        if head in ("=", "<", "<=", ">", ">="):
            if len(args) != 2:
                raise ParseError(f"relation {head!r} needs exactly two arguments",
                                 sx.line, sx.col)
            lhs = self.term(args[0])
            rhs = self.term(args[1])
            return Atom(lhs - rhs, head)
        if head == "and":
            if not args:
                raise ParseError("'and' needs at least one argument", sx.line, sx.col)
            return And([self.formula(a) for a in args])
        if head == "or":
            if not args:
                raise ParseError("'or' needs at least one argument", sx.line, sx.col)
            return Or([self.formula(a) for a in args])
        if head == "not":
            if len(args) != 1:
                raise ParseError("'not' needs exactly one argument", sx.line, sx.col)
            inner = self.formula(args[0])
            if isinstance(inner, Atom):
                return inner.negate()
            return Not(inner)
        if head in ("forall", "exists"):
            raise ParseError("quantifiers are only allowed as an assertion prefix",
                             sx.line, sx.col)
        raise ParseError(f"unknown formula operator {head!r}", sx.line, sx.col,
                         expected=("=", "<", "<=", ">", ">=", "and", "or", "not"))

    # -- commands ----------------------------------------------------------------

    def _binder_list(self, sx: SExpr) -> list:
        if not sx.is_list:
            raise ParseError("expected a binder list", sx.line, sx.col)
        names = []
        for b in sx.items:
            if not b.is_list or len(b.items) != 2 or b.items[0].is_list:
                raise ParseError("binder must look like (x Real)", sx.line, sx.col)
            sort = b.items[1]
            if sort.is_list or sort.token.text != "Real":
                raise ParseError("only Real variables are supported",
                                 sort.line, sort.col)
            names.append(b.items[0].token.text)
        if not names:
            raise ParseError("empty binder list", sx.line, sx.col)
        return names

    def parse_assert(self, sx: SExpr) -> AssertCommand:
        body = sx.items[1]
        binders = []
        while body.is_list and body.head() in ("forall", "exists"):
            if len(body.items) != 3:
                raise ParseError(f"{body.head()!r} needs a binder list and a body",
                                 body.line, body.col)
            quantifier = "forall" if body.head() == "forall" else "exists"
            for name in self._binder_list(body.items[1]):
                binders.append((quantifier, name))
                self._declare(name, body, quantifier)
            body = body.items[2]
        return AssertCommand(tuple(binders), self.formula(body))

    def command(self, sx: SExpr) -> Optional[Command]:
        if not sx.is_list or not sx.items:
            raise ParseError("expected a command", sx.line, sx.col)
        head = sx.head()
        args = sx.items[1:]
        if head in ("declare-fun", "declare-const", "declare-var"):
            if head == "declare-fun":
                if len(args) != 3 or args[0].is_list or not args[1].is_list or args[1].items:
                    raise ParseError("expected (declare-fun name () Real)", sx.line, sx.col)
                sort = args[2]
            else:
                if len(args) != 2 or args[0].is_list:
                    raise ParseError(f"expected ({head} name Real)", sx.line, sx.col)
                sort = args[1]
            if sort.is_list or sort.token.text != "Real":
                raise ParseError("only Real variables are supported", sort.line, sort.col)
            name = args[0].token.text
            self._declare(name, sx)
            return DeclareVar(name)
        if head == "assert":
            if len(args) != 1:
                raise ParseError("'assert' needs exactly one formula", sx.line, sx.col)
            return self.parse_assert(sx)
        if head == "check-sat":
            return CheckSat()
        if head == "decide":
            return Decide()
        if head == "get-model":
            return GetModel()
        if head == "get-cells":
            return GetCells()
        if head in ("push", "pop"):
            count = 1
            if args:
                if len(args) > 1 or args[0].is_list or args[0].token.kind != "numeral":
                    raise ParseError(f"'{head}' takes an optional numeral", sx.line, sx.col)
                count = int(args[0].token.text)
            return Push(count) if head == "push" else Pop(count)
        if head == "set-option":
            if len(args) != 2 or args[0].is_list or args[0].token.kind != "keyword":
                raise ParseError("expected (set-option :key value)", sx.line, sx.col)
            key = args[0].token.text[1:]
            if key not in _KNOWN_OPTIONS:
                raise ParseError(f"unknown option :{key}", sx.line, sx.col,
                                 expected=tuple(sorted(_KNOWN_OPTIONS)))
            raw = args[1]
            if raw.is_list:
                raise ParseError("option value must be atomic", raw.line, raw.col)
            tok = raw.token
            value: Union[str, int, float, bool]
            if tok.kind == "numeral":
                value = int(tok.text)
            elif tok.kind == "decimal":
                value = float(tok.text)
            elif tok.text in ("true", "false"):
                value = tok.text == "true"
            else:
                value = tok.text
            return SetOption(key, value)
        if head in ("set-logic", "set-info"):
            return None  # accepted and ignored
        if head == "exit":
            return Exit()
        raise ParseError(f"unknown command {head!r}", sx.line, sx.col)


def parse(text: str) -> Script:
    """Parse a script; raises ParseError with line/column on bad input."""
    parser = _Parser()
    depth = 0
    for sx in _read_all(text):
        cmd = parser.command(sx)
        if cmd is None:
            continue
        if isinstance(cmd, Push):
            depth += cmd.count
        elif isinstance(cmd, Pop):
            depth -= cmd.count
            if depth < 0:
                raise ParseError("pop without matching push", sx.line, sx.col)
        parser.script.commands.append(cmd)
    if depth != 0:
        raise ParseError("unbalanced push/pop at end of script", 1, 1)
    return parser.script


class IncrementalParser:
    """Command-at-a-time parsing with a persistent declaration environment."""

    def __init__(self):
        self._parser = _Parser()
        self._depth = 0

    def feed(self, text: str) -> list:
        out = []
        for sx in _read_all(text):
            cmd = self._parser.command(sx)
            if cmd is None:
                continue
            if isinstance(cmd, Push):
                self._depth += cmd.count
            elif isinstance(cmd, Pop):
                self._depth -= cmd.count
                if self._depth < 0:
                    raise ParseError("pop without matching push", sx.line, sx.col)
            self._parser.script.commands.append(cmd)
            out.append(cmd)
        return out

    @property
    def script(self) -> Script:
        return self._parser.script


# ---------------------------------------------------------------------------
# printing (round-trip support)
# ---------------------------------------------------------------------------


def poly_to_sexpr(p: Polynomial, names: list) -> str:
    terms = p.to_terms()
    if not terms:
        return "0"
    parts = []
    for mono in sorted(terms, key=lambda m: tuple(sorted(m, reverse=True)), reverse=True):
        coeff = terms[mono]
        factors = []
        num, den = int(coeff.numerator), int(coeff.denominator)
        if den != 1:
            coeff_s = f"(/ {num} {den})" if num >= 0 else f"(- (/ {-num} {den}))"
        else:
            coeff_s = str(num) if num >= 0 else f"(- {-num})"
        for v, e in sorted(mono):
            factors.extend([names[v]] * e)
        if not factors:
            parts.append(coeff_s)
        elif coeff == 1:
            parts.append(factors[0] if len(factors) == 1 else "(* " + " ".join(factors) + ")")
        else:
            parts.append("(* " + " ".join([coeff_s] + factors) + ")")
    if len(parts) == 1:
        return parts[0]
    return "(+ " + " ".join(parts) + ")"


def _node_to_sexpr(node: Node, names: list) -> str:
    if isinstance(node, Atom):
        return f"({node.rel} {poly_to_sexpr(node.poly, names)} 0)"
    if isinstance(node, And):
        return "(and " + " ".join(_node_to_sexpr(i, names) for i in node.items) + ")"
    if isinstance(node, Or):
        return "(or " + " ".join(_node_to_sexpr(i, names) for i in node.items) + ")"
    return "(not " + _node_to_sexpr(node.item, names) + ")"


def script_to_text(script: Script) -> str:
    """Render a Script back to source form; parse(script_to_text(s)) == s."""
    names = script.var_names()
    lines = []
    emitted_declares = set()
    for cmd in script.commands:
        if isinstance(cmd, DeclareVar):
            lines.append(f"(declare-fun {cmd.name} () Real)")
            emitted_declares.add(cmd.name)
        elif isinstance(cmd, AssertCommand):
            body = _node_to_sexpr(cmd.node, names)
            for quantifier, name in reversed(cmd.binders):
                body = f"({quantifier} (({name} Real)) {body})"
            lines.append(f"(assert {body})")
        elif isinstance(cmd, CheckSat):
            lines.append("(check-sat)")
        elif isinstance(cmd, Decide):
            lines.append("(decide)")
        elif isinstance(cmd, GetModel):
            lines.append("(get-model)")
        elif isinstance(cmd, GetCells):
            lines.append("(get-cells)")
        elif isinstance(cmd, Push):
            lines.append(f"(push {cmd.count})" if cmd.count != 1 else "(push)")
        elif isinstance(cmd, Pop):
            lines.append(f"(pop {cmd.count})" if cmd.count != 1 else "(pop)")
        elif isinstance(cmd, SetOption):
            value = cmd.value
            if isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"(set-option :{cmd.key} {value})")
        elif isinstance(cmd, Exit):
            lines.append("(exit)")
    return "\n".join(lines) + "\n"
