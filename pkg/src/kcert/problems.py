"""Problem files: a parenthesized prefix format for a named theorem plus
its certificate, with a canonical printer such that parse then print is
the identity on canonical text.

    problem     := (problem "name" formula certificate)
    formula     := (+ sym) | (- sym) | (and f f) | (or f f)
                 | (box f) | (dia f)
    certificate := (fittings dectree)
                 | (simpfit (closures cl*) (boxinfos bi*))
    dectree     := (dt index index (dectree*))
    cl          := (cl index index)        bi := (bi index index)
    index       := eind | none | (lind i) | (rind i) | (bind i j)

Whitespace is free-form and ; starts a comment running to end of line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fittings import Bind, DecTree, EIND, FitCert, Index, Lind, NONE, Rind
from .formulas import And, Box, Dia, ModalFormula, NegAtom, Or, PosAtom
from .simpfit import BoxInfo, Closure, SimpfitCert

Certificate = FitCert | SimpfitCert


@dataclass(frozen=True)
class ProblemFile:
    name: str
    theorem: ModalFormula
    certificate: Certificate


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# tokenizer

@dataclass(frozen=True)
class _Tok:
    text: str
    line: int
    col: int
    is_string: bool = False


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "()":
            toks.append(_Tok(ch, line, col))
            col += 1
            i += 1
        elif ch == '"':
            start_line, start_col = line, col
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("newline in string", start_line, start_col)
                j += 1
            if j >= n:
                raise ParseError("unterminated string", start_line, start_col)
            toks.append(_Tok(text[i + 1:j], start_line, start_col, is_string=True))
            col += j - i + 1
            i = j + 1
        elif ch in "+-" or ch.isalnum() or ch == "_":
            j = i
            if ch in "+-":
                j = i + 1
            else:
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
            toks.append(_Tok(text[i:j], line, col))
            col += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    return toks


# ---------------------------------------------------------------------------
# recursive-descent parser

class _Parser:
    def __init__(self, toks: list[_Tok], end_line: int):
        self.toks = toks
        self.pos = 0
        self.end_line = end_line

    def error(self, message: str) -> ParseError:
        if self.pos < len(self.toks):
            t = self.toks[self.pos]
            return ParseError(message, t.line, t.col)
        return ParseError(message + " (at end of input)", self.end_line, 1)

    def peek(self) -> _Tok | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def at_open(self) -> bool:
        t = self.peek()
        return t is not None and t.text == "(" and not t.is_string

    def next(self, expect: str | None = None) -> _Tok:
        t = self.peek()
        if t is None:
            raise self.error(f"expected {expect or 'more input'}")
        if expect is not None and (t.text != expect or t.is_string):
            raise self.error(f"expected {expect!r}, found {t.text!r}")
        self.pos += 1
        return t

    def word(self, what: str) -> _Tok:
        t = self.peek()
        if t is None or t.is_string or t.text in "()":
            raise self.error(f"expected {what}")
        self.pos += 1
        return t

    def problem(self) -> ProblemFile:
        self.next("(")
        self.next("problem")
        name = self.peek()
        if name is None or not name.is_string:
            raise self.error("expected a quoted problem name")
        self.pos += 1
        theorem = self.formula()
        cert = self.certificate()
        self.next(")")
        self.finish()
        return ProblemFile(name.text, theorem, cert)

    def finish(self) -> None:
        if self.peek() is not None:
            raise self.error("trailing input after the closing parenthesis")

    def formula(self) -> ModalFormula:
        self.next("(")
        head = self.word("a connective: + - and or box dia")
        if head.text in ("+", "-"):
            sym = self.word("an atom name")
            out: ModalFormula = (PosAtom(sym.text) if head.text == "+"
                                 else NegAtom(sym.text))
        elif head.text == "and":
            out = And(self.formula(), self.formula())
        elif head.text == "or":
            out = Or(self.formula(), self.formula())
        elif head.text == "box":
            out = Box(self.formula())
        elif head.text == "dia":
            out = Dia(self.formula())
        else:
            self.pos -= 1
            raise self.error(f"unknown connective {head.text!r}")
        self.next(")")
        return out

    def certificate(self) -> Certificate:
        self.next("(")
        head = self.word("a certificate kind: fittings or simpfit")
        if head.text == "fittings":
            tree = self.dectree()
            self.next(")")
            return FitCert.load(tree)
        if head.text == "simpfit":
            self.next("(")
            self.next("closures")
            closures = []
            while self.at_open():
                closures.append(self.pair("cl"))
            self.next(")")
            self.next("(")
            self.next("boxinfos")
            boxinfos = []
            while self.at_open():
                boxinfos.append(self.pair("bi"))
            self.next(")")
            self.next(")")
            return SimpfitCert.load(
                tuple(Closure(a, b) for a, b in closures),
                tuple(BoxInfo(a, b) for a, b in boxinfos))
        self.pos -= 1
        raise self.error(f"unknown certificate kind {head.text!r}")

    def pair(self, tag: str) -> tuple[Index, Index]:
        self.next("(")
        self.next(tag)
        a = self.index()
        b = self.index()
        self.next(")")
        return a, b

    def dectree(self) -> DecTree:
        self.next("(")
        self.next("dt")
        decide_on = self.index()
        aux = self.index()
        self.next("(")
        children = []
        while self.at_open():
            children.append(self.dectree())
        self.next(")")
        self.next(")")
        return DecTree(decide_on, aux, tuple(children))

    def index(self) -> Index:
        t = self.peek()
        if t is None:
            raise self.error("expected an index")
        if t.text == "eind" and not t.is_string:
            self.pos += 1
            return EIND
        if t.text == "none" and not t.is_string:
            self.pos += 1
            return NONE
        self.next("(")
        head = self.word("an index constructor: lind rind bind")
        if head.text == "lind":
            out: Index = Lind(self.index())
        elif head.text == "rind":
            out = Rind(self.index())
        elif head.text == "bind":
            out = Bind(self.index(), self.index())
        else:
            self.pos -= 1
            raise self.error(f"unknown index constructor {head.text!r}")
        self.next(")")
        return out


def _parser_for(text: str) -> _Parser:
    return _Parser(_tokenize(text), end_line=text.count("\n") + 1)


def parse_problem(text: str) -> ProblemFile:
    return _parser_for(text).problem()


def parse_formula_text(text: str) -> ModalFormula:
    p = _parser_for(text)
    out = p.formula()
    p.finish()
    return out


# ---------------------------------------------------------------------------
# canonical printers

def format_formula(a: ModalFormula) -> str:
    if isinstance(a, PosAtom):
        return f"(+ {a.name})"
    if isinstance(a, NegAtom):
        return f"(- {a.name})"
    if isinstance(a, And):
        return f"(and {format_formula(a.left)} {format_formula(a.right)})"
    if isinstance(a, Or):
        return f"(or {format_formula(a.left)} {format_formula(a.right)})"
    if isinstance(a, Box):
        return f"(box {format_formula(a.body)})"
    if isinstance(a, Dia):
        return f"(dia {format_formula(a.body)})"
    raise TypeError(f"not a modal formula: {a!r}")


def format_index(index: Index) -> str:
    return str(index)


def format_dectree(tree: DecTree, indent: int = 0) -> str:
    pad = "  " * indent
    head = f"{pad}(dt {tree.decide_on} {tree.aux}"
    if not tree.children:
        return head + " ())"
    kids = "\n".join(format_dectree(child, indent + 1) for child in tree.children)
    return f"{head} (\n{kids}))"


def _block(tag: str, items: tuple, indent: int) -> list[str]:
    pad = "  " * indent
    if not items:
        return [f"{pad}({tag})"]
    lines = [f"{pad}({tag}"]
    lines.extend(f"{pad}  {item}" for item in items)
    lines[-1] += ")"
    return lines


def format_certificate(cert: Certificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, FitCert):
        return f"{pad}(fittings\n{format_dectree(cert.tree, indent + 1)})"
    if isinstance(cert, SimpfitCert):
        lines = [f"{pad}(simpfit"]
        lines += _block("closures", cert.closures, indent + 1)
        lines += _block("boxinfos", cert.boxinfos, indent + 1)
        lines[-1] += ")"
        return "\n".join(lines)
    raise TypeError(f"not a certificate: {cert!r}")


def format_problem(pf: ProblemFile) -> str:
    if '"' in pf.name or "\n" in pf.name:
        raise ValueError("problem names cannot contain quotes or newlines")
    return (f'(problem "{pf.name}"\n'
            f"  {format_formula(pf.theorem)}\n"
            f"{format_certificate(pf.certificate, 1)})\n")
