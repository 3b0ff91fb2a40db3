"""The space-expression language.

Grammar (fully parenthesized, no infix)::

    expr  := NAME | NAME "(" arg ("," arg)* ")"
    arg   := INT | expr

Diagnostics report a byte offset into the UTF-8 encoded input.
"""
from __future__ import annotations

from dataclasses import dataclass

# name -> (parameter kinds, minimum value of each integer parameter)
SIGNATURES: dict[str, tuple[tuple[str, ...], tuple[int | None, ...]]] = {
    "S": (("int",), (1,)),
    "pt": ((), ()),
    "RP2": ((), ()),
    "torus": ((), ()),
    "surface": (("int",), (0,)),
    "wedge": (("expr", "expr"), (None, None)),
    "prod": (("expr", "expr"), (None, None)),
    "smash": (("expr", "expr"), (None, None)),
    "susp": (("expr",), (None,)),
    "sp": (("int", "expr"), (1, None)),
    "rsp": (("int", "expr"), (1, None)),
    "bary": (("int", "expr"), (1, None)),
    "symjoin2": (("expr",), (None,)),
}

# diagnostic codes
E_SYNTAX = "E001"
E_UNKNOWN = "E002"
E_ARITY = "E003"
E_RANGE = "E004"
E_KIND = "E005"
E_TRAILING = "E006"


class ParseError(ValueError):
    def __init__(self, code: str, offset: int, message: str):
        super().__init__(f"{code} at byte {offset}: {message}")
        self.code = code
        self.offset = offset
        self.message = message


@dataclass(frozen=True)
class SpaceExpr:
    """A constructor applied to integer parameters and subexpressions, in order."""

    op: str
    args: tuple = ()

    def __str__(self):
        return pretty(self)

    @property
    def children(self) -> tuple["SpaceExpr", ...]:
        return tuple(a for a in self.args if isinstance(a, SpaceExpr))

    @property
    def params(self) -> tuple[int, ...]:
        return tuple(a for a in self.args if isinstance(a, int))


def pretty(e: SpaceExpr) -> str:
    if not e.args:
        return e.op
    return f"{e.op}({', '.join(str(a) if isinstance(a, int) else pretty(a) for a in e.args)})"


class _Parser:
    def __init__(self, text: str | bytes):
        self.src = text if isinstance(text, bytes) else text.encode("utf-8")
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> int | None:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else None

    def expect(self, ch: bytes):
        if self.peek() != ch[0]:
            got = "end of input" if self.peek() is None else repr(chr(self.src[self.pos]))
            raise ParseError(E_SYNTAX, self.pos, f"expected {ch.decode()!r}, got {got}")
        self.pos += 1

    def word(self) -> tuple[str, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and (chr(self.src[self.pos]).isalnum()
                                            or self.src[self.pos] == ord("_")):
            self.pos += 1
        return self.src[start:self.pos].decode("ascii"), start

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        if self.pos < len(self.src) and self.src[self.pos] == ord("-"):
            self.pos += 1
        while self.pos < len(self.src) and 48 <= self.src[self.pos] <= 57:
            self.pos += 1
        text = self.src[start:self.pos].decode("ascii")
        if text in ("", "-"):
            raise ParseError(E_KIND, start, "expected an integer")
        return int(text), start

    def expr(self) -> SpaceExpr:
        self.skip()
        if self.pos >= len(self.src):
            raise ParseError(E_SYNTAX, self.pos, "expected an expression, got end of input")
        c = self.src[self.pos]
        if not (chr(c).isalpha() if c < 128 else False):
            if 48 <= c <= 57 or c == ord("-"):
                raise ParseError(E_KIND, self.pos, "expected a space expression, got an integer")
            raise ParseError(E_SYNTAX, self.pos, f"unexpected character at byte {self.pos}")
        name, start = self.word()
        if name not in SIGNATURES:
            raise ParseError(E_UNKNOWN, start, f"unknown constructor {name!r}")
        kinds, mins = SIGNATURES[name]
        if self.peek() != ord("("):
            if kinds:
                raise ParseError(E_ARITY, self.pos,
                                 f"{name} takes {len(kinds)} argument(s), got 0")
            return SpaceExpr(name)
        open_at = self.pos
        self.pos += 1
        if not kinds:
            raise ParseError(E_ARITY, open_at, f"{name} takes no arguments")
        args, starts = [], []
        while True:
            self.skip()
            starts.append(self.pos)
            if len(args) >= len(kinds):
                # parse the extra argument only to report arity
                raise ParseError(E_ARITY, self.pos,
                                 f"{name} takes {len(kinds)} argument(s), got more")
            kind = kinds[len(args)]
            if kind == "int":
                value, at = self.integer()
                lo = mins[len(args)]
                if lo is not None and value < lo:
                    raise ParseError(E_RANGE, at, f"{name}: parameter must be >= {lo}, got {value}")
                args.append(value)
            else:
                args.append(self.expr())
            if self.peek() == ord(","):
                self.pos += 1
                continue
            break
        if len(args) != len(kinds):
            raise ParseError(E_ARITY, self.pos,
                             f"{name} takes {len(kinds)} argument(s), got {len(args)}")
        self.expect(b")")
        return SpaceExpr(name, tuple(args))


def parse(text: str | bytes) -> SpaceExpr:
    p = _Parser(text)
    e = p.expr()
    if p.peek() is not None:
        raise ParseError(E_TRAILING, p.pos, "unexpected trailing input")
    return e
