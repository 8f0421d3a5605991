"""Positioned s-expression reader used by the signature, term and rule formats.

Grammar::

    form    := atom | '(' form* ')'
    atom    := INT | STRING | SYMBOL
    INT     := '-'? [0-9]+
    STRING  := '"' ( [^"\\] | '\\"' | '\\\\' )* '"'
    SYMBOL  := any run of characters other than whitespace, '(', ')', '"', ';'

``;`` starts a comment that runs to the end of the line.
"""

import re

from .errors import ParseError

_INT = re.compile(r"-?[0-9]+\Z")
_DELIMS = set("()\";") | set(" \t\r\n\f\v")


class Atom:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind  # "int" | "str" | "sym"
        self.value = value
        self.line = line
        self.col = col

    def is_sym(self, name=None):
        return self.kind == "sym" and (name is None or self.value == name)

    def __repr__(self):
        return f"Atom({self.kind}, {self.value!r})"


class SList(list):
    """A parenthesised list remembering where it opened."""

    def __init__(self, items=(), line=0, col=0):
        super().__init__(items)
        self.line = line
        self.col = col


def position(form):
    return form.line, form.col


def read_all(text):
    """Read every top-level form in ``text``."""
    forms = []
    stack = []
    i, n = 0, len(text)
    line, line_start = 1, 0
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            line_start = i + 1
            i += 1
        elif ch.isspace():
            i += 1
        elif ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch == "(":
            stack.append(SList(line=line, col=i - line_start + 1))
            i += 1
        elif ch == ")":
            if not stack:
                raise ParseError("unbalanced ')'", line, i - line_start + 1)
            done = stack.pop()
            (stack[-1] if stack else forms).append(done)
            i += 1
        elif ch == '"':
            col = i - line_start + 1
            i += 1
            buf = []
            while True:
                if i >= n:
                    raise ParseError("unterminated string", line, col)
                c = text[i]
                if c == "\n":
                    line += 1
                    line_start = i + 1
                if c == "\\":
                    if i + 1 < n and text[i + 1] in '"\\':
                        buf.append(text[i + 1])
                        i += 2
                        continue
                    raise ParseError("bad escape in string", line, i - line_start + 1)
                if c == '"':
                    i += 1
                    break
                buf.append(c)
                i += 1
            (stack[-1] if stack else forms).append(Atom("str", "".join(buf), line, col))
        else:
            col = i - line_start + 1
            j = i
            while j < n and text[j] not in _DELIMS:
                j += 1
            tok = text[i:j]
            i = j
            if _INT.match(tok):
                atom = Atom("int", int(tok), line, col)
            else:
                atom = Atom("sym", tok, line, col)
            (stack[-1] if stack else forms).append(atom)
    if stack:
        raise ParseError("unclosed '('", stack[-1].line, stack[-1].col)
    return forms


def read_one(text):
    forms = read_all(text)
    if not forms:
        raise ParseError("empty input", 1, 1)
    if len(forms) > 1:
        line, col = position(forms[1])
        raise ParseError("unexpected trailing input", line, col)
    return forms[0]


def quote_string(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
