"""Algebraic signatures: declared sorts and their constructors.

A signature file is a sequence of forms::

    (sort NAME)
    (con NAME RESULT (ARG ...))

Sorts may be referenced before they are declared; the whole file is
validated once all forms have been read.
"""

import re
from dataclasses import dataclass
from types import MappingProxyType

from .errors import ParseError, SignatureError, UnknownConstructor
from .sexpr import Atom, SList, read_all

INT, BOOL, STR, UNIT = "Int", "Bool", "Str", "Unit"
BUILTIN_SORTS = frozenset((INT, BOOL, STR, UNIT))
# literal spellings in the term syntax; never usable as constructor names
RESERVED_WORDS = frozenset(("true", "false", "unit"))

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_identifier(name):
    return isinstance(name, str) and _IDENT.match(name) is not None


@dataclass(frozen=True)
class ConstructorDecl:
    name: str
    result: str
    args: tuple = ()

    @property
    def arity(self):
        return len(self.args)


class Signature:
    """Immutable registry of sorts and constructors."""

    __slots__ = ("_sorts", "_constructors", "_by_sort")

    def __init__(self, sorts=(), constructors=()):
        sorts = frozenset(sorts)
        table = {}
        for sort in sorts:
            if not is_identifier(sort):
                raise SignatureError(f"invalid sort name {sort!r}", sort)
            if sort in BUILTIN_SORTS:
                raise SignatureError(f"cannot redeclare builtin sort {sort}", sort)
        for decl in constructors:
            if not is_identifier(decl.name) or decl.name in RESERVED_WORDS:
                raise SignatureError(f"invalid constructor name {decl.name!r}", decl.name)
            if decl.name in table:
                raise SignatureError(f"duplicate constructor {decl.name}", decl.name)
            if decl.result not in sorts:
                raise SignatureError(
                    f"constructor {decl.name} has undeclared result sort {decl.result}",
                    decl.result,
                )
            for arg in decl.args:
                if arg not in sorts and arg not in BUILTIN_SORTS:
                    raise SignatureError(
                        f"constructor {decl.name} references undeclared sort {arg}", arg
                    )
            table[decl.name] = decl
        by_sort = {s: [] for s in sorts}
        for decl in table.values():
            by_sort[decl.result].append(decl)
        object.__setattr__(self, "_sorts", sorts)
        object.__setattr__(self, "_constructors", MappingProxyType(table))
        object.__setattr__(
            self, "_by_sort", MappingProxyType({s: tuple(v) for s, v in by_sort.items()})
        )

    def __setattr__(self, name, value):
        raise AttributeError("Signature is immutable")

    @property
    def sorts(self):
        return self._sorts

    @property
    def constructors(self):
        return self._constructors

    def lookup(self, name):
        try:
            return self._constructors[name]
        except KeyError:
            raise UnknownConstructor(name) from None

    def constructors_of(self, sort):
        return self._by_sort.get(sort, ())

    def has_sort(self, sort):
        return sort in self._sorts or sort in BUILTIN_SORTS

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self._sorts == other._sorts and dict(self._constructors) == dict(
            other._constructors
        )

    def __hash__(self):
        return hash((self._sorts, frozenset(self._constructors.values())))

    def __repr__(self):
        return f"Signature(sorts={sorted(self._sorts)}, constructors={len(self._constructors)})"


def constructor_lookup(sig, name):
    return sig.lookup(name)


def _expect_name(form, what):
    if not isinstance(form, Atom) or not form.is_sym() or not is_identifier(form.value):
        line, col = form.line, form.col
        raise ParseError(f"expected {what} identifier", line, col)
    return form.value


def load_signature(text):
    """Parse and validate signature source text."""
    sorts = []
    seen_sorts = set()
    decls = []
    seen_cons = set()
    for form in read_all(text):
        if not isinstance(form, SList) or not form or not isinstance(form[0], Atom):
            raise ParseError("expected (sort ...) or (con ...)", form.line, form.col)
        head = form[0]
        if head.is_sym("sort"):
            if len(form) != 2:
                raise ParseError("(sort NAME) takes exactly one name", form.line, form.col)
            name = _expect_name(form[1], "sort")
            if name in BUILTIN_SORTS:
                raise SignatureError(f"cannot redeclare builtin sort {name}", name)
            if name in seen_sorts:
                raise SignatureError(f"duplicate sort {name}", name)
            seen_sorts.add(name)
            sorts.append(name)
        elif head.is_sym("con"):
            if len(form) != 4 or not isinstance(form[3], SList):
                raise ParseError("expected (con NAME RESULT (ARG ...))", form.line, form.col)
            name = _expect_name(form[1], "constructor")
            if name in RESERVED_WORDS:
                raise SignatureError(f"{name} is reserved and cannot name a constructor", name)
            if name in seen_cons:
                raise SignatureError(f"duplicate constructor {name}", name)
            seen_cons.add(name)
            result = _expect_name(form[2], "sort")
            args = tuple(_expect_name(a, "sort") for a in form[3])
            decls.append(ConstructorDecl(name, result, args))
        else:
            raise ParseError(f"unknown form {head.value!r}", head.line, head.col)
    for decl in decls:
        if decl.result in BUILTIN_SORTS:
            raise SignatureError(
                f"constructor {decl.name} cannot construct builtin sort {decl.result}",
                decl.result,
            )
        for s in (decl.result,) + decl.args:
            if s not in seen_sorts and s not in BUILTIN_SORTS:
                raise SignatureError(f"undeclared sort {s}", s)
    return Signature(sorts, decls)


def dump_signature(sig):
    """Render ``sig`` back into signature-file syntax."""
    lines = [f"(sort {s})" for s in sorted(sig.sorts)]
    for decl in sig.constructors.values():
        lines.append(f"(con {decl.name} {decl.result} ({' '.join(decl.args)}))")
    return "\n".join(lines) + "\n"
