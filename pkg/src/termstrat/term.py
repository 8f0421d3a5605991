"""Universal immutable terms over a signature.

A term is either a primitive leaf (``Prim``) carrying an ``int``, ``bool``,
``str`` or ``None`` (unit), or a constructor application (``App``) with an
ordered tuple of children. Every node caches its sort. Construction goes
through sort checks, so an ill-sorted ``Term`` never exists.

Term syntax::

    term := INT | 'true' | 'false' | 'unit' | STRING | CON | '(' CON term* ')'
"""

from . import _kernels
from .errors import (
    ArityMismatch,
    ParseError,
    SortError,
    SortMismatch,
    UnknownConstructor,
)
from .sexpr import Atom, read_one
from .signature import RESERVED_WORDS, is_identifier


class Term:
    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return _kernels.terms_equal(self, other)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __repr__(self):
        return f"{type(self).__name__}<{_kernels.render(self)}>"

    def __str__(self):
        return _kernels.render(self)


class Prim(Term):
    """Primitive leaf of one of the builtin sorts."""

    __slots__ = ("value", "sort")
    con = None
    decl = None
    children = ()

    def __init__(self, value):
        sort = _kernels.prim_sort(value)
        if sort is None:
            raise SortMismatch("Int|Bool|Str|Unit", repr(value))
        _prim_value(self, value)
        _prim_sort(self, sort)


class App(Term):
    """Constructor application; ``children`` follow the declared argument order."""

    __slots__ = ("con", "decl", "children", "sort")

    def __init__(self, decl, children=()):
        kids = tuple(children)
        _check_children(decl, kids)
        _init_app(self, decl, kids)


_prim_value = Prim.value.__set__
_prim_sort = Prim.sort.__set__
_app_con = App.con.__set__
_app_decl = App.decl.__set__
_app_children = App.children.__set__
_app_sort = App.sort.__set__


def _init_app(node, decl, kids):
    _app_con(node, decl.name)
    _app_decl(node, decl)
    _app_children(node, kids)
    _app_sort(node, decl.result)


def _new_app(decl, kids):
    # caller has already verified kids against decl
    node = object.__new__(App)
    _init_app(node, decl, kids)
    return node


def _check_children(decl, kids):
    if len(kids) != len(decl.args):
        raise ArityMismatch(decl.name, len(decl.args), len(kids))
    for kid in kids:
        if not isinstance(kid, Term):
            raise TypeError(f"child of {decl.name} is not a Term: {kid!r}")
    i = _kernels.mismatch_index(decl.args, kids)
    if i >= 0:
        raise SortMismatch(decl.args[i], kids[i].sort, path=[i], index=i)


def make_app(sig, name, children=()):
    """Build ``(name children...)`` checked against ``sig``."""
    return App(sig.lookup(name), children)


def rebuild(t, kids):
    """Same constructor as ``t`` with new children; the only gate for new nodes."""
    kids = tuple(kids)
    if t.con is None:
        if kids:
            raise ArityMismatch(repr(t.value), 0, len(kids))
        return t
    decl = t.decl
    if len(kids) != len(decl.args):
        raise ArityMismatch(decl.name, len(decl.args), len(kids))
    i = _kernels.mismatch_index(decl.args, kids)
    if i >= 0:
        raise SortMismatch(decl.args[i], kids[i].sort, path=[i], index=i)
    return _new_app(decl, kids)


def children(t):
    return list(t.children)


def sort_of(t):
    return t.sort


def print_term(t):
    return _kernels.render(t)


def preorder(t):
    return _kernels.preorder(t)


def postorder(t):
    return _kernels.postorder(t)


def node_count(t):
    return _kernels.node_count(t)


def term_depth(t):
    return _kernels.term_depth(t)


def check_term(sig, t):
    """Raise the first well-sortedness error in ``t`` (preorder), else return True.

    ``t`` may be a ``Term`` or a raw tree of ``(name, [kids])`` tuples and
    primitive Python values.
    """
    problem = _kernels.check_tree(sig.constructors, t)
    if problem is None:
        return True
    code, path, detail = problem
    if code == "unknown":
        raise UnknownConstructor(detail, path)
    if code == "arity":
        con, expected, got = detail
        raise ArityMismatch(con, expected, got, path)
    if code == "sort":
        expected, got = detail
        raise SortMismatch(expected, got, path, index=path[-1] if path else None)
    raise SortError(f"constructor {detail} does not match its declaration", path)


def is_well_sorted(sig, t):
    return _kernels.check_tree(sig.constructors, t) is None


def _atom_to_raw(atom):
    if atom.kind == "int":
        return atom.value
    if atom.kind == "str":
        return atom.value
    name = atom.value
    if name == "true":
        return True
    if name == "false":
        return False
    if name == "unit":
        return None
    if not is_identifier(name):
        raise ParseError(f"unexpected token {name!r}", atom.line, atom.col)
    return (name, [])


def form_to_raw(form):
    """Convert an s-expression into the raw tree accepted by ``check_term``."""
    if isinstance(form, Atom):
        return _atom_to_raw(form)
    root = []
    # (form, output list) pairs; iterative to allow very deep input
    stack = [(form, root)]
    while stack:
        f, out = stack.pop()
        if isinstance(f, Atom):
            out.append(_atom_to_raw(f))
            continue
        if not f:
            raise ParseError("empty application", f.line, f.col)
        head = f[0]
        if not isinstance(head, Atom) or head.kind != "sym" or not is_identifier(head.value) \
                or head.value in RESERVED_WORDS:
            raise ParseError("expected constructor name", head.line, head.col)
        kids = []
        out.append((head.value, kids))
        for sub in reversed(f[1:]):
            stack.append((sub, kids))
    return root[0]


def from_raw(sig, raw):
    """Build a Term from a raw tree, checking it first."""
    check_term(sig, raw)
    return _build_checked(sig, raw)


def _build_checked(sig, raw):
    if type(raw) is not tuple:
        return Prim(raw)
    done = []
    stack = [(raw, False)]
    while stack:
        node, expanded = stack.pop()
        if type(node) is not tuple:
            done.append(Prim(node))
        elif expanded:
            name, kids = node
            n = len(kids)
            built = tuple(done[len(done) - n:]) if n else ()
            if n:
                del done[len(done) - n:]
            done.append(_new_app(sig.constructors[name], built))
        else:
            stack.append((node, True))
            for kid in reversed(node[1]):
                stack.append((kid, False))
    return done[0]


def parse_term(text, sig):
    """Parse a term in s-expression syntax and check it against ``sig``."""
    return from_raw(sig, form_to_raw(read_one(text)))


def format_value(v):
    """Render a strategy result: a Term, a primitive, or a list of results."""
    if isinstance(v, Term):
        return _kernels.render(v)
    if isinstance(v, (tuple, list)):
        return "[" + ",".join(format_value(x) for x in v) + "]"
    return _kernels.render_value(v)
