"""Pure-Python versions of the term kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same
name, signature and result. ``termstrat._kernels`` picks one at import.
All walks are iterative so arbitrarily deep terms are safe.
"""

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


def preorder(t):
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        out.append(node)
        kids = node.children
        if kids:
            stack.extend(reversed(kids))
    return out


def postorder(t):
    out = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.children:
            out.append(node)
        else:
            stack.append((node, True))
            for kid in reversed(node.children):
                stack.append((kid, False))
    return out


def node_count(t):
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(node.children)
    return n


def term_depth(t):
    best = 0
    stack = [(t, 1)]
    while stack:
        node, d = stack.pop()
        if d > best:
            best = d
        for kid in node.children:
            stack.append((kid, d + 1))
    return best


def terms_equal(a, b):
    if a is b:
        return True
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if x.con != y.con or x.sort != y.sort:
            return False
        if x.con is None:
            # bool is an int subclass; compare types too
            if type(x.value) is not type(y.value) or x.value != y.value:
                return False
            continue
        xs, ys = x.children, y.children
        if len(xs) != len(ys):
            return False
        stack.extend(zip(xs, ys))
    return True


def mismatch_index(arg_sorts, kids):
    """Index of the first child whose sort differs from its declared sort, else -1."""
    for i in range(len(kids)):
        if kids[i].sort != arg_sorts[i]:
            return i
    return -1


def _escape(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_value(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "unit"
    if type(v) is str:
        return _escape(v)
    return str(v)


def render(t):
    parts = []
    stack = [t]
    while stack:
        node = stack.pop()
        if type(node) is str:
            parts.append(node)
        elif node.con is None:
            parts.append(render_value(node.value))
        else:
            parts.append("(" + node.con)
            stack.append(")")
            for kid in reversed(node.children):
                stack.append(kid)
                stack.append(" ")
    return "".join(parts)


def prim_sort(v):
    """Builtin sort of a raw primitive value, or None if it is not one."""
    tv = type(v)
    if tv is bool:
        return "Bool"
    if tv is int:
        return "Int" if INT_MIN <= v <= INT_MAX else None
    if tv is str:
        return "Str"
    if v is None:
        return "Unit"
    return None


def _unwind(link):
    # paths are stored as (index, parent) links so pushing a child is O(1)
    out = []
    while link is not None:
        out.append(link[0])
        link = link[1]
    out.reverse()
    return out


def check_tree(constructors, root):
    """Check ``root`` against the constructor table.

    Nodes are either Term objects or raw forms: ``(name, [kids])`` tuples for
    constructor applications and plain ``int``/``bool``/``str``/``None`` for
    primitives. Returns ``None`` when well-sorted, otherwise a tuple
    ``(code, path, detail)`` where code is ``"unknown"``, ``"arity"``,
    ``"sort"`` or ``"decl"``.
    """
    stack = [(root, None, None)]
    while stack:
        node, expected, path = stack.pop()
        if type(node) is tuple:
            name, kids = node
            decl = constructors.get(name)
            if decl is None:
                return ("unknown", _unwind(path), name)
            got = decl.result
        elif hasattr(node, "children"):
            if node.con is None:
                got = prim_sort(node.value)
                if got is None or got != node.sort:
                    return ("sort", _unwind(path), (node.sort, repr(node.value)))
                kids = ()
                decl = None
            else:
                decl = constructors.get(node.con)
                if decl is None:
                    return ("unknown", _unwind(path), node.con)
                if decl is not node.decl and decl != node.decl:
                    return ("decl", _unwind(path), node.con)
                kids = node.children
                got = decl.result
        else:
            got = prim_sort(node)
            if got is None:
                return ("sort", _unwind(path), (expected, repr(node)))
            kids = ()
            decl = None
        if expected is not None and got != expected:
            return ("sort", _unwind(path), (expected, got))
        if decl is not None:
            if len(kids) != len(decl.args):
                return ("arity", _unwind(path), (decl.name, len(decl.args), len(kids)))
            for i in range(len(kids) - 1, -1, -1):
                stack.append((kids[i], decl.args[i], (i, path)))
    return None
