# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels; a drop-in twin of ``_pykernels``."""

cdef object INT_MIN = -(2**63)
cdef object INT_MAX = 2**63 - 1


cpdef list preorder(object t):
    cdef list out = []
    cdef list stack = [t]
    cdef object node
    cdef tuple kids
    cdef Py_ssize_t i
    while stack:
        node = stack.pop()
        out.append(node)
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append(kids[i])
    return out


cpdef list postorder(object t):
    cdef list out = []
    cdef list nodes = [t]
    cdef list flags = [False]
    cdef object node
    cdef bint expanded
    cdef tuple kids
    cdef Py_ssize_t i
    while nodes:
        node = nodes.pop()
        expanded = flags.pop()
        kids = node.children
        if expanded or not kids:
            out.append(node)
        else:
            nodes.append(node)
            flags.append(True)
            for i in range(len(kids) - 1, -1, -1):
                nodes.append(kids[i])
                flags.append(False)
    return out


cpdef Py_ssize_t node_count(object t):
    cdef Py_ssize_t n = 0
    cdef list stack = [t]
    cdef object node
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(<tuple>node.children)
    return n


cpdef Py_ssize_t term_depth(object t):
    cdef Py_ssize_t best = 0, d
    cdef list nodes = [t]
    cdef list depths = [1]
    cdef object node, kid
    while nodes:
        node = nodes.pop()
        d = depths.pop()
        if d > best:
            best = d
        for kid in <tuple>node.children:
            nodes.append(kid)
            depths.append(d + 1)
    return best


cpdef bint terms_equal(object a, object b):
    if a is b:
        return True
    cdef list xs_stack = [a]
    cdef list ys_stack = [b]
    cdef object x, y, xcon
    cdef tuple xs, ys
    cdef Py_ssize_t i, n
    while xs_stack:
        x = xs_stack.pop()
        y = ys_stack.pop()
        if x is y:
            continue
        xcon = x.con
        if xcon != y.con or x.sort != y.sort:
            return False
        if xcon is None:
            if type(x.value) is not type(y.value) or x.value != y.value:
                return False
            continue
        xs = x.children
        ys = y.children
        n = len(xs)
        if n != len(ys):
            return False
        for i in range(n):
            xs_stack.append(xs[i])
            ys_stack.append(ys[i])
    return True


cpdef Py_ssize_t mismatch_index(tuple arg_sorts, object kids):
    cdef Py_ssize_t i
    cdef Py_ssize_t n = len(kids)
    for i in range(n):
        if kids[i].sort != arg_sorts[i]:
            return i
    return -1


cdef str _escape(str s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


cpdef str render_value(object v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "unit"
    if type(v) is str:
        return _escape(v)
    return str(v)


cpdef str render(object t):
    cdef list parts = []
    cdef list stack = [t]
    cdef object node
    cdef tuple kids
    cdef Py_ssize_t i
    while stack:
        node = stack.pop()
        if type(node) is str:
            parts.append(node)
        elif node.con is None:
            parts.append(render_value(node.value))
        else:
            parts.append("(" + node.con)
            stack.append(")")
            kids = node.children
            for i in range(len(kids) - 1, -1, -1):
                stack.append(kids[i])
                stack.append(" ")
    return "".join(parts)


cpdef object prim_sort(object v):
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


cdef list _unwind(object link):
    cdef list out = []
    while link is not None:
        out.append(link[0])
        link = link[1]
    out.reverse()
    return out


cpdef object check_tree(object constructors, object root):
    cdef list stack = [(root, None, None)]
    cdef object node, expected, decl, got, kids, name
    cdef object path
    cdef Py_ssize_t i
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
