"""Select the compiled kernels when available, else the pure-Python ones.

Set ``TERMSTRAT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("TERMSTRAT_PURE_PYTHON"):
    from . import _pykernels as impl
else:
    try:
        from . import _ckernels as impl
    except ImportError:
        from . import _pykernels as impl

COMPILED = impl.__name__.endswith("_ckernels")

preorder = impl.preorder
postorder = impl.postorder
node_count = impl.node_count
term_depth = impl.term_depth
terms_equal = impl.terms_equal
mismatch_index = impl.mismatch_index
render = impl.render
render_value = impl.render_value
prim_sort = impl.prim_sort
check_tree = impl.check_tree
