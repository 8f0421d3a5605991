"""Running strategies over very deep terms.

Strategies recurse once per tree level, so deep terms need more stack than
the main thread has. ``run_deep`` executes a call on a worker thread with a
large stack and a raised recursion limit.
"""

import sys
import threading

STACK_BYTES = 1 << 30
RECURSION_LIMIT = 10**7


def run_deep(fn, *args, **kwargs):
    box = {}

    def target():
        try:
            box["value"] = fn(*args, **kwargs)
        except BaseException as exc:  # re-raised in the caller
            box["error"] = exc

    old_limit = sys.getrecursionlimit()
    old_size = threading.stack_size()
    sys.setrecursionlimit(max(old_limit, RECURSION_LIMIT))
    try:
        threading.stack_size(STACK_BYTES)
        worker = threading.Thread(target=target, name="termstrat-deep")
        worker.start()
    finally:
        threading.stack_size(old_size)
    worker.join()
    sys.setrecursionlimit(old_limit)
    if "error" in box:
        raise box["error"]
    return box["value"]
