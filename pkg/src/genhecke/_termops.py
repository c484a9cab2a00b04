"""Pure-Python kernels for sparse exponent-dict arithmetic.

A term map sends an exponent tuple (one integer per parameter class) to
a nonzero integer coefficient.  These five functions are the inner loop
of every Laurent-polynomial computation in the package; a compiled twin
with the same signatures lives in ``_termops_cy`` and is preferred at
import time when it built successfully.
"""

BACKEND = "python"


def add_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def neg_terms(a):
    return {e: -c for e, c in a.items()}


def scale_terms(a, c):
    if not c:
        return {}
    return {e: c * v for e, v in a.items()}


def mul_terms(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(key, 0) + ca * cb
            if s:
                out[key] = s
            else:
                del out[key]
    return out
