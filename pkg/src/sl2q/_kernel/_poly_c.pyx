# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: integer convolution reduced modulo a cyclotomic
polynomial.  Same contract as poly.mul_reduce.

Fast path works on int64.  An a-priori bound on every intermediate value
(computed in exact Python arithmetic from max coefficient magnitudes)
decides whether int64 is safe; if not, the object-mode loop below runs
the identical algorithm on Python bigints.
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free

IMPLEMENTATION = "c"

# Anything bounded by 2^62 leaves headroom under the int64 limit.
_SAFE = 1 << 62


def mul_reduce(xs, ys, high_rows, rows_max):
    cdef Py_ssize_t phi = len(xs)
    cdef Py_ssize_t i, j, k, t
    cdef int64_t xi, ck, rt
    cdef int64_t *cx
    cdef int64_t *cy
    cdef int64_t *conv
    cdef int64_t *out

    if phi == 1:
        return [xs[0] * ys[0]]

    mx = max(abs(v) for v in xs) if xs else 0
    my = max(abs(v) for v in ys) if ys else 0
    # |conv[k]| <= phi*mx*my; reduction adds at most (phi-1)*|conv|*rows_max.
    bound = phi * mx * my * (1 + (phi - 1) * max(rows_max, 1))
    if bound >= _SAFE:
        return _mul_reduce_obj(xs, ys, high_rows)

    cx = <int64_t *> calloc(phi, sizeof(int64_t))
    cy = <int64_t *> calloc(phi, sizeof(int64_t))
    conv = <int64_t *> calloc(2 * phi - 1, sizeof(int64_t))
    out = <int64_t *> calloc(phi, sizeof(int64_t))
    if cx == NULL or cy == NULL or conv == NULL or out == NULL:
        free(cx); free(cy); free(conv); free(out)
        raise MemoryError()
    try:
        for i in range(phi):
            cx[i] = xs[i]
            cy[i] = ys[i]
        for i in range(phi):
            xi = cx[i]
            if xi != 0:
                for j in range(phi):
                    if cy[j] != 0:
                        conv[i + j] += xi * cy[j]
        for t in range(phi):
            out[t] = conv[t]
        for k in range(phi, 2 * phi - 1):
            ck = conv[k]
            if ck != 0:
                row = high_rows[k - phi]
                for t in range(phi):
                    rt = row[t]
                    if rt != 0:
                        out[t] += ck * rt
        return [out[t] for t in range(phi)]
    finally:
        free(cx); free(cy); free(conv); free(out)


def _mul_reduce_obj(xs, ys, high_rows):
    """Bigint fallback, identical to the pure twin."""
    cdef Py_ssize_t phi = len(xs)
    cdef Py_ssize_t i, j, k, t
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        xi = xs[i]
        if xi:
            for j in range(phi):
                yj = ys[j]
                if yj:
                    conv[i + j] = conv[i + j] + xi * yj
    out = conv[:phi]
    for k in range(phi, 2 * phi - 1):
        ck = conv[k]
        if ck:
            row = high_rows[k - phi]
            for t in range(phi):
                rt = row[t]
                if rt:
                    out[t] = out[t] + ck * rt
    return out
