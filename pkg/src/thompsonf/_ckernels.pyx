# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for piecewise-linear maps with power-of-two slopes.

Same raw formats and signatures as ``_pykernels``; numerators stay Python
integers (arbitrary precision), exponents and slopes are C integers.
"""


cdef inline object _norm(object n, long long e, long long* eout):
    cdef long long tz
    if n == 0:
        eout[0] = 0
        return 0
    if e > 0:
        tz = (n & -n).bit_length() - 1
        if tz:
            if tz > e:
                tz = e
            n = n >> tz
            e -= tz
    eout[0] = e
    return n


cdef inline int _cmp(object an, long long ae, object bn, long long be):
    if ae >= be:
        if ae != be:
            bn = bn << (ae - be)
    else:
        an = an << (be - ae)
    if an > bn:
        return 1
    if an < bn:
        return -1
    return 0


cdef inline object _affine(object bn, long long be, object xn, long long xe,
                           object x0n, long long x0e, long long s, long long* eout):
    cdef object dn, n
    cdef long long de, e
    if xe >= x0e:
        dn = xn - (x0n << (xe - x0e))
        de = xe
    else:
        dn = (xn << (x0e - xe)) - x0n
        de = x0e
    de -= s
    if de < 0:
        dn = dn << (-de)
        de = 0
    if de >= be:
        n = (bn << (de - be)) + dn
        e = de
    else:
        n = bn + (dn << (be - de))
        e = be
    return _norm(n, e, eout)


def norm(n, long long e):
    cdef long long eo
    r = _norm(n, e, &eo)
    return r, eo


def cmp(an, long long ae, bn, long long be):
    return _cmp(an, ae, bn, be)


def affine(bn, long long be, xn, long long xe, x0n, long long x0e, long long s):
    cdef long long eo
    r = _affine(bn, be, xn, xe, x0n, x0e, s, &eo)
    return r, eo


cdef Py_ssize_t _locate(tuple pts, object n, long long e, int col):
    cdef Py_ssize_t lo = 0, hi = len(pts) - 2, mid
    cdef tuple p
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        p = <tuple>pts[mid]
        if _cmp(p[col], <long long>p[col + 1], n, e) <= 0:
            lo = mid
        else:
            hi = mid - 1
    return lo


cdef inline object _evaluate(tuple pts, tuple slopes, object n, long long e, long long* eout):
    cdef Py_ssize_t i = _locate(pts, n, e, 0)
    cdef tuple p = <tuple>pts[i]
    return _affine(p[2], <long long>p[3], n, e, p[0], <long long>p[1],
                   <long long>slopes[i], eout)


cdef inline object _preimage(tuple pts, tuple slopes, object n, long long e, long long* eout):
    cdef Py_ssize_t i = _locate(pts, n, e, 2)
    cdef tuple p = <tuple>pts[i]
    return _affine(p[0], <long long>p[1], n, e, p[2], <long long>p[3],
                   -(<long long>slopes[i]), eout)


def evaluate(tuple pts, tuple slopes, n, long long e):
    cdef long long eo
    r = _evaluate(pts, slopes, n, e, &eo)
    return r, eo


def preimage(tuple pts, tuple slopes, n, long long e):
    cdef long long eo
    r = _preimage(pts, slopes, n, e, &eo)
    return r, eo


def compose(tuple fpts, tuple fsl, tuple gpts, tuple gsl):
    cdef list out = [(0, 0, 0, 0)]
    cdef list osl = []
    cdef Py_ssize_t ng = len(gsl), nf = len(fsl), i = 0, j = 0
    cdef tuple g0, g1, f0, f1
    cdef long long sg, sf, s, xe, ze, last = 0
    cdef int c
    cdef bint have_last = False
    cdef object xn, zn
    while i < ng:
        g0 = <tuple>gpts[i]
        g1 = <tuple>gpts[i + 1]
        f0 = <tuple>fpts[j]
        f1 = <tuple>fpts[j + 1]
        sg = gsl[i]
        sf = fsl[j]
        c = _cmp(g1[2], <long long>g1[3], f1[0], <long long>f1[1])
        if c <= 0:
            xn = g1[0]
            xe = g1[1]
            if c == 0:
                zn = f1[2]
                ze = f1[3]
            else:
                zn = _affine(f0[2], <long long>f0[3], g1[2], <long long>g1[3],
                             f0[0], <long long>f0[1], sf, &ze)
        else:
            xn = _affine(g0[0], <long long>g0[1], f1[0], <long long>f1[1],
                         g0[2], <long long>g0[3], -sg, &xe)
            zn = f1[2]
            ze = f1[3]
        s = sg + sf
        if have_last and last == s:
            out[len(out) - 1] = (xn, xe, zn, ze)
        else:
            osl.append(s)
            out.append((xn, xe, zn, ze))
            last = s
            have_last = True
        if c <= 0:
            i += 1
        if c >= 0 and j < nf - 1:
            j += 1
    return tuple(out), tuple(osl)


def inverse(tuple pts, tuple slopes):
    return (tuple([(p[2], p[3], p[0], p[1]) for p in pts]),
            tuple([-s for s in slopes]))


def act(chain, n, long long e):
    cdef long long eo
    cdef tuple pts, slopes
    cdef long sign
    for pts, slopes, sign in chain:
        if sign > 0:
            n = _evaluate(pts, slopes, n, e, &eo)
        else:
            n = _preimage(pts, slopes, n, e, &eo)
        e = eo
    return n, e
