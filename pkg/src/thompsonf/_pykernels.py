"""Pure-Python kernels for piecewise-linear maps with power-of-two slopes.

An element is passed around in raw form: ``pts`` is a tuple of
``(xn, xe, yn, ye)`` breakpoints meaning ``(xn/2**xe, yn/2**ye)``, each
coordinate canonical, and ``slopes`` holds the base-2 logarithm of the slope
of every segment (``len(slopes) == len(pts) - 1``).  The compiled twin in
``_ckernels.pyx`` implements the same functions with the same signatures.
"""


def norm(n, e):
    if n == 0:
        return 0, 0
    if e > 0:
        tz = (n & -n).bit_length() - 1
        if tz:
            if tz > e:
                tz = e
            n >>= tz
            e -= tz
    return n, e


def cmp(an, ae, bn, be):
    if ae >= be:
        bn <<= ae - be
    else:
        an <<= be - ae
    return (an > bn) - (an < bn)


def affine(bn, be, xn, xe, x0n, x0e, s):
    """Return ``b + (x - x0) * 2**s`` as a canonical pair."""
    # d = x - x0
    if xe >= x0e:
        dn, de = xn - (x0n << (xe - x0e)), xe
    else:
        dn, de = (xn << (x0e - xe)) - x0n, x0e
    # d * 2**s
    de -= s
    if de < 0:
        dn <<= -de
        de = 0
    if de >= be:
        n, e = (bn << (de - be)) + dn, de
    else:
        n, e = bn + (dn << (be - de)), be
    return norm(n, e)


def _locate(pts, n, e, col):
    # index i of the segment [pts[i], pts[i+1]] containing the coordinate
    lo, hi = 0, len(pts) - 2
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        p = pts[mid]
        if cmp(p[col], p[col + 1], n, e) <= 0:
            lo = mid
        else:
            hi = mid - 1
    return lo


def evaluate(pts, slopes, n, e):
    i = _locate(pts, n, e, 0)
    p = pts[i]
    return affine(p[2], p[3], n, e, p[0], p[1], slopes[i])


def preimage(pts, slopes, n, e):
    i = _locate(pts, n, e, 2)
    p = pts[i]
    return affine(p[0], p[1], n, e, p[2], p[3], -slopes[i])


def compose(fpts, fsl, gpts, gsl):
    """Raw form of ``x -> f(g(x))``, with collinear breakpoints merged."""
    out = [(0, 0, 0, 0)]
    osl = []
    ng = len(gsl)
    nf = len(fsl)
    i = j = 0
    while i < ng:
        g0 = gpts[i]
        g1 = gpts[i + 1]
        f0 = fpts[j]
        f1 = fpts[j + 1]
        sg = gsl[i]
        sf = fsl[j]
        c = cmp(g1[2], g1[3], f1[0], f1[1])
        if c <= 0:
            xn, xe = g1[0], g1[1]
            if c == 0:
                zn, ze = f1[2], f1[3]
            else:
                zn, ze = affine(f0[2], f0[3], g1[2], g1[3], f0[0], f0[1], sf)
        else:
            xn, xe = affine(g0[0], g0[1], f1[0], f1[1], g0[2], g0[3], -sg)
            zn, ze = f1[2], f1[3]
        s = sg + sf
        if osl and osl[-1] == s:
            out[-1] = (xn, xe, zn, ze)
        else:
            osl.append(s)
            out.append((xn, xe, zn, ze))
        if c <= 0:
            i += 1
        if c >= 0 and j < nf - 1:
            j += 1
    return tuple(out), tuple(osl)


def inverse(pts, slopes):
    return (tuple((p[2], p[3], p[0], p[1]) for p in pts),
            tuple(-s for s in slopes))


def act(chain, n, e):
    """Push a point through a sequence of ``(pts, slopes, sign)`` maps.

    The chain is applied in order; ``sign < 0`` applies the inverse map.
    """
    for pts, slopes, sign in chain:
        if sign > 0:
            n, e = evaluate(pts, slopes, n, e)
        else:
            n, e = preimage(pts, slopes, n, e)
    return n, e
