# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels over GF(p).

Same functions and semantics as ffmin._core.pure; coefficients are ints in
[0, p) with p < 2^31, so products fit in 64 bits.
"""

from cpython cimport array

import array

cdef array.array _LL_TEMPLATE = array.array("q", [])


cdef long long _modpow(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef list _trim(list c):
    while c and c[len(c) - 1] == 0:
        c.pop()
    return c


def poly_add(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), n = max(la, lb), i
    cdef list out = [0] * n
    for i in range(la):
        out[i] = a[i]
    for i in range(lb):
        out[i] = (out[i] + b[i]) % p
    return _trim(out)


def poly_sub(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), n = max(la, lb), i
    cdef list out = [0] * n
    for i in range(la):
        out[i] = a[i]
    for i in range(lb):
        out[i] = (out[i] - b[i]) % p
        if out[i] < 0:
            out[i] += p
    return _trim(out)


def poly_mul(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef array.array aa = array.array("q", a)
    cdef array.array bb = array.array("q", b)
    cdef array.array oo = array.clone(_LL_TEMPLATE, la + lb - 1, zero=True)
    cdef long long[::1] av = aa, bv = bb, ov = oo
    cdef long long ai
    for i in range(la):
        ai = av[i]
        if ai:
            for j in range(lb):
                ov[i + j] = (ov[i + j] + ai * bv[j]) % p
    return _trim(oo.tolist())


def poly_divmod(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), db, k, j
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = lb - 1
    cdef array.array rr = array.array("q", a) if la else array.clone(_LL_TEMPLATE, 0, zero=True)
    if la - 1 < db:
        return [], _trim(rr.tolist())
    cdef array.array bb = array.array("q", b)
    cdef array.array qq = array.clone(_LL_TEMPLATE, la - db, zero=True)
    cdef long long[::1] rv = rr, bv = bb, qv = qq
    cdef long long inv = _modpow(bv[db], p - 2, p), c
    for k in range(la - db - 1, -1, -1):
        c = (rv[k + db] * inv) % p
        if c:
            qv[k] = c
            for j in range(db + 1):
                rv[k + j] = (rv[k + j] - c * bv[j]) % p
                if rv[k + j] < 0:
                    rv[k + j] += p
        else:
            rv[k + db] = 0
    rem = rr.tolist()[:db]
    return qq.tolist(), _trim(rem)


def poly_gcd(a, b, long long p):
    cdef list x = list(a), y = list(b)
    cdef long long inv
    while y:
        x, y = y, poly_divmod(x, y, p)[1]
    if not x:
        raise ValueError("gcd(0, 0) is undefined")
    inv = _modpow(x[len(x) - 1], p - 2, p)
    return [(c * inv) % p for c in x]


cdef list _rref_flat(long long[::1] m, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    """In-place reduced row echelon form on a flat buffer; returns pivots."""
    cdef list pivots = []
    cdef Py_ssize_t r = 0, col, sel, i, j
    cdef long long v, inv, c
    for col in range(ncols):
        if r == nrows:
            break
        sel = -1
        for i in range(r, nrows):
            if m[i * ncols + col]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(ncols):
                v = m[r * ncols + j]
                m[r * ncols + j] = m[sel * ncols + j]
                m[sel * ncols + j] = v
        inv = _modpow(m[r * ncols + col], p - 2, p)
        for j in range(col, ncols):
            m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i != r and m[i * ncols + col]:
                c = m[i * ncols + col]
                for j in range(col, ncols):
                    m[i * ncols + j] = (m[i * ncols + j] - c * m[r * ncols + j]) % p
                    if m[i * ncols + j] < 0:
                        m[i * ncols + j] += p
        pivots.append(col)
        r += 1
    return pivots


def nullspace(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows), i, j
    cdef array.array mm = array.clone(_LL_TEMPLATE, nrows * ncols if nrows * ncols else 1, zero=True)
    cdef long long[::1] m = mm
    cdef long long v
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            v = row[j] % p
            if v < 0:
                v += p
            m[i * ncols + j] = v
    cdef list pivots = _rref_flat(m, nrows, ncols, p)
    cdef set pivot_set = set(pivots)
    cdef Py_ssize_t nfree = ncols - len(pivots)
    if nfree == 0:
        return []
    cdef array.array bb = array.clone(_LL_TEMPLATE, nfree * ncols, zero=True)
    cdef long long[::1] b = bb
    cdef Py_ssize_t free, k = 0
    for free in range(ncols):
        if free in pivot_set:
            continue
        b[k * ncols + free] = 1
        for i in range(len(pivots)):
            b[k * ncols + <Py_ssize_t> pivots[i]] = (p - m[i * ncols + free]) % p
        k += 1
    _rref_flat(b, nfree, ncols, p)
    cdef list basis = []
    for i in range(nfree):
        basis.append([b[i * ncols + j] for j in range(ncols)])
    return basis


def norm_table(base, step, post, long long bound, long long p, int width,
               Py_ssize_t length):
    cdef Py_ssize_t lb = len(base), ls = len(step), lpost = len(post)
    cdef Py_ssize_t pad = length + ls + bound + 4
    cdef Py_ssize_t sqlen = 2 * pad, rowlen = 2 * pad + lpost + 1
    cdef array.array cs_a = array.clone(_LL_TEMPLATE, pad, zero=True)
    cdef array.array diff_a = array.clone(_LL_TEMPLATE, pad, zero=True)
    cdef array.array sq_a = array.clone(_LL_TEMPLATE, sqlen, zero=True)
    cdef array.array row_a = array.clone(_LL_TEMPLATE, rowlen, zero=True)
    cdef array.array base_a = array.clone(_LL_TEMPLATE, pad, zero=True)
    cdef array.array step_a = array.array("q", step) if ls else array.clone(_LL_TEMPLATE, 1, zero=True)
    cdef array.array post_a = array.array("q", post) if lpost else array.clone(_LL_TEMPLATE, 1, zero=True)
    cdef array.array digits_a = array.clone(_LL_TEMPLATE, bound + 2, zero=True)
    cdef long long[::1] cs = cs_a, diff = diff_a, sq = sq_a, row = row_a
    cdef long long[::1] bv = base_a, sv = step_a, pv = post_a, digits = digits_a
    cdef Py_ssize_t i, j, k, ld, lsq, lrow, off
    cdef long long n, count = 1, c, x
    cdef bytearray buf
    for i in range(bound + 1):
        count *= p
    for i in range(lb):
        bv[i] = base[i]
    rows = []
    for n in range(count):
        ld = 0
        for i in range(pad):
            x = bv[i] - cs[i]
            if x < 0:
                x += p
            diff[i] = x
            if x:
                ld = i + 1
        # square
        lsq = 2 * ld - 1 if ld else 0
        for i in range(lsq):
            sq[i] = 0
        for i in range(ld):
            x = diff[i]
            if x:
                for j in range(ld):
                    sq[i + j] = (sq[i + j] + x * diff[j]) % p
        # multiply by post
        lrow = lsq + lpost - 1 if (lsq and lpost) else 0
        for i in range(lrow):
            row[i] = 0
        for i in range(lsq):
            x = sq[i]
            if x:
                for j in range(lpost):
                    row[i + j] = (row[i + j] + x * pv[j]) % p
        buf = bytearray(width * length)
        for i in range(lrow):
            c = row[i]
            if c:
                off = (length - 1 - i) * width
                for k in range(width - 1, -1, -1):
                    buf[off + k] = c & 0xFF
                    c >>= 8
        rows.append(bytes(buf))
        if n + 1 == count:
            break
        j = 0
        while digits[j] == p - 1:
            digits[j] = 0
            for k in range(ls):
                cs[j + k] = (cs[j + k] + sv[k]) % p
            j += 1
        digits[j] += 1
        for k in range(ls):
            cs[j + k] = (cs[j + k] + sv[k]) % p
    return rows
