"""Pure-Python arithmetic kernels over GF(p).

Coefficient vectors are plain lists of ints in [0, p), lowest degree first,
no trailing zeros; the zero polynomial is the empty list.  The compiled
backend (speedups.pyx) implements the same functions with identical
semantics; outputs must match bit for bit.
"""


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - db - 1, -1, -1):
        c = (r[k + db] * inv) % p
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
        else:
            r[k + db] = 0
    del r[db:]
    return q, _trim(r)


def poly_gcd(a, b, p):
    x, y = list(a), list(b)
    while y:
        x, y = y, poly_divmod(x, y, p)[1]
    if not x:
        raise ValueError("gcd(0, 0) is undefined")
    inv = pow(x[-1], p - 2, p)
    return [(c * inv) % p for c in x]


def _rref(m, ncols, p):
    """In-place reduced row echelon form; returns the pivot column list."""
    nrows = len(m)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        sel = -1
        for i in range(r, nrows):
            if m[i][col]:
                sel = i
                break
        if sel < 0:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][col], p - 2, p)
        row_r = m[r]
        for j in range(col, ncols):
            row_r[j] = (row_r[j] * inv) % p
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                row_i = m[i]
                for j in range(col, ncols):
                    row_i[j] = (row_i[j] - c * row_r[j]) % p
        pivots.append(col)
        r += 1
    return pivots


def nullspace(rows, ncols, p):
    """Echelonized right-kernel basis: the RREF basis of the kernel space.

    Canonical for the subspace (staircase shape, leading ones); empty list
    for full column rank.
    """
    m = [[x % p for x in row] for row in rows]
    pivots = _rref(m, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][free]) % p
        basis.append(v)
    _rref(basis, ncols, p)
    return basis


def norm_table(base, step, post, bound, p, width, length):
    """Pack (base - c*step)^2 * post for every c with deg c <= bound.

    Rows are byte strings of `length` coefficients, highest degree first,
    `width` bytes per coefficient big-endian, in odometer order over the
    coefficient vectors of c.  Used by the brute-force minimum oracle.
    """
    count = p ** (bound + 1)
    pad = length + len(step) + bound + 4
    cs = [0] * pad  # running c*step
    digits = [0] * (bound + 2)
    rows = []
    for n in range(count):
        diff = [(x - y) % p for x, y in zip(base, cs)]
        if len(base) < pad:
            diff.extend((-y) % p for y in cs[len(base):])
        _trim(diff)
        sq = poly_mul(diff, diff, p)
        row = poly_mul(sq, post, p)
        buf = bytearray(width * length)
        for i, c in enumerate(row):
            if c:
                off = (length - 1 - i) * width
                buf[off:off + width] = c.to_bytes(width, "big")
        rows.append(bytes(buf))
        if n + 1 == count:
            break
        # advance odometer; every digit bump adds X^j * step to c*step
        j = 0
        while digits[j] == p - 1:
            digits[j] = 0
            for k, s in enumerate(step):
                cs[j + k] = (cs[j + k] + s) % p
            j += 1
        digits[j] += 1
        for k, s in enumerate(step):
            cs[j + k] = (cs[j + k] + s) % p
    return rows
