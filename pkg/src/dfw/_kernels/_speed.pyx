# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer-matrix kernels.

Mirrors dfw._kernels.pure function for function.  Entries stay Python ints
(arbitrary precision is mandatory); the win over the pure backend is the
compiled loop and list bookkeeping around them.
"""

BACKEND_NAME = "cython"


cdef tuple _xgcd(object a, object b):
    cdef object x = 1, next_x = 0, y = 0, next_y = 1, g = a, next_g = b, q
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def xgcd(a, b):
    return _xgcd(a, b)


def mat_mul(list a, list b, Py_ssize_t n, Py_ssize_t m, Py_ssize_t k):
    cdef list out = [], ai, bt, row
    cdef Py_ssize_t i, t, j
    cdef object v, w
    for i in range(n):
        ai = a[i]
        row = [0] * k
        for t in range(m):
            v = ai[t]
            if v:
                bt = b[t]
                for j in range(k):
                    w = bt[j]
                    if w:
                        row[j] = row[j] + v * w
        out.append(row)
    return out


def hermite_cols(list a, Py_ssize_t rows, Py_ssize_t cols):
    cdef list h = [], v = [], col, pivot_rows = []
    cdef list hp, vp, hj, vj
    cdef Py_ssize_t row, i, j, piv, j0
    cdef object e, best, p, q
    cdef bint placed, clean
    for j in range(cols):
        col = []
        for i in range(rows):
            col.append(a[i][j])
        h.append(col)
    for j in range(cols):
        col = [0] * cols
        col[j] = 1
        v.append(col)
    piv = 0
    for row in range(rows):
        if piv == cols:
            break
        placed = False
        while True:
            j0 = -1
            best = -1
            for j in range(piv, cols):
                e = (<list>h[j])[row]
                if e:
                    if e < 0:
                        e = -e
                    if best < 0 or e < best:
                        best = e
                        j0 = j
                        if best == 1:
                            break
            if j0 < 0:
                break
            if j0 != piv:
                h[piv], h[j0] = h[j0], h[piv]
                v[piv], v[j0] = v[j0], v[piv]
            hp = h[piv]
            vp = v[piv]
            if hp[row] < 0:
                for i in range(row, rows):
                    hp[i] = -hp[i]
                for i in range(cols):
                    vp[i] = -vp[i]
            p = hp[row]
            clean = True
            for j in range(piv + 1, cols):
                hj = h[j]
                e = hj[row]
                if e:
                    q = e // p
                    if q:
                        for i in range(row, rows):
                            hj[i] = hj[i] - q * hp[i]
                        vj = v[j]
                        for i in range(cols):
                            vj[i] = vj[i] - q * vp[i]
                    if hj[row]:
                        clean = False
            if clean:
                placed = True
                break
        if placed:
            hp = h[piv]
            vp = v[piv]
            p = hp[row]
            for j in range(piv):
                hj = h[j]
                q = hj[row] // p
                if q:
                    for i in range(row, rows):
                        hj[i] = hj[i] - q * hp[i]
                    vj = v[j]
                    for i in range(cols):
                        vj[i] = vj[i] - q * vp[i]
            pivot_rows.append(row)
            piv += 1
    return h, v, pivot_rows


def smith(list a, Py_ssize_t rows, Py_ssize_t cols, bint transforms):
    cdef list d = [], l = None, r = None
    cdef list di, dt, li, lt, ri, rj, rt, lj
    cdef Py_ssize_t nmin, t, i, j, pi, pj, k2, i2, jj
    cdef object e, best, p, q, x, y, g, me, mp, aa, bb
    cdef bint dirty
    for i in range(rows):
        d.append(list(a[i]))
    if transforms:
        l = []
        for i in range(rows):
            li = [0] * rows
            li[i] = 1
            l.append(li)
        r = []
        for j in range(cols):
            rj = [0] * cols
            rj[j] = 1
            r.append(rj)
    nmin = rows if rows < cols else cols
    t = 0
    while t < nmin:
        pi = -1
        pj = -1
        best = -1
        for i in range(t, rows):
            di = d[i]
            for j in range(t, cols):
                e = di[j]
                if e:
                    if e < 0:
                        e = -e
                    if best < 0 or e < best:
                        best = e
                        pi = i
                        pj = j
                        if best == 1:
                            break
            if best == 1:
                break
        if pi < 0:
            break
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            if transforms:
                l[t], l[pi] = l[pi], l[t]
        if pj != t:
            for i in range(rows):
                di = d[i]
                di[t], di[pj] = di[pj], di[t]
            if transforms:
                r[t], r[pj] = r[pj], r[t]
        while True:
            for i in range(t + 1, rows):
                e = (<list>d[i])[t]
                if e == 0:
                    continue
                p = (<list>d[t])[t]
                di = d[i]
                dt = d[t]
                if e % p == 0:
                    q = e // p
                    for j in range(t, cols):
                        di[j] = di[j] - q * dt[j]
                    if transforms:
                        li = l[i]
                        lt = l[t]
                        for j in range(rows):
                            li[j] = li[j] - q * lt[j]
                else:
                    x, y, g = _xgcd(p, e)
                    me = e // g
                    mp = p // g
                    for j in range(t, cols):
                        aa = dt[j]
                        bb = di[j]
                        dt[j] = x * aa + y * bb
                        di[j] = mp * bb - me * aa
                    if transforms:
                        li = l[i]
                        lt = l[t]
                        for j in range(rows):
                            aa = lt[j]
                            bb = li[j]
                            lt[j] = x * aa + y * bb
                            li[j] = mp * bb - me * aa
            dirty = False
            for j in range(t + 1, cols):
                e = (<list>d[t])[j]
                if e == 0:
                    continue
                p = (<list>d[t])[t]
                if e % p == 0:
                    q = e // p
                    for i in range(t, rows):
                        di = d[i]
                        di[j] = di[j] - q * di[t]
                    if transforms:
                        rj = r[j]
                        rt = r[t]
                        for i in range(cols):
                            rj[i] = rj[i] - q * rt[i]
                else:
                    x, y, g = _xgcd(p, e)
                    me = e // g
                    mp = p // g
                    for i in range(t, rows):
                        di = d[i]
                        aa = di[t]
                        bb = di[j]
                        di[t] = x * aa + y * bb
                        di[j] = mp * bb - me * aa
                    if transforms:
                        rt = r[t]
                        rj = r[j]
                        for i in range(cols):
                            aa = rt[i]
                            bb = rj[i]
                            rt[i] = x * aa + y * bb
                            rj[i] = mp * bb - me * aa
                    dirty = True
            if not dirty:
                break
        dt = d[t]
        if dt[t] < 0:
            for j in range(t, cols):
                dt[j] = -dt[j]
            if transforms:
                lt = l[t]
                for j in range(rows):
                    lt[j] = -lt[j]
        t += 1
    for i in range(t):
        for j in range(i + 1, t):
            if (<list>d[j])[j] % (<list>d[i])[i] == 0:
                continue
            di = d[i]
            dt = d[j]
            dt[i] = dt[j]
            if transforms:
                ri = r[i]
                rj = r[j]
                for k2 in range(cols):
                    ri[k2] = ri[k2] + rj[k2]
            p = di[i]
            e = dt[i]
            x, y, g = _xgcd(p, e)
            me = e // g
            mp = p // g
            for jj in range(2):
                k2 = i if jj == 0 else j
                aa = di[k2]
                bb = dt[k2]
                di[k2] = x * aa + y * bb
                dt[k2] = mp * bb - me * aa
            if transforms:
                li = l[i]
                lj = l[j]
                for k2 in range(rows):
                    aa = li[k2]
                    bb = lj[k2]
                    li[k2] = x * aa + y * bb
                    lj[k2] = mp * bb - me * aa
            q = di[j] // di[i]
            if q:
                di[j] = di[j] - q * di[i]
                dt[j] = dt[j] - q * dt[i]
                if transforms:
                    rj = r[j]
                    ri = r[i]
                    for k2 in range(cols):
                        rj[k2] = rj[k2] - q * ri[k2]
    return l, d, r
