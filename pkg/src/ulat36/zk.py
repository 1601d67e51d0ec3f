"""Row canonical form and span arithmetic for submodules of Z_k^n.

For composite k a plain row echelon form is not canonical; we use the
Howell form: pivots are divisors of k on strictly increasing columns,
entries below a pivot are zero, entries above a pivot d are reduced mod d,
and the form is closed under the annihilator rows (k/d) * row. Two row
sets generate the same submodule iff their Howell forms are identical,
and the span has exactly prod(k / d_i) elements with a unique
representation sum c_i * row_i, 0 <= c_i < k / d_i.
"""

from __future__ import annotations

from math import gcd, prod


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def unit_scale_to_divisor(a, k):
    """Find (u, d) with u a unit mod k and (u * a) % k == d == gcd(a, k)."""
    a %= k
    d = gcd(a, k)
    a1, k1 = a // d, k // d
    # invert a1 mod k1, then lift to a unit mod k
    g, x, _ = xgcd(a1, k1)
    assert g == 1
    u0 = x % k1 if k1 > 1 else 1
    for t in range(k):
        u = u0 + t * k1
        if u % k and gcd(u, k) == 1:
            return u % k, d
    raise AssertionError("no unit lift found")  # unreachable for k >= 2


def howell_form(rows, k, n):
    """Canonical generating rows of the Z_k-span of `rows` (zero rows dropped)."""
    work = []
    for row in rows:
        r = [x % k for x in row]
        if any(r):
            work.append(r)
    result = []
    pivots = []
    for col in range(n):
        live = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not live:
            work = rest
            continue
        while len(live) > 1:
            u, v = live[0], live[1]
            a, b = u[col], v[col]
            g, x, y = xgcd(a, b)
            nu = [(x * p + y * q) % k for p, q in zip(u, v)]
            nv = [((b // g) * p - (a // g) * q) % k for p, q in zip(u, v)]
            live = [nu] + live[2:]
            if any(nv):
                rest.append(nv)  # pivot column is zero there now
        p = live[0]
        u, d = unit_scale_to_divisor(p[col], k)
        p = [(u * x) % k for x in p]
        ann = (k // d)
        extra = [(ann * x) % k for x in p]
        if any(extra):
            rest.append(extra)
        result.append(p)
        pivots.append((col, d))
        work = rest
    # reduce entries above each pivot modulo the pivot
    for i, (col, d) in enumerate(pivots):
        for j in range(i):
            q = result[j][col] // d
            if q:
                result[j] = [(a - q * b) % k for a, b in zip(result[j], result[i])]
    return result


def pivots_of(hrows, k):
    """(column, pivot) pairs of rows already in Howell form."""
    out = []
    for r in hrows:
        col = next(i for i, x in enumerate(r) if x)
        out.append((col, r[col]))
    return out


def span_size(hrows, k):
    return prod(k // d for _, d in pivots_of(hrows, k))


def member(vec, hrows, k):
    """Test membership of vec in the span of Howell-form rows."""
    v = [x % k for x in vec]
    for row, (col, d) in zip(hrows, pivots_of(hrows, k)):
        if v[col] % d:
            return False
        q = v[col] // d
        if q:
            v = [(a - q * b) % k for a, b in zip(v, row)]
    return not any(v)


def iter_span(hrows, k, n):
    """Yield every element of the span exactly once (lexicographic in the
    coefficient vector)."""
    if not hrows:
        yield [0] * n
        return
    orders = [k // d for _, d in pivots_of(hrows, k)]
    word = [0] * n
    counters = [0] * len(hrows)
    while True:
        yield list(word)
        i = len(hrows) - 1
        while i >= 0:
            counters[i] += 1
            if counters[i] < orders[i]:
                word = [(a + b) % k for a, b in zip(word, hrows[i])]
                break
            counters[i] = 0
            # undo the (orders[i]-1) additions of row i in one step
            back = (orders[i] - 1) % k
            word = [(a - back * b) % k for a, b in zip(word, hrows[i])]
            i -= 1
        if i < 0:
            return
