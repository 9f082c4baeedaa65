# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Temperley-Lieb contraction kernel.

Mirrors ``_tl_py.contract`` exactly, with matchings held as 64-bit Dyck words
and coefficients as dense ``int64`` rows over a fixed exponent window.  Every
addition is overflow-checked; on overflow ``OverflowError`` is raised and the
caller re-runs the program on the pure-Python kernel.
"""

from libc.stdint cimport int64_t, uint64_t, INT64_MIN
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref

cdef enum:
    MAX_POINTS = 62

cdef enum:
    CROSS = 0
    BIRTH_LEFT = 1
    BIRTH_RIGHT = 2
    DEATH_LEFT = 3
    DEATH_RIGHT = 4


cdef inline void decode(uint64_t key, int n, int* partner) noexcept nogil:
    cdef int stack[MAX_POINTS]
    cdef int sp = 0, k, j
    for k in range(n):
        if (key >> k) & 1:
            stack[sp] = k
            sp += 1
        else:
            sp -= 1
            j = stack[sp]
            partner[j] = k
            partner[k] = j


cdef inline uint64_t encode(int n, int* partner) noexcept nogil:
    cdef uint64_t key = 0
    cdef int k
    for k in range(n):
        if partner[k] > k:
            key |= (<uint64_t>1) << k
    return key


cdef class _Table:
    """States (Dyck words) with one dense coefficient row each.

    Column ``c`` of a row holds the coefficient of ``t^(lo + c)``.
    """

    cdef vector[uint64_t] keys
    cdef vector[int64_t] rows
    cdef unordered_map[uint64_t, Py_ssize_t] index
    cdef Py_ssize_t stride
    cdef int lo

    def __cinit__(self, Py_ssize_t stride, int lo):
        self.stride = stride
        self.lo = lo

    cdef Py_ssize_t slot(self, uint64_t key):
        cdef unordered_map[uint64_t, Py_ssize_t].iterator it = self.index.find(key)
        if it != self.index.end():
            return deref(it).second
        cdef Py_ssize_t r = self.keys.size()
        self.keys.push_back(key)
        self.rows.resize(self.rows.size() + self.stride, 0)
        self.index[key] = r
        return r

    cdef _Table compact(self):
        """Drop zero rows and trim columns that are zero in every row."""
        cdef Py_ssize_t s, c, nstates = self.keys.size(), first = self.stride, last = -1
        cdef const int64_t* row
        for s in range(nstates):
            row = self.rows.data() + s * self.stride
            for c in range(self.stride):
                if row[c] != 0:
                    if c < first:
                        first = c
                    break
            for c in range(self.stride - 1, -1, -1):
                if row[c] != 0:
                    if c > last:
                        last = c
                    break
        if last < 0:
            return _Table(1, 0)
        cdef _Table out = _Table(last - first + 1, self.lo + <int>first)
        cdef Py_ssize_t r
        cdef bint nonzero
        for s in range(nstates):
            row = self.rows.data() + s * self.stride
            nonzero = False
            for c in range(first, last + 1):
                if row[c] != 0:
                    nonzero = True
                    break
            if not nonzero:
                continue
            r = out.slot(self.keys[s])
            for c in range(first, last + 1):
                out.rows[r * out.stride + c - first] = row[c]
        return out


cdef inline bint add_into(int64_t* dst, const int64_t* src, Py_ssize_t n, int shift, int64_t scale) noexcept nogil:
    """``dst[c + shift] += scale * src[c]`` for ``0 <= c < n``; True on overflow."""
    cdef Py_ssize_t c
    cdef int64_t a, b, r
    for c in range(n):
        b = src[c]
        if b == 0:
            continue
        if scale == -1:
            if b == INT64_MIN:
                return True
            b = -b
        a = dst[c + shift]
        r = <int64_t>(<uint64_t>a + <uint64_t>b)
        if ((a ^ r) & (b ^ r)) < 0:
            return True
        dst[c + shift] = r
    return False


def contract(program):
    """Evaluate a contraction program; returns ``{exponent: coefficient}``."""
    cdef int width = 0, n, p, q, a, b, k, pos, sign, code, t, pad
    cdef int partner[MAX_POINTS]
    cdef int kept[MAX_POINTS]
    cdef int where[MAX_POINTS]
    cdef Py_ssize_t s, r, nstates, m
    cdef uint64_t key, key2, low_mask
    cdef bint loop, bad
    cdef int64_t* dst
    cdef const int64_t* src
    cdef _Table cur, nxt

    cur = _Table(1, 0)
    cur.slot(0)
    cur.rows[0] = 1

    for op in program:
        code, pos, sign = op[0], op[1], op[2]
        n = 2 * width
        nstates = cur.keys.size()
        m = cur.stride
        bad = False
        if code == CROSS:
            # t^(+-1) on the identity term, t^(-+1) times at most one loop on the cap term
            pad = 3
            nxt = _Table(m + 2 * pad, cur.lo - pad)
            p = n - 1 - pos
            q = n - 2 - pos
            for s in range(nstates):
                key = cur.keys[s]
                r = nxt.slot(key)
                src = cur.rows.data() + s * m
                dst = nxt.rows.data() + r * nxt.stride
                bad |= add_into(dst, src, m, pad + sign, 1)
                decode(key, n, partner)
                if partner[p] == q:
                    bad |= add_into(dst, src, m, pad - sign + 2, -1)
                    bad |= add_into(dst, src, m, pad - sign - 2, -1)
                else:
                    a = partner[p]
                    b = partner[q]
                    partner[a] = b
                    partner[b] = a
                    partner[p] = q
                    partner[q] = p
                    key2 = encode(n, partner)
                    r = nxt.slot(key2)
                    dst = nxt.rows.data() + r * nxt.stride
                    bad |= add_into(dst, src, m, pad - sign, 1)
                if bad:
                    raise OverflowError("int64 coefficient overflow")
        elif code == BIRTH_LEFT or code == BIRTH_RIGHT:
            if n + 2 > MAX_POINTS:
                raise OverflowError("strip too wide for 64-bit matchings")
            nxt = _Table(m, cur.lo)
            low_mask = ((<uint64_t>1) << width) - 1
            for s in range(nstates):
                key = cur.keys[s]
                if code == BIRTH_LEFT:
                    key2 = 1 | (key << 1)
                else:
                    key2 = (key & low_mask) | ((<uint64_t>1) << width) | ((key >> width) << (width + 2))
                r = nxt.slot(key2)
                src = cur.rows.data() + s * m
                dst = nxt.rows.data() + r * m
                add_into(dst, src, m, 0, 1)
            width += 1
        elif code == DEATH_LEFT or code == DEATH_RIGHT:
            pad = 2
            nxt = _Table(m + 2 * pad, cur.lo - pad)
            if code == DEATH_LEFT:
                p = 0
                q = n - 1
            else:
                p = width - 1
                q = width
            for s in range(nstates):
                key = cur.keys[s]
                decode(key, n, partner)
                loop = partner[p] == q
                if not loop:
                    a = partner[p]
                    b = partner[q]
                    partner[a] = b
                    partner[b] = a
                t = 0
                for k in range(n):
                    if k != p and k != q:
                        where[k] = t
                        kept[t] = k
                        t += 1
                key2 = 0
                for k in range(t):
                    if where[partner[kept[k]]] > k:
                        key2 |= (<uint64_t>1) << k
                r = nxt.slot(key2)
                src = cur.rows.data() + s * m
                dst = nxt.rows.data() + r * nxt.stride
                if loop:
                    bad |= add_into(dst, src, m, pad + 2, -1)
                    bad |= add_into(dst, src, m, pad - 2, -1)
                else:
                    bad |= add_into(dst, src, m, pad, 1)
                if bad:
                    raise OverflowError("int64 coefficient overflow")
            width -= 1
        else:
            raise ValueError(f"unknown opcode {code}")
        if code == BIRTH_LEFT or code == BIRTH_RIGHT:
            cur = nxt
        else:
            cur = nxt.compact()
        if cur.keys.size() == 0:
            return {}

    if width != 0:
        raise ValueError("program must end with an empty strip")
    out = {}
    if not cur.index.count(0):
        return out
    s = cur.index[0]
    for k in range(cur.stride):
        if cur.rows[s * cur.stride + k] != 0:
            out[cur.lo + k] = cur.rows[s * cur.stride + k]
    return out
