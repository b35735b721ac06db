# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; mirrors pasep._kernels_py exactly.

Counts fit in 64-bit integers for every supported size (permutations up to
10! = 3628800, labelled paths up to Catalan(13)*2^12 < 2^32, so all signed
table entries stay far below 2^63).
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef inline void _swap(int* a, int i, int j) nogil:
    cdef int t = a[i]
    a[i] = a[j]
    a[j] = t


def ascent_pattern_counts(int n):
    """counts[a][p]: ascents and vincular 13-2 occurrences over S_n."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cdef int pmax = n * (n - 1) // 2
    cdef int width = pmax + 1
    cdef long long* table = <long long*> calloc(n * width, sizeof(long long))
    if table == NULL:
        raise MemoryError()
    cdef int a[16]
    cdef int c[16]
    cdef int i, j, k, asc, pat, wi, wnext
    try:
        for i in range(n):
            a[i] = i + 1
            c[i] = 0
        # Heap's algorithm, processing each arrangement once
        asc = 0
        pat = 0
        for i in range(n - 1):
            if a[i] < a[i + 1]:
                asc += 1
                for j in range(i + 2, n):
                    if a[i] < a[j] < a[i + 1]:
                        pat += 1
        table[asc * width + pat] += 1
        i = 0
        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    _swap(a, 0, i)
                else:
                    _swap(a, c[i], i)
                asc = 0
                pat = 0
                for k in range(n - 1):
                    wi = a[k]
                    wnext = a[k + 1]
                    if wi < wnext:
                        asc += 1
                        for j in range(k + 2, n):
                            if wi < a[j] < wnext:
                                pat += 1
                table[asc * width + pat] += 1
                c[i] += 1
                i = 0
            else:
                c[i] = 0
                i += 1
        return [[table[r * width + v] for v in range(width)] for r in range(n)]
    finally:
        free(table)


def wex_crossing_counts(int n):
    """counts[e][c]: weak exceedances and crossings over S_n."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cdef int cmax = n * (n - 1) // 2
    cdef int width = cmax + 1
    cdef long long* table = <long long*> calloc((n + 1) * width, sizeof(long long))
    if table == NULL:
        raise MemoryError()
    cdef int a[16]
    cdef int c[16]
    cdef int i, j, k, wex, cr, wi, wj
    try:
        for i in range(n):
            a[i] = i + 1
            c[i] = 0
        wex = 0
        cr = 0
        for i in range(n):
            if a[i] >= i + 1:
                wex += 1
        # identity has no crossings
        table[wex * width] += 1
        i = 0
        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    _swap(a, 0, i)
                else:
                    _swap(a, c[i], i)
                wex = 0
                cr = 0
                for k in range(n):
                    wi = a[k]
                    if wi >= k + 1:
                        wex += 1
                    for j in range(k + 1, n):
                        wj = a[j]
                        if j + 1 <= wi and wi < wj:
                            cr += 1
                        elif k + 1 > wj and wj > wi:
                            cr += 1
                table[wex * width + cr] += 1
                c[i] += 1
                i = 0
            else:
                c[i] = 0
                i += 1
        return [[table[r * width + v] for v in range(width)] for r in range(n + 1)]
    finally:
        free(table)


def vincular_classical_joint(int n):
    """counts[v][c]: vincular 13-2 and classical 1-3-2 occurrences over S_n."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cdef int vmax = n * (n - 1) // 2
    cdef int cmax = n * (n - 1) * (n - 2) // 6
    cdef int width = cmax + 1
    cdef long long* table = <long long*> calloc((vmax + 1) * width, sizeof(long long))
    if table == NULL:
        raise MemoryError()
    cdef int a[16]
    cdef int c[16]
    cdef int i, j, k, t, vin, cla, wi, wj
    try:
        for i in range(n):
            a[i] = i + 1
            c[i] = 0

        vin = 0
        cla = 0
        table[vin * width + cla] += 1  # identity has no occurrences
        i = 0
        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    _swap(a, 0, i)
                else:
                    _swap(a, c[i], i)
                vin = 0
                cla = 0
                for k in range(n - 2):
                    wi = a[k]
                    for j in range(k + 1, n - 1):
                        wj = a[j]
                        if wi < wj:
                            for t in range(j + 1, n):
                                if wi < a[t] < wj:
                                    cla += 1
                                    if j == k + 1:
                                        vin += 1
                table[vin * width + cla] += 1
                c[i] += 1
                i = 0
            else:
                c[i] = 0
                i += 1
        return [[table[r * width + v] for v in range(width)]
                for r in range(vmax + 1)]
    finally:
        free(table)


cdef long long* _mhist
cdef int _mwidth


cdef void _match_rec(int nfree, int* free_pts, int nend, int* ends, int cr) nogil:
    cdef int i, j, k, a, b, extra
    cdef int rest[32]
    if nfree == 0:
        _mhist[cr] += 1
        return
    a = free_pts[0]
    for i in range(1, nfree):
        b = free_pts[i]
        extra = 0
        for j in range(nend):
            if a < ends[j] and ends[j] < b:
                extra += 1
        k = 0
        for j in range(1, nfree):
            if j != i:
                rest[k] = free_pts[j]
                k += 1
        ends[nend] = b
        _match_rec(nfree - 2, rest, nend + 1, ends, cr + extra)


def matching_crossing_hist(int n):
    """hist[c]: perfect matchings of {1..2n} by crossing number."""
    global _mhist, _mwidth
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cdef int cmax = n * (n - 1) // 2
    _mwidth = cmax + 1
    _mhist = <long long*> calloc(_mwidth, sizeof(long long))
    if _mhist == NULL:
        raise MemoryError()
    cdef int pts[32]
    cdef int ends[16]
    cdef int i
    try:
        for i in range(2 * n):
            pts[i] = i + 1
        _match_rec(2 * n, pts, 0, ends, 0)
        return [_mhist[i] for i in range(_mwidth)]
    finally:
        free(_mhist)
        _mhist = NULL


cdef long long* _ptable
cdef int _pwidth
cdef int _pn
cdef bint _prestricted


cdef void _path_rec(int pos, int h, bint plain_ne, int ey, int eq, int sign) nogil:
    if pos == _pn:
        if h == 0:
            _ptable[ey * _pwidth + eq] += sign
        return
    if h > _pn - pos:
        return
    cdef int look = pos + 1
    # east steps
    _path_rec(look, h, 0, ey + 1, eq + h + 1, -sign)   # E1 starred
    _path_rec(look, h, 0, ey, eq + h, -sign)           # E2 starred
    if not _prestricted:
        _path_rec(look, h, 0, ey + 1, eq, sign)        # E1 plain
        _path_rec(look, h, 0, ey, eq, sign)            # E2 plain
    # north-east
    _path_rec(look, h + 1, 0, ey + 1, eq + h + 1, -sign)
    _path_rec(look, h + 1, 1, ey + 1, eq, sign)
    # south-east
    if h > 0:
        _path_rec(look, h - 1, 0, ey, eq + h, -sign)
        if not (_prestricted and plain_ne):
            _path_rec(look, h - 1, 0, ey, eq, sign)


def signed_path_table(int n, bint restricted):
    """table[e_y][e_q]: signed weight sums of labelled closed paths."""
    global _ptable, _pwidth, _pn, _prestricted
    if not 1 <= n <= 14:
        raise ValueError("n must be in 1..14")
    cdef int qmax = (n + 1) * (n + 1) // 4 + 1
    _pwidth = qmax + 1
    _pn = n
    _prestricted = restricted
    _ptable = <long long*> calloc((n + 1) * _pwidth, sizeof(long long))
    if _ptable == NULL:
        raise MemoryError()
    try:
        _path_rec(0, 0, 0, 0, 0, 1)
        return [[_ptable[r * _pwidth + v] for v in range(_pwidth)]
                for r in range(n + 1)]
    finally:
        free(_ptable)
        _ptable = NULL


cdef long long* _lftable
cdef int _lfwidth
cdef int _lfn


cdef void _lf_rec(int pos, int h, int j) nogil:
    if pos == _lfn:
        _lftable[h * _lfwidth + j] += 1
        return
    _lf_rec(pos + 1, h + 1, j)      # NE
    _lf_rec(pos + 1, h, j + 1)      # E1
    _lf_rec(pos + 1, h, j)          # E2
    if h > 0:
        _lf_rec(pos + 1, h - 1, j + 1)  # SE


def left_factor_counts(int n):
    """counts[k][j]: length-n prefixes by final height and SE/E1 count."""
    global _lftable, _lfwidth, _lfn
    if not 0 <= n <= 16:
        raise ValueError("n must be in 0..16")
    _lfwidth = n + 1
    _lfn = n
    _lftable = <long long*> calloc((n + 1) * _lfwidth, sizeof(long long))
    if _lftable == NULL:
        raise MemoryError()
    try:
        _lf_rec(0, 0, 0)
        return [[_lftable[r * _lfwidth + v] for v in range(_lfwidth)]
                for r in range(n + 1)]
    finally:
        free(_lftable)
        _lftable = NULL
