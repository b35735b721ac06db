"""Pure-Python enumeration kernels.

Fallback backend for the compiled module `pasep._speedups`; both expose the
same functions with identical outputs (plain nested lists of ints).  These
are the hot loops of the whole package: brute force over permutations,
perfect matchings and labelled lattice paths.
"""

from __future__ import annotations

from itertools import permutations


def ascent_pattern_counts(n: int) -> list[list[int]]:
    """counts[a][p] = #permutations of n with a ascents and p vincular 13-2 patterns.

    An occurrence of 13-2 needs adjacent positions i, i+1 and a later j with
    w[i] < w[j] < w[i+1].
    """
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    pmax = n * (n - 1) // 2
    counts = [[0] * (pmax + 1) for _ in range(n)]
    for w in permutations(range(1, n + 1)):
        asc = 0
        pat = 0
        for i in range(n - 1):
            a, b = w[i], w[i + 1]
            if a < b:
                asc += 1
                for j in range(i + 2, n):
                    if a < w[j] < b:
                        pat += 1
        counts[asc][pat] += 1
    return counts


def wex_crossing_counts(n: int) -> list[list[int]]:
    """counts[e][c] = #permutations of n with e weak exceedances and c crossings.

    Crossings are pairs i < j <= w_i < w_j together with pairs i > j > w_i > w_j.
    """
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cmax = n * (n - 1) // 2
    counts = [[0] * (cmax + 1) for _ in range(n + 1)]
    for w in permutations(range(1, n + 1)):
        wex = 0
        cr = 0
        for i in range(n):
            wi = w[i]
            p = i + 1
            if wi >= p:
                wex += 1
            for j in range(i + 1, n):
                wj = w[j]
                r = j + 1
                if r <= wi < wj:
                    cr += 1
                elif p > wj > wi:
                    cr += 1
        counts[wex][cr] += 1
    return counts


def vincular_classical_joint(n: int) -> list[list[int]]:
    """counts[v][c] over permutations of n: v vincular 13-2, c classical 1-3-2."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    vmax = n * (n - 1) // 2
    cmax = n * (n - 1) * (n - 2) // 6
    counts = [[0] * (cmax + 1) for _ in range(vmax + 1)]
    for w in permutations(range(1, n + 1)):
        vin = 0
        cla = 0
        for i in range(n - 2):
            wi = w[i]
            for j in range(i + 1, n - 1):
                wj = w[j]
                if wi < wj:
                    adjacent = j == i + 1
                    for k in range(j + 1, n):
                        if wi < w[k] < wj:
                            cla += 1
                            if adjacent:
                                vin += 1
        counts[vin][cla] += 1
    return counts


def matching_crossing_hist(n: int) -> list[int]:
    """hist[c] = #perfect matchings of {1..2n} with c crossings."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    cmax = n * (n - 1) // 2
    hist = [0] * (cmax + 1)
    free = list(range(1, 2 * n + 1))

    def rec(free: list[int], ends: list[int], cr: int):
        if not free:
            hist[cr] += 1
            return
        a = free[0]
        rest = free[1:]
        for idx, b in enumerate(rest):
            # new pair (a, b) crosses an existing pair (c, d) iff c < a < d < b
            extra = sum(1 for d in ends if a < d < b)
            rec(rest[:idx] + rest[idx + 1 :], ends + [b], cr + extra)

    rec(free, [], 0)
    return hist


# Labelled bicoloured Motzkin steps.  Per-step weight choices, for a step
# starting at height h:
#   NE, E1:  y   (plain)   or  -y*q^(h+1)  (starred)
#   SE, E2:  1   (plain)   or  -q^h        (starred)
# The restricted set additionally requires every east step to be starred and
# forbids a plain NE immediately followed by a plain SE.


def signed_path_table(n: int, restricted: bool) -> list[list[int]]:
    """table[e_y][e_q] = signed count of labelled closed paths of length n.

    Unrestricted: the full labelled set; restricted: east steps starred and
    no all-plain peak.  Either way the table encodes the signed weight sum.
    """
    if not 1 <= n <= 14:
        raise ValueError("n must be in 1..14")
    qmax = (n + 1) * (n + 1) // 4 + 1
    table = [[0] * (qmax + 1) for _ in range(n + 1)]

    def rec(pos: int, h: int, plain_ne: bool, ey: int, eq: int, sign: int):
        if pos == n:
            if h == 0:
                table[ey][eq] += sign
            return
        if h > n - pos:  # cannot return to height 0
            return
        look = pos + 1
        # east type 1 (starred / plain), east type 2 (starred / plain)
        rec(look, h, False, ey + 1, eq + h + 1, -sign)
        rec(look, h, False, ey, eq + h, -sign)
        if not restricted:
            rec(look, h, False, ey + 1, eq, sign)
            rec(look, h, False, ey, eq, sign)
        # north-east
        rec(look, h + 1, False, ey + 1, eq + h + 1, -sign)
        rec(look, h + 1, True, ey + 1, eq, sign)
        # south-east
        if h > 0:
            rec(look, h - 1, False, ey, eq + h, -sign)
            if not (restricted and plain_ne):
                rec(look, h - 1, False, ey, eq, sign)

    rec(0, 0, False, 0, 0, 1)
    return table


def left_factor_counts(n: int) -> list[list[int]]:
    """counts[k][j]: bicoloured Motzkin prefixes of length n, final height k,
    with j steps that are south-east or east of type 1."""
    if not 0 <= n <= 16:
        raise ValueError("n must be in 0..16")
    counts = [[0] * (n + 1) for _ in range(n + 1)]

    def rec(pos: int, h: int, j: int):
        if pos == n:
            counts[h][j] += 1
            return
        rec(pos + 1, h + 1, j)  # NE
        rec(pos + 1, h, j + 1)  # E1
        rec(pos + 1, h, j)  # E2
        if h > 0:
            rec(pos + 1, h - 1, j + 1)  # SE
    rec(0, 0, 0)
    return counts


__all__ = [
    "ascent_pattern_counts",
    "wex_crossing_counts",
    "vincular_classical_joint",
    "matching_crossing_hist",
    "signed_path_table",
    "left_factor_counts",
]
