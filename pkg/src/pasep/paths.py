"""Weighted bicoloured Motzkin path machinery.

A bicoloured Motzkin path takes steps NE, SE and two kinds of east step (E1,
E2), never goes below the axis, and here always starts and ends at height 0.
Two weight schemes appear:

* The generating-polynomial scheme: a step starting at height h weighs
  y*[h+1]_q for NE and E1, and [h]_q for SE and E2 (so E2 at height 0 weighs
  zero).  Closed paths of length n weighted this way sum to the partition
  polynomial of size n; ``motzkin_polynomial`` computes that sum by a
  height-indexed transfer (dynamic programming).

* The labelled scheme: every step carries one of two labels, plain or
  starred, with weights y / -y*q^(h+1) for NE and E1 and 1 / -q^h for SE and
  E2.  The labelled sum over all paths of length n equals (1-q)^n times the
  generating polynomial.  The "core" subset consists of labelled paths whose
  east steps are all starred and whose peaks are not plain-plain; the signed
  core sums have the closed form (-1)^k * sum_i y^i q^(i(k+1-i)).

``decompose`` factors any labelled path into an unlabelled prefix (a left
factor, recorded over the same four step kinds) and a core path, and
``recompose`` inverts it.  Left factors are also counted two independent
ways: by direct enumeration and through non-intersecting lattice-path pairs.

Step serialisation: U (NE), D (SE), F1, F2, with a trailing ``*`` marking a
starred step; e.g. ``"U F1* D*"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .laurent import ONE, Q, Y, ZERO, LaurentPoly
from .qcombinat import binomial
from .report import CheckReport

NE, SE, E1, E2 = "NE", "SE", "E1", "E2"
_RISE = {NE: 1, SE: -1, E1: 0, E2: 0}
_TOKEN = {NE: "U", SE: "D", E1: "F1", E2: "F2"}
_KIND = {v: k for k, v in _TOKEN.items()}


class IntersectingPair(ValueError):
    """Raised when a lattice-path pair shares a vertex."""


@dataclass(frozen=True)
class LabeledMotzkinPath:
    """A closed labelled path: a tuple of (kind, starred) steps."""

    steps: tuple[tuple[str, bool], ...]

    def __post_init__(self):
        h = 0
        for kind, _ in self.steps:
            h += _RISE[kind]
            if h < 0:
                raise ValueError("path dips below the axis")
        if h != 0:
            raise ValueError("path does not return to height 0")

    def __len__(self):
        return len(self.steps)

    def start_heights(self) -> list[int]:
        out = []
        h = 0
        for kind, _ in self.steps:
            out.append(h)
            h += _RISE[kind]
        return out

    def weight(self) -> LaurentPoly:
        """The product of the per-step labelled weights, a signed monomial."""
        ey = eq = 0
        sign = 1
        h = 0
        for kind, starred in self.steps:
            if kind in (NE, E1):
                ey += 1
                if starred:
                    sign = -sign
                    eq += h + 1
            else:
                if starred:
                    sign = -sign
                    eq += h
            h += _RISE[kind]
        return LaurentPoly.monomial(sign, eq, ey)

    def in_core_set(self) -> bool:
        """East steps all starred, and no plain NE directly before a plain SE."""
        prev_plain_ne = False
        for kind, starred in self.steps:
            if kind in (E1, E2) and not starred:
                return False
            if kind == SE and not starred and prev_plain_ne:
                return False
            prev_plain_ne = kind == NE and not starred
        return True

    def serialize(self) -> str:
        return " ".join(
            _TOKEN[k] + ("*" if s else "") for k, s in self.steps
        )

    @classmethod
    def parse(cls, text: str) -> "LabeledMotzkinPath":
        steps = []
        for tok in text.split():
            starred = tok.endswith("*")
            steps.append((_KIND[tok.rstrip("*")], starred))
        return cls(tuple(steps))


def iter_labelled_paths(n: int, restricted: bool = False):
    """Yield every labelled closed path of length n (core subset if restricted)."""
    def rec(pos, h, prev_plain_ne, acc):
        if pos == n:
            if h == 0:
                yield LabeledMotzkinPath(tuple(acc))
            return
        if h > n - pos:
            return
        for kind in (NE, SE, E1, E2):
            if kind == SE and h == 0:
                continue
            for starred in (False, True):
                if restricted:
                    if kind in (E1, E2) and not starred:
                        continue
                    if kind == SE and not starred and prev_plain_ne:
                        continue
                acc.append((kind, starred))
                yield from rec(
                    pos + 1,
                    h + _RISE[kind],
                    kind == NE and not starred,
                    acc,
                )
                acc.pop()

    yield from rec(0, 0, False, [])


# -- generating polynomial by height-indexed transfer -----------------------


def _window_sums(row: list[int], m: int) -> list[int]:
    """Coefficients of row(q) * (1 + q + ... + q^(m-1))."""
    out = [0] * (len(row) + m - 1)
    s = 0
    for i in range(len(out)):
        if i < len(row):
            s += row[i]
        if i >= m and i - m < len(row):
            s -= row[i - m]
        out[i] = s
    return out


def _acc(target: dict, ey: int, row: list[int]) -> None:
    cur = target.get(ey)
    if cur is None:
        target[ey] = list(row)
        return
    if len(cur) < len(row):
        cur.extend([0] * (len(row) - len(cur)))
    for i, v in enumerate(row):
        if v:
            cur[i] += v


@lru_cache(maxsize=None)
def motzkin_polynomials_upto(n: int) -> tuple[LaurentPoly, ...]:
    """(p_1, ..., p_n): p_s is the weighted sum over closed paths of length s."""
    dp = [{0: [1]}]
    results = []
    for step in range(1, n + 1):
        new = [dict() for _ in range(len(dp) + 1)]
        for h, group in enumerate(dp):
            for ey, row in group.items():
                up = _window_sums(row, h + 1)  # weight y*[h+1]_q: NE and E1
                _acc(new[h + 1], ey + 1, up)
                _acc(new[h], ey + 1, up)
                if h > 0:
                    down = _window_sums(row, h)  # weight [h]_q: SE and E2
                    _acc(new[h - 1], ey, down)
                    _acc(new[h], ey, down)
        dp = new
        results.append(
            LaurentPoly(
                {
                    (eq, ey): c
                    for ey, row in dp[0].items()
                    for eq, c in enumerate(row)
                    if c
                }
            )
        )
    return tuple(results)


def motzkin_polynomial(n: int) -> LaurentPoly:
    """The partition polynomial of size n, via the path transfer recurrence."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return motzkin_polynomials_upto(n)[n - 1]


# -- labelled sums -----------------------------------------------------------


def _table_to_poly(table: list[list[int]]) -> LaurentPoly:
    return LaurentPoly(
        {
            (eq, ey): c
            for ey, row in enumerate(table)
            for eq, c in enumerate(row)
            if c
        }
    )


@lru_cache(maxsize=None)
def labelled_path_sum(n: int) -> LaurentPoly:
    """Signed weight sum over all labelled closed paths of length n.

    Equals (1-q)^n * motzkin_polynomial(n); exhaustive, so n is capped at 12.
    """
    if not 1 <= n <= 12:
        raise ValueError("labelled enumeration supports 1 <= n <= 12")
    return _table_to_poly(kernels.signed_path_table(n, False))


@lru_cache(maxsize=None)
def core_signed_sum(k: int) -> LaurentPoly:
    """Signed weight sum over the core subset of length k."""
    if k < 0 or k > 12:
        raise ValueError("core enumeration supports 0 <= k <= 12")
    if k == 0:
        return ONE
    return _table_to_poly(kernels.signed_path_table(k, True))


def core_closed_form(k: int) -> LaurentPoly:
    """sum_{i=0..k} y^i q^(i(k+1-i)); the signed core sum is (-1)^k times this."""
    return LaurentPoly({(i * (k + 1 - i), i): 1 for i in range(k + 1)})


# -- decomposition bijection --------------------------------------------------


def _max_closed_prefix(steps, start: int, need_plain: bool) -> int:
    """Length of the longest closed-above prefix of steps[start:].

    Considered steps must be plain when need_plain is set; the prefix must
    return to its starting height and never dip below it.
    """
    h = 0
    best = 0
    i = start
    while i < len(steps):
        step = steps[i]
        if need_plain:
            kind, starred = step
            if starred:
                break
        else:
            kind = step
        h += _RISE[kind]
        if h < 0:
            break
        i += 1
        if h == 0:
            best = i - start
    return best


def decompose(
    p: LabeledMotzkinPath,
) -> tuple[tuple[str, ...], LabeledMotzkinPath]:
    """Split p into an unlabelled left factor and its core path.

    Greedily peel maximal plain sub-paths that close at their own starting
    height; the single steps left over, joined in order, form the core, and
    replacing each of them by NE in p gives the left factor.
    """
    left: list[str] = []
    core: list[tuple[str, bool]] = []
    i = 0
    steps = p.steps
    while i < len(steps):
        d = _max_closed_prefix(steps, i, need_plain=True)
        left.extend(kind for kind, _ in steps[i : i + d])
        i += d
        if i < len(steps):
            core.append(steps[i])
            left.append(NE)
            i += 1
    return tuple(left), LabeledMotzkinPath(tuple(core))


def recompose(
    left: tuple[str, ...], core: LabeledMotzkinPath
) -> LabeledMotzkinPath:
    """Inverse of decompose; raises ValueError if (left, core) is not an image."""
    out: list[tuple[str, bool]] = []
    i = 0
    ci = 0
    while i < len(left):
        d = _max_closed_prefix(left, i, need_plain=False)
        out.extend((kind, False) for kind in left[i : i + d])
        i += d
        if i < len(left):
            if left[i] != NE or ci >= len(core):
                raise ValueError("not a valid (left factor, core) pair")
            out.append(core.steps[ci])
            ci += 1
            i += 1
    if ci != len(core):
        raise ValueError("core longer than the left factor allows")
    return LabeledMotzkinPath(tuple(out))


# -- left factors --------------------------------------------------------------


def left_factor_count(n: int, k: int, j: int) -> int:
    """Number of length-n prefixes of final height k with j SE or E1 steps,
    by direct enumeration."""
    table = _left_factor_table(n)
    if not (0 <= k <= n and 0 <= j <= n):
        return 0
    return table[k][j]


@lru_cache(maxsize=None)
def _left_factor_table(n: int) -> tuple[tuple[int, ...], ...]:
    if not 0 <= n <= 12:
        raise ValueError("left-factor enumeration supports 0 <= n <= 12")
    return tuple(tuple(row) for row in kernels.left_factor_counts(n))


def left_factor_formula(n: int, k: int, j: int) -> int:
    """The same count in closed form:
    binom(n,j) binom(n,j+k) - binom(n,j-1) binom(n,j+k+1)."""
    return binomial(n, j) * binomial(n, j + k) - binomial(n, j - 1) * binomial(
        n, j + k + 1
    )


def iter_left_factors(n: int):
    """Yield (steps, final_height, j) over all length-n prefixes."""
    def rec(pos, h, j, acc):
        if pos == n:
            yield tuple(acc), h, j
            return
        for kind in (NE, E1, E2, SE):
            if kind == SE and h == 0:
                continue
            acc.append(kind)
            yield from rec(
                pos + 1, h + _RISE[kind], j + (kind in (SE, E1)), acc
            )
            acc.pop()

    yield from rec(0, 0, 0, [])


# -- lattice path pairs ---------------------------------------------------------


@dataclass(frozen=True)
class LatticePathPair:
    """Two monotone N/E paths with the same number of steps.

    ``lower`` starts at (1,0) and ``upper`` at (0,1); the pair is admissible
    when the paths share no lattice point.
    """

    lower: tuple[str, ...]
    upper: tuple[str, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("paths must have equal length")
        for s in self.lower + self.upper:
            if s not in ("N", "E"):
                raise ValueError(f"bad step {s!r}")

    def vertices(self, which: str) -> list[tuple[int, int]]:
        x, y = (1, 0) if which == "lower" else (0, 1)
        out = [(x, y)]
        for s in self.lower if which == "lower" else self.upper:
            if s == "E":
                x += 1
            else:
                y += 1
            out.append((x, y))
        return out

    def is_nonintersecting(self) -> bool:
        return not set(self.vertices("lower")) & set(self.vertices("upper"))


_PAIR_TO_STEP = {("E", "N"): NE, ("N", "E"): SE, ("N", "N"): E1, ("E", "E"): E2}
_STEP_TO_PAIR = {v: k for k, v in _PAIR_TO_STEP.items()}


def pair_to_left_factor(pair: LatticePathPair) -> tuple[str, ...]:
    """Translate a non-intersecting pair, step by step, into a left factor."""
    if not pair.is_nonintersecting():
        raise IntersectingPair("paths share a lattice point")
    steps = tuple(
        _PAIR_TO_STEP[(a, b)] for a, b in zip(pair.lower, pair.upper)
    )
    h = 0
    for kind in steps:
        h += _RISE[kind]
        assert h >= 0, "non-intersecting pair mapped below the axis"
    return steps


def left_factor_to_pair(steps: tuple[str, ...]) -> LatticePathPair:
    """Inverse translation; the result is always non-intersecting."""
    lower = []
    upper = []
    for kind in steps:
        a, b = _STEP_TO_PAIR[kind]
        lower.append(a)
        upper.append(b)
    pair = LatticePathPair(tuple(lower), tuple(upper))
    if not pair.is_nonintersecting():
        raise IntersectingPair("image pair unexpectedly intersects")
    return pair


# -- functional equation check ---------------------------------------------------

# Series coefficients in the extra marker z are kept as {z_exponent: LaurentPoly}.


def _zs_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, ZERO) + v
        if s.is_zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _zs_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            s = out.get(k, ZERO) + va * vb
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _zs_qshift(a: dict) -> dict:
    """Substitute z -> q*z."""
    return {k: v * Q**k for k, v in a.items()}


def _zs_eval_z1(a: dict) -> LaurentPoly:
    return sum(a.values(), ZERO)


@lru_cache(maxsize=None)
def _core_z_series(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Signed monomial data (z_exp, e_q, e_y, coeff) for the core set of length n,
    with z marking starred steps."""
    acc: dict[tuple[int, int, int], int] = {}

    def rec(pos, h, prev_plain_ne, z, eq, ey, sign):
        if pos == n:
            if h == 0:
                key = (z, eq, ey)
                acc[key] = acc.get(key, 0) + sign
            return
        if h > n - pos:
            return
        rec(pos + 1, h, False, z + 1, eq + h + 1, ey + 1, -sign)  # E1*
        rec(pos + 1, h, False, z + 1, eq + h, ey, -sign)  # E2*
        rec(pos + 1, h + 1, False, z + 1, eq + h + 1, ey + 1, -sign)  # NE*
        rec(pos + 1, h + 1, True, z, eq, ey + 1, sign)  # NE plain
        if h > 0:
            rec(pos + 1, h - 1, False, z + 1, eq + h, ey, -sign)  # SE*
            if not prev_plain_ne:
                rec(pos + 1, h - 1, False, z, eq, ey, sign)  # SE plain
    rec(0, 0, False, 0, 0, 0, 1)
    return tuple((z, eq, ey, c) for (z, eq, ey), c in acc.items() if c)


def _core_zsum(n: int) -> dict:
    out: dict[int, dict] = {}
    for z, eq, ey, c in _core_z_series(n):
        out.setdefault(z, {})[(eq, ey)] = c
    return {z: LaurentPoly(terms) for z, terms in out.items()}


def check_functional_equation(t_order: int) -> CheckReport:
    """Verify, coefficientwise in t up to t_order, that the z-marked core
    series S(z) = sum_n t^n sum_{core paths} w(p) satisfies

        S(z) = 1 - (q y z t + z t + y t^2) S(z) + y t^2 (1 - q z)^2 S(z) S(qz),

    and that (-1)^k [t^k] S(1) equals the closed form for k <= t_order.
    """
    if not 0 <= t_order <= 8:
        raise ValueError("t_order must be in 0..8")
    s = [_core_zsum(n) for n in range(t_order + 1)]
    violations = []

    lin = {1: Q * Y + ONE}  # q y z + z
    sq1 = {0: ONE, 1: -2 * Q, 2: Q * Q}  # (1 - q z)^2
    for n in range(t_order + 1):
        rhs: dict = {0: ONE} if n == 0 else {}
        if n >= 1:
            rhs = _zs_add(rhs, {k: -v for k, v in _zs_mul(lin, s[n - 1]).items()})
        if n >= 2:
            rhs = _zs_add(rhs, {k: v * (-1) * Y for k, v in s[n - 2].items()})
            conv: dict = {}
            for a in range(n - 1):
                b = n - 2 - a
                conv = _zs_add(conv, _zs_mul(s[a], _zs_qshift(s[b])))
            prod = _zs_mul(sq1, conv)
            rhs = _zs_add(rhs, {k: v * Y for k, v in prod.items()})
        lhs = s[n]
        if _zs_add(lhs, {k: -v for k, v in rhs.items()}):
            violations.append(f"functional equation fails at [t^{n}]")

    for k in range(t_order + 1):
        got = _zs_eval_z1(s[k]) * ((-1) ** k)
        if got != core_closed_form(k):
            violations.append(f"[t^{k}] at z=1 differs from the closed form")

    return CheckReport("core functional equation", not violations, violations)


__all__ = [
    "NE",
    "SE",
    "E1",
    "E2",
    "LabeledMotzkinPath",
    "LatticePathPair",
    "IntersectingPair",
    "iter_labelled_paths",
    "motzkin_polynomial",
    "motzkin_polynomials_upto",
    "labelled_path_sum",
    "core_signed_sum",
    "core_closed_form",
    "decompose",
    "recompose",
    "left_factor_count",
    "left_factor_formula",
    "iter_left_factors",
    "pair_to_left_factor",
    "left_factor_to_pair",
    "check_functional_equation",
]
