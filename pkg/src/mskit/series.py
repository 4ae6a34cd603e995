"""Nonnegative power series with exact and certified evaluation.

Loop-count sequences are a finite explicit table plus "lacunary" tails
with closed-form counts on structured supports (all n, squares, powers
of an integer base, arithmetic progressions).  Sums, radii and the root
of F(x) = 1 are computed in rational arithmetic; interval results carry
rigorous tail bounds.  The one float-based routine, `hadamard_estimate`,
is flagged non-rigorous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ExactnessError,
    FamilyError,
    PreconditionError,
    UnsupportedRegimeError,
)
from .exact import (
    INF,
    Infinity,
    frac_floor,
    geometric_sum,
    integer_nth_root,
    is_finite,
    log_bounds,
    power_weighted_sum,
    rational_nth_root_bounds,
)

Q = Fraction

SUPPORT_SHAPES = ("all", "squares", "powers", "arithmetic")

#: how many leading support points of a non-floor tail are checked for
#: integrality at construction; later points are checked on evaluation
_VALIDATE_POINTS = 12


# ---------------------------------------------------------------------------
# count tables


@dataclass(frozen=True)
class CountTable:
    """Exact arbitrary-precision coefficients indexed by path length.

    kind "P" = all paths, "F" = first returns, "T" = interior-constrained.
    values[n] is the count for length n; index 0 is 1 for p_uu, else 0.
    """

    kind: str
    src: int
    dst: int
    values: tuple[int, ...]
    interior: frozenset | None = None

    def __post_init__(self):
        if self.kind not in ("P", "F", "T"):
            raise ValueError(f"bad count table kind {self.kind!r}")
        if any(v < 0 for v in self.values):
            raise ValueError("negative count")

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def renewal_convolve(f, horizon: int | None = None) -> CountTable:
    """All-returns counts from first-return counts via the renewal identity.

    p(0) = 1 and p(n) = sum_{k=1..n} f(k) p(n-k), exactly.
    """
    if isinstance(f, CountTable):
        values = f.values
        src, dst = f.src, f.dst
    else:
        values = tuple(f)
        src = dst = 0
    if horizon is None:
        horizon = len(values) - 1
    if horizon >= len(values):
        raise PreconditionError("first-return counts not available up to horizon")
    p = [0] * (horizon + 1)
    p[0] = 1
    for n in range(1, horizon + 1):
        p[n] = sum(values[k] * p[n - k] for k in range(1, n + 1))
    return CountTable("P", src, dst, tuple(p))


# ---------------------------------------------------------------------------
# series values and radii


@dataclass(frozen=True)
class SeriesValue:
    """Value of a nonnegative series: exact rational, enclosure, or divergent."""

    status: str  # "exact" | "interval" | "diverges"
    lo: Fraction | None = None
    hi: Fraction | None = None
    tail_bound: Fraction | None = None

    @classmethod
    def exact(cls, v: Fraction) -> "SeriesValue":
        v = Q(v)
        return cls("exact", v, v)

    @classmethod
    def interval(cls, lo: Fraction, hi: Fraction, tail=None) -> "SeriesValue":
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        return cls("interval", Q(lo), Q(hi), tail)

    @classmethod
    def divergent(cls) -> "SeriesValue":
        return cls("diverges")

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"

    @property
    def diverges(self) -> bool:
        return self.status == "diverges"

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ExactnessError(f"series value is {self.status}, not exact")
        return self.lo

    def certainly_lt(self, t: Fraction) -> bool:
        return self.status != "diverges" and self.hi < t

    def certainly_gt(self, t: Fraction) -> bool:
        return self.status == "diverges" or self.lo > t

    def equals(self, t: Fraction) -> bool:
        return self.is_exact and self.lo == t

    def plus(self, other: "SeriesValue") -> "SeriesValue":
        if self.diverges or other.diverges:
            return SeriesValue.divergent()
        if self.is_exact and other.is_exact:
            return SeriesValue.exact(self.lo + other.lo)
        return SeriesValue.interval(self.lo + other.lo, self.hi + other.hi)

    def __repr__(self) -> str:
        if self.diverges:
            return "SeriesValue(diverges)"
        if self.is_exact:
            return f"SeriesValue({self.lo})"
        return f"SeriesValue([{self.lo}, {self.hi}])"


@dataclass(frozen=True)
class RadiusInfo:
    """Radius of convergence: exact value or enclosure, with -log reporting.

    kind "R" is the all-paths radius, "L" the first-return radius.
    `rigorous` is False only for estimates from finite coefficient data.
    """

    kind: str
    lo: Fraction | Infinity
    hi: Fraction | Infinity
    rigorous: bool = True

    def __post_init__(self):
        if self.kind not in ("R", "L"):
            raise ValueError(f"bad radius kind {self.kind!r}")
        if is_finite(self.lo) and is_finite(self.hi) and self.lo > self.hi:
            raise ValueError("radius bounds out of order")

    @classmethod
    def exact_value(cls, kind: str, v, rigorous: bool = True) -> "RadiusInfo":
        return cls(kind, v, v, rigorous)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self):
        if not self.is_exact:
            raise ExactnessError("radius is an enclosure, not exact")
        return self.lo

    @property
    def infinite(self) -> bool:
        return not is_finite(self.lo)

    def neg_log_bounds(self) -> tuple[float, float]:
        """Padded float bounds for -log(radius)."""
        if self.infinite:
            return (-math.inf, -math.inf)
        llo, lhi = log_bounds(self.lo)
        if self.hi == self.lo:
            return (-lhi, -llo)
        hlo, _ = log_bounds(self.hi)
        return (-lhi, -hlo) if -lhi <= -hlo else (-hlo, -lhi)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self) -> str:
        if self.is_exact:
            return f"RadiusInfo({self.kind}={self.lo})"
        return f"RadiusInfo({self.kind} in [{self.lo}, {self.hi}])"


# ---------------------------------------------------------------------------
# lacunary terms


@dataclass(frozen=True)
class LacunaryTerm:
    """Counts count(k) = c * beta**s(k) * gamma**k on a structured support.

    Support index k runs over k >= k0 minus `excluded`; the loop length is
    s(k): k itself ("all"), k**2 ("squares"), power_base**k ("powers"), or
    step*k + shift ("arithmetic").  With floor=False every count must be a
    nonnegative integer; floor=True takes the integer part.
    """

    shape: str
    k0: int
    c: Fraction
    beta: Fraction
    gamma: Fraction
    power_base: int = 2
    step: int = 1
    shift: int = 0
    floor: bool = False
    excluded: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.shape not in SUPPORT_SHAPES:
            raise FamilyError(f"unknown support shape {self.shape!r}")
        object.__setattr__(self, "c", Q(self.c))
        object.__setattr__(self, "beta", Q(self.beta))
        object.__setattr__(self, "gamma", Q(self.gamma))
        if self.c <= 0:
            raise FamilyError("coefficient c must be positive")
        if self.beta < 1:
            raise FamilyError("beta must be >= 1")
        if self.gamma <= 0:
            raise FamilyError("gamma must be positive")
        if self.shape == "powers" and self.power_base < 2:
            raise FamilyError("powers support needs an integer base >= 2")
        if self.shape == "arithmetic" and (self.step < 1 or self.shift < 0):
            raise FamilyError("arithmetic support needs step >= 1, shift >= 0")
        # normalise: excluded indices at the left edge just bump k0
        k0 = self.k0
        excl = set(self.excluded)
        while k0 in excl:
            excl.discard(k0)
            k0 += 1
        if any(k < k0 for k in excl):
            raise FamilyError("excluded indices must lie in the support")
        object.__setattr__(self, "k0", k0)
        object.__setattr__(self, "excluded", frozenset(excl))
        if self.s(self.k0) < 1:
            raise FamilyError("support must start at loop length >= 1")
        if not self.floor:
            for k in self._first_indices(_VALIDATE_POINTS):
                self.count_at_index(k)

    def _first_indices(self, count: int):
        k, out = self.k0, []
        while len(out) < count:
            if k not in self.excluded:
                out.append(k)
            k += 1
        return out

    def s(self, k: int) -> int:
        if self.shape == "all":
            return k
        if self.shape == "squares":
            return k * k
        if self.shape == "powers":
            return self.power_base**k
        return self.step * k + self.shift

    def index_of(self, n: int) -> int | None:
        """The k with s(k) = n, if n is in the (non-excluded) support."""
        if self.shape == "all":
            k = n
        elif self.shape == "squares":
            r, exact = integer_nth_root(n, 2)
            if not exact:
                return None
            k = r
        elif self.shape == "powers":
            if n < self.power_base:
                k = 0 if n == 1 else None
                if k is None:
                    return None
            else:
                k, m = 0, 1
                while m < n:
                    m *= self.power_base
                    k += 1
                if m != n:
                    return None
        else:
            if (n - self.shift) % self.step != 0:
                return None
            k = (n - self.shift) // self.step
        if k < self.k0 or k in self.excluded:
            return None
        return k

    def count_at_index(self, k: int) -> int:
        v = self.c * self.beta ** self.s(k) * self.gamma**k
        if self.floor:
            return frac_floor(v)
        if v.denominator != 1:
            raise FamilyError(
                f"non-integer count {v} at support index {k} (shape {self.shape})"
            )
        return v.numerator

    def count_at(self, n: int) -> int:
        k = self.index_of(n)
        return 0 if k is None else self.count_at_index(k)

    def indices_upto(self, n_max: int):
        """Support indices k with s(k) <= n_max, ascending, skipping excluded."""
        k = self.k0
        while self.s(k) <= n_max:
            if k not in self.excluded:
                yield k
            k += 1

    def radius(self) -> tuple[Fraction, Fraction]:
        """Enclosure (usually exact) for 1 / limsup count(n)**(1/n)."""
        if self.shape == "all":
            v = 1 / (self.beta * self.gamma)
            return v, v
        if self.shape in ("squares", "powers"):
            v = 1 / self.beta
            return v, v
        # arithmetic: limsup = beta * gamma**(1/step)
        if self.step == 1:
            v = 1 / (self.beta * self.gamma)
            return v, v
        lo_r, hi_r = rational_nth_root_bounds(
            self.beta**self.step * self.gamma, self.step
        )
        return 1 / hi_r, (1 / lo_r if lo_r > 0 else INF)


# ---------------------------------------------------------------------------
# sequence families


def _normalise_explicit(items) -> tuple[tuple[int, int], ...]:
    out = {}
    for n, cnt in dict(items).items():
        n, cnt = int(n), int(cnt)
        if n < 1:
            raise FamilyError("loop lengths start at 1")
        if cnt < 0:
            raise FamilyError("negative loop count")
        if cnt:
            out[n] = cnt
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class SequenceFamily:
    """A closed-form nonnegative integer sequence a(n), n >= 1.

    a(n) is the explicit entry at n plus the contributions of every tail
    whose support contains n (contributions add).
    """

    explicit: tuple[tuple[int, int], ...] = ()
    tails: tuple[LacunaryTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "explicit", _normalise_explicit(self.explicit))
        object.__setattr__(self, "tails", tuple(self.tails))

    @classmethod
    def make(cls, explicit=None, tails=()) -> "SequenceFamily":
        return cls(tuple((explicit or {}).items()), tuple(tails))

    # -- queries ------------------------------------------------------------

    def count(self, n: int) -> int:
        c = dict(self.explicit).get(n, 0)
        for t in self.tails:
            c += t.count_at(n)
        return c

    def counts_prefix(self, horizon: int) -> tuple[int, ...]:
        """(0, a(1), ..., a(horizon)); index 0 is a placeholder."""
        vals = [0] * (horizon + 1)
        for n, cnt in self.explicit:
            if n <= horizon:
                vals[n] += cnt
        for t in self.tails:
            for k in t.indices_upto(horizon):
                vals[t.s(k)] += t.count_at_index(k)
        return tuple(vals)

    def support_upto(self, horizon: int) -> list[tuple[int, int]]:
        vals = self.counts_prefix(horizon)
        return [(n, vals[n]) for n in range(1, horizon + 1) if vals[n]]

    def is_zero(self) -> bool:
        if self.explicit:
            return False
        return not self.tails

    def first_support(self) -> int:
        best = None
        for n, _ in self.explicit:
            best = n if best is None else min(best, n)
        for t in self.tails:
            first = t.s(t.k0)
            best = first if best is None else min(best, first)
        if best is None:
            raise FamilyError("empty family has no support")
        return best

    def has_unbounded_support(self) -> bool:
        return bool(self.tails)

    def total_loops_at_least(self, m: int) -> bool:
        """Whether sum of all counts is >= m (cheap; tails are infinite)."""
        if self.tails:
            return True
        return sum(c for _, c in self.explicit) >= m

    def loop_length_gcd(self, probe: int = 64) -> int:
        """gcd of the support; computed from the first `probe` support points."""
        g = 0
        seen = 0
        for n, _ in self.explicit:
            g = math.gcd(g, n)
            seen += 1
        for t in self.tails:
            k = t.k0
            picked = 0
            while picked < probe:
                if k not in t.excluded:
                    g = math.gcd(g, t.s(k))
                    picked += 1
                    if g == 1:
                        return 1
                k += 1
        if g == 1 or seen or self.tails:
            return max(g, 1)
        raise FamilyError("empty family")

    # -- edits (all return new families) -------------------------------------

    def add_loops(self, n: int, m: int) -> "SequenceFamily":
        if n < 1 or m < 1:
            raise FamilyError("need a positive length and count")
        ex = dict(self.explicit)
        ex[n] = ex.get(n, 0) + m
        return SequenceFamily(tuple(ex.items()), self.tails)

    def remove_loops(self, n: int, m: int = 1) -> "SequenceFamily":
        """Remove m loops of length n; a tail hit at n is folded to explicit."""
        if self.count(n) < m:
            raise PreconditionError(f"fewer than {m} loops of length {n}")
        ex = dict(self.explicit)
        tails = []
        for t in self.tails:
            k = t.index_of(n)
            if k is None:
                tails.append(t)
            else:
                ex[n] = ex.get(n, 0) + t.count_at_index(k)
                tails.append(
                    LacunaryTerm(
                        t.shape, t.k0, t.c, t.beta, t.gamma, t.power_base,
                        t.step, t.shift, t.floor, t.excluded | {k},
                    )
                )
        ex[n] = ex.get(n, 0) - m
        return SequenceFamily(tuple(ex.items()), tuple(tails))

    def drop_below(self, n_min: int) -> "SequenceFamily":
        """Remove every loop of length < n_min."""
        ex = tuple((n, c) for n, c in self.explicit if n >= n_min)
        tails = []
        for t in self.tails:
            k = t.k0
            while t.s(k) < n_min:
                k += 1
            tails.append(
                LacunaryTerm(
                    t.shape, k, t.c, t.beta, t.gamma, t.power_base,
                    t.step, t.shift, t.floor,
                    frozenset(j for j in t.excluded if j >= k),
                )
            )
        return SequenceFamily(ex, tuple(tails))

    def truncate(self, n_min: int, n_max: int) -> "SequenceFamily":
        """Explicit-only family over the length window [n_min, n_max]."""
        ex = {n: c for n, c in self.support_upto(n_max) if n >= n_min}
        if not ex:
            raise FamilyError("empty truncation window")
        return SequenceFamily.make(ex)


# ---------------------------------------------------------------------------
# evaluation


def _excluded_adjust(term: LacunaryTerm, x: Fraction, weighted: bool) -> Fraction:
    """Exact total of the excluded indices' contributions at x."""
    total = Q(0)
    for k in term.excluded:
        s = term.s(k)
        v = term.c * term.gamma**k * (term.beta * x) ** s
        total += s * v if weighted else v
    return total


def _tail_eval(term: LacunaryTerm, x: Fraction, tol_exp: int, weighted: bool) -> SeriesValue:
    """Certified value of one tail's series at x > 0 (weight n optional).

    Raises UnsupportedRegimeError outside the rigorous-bound regime.
    Floor-flagged tails are never exact: counts are bounded above by the
    un-floored value and below by it minus the partial's term count, so we
    return enclosures from partial sums plus the un-floored tail bound.
    """
    y = term.beta * x
    g = term.gamma
    c = term.c

    def exact_or_adjusted(v: Fraction) -> SeriesValue:
        return SeriesValue.exact(v - _excluded_adjust(term, x, weighted))

    if term.shape in ("all", "arithmetic"):
        step = 1 if term.shape == "all" else term.step
        shift = 0 if term.shape == "all" else term.shift
        q = g * y**step
        pref = c * y**shift
        if q >= 1:
            # terms pref*(step*k+shift)^w * q^k do not tend to 0
            return SeriesValue.divergent()
        if term.floor:
            return _partial_plus_tail(term, x, tol_exp, weighted)
        if weighted:
            v = pref * (
                step * power_weighted_sum(q, term.k0, 1)
                + shift * power_weighted_sum(q, term.k0, 0)
            )
        else:
            v = pref * geometric_sum(q, term.k0)
        return exact_or_adjusted(v)

    # squares / powers: superlinear support
    if y > 1:
        return SeriesValue.divergent()
    if y == 1:
        if term.shape == "squares":
            if g >= 1:
                return SeriesValue.divergent()
            if term.floor:
                return _partial_plus_tail(term, x, tol_exp, weighted)
            v = c * power_weighted_sum(g, term.k0, 2 if weighted else 0)
            return exact_or_adjusted(v)
        # powers: weighted terms are (b*gamma)^k
        qb = g * term.power_base if weighted else g
        if qb >= 1:
            return SeriesValue.divergent()
        if term.floor:
            return _partial_plus_tail(term, x, tol_exp, weighted)
        if weighted:
            v = c * geometric_sum(qb, term.k0)
        else:
            v = c * geometric_sum(g, term.k0)
        return exact_or_adjusted(v)

    # y < 1
    if g >= 1 and not weighted:
        raise UnsupportedRegimeError(
            "tail bound requires gamma < 1 when beta*x < 1"
        )
    return _partial_plus_tail(term, x, tol_exp, weighted)


def _partial_plus_tail(term: LacunaryTerm, x: Fraction, tol_exp: int, weighted: bool) -> SeriesValue:
    """Partial sum to K plus a rigorous tail bound, K grown to the tolerance."""
    y = term.beta * x
    g = term.gamma
    c = term.c
    width = Q(1, 2) ** (-tol_exp)
    K = term.k0 + 8
    if term.excluded:
        K = max(K, max(term.excluded))
    for _ in range(200):
        tail = _tail_bound(term, y, g, c, K, weighted)
        if tail is not None and tail <= width:
            partial = Q(0)
            for k in range(term.k0, K + 1):
                if k in term.excluded:
                    continue
                s = term.s(k)
                v = c * g**k * y**s
                if term.floor:
                    v = Q(frac_floor(c * term.beta**s * g**k)) * x**s
                partial += s * v if weighted else v
            return SeriesValue.interval(partial, partial + tail, tail)
        K = K * 2 if tail is None else K + max(4, K // 2)
    raise ExactnessError("tail bound did not reach the requested tolerance")


def _tail_bound(term, y, g, c, K, weighted) -> Fraction | None:
    """Rigorous bound for the sum over k > K, or None if K is too small.

    Unweighted (gamma < 1): sum_{k>K} c g^k y^{s(k)} <= c y^{s(K+1)} g^{K+1}/(1-g),
    using s increasing and y <= 1.  Weighted: same y^{s(K+1)} pull-out with an
    exact closed form or ratio-bounded geometric majorant for sum s(k) g^k.
    """
    if term.shape in ("all", "arithmetic"):
        step = 1 if term.shape == "all" else term.step
        shift = 0 if term.shape == "all" else term.shift
        q = g * y**step
        if q >= 1:
            return None
        pref = c * y**shift
        if not weighted:
            return pref * geometric_sum(q, K + 1)
        return pref * (
            step * power_weighted_sum(q, K + 1, 1)
            + shift * power_weighted_sum(q, K + 1, 0)
        )
    sK1 = term.s(K + 1)
    head = c * y**sK1
    if not weighted:
        if g >= 1:
            return None
        return head * g ** (K + 1) / (1 - g)
    if term.shape == "squares":
        if g < 1:
            return head * power_weighted_sum(g, K + 1, 2)
        return None
    # powers
    qb = g * term.power_base
    if qb < 1:
        return head * geometric_sum(qb, K + 1)
    # ratio route: term(k+1)/term(k) = qb * y^{s(k)(b-1)} is decreasing in k
    ratio = qb * y ** (sK1 * (term.power_base - 1))
    if ratio <= Q(1, 2):
        first = c * sK1 * g ** (K + 1) * y**sK1
        return 2 * first
    return None


def family_eval(
    family: SequenceFamily,
    x: Fraction,
    tol_exp: int = -40,
    weighted: bool = False,
) -> SeriesValue:
    """Certified value of sum a(n) x**n (or sum n a(n) x**n with weighted=True).

    Exact whenever every tail reduces to a geometric closed form at x;
    otherwise an interval of width <= 2**tol_exp, or Diverges.
    """
    x = Q(x)
    if x <= 0:
        raise PreconditionError("evaluation point must be positive")
    per_term_tol = tol_exp - max(1, len(family.tails)).bit_length()
    total = SeriesValue.exact(
        sum(
            ((n * cnt) if weighted else cnt) * x**n
            for n, cnt in family.explicit
        )
        if family.explicit
        else Q(0)
    )
    for t in family.tails:
        total = total.plus(_tail_eval(t, x, per_term_tol, weighted))
        if total.diverges:
            return total
    return total


def family_eval_partial(
    family: SequenceFamily, x: Fraction, terms: int, weighted: bool = False
) -> Fraction:
    """Exact sum of the first `terms` nonzero support contributions at x.

    Useful as a divergence certificate: partial sums of a divergent
    weighted series grow without bound.
    """
    x = Q(x)
    points: list[int] = []
    horizon = 4
    while len(points) < terms:
        points = [n for n, _ in family.support_upto(horizon)]
        if horizon > 2**40:
            break
        horizon *= 2
    total = Q(0)
    for n in points[:terms]:
        v = family.count(n) * x**n
        total += n * v if weighted else v
    return total


def family_radius(family: SequenceFamily) -> RadiusInfo:
    """Radius of convergence of sum a(n) z**n, exact for the built-in shapes.

    A family with no tails is a polynomial: infinite radius.
    """
    if family.is_zero():
        raise FamilyError("zero family has no radius")
    if not family.tails:
        return RadiusInfo("L", INF, INF)
    lo = hi = None
    for t in family.tails:
        tlo, thi = t.radius()
        lo = tlo if lo is None else min(lo, tlo)
        hi = thi if hi is None else min(hi, thi)
    return RadiusInfo("L", lo, hi)


def hadamard_estimate(coeffs, window: int = 32) -> RadiusInfo:
    """Non-rigorous radius estimate 1/limsup c(n)**(1/n) from a prefix.

    Takes the last `window` nonzero coefficients, works in the log domain,
    and returns the spread as an (unrigorous) interval.  Finite data cannot
    certify a limsup; the result is flagged rigorous=False.
    """
    if isinstance(coeffs, CountTable):
        values = coeffs.values
    else:
        values = tuple(coeffs)
    pts = [(n, c) for n, c in enumerate(values) if n >= 1 and c > 0]
    if not pts:
        raise PreconditionError("all-zero coefficients")
    pts = pts[-window:]
    rates = [math.log(c) / n if c > 1 else 0.0 for n, c in pts]
    top = max(rates)
    low = min(rates)
    lo = Q(math.exp(-top)).limit_denominator(10**12)
    hi = Q(math.exp(-low)).limit_denominator(10**12)
    if lo > hi:
        lo, hi = hi, lo
    return RadiusInfo("R", lo, hi, rigorous=False)


def solve_F_eq_1(family: SequenceFamily, tol_exp: int = -40) -> RadiusInfo:
    """Certified enclosure of the unique x in (0, L) with F(x) = 1.

    Bisection on rationals; F is increasing, each midpoint evaluated with a
    matching certified tolerance.  Precondition: F(L) > 1 or divergent
    (otherwise the root is L itself and no search is needed).
    """
    L = family_radius(family)
    if not L.is_exact:
        raise ExactnessError("radius enclosure too weak for root bracketing")
    Lv = L.value

    def F(x, t=-20):
        return family_eval(family, x, tol_exp=t)

    if is_finite(Lv):
        f_at_L = F(Lv)
        if not (f_at_L.diverges or f_at_L.certainly_gt(1)):
            raise PreconditionError(
                "F(L) <= 1: the radius itself is the root; no search applies"
            )
        cands = (Lv * (1 - Q(1, 2) ** j) for j in range(1, 200))
    else:
        cands = (Q(2) ** j for j in range(0, 200))

    hi = None
    for cand in cands:
        if cand <= 0:
            continue
        fv = F(cand)
        if fv.equals(1):
            return RadiusInfo.exact_value("R", cand)
        if fv.certainly_gt(1):
            hi = cand
            break
    if hi is None:
        raise ExactnessError("failed to bracket the root from above")
    lo = hi / 2
    for _ in range(400):
        fv = F(lo)
        if fv.equals(1):
            return RadiusInfo.exact_value("R", lo)
        if fv.certainly_lt(1):
            break
        lo = lo / 2
    else:
        raise ExactnessError("failed to bracket the root from below")

    width = Q(1, 2) ** (-tol_exp)
    ev_tol = tol_exp - 8
    while hi - lo > width:
        mid = (lo + hi) / 2
        fv = F(mid, ev_tol)
        if fv.equals(1):
            return RadiusInfo.exact_value("R", mid)
        if fv.certainly_gt(1):
            hi = mid
        elif fv.certainly_lt(1):
            lo = mid
        else:
            ev_tol -= 16
            if ev_tol < -600:
                raise ExactnessError("evaluation cannot separate F(x) from 1")
    return RadiusInfo("R", lo, hi)
