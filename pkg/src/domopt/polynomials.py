"""Exact integer polynomials and certified pointwise comparison on [0, inf).

Everything here is integer or rational arithmetic; floating point is never
used for a verdict.  The comparison engine decides the sign behavior of a
difference polynomial exactly: a coefficient-sign fast path settles the
common cases, and otherwise real roots are isolated with Sturm sequences
and rational bisection.  Degenerate tangencies (even-multiplicity roots)
are reported as touch points rather than crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Comparison relations.
EQUAL = "equal"
FIRST_DOMINATES = "first-dominates"
SECOND_DOMINATES = "second-dominates"
CROSSING = "crossing"


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored lowest degree first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple and degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPoly":
        return IntPoly((0,) * degree + (coeff,))

    @staticmethod
    def one_plus_x_pow(n: int) -> "IntPoly":
        """(1+x)^n via the binomial row."""
        from math import comb

        return IntPoly(tuple(comb(n, i) for i in range(n + 1)))

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        """Highest index with a nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if i == 0 else (f"{a}*x^{i}" if i > 1 else f"{a}*x"))
        return "IntPoly(" + " + ".join(terms) + ")"

    # -- exact ring arithmetic ------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(a * other for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * a for i, a in enumerate(self.coeffs) if i)) \
            if len(self.coeffs) > 1 else IntPoly()

    def __call__(self, x):
        """Exact Horner evaluation; Fraction in, Fraction (or int) out."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    # -- helpers ---------------------------------------------------------------

    def content(self) -> int:
        from math import gcd

        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content (sign of the leading coefficient is kept)."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(tuple(a // g for a in self.coeffs))

    def shift_up(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def valuation(self) -> int:
        """Multiplicity of the root at 0 (0 for nonzero constant term)."""
        if self.is_zero:
            raise ValueError("valuation of the zero polynomial")
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        raise AssertionError("unreachable")

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> list[str]:
        """JSON form: decimal coefficient strings, lowest degree first."""
        return [str(a) for a in self.coeffs]

    @staticmethod
    def from_json(data) -> "IntPoly":
        return IntPoly(int(s) for s in data)


def eval_rational(p: IntPoly, x) -> Fraction:
    """Exact evaluation at a rational point."""
    return Fraction(p(Fraction(x)))


# -- rational-coefficient helpers (internal) ----------------------------------


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals (dense lists, low degree first)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        q = r[-1] / lead
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] -= q * bi
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _to_primitive_int(fr: list[Fraction]) -> IntPoly:
    """Clear denominators and contents with a positive scale factor."""
    if not fr:
        return IntPoly()
    from math import lcm

    den = 1
    for a in fr:
        den = lcm(den, a.denominator)
    return IntPoly(tuple(int(a * den) for a in fr)).primitive()


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        a, b = b, _frac_rem(a, b)
    g = _to_primitive_int(a)
    if g.coeffs and g.coeffs[-1] < 0:
        g = -g
    return g


def poly_divexact(p: IntPoly, d: IntPoly) -> IntPoly:
    """Exact quotient p/d; raises if the division leaves a remainder."""
    if d.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in d.coeffs]
    out: list[Fraction] = [Fraction(0)] * (max(len(a) - len(b) + 1, 0))
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        q = r[-1] / lead
        shift = len(r) - 1 - db
        out[shift] = q
        for i, bi in enumerate(b):
            r[shift + i] -= q * bi
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ValueError("division is not exact")
    if any(c.denominator != 1 for c in out):
        # Quotient over Q of two integer polynomials need not be integral,
        # but every call site divides by a factor, so it must be here.
        raise ValueError("quotient has non-integer coefficients")
    return IntPoly(tuple(int(c) for c in out))


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), primitive.  Same root set, all multiplicities one."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    d = p.derivative()
    if d.is_zero:
        return IntPoly.one()
    g = poly_gcd(p, d)
    if g.degree == 0:
        return p.primitive()
    # g is primitive, so the quotient of the integer polynomial p is integral
    return poly_divexact(p, g).primitive()


# -- Sturm sequences -----------------------------------------------------------


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of p: p, p', then negated Euclidean remainders.

    Each element is normalized to a primitive integer polynomial by a
    positive rational factor, which preserves all sign information.
    """
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero:
        return chain
    chain.append(d.primitive())
    while True:
        a = [Fraction(c) for c in chain[-2].coeffs]
        b = [Fraction(c) for c in chain[-1].coeffs]
        r = _frac_rem(a, b)
        if not r:
            break
        chain.append(_to_primitive_int([-c for c in r]))
        if chain[-1].degree == 0:
            break
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    seq = [s for s in signs if s]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def _variations_at(chain: list[IntPoly], x) -> int:
    return _variations([_sign(f(x)) for f in chain])


def _variations_at_inf(chain: list[IntPoly], positive: bool) -> int:
    signs = []
    for f in chain:
        if f.is_zero:
            signs.append(0)
            continue
        s = _sign(f.coeffs[-1])
        if not positive and (len(f.coeffs) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _divide_out_root(p: IntPoly, r: Fraction) -> tuple[IntPoly, int]:
    """Strip all (x - r) factors; returns (reduced primitive poly, multiplicity).

    Division is by the primitive factor (den*x - num), so the quotient of an
    integer polynomial stays integral (Gauss's lemma).
    """
    mult = 0
    while not p.is_zero and p(r) == 0:
        p = poly_divexact(p, IntPoly((-r.numerator, r.denominator))).primitive()
        mult += 1
    return p, mult


def sturm_root_count(p: IntPoly, interval) -> int:
    """Exact number of distinct real roots of p in an open rational interval.

    The interval is a pair (a, b); either end may be None for -inf/+inf.
    Roots at the endpoints are stripped first, so they never count.
    """
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    a, b = interval
    a = Fraction(a) if a is not None else None
    b = Fraction(b) if b is not None else None
    if a is not None and b is not None and a >= b:
        return 0
    if a is not None:
        p, _ = _divide_out_root(p, a)
    if b is not None:
        p, _ = _divide_out_root(p, b)
    s = squarefree_part(p)
    if s.degree <= 0:
        return 0
    chain = sturm_chain(s)
    va = _variations_at(chain, a) if a is not None else _variations_at_inf(chain, False)
    vb = _variations_at(chain, b) if b is not None else _variations_at_inf(chain, True)
    return va - vb


def cauchy_root_bound(p: IntPoly) -> int:
    """Integer B with every real root strictly below B in absolute value."""
    if p.is_zero or p.degree == 0:
        return 1
    lead = abs(p.coeffs[-1])
    biggest = max(abs(a) for a in p.coeffs[:-1])
    return 1 + (biggest + lead - 1) // lead  # 1 + ceil(max/|lead|)


def isolate_real_roots(s: IntPoly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, each holding exactly one root of s.

    Requires s squarefree with s(lo) != 0 and s(hi) != 0; every returned
    interval satisfies lo < a < b < hi is not required, but a root never
    sits on an endpoint and each interval has a Sturm count of one.
    """
    chain = sturm_chain(s)

    def count(a: Fraction, b: Fraction) -> int:
        return _variations_at(chain, a) - _variations_at(chain, b)

    out: list[tuple[Fraction, Fraction]] = []
    work = [(lo, hi)]
    while work:
        a, b = work.pop()
        c = count(a, b)
        if c == 0:
            continue
        if c == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if s(m) == 0:
            # exact rational root at the midpoint: carve a window around it
            w = (b - a) / 4
            while True:
                a2, b2 = m - w, m + w
                if s(a2) != 0 and s(b2) != 0 and count(a2, b2) == 1:
                    break
                w /= 2
            out.append((a2, b2))
            work.append((a, a2))
            work.append((b2, b))
        else:
            work.append((a, m))
            work.append((m, b))
    return sorted(out)


def _shrink_interval(s: IntPoly, chain, a: Fraction, b: Fraction,
                     away_lo: Fraction | None, away_hi: Fraction | None):
    """Refine an isolating interval so it avoids the given boundary points."""

    def count(x: Fraction, y: Fraction) -> int:
        return _variations_at(chain, x) - _variations_at(chain, y)

    while (away_lo is not None and a <= away_lo) or (away_hi is not None and b >= away_hi):
        m = (a + b) / 2
        if s(m) == 0:
            w = (b - a) / 8
            while True:
                a2, b2 = m - w, m + w
                if s(a2) != 0 and s(b2) != 0 and count(a2, b2) == 1:
                    break
                w /= 2
            a, b = a2, b2
        elif count(a, m) == 1:
            b = m
        else:
            a = m
    return a, b


# -- comparison verdicts -----------------------------------------------------


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of the exact pointwise comparison of two polynomials.

    relation      one of equal / first-dominates / second-dominates / crossing
    strict        dominating side strictly larger at every interior point
    witnesses     for a crossing: disjoint rational intervals, each isolating
                  exactly one sign-change root of the difference
    touch_points  isolating intervals of even-multiplicity roots (tangencies)
    samples       rational points between the isolated roots with the side
                  that wins there ("first"/"second")
    """

    relation: str
    strict: bool = False
    witnesses: tuple = ()
    touch_points: tuple = ()
    samples: tuple = ()

    @property
    def dominates(self) -> bool:
        return self.relation in (EQUAL, FIRST_DOMINATES)

    @property
    def dominated(self) -> bool:
        return self.relation in (EQUAL, SECOND_DOMINATES)

    def mirrored(self) -> "ComparisonVerdict":
        swap = {FIRST_DOMINATES: SECOND_DOMINATES, SECOND_DOMINATES: FIRST_DOMINATES}
        flip = {"first": "second", "second": "first"}
        return ComparisonVerdict(
            relation=swap.get(self.relation, self.relation),
            strict=self.strict,
            witnesses=self.witnesses,
            touch_points=self.touch_points,
            samples=tuple((x, flip[w]) for x, w in self.samples),
        )

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "strict": self.strict,
            "witnesses": [[str(a), str(b)] for a, b in self.witnesses],
            "touch_points": [[str(a), str(b)] for a, b in self.touch_points],
            "samples": [[str(x), w] for x, w in self.samples],
        }


def _compare_on_open(p: IntPoly, q: IntPoly, hi: Fraction | None) -> ComparisonVerdict:
    """Compare p and q on the open interval (0, hi), hi=None meaning +inf."""
    r = p - q
    if r.is_zero:
        return ComparisonVerdict(EQUAL)

    # fast path: one-signed coefficients decide the whole half-line
    if all(a >= 0 for a in r.coeffs):
        return ComparisonVerdict(FIRST_DOMINATES, strict=True)
    if all(a <= 0 for a in r.coeffs):
        return ComparisonVerdict(SECOND_DOMINATES, strict=True)

    # strip roots at the interval boundary; they do not affect the interior
    reduced = IntPoly(r.coeffs[r.valuation():])
    if hi is not None:
        reduced, _ = _divide_out_root(reduced, hi)

    s = squarefree_part(reduced)
    if s.degree >= 1:
        bound = Fraction(cauchy_root_bound(s)) if hi is None else hi
        intervals = isolate_real_roots(s, Fraction(0), bound)
    else:
        intervals = []

    if intervals:
        chain = sturm_chain(s)
        refined = []
        for i, (a, b) in enumerate(intervals):
            lo_guard = Fraction(0) if i == 0 else None
            hi_guard = hi if (hi is not None and i == len(intervals) - 1) else None
            refined.append(_shrink_interval(s, chain, a, b, lo_guard, hi_guard))
        intervals = refined

    # classify each isolated root by the sign change of r across it
    odd, even = [], []
    for a, b in intervals:
        if _sign(r(a)) != _sign(r(b)):
            odd.append((a, b))
        else:
            even.append((a, b))

    # sample the gaps between consecutive isolated roots
    samples = []
    if intervals:
        pts = [intervals[0][0] / 2]
        for (a1, b1), (a2, b2) in zip(intervals, intervals[1:]):
            pts.append((b1 + a2) / 2)
        last_hi = intervals[-1][1]
        pts.append(last_hi + 1 if hi is None else (last_hi + hi) / 2)
    else:
        pts = [Fraction(1) if hi is None else hi / 2]
    for x in pts:
        v = r(x)
        assert v != 0, "gap samples cannot be roots"
        samples.append((x, "first" if v > 0 else "second"))

    if odd:
        return ComparisonVerdict(
            CROSSING,
            strict=False,
            witnesses=tuple(odd),
            touch_points=tuple(even),
            samples=tuple(samples),
        )

    winner = samples[-1][1]
    relation = FIRST_DOMINATES if winner == "first" else SECOND_DOMINATES
    return ComparisonVerdict(
        relation,
        strict=not even,
        touch_points=tuple(even),
        samples=tuple(samples),
    )


def compare_on_nonneg(p: IntPoly, q: IntPoly) -> ComparisonVerdict:
    """Exact trichotomy of sign(p - q) on [0, inf).

    Equality of the polynomials gives "equal"; a difference with no
    sign-change root on (0, inf) gives a domination verdict (strict when
    the difference has no positive root at all); otherwise "crossing"
    with certified witness intervals and winning sample points.
    """
    return _compare_on_open(p, q, None)


def compare_on_unit_interval(p: IntPoly, q: IntPoly) -> ComparisonVerdict:
    """Same decision procedure restricted to the open interval (0, 1)."""
    return _compare_on_open(p, q, Fraction(1))


# -- lexicographic (asymptotic) orders ------------------------------------------


def lex_small_x_compare(p: IntPoly, q: IntPoly) -> int:
    """Which polynomial is larger for all sufficiently small x > 0.

    Returns +1 if p wins, -1 if q wins, 0 if p == q.  The first
    coefficient difference scanning upward from degree 0 decides.
    """
    top = max(len(p.coeffs), len(q.coeffs))
    for i in range(top):
        d = p[i] - q[i]
        if d:
            return 1 if d > 0 else -1
    return 0


def lex_large_x_compare(p: IntPoly, q: IntPoly) -> int:
    """Which polynomial is larger for all sufficiently large x.

    Returns +1 if p wins, -1 if q wins, 0 if p == q.  The first
    coefficient difference scanning downward from the top degree decides.
    """
    top = max(len(p.coeffs), len(q.coeffs))
    for i in range(top - 1, -1, -1):
        d = p[i] - q[i]
        if d:
            return 1 if d > 0 else -1
    return 0
