"""Exact half-integer scalars, weight vectors, and sparse Laurent polynomials.

Everything here is pure integer arithmetic: half-integers are stored doubled,
and Laurent exponent vectors are stored as tuples of doubled integers, so no
rational or floating arithmetic ever occurs.  Coefficients are Python ints
(arbitrary precision).  All values are immutable and safe to share.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


class NotDivisible(Exception):
    """Raised when an exact Laurent division leaves a nonzero remainder."""


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value: int) -> "HalfInt":
        return cls(2 * value)

    @classmethod
    def halves(cls, doubled: int) -> "HalfInt":
        return cls(doubled)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled + other.doubled)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __mul__(self, k: int) -> "HalfInt":
        return HalfInt(self.doubled * k)

    __rmul__ = __mul__

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __bool__(self) -> bool:
        return self.doubled != 0

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_int(self) -> int:
        if self.doubled % 2 != 0:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.doubled})"


ZERO = HalfInt(0)
ONE = HalfInt(2)
HALF = HalfInt(1)


@dataclass(frozen=True)
class Weight:
    """A vector a_1 d_1 + ... + a_n d_n + b_1 e_1 + ... + b_m e_m.

    ``delta`` holds the d-coefficients, ``eps`` the e-coefficients, all exact
    half-integers.  The rank pair (n, m) is implicit in the tuple lengths.
    """

    delta: tuple[HalfInt, ...]
    eps: tuple[HalfInt, ...]

    @classmethod
    def zero(cls, n: int, m: int) -> "Weight":
        return cls((ZERO,) * n, (ZERO,) * m)

    @classmethod
    def basis_delta(cls, n: int, m: int, i: int) -> "Weight":
        """d_i for 1-based i."""
        d = [ZERO] * n
        d[i - 1] = ONE
        return cls(tuple(d), (ZERO,) * m)

    @classmethod
    def basis_eps(cls, n: int, m: int, j: int) -> "Weight":
        """e_j for 1-based j."""
        e = [ZERO] * m
        e[j - 1] = ONE
        return cls((ZERO,) * n, tuple(e))

    @classmethod
    def from_doubled(cls, delta: Iterable[int], eps: Iterable[int]) -> "Weight":
        return cls(tuple(HalfInt(d) for d in delta), tuple(HalfInt(e) for e in eps))

    @classmethod
    def from_ints(cls, delta: Iterable[int], eps: Iterable[int]) -> "Weight":
        return cls(tuple(HalfInt.of(d) for d in delta), tuple(HalfInt.of(e) for e in eps))

    @property
    def n(self) -> int:
        return len(self.delta)

    @property
    def m(self) -> int:
        return len(self.eps)

    def _check(self, other: "Weight") -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError("weight rank mismatch")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            tuple(a + b for a, b in zip(self.eps, other.eps)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            tuple(a - b for a, b in zip(self.delta, other.delta)),
            tuple(a - b for a, b in zip(self.eps, other.eps)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.delta), tuple(-a for a in self.eps))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(a * k for a in self.delta), tuple(a * k for a in self.eps))

    def half(self) -> "Weight":
        """Exact halving; every doubled entry must be even."""
        for h in self.delta + self.eps:
            if h.doubled % 2 != 0:
                raise ValueError("weight is not halvable in the half-integer lattice")
        return Weight(
            tuple(HalfInt(a.doubled // 2) for a in self.delta),
            tuple(HalfInt(a.doubled // 2) for a in self.eps),
        )

    def is_zero(self) -> bool:
        return all(not a for a in self.delta) and all(not a for a in self.eps)

    def exponent_key(self) -> tuple[int, ...]:
        """Doubled exponent vector, delta axes first."""
        return tuple(a.doubled for a in self.delta) + tuple(a.doubled for a in self.eps)

    def display(self) -> str:
        """Paper-style rendering ``(a_1,...,a_n|b_1,...,b_m)`` with halves as p/2."""
        left = ",".join(str(a) for a in self.delta)
        right = ",".join(str(b) for b in self.eps)
        return f"({left}|{right})"


def weight_from_key(key: tuple[int, ...], n: int, m: int) -> Weight:
    if len(key) != n + m:
        raise ValueError("exponent key rank mismatch")
    return Weight.from_doubled(key[:n], key[n:])


class LaurentPolynomial:
    """Finitely supported Z-valued function on the rank-r half-integer lattice.

    ``terms`` maps doubled exponent tuples to nonzero int coefficients.  The
    canonical form (no zero coefficients) makes ``==`` mathematical equality.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[tuple[int, ...], int] | None = None):
        self.rank = rank
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coef in terms.items():
                if coef:
                    if len(exp) != rank:
                        raise ValueError("exponent rank mismatch")
                    clean[exp] = coef
        self.terms = clean

    @classmethod
    def zero(cls, rank: int) -> "LaurentPolynomial":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "LaurentPolynomial":
        return cls(rank, {(0,) * rank: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is structural

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.rank != other.rank:
            raise ValueError("polynomial rank mismatch")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            new = out.get(exp, 0) + coef
            if new:
                out[exp] = new
            else:
                out.pop(exp, None)
        return LaurentPolynomial(self.rank, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.rank, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(exp, 0) + c1 * c2
                if new:
                    out[exp] = new
                else:
                    del out[exp]
        return LaurentPolynomial(self.rank, out)

    __rmul__ = __mul__

    def map_exponents(self, fn) -> "LaurentPolynomial":
        """Apply a bijective lattice map to every exponent; coefficients kept."""
        out: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            out[fn(exp)] = coef
        if len(out) != len(self.terms):
            raise ValueError("exponent map is not injective on the support")
        return LaurentPolynomial(self.rank, out)

    def coefficient(self, w: Weight) -> int:
        return self.terms.get(w.exponent_key(), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending leading-term (lex, delta axes first) order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPolynomial(0)"
        parts = [f"{c}*e{list(e)}" for e, c in self.sorted_terms()[:6]]
        more = "" if len(self.terms) <= 6 else f" ... ({len(self.terms)} terms)"
        return "LaurentPolynomial(" + " + ".join(parts) + more + ")"


def monomial(w: Weight, c: int) -> LaurentPolynomial:
    """The single-term element c*e^w; zero c gives the zero element."""
    rank = w.n + w.m
    if c == 0:
        return LaurentPolynomial.zero(rank)
    return LaurentPolynomial(rank, {w.exponent_key(): c})


def evaluate_at_one(p: LaurentPolynomial) -> int:
    """Substitute every e^g -> 1, i.e. sum all coefficients."""
    return sum(p.terms.values())


def poly_sum(polys: Iterable[LaurentPolynomial], rank: int) -> LaurentPolynomial:
    """Sum in the iteration order given (deterministic reduction)."""
    out: dict[tuple[int, ...], int] = {}
    for p in polys:
        for exp, coef in p.terms.items():
            new = out.get(exp, 0) + coef
            if new:
                out[exp] = new
            else:
                del out[exp]
    return LaurentPolynomial(rank, out)


def _cwise_min(exps: Iterator[tuple[int, ...]], rank: int) -> tuple[int, ...]:
    mins = None
    for e in exps:
        if mins is None:
            mins = list(e)
        else:
            for i, v in enumerate(e):
                if v < mins[i]:
                    mins[i] = v
    assert mins is not None
    return tuple(mins)


def exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Return q with q*den == num, exactly.

    Long division along the lex leading-term order on doubled exponent
    vectors (delta axes before eps axes).  A quotient term escaping the
    componentwise box forced by the support minima, or a coefficient that
    den's leading coefficient does not divide, proves non-divisibility.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return LaurentPolynomial.zero(num.rank)

    rank = num.rank
    num_min = _cwise_min(iter(num.terms), rank)
    den_min = _cwise_min(iter(den.terms), rank)
    # componentwise floor for quotient exponents: min(q) = min(num) - min(den)
    q_floor = tuple(a - b for a, b in zip(num_min, den_min))

    lead = max(den.terms)
    lead_coef = den.terms[lead]
    tail = [(e, c) for e, c in den.terms.items() if e != lead]

    rem = dict(num.terms)
    heap = [tuple(-v for v in e) for e in rem]
    heapq.heapify(heap)
    quotient: dict[tuple[int, ...], int] = {}

    while heap:
        exp = tuple(-v for v in heapq.heappop(heap))
        coef = rem.pop(exp, 0)
        if not coef:
            continue
        q_exp = tuple(a - b for a, b in zip(exp, lead))
        if any(q < f for q, f in zip(q_exp, q_floor)):
            raise NotDivisible("remainder does not vanish")
        q_coef, mod = divmod(coef, lead_coef)
        if mod:
            raise NotDivisible("leading coefficient does not divide")
        quotient[q_exp] = q_coef
        for t_exp, t_coef in tail:
            exp2 = tuple(a + b for a, b in zip(q_exp, t_exp))
            new = rem.get(exp2, 0) - q_coef * t_coef
            if new:
                if exp2 not in rem:
                    heapq.heappush(heap, tuple(-v for v in exp2))
                rem[exp2] = new
            else:
                rem.pop(exp2, None)

    assert not rem
    return LaurentPolynomial(rank, quotient)


def divide_by_factors(num: LaurentPolynomial, factors: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    """Divide sequentially by each factor of a product-form denominator."""
    out = num
    for f in factors:
        out = exact_divide(out, f)
    return out


def poly_to_json(p: LaurentPolynomial) -> list[dict]:
    """JSON form: term objects sorted by the leading-term order, leading first."""
    return [{"exp": list(e), "coef": str(c)} for e, c in p.sorted_terms()]


def poly_from_json(obj: list[dict], rank: int) -> LaurentPolynomial:
    return LaurentPolynomial(rank, {tuple(t["exp"]): int(t["coef"]) for t in obj})
