"""Exact evaluation of the alternating-sum character formula.

The formula ch = (1/j) D^{-1} sum_w sgn(w) w(e^{s} / prod_{T}(1 + e^{-beta}))
is evaluated with denominators cleared: the odd denominator identity
e^{rho_1} prod_{pos odd}(1 + e^{-beta}) = D_1 turns the T-quotient into the
complementary product, so the Weyl sum acts on one pre-expanded integer
polynomial and the only divisions are by the binomial factors of D_0 and by
the integer j, both exact with divisibility asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import (
    LaurentPolynomial,
    Weight,
    divide_by_factors,
    evaluate_at_one,
    monomial,
)
from .hook import HookPartition, highest_weight_via_reflections, natural_weight
from .atyp import NotTame, TamenessReport, is_tame
from .rootdata import (
    FAMILY_D,
    Algebra,
    BorelData,
    FamilyMismatch,
    Root,
    b_standard,
    in_rational_span,
    sigma_twist,
    weyl_alternating_sum,
)


class JDivisibilityFailure(Exception):
    """The assembled alternating sum is not divisible by j."""


@dataclass(frozen=True)
class CharacterResult:
    character: LaurentPolynomial
    highest_weight: Weight
    borel_used: BorelData
    T_used: tuple[Root, ...]
    j_used: int
    dimension: int

    def to_json(self) -> dict:
        from .exactnum import poly_to_json

        return {
            "hw": self.highest_weight.display(),
            "borel": str(self.borel_used.sequence),
            "T": [str(r) for r in self.T_used],
            "j": self.j_used,
            "dim": str(self.dimension),
            "character": poly_to_json(self.character),
        }


def denominators(b: BorelData) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Expanded product forms of the even and odd Weyl denominators."""
    rank = b.algebra.rank
    d0 = LaurentPolynomial.one(rank)
    for f in _even_denominator_factors(b):
        d0 = d0 * f
    d1 = LaurentPolynomial.one(rank)
    for r in sorted(b.pos_odd, key=lambda r: r.weight.exponent_key()):
        half = r.weight.half()
        d1 = d1 * (monomial(half, 1) + monomial(-half, 1))
    return d0, d1


def _even_denominator_factors(b: BorelData) -> list[LaurentPolynomial]:
    out = []
    for r in sorted(b.pos_even, key=lambda r: r.weight.exponent_key()):
        half = r.weight.half()
        out.append(monomial(half, 1) + monomial(-half, -1))
    return out


def _cleared_sum(
    b: BorelData,
    shifted: Weight,
    excluded_odd: set[Root],
    staged: bool,
    threads: int,
) -> LaurentPolynomial:
    """sum_w sgn(w) w(e^{shifted + rho_1} prod_{pos odd minus excluded}(1+e^{-beta}))
    divided exactly by D_0."""
    alg = b.algebra
    seed = monomial(shifted + b.rho_odd, 1)
    for r in sorted(b.pos_odd, key=lambda r: r.weight.exponent_key()):
        if r in excluded_odd:
            continue
        seed = seed * (LaurentPolynomial.one(alg.rank) + monomial(-r.weight, 1))
    numerator = weyl_alternating_sum(alg, seed, staged=staged, threads=threads)
    return divide_by_factors(numerator, _even_denominator_factors(b))


def _scalar_divide(p: LaurentPolynomial, j: int) -> LaurentPolynomial:
    if j == 1:
        return p
    out = {}
    for exp, coef in p.terms.items():
        q, r = divmod(coef, j)
        if r:
            raise JDivisibilityFailure(f"coefficient {coef} at {exp} not divisible by {j}")
        out[exp] = q
    return LaurentPolynomial(p.rank, out)


def kw_character(
    lam: HookPartition,
    alg: Algebra,
    minus: bool = False,
    staged: bool = False,
    threads: int = 1,
) -> CharacterResult:
    """Character of the irreducible with the given (tame) highest weight.

    Typical modules use the standard Borel with an empty distinguished set;
    atypical tame modules use the canonical witness Borel.  The minus twin
    is the diagram twist of the plain result.
    """
    report = is_tame(lam, alg)
    if not report.tame:
        raise NotTame(f"{lam} is not tame over {alg.osp_name()}")
    if minus and alg.family != FAMILY_D:
        raise FamilyMismatch("minus twin exists only in family D")

    if report.atypicality_k == 0:
        b = b_standard(alg)
        T: tuple[Root, ...] = ()
    else:
        b = report.witness_borel
        T = report.distinguished_T
    j = report.j_lambda

    lam_b = highest_weight_via_reflections(lam, b, minus=False)
    for r in T:
        assert r in b.pos_odd
    poly = _cleared_sum(b, lam_b + b.rho, set(T), staged, threads)
    poly = _scalar_divide(poly, j)

    hw_plus, hw_minus = natural_weight(lam)
    if minus:
        poly = sigma_twist(alg, poly)
        hw = hw_minus
        b_used = sigma_twist(alg, b)
        T_used = tuple(sigma_twist(alg, r) for r in T)
    else:
        hw = hw_plus
        b_used = b
        T_used = T
    return CharacterResult(
        character=poly,
        highest_weight=hw,
        borel_used=b_used,
        T_used=T_used,
        j_used=j,
        dimension=evaluate_at_one(poly),
    )


def kw_character_with_borel(
    lam: HookPartition,
    alg: Algebra,
    b: BorelData,
    T: tuple[Root, ...],
    j: int,
    minus: bool = False,
    staged: bool = False,
    threads: int = 1,
) -> LaurentPolynomial:
    """The raw formula for an arbitrary Borel and distinguished set.

    Used for the Borel-independence checks; no tameness screening here.
    """
    lam_b = highest_weight_via_reflections(lam, b, minus=minus)
    poly = _cleared_sum(b, lam_b + b.rho, set(T), staged, threads)
    return _scalar_divide(poly, j)


def canonical_levi_roots(b: BorelData, report: TamenessReport) -> tuple[Root, ...]:
    """Simple roots of the canonical Levi attached to a tameness report.

    B: the right-most 2k nodes of the odd-Borel diagram; D with
    lambda_{n+1} < m: the right-most 2k + e nodes; D with lambda_{n+1} = m
    (no e value in the report): the single sl(1|1) node d_i + e_m.  Typical
    modules get the empty Levi.
    """
    k = report.atypicality_k
    if k == 0:
        return ()
    if b.algebra.family == FAMILY_D and report.e_lambda is None:
        return report.distinguished_T
    count = 2 * k + (report.e_lambda or 0)
    return b.simple_roots[-count:]


def euler_char_character(
    levi_simple_roots: tuple[Root, ...],
    lam_b: Weight,
    b: BorelData,
    staged: bool = False,
    threads: int = 1,
) -> LaurentPolynomial:
    """Euler characteristic character of the parabolic Verma head, for a
    one-dimensional Levi module of b-highest weight lam_b.

    Evaluated in the u_1 form: the seed carries the product over odd
    nilradical roots, avoiding any division by Levi factors.
    """
    levi_weights = [r.weight for r in levi_simple_roots]
    excluded = {
        r for r in b.pos_odd if levi_weights and in_rational_span(levi_weights, r.weight)
    }
    return _cleared_sum(b, lam_b + b.rho, excluded, staged, threads)


def supercharacter(cr: CharacterResult) -> LaurentPolynomial:
    """Flip signs on weight spaces of odd parity relative to the top weight.

    Parity is graded by the total d-degree: odd roots shift it by one, even
    roots by zero or two.
    """
    n = cr.highest_weight.n
    hw_d = sum(cr.highest_weight.exponent_key()[:n])
    assert hw_d % 2 == 0
    hw_parity = (hw_d // 2) % 2
    out = {}
    for exp, coef in cr.character.terms.items():
        total = sum(exp[:n])
        assert total % 2 == 0
        out[exp] = coef if (total // 2) % 2 == hw_parity else -coef
    return LaurentPolynomial(cr.character.rank, out)


def dimension(cr: CharacterResult) -> int:
    return evaluate_at_one(cr.character)


def monomial_text(p: LaurentPolynomial, n: int, m: int) -> str:
    """Render in the variables x_i = e^{e_i}, y_j = e^{d_j}.

    Exponents print doubled-halved, so x1^(1/2) can occur in denominators.
    """

    def power(name: str, doubled: int) -> str:
        if doubled == 0:
            return ""
        if doubled == 2:
            return name
        if doubled % 2 == 0:
            return f"{name}^{doubled // 2}"
        return f"{name}^({doubled}/2)"

    chunks = []
    for exp, coef in p.sorted_terms():
        factors = [power(f"y{j + 1}", exp[j]) for j in range(n)]
        factors += [power(f"x{i + 1}", exp[n + i]) for i in range(m)]
        factors = [f for f in factors if f]
        body = "*".join(factors)
        if not body:
            chunks.append(str(coef))
        elif coef == 1:
            chunks.append(body)
        elif coef == -1:
            chunks.append(f"-{body}")
        else:
            chunks.append(f"{coef}*{body}")
    return " + ".join(chunks).replace("+ -", "- ") if chunks else "0"
