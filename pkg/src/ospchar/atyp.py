"""Typicality, degree of atypicality, distinguished root sets, and tameness.

The degree of atypicality of a shifted highest weight is the maximum number
of mutually orthogonal isotropic positive roots orthogonal to it.  Mutual
orthogonality forces distinct d-indices and distinct e-indices, so the
degree is a maximum bipartite matching; production uses augmenting paths,
the tests keep a subset brute force as the oracle.

Tameness is decided on the standard-Borel shifted weight, always through
the pairing (the (d,d) = -1 sign convention makes an eyeballed entry
comparison wrong).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactnum import Weight
from .hook import HookPartition, HookViolation, natural_weight, transpose
from .rootdata import (
    FAMILY_B,
    FAMILY_D,
    Algebra,
    BorelData,
    EpsDeltaSequence,
    FamilyMismatch,
    Root,
    b_odd,
    b_standard,
    borel_from_sequence,
    make_root,
    pairing,
    sigma_twist,
)


class NotTame(Exception):
    """The requested quantity exists only for tame modules."""


def max_bipartite_matching(edges: dict[int, set[int]], n_left: int) -> dict[int, int]:
    """Kuhn's augmenting paths; returns a maximum left->right assignment."""
    match_right: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in edges.get(u, ()):
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or try_augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(n_left):
        try_augment(u, set())
    return {u: v for v, u in match_right.items()}


def _iso_edges(shifted: Weight, alg: Algebra, minus_only: bool = False) -> dict[int, set[int]]:
    """Edges (i, j), 0-based, where some isotropic positive root on the pair
    (d_{i+1}, e_{j+1}) is orthogonal to the shifted weight."""
    n, m = alg.n, alg.m
    edges: dict[int, set[int]] = {}
    for i in range(1, n + 1):
        di = Weight.basis_delta(n, m, i)
        for j in range(1, m + 1):
            ej = Weight.basis_eps(n, m, j)
            ok = pairing(shifted, di - ej) == 0
            if not ok and not minus_only:
                ok = pairing(shifted, di + ej) == 0
            if ok:
                edges.setdefault(i - 1, set()).add(j - 1)
    return edges


def atypicality_degree(shifted: Weight, alg: Algebra) -> int:
    """Maximum matching between d-entries and e-entries of the shifted weight."""
    return len(max_bipartite_matching(_iso_edges(shifted, alg), alg.n))


@dataclass(frozen=True)
class TamenessReport:
    atypicality_k: int
    tame: bool
    witness_borel: BorelData | None
    distinguished_T: tuple[Root, ...] | None
    e_lambda: int | None
    j_lambda: int | None

    def to_json(self) -> dict:
        return {
            "k": self.atypicality_k,
            "tame": self.tame,
            "T": None if self.distinguished_T is None else [str(r) for r in self.distinguished_T],
            "e": self.e_lambda,
            "j": self.j_lambda,
        }


def e_of_lambda(lam: HookPartition) -> int:
    """i(lambda') - i*(lambda') with empty maxima read as 0; always 0 or 1."""
    m, n = lam.m, lam.n
    lam_t = transpose(lam.parts)

    def t(i: int) -> int:
        return lam_t[i - 1] if i <= len(lam_t) else 0

    i_ge = max((i for i in range(1, m + 1) if t(i) - i + m - n >= 0), default=0)
    i_gt = max((i for i in range(1, m + 1) if t(i) - i + m - n > 0), default=0)
    e = i_ge - i_gt
    assert e in (0, 1)
    return e


def _j_value(alg: Algebra, lam: HookPartition, k: int) -> int:
    if k == 0:
        return 1
    if alg.family == FAMILY_B:
        return math.factorial(k) * 2**k
    if lam.part(alg.n + 1) < alg.m:
        return math.factorial(k) * 2 ** (k - 1 + e_of_lambda(lam))
    return 1


def _d_case_ii_index(shifted: Weight, alg: Algebra) -> int | None:
    """The i with (shifted, d_i + e_m) = 0, if any; unique for hook weights."""
    n, m = alg.n, alg.m
    hits = [
        i
        for i in range(1, n + 1)
        if pairing(shifted, Weight.basis_delta(n, m, i) + Weight.basis_eps(n, m, m)) == 0
    ]
    if not hits:
        return None
    if len(hits) > 1:
        raise RuntimeError("internal error: multiple d_i + e_m atypical pairs")
    return hits[0]


def _case_34_borel(alg: Algebra, i: int) -> BorelData:
    """The Borel d_1..d_{i-1} e_1..e_{m-1} d_i (-e_m) d_{i+1}..d_n.

    For i = n the sequence ends with e_m and the sign mark is vacuous.
    """
    n, m = alg.n, alg.m
    symbols = ("d",) * (i - 1) + ("e",) * (m - 1) + ("d", "e") + ("d",) * (n - i)
    sign = 1 if i == n else -1
    return borel_from_sequence(alg, EpsDeltaSequence(symbols, sign))


def _distinguished_T(alg: Algebra, k: int, case_ii_index: int | None) -> tuple[Root, ...]:
    n, m = alg.n, alg.m
    if case_ii_index is not None:
        return (
            make_root(
                Weight.basis_delta(n, m, case_ii_index) + Weight.basis_eps(n, m, m)
            ),
        )
    roots = []
    for i in range(1, k + 1):
        d = Weight.basis_delta(n, m, n - k + i)
        e = Weight.basis_eps(n, m, m - k + i)
        roots.append(make_root(e - d) if alg.family == FAMILY_B else make_root(d - e))
    return tuple(roots)


def is_tame(lam: HookPartition, alg: Algebra, minus: bool = False) -> TamenessReport:
    """Classify L of the plain (or minus-twisted) natural weight.

    Typical modules come back tame with an empty distinguished set and
    j = 1; the minus flag only twists the witness data, tameness itself
    being symmetric under the diagram twist.
    """
    if lam.n != alg.n or lam.m != alg.m:
        raise HookViolation("partition ambient does not match the algebra")
    if minus and alg.family != FAMILY_D:
        raise FamilyMismatch("minus twin exists only in family D")

    plus, _ = natural_weight(lam)
    shifted = plus + b_standard(alg).rho
    k = atypicality_degree(shifted, alg)
    e_val = e_of_lambda(lam) if alg.family == FAMILY_D and lam.part(alg.n + 1) < alg.m else None

    if k == 0:
        return TamenessReport(0, True, None, (), e_val, 1)

    case_ii_index: int | None = None
    if alg.family == FAMILY_B or lam.part(alg.n + 1) < alg.m:
        minus_k = len(max_bipartite_matching(_iso_edges(shifted, alg, minus_only=True), alg.n))
        tame = minus_k == k
    else:
        case_ii_index = _d_case_ii_index(shifted, alg)
        tame = case_ii_index is not None and k == 1

    if not tame:
        return TamenessReport(k, False, None, None, e_val, None)

    witness = _case_34_borel(alg, case_ii_index) if case_ii_index is not None else b_odd(alg)
    T = _distinguished_T(alg, k, case_ii_index)
    j = _j_value(alg, lam, k)
    if minus:
        witness = sigma_twist(alg, witness)
        T = tuple(sigma_twist(alg, r) for r in T)
    return TamenessReport(k, True, witness, T, e_val, j)


def distinguished_T_bodd(lam: HookPartition, alg: Algebra) -> tuple[Root, ...]:
    """The explicit distinguished set for the canonical witness Borel."""
    report = is_tame(lam, alg)
    if not report.tame or report.atypicality_k == 0:
        raise NotTame("distinguished set requires a tame module with k >= 1")
    return report.distinguished_T


def j_lambda(report: TamenessReport, alg: Algebra, lam: HookPartition) -> int:
    if not report.tame:
        raise NotTame("j is defined for tame modules only")
    return _j_value(alg, lam, report.atypicality_k)


# Brute-force oracle, kept for the tests and the acceptance suite.


def atypicality_degree_brute(shifted: Weight, alg: Algebra, borel: BorelData | None = None) -> int:
    """Exhaustive search over sets of mutually orthogonal isotropic positive
    roots orthogonal to the shifted weight."""
    b = borel if borel is not None else b_standard(alg)
    orth = [
        r.weight
        for r in sorted(b.pos_odd, key=lambda r: r.weight.exponent_key())
        if r.is_isotropic and pairing(shifted, r.weight) == 0
    ]

    def grow(idx: int, chosen: list[Weight]) -> int:
        best = len(chosen)
        for t in range(idx, len(orth)):
            cand = orth[t]
            if all(pairing(cand, c) == 0 for c in chosen):
                chosen.append(cand)
                best = max(best, grow(t + 1, chosen))
                chosen.pop()
        return best

    return grow(0, [])
