"""Central-character fingerprints, the dominance order, the bottom-of-block
algorithm, and the finite family of tame weights sharing a type-D k=1 block.

A central character is fingerprinted by removing one matched atypical entry
per pair from the shifted weight and keeping the surviving absolute values;
dominance is decided exactly through simple-root coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import HalfInt, Weight
from .hook import (
    HookPartition,
    HookViolation,
    highest_weight_via_reflections,
    natural_weight,
    transpose,
)
from .atyp import NotTame, e_of_lambda, is_tame, max_bipartite_matching, _iso_edges
from .rootdata import (
    FAMILY_B,
    FAMILY_D,
    Algebra,
    BorelData,
    Root,
    b_standard,
    coords_in_basis,
    make_root,
    pairing,
)


class WrongRegime(Exception):
    """The weight family enumeration applies only in the D-type k=1 regime."""


class InternalError(Exception):
    """A step produced data the underlying theory rules out."""


@dataclass(frozen=True)
class CentralCharFingerprint:
    k: int
    reduced_delta: tuple[HalfInt, ...]
    reduced_eps: tuple[HalfInt, ...]
    eps_sign: int  # +1/-1 when meaningful (family D, k = 0, no zero entries), else 0


def fingerprint(shifted: Weight, alg: Algebra) -> CentralCharFingerprint:
    """Remove greedily matched atypical pairs, keep sorted absolute values.

    Matching is by descending absolute entry value; the edge graph splits
    into complete bipartite blocks per value, so every maximal matching
    removes the same multiset (the tests check this against brute force).
    """
    edges = _iso_edges(shifted, alg)
    matching = max_bipartite_matching(edges, alg.n)
    # re-run greedily by value class for determinism of the removed pairs
    by_abs_d: dict[int, list[int]] = {}
    for i, a in enumerate(shifted.delta):
        by_abs_d.setdefault(abs(a.doubled), []).append(i)
    by_abs_e: dict[int, list[int]] = {}
    for j, b in enumerate(shifted.eps):
        by_abs_e.setdefault(abs(b.doubled), []).append(j)

    removed_d: set[int] = set()
    removed_e: set[int] = set()
    for value in sorted(set(by_abs_d) & set(by_abs_e), reverse=True):
        # |a_i| = |b_j| is exactly the orthogonality edge, so each value class
        # is complete bipartite and contributes min of the two counts
        ds, es = by_abs_d[value], by_abs_e[value]
        take = min(len(ds), len(es))
        removed_d.update(ds[:take])
        removed_e.update(es[:take])

    k = len(matching)
    if len(removed_d) != k:
        raise InternalError("greedy pair removal disagrees with the maximum matching")
    red_d = tuple(sorted((abs(a) for i, a in enumerate(shifted.delta) if i not in removed_d), key=lambda h: h.doubled))
    red_e = tuple(sorted((abs(b) for j, b in enumerate(shifted.eps) if j not in removed_e), key=lambda h: h.doubled))

    eps_sign = 0
    if alg.family == FAMILY_D and k == 0 and all(b.doubled != 0 for b in shifted.eps):
        eps_sign = 1
        for b in shifted.eps:
            if b.doubled < 0:
                eps_sign = -eps_sign
    return CentralCharFingerprint(k, red_d, red_e, eps_sign)


def same_central_character(x: Weight, y: Weight, alg: Algebra) -> bool:
    return fingerprint(x, alg) == fingerprint(y, alg)


def preceq(a: Weight, b: Weight, borel: BorelData) -> bool:
    """Is b - a a nonnegative integer combination of the positive roots?

    Every positive root is a nonnegative integer combination of the simple
    roots, so the positive-root cone equals the simple-root cone and
    membership reduces to one exact linear solve.
    """
    gap = b - a
    coords = coords_in_basis([r.weight for r in borel.simple_roots], gap)
    if coords is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coords)


@dataclass(frozen=True)
class BottomStep:
    before: Weight  # shifted weight entering the step
    chosen_b: HalfInt
    b_tilde: HalfInt
    after: Weight

    def to_json(self) -> dict:
        return {
            "before": self.before.display(),
            "b": str(self.chosen_b),
            "b_tilde": str(self.b_tilde),
            "after": self.after.display(),
        }


@dataclass(frozen=True)
class BottomTrace:
    steps: tuple[BottomStep, ...]
    result: HookPartition

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "result": list(self.result.parts),
        }


def partition_from_shifted(shifted: Weight, alg: Algebra) -> HookPartition:
    """Invert lambda -> lambda^natural + rho for a dominant shifted weight."""
    rho = b_standard(alg).rho
    nat = shifted - rho
    parts_head = [a.as_int() for a in nat.delta]
    kappa = [e.as_int() for e in nat.eps]
    if any(kappa[i] < kappa[i + 1] for i in range(len(kappa) - 1)) or (kappa and kappa[-1] < 0):
        raise InternalError(f"shifted weight {shifted.display()} has no hook partition")
    tail = transpose(tuple(k for k in kappa if k > 0))
    parts = tuple(parts_head) + tail
    try:
        return HookPartition.of(parts, alg.n, alg.m)
    except HookViolation as exc:
        raise InternalError(f"recovered parts {parts} are not a hook partition") from exc


def bottom_of_block(lam: HookPartition, alg: Algebra) -> BottomTrace:
    """Descend to the tame bottom of the block by the replacement rule.

    Each step finds the minimal e-entry b_j > 0 equal to some d-entry with
    -b_j absent on the d-side, shrinks it to the least admissible value,
    and re-sorts; the loop stops at the first tame weight.  The iteration
    cap only converts a latent bug into a diagnosis.
    """
    if lam.n != alg.n or lam.m != alg.m:
        raise HookViolation("partition ambient does not match the algebra")
    rho = b_standard(alg).rho
    half_integral = alg.family == FAMILY_B
    steps: list[BottomStep] = []
    current = lam
    cap = 2 * (lam.size() + (alg.m + alg.n) ** 2) + 16
    for _ in range(cap):
        if is_tame(current, alg).tame:
            return BottomTrace(tuple(steps), current)
        shifted = natural_weight(current)[0] + rho
        a_vals = [h.doubled for h in shifted.delta]
        b_vals = [h.doubled for h in shifted.eps]
        candidates = [
            bv for bv in b_vals if bv > 0 and bv in a_vals and -bv not in a_vals
        ]
        if not candidates:
            raise InternalError(f"non-tame weight {shifted.display()} admits no step")
        chosen = min(candidates)
        j = b_vals.index(chosen)  # b entries are strictly decreasing
        i = a_vals.index(chosen)
        smaller_bs = set(b_vals[j + 1 :])
        x = 1 if half_integral else 0
        step = 2
        while x in smaller_bs or -x in a_vals or x > chosen:
            if x > chosen:
                raise InternalError("no admissible replacement value")
            x += step
        new_a = sorted(a_vals[:i] + a_vals[i + 1 :] + [-x], reverse=True)
        new_b = sorted(b_vals[:j] + b_vals[j + 1 :] + [x], reverse=True)
        new_shifted = Weight.from_doubled(new_a, new_b)
        steps.append(
            BottomStep(shifted, HalfInt(chosen), HalfInt(x), new_shifted)
        )
        current = partition_from_shifted(new_shifted, alg)
    raise InternalError("bottom-of-block did not terminate within the cap")


def lambda_x_family(lam: HookPartition, alg: Algebra) -> list[tuple[int, HookPartition]]:
    """All tame weights sharing the block in the D-type k=1, lambda_n >= m-1
    regime, indexed by the free entry x."""
    if alg.family != FAMILY_D:
        raise WrongRegime("the family enumeration exists only in family D")
    if lam.part(alg.n) < alg.m - 1:
        raise WrongRegime("requires lambda_n >= m - 1")
    report = is_tame(lam, alg)
    if not report.tame or report.atypicality_k != 1:
        raise WrongRegime("requires a tame module of atypicality 1")

    rho = b_standard(alg).rho
    shifted = natural_weight(lam)[0] + rho
    n, m = alg.n, alg.m
    a_vals = [h.doubled for h in shifted.delta]
    b_vals = [h.doubled for h in shifted.eps]
    hits = [i for i in range(n) if a_vals[i] == b_vals[m - 1]]
    if len(hits) != 1:
        raise InternalError("expected a unique d-entry matching b_m")
    i = hits[0]
    spare_a = a_vals[:i] + a_vals[i + 1 :]
    xs = [
        x
        for x in range(0, b_vals[m - 2], 2)  # doubled integers: 0, 1, ..., b_{m-1}-1
        if x not in spare_a
    ]
    out: list[tuple[int, HookPartition]] = []
    for x in xs:
        new_a = sorted(spare_a + [x], reverse=True)
        new_b = sorted(b_vals[: m - 1] + [x], reverse=True)
        member = partition_from_shifted(Weight.from_doubled(new_a, new_b), alg)
        out.append((x // 2, member))
    return out


def admissibility_positivity(lam: HookPartition, alg: Algebra) -> tuple[bool, Root | None]:
    """Check strict positivity of the shifted weight against the even
    nilradical roots of the canonical parabolic; returns a violation witness."""
    report = is_tame(lam, alg)
    if not report.tame or report.atypicality_k == 0:
        raise NotTame("positivity check applies to tame modules with k >= 1")
    k = report.atypicality_k
    b = report.witness_borel
    lam_b = highest_weight_via_reflections(lam, b)
    shifted = lam_b + b.rho
    n, m = alg.n, alg.m

    if alg.family == FAMILY_B:
        d_cut, e_cut, short_eps = n - k, m - k, True
    elif lam.part(n + 1) < m:
        d_cut, e_cut, short_eps = n - k, m - k - e_of_lambda(lam), False
    else:
        d_cut, e_cut, short_eps = n, m, False

    roots: list[Weight] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i <= d_cut:
                di, dj = Weight.basis_delta(n, m, i), Weight.basis_delta(n, m, j)
                roots.append(di - dj)
                roots.append(di + dj)
    for p in range(1, min(d_cut, n) + 1):
        roots.append(Weight.basis_delta(n, m, p).scale(2))
    for s in range(1, m + 1):
        for t in range(s + 1, m + 1):
            if s <= e_cut:
                es, et = Weight.basis_eps(n, m, s), Weight.basis_eps(n, m, t)
                roots.append(es - et)
                roots.append(es + et)
    if short_eps:
        for q in range(1, min(e_cut, m) + 1):
            roots.append(Weight.basis_eps(n, m, q))

    for w in roots:
        value = pairing(shifted, w) / pairing(w, w)
        if not value > 0:
            return False, make_root(w)
    return True, None
