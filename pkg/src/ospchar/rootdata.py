"""Root data for osp(2m+1|2n) and osp(2m|2n): Borel subalgebras from
eps-delta sequences, rho vectors, the Weyl group, odd reflections, and the
type-D diagram twist.

Conventions.  The ambient weight space has basis d_1..d_n, e_1..e_m with the
bilinear form (e_i,e_j) = delta_ij, (d_k,d_l) = -delta_kl, (e_i,d_k) = 0.
All Borel subalgebras considered share the even positive system of the
standard one; they are encoded by sequences of n 'd' and m 'e' symbols, with
an optional trailing '-' (family D only, sequence ending in 'd') negating the
right-most e throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactnum import LaurentPolynomial, Weight, poly_sum

FAMILY_B = "B"
FAMILY_D = "D"


class FamilyMismatch(Exception):
    """An operation specific to one family was invoked on the other."""


class NotSimpleIsotropic(Exception):
    """The reflection root is not an isotropic odd simple root of the Borel."""


@dataclass(frozen=True)
class Algebra:
    """osp(2m+1|2n) when family is B, osp(2m|2n) when family is D."""

    family: str
    m: int
    n: int

    def __post_init__(self):
        if self.family not in (FAMILY_B, FAMILY_D):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 1 or self.n < 1:
            raise ValueError("ranks m, n must be positive")
        if self.family == FAMILY_D and self.m < 2:
            raise ValueError("family D requires m >= 2")

    @classmethod
    def parse(cls, text: str) -> "Algebra":
        """Parse 'B:m:n' or 'D:m:n'."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad algebra spec {text!r}, expected FAMILY:m:n")
        fam, m, n = parts[0].upper(), int(parts[1]), int(parts[2])
        return cls(fam, m, n)

    @property
    def rank(self) -> int:
        return self.n + self.m

    def label(self) -> str:
        return f"{self.family}:{self.m}:{self.n}"

    def osp_name(self) -> str:
        ell = 2 * self.m + 1 if self.family == FAMILY_B else 2 * self.m
        return f"osp({ell}|{2 * self.n})"


def pairing(x: Weight, y: Weight) -> Fraction:
    """The standard form: sum of e-products minus sum of d-products."""
    if x.n != y.n or x.m != y.m:
        raise ValueError("weight rank mismatch in pairing")
    doubled4 = sum(a.doubled * b.doubled for a, b in zip(x.eps, y.eps)) - sum(
        a.doubled * b.doubled for a, b in zip(x.delta, y.delta)
    )
    return Fraction(doubled4, 4)


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: int  # 0 even, 1 odd

    @property
    def is_isotropic(self) -> bool:
        return pairing(self.weight, self.weight) == 0

    def __str__(self) -> str:
        return root_str(self)


def make_root(w: Weight) -> Root:
    """Build a root, deriving parity from the total d-degree."""
    total_d = sum(a.doubled for a in w.delta)
    if total_d % 2 != 0:
        raise ValueError("root has non-integral delta part")
    return Root(w, (total_d // 2) % 2)


def root_str(root: Root) -> str:
    """Compact form like 'd3-e1', 'd2+e4', 'e1-d1', '2d1'."""
    parts: list[tuple[int, str]] = []
    for i, a in enumerate(root.weight.delta, start=1):
        if a:
            parts.append((a.as_int(), f"d{i}"))
    for j, b in enumerate(root.weight.eps, start=1):
        if b:
            parts.append((b.as_int(), f"e{j}"))
    parts.sort(key=lambda t: t[0] < 0)  # positive terms first, axis order kept
    out = ""
    for coef, name in parts:
        sign = "-" if coef < 0 else ("+" if out else "")
        mag = abs(coef)
        out += f"{sign}{'' if mag == 1 else mag}{name}"
    return out or "0"


@dataclass(frozen=True)
class EpsDeltaSequence:
    """An ordering of n 'd' and m 'e' symbols with the type-D sign flag."""

    symbols: tuple[str, ...]
    sign: int = 1

    def __post_init__(self):
        if any(s not in ("d", "e") for s in self.symbols):
            raise ValueError("sequence symbols must be 'd' or 'e'")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.sign == -1:
            if not self.symbols or self.symbols[-1] != "d" or "e" not in self.symbols:
                raise ValueError("sign -1 requires a sequence ending with 'd'")

    @classmethod
    def parse(cls, text: str) -> "EpsDeltaSequence":
        sign = 1
        if text.endswith("-"):
            sign = -1
            text = text[:-1]
        return cls(tuple(text), sign)

    def __str__(self) -> str:
        return "".join(self.symbols) + ("-" if self.sign == -1 else "")

    @property
    def n(self) -> int:
        return sum(1 for s in self.symbols if s == "d")

    @property
    def m(self) -> int:
        return sum(1 for s in self.symbols if s == "e")

    def numbered(self) -> list[tuple[str, int]]:
        """Symbols with 1-based per-type numbers, left to right."""
        out, nd, ne = [], 0, 0
        for s in self.symbols:
            if s == "d":
                nd += 1
                out.append(("d", nd))
            else:
                ne += 1
                out.append(("e", ne))
        return out


@dataclass(frozen=True)
class BorelData:
    algebra: Algebra
    sequence: EpsDeltaSequence
    simple_roots: tuple[Root, ...]
    pos_even: frozenset[Root]
    pos_odd: frozenset[Root]
    rho: Weight
    rho_even: Weight
    rho_odd: Weight

    def positive_roots(self) -> frozenset[Root]:
        return self.pos_even | self.pos_odd


def _symbol_weight(alg: Algebra, symbol: tuple[str, int], sign: int) -> Weight:
    kind, idx = symbol
    if kind == "d":
        return Weight.basis_delta(alg.n, alg.m, idx)
    w = Weight.basis_eps(alg.n, alg.m, idx)
    if sign == -1 and idx == alg.m:
        return -w
    return w


def _even_positive_roots(alg: Algebra) -> frozenset[Root]:
    n, m = alg.n, alg.m
    roots: list[Weight] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            di, dj = Weight.basis_delta(n, m, i), Weight.basis_delta(n, m, j)
            roots.append(di - dj)
            roots.append(di + dj)
    for p in range(1, n + 1):
        roots.append(Weight.basis_delta(n, m, p).scale(2))
    for k in range(1, m + 1):
        for l in range(k + 1, m + 1):
            ek, el = Weight.basis_eps(n, m, k), Weight.basis_eps(n, m, l)
            roots.append(ek - el)
            roots.append(ek + el)
    if alg.family == FAMILY_B:
        for q in range(1, m + 1):
            roots.append(Weight.basis_eps(n, m, q))
    return frozenset(Root(w, 0) for w in roots)


def _odd_positive_roots(alg: Algebra, seq: EpsDeltaSequence) -> frozenset[Root]:
    n, m = alg.n, alg.m
    # positions of the numbered symbols, ignoring the sign flag
    pos_d = {}
    pos_e = {}
    for idx, (kind, num) in enumerate(seq.numbered()):
        (pos_d if kind == "d" else pos_e)[num] = idx
    roots: list[Weight] = []
    for p in range(1, n + 1):
        dp = Weight.basis_delta(n, m, p)
        if alg.family == FAMILY_B:
            roots.append(dp)
        for q in range(1, m + 1):
            eq = Weight.basis_eps(n, m, q)
            roots.append(dp + eq)
            roots.append(dp - eq if pos_d[p] < pos_e[q] else eq - dp)
    out = frozenset(Root(w, 1) for w in roots)
    if seq.sign == -1:
        out = frozenset(Root(_sigma_weight(r.weight), 1) for r in out)
    return out


def _sigma_weight(w: Weight) -> Weight:
    eps = list(w.eps)
    eps[-1] = -eps[-1]
    return Weight(w.delta, tuple(eps))


def borel_from_sequence(alg: Algebra, seq: EpsDeltaSequence) -> BorelData:
    """Construct the full Borel data for an eps-delta sequence.

    Simple roots are the consecutive differences of the numbered sequence
    plus the family-specific terminal root; positive roots follow the
    sequence order (with the sign twist applied for signed D sequences).
    """
    if seq.n != alg.n or seq.m != alg.m:
        raise ValueError("sequence does not match algebra ranks")
    if seq.sign == -1 and alg.family != FAMILY_D:
        raise FamilyMismatch("signed sequences exist only in family D")

    n, m = alg.n, alg.m
    numbered = seq.numbered()
    weights = [_symbol_weight(alg, s, seq.sign) for s in numbered]
    simple: list[Weight] = [weights[i] - weights[i + 1] for i in range(len(weights) - 1)]

    last_kind = numbered[-1][0]
    if alg.family == FAMILY_B:
        if last_kind == "e":
            simple.append(Weight.basis_eps(n, m, m))
        else:
            simple.append(Weight.basis_delta(n, m, n))
    else:
        if last_kind == "e":
            if numbered[-2][0] == "e":
                simple.append(Weight.basis_eps(n, m, m - 1) + Weight.basis_eps(n, m, m))
            else:
                simple.append(Weight.basis_delta(n, m, n) + Weight.basis_eps(n, m, m))
        else:
            simple.append(Weight.basis_delta(n, m, n).scale(2))

    pos_even = _even_positive_roots(alg)
    pos_odd = _odd_positive_roots(alg, seq)
    simple_roots = tuple(make_root(w) for w in simple)
    all_pos = pos_even | pos_odd
    for r in simple_roots:
        if r not in all_pos:
            raise AssertionError(f"simple root {r} not positive for {seq}")

    rho_even = _half_sum(pos_even, n, m)
    rho_odd = _half_sum(pos_odd, n, m)
    return BorelData(
        algebra=alg,
        sequence=seq,
        simple_roots=simple_roots,
        pos_even=pos_even,
        pos_odd=pos_odd,
        rho=rho_even - rho_odd,
        rho_even=rho_even,
        rho_odd=rho_odd,
    )


def _half_sum(roots: frozenset[Root], n: int, m: int) -> Weight:
    total = Weight.zero(n, m)
    for r in roots:
        total = total + r.weight
    return total.half()


def b_standard(alg: Algebra) -> BorelData:
    return borel_from_sequence(alg, EpsDeltaSequence(("d",) * alg.n + ("e",) * alg.m))


def b_odd(alg: Algebra) -> BorelData:
    """The Borel with the maximal number of isotropic odd simple roots.

    B: (ed)^n with excess symbols prefixed; D: (de)^min with excess prefixed.
    """
    n, m = alg.n, alg.m
    k = min(n, m)
    if alg.family == FAMILY_B:
        core = ("e", "d") * k
    else:
        core = ("d", "e") * k
    prefix = ("e",) * (m - k) if m > n else ("d",) * (n - k)
    return borel_from_sequence(alg, EpsDeltaSequence(prefix + core))


def all_sequences(alg: Algebra) -> Iterator[EpsDeltaSequence]:
    """Every eps-delta sequence of the algebra, signed variants included."""
    for pattern in sorted(set(itertools.permutations("d" * alg.n + "e" * alg.m))):
        yield EpsDeltaSequence(tuple(pattern))
        if alg.family == FAMILY_D and pattern[-1] == "d":
            yield EpsDeltaSequence(tuple(pattern), sign=-1)


# ---------------------------------------------------------------------------
# Weyl group


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class WeylElement:
    """Signed permutations acting separately on the d-axes and e-axes.

    Basis action: d_i -> delta_signs[i] * d_{delta_perm[i]} (0-based), and
    likewise on the e side.  In family D the e-side sign flips multiply to +1.
    """

    delta_perm: tuple[int, ...]
    delta_signs: tuple[int, ...]
    eps_perm: tuple[int, ...]
    eps_signs: tuple[int, ...]

    @property
    def sign(self) -> int:
        s = _perm_sign(self.delta_perm) * _perm_sign(self.eps_perm)
        for x in self.delta_signs:
            s *= x
        for x in self.eps_signs:
            s *= x
        return s

    def apply_to_exponent(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        n = len(self.delta_perm)
        out = [0] * len(exp)
        for i, v in enumerate(exp[:n]):
            out[self.delta_perm[i]] = self.delta_signs[i] * v
        for j, v in enumerate(exp[n:]):
            out[n + self.eps_perm[j]] = self.eps_signs[j] * v
        return tuple(out)

    def apply_to_weight(self, w: Weight) -> Weight:
        key = self.apply_to_exponent(w.exponent_key())
        return Weight.from_doubled(key[: len(self.delta_perm)], key[len(self.delta_perm):])

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other."""
        n, m = len(self.delta_perm), len(self.eps_perm)
        dp = tuple(self.delta_perm[other.delta_perm[i]] for i in range(n))
        ds = tuple(other.delta_signs[i] * self.delta_signs[other.delta_perm[i]] for i in range(n))
        ep = tuple(self.eps_perm[other.eps_perm[j]] for j in range(m))
        es = tuple(other.eps_signs[j] * self.eps_signs[other.eps_perm[j]] for j in range(m))
        return WeylElement(dp, ds, ep, es)


def weyl_elements(alg: Algebra) -> Iterator[WeylElement]:
    """Enumerate W once; for family D only even numbers of e-sign flips."""
    n, m = alg.n, alg.m
    for dp in itertools.permutations(range(n)):
        for ds in itertools.product((1, -1), repeat=n):
            for ep in itertools.permutations(range(m)):
                for es in itertools.product((1, -1), repeat=m):
                    if alg.family == FAMILY_D:
                        prod = 1
                        for x in es:
                            prod *= x
                        if prod != 1:
                            continue
                    yield WeylElement(dp, ds, ep, es)


def weyl_order(alg: Algebra) -> int:
    base = math.factorial(alg.n) * (2 ** alg.n) * math.factorial(alg.m) * (2 ** alg.m)
    return base // 2 if alg.family == FAMILY_D else base


def apply_weyl(w: WeylElement, p: LaurentPolynomial) -> LaurentPolynomial:
    return p.map_exponents(w.apply_to_exponent)


def weyl_alternating_sum(
    alg: Algebra,
    p: LaurentPolynomial,
    staged: bool = False,
    threads: int = 1,
) -> LaurentPolynomial:
    """The signed sum of all Weyl images of p.

    The baseline iterates W once.  The staged path antisymmetrizes over the
    four factor subgroups in turn (d-signs, d-permutations, e-signs,
    e-permutations); it is validated against the baseline in the tests.
    """
    if staged:
        return _staged_alternating_sum(alg, p)
    if threads > 1:
        return _threaded_alternating_sum(alg, p, threads)
    out: dict[tuple[int, ...], int] = {}
    for w in weyl_elements(alg):
        s = w.sign
        for exp, coef in p.terms.items():
            key = w.apply_to_exponent(exp)
            new = out.get(key, 0) + s * coef
            if new:
                out[key] = new
            else:
                del out[key]
    return LaurentPolynomial(p.rank, out)


def _threaded_alternating_sum(alg: Algebra, p: LaurentPolynomial, threads: int) -> LaurentPolynomial:
    from concurrent.futures import ThreadPoolExecutor

    elements = list(weyl_elements(alg))
    chunk = (len(elements) + threads - 1) // threads
    slices = [elements[i : i + chunk] for i in range(0, len(elements), chunk)]

    def partial(ws: list[WeylElement]) -> LaurentPolynomial:
        acc: dict[tuple[int, ...], int] = {}
        for w in ws:
            s = w.sign
            for exp, coef in p.terms.items():
                key = w.apply_to_exponent(exp)
                new = acc.get(key, 0) + s * coef
                if new:
                    acc[key] = new
                else:
                    del acc[key]
        return LaurentPolynomial(p.rank, acc)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(partial, slices))
    # merge in chunk order so the reduction is deterministic
    return poly_sum(parts, p.rank)


def _alt_sign_axis(terms: dict, axis: int) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for exp, coef in terms.items():
        if exp[axis] == 0:
            continue
        new = out.get(exp, 0) + coef
        if new:
            out[exp] = new
        else:
            del out[exp]
        flipped = exp[:axis] + (-exp[axis],) + exp[axis + 1 :]
        new = out.get(flipped, 0) - coef
        if new:
            out[flipped] = new
        else:
            del out[flipped]
    return out


def _alt_even_signs(terms: dict, axes: list[int]) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for signs in itertools.product((1, -1), repeat=len(axes)):
        prod = 1
        for x in signs:
            prod *= x
        if prod != 1:
            continue
        for exp, coef in terms.items():
            e = list(exp)
            for ax, s in zip(axes, signs):
                e[ax] = s * e[ax]
            key = tuple(e)
            new = out.get(key, 0) + coef
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def _alt_perms(terms: dict, axes: list[int]) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(len(axes))):
        s = _perm_sign(perm)
        for exp, coef in terms.items():
            e = list(exp)
            for src, dst in enumerate(perm):
                e[axes[dst]] = exp[axes[src]]
            key = tuple(e)
            new = out.get(key, 0) + s * coef
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def _staged_alternating_sum(alg: Algebra, p: LaurentPolynomial) -> LaurentPolynomial:
    n, m = alg.n, alg.m
    terms = dict(p.terms)
    for axis in range(n):
        terms = _alt_sign_axis(terms, axis)
    terms = _alt_perms(terms, list(range(n)))
    eps_axes = list(range(n, n + m))
    if alg.family == FAMILY_D:
        terms = _alt_even_signs(terms, eps_axes)
    else:
        for axis in eps_axes:
            terms = _alt_sign_axis(terms, axis)
    terms = _alt_perms(terms, eps_axes)
    return LaurentPolynomial(p.rank, terms)


# ---------------------------------------------------------------------------
# Odd reflections


def odd_reflection(b: BorelData, alpha: Root, gamma: Weight) -> tuple[BorelData, Weight]:
    """Reflect the Borel at an isotropic odd simple root alpha.

    Returns the new Borel and the new highest weight of the same module:
    the shifted weight gamma + rho is kept if (gamma, alpha) != 0 and gains
    alpha otherwise.
    """
    if alpha not in b.simple_roots or not alpha.is_isotropic or alpha.parity != 1:
        raise NotSimpleIsotropic(f"{alpha} is not an isotropic odd simple root")
    alg = b.algebra
    seq = b.sequence
    numbered = seq.numbered()
    weights = [_symbol_weight(alg, s, seq.sign) for s in numbered]

    new_symbols = None
    new_sign = seq.sign
    for i in range(len(numbered) - 1):
        if numbered[i][0] != numbered[i + 1][0] and weights[i] - weights[i + 1] == alpha.weight:
            syms = list(seq.symbols)
            syms[i], syms[i + 1] = syms[i + 1], syms[i]
            new_symbols = tuple(syms)
            break
    else:
        # terminal case: D-type unsigned sequence ending d e, alpha = d_n + e_m
        if (
            alg.family == FAMILY_D
            and seq.sign == 1
            and numbered[-1] == ("e", alg.m)
            and numbered[-2][0] == "d"
            and alpha.weight == weights[-2] + weights[-1]
        ):
            syms = list(seq.symbols)
            syms[-1], syms[-2] = syms[-2], syms[-1]
            new_symbols = tuple(syms)
            new_sign = -1
        else:
            raise NotSimpleIsotropic(f"no sequence move realizes reflection at {alpha}")

    if new_sign == -1 and new_symbols[-1] == "e":
        # a signed sequence ending in e denotes the same Borel unsigned
        new_sign = 1
    b2 = borel_from_sequence(alg, EpsDeltaSequence(new_symbols, new_sign))
    if pairing(gamma, alpha.weight) != 0:
        gamma2 = gamma + b.rho - b2.rho
    else:
        gamma2 = gamma + b.rho + alpha.weight - b2.rho
    return b2, gamma2


def _bubble_moves(start: tuple[str, ...], target: tuple[str, ...]) -> Iterator[int]:
    """Adjacent-swap positions turning start into target, one type past the other."""
    cur = list(start)
    for p in range(len(target)):
        if cur[p] == target[p]:
            continue
        q = p
        while cur[q] != target[p]:
            q += 1
        for r in range(q, p, -1):
            yield r - 1
            cur[r - 1], cur[r] = cur[r], cur[r - 1]


def reflection_walk(alg: Algebra, target: EpsDeltaSequence, gamma: Weight) -> tuple[BorelData, Weight]:
    """Carry a standard-Borel highest weight to the target Borel.

    The chain bubble-sorts the sequence, one odd reflection per adjacent
    swap; a signed D target is reached by first parking e_m at the right
    end, flipping at the terminal root d_n + e_m, and then walking -e_m
    left into place.
    """
    b = b_standard(alg)
    if target.sign == -1:
        em_pos = max(i for i, s in enumerate(target.symbols) if s == "e")
        park = target.symbols[:em_pos] + target.symbols[em_pos + 1 :] + ("e",)
        moves = list(_bubble_moves(b.sequence.symbols, park))
        stages: list[tuple[str, int]] = [("swap", i) for i in moves]
        stages.append(("flip", len(target.symbols) - 2))
        for pos in range(len(target.symbols) - 2, em_pos, -1):
            stages.append(("swap", pos - 1))
    else:
        stages = [("swap", i) for i in _bubble_moves(b.sequence.symbols, target.symbols)]

    for kind, pos in stages:
        numbered = b.sequence.numbered()
        weights = [_symbol_weight(alg, s, b.sequence.sign) for s in numbered]
        if kind == "swap":
            alpha = make_root(weights[pos] - weights[pos + 1])
        else:
            alpha = make_root(weights[pos] + weights[pos + 1])
        b, gamma = odd_reflection(b, alpha, gamma)
    assert b.sequence == target
    return b, gamma


# ---------------------------------------------------------------------------
# Diagram twist (family D)


def sigma_twist(alg: Algebra, obj):
    """Negate the e_m coordinate everywhere (weights, Borels, exponents)."""
    if alg.family != FAMILY_D:
        raise FamilyMismatch("the diagram twist exists only in family D")
    if isinstance(obj, Weight):
        return _sigma_weight(obj)
    if isinstance(obj, Root):
        return Root(_sigma_weight(obj.weight), obj.parity)
    if isinstance(obj, LaurentPolynomial):
        last = alg.n + alg.m - 1

        def flip(exp: tuple[int, ...]) -> tuple[int, ...]:
            return exp[:last] + (-exp[last],)

        return obj.map_exponents(flip)
    if isinstance(obj, BorelData):
        seq = obj.sequence
        if seq.symbols[-1] == "e":
            return obj
        return borel_from_sequence(alg, EpsDeltaSequence(seq.symbols, -seq.sign))
    if isinstance(obj, EpsDeltaSequence):
        if obj.symbols[-1] == "e":
            return obj
        return EpsDeltaSequence(obj.symbols, -obj.sign)
    raise TypeError(f"cannot twist object of type {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Small exact linear algebra over the weight space


def coords_in_basis(basis: list[Weight], target: Weight) -> list[Fraction] | None:
    """Coordinates of target in the given independent weights, or None."""
    rank = target.n + target.m
    rows = [[Fraction(w.exponent_key()[i], 2) for w in basis] for i in range(rank)]
    rhs = [Fraction(v, 2) for v in target.exponent_key()]
    ncols = len(basis)
    # Gauss-Jordan elimination over Fractions
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        if row >= rank:
            break
        pivot_row = next((r for r in range(row, rank) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[row], rows[pivot_row] = rows[pivot_row], rows[row]
        rhs[row], rhs[pivot_row] = rhs[pivot_row], rhs[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        rhs[row] = rhs[row] * inv
        for r in range(rank):
            if r != row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row])]
                rhs[r] = rhs[r] - factor * rhs[row]
        pivots.append((row, col))
        row += 1

    coords = [Fraction(0)] * ncols
    for row, c in pivots:
        coords[c] = rhs[row]
    # exact verification by direct evaluation; also guards dependent input
    total = [Fraction(0)] * rank
    for c, w in zip(coords, basis):
        for i, v in enumerate(w.exponent_key()):
            total[i] += c * Fraction(v, 2)
    for got, want in zip(total, (Fraction(v, 2) for v in target.exponent_key())):
        if got != want:
            return None
    return coords


def in_rational_span(vectors: list[Weight], target: Weight) -> bool:
    return coords_in_basis(vectors, target) is not None
