"""Regularity and straightness certificates for Weyl group elements.

A regular element is one of infinite order none of whose non-zero powers
stabilises a wall.  Certification is either by the Coxeter-element theorem
(crystallographic, irreducible, indefinite) or by an exhaustive search of
fixed spaces of powers against an enumerated, bounded set of real roots.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import reduce

import sympy

from ..errors import NotCrystallographic
from ..gcm import INF, MatrixType
from ..linalg import in_kernel, row_reduce
from .conjugacy import (
    DEFAULT_CONJUGACY_BUDGET,
    conjugation_closure,
    is_straight_up_to,
    min_length_conjugate,
    power_lengths,
)
from .roots import DEFAULT_ROOT_CAP, enumerate_roots
from .system import CoxeterSystem, WeylElement, format_word, length, length_and_reduced_word

DEFAULT_ROOT_DEPTH = 8
DEFAULT_N_STRAIGHT = 8


class RegularityVerdict(str, Enum):
    CERTIFIED_COXETER_ELEMENT = "CertifiedCoxeterElement"
    CERTIFIED_BY_FIXED_SPACE_SEARCH = "CertifiedByFixedSpaceSearch"
    INCONCLUSIVE = "Inconclusive"
    NOT_HYPERBOLIC = "NotHyperbolic"

    @property
    def certified(self) -> bool:
        return self in (RegularityVerdict.CERTIFIED_COXETER_ELEMENT, RegularityVerdict.CERTIFIED_BY_FIXED_SPACE_SEARCH)


class StraightnessVerdict(str, Enum):
    CERTIFIED_STRAIGHT = "CertifiedStraight"
    CERTIFIED_NOT_STRAIGHT = "CertifiedNotStraight"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class PowerCheck:
    k: int
    fixed_dim: int  # dim ker(w^{2k} - I)
    roots_fixed: int  # enumerated roots alpha with w^{2k} alpha = alpha
    walls_stabilised: int  # enumerated roots alpha with w^k alpha = +-alpha


@dataclass(frozen=True)
class RegularityCertificate:
    verdict: RegularityVerdict
    power_bound: int
    root_depth: int
    word: str
    order: int | None = None
    coxeter_conjugate: str | None = None
    roots_checked: int = 0
    evidence: tuple[PowerCheck, ...] = ()

    def to_json(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["evidence"] = [asdict(e) for e in self.evidence]
        return d


@dataclass(frozen=True)
class StraightnessCertificate:
    verdict: StraightnessVerdict
    word: str
    horizon: int
    power_lengths: tuple[int, ...]
    min_conjugate_length: int | None = None
    regularity: RegularityCertificate | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "word": self.word,
            "horizon": self.horizon,
            "power_lengths": list(self.power_lengths),
            "min_conjugate_length": self.min_conjugate_length,
            "regularity": None if self.regularity is None else self.regularity.to_json(),
            "notes": list(self.notes),
        }


def _finite_order_search_bound(sys: CoxeterSystem) -> int:
    finite = [int(m) for row in sys.coxeter_matrix.entries for m in row if m != INF]
    return 2 * max(finite + [1]) * sys.n


def _cyclotomic_index(f: sympy.Poly) -> int | None:
    x = f.gen
    d = f.degree()
    # phi(k) >= sqrt(k / 2), so every k with phi(k) = d satisfies k <= 2 d^2
    for k in range(1, 2 * d * d + 3):
        if sympy.totient(k) == d and sympy.Poly(sympy.cyclotomic_poly(k, x), x) == f:
            return k
    return None


def matrix_order(sys: CoxeterSystem, w: WeylElement, bound: int | None = None) -> int | None:
    """Exact order of w, or None when w has infinite order.

    Powers are tried up to ``bound``; after that the characteristic polynomial
    decides: infinite order unless every irreducible factor is cyclotomic, and
    even then w must actually satisfy w^L = 1 for L the lcm of the cyclotomic
    indices (unipotent parts, e.g. affine translations, fail this).
    """
    if bound is None:
        bound = _finite_order_search_bound(sys)
    e = sys.identity()
    p = w
    for k in range(1, bound + 1):
        if p == e:
            return k
        p = p * w
    x = sympy.Symbol("x")
    M = sympy.Matrix(w.matrix)
    cp = sympy.Poly(M.charpoly(x).as_expr(), x)
    _, factors = sympy.factor_list(cp.as_expr(), x)
    indices = []
    for fac, _mult in factors:
        k = _cyclotomic_index(sympy.Poly(fac, x))
        if k is None:
            return None
        indices.append(k)
    L = reduce(math.lcm, indices, 1)
    if sys.power(w, L) != e:
        return None
    return min(d for d in sympy.divisors(L) if sys.power(w, d) == e)


def _is_coxeter_word(sys: CoxeterSystem, word) -> bool:
    return len(word) == sys.n and set(word) == set(range(sys.n))


def _coxeter_conjugate(sys: CoxeterSystem, w: WeylElement, budget: int) -> tuple[int, ...] | None:
    ell, word = length_and_reduced_word(sys, w)
    if _is_coxeter_word(sys, word):
        return word
    if ell < sys.n:
        return None
    for u, lu in sorted(
        conjugation_closure(sys, w, budget).items(),
        key=lambda kv: (kv[1], length_and_reduced_word(sys, kv[0])[1]),
    ):
        uw = length_and_reduced_word(sys, u)[1]
        if lu == sys.n and _is_coxeter_word(sys, uw):
            return uw
    return None


def certify_regular(
    sys: CoxeterSystem,
    w: WeylElement,
    K: int | None = None,
    D: int = DEFAULT_ROOT_DEPTH,
    *,
    root_cap: int = DEFAULT_ROOT_CAP,
    conjugacy_budget: int = DEFAULT_CONJUGACY_BUDGET,
    use_coxeter_shortcut: bool = True,
    roots=None,
) -> RegularityCertificate:
    if not sys.crystallographic:
        raise NotCrystallographic("regularity certification needs a crystallographic system")
    ell, word = length_and_reduced_word(sys, w)
    if K is None:
        K = 2 * ell
    wtxt = format_word(word)
    order = matrix_order(sys, w)
    if order is not None:
        return RegularityCertificate(RegularityVerdict.NOT_HYPERBOLIC, K, D, wtxt, order=order)

    cl = sys.classification
    if use_coxeter_shortcut and cl.indecomposable and cl.type is MatrixType.INDEFINITE:
        conj = _coxeter_conjugate(sys, w, conjugacy_budget)
        if conj is not None:
            return RegularityCertificate(
                RegularityVerdict.CERTIFIED_COXETER_ELEMENT, K, D, wtxt, coxeter_conjugate=format_word(conj)
            )

    if roots is None:
        roots = enumerate_roots(sys, D, root_cap)
    n = sys.n
    e_rows = [[int(i == j) for j in range(n)] for i in range(n)]
    checks = []
    clean = K >= 1
    wk = sys.identity()
    for k in range(1, K + 1):
        wk = wk * w
        w2k = wk * wk
        diff = [[a - b for a, b in zip(r, er)] for r, er in zip(w2k.matrix, e_rows)]
        red = row_reduce(diff)
        dim = n - len(red)
        fixed = stab = 0
        if dim:
            for r in roots:
                if in_kernel(red, r.coords):
                    fixed += 1
                    img = wk.apply(r.coords)
                    if img == r.coords or img == tuple(-c for c in r.coords):
                        stab += 1
        checks.append(PowerCheck(k, dim, fixed, stab))
        if fixed:
            clean = False
    verdict = RegularityVerdict.CERTIFIED_BY_FIXED_SPACE_SEARCH if clean else RegularityVerdict.INCONCLUSIVE
    return RegularityCertificate(verdict, K, D, wtxt, roots_checked=len(roots), evidence=tuple(checks))


def certify_straight(
    sys: CoxeterSystem,
    w: WeylElement,
    N: int = DEFAULT_N_STRAIGHT,
    K: int | None = None,
    D: int = DEFAULT_ROOT_DEPTH,
    **kwargs,
) -> StraightnessCertificate:
    """Straight for all n when regular and of minimal length in its class;
    refuted outright when some l(w^n) < n l(w) with n <= N."""
    ell, word = length_and_reduced_word(sys, w)
    wtxt = format_word(word)
    lengths = tuple(power_lengths(sys, w, N))
    if ell == 0:
        return StraightnessCertificate(StraightnessVerdict.CERTIFIED_STRAIGHT, wtxt, N, lengths, 0)
    if not is_straight_up_to(sys, w, N):
        return StraightnessCertificate(StraightnessVerdict.CERTIFIED_NOT_STRAIGHT, wtxt, N, lengths)
    budget = kwargs.get("conjugacy_budget", DEFAULT_CONJUGACY_BUDGET)
    reg = certify_regular(sys, w, K, D, **kwargs)
    m = length(sys, min_length_conjugate(sys, w, budget))
    if reg.verdict.certified and m == ell:
        verdict = StraightnessVerdict.CERTIFIED_STRAIGHT
    else:
        verdict = StraightnessVerdict.INCONCLUSIVE
    return StraightnessCertificate(verdict, wtxt, N, lengths, m, reg)
