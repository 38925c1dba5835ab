"""The right-angled building of a graph product.

Chambers are group elements in normal form; the group acts freely and
transitively by left multiplication.  Two chambers c, c' are v-adjacent iff
c^-1 c' is a non-identity element of G_v, so the gallery distance is the
syllable length of c^-1 c' and the Weyl distance is its vertex pattern read
in the right-angled Coxeter group W_Gamma.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import SearchBudgetExceeded, WordNotReduced
from .normal_form import (
    IDENTITY,
    Chamber,
    NormalForm,
    canonical_order,
    inverse,
    multiply,
    normal_form,
    power,
    right_multiply_syllable,
    sort_key,
)
from .spec import GraphProductSpec

BALL_CAP = 5_000_000
CLOSURE_CAP = 100_000


def _rac_word(spec: GraphProductSpec, word: Iterable[int]) -> tuple[int, ...]:
    """Reduce a word of W_Gamma generators; returns the canonical vertex sequence."""
    out: list[tuple[int, int]] = []
    adj = spec.adj_mask
    for v in word:
        for idx in range(len(out) - 1, -1, -1):
            u = out[idx][0]
            if u == v:
                del out[idx]
                break
            if not (adj[v] >> u) & 1:
                out.append((v, 1))
                break
        else:
            out.append((v, 1))
    return tuple(v for v, _ in canonical_order(spec, out))


def rac_normal_form(spec: GraphProductSpec, word: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced word in W_Gamma (vertex indices)."""
    return _rac_word(spec, [spec.vertex_index(v) for v in word])


def gallery_distance(spec: GraphProductSpec, a: Chamber, b: Chamber) -> int:
    return len(multiply(spec, inverse(spec, a), b))


def weyl_distance(spec: GraphProductSpec, a: Chamber, b: Chamber) -> tuple[int, ...]:
    """delta(a, b) as a canonical reduced word of W_Gamma."""
    return tuple(v for v, _ in multiply(spec, inverse(spec, a), b))


def translate(spec: GraphProductSpec, g: NormalForm, c: Chamber) -> Chamber:
    return multiply(spec, g, c)


def adjacent_chambers(spec: GraphProductSpec, c: Chamber, v) -> list[Chamber]:
    vi = spec.vertex_index(v)
    elems = spec.groups[vi].non_identity()
    return sorted((right_multiply_syllable(spec, c, vi, g) for g in elems), key=sort_key)


def neighbours(spec: GraphProductSpec, c: Chamber):
    for v, group in enumerate(spec.groups):
        for g in group.non_identity():
            yield right_multiply_syllable(spec, c, v, g)


def _first_steps(spec: GraphProductSpec, c: Chamber, b: Chamber) -> list[Chamber]:
    """Neighbours x of c with d(x, b) = d(c, b) - 1.

    These are c times a leading syllable of c^-1 b: the syllables that can be
    shuffled to the front of its normal form.
    """
    rest = multiply(spec, inverse(spec, c), b)
    adj = spec.adj_mask
    prefix = 0
    out = []
    for v, g in rest:
        if prefix & ~adj[v] == 0:
            out.append(right_multiply_syllable(spec, c, v, g))
        prefix |= 1 << v
    return out


def interval(spec: GraphProductSpec, a: Chamber, b: Chamber, cap: int = CLOSURE_CAP) -> list[Chamber]:
    """All chambers on minimal galleries from a to b, canonically ordered."""
    spec.require_finite()
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for c in frontier:
            for x in _first_steps(spec, c, b):
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        if len(seen) > cap:
            raise SearchBudgetExceeded(f"interval exceeded {cap} chambers")
        frontier = nxt
    return sorted(seen, key=sort_key)


@dataclass(frozen=True)
class Hull:
    chambers: tuple[Chamber, ...]
    window: tuple[Chamber, ...]
    rounds: int

    def __contains__(self, c) -> bool:
        return c in set(self.chambers)

    def __len__(self) -> int:
        return len(self.chambers)


def combinatorial_hull(spec: GraphProductSpec, seed: Iterable[Chamber], cap: int = CLOSURE_CAP) -> Hull:
    """Smallest gallery-convex set containing ``seed``.

    A set H is convex iff no chamber a in H has a neighbour x outside H with
    d(x, b) = d(a, b) - 1 for some b in H (every minimal gallery then stays in H
    step by step).  Each round adds all such violating neighbours; only pairs
    touching the previous round's additions need rechecking.
    """
    spec.require_finite()
    window = tuple(sorted(set(seed), key=sort_key))
    H = set(window)
    fresh = set(window)
    rounds = 0
    while fresh:
        rounds += 1
        added = set()
        members = list(H)
        for a in members:
            targets = members if a in fresh else list(fresh)
            for b in targets:
                if b == a:
                    continue
                for x in _first_steps(spec, a, b):
                    if x not in H:
                        added.add(x)
        H |= added
        if len(H) > cap:
            raise SearchBudgetExceeded(f"hull exceeded {cap} chambers")
        fresh = added
    return Hull(tuple(sorted(H, key=sort_key)), window, rounds)


def is_convex(spec: GraphProductSpec, chambers: Iterable[Chamber]) -> bool:
    H = set(chambers)
    return all(x in H for a in H for b in H if a != b for x in _first_steps(spec, a, b))


def apartment_section(spec: GraphProductSpec, word: Sequence) -> Chamber:
    """sigma(s_{i1} ... s_{ik}) = t_{i1} ... t_{ik} for a reduced word of W_Gamma."""
    idx = [spec.vertex_index(v) for v in word]
    if len(_rac_word(spec, idx)) != len(idx):
        raise WordNotReduced(f"{list(word)} is not reduced in W_Gamma")
    return normal_form(spec, [(v, spec.distinguished[v]) for v in idx])


def ball(spec: GraphProductSpec, radius: int, cap: int = BALL_CAP) -> list[Chamber]:
    """Chambers at gallery distance <= radius from the identity chamber."""
    spec.require_finite()
    seen = {IDENTITY}
    sphere = [IDENTITY]
    for r in range(radius):
        nxt = []
        for c in sphere:
            for x in neighbours(spec, c):
                if len(x) == r + 1 and x not in seen:
                    seen.add(x)
                    nxt.append(x)
        if len(seen) > cap:
            raise SearchBudgetExceeded(f"ball exceeded {cap} chambers at radius {r + 1}")
        if not nxt:
            break
        sphere = nxt
    return sorted(seen, key=sort_key)


@dataclass(frozen=True)
class WPDResult:
    elements: tuple[NormalForm, ...]
    complete: bool
    degenerate: bool
    D: int
    m: int
    radius: int
    required_radius: int
    ball_size: int

    @property
    def size(self) -> int:
        return len(self.elements)


def brute_force_wpd_check(
    spec: GraphProductSpec,
    h: NormalForm,
    x: Chamber,
    D: int,
    m: int,
    radius: int,
    cap: int = BALL_CAP,
) -> WPDResult:
    """P = {g in ball(radius) : d(x, gx) < D and d(h^m x, g h^m x) < D}.

    Completeness: g in P gives |g| <= d(1, x) + d(x, gx) + d(gx, g) < D + 2|x|,
    so ball(D - 1 + 2|x|) already contains all of P.
    """
    if D < 1:
        raise ValueError("D must be positive")
    y = multiply(spec, power(spec, h, m), x)
    xi, yi = inverse(spec, x), inverse(spec, y)
    candidates = ball(spec, radius, cap)
    P = []
    for g in candidates:
        if len(multiply(spec, xi, multiply(spec, g, x))) >= D:
            continue
        if len(multiply(spec, yi, multiply(spec, g, y))) >= D:
            continue
        P.append(g)
    required = D - 1 + 2 * len(x)
    return WPDResult(tuple(P), radius >= required, m == 0, D, m, radius, required, len(candidates))
