"""Straightness and minimal-length conjugates."""
from __future__ import annotations

from collections import deque

from ..errors import SearchBudgetExceeded
from .system import CoxeterSystem, WeylElement, length, length_and_reduced_word, with_word

DEFAULT_CONJUGACY_BUDGET = 100_000


def power_lengths(sys: CoxeterSystem, w: WeylElement, N: int) -> list[int]:
    """[l(w), l(w^2), ..., l(w^N)]."""
    out = []
    p = sys.identity()
    for _ in range(N):
        p = p * w
        out.append(length(sys, p))
    return out


def is_straight_up_to(sys: CoxeterSystem, w: WeylElement, N: int) -> bool:
    if N < 1:
        raise ValueError("N must be at least 1")
    lengths = power_lengths(sys, w, N)
    return all(ell == (k + 1) * lengths[0] for k, ell in enumerate(lengths))


def conjugation_closure(
    sys: CoxeterSystem, w: WeylElement, budget: int = DEFAULT_CONJUGACY_BUDGET
) -> dict[WeylElement, int]:
    """Everything reachable from w by elementary conjugations w -> s w s that do
    not increase length, mapped to its length."""
    start = with_word(sys, w)
    lengths = {start: start.cached_length}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        lu = lengths[u]
        for i in range(sys.n):
            v = sys.conjugate_simple(i, u)
            if v in lengths:
                continue
            lv = length(sys, v)
            if lv > lu:
                continue
            lengths[v] = lv
            if len(lengths) > budget:
                raise SearchBudgetExceeded(f"conjugation closure exceeded {budget} elements")
            queue.append(v)
    return lengths


def min_length_conjugate(
    sys: CoxeterSystem, w: WeylElement, budget: int = DEFAULT_CONJUGACY_BUDGET
) -> WeylElement:
    """Least element (by length, then reduced word) of the non-increasing
    conjugation closure of w, with its reduced word cached."""
    closure = conjugation_closure(sys, w, budget)
    best = min(closure, key=lambda u: (closure[u], length_and_reduced_word(sys, u)[1]))
    return with_word(sys, best)
