"""Real roots, coroots and the wall-crossing relation (crystallographic case)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import NotARealRoot, NotCrystallographic, SameWall, SearchBudgetExceeded, WrongType
from ..gcm import MatrixType
from .system import CoxeterSystem, WeylElement

DEFAULT_ROOT_CAP = 100_000


@dataclass(frozen=True, order=True)
class Root:
    """A root as integer coordinates in the simple-root basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("the zero vector is not a root")

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def negative(self) -> bool:
        return all(c <= 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def positive_rep(self) -> "Root":
        return self if self.positive else -self

    def sort_key(self):
        # alpha_1 before alpha_2 within a height
        return (abs(self.height), tuple(-abs(c) for c in self.coords))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{'' if abs(c) == 1 else abs(c)}a{i + 1}")
                if c < 0:
                    terms[-1] = "-" + terms[-1]
        return " + ".join(terms).replace("+ -", "- ")


def simple_root(n: int, i: int) -> Root:
    return Root(tuple(int(j == i) for j in range(n)))


def _require_crystallographic(sys: CoxeterSystem) -> None:
    if not sys.crystallographic:
        raise NotCrystallographic("root operations need an integer root lattice")


def enumerate_roots(sys: CoxeterSystem, depth: int, cap: int = DEFAULT_ROOT_CAP) -> list[Root]:
    """Positive real roots reachable from simple roots by at most ``depth``
    simple reflections through positive roots, sorted by (height, coords)."""
    _require_crystallographic(sys)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    n = sys.n
    frontier = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(frontier)
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for i in range(n):
                u = sys.reflect(i, v)
                if u in seen or any(c < 0 for c in u):
                    continue
                seen.add(u)
                nxt.append(u)
        if len(seen) > cap:
            raise SearchBudgetExceeded(f"root enumeration exceeded {cap} roots at depth {depth}")
        if not nxt:
            break
        frontier = nxt
    return sorted((Root(v) for v in seen), key=Root.sort_key)


def apply_to_root(w: WeylElement, alpha: Root) -> Root:
    return Root(w.apply(alpha.coords))


def coroot(sys: CoxeterSystem, alpha: Root) -> tuple[int, ...]:
    """Coordinates of alpha^vee in the simple-coroot basis.

    A positive non-simple real root always has some i with <beta, alpha_i^vee> > 0,
    and s_i lowers its height; we fold the root down to a simple root and
    replay the folding on the coroot side.
    """
    _require_crystallographic(sys)
    cache = sys.__dict__.setdefault("_coroot_cache", {})
    key = alpha.coords
    if key in cache:
        return cache[key]
    flip = not alpha.positive
    if flip and not alpha.negative:
        raise NotARealRoot(f"{alpha.coords} has mixed signs")
    beta = (-alpha).coords if flip else alpha.coords
    n = sys.n
    path = []
    while sum(beta) != 1:
        for i in range(n):
            if sys.pairing_with_coroot(i, beta) > 0:
                break
        else:
            raise NotARealRoot(f"{alpha.coords} is not a real root")
        beta = sys.reflect(i, beta)
        if any(c < 0 for c in beta):
            raise NotARealRoot(f"{alpha.coords} is not a real root")
        path.append(i)
    if sorted(beta) != [0] * (n - 1) + [1]:
        raise NotARealRoot(f"{alpha.coords} is not a real root")
    k = beta.index(1)
    h = [0] * n
    h[k] = 1
    A = sys.cartan
    for i in reversed(path):
        # s_i(h) = h - <alpha_i, h> alpha_i^vee, with <alpha_i, alpha_j^vee> = A[j][i]
        h[i] -= sum(A[j][i] * h[j] for j in range(n))
    out = tuple(-x for x in h) if flip else tuple(h)
    cache[key] = out
    return out


def pairing(sys: CoxeterSystem, alpha: Root, beta: Root) -> int:
    """<alpha, beta^vee>."""
    b = coroot(sys, beta)
    return sum(bk * sys.pairing_with_coroot(k, alpha.coords) for k, bk in enumerate(b) if bk)


def pairing_product(sys: CoxeterSystem, alpha: Root, beta: Root) -> int:
    return pairing(sys, alpha, beta) * pairing(sys, beta, alpha)


def walls_cross(sys: CoxeterSystem, alpha: Root, beta: Root) -> bool:
    """Walls of alpha and beta cross iff their reflections generate a finite group."""
    _require_crystallographic(sys)
    a, b = alpha.positive_rep(), beta.positive_rep()
    if a == b:
        raise SameWall(f"{alpha.coords} and {beta.coords} define the same wall")
    return pairing_product(sys, a, b) <= 3


def _indefinite_irreducible(sys: CoxeterSystem) -> None:
    _require_crystallographic(sys)
    cl = sys.classification
    if not cl.indecomposable:
        raise WrongType("system is reducible")
    if cl.type is not MatrixType.INDEFINITE:
        raise WrongType(f"system is {cl.type.value}, need indefinite type")


def _crossing_table(sys: CoxeterSystem, roots: Sequence[Root]):
    vals = [tuple(sys.pairing_with_coroot(k, r.coords) for k in range(sys.n)) for r in roots]
    cos = [coroot(sys, r) for r in roots]

    def pair(i, j):  # <roots[i], roots[j]^vee>
        return sum(b * v for b, v in zip(cos[j], vals[i]))

    memo = {}

    def cross(i, j):
        key = (i, j) if i < j else (j, i)
        c = memo.get(key)
        if c is None:
            c = memo[key] = pair(i, j) * pair(j, i) <= 3
        return c

    return cross


def find_separated_wall_pair(sys: CoxeterSystem, depth: int, cap: int = DEFAULT_ROOT_CAP):
    """First pair (alpha, beta) in canonical order of non-crossing walls that no
    enumerated third wall crosses simultaneously; ``None`` if none within depth."""
    _indefinite_irreducible(sys)
    roots = enumerate_roots(sys, depth, cap)
    cross = _crossing_table(sys, roots)
    R = len(roots)
    for i in range(R):
        for j in range(i + 1, R):
            if cross(i, j):
                continue
            if not any(cross(g, i) and cross(g, j) for g in range(R) if g != i and g != j):
                return roots[i], roots[j]
    return None


def common_crossers(sys: CoxeterSystem, alpha: Root, beta: Root, roots: Sequence[Root]) -> list[Root]:
    """Roots among ``roots`` whose walls cross both given walls (checker side)."""
    out = []
    for g in roots:
        if g in (alpha, beta):
            continue
        if walls_cross(sys, g, alpha) and walls_cross(sys, g, beta):
            out.append(g)
    return out
