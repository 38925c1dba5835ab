"""Coxeter systems in their reflection representation, elements as exact
matrices on the root lattice, and the descent algorithm for lengths."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from ..algebraic import RealCyclotomicRing, sign
from ..errors import BadGenerator, InputError
from ..gcm import (
    INF,
    Classification,
    CoxeterMatrix,
    GeneralizedCartanMatrix,
    classify,
    coxeter_matrix_of,
    gcm_of_coxeter,
    is_crystallographic,
    validate_gcm,
)

Vector = tuple  # coordinates in the simple-root basis


@dataclass(frozen=True)
class WeylElement:
    """An element of W as its matrix on the root lattice.

    ``cols[j]`` is the image of the j-th simple root.  Equality and hashing
    only look at the matrix; the cached word/length are advisory.
    """

    cols: tuple[Vector, ...]
    cached_word: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    cached_length: int | None = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.cols)

    @property
    def matrix(self) -> list[list]:
        """Row-major matrix (columns are images of simple roots)."""
        return [list(r) for r in zip(*self.cols)]

    def apply(self, v: Sequence) -> Vector:
        n = self.n
        out = [0] * n
        for j, c in enumerate(v):
            if c:
                col = self.cols[j]
                for i in range(n):
                    out[i] = out[i] + c * col[i]
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self.apply(c) for c in other.cols))


class CoxeterSystem:
    """A Coxeter system (W, S) with a faithful exact reflection representation.

    Crystallographic systems act on the integer root lattice through a
    generalized Cartan matrix.  Other Coxeter matrices use the geometric
    representation over Z[2cos(pi/L)]; such systems support word and length
    computations only.
    """

    def __init__(
        self,
        gcm: GeneralizedCartanMatrix | None = None,
        coxeter_matrix: CoxeterMatrix | None = None,
        names: Sequence[str] | None = None,
    ):
        if gcm is None and coxeter_matrix is None:
            raise ValueError("need a GCM or a Coxeter matrix")
        if gcm is None and is_crystallographic(coxeter_matrix):
            gcm = gcm_of_coxeter(coxeter_matrix)
        self.gcm = gcm
        self.ring: RealCyclotomicRing | None = None
        if gcm is not None:
            self.coxeter_matrix = coxeter_matrix_of(gcm)
            self.cartan = gcm.entries
        else:
            self.coxeter_matrix = coxeter_matrix
            self.cartan = self._geometric_cartan(coxeter_matrix)
        self.n = self.coxeter_matrix.n
        if names is None:
            names = [str(i + 1) for i in range(self.n)]
        names = list(names)
        if len(names) != self.n or len(set(names)) != self.n:
            raise ValueError("generator names must be distinct, one per generator")
        self.names = tuple(names)
        self._zero = 0 if self.ring is None else self.ring.zero
        self._one = 1 if self.ring is None else self.ring.one
        self._simple = tuple(self._simple_reflection(i) for i in range(self.n))
        self._identity = WeylElement(
            tuple(tuple(self._one if i == j else self._zero for i in range(self.n)) for j in range(self.n)),
            cached_word=(),
            cached_length=0,
        )
        self._classification: Classification | None = None

    @classmethod
    def from_gcm(cls, raw, names=None) -> "CoxeterSystem":
        return cls(gcm=validate_gcm(raw), names=names)

    @classmethod
    def from_json(cls, data: dict) -> "CoxeterSystem":
        names = data.get("names")
        if "gcm" in data:
            return cls.from_gcm(data["gcm"], names=names)
        if "coxeter_matrix" in data:
            return cls(coxeter_matrix=CoxeterMatrix.from_json(data["coxeter_matrix"]), names=names)
        raise InputError('system JSON needs a "gcm" or "coxeter_matrix" entry')

    def to_json(self) -> dict:
        if self.gcm is not None:
            out = {"gcm": self.gcm.to_list()}
        else:
            out = {"coxeter_matrix": self.coxeter_matrix.to_json()}
        out["names"] = list(self.names)
        return out

    def _geometric_cartan(self, M: CoxeterMatrix):
        finite = [int(M[i, j]) for i in range(M.n) for j in range(M.n) if i != j and M[i, j] != INF]
        L = reduce(math.lcm, finite, 1)
        self.ring = RealCyclotomicRing(L)
        rows = []
        for i in range(M.n):
            row = []
            for j in range(M.n):
                if i == j:
                    row.append(self.ring.from_int(2))
                elif M[i, j] == INF:
                    row.append(self.ring.from_int(-2))
                else:
                    row.append(-self.ring.two_cos_pi_over(int(M[i, j])))
            rows.append(tuple(row))
        return tuple(rows)

    @property
    def crystallographic(self) -> bool:
        return self.gcm is not None

    @property
    def classification(self) -> Classification | None:
        if self.gcm is None:
            return None
        if self._classification is None:
            self._classification = classify(self.gcm)
        return self._classification

    def __repr__(self) -> str:
        if self.gcm is not None:
            return f"CoxeterSystem(gcm={self.gcm.to_list()})"
        return f"CoxeterSystem(coxeter_matrix={self.coxeter_matrix.to_json()})"

    # --- reflections on vectors -------------------------------------------------

    def pairing_with_coroot(self, i: int, v: Sequence) -> object:
        """<v, alpha_i^vee> = sum_j A[i][j] v_j."""
        row = self.cartan[i]
        total = self._zero
        for a, c in zip(row, v):
            if c:
                total = total + a * c
        return total

    def reflect(self, i: int, v: Sequence) -> Vector:
        """s_i(v) = v - <v, alpha_i^vee> alpha_i."""
        p = self.pairing_with_coroot(i, v)
        out = list(v)
        out[i] = out[i] - p
        return tuple(out)

    def _simple_reflection(self, i: int) -> WeylElement:
        n = self.n
        cols = []
        for j in range(n):
            col = [self._zero] * n
            col[j] = self._one
            col[i] = col[i] - self.cartan[i][j]
            cols.append(tuple(col))
        return WeylElement(tuple(cols), cached_word=(i,), cached_length=1)

    # --- elements ---------------------------------------------------------------

    def identity(self) -> WeylElement:
        return self._identity

    def simple(self, i: int) -> WeylElement:
        self._check_generator(i)
        return self._simple[i]

    def _check_generator(self, i) -> None:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < self.n:
            raise BadGenerator(f"generator index {i!r} out of range 0..{self.n - 1}")

    def rmul_simple(self, w: WeylElement, i: int) -> WeylElement:
        """w * s_i: column j becomes w(alpha_j) - A[i][j] w(alpha_i)."""
        cols = list(w.cols)
        ci = cols[i]
        row = self.cartan[i]
        for j in range(self.n):
            a = row[j]
            if j == i:
                cols[j] = tuple(-x for x in ci)
            elif a:
                cols[j] = tuple(x - a * y for x, y in zip(cols[j], ci))
        return WeylElement(tuple(cols))

    def lmul_simple(self, i: int, w: WeylElement) -> WeylElement:
        return WeylElement(tuple(self.reflect(i, c) for c in w.cols))

    def conjugate_simple(self, i: int, w: WeylElement) -> WeylElement:
        """s_i w s_i."""
        return self.lmul_simple(i, self.rmul_simple(w, i))

    def is_negative(self, v: Sequence) -> bool:
        for c in v:
            s = sign(c)
            if s:
                return s < 0
        return False

    def right_descent(self, w: WeylElement) -> int | None:
        """Least i with l(w s_i) < l(w), i.e. w(alpha_i) negative."""
        for i, c in enumerate(w.cols):
            if self.is_negative(c):
                return i
        return None

    def power(self, w: WeylElement, k: int) -> WeylElement:
        if k < 0:
            return self.power(self.inverse(w), -k)
        result, base = self._identity, w
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self, w: WeylElement) -> WeylElement:
        _, word = length_and_reduced_word(self, w)
        return element_of_word(self, tuple(reversed(word)))

    def parse_word(self, text: str | Iterable) -> tuple[int, ...]:
        """Whitespace-separated 1-based indices (or generator names) to 0-based indices."""
        tokens = text.split() if isinstance(text, str) else list(text)
        out = []
        for t in tokens:
            if isinstance(t, int):
                idx = t - 1
            elif t in self.names:
                idx = self.names.index(t)
            else:
                try:
                    idx = int(t) - 1
                except ValueError:
                    raise BadGenerator(f"unknown generator {t!r}") from None
            self._check_generator(idx)
            out.append(idx)
        return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i + 1) for i in word)


def element_of_word(sys: CoxeterSystem, word: Sequence[int]) -> WeylElement:
    w = sys.identity()
    for i in word:
        sys._check_generator(i)
        w = sys.rmul_simple(w, i)
    return WeylElement(w.cols, cached_word=None, cached_length=None)


def length_and_reduced_word(sys: CoxeterSystem, w: WeylElement) -> tuple[int, tuple[int, ...]]:
    """Greedy right-descent: strip the least descent until the identity is reached."""
    if w.cached_word is not None:
        return len(w.cached_word), w.cached_word
    picks = []
    cur = w
    while True:
        i = sys.right_descent(cur)
        if i is None:
            break
        cur = sys.rmul_simple(cur, i)
        picks.append(i)
    word = tuple(reversed(picks))
    return len(word), word


def length(sys: CoxeterSystem, w: WeylElement) -> int:
    return length_and_reduced_word(sys, w)[0]


def with_word(sys: CoxeterSystem, w: WeylElement) -> WeylElement:
    """The same element with its canonical reduced word cached."""
    ell, word = length_and_reduced_word(sys, w)
    return WeylElement(w.cols, cached_word=word, cached_length=ell)


def support(word: Sequence[int]) -> frozenset[int]:
    return frozenset(word)


def coxeter_element(sys: CoxeterSystem, order: Sequence[int] | None = None) -> WeylElement:
    order = tuple(range(sys.n)) if order is None else tuple(order)
    if sorted(order) != list(range(sys.n)):
        raise BadGenerator("a Coxeter element uses every generator exactly once")
    return element_of_word(sys, order)
