"""Normal forms in graph products.

A word is a sequence of syllables (v, g) with g a non-identity element of
G_v.  It is reduced when no two syllables on the same vertex can be shuffled
together across syllables on adjacent vertices; reduced words for the same
element differ only by such shuffles.  The canonical representative is the
lexicographically least shuffle by vertex index.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import BadSyllable, SpecError
from .spec import GraphProductSpec

Syllable = tuple[int, int]
NormalForm = tuple[Syllable, ...]
Chamber = NormalForm

IDENTITY: NormalForm = ()


def _append(spec: GraphProductSpec, word: list[Syllable], v: int, g: int) -> bool:
    """Multiply a reduced word on the right by (v, g) in place.

    Returns True when the vertex pattern may have lost canonical order
    (syllable appended or deleted), False when a syllable merely changed value.
    """
    group = spec.groups[v]
    if g == 0:
        return False
    adj = spec.adj_mask[v]
    for idx in range(len(word) - 1, -1, -1):
        u, h = word[idx]
        if u == v:
            p = group.mul(h, g)
            if p == 0:
                del word[idx]
                return True
            word[idx] = (v, p)
            return False
        if not (adj >> u) & 1:
            break
    word.append((v, g))
    return True


def canonical_order(spec: GraphProductSpec, word: Sequence[Syllable]) -> NormalForm:
    """Lexicographically least shuffle of a reduced word (greedy on vertex index)."""
    rest = list(word)
    out = []
    adj = spec.adj_mask
    while rest:
        prefix = 0
        best = -1
        for idx, (v, _) in enumerate(rest):
            if prefix & ~adj[v] == 0 and (best < 0 or v < rest[best][0]):
                best = idx
                if v == 0:
                    break
            prefix |= 1 << v
        out.append(rest.pop(best))
    return tuple(out)


def _coerce(spec: GraphProductSpec, syl) -> Syllable:
    try:
        v, g = syl
    except (TypeError, ValueError):
        raise BadSyllable(f"syllable {syl!r} is not a (vertex, element) pair") from None
    try:
        vi = spec.vertex_index(v)
    except SpecError:
        raise BadSyllable(f"unknown vertex {v!r}") from None
    group = spec.groups[vi]
    if not group.contains(g):
        raise BadSyllable(f"{g!r} is not an element of the vertex group at {spec.names[vi]}")
    return vi, g


def normal_form(spec: GraphProductSpec, word: Iterable) -> NormalForm:
    out: list[Syllable] = []
    for syl in word:
        v, g = _coerce(spec, syl)
        _append(spec, out, v, g)
    return canonical_order(spec, out)


def multiply(spec: GraphProductSpec, a: NormalForm, b: NormalForm) -> NormalForm:
    out = list(a)
    dirty = False
    for v, g in b:
        dirty |= _append(spec, out, v, g)
    return canonical_order(spec, out) if dirty else tuple(out)


def right_multiply_syllable(spec: GraphProductSpec, a: NormalForm, v: int, g: int) -> NormalForm:
    out = list(a)
    if _append(spec, out, v, g):
        return canonical_order(spec, out)
    return tuple(out)


def inverse(spec: GraphProductSpec, a: NormalForm) -> NormalForm:
    return canonical_order(spec, [(v, spec.groups[v].inv(g)) for v, g in reversed(a)])


def power(spec: GraphProductSpec, a: NormalForm, k: int) -> NormalForm:
    if k < 0:
        return power(spec, inverse(spec, a), -k)
    out = IDENTITY
    for _ in range(k):
        out = multiply(spec, out, a)
    return out


def sort_key(c: NormalForm):
    return (len(c), c)


def format_normal_form(spec: GraphProductSpec, c: NormalForm) -> str:
    return " ".join(f"{spec.names[v]}:{g}" for v, g in c)


def parse_word(spec: GraphProductSpec, text: str) -> list[tuple[str, int]]:
    """Parse ``"u:1 v:2"``; a bare vertex name means its distinguished element."""
    out = []
    for tok in text.split():
        if ":" in tok:
            name, g = tok.split(":", 1)
            try:
                out.append((name, int(g)))
            except ValueError:
                raise BadSyllable(f"bad element in syllable {tok!r}") from None
        else:
            try:
                v = spec.vertex_index(tok)
            except SpecError:
                raise BadSyllable(f"unknown vertex {tok!r}") from None
            out.append((tok, spec.distinguished[v]))
    return out


def to_json(spec: GraphProductSpec, c: NormalForm) -> list:
    return [[spec.names[v], g] for v, g in c]


def from_json(spec: GraphProductSpec, data) -> NormalForm:
    return normal_form(spec, [(v, g) for v, g in data])
