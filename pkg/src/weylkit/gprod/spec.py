"""Graph product inputs: the graph, vertex groups and distinguished elements."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..errors import InfiniteVertexGroup, SpecError


@dataclass(frozen=True)
class VertexGroup:
    """A vertex group with elements encoded as integers, 0 being the identity.

    ``order=None`` is the infinite cyclic group (elements are all integers).
    A cyclic group of order k uses residues mod k; an explicit group uses
    indices into its multiplication table.
    """

    order: int | None
    table: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 2:
            raise SpecError("vertex groups must be non-trivial")
        if self.table is not None:
            _check_group_table(self.table)
            object.__setattr__(self, "_inverse", tuple(row.index(0) for row in self.table))

    @classmethod
    def cyclic(cls, k: int | None) -> "VertexGroup":
        return cls(k)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "VertexGroup":
        t = tuple(tuple(int(x) for x in row) for row in table)
        return cls(len(t), t)

    @property
    def finite(self) -> bool:
        return self.order is not None

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return self.table[a][b]
        if self.order is None:
            return a + b
        return (a + b) % self.order

    def inv(self, a: int) -> int:
        if self.table is not None:
            return self._inverse[a]
        if self.order is None:
            return -a
        return (-a) % self.order

    def contains(self, a) -> bool:
        if isinstance(a, bool) or not isinstance(a, int):
            return False
        return self.order is None or 0 <= a < self.order

    def non_identity(self) -> range:
        if self.order is None:
            raise InfiniteVertexGroup("cannot enumerate an infinite vertex group")
        return range(1, self.order)

    def to_json(self) -> dict:
        if self.table is not None:
            return {"table": [list(r) for r in self.table]}
        return {"cyclic": "inf" if self.order is None else self.order}

    @classmethod
    def from_json(cls, data: dict) -> "VertexGroup":
        if "table" in data:
            return cls.from_table(data["table"])
        if data.get("infinite_cyclic"):
            return cls(None)
        if "cyclic" in data:
            k = data["cyclic"]
            if k in ("inf", "infinite", None, 0):
                return cls(None)
            if isinstance(k, bool) or not isinstance(k, int):
                raise SpecError(f"bad cyclic order {k!r}")
            return cls(k)
        raise SpecError(f"unrecognised vertex group {data!r}")


def _check_group_table(t) -> None:
    k = len(t)
    if k < 2 or any(len(r) != k for r in t):
        raise SpecError("group table must be square of size >= 2")
    rng = list(range(k))
    for a in rng:
        if t[0][a] != a or t[a][0] != a:
            raise SpecError("element 0 must be the identity of the table")
        if sorted(t[a]) != rng or sorted(t[b][a] for b in rng) != rng:
            raise SpecError("group table rows and columns must be permutations")
    for a, b, c in product(rng, repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise SpecError("group table is not associative")


class GraphProductSpec:
    """Graph Gamma, vertex groups G_v and distinguished elements t_v != 1."""

    def __init__(
        self,
        names: Sequence[str],
        groups: Sequence[VertexGroup],
        edges: Sequence[tuple[int, int]],
        distinguished: Sequence[int] | None = None,
    ):
        n = len(names)
        if n == 0:
            raise SpecError("graph needs at least one vertex")
        if len(set(names)) != n:
            raise SpecError("vertex names must be distinct")
        if len(groups) != n:
            raise SpecError("one vertex group per vertex")
        self.names = tuple(names)
        self.groups = tuple(groups)
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise SpecError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise SpecError("graph must not have loops")
            es.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(es))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj_mask = tuple(adj)
        if distinguished is None:
            distinguished = [1] * n
        self.distinguished = tuple(distinguished)
        for v, t in enumerate(self.distinguished):
            if not self.groups[v].contains(t) or t == 0:
                raise SpecError(f"distinguished element of {self.names[v]} must be a non-identity element")

    @property
    def n(self) -> int:
        return len(self.names)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.adj_mask[u] >> v) & 1)

    def vertex_index(self, v) -> int:
        if isinstance(v, int) and not isinstance(v, bool):
            if 0 <= v < self.n:
                return v
        elif v in self.names:
            return self.names.index(v)
        raise SpecError(f"unknown vertex {v!r}")

    @property
    def locally_finite(self) -> bool:
        return all(g.finite for g in self.groups)

    def require_finite(self) -> None:
        for name, g in zip(self.names, self.groups):
            if not g.finite:
                raise InfiniteVertexGroup(f"vertex group of {name} is infinite")

    def right_angled_coxeter(self) -> "GraphProductSpec":
        """W_Gamma: the graph product of order-2 groups along the same graph."""
        return GraphProductSpec(self.names, [VertexGroup(2)] * self.n, self.edges)

    # --- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"name": nm, "group": g.to_json()} for nm, g in zip(self.names, self.groups)],
            "edges": [[self.names[u], self.names[v]] for u, v in self.edges],
            "distinguished": {nm: t for nm, t in zip(self.names, self.distinguished)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GraphProductSpec":
        try:
            verts = data["vertices"]
        except (KeyError, TypeError):
            raise SpecError('graph product JSON needs a "vertices" list') from None
        names, groups = [], []
        for item in verts:
            if isinstance(item, str):
                names.append(item)
                groups.append(VertexGroup(2))
            else:
                names.append(str(item["name"]))
                groups.append(VertexGroup.from_json(item.get("group", {"cyclic": 2})))
        index = {nm: i for i, nm in enumerate(names)}
        edges = []
        for e in data.get("edges", []):
            if len(e) != 2 or e[0] not in index or e[1] not in index:
                raise SpecError(f"bad edge {e!r}")
            edges.append((index[e[0]], index[e[1]]))
        dist = [1] * len(names)
        for nm, t in (data.get("distinguished") or {}).items():
            if nm not in index:
                raise SpecError(f"distinguished element for unknown vertex {nm!r}")
            dist[index[nm]] = t
        return cls(names, groups, edges, dist)

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def fingerprint(self) -> str:
        return "sha256:" + hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def __eq__(self, other) -> bool:
        return isinstance(other, GraphProductSpec) and self.canonical_json() == other.canonical_json()

    def __hash__(self) -> int:
        return hash(self.canonical_json())

    def __repr__(self) -> str:
        return f"GraphProductSpec({self.canonical_json()})"


def is_irreducible_graph(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    """True iff the graph is not a join, i.e. its complement is connected."""
    import networkx as nx

    base = nx.Graph()
    base.add_nodes_from(range(n))
    base.add_edges_from(edges)
    return nx.is_connected(nx.complement(base))


def join_partition(n: int, edges: Sequence[tuple[int, int]]) -> tuple[list[int], list[int]] | None:
    """A witness V = V1 + V2 with every V1-V2 pair an edge, if the graph is a join."""
    import networkx as nx

    base = nx.Graph()
    base.add_nodes_from(range(n))
    base.add_edges_from(edges)
    comps = [sorted(c) for c in nx.connected_components(nx.complement(base))]
    if len(comps) < 2:
        return None
    comps.sort()
    first = comps[0]
    rest = sorted(v for c in comps[1:] for v in c)
    return first, rest
