"""Chemical graph value type, edge-type counting and serialization."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .core import ChemPolytopeError, EdgeTypeVector, Point3


class InvalidGraph(ChemPolytopeError, ValueError):
    code = "INVALID_GRAPH"


@dataclass(frozen=True)
class ChemicalGraph:
    """Connected simple graph on vertices 0..n-1 with every degree at most 3."""

    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge ({u},{v}) outside 0..{self.n - 1}")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise InvalidGraph(f"parallel edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))
        deg = self.degrees()
        if max(deg, default=0) > 3:
            raise InvalidGraph(f"vertex {deg.index(max(deg))} has degree {max(deg)} > 3")
        if not self._connected():
            raise InvalidGraph("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges) -> "ChemicalGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def _connected(self) -> bool:
        if self.n == 0:
            return True
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def edge_type_counts(self) -> EdgeTypeVector:
        deg = self.degrees()
        c = Counter(tuple(sorted((deg[u], deg[v]))) for u, v in self.edges)
        if c.get((1, 1)):
            raise InvalidGraph("graph has an edge between two leaves")
        return EdgeTypeVector(c[(1, 2)], c[(1, 3)], c[(2, 2)], c[(2, 3)], c[(3, 3)])

    def point(self) -> Point3:
        return self.edge_type_counts().point()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g

    # serialization -----------------------------------------------------------
    def to_graph6(self) -> str:
        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode("ascii").strip()

    @classmethod
    def from_graph6(cls, text: str) -> "ChemicalGraph":
        g = nx.from_graph6_bytes(text.strip().encode("ascii"))
        return cls.from_edges(g.number_of_nodes(), g.edges())

    def to_edgelist(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.sorted_edges())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "edges": [list(e) for e in self.sorted_edges()],
                "graph6": self.to_graph6()}
