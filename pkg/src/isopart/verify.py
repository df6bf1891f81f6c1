"""Isolating-set and isolation-partition verification with re-checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .graph import (
    Graph,
    IndexMap,
    bits,
    closed_neighborhood,
    find_clique_in,
    find_cycle_in,
    induced_subgraph,
    to_mask,
)


@dataclass(frozen=True)
class Target:
    """What must be absent from ``G - N[D]``.

    ``kind`` is ``"kclique"`` (with ``k >= 1``) or ``"cycle"``. K_1 isolation is
    domination and K_2 isolation is plain isolation.
    """

    kind: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind == "kclique":
            if self.k is None or self.k < 1:
                raise ValueError("kclique target needs k >= 1")
        elif self.kind == "cycle":
            if self.k is not None:
                raise ValueError("cycle target takes no k")
        else:
            raise ValueError(f"unknown target kind {self.kind!r}")

    @classmethod
    def clique(cls, k: int) -> "Target":
        return cls("kclique", k)

    @classmethod
    def cycle(cls) -> "Target":
        return cls("cycle")

    @classmethod
    def parse(cls, text: str) -> "Target":
        """``kclique:<k>``, ``cycle``, ``dominate`` or ``isolate``."""
        text = text.strip().lower()
        if text == "cycle":
            return cls.cycle()
        if text == "dominate":
            return cls.clique(1)
        if text == "isolate":
            return cls.clique(2)
        if text.startswith("kclique:"):
            try:
                return cls.clique(int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise ValueError(f"bad target {text!r}; expected kclique:<k>, cycle or dominate")

    def find_in(self, adj: Sequence[int], within: int) -> Optional[list[int]]:
        """A copy of the pattern inside ``within`` as a vertex list, or None."""
        if self.kind == "cycle":
            return find_cycle_in(adj, within)
        found = find_clique_in(adj, within, self.k)
        return None if found is None else list(bits(found))

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "Target":
        return cls(obj["kind"], obj.get("k"))

    def __str__(self):
        return "cycle" if self.kind == "cycle" else f"kclique:{self.k}"


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices to colours ``1..m``; classes may be empty."""

    colors: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.m:
                raise ValueError(f"vertex {v} has colour {c} outside 1..{self.m}")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[int]) -> "Coloring":
        colors = [0] * n
        for i, cls_mask in enumerate(classes, start=1):
            for v in bits(cls_mask):
                if colors[v]:
                    raise ValueError(f"vertex {v} lies in two classes")
                colors[v] = i
        if 0 in colors:
            raise ValueError(f"vertex {colors.index(0)} lies in no class")
        return cls(tuple(colors), len(classes))

    def color_class(self, i: int) -> int:
        return to_mask(v for v, c in enumerate(self.colors) if c == i)

    def classes(self) -> list[int]:
        out = [0] * self.m
        for v, c in enumerate(self.colors):
            out[c - 1] |= 1 << v
        return out

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "classes": self.m}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(tuple(obj["colors"]), obj["classes"])


@dataclass(frozen=True)
class Certificate:
    verdict: str
    target: Target
    class_index: Optional[int] = None
    witness: tuple[int, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "class": self.class_index,
            "witness": list(self.witness),
            "target": self.target.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        return cls(obj["verdict"], Target.from_json(obj["target"]), obj.get("class"), tuple(obj.get("witness", ())))


def residual_mask(g: Graph, d: int) -> int:
    return g.full & ~closed_neighborhood(g, d)


def residual(g: Graph, d: int) -> tuple[Graph, IndexMap]:
    """``G - N[D]`` as an induced subgraph with its index map."""
    return induced_subgraph(g, residual_mask(g, d))


def is_isolating(g: Graph, d: int, target: Target) -> Certificate:
    found = target.find_in(g.adj, residual_mask(g, d))
    if found is None:
        return Certificate("PASS", target)
    return Certificate("FAIL", target, witness=tuple(found))


def verify_partition(g: Graph, coloring: Coloring, target: Target) -> Certificate:
    """PASS iff every colour class isolates ``target``; otherwise the first failing class."""
    if len(coloring.colors) != g.n:
        raise ValueError(f"colouring covers {len(coloring.colors)} vertices, graph has {g.n}")
    for i, d in enumerate(coloring.classes(), start=1):
        cert = is_isolating(g, d, target)
        if not cert.passed:
            return Certificate("FAIL", target, i, cert.witness)
    return Certificate("PASS", target)


def is_dominating(g: Graph, d: int) -> bool:
    return closed_neighborhood(g, d) == g.full


def witness_is_pattern(g: Graph, d: int, target: Target, witness: Sequence[int]) -> bool:
    """Independent re-check that ``witness`` is a copy of ``target`` inside ``G - N[D]``.

    Cycles are given in traversal order; cliques in any order.
    """
    alive = residual_mask(g, d)
    if len(set(witness)) != len(witness) or any(not alive >> v & 1 for v in witness):
        return False
    if target.kind == "cycle":
        if len(witness) < 3:
            return False
        return all(g.has_edge(witness[i], witness[(i + 1) % len(witness)]) for i in range(len(witness)))
    if len(witness) != target.k:
        return False
    return all(g.has_edge(a, b) for i, a in enumerate(witness) for b in witness[i + 1 :])


def recheck(g: Graph, coloring: Coloring, cert: Certificate) -> bool:
    """True when ``cert`` is exactly what verification of ``coloring`` should say."""
    if cert.passed:
        return all(is_isolating(g, d, cert.target).passed for d in coloring.classes())
    if cert.class_index is None or not 1 <= cert.class_index <= coloring.m:
        return False
    d = coloring.color_class(cert.class_index)
    return witness_is_pattern(g, d, cert.target, cert.witness)


Vertexish = Union[int, Sequence[int]]


def as_mask(vertices: Vertexish) -> int:
    return vertices if isinstance(vertices, int) else to_mask(vertices)
