"""Generators for the named graph families plus seeded G(n,p) instances.

Labelling conventions are part of the contract here, since downstream
checks attach compositions at specific vertices:

* paths: vertices 0..n-1 in path order;
* cycles: cyclic order 0,1,...,n-1,0;
* complete bipartite K_{a,b}: first part 0..a-1, second part a..a+b-1;
* stars K_{1,n}: centre 0, leaves 1..n;
* friendship F_n: centre 0 with the n triangles {0, 2i-1, 2i}.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from .graph import Graph

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "friendship",
    "gnp_random",
)

RationalLike = Union[Fraction, int, str, Tuple[int, int]]


def path_graph(n: int) -> Graph:
    """Path P_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle C_n on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """Complete graph K_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite K_{a,b} with parts 0..a-1 and a..a+b-1."""
    if min(a, b) < 1:
        raise ValueError(f"complete bipartite needs both parts >= 1, got ({a}, {b})")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(n: int) -> Graph:
    """Star K_{1,n}: centre 0 joined to leaves 1..n."""
    if n < 1:
        raise ValueError(f"star needs n >= 1 leaves, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def friendship_graph(n: int) -> Graph:
    """Friendship graph F_n: n triangles sharing the centre vertex 0.

    Order 2n+1 and size 3n; triangle i is {0, 2i-1, 2i}.  The centre
    labelling is a documented contract relied on by the composition checks.
    """
    if n < 1:
        raise ValueError(f"friendship graph needs n >= 1, got {n}")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * n + 1, edges)


def _as_probability(p: RationalLike) -> Fraction:
    if isinstance(p, tuple):
        p = Fraction(*p)
    else:
        p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    return p


def _pair_draw(seed_key: bytes, counter: int) -> int:
    digest = hashlib.blake2b(
        counter.to_bytes(8, "little"), key=seed_key, digest_size=8
    ).digest()
    return int.from_bytes(digest, "little")


def gnp_random_graph(n: int, p: RationalLike, seed: int) -> Graph:
    """G(n,p) with a counter-based keyed BLAKE2b stream.

    Pair t (the lexicographic index of (u, v), u < v) becomes an edge iff
    the 64-bit draw r_t satisfies r_t * den < num * 2**64, with p = num/den
    held exactly as a rational.  Same (n, p, seed) gives the same edge set
    on every platform; no global RNG state is involved.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = _as_probability(p)
    seed_key = (seed % (1 << 64)).to_bytes(8, "little")
    num, den = p.numerator, p.denominator
    edges = []
    t = 0
    for u in range(n):
        for v in range(u + 1, n):
            if _pair_draw(seed_key, t) * den < num << 64:
                edges.append((u, v))
            t += 1
    return Graph(n, edges)


@dataclass(frozen=True)
class FamilyInstance:
    """A generated family member together with its replay parameters."""

    kind: str
    params: Tuple[int, ...]
    graph: Graph
    distinguished: Dict[str, int]

    def label(self) -> str:
        inner = ",".join(str(x) for x in self.params)
        return f"{self.kind}({inner})"


def build_family(kind: str, params: Tuple[int, ...]) -> FamilyInstance:
    """Dispatch a family build from (kind, integer params).

    gnp_random takes params (n, p_numerator, p_denominator, seed); the
    other kinds take the parameter counts of their generator functions.
    """
    if kind == "path":
        (n,) = params
        g = path_graph(n)
        dist = {"start": 0, "end": n - 1}
    elif kind == "cycle":
        (n,) = params
        g = cycle_graph(n)
        dist = {}
    elif kind == "complete":
        (n,) = params
        g = complete_graph(n)
        dist = {}
    elif kind == "complete_bipartite":
        a, b = params
        g = complete_bipartite_graph(a, b)
        dist = {"first_of_part_a": 0, "first_of_part_b": a}
    elif kind == "star":
        (n,) = params
        g = star_graph(n)
        dist = {"center": 0}
    elif kind == "friendship":
        (n,) = params
        g = friendship_graph(n)
        dist = {"center": 0}
    elif kind == "gnp_random":
        n, num, den, seed = params
        g = gnp_random_graph(n, Fraction(num, den), seed)
        dist = {}
    else:
        raise ValueError(f"unknown family kind {kind!r}, expected one of {FAMILY_KINDS}")
    return FamilyInstance(kind, tuple(params), g, dist)
