"""Fast two-row shadow evaluation for admissible weight maps on forests.

For an admissible weight map (values at most 2, no edge carrying total
weight 3 or more) the normalized clan shadow factors over components: each
connected group of weight-1 vertices with parts (p, q) contributes
x1^p x2^q + x1^q x2^p, and each weight-2 vertex contributes x1 x2 after the
factorial normalization.  The multiset of part pairs plus the count of
weight-2 vertices therefore determines the shadow, and expansions are cached
by that signature, which is what makes exhaustive verification runs cheap.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .graphs import Graph, two_coloring
from .symfunc import expand_terms

Signature = tuple[tuple[tuple[int, int], ...], int]

_SIG_EXPANSION: dict[Signature, dict[tuple[int, int], int]] = {}
_SIG_POLY: dict[Signature, dict[tuple[int, int], int]] = {}


def _poly_from_components(comps: Sequence[tuple[int, int]], twos: int) -> dict:
    out: dict[tuple[int, int], int] = {(twos, twos): 1}
    for p, q in comps:
        nxt: dict[tuple[int, int], int] = {}
        for (d1, d2), c in out.items():
            for e1, e2 in ((p, q), (q, p)):
                key = (d1 + e1, d2 + e2)
                val = nxt.get(key, 0) + c
                if val:
                    nxt[key] = val
                elif key in nxt:
                    del nxt[key]
        out = nxt
    return out


def poly_from_signature(sig: Signature) -> Mapping[tuple[int, int], int]:
    """Two-variable shadow for a component signature (cached; do not mutate)."""
    cached = _SIG_POLY.get(sig)
    if cached is None:
        comps, twos = sig
        cached = _poly_from_components(comps, twos)
        _SIG_POLY[sig] = cached
    return cached


def expansion_from_signature(sig: Signature) -> Mapping[tuple[int, int], int]:
    """Two-row expansion for a component signature (cached; do not mutate)."""
    cached = _SIG_EXPANSION.get(sig)
    if cached is None:
        comps, twos = sig
        base = expand_terms(_poly_from_components(comps, 0))
        if twos:
            base = {(a + twos, b + twos): c for (a, b), c in base.items()}
        cached = base
        _SIG_EXPANSION[sig] = cached
    return cached


def min_coefficient(expansion: Mapping[tuple[int, int], int]) -> int:
    return min(expansion.values(), default=0)


def add_expansions(
    a: Mapping[tuple[int, int], int], b: Mapping[tuple[int, int], int]
) -> dict[tuple[int, int], int]:
    out = dict(a)
    for key, c in b.items():
        val = out.get(key, 0) + c
        if val:
            out[key] = val
        elif key in out:
            del out[key]
    return out


def is_admissible(g: Graph, weights: Sequence[int]) -> bool:
    """True when no value exceeds 2 and every edge with two positive ends
    carries weight 1 on both; all other maps have zero shadow."""
    if any(a < 0 or a > 2 for a in weights):
        return False
    for v in range(g.n):
        av = weights[v]
        if av == 0:
            continue
        for w in g.adj[v]:
            if weights[w] and av + weights[w] >= 3:
                return False
    return True


class ForestShadow:
    """Shadow evaluator bound to one forest; reuses a global 2-coloring."""

    __slots__ = ("graph", "colors", "adj", "n")

    def __init__(self, g: Graph):
        colors = two_coloring(g)
        if colors is None:
            raise ValueError("shadow engine requires a bipartite graph")
        self.graph = g
        self.colors = colors
        self.adj = g.adj
        self.n = g.n

    def signature(self, weights: Sequence[int]) -> Signature:
        """Component part-pairs plus weight-2 count of an admissible map."""
        comps: list[tuple[int, int]] = []
        twos = 0
        seen = bytearray(self.n)
        adj = self.adj
        colors = self.colors
        for v in range(self.n):
            av = weights[v]
            if av == 2:
                twos += 1
            elif av == 1 and not seen[v]:
                seen[v] = 1
                c0 = c1 = 0
                stack = [v]
                while stack:
                    u = stack.pop()
                    if colors[u]:
                        c1 += 1
                    else:
                        c0 += 1
                    for w in adj[u]:
                        if weights[w] == 1 and not seen[w]:
                            seen[w] = 1
                            stack.append(w)
                comps.append((c0, c1) if c0 >= c1 else (c1, c0))
        comps.sort()
        return (tuple(comps), twos)

    def expansion(self, weights: Sequence[int]) -> Mapping[tuple[int, int], int]:
        return expansion_from_signature(self.signature(weights))

    def poly(self, weights: Sequence[int]) -> Mapping[tuple[int, int], int]:
        return poly_from_signature(self.signature(weights))

    def is_positive(self, weights: Sequence[int]) -> bool:
        return min_coefficient(self.expansion(weights)) >= 0
