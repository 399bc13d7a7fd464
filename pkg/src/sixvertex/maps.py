"""Brute-force enumeration of rooted 4-valent maps and their Eulerian orientations.

Darts are the integers ``0 .. 4n-1``; vertex ``v`` owns darts ``4v .. 4v+3``
in counterclockwise order, so the rotation ``sigma`` is fixed and a map is
just the edge involution ``alpha``.  Dart ``0`` is the root.  Faces are the
cycles of ``sigma o alpha`` and the genus follows from ``V - E + F = 2 - 2g``.

Maps are generated directly in canonical form: darts are processed in label
order, and the partner of the smallest unmatched dart is either an unmatched
dart on an already discovered vertex or the first dart of a brand-new vertex.
Each rooted map therefore appears exactly once with no isomorphism testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .coeffring import GammaPoly
from .errors import CapExceeded, VerificationFailure

DEFAULT_CAP = 4
SLOW_CAP = 5


@dataclass(frozen=True)
class DartMap:
    n: int
    alpha: tuple[int, ...]
    root: int = 0

    def sigma(self, d: int) -> int:
        return 4 * (d // 4) + (d % 4 + 1) % 4

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(d, e) for d, e in enumerate(self.alpha) if d < e]

    def faces(self) -> list[list[int]]:
        seen = [False] * (4 * self.n)
        out = []
        for start in range(4 * self.n):
            if seen[start]:
                continue
            cycle = []
            d = start
            while not seen[d]:
                seen[d] = True
                cycle.append(d)
                d = self.sigma(self.alpha[d])
            out.append(cycle)
        return out

    @property
    def genus(self) -> int:
        euler = self.n - 2 * self.n + len(self.faces())
        return (2 - euler) // 2

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.sigma(d), self.alpha[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == 4 * self.n


def rooted_quartic_planar_count(n: int) -> int:
    """Number of rooted 4-regular planar maps with ``n`` vertices."""
    return 2 * 3**n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def _check_cap(n: int, allow_slow: bool):
    if n < 1:
        raise ValueError("need at least one vertex")
    cap = SLOW_CAP if allow_slow else DEFAULT_CAP
    if n > cap:
        hint = "" if allow_slow else f" (the slow opt-in raises it to {SLOW_CAP})"
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}{hint}")


def _canonical_matchings(n: int):
    size = 4 * n
    alpha = [-1] * size

    def rec(nverts: int):
        try:
            d = alpha.index(-1)
        except ValueError:
            if nverts == n:
                yield tuple(alpha)
            return
        for e in range(d + 1, 4 * nverts):
            if alpha[e] == -1:
                alpha[d], alpha[e] = e, d
                yield from rec(nverts)
                alpha[d] = alpha[e] = -1
        if nverts < n:
            e = 4 * nverts
            alpha[d], alpha[e] = e, d
            yield from rec(nverts + 1)
            alpha[d] = alpha[e] = -1

    yield from rec(1)


def gen_quartic_maps(n: int, genus: int = 0, allow_slow: bool = False) -> list[DartMap]:
    """One representative per rooted 4-valent map with ``n`` vertices and given genus."""
    _check_cap(n, allow_slow)
    out = []
    for alpha in _canonical_matchings(n):
        m = DartMap(n, alpha)
        if m.genus == genus:
            out.append(m)
    return out


def eulerian_orientations(m: DartMap):
    """Yield the set of outgoing darts for each Eulerian orientation with the root outgoing."""
    edges = m.edges
    root_edge = next(i for i, (a, b) in enumerate(edges) if 0 in (a, b))
    others = [e for i, e in enumerate(edges) if i != root_edge]
    for bits in itertools.product((0, 1), repeat=len(others)):
        out_darts = [0]
        for (a, b), bit in zip(others, bits):
            out_darts.append(b if bit else a)
        outdeg = [0] * m.n
        for d in out_darts:
            outdeg[d // 4] += 1
        if all(x == 2 for x in outdeg):
            yield frozenset(out_darts)


def alternating_vertices(m: DartMap, out_darts: frozenset[int]) -> int:
    """Vertices whose two outgoing darts are opposite in the rotation."""
    count = 0
    for v in range(m.n):
        outs = [d % 4 for d in range(4 * v, 4 * v + 4) if d in out_darts]
        if len(outs) != 2:
            raise VerificationFailure(f"vertex {v} has out-degree {len(outs)}")
        if (outs[1] - outs[0]) % 4 == 2:
            count += 1
    return count


def count_EO_gamma(n: int, genus: int = 0, allow_slow: bool = False) -> GammaPoly:
    """Sum over rooted maps and orientations of ``gamma^(#alternating vertices)``."""
    counts = [0] * (n + 1)
    for m in gen_quartic_maps(n, genus, allow_slow):
        for outs in eulerian_orientations(m):
            counts[alternating_vertices(m, outs)] += 1
    return GammaPoly(counts)


@dataclass
class EnumerationResult:
    n: int
    genus: int
    map_count: int
    polynomial: GammaPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "genus": self.genus,
            "map_count": self.map_count,
            "polynomial": self.polynomial.to_json(),
        }


def enumerate_maps(n: int, genus: int = 0, allow_slow: bool = False) -> EnumerationResult:
    maps = gen_quartic_maps(n, genus, allow_slow)
    counts = [0] * (n + 1)
    for m in maps:
        for outs in eulerian_orientations(m):
            counts[alternating_vertices(m, outs)] += 1
    return EnumerationResult(n, genus, len(maps), GammaPoly(counts))
