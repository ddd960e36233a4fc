"""Brute-force map counts from gluings of labeled ``2 nu``-valent vertices.

Dart ``(v, p)`` has index ``v * 2 nu + p``.  The rotation ``sigma`` moves
``p -> p + 1 mod 2 nu`` around its vertex, a matching ``alpha`` is a
fixed-point-free involution on darts, and faces are the cycles of
``sigma o alpha``.  Every one of the ``(2 nu j - 1)!!`` matchings is visited.

The single-diagram functions (:func:`is_connected`, :func:`genus`) are plain
Python; :func:`count_maps_oracle` runs the same computation vectorized over
numpy blocks, one block per partner of dart 0.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import SizeGuardError
from .series import double_factorial

MAX_DARTS = 16


@dataclass(frozen=True)
class GluingDiagram:
    nu: int
    j: int
    matching: tuple[int, ...]

    def __post_init__(self):
        if self.nu < 2 or self.j < 1:
            raise ValueError(f"need nu >= 2 and j >= 1, got nu={self.nu}, j={self.j}")
        n = 2 * self.nu * self.j
        m = self.matching
        if len(m) != n:
            raise ValueError(f"matching has {len(m)} entries, expected {n}")
        for d, e in enumerate(m):
            if not 0 <= e < n or e == d or m[e] != d:
                raise ValueError(f"not a fixed-point-free involution at dart {d}")

    @property
    def darts(self) -> int:
        return len(self.matching)

    def sigma(self, d: int) -> int:
        deg = 2 * self.nu
        v, p = divmod(d, deg)
        return v * deg + (p + 1) % deg

    def vertex(self, d: int) -> int:
        return d // (2 * self.nu)


def _check_guard(nu: int, j: int, max_darts: int | None) -> int:
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    n = 2 * nu * j
    if max_darts is not None and n > max_darts:
        raise SizeGuardError("2*nu*j", n, max_darts)
    return n


def iter_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """Perfect matchings of ``0..n-1`` as partner tuples.

    The lowest unpaired dart is always paired first, with partners tried in
    increasing order.
    """
    if n % 2:
        return
    partner = [-1] * n

    def rec() -> Iterator[tuple[int, ...]]:
        try:
            a = partner.index(-1)
        except ValueError:
            yield tuple(partner)
            return
        for b in range(a + 1, n):
            if partner[b] == -1:
                partner[a], partner[b] = b, a
                yield from rec()
                partner[a] = partner[b] = -1

    yield from rec()


def enumerate_matchings(nu: int, j: int, max_darts: int | None = MAX_DARTS) -> Iterator[tuple[int, ...]]:
    """Stream every matching of the ``2 nu j`` darts of ``j`` vertices."""
    return iter_matchings(_check_guard(nu, j, max_darts))


def is_connected(d: GluingDiagram) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (d.sigma(x), d.matching[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == d.darts


def face_count(d: GluingDiagram, sigma_first: bool = False) -> int:
    """Cycles of ``sigma o alpha`` (or ``alpha o sigma`` when ``sigma_first``)."""
    if sigma_first:
        step = lambda x: d.matching[d.sigma(x)]
    else:
        step = lambda x: d.sigma(d.matching[x])
    seen = [False] * d.darts
    faces = 0
    for x in range(d.darts):
        if not seen[x]:
            faces += 1
            while not seen[x]:
                seen[x] = True
                x = step(x)
    return faces


def genus(d: GluingDiagram) -> int:
    """``g`` from ``V - E + F = 2 - 2g``; the diagram must be connected."""
    if not is_connected(d):
        raise ValueError("genus is only defined for connected gluings")
    twice = 2 - d.j + d.nu * d.j - face_count(d)
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def max_genus(nu: int, j: int) -> int:
    """Largest genus a connected gluing can have (at least one face)."""
    return ((nu - 1) * j + 1) // 2


@dataclass
class GenusCountTable:
    nu: int
    j: int
    total_matchings: int
    counts: dict[int, int] = field(default_factory=dict)

    def count(self, g: int) -> int:
        return self.counts.get(g, 0)

    @property
    def connected(self) -> int:
        return sum(self.counts.values())

    @property
    def disconnected(self) -> int:
        return self.total_matchings - self.connected

    def __add__(self, other: GenusCountTable) -> GenusCountTable:
        if (self.nu, self.j) != (other.nu, other.j):
            raise ValueError("tables for different (nu, j)")
        counts = dict(self.counts)
        for g, c in other.counts.items():
            counts[g] = counts.get(g, 0) + c
        return GenusCountTable(self.nu, self.j, self.total_matchings + other.total_matchings, counts)

    def to_dict(self) -> dict:
        return {
            "nu": self.nu,
            "j": self.j,
            "total": str(self.total_matchings),
            "counts": {str(g): str(c) for g, c in sorted(self.counts.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> GenusCountTable:
        return cls(
            int(data["nu"]),
            int(data["j"]),
            int(data["total"]),
            {int(g): int(c) for g, c in data["counts"].items()},
        )


@lru_cache(maxsize=4)
def _matching_block(n: int) -> np.ndarray:
    """All matchings of ``n`` points as an array of partner rows, in stream order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    rest = _matching_block(n - 2)
    blocks = [_shard_block(n, b, rest) for b in range(1, n)]
    return np.concatenate(blocks)


def _shard_block(n: int, b: int, rest: np.ndarray) -> np.ndarray:
    """Matchings of ``n`` points with dart 0 paired to ``b``."""
    labels = np.array([x for x in range(1, n) if x != b], dtype=np.int8)
    out = np.empty((rest.shape[0], n), dtype=np.int8)
    out[:, 0] = b
    out[:, b] = 0
    out[:, labels] = labels[rest]
    return out


def _orbit_min(perm: np.ndarray, steps: int) -> np.ndarray:
    """Smallest dart in each dart's orbit, by pointer doubling over ``steps`` applications."""
    smallest = np.broadcast_to(np.arange(perm.shape[1], dtype=perm.dtype), perm.shape).copy()
    reach = 1
    while reach < steps:
        np.minimum(smallest, np.take_along_axis(smallest, perm, axis=1), out=smallest)
        perm = np.take_along_axis(perm, perm, axis=1)
        reach *= 2
    return smallest


def _tabulate(nu: int, j: int, block: np.ndarray) -> dict[int, int]:
    n = block.shape[1]
    deg = 2 * nu
    idx = np.arange(n)
    sigma = ((idx // deg) * deg + (idx + 1) % deg).astype(block.dtype)

    # connectivity: propagate the smallest vertex label along edges
    vert = (idx // deg).astype(block.dtype)
    label = np.broadcast_to(np.arange(j, dtype=block.dtype), (block.shape[0], j)).copy()
    for _ in range(j - 1):
        dl = label[:, vert]
        np.minimum(dl, np.take_along_axis(dl, block, axis=1), out=dl)
        label = dl.reshape(-1, j, deg).min(axis=2)
    connected = (label == 0).all(axis=1)

    # faces: darts that are the smallest in their sigma o alpha cycle
    phi = sigma[block[connected]]
    faces = (_orbit_min(phi, n) == idx).sum(axis=1)
    twice_g = 2 - j + nu * j - faces
    hist = np.bincount(twice_g // 2, minlength=max_genus(nu, j) + 1)
    return {g: int(c) for g, c in enumerate(hist)}


def oracle_shard(nu: int, j: int, partner_of_zero: int, max_darts: int | None = MAX_DARTS) -> GenusCountTable:
    """Counts over the matchings that pair dart 0 with ``partner_of_zero``."""
    n = _check_guard(nu, j, max_darts)
    if not 1 <= partner_of_zero < n:
        raise ValueError(f"partner of dart 0 must be in 1..{n - 1}")
    block = _shard_block(n, partner_of_zero, _matching_block(n - 2))
    return GenusCountTable(nu, j, block.shape[0], _tabulate(nu, j, block))


def count_maps_oracle(
    nu: int, j: int, max_darts: int | None = MAX_DARTS, workers: int = 1
) -> GenusCountTable:
    """Tabulate connected gluings by genus.

    The matchings split into ``2 nu j - 1`` shards by the partner of dart 0;
    with ``workers > 1`` the shards run in separate processes and their tables
    are summed.  Serial results are memoized; a fresh table is returned.
    """
    n = _check_guard(nu, j, max_darts)
    if workers > 1:
        shards = list(range(1, n))
        k = len(shards)
        with ProcessPoolExecutor(workers) as pool:
            tables = list(pool.map(oracle_shard, [nu] * k, [j] * k, shards, [max_darts] * k))
        out = _sum_tables(nu, j, tables)
    else:
        total, counts = _oracle_serial(nu, j)
        out = GenusCountTable(nu, j, total, dict(counts))
    assert out.total_matchings == double_factorial(n - 1)
    return out


def _sum_tables(nu: int, j: int, tables) -> GenusCountTable:
    out = GenusCountTable(nu, j, 0, {g: 0 for g in range(max_genus(nu, j) + 1)})
    for t in tables:
        out = out + t
    return out


@lru_cache(maxsize=None)
def _oracle_serial(nu: int, j: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    t = _sum_tables(nu, j, (oracle_shard(nu, j, b, None) for b in range(1, 2 * nu * j)))
    return t.total_matchings, tuple(sorted(t.counts.items()))


def count_maps_slow(nu: int, j: int, max_darts: int | None = MAX_DARTS) -> GenusCountTable:
    """Same table as :func:`count_maps_oracle`, one diagram at a time."""
    counts = {g: 0 for g in range(max_genus(nu, j) + 1)}
    total = 0
    for m in enumerate_matchings(nu, j, max_darts):
        total += 1
        d = GluingDiagram(nu, j, m)
        if is_connected(d):
            g = genus(d)
            counts[g] = counts.get(g, 0) + 1
    return GenusCountTable(nu, j, total, counts)
