"""Concrete objects counted by the higher Catalan numbers.

* lattice paths with steps ``U = +1`` and ``D = -(nu-1)``,
* queues of customers paying with 1-dollar (``"1"``) or nu-dollar (``"N"``)
  bills for 1-dollar widgets,
* dissections of a marked ``((nu-1) j + 2)``-gon into ``(nu+1)``-gons.

Paths serialize as strings over ``U``/``D``, queue lines as strings over
``1``/``N`` joined with ``|``, dissections as ``"sides:a-b,c-d"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, NamedTuple, Sequence

from .errors import SizeGuardError
from .series import binom

UP, DOWN = "U", "D"
ONE, NU = "1", "N"

MAX_PATH_STEPS = 24
MAX_DISSECTION_FACES = 10


# -- paths ---------------------------------------------------------------


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LatticePath:
    nu: int
    steps: tuple[str, ...]

    def __post_init__(self):
        if self.nu < 2:
            raise ValueError(f"nu must be >= 2, got {self.nu}")
        bad = set(self.steps) - {UP, DOWN}
        if bad:
            raise ValueError(f"unknown steps {sorted(bad)}")

    @classmethod
    def from_string(cls, nu: int, text: str) -> LatticePath:
        return cls(nu, tuple(text))

    def __str__(self) -> str:
        return "".join(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Running heights, starting with 0 before the first step."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == UP else 1 - self.nu))
        return h

    def is_dyck(self) -> bool:
        h = self.heights()
        return h[-1] == 0 and min(h) >= 0

    @property
    def down_count(self) -> int:
        return self.steps.count(DOWN)


def count_paths_between(p: LatticePoint, q: LatticePoint, nu: int) -> int:
    """Number of ``(1,1)``/``(1,-(nu-1))`` paths from ``p`` to ``q``.

    Solves ``u + d = dx``, ``u - (nu-1) d = dy``; zero when the system has no
    nonnegative integer solution.
    """
    dx, dy = q.x - p.x, q.y - p.y
    if dx <= 0:
        raise ValueError("count_paths_between needs p.x < q.x")
    d, r = divmod(dx - dy, nu)
    if r or d < 0 or d > dx:
        return 0
    return binom(dx, d)


def count_paths_touching_below(nu: int, j: int) -> int:
    """Paths from ``(0,0)`` to ``(nu j, 0)`` that go below the axis.

    Each such path is matched with ``nu - 1`` paths started from ``(0, -nu)``,
    which gives ``(nu-1) C(nu j, j-1)``.
    """
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    return (nu - 1) * count_paths_between(LatticePoint(0, -nu), LatticePoint(nu * j, 0), nu)


def check_guard(what: str, size: int, limit: int | None) -> None:
    """Raise :class:`SizeGuardError` when ``size`` exceeds a non-None ``limit``."""
    if limit is not None and size > limit:
        raise SizeGuardError(what, size, limit)


def iter_all_paths(nu: int, j: int, max_steps: int | None = MAX_PATH_STEPS) -> Iterator[LatticePath]:
    """Every arrangement of ``j`` down steps among ``nu j`` steps, no positivity constraint."""
    n = nu * j
    check_guard("nu*j", n, max_steps)
    for downs in combinations(range(n), j):
        steps = [UP] * n
        for k in downs:
            steps[k] = DOWN
        yield LatticePath(nu, tuple(steps))


def enumerate_dyck_paths(nu: int, j: int, max_steps: int | None = MAX_PATH_STEPS) -> list[LatticePath]:
    """All paths of ``nu j`` steps staying weakly above 0 and ending at 0.

    Output is lexicographic with ``U < D``.
    """
    if nu < 2 or j < 0:
        raise ValueError(f"need nu >= 2 and j >= 0, got nu={nu}, j={j}")
    n = nu * j
    check_guard("nu*j", n, max_steps)
    out: list[LatticePath] = []
    steps: list[str] = []

    def walk(height: int, ups: int, downs: int) -> None:
        if downs == j and ups == n - j:
            out.append(LatticePath(nu, tuple(steps)))
            return
        if ups < n - j:
            steps.append(UP)
            walk(height + 1, ups + 1, downs)
            steps.pop()
        if downs < j and height >= nu - 1:
            steps.append(DOWN)
            walk(height - (nu - 1), ups, downs + 1)
            steps.pop()

    walk(0, 0, 0)
    return out


def decompose_dyck_path(path: LatticePath) -> tuple[LatticePath, ...]:
    """Split a nonempty Dyck path as ``U P1 U P2 ... U P_{nu-1} D P_nu``.

    The first step and the down step that first returns to 0 form a block of
    ``nu`` steps; the pieces between them are Dyck paths shifted up by
    ``1, 2, ..., nu-1``, and ``P_nu`` is the tail.
    """
    nu = path.nu
    if not path.steps or not path.is_dyck():
        raise ValueError("decompose_dyck_path needs a nonempty Dyck path")
    h = path.heights()
    ret = next(k for k in range(1, len(h)) if h[k] == 0)
    # h[ret-1] == nu-1; steps[1:ret-1] climb from level 1 to level nu-1
    pieces = []
    start = 1
    for level in range(1, nu - 1):
        last = max(k for k in range(start, ret) if h[k] == level)
        pieces.append(path.steps[start:last])
        start = last + 1  # skip the up step leaving this level for good
    pieces.append(path.steps[start:ret - 1])
    pieces.append(path.steps[ret:])
    return tuple(LatticePath(nu, p) for p in pieces)


def compose_dyck_path(pieces: Sequence[LatticePath]) -> LatticePath:
    """Inverse of :func:`decompose_dyck_path`."""
    if not pieces:
        raise ValueError("need nu pieces")
    nu = pieces[0].nu
    if len(pieces) != nu:
        raise ValueError(f"need {nu} pieces, got {len(pieces)}")
    steps: list[str] = []
    for p in pieces[:-2]:
        steps.append(UP)
        steps.extend(p.steps)
    steps.append(UP)
    steps.extend(pieces[-2].steps)
    steps.append(DOWN)
    steps.extend(pieces[-1].steps)
    return LatticePath(nu, tuple(steps))


# -- queues --------------------------------------------------------------


def line_is_valid(line: Sequence[str], nu: int) -> bool:
    """True if every ``N`` customer finds at least ``nu - 1`` ones in the till."""
    till = 0
    for bill in line:
        if bill == ONE:
            till += 1
        elif bill == NU:
            if till < nu - 1:
                return False
            till -= nu - 1
        else:
            raise ValueError(f"unknown bill {bill!r}")
    return True


def line_till(line: Sequence[str], nu: int) -> int:
    return line.count(ONE) - (nu - 1) * line.count(NU)


def line_is_balanced(line: Sequence[str], nu: int) -> bool:
    """Valid and leaves the till empty, i.e. a one-line exact-change queue."""
    return line_is_valid(line, nu) and line_till(line, nu) == 0


@dataclass(frozen=True)
class QueueArrangement:
    nu: int
    lines: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.nu < 2:
            raise ValueError(f"nu must be >= 2, got {self.nu}")
        for line in self.lines:
            bad = set(line) - {ONE, NU}
            if bad:
                raise ValueError(f"unknown bills {sorted(bad)}")

    @classmethod
    def from_string(cls, nu: int, text: str) -> QueueArrangement:
        return cls(nu, tuple(tuple(part) for part in text.split("|")))

    def __str__(self) -> str:
        return "|".join("".join(line) for line in self.lines)

    @property
    def nu_count(self) -> int:
        return sum(line.count(NU) for line in self.lines)

    def is_valid(self) -> bool:
        """Every line is a nonempty exact-change queue on its own."""
        return all(line and line_is_balanced(line, self.nu) for line in self.lines)


_STEP_TO_BILL = {UP: ONE, DOWN: NU}
_BILL_TO_STEP = {ONE: UP, NU: DOWN}


def path_to_queue(path: LatticePath) -> QueueArrangement:
    if not path.is_dyck():
        raise ValueError(f"{path} is not a Dyck path")
    return QueueArrangement(path.nu, (tuple(_STEP_TO_BILL[s] for s in path.steps),))


def queue_to_path(queue: QueueArrangement) -> LatticePath:
    if len(queue.lines) != 1:
        raise ValueError(f"expected a single line, got {len(queue.lines)}")
    line = queue.lines[0]
    if not line_is_balanced(line, queue.nu):
        raise ValueError(f"{queue} is not an exact-change line")
    return LatticePath(queue.nu, tuple(_BILL_TO_STEP[b] for b in line))


def merge_queues(queue: QueueArrangement) -> tuple[str, ...]:
    """Shift ``i`` exact-change lines into one line.

    Repeatedly turn the ``N`` bill at the back of the first line into a ``1``
    bill and append the next line; once a single line is left, drop its last
    customer (an ``N``).  With ``j`` nu-dollar bills in total the result has
    ``j - i`` of them and ``(nu-1) j + i - 1`` one-dollar bills, and every
    prefix still gives change.
    """
    nu = queue.nu
    if not queue.lines:
        raise ValueError("merge_queues needs at least one line")
    if not queue.is_valid():
        raise ValueError(f"{queue}: every line must be a nonempty exact-change queue")
    merged = list(queue.lines[0])
    for line in queue.lines[1:]:
        assert merged[-1] == NU
        merged[-1] = ONE
        merged.extend(line)
    assert merged[-1] == NU
    merged.pop()
    return tuple(merged)


def split_queue(line: Sequence[str], nu: int, i: int) -> QueueArrangement:
    """Undo :func:`merge_queues`.

    Put an ``N`` back at the end, then scan from the back grouping each ``N``
    with ``nu - 1`` ones.  The first ``1`` that no ``N`` behind it claims
    closes off the last line; that ``1`` becomes the ``N`` ending the line in
    front, and the scan repeats until ``i`` lines are recovered.
    """
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if not line_is_valid(line, nu):
        raise ValueError("split_queue needs a line that gives change")
    if line_till(line, nu) != nu * i - 1:
        raise ValueError(
            f"line leaves {line_till(line, nu)} in the till, expected {nu * i - 1} for {i} lines"
        )
    work = list(line) + [NU]
    lines: list[tuple[str, ...]] = []
    for _ in range(i - 1):
        demand = 0
        for k in range(len(work) - 1, -1, -1):
            if work[k] == NU:
                demand += nu - 1
            elif demand:
                demand -= 1
            else:
                break
        else:
            raise ValueError("ran out of customers while splitting")
        lines.append(tuple(work[k + 1:]))
        work = work[: k + 1]
        work[-1] = NU
    lines.append(tuple(work))
    out = QueueArrangement(nu, tuple(reversed(lines)))
    if not out.is_valid():
        raise ValueError("line does not split into exact-change lines")
    return out


def enumerate_queue_arrangements(
    nu: int, i: int, j: int, max_steps: int | None = MAX_PATH_STEPS
) -> list[QueueArrangement]:
    """All ways to form ``i`` nonempty exact-change lines with ``j`` ``N`` bills in total."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    check_guard("nu*j", nu * j, max_steps)
    lines_by_size = {
        k: [path_to_queue(p).lines[0] for p in enumerate_dyck_paths(nu, k, None)]
        for k in range(1, j + 1)
    }
    out = []
    for parts in _compositions(j, i):
        for combo in product(*(lines_by_size[k] for k in parts)):
            out.append(QueueArrangement(nu, tuple(combo)))
    return out


def enumerate_lines(nu: int, ones: int, nus: int, max_steps: int | None = MAX_PATH_STEPS) -> list[tuple[str, ...]]:
    """All lines with the given bill counts in which every customer gets change."""
    check_guard("line length", ones + nus, max_steps)
    out = []
    for pos in combinations(range(ones + nus), nus):
        line = [ONE] * (ones + nus)
        for k in pos:
            line[k] = NU
        if line_is_valid(line, nu):
            out.append(tuple(line))
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- polygon dissections -------------------------------------------------


@dataclass(frozen=True)
class PolygonDissection:
    """Vertices ``0..sides-1`` in convex position, marked edge ``(0, 1)``."""

    nu: int
    j: int
    diagonals: frozenset[tuple[int, int]]

    @property
    def sides(self) -> int:
        return (self.nu - 1) * self.j + 2

    def __str__(self) -> str:
        return f"{self.sides}:" + ",".join(f"{a}-{b}" for a, b in sorted(self.diagonals))

    @classmethod
    def from_string(cls, nu: int, text: str) -> PolygonDissection:
        head, _, body = text.partition(":")
        sides = int(head)
        j, r = divmod(sides - 2, nu - 1)
        if r:
            raise ValueError(f"{sides} sides is not (nu-1) j + 2 for nu={nu}")
        diags = frozenset(
            tuple(sorted(int(v) for v in d.split("-"))) for d in body.split(",") if d
        )
        return cls(nu, j, diags)

    def is_noncrossing(self) -> bool:
        ds = sorted(self.diagonals)
        for (a, b), (c, d) in combinations(ds, 2):
            if a < c < b < d or c < a < d < b:
                return False
        return True

    def faces(self) -> list[tuple[int, ...]]:
        """Faces as vertex cycles, found by walking the planar embedding."""
        n = self.sides
        nbrs: dict[int, list[int]] = {v: [(v - 1) % n, (v + 1) % n] for v in range(n)}
        for a, b in self.diagonals:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for v in nbrs:
            nbrs[v].sort(key=lambda w: (w - v) % n)
        seen: set[tuple[int, int]] = set()
        faces = []
        for u in range(n):
            for v in nbrs[u]:
                # inner faces only: traverse each directed edge with the interior on the left
                if (u, v) in seen or (u == (v + 1) % n):
                    continue
                face = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    # at b, turn to the neighbour just before a in b's ordering
                    nb = nbrs[b]
                    k = nb.index(a)
                    a, b = b, nb[k - 1]
                faces.append(tuple(face))
        return faces


def _dissect(verts: tuple[int, ...], nu: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Dissections of the polygon ``verts`` closed by the chord ``(verts[0], verts[-1])``."""
    m = len(verts) - 1
    if m == 1:
        yield frozenset()
        return
    # face on the closing chord: indices 0 = i_0 < ... < i_nu = m, gaps = 1 mod (nu-1)
    for cuts in _face_cuts(m, nu):
        subs = []
        chords = set()
        for a, b in zip(cuts, cuts[1:]):
            if b - a > 1:
                chords.add(tuple(sorted((verts[a], verts[b]))))
            subs.append(list(_dissect(verts[a:b + 1], nu)))
        for combo in product(*subs):
            out = set(chords)
            for part in combo:
                out |= part
            yield frozenset(out)


def _face_cuts(m: int, nu: int) -> Iterator[tuple[int, ...]]:
    def rec(pos: int, left: int) -> Iterator[tuple[int, ...]]:
        if left == 1:
            gap = m - pos
            if gap >= 1 and (gap - 1) % (nu - 1) == 0:
                yield (m,)
            return
        gap = 1
        while pos + gap < m:
            for rest in rec(pos + gap, left - 1):
                yield (pos + gap,) + rest
            gap += nu - 1

    for rest in rec(0, nu):
        yield (0,) + rest


def enumerate_dissections(
    nu: int, j: int, max_faces: int | None = MAX_DISSECTION_FACES
) -> list[PolygonDissection]:
    """All dissections of the marked ``((nu-1) j + 2)``-gon into ``j`` faces with ``nu + 1`` sides.

    Built from the marked edge: its face splits the rest of the polygon into
    ``nu`` smaller marked polygons, each dissected the same way.
    """
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    check_guard("j", j, max_faces)
    n = (nu - 1) * j + 2
    # walk the boundary from 1 round to 0 so the closing chord is the marked edge
    verts = tuple(range(1, n)) + (0,)
    return [PolygonDissection(nu, j, d) for d in _dissect(verts, nu)]
