"""Cross-verification suites and their machine-readable report.

Each suite compares an expected exact value with an independently computed
one over a fixed default range.  Values are reported as decimal strings
(``"p"`` or ``"p/q"``); a case passes iff the two values are equal.

Report document (``REPORT_SCHEMA``)::

    {"schema": ..., "ok": bool,
     "summary": {"total": int, "passed": int, "elapsed_ms": int},
     "suites": [{"suite": name,
                 "cases": [{"inputs": {...}, "expected": str, "actual": str, "pass": bool}],
                 "summary": {"total": int, "passed": int, "elapsed_ms": int}}]}
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import catalan as cat
from . import gluing, lattice, maps
from .series import TruncatedSeries, format_scalar, series_log, series_pow, solve_z

REPORT_SCHEMA = "higher-catalan/verify-report/1"

# default ranges, kept small enough that `verify --suite all` stays well under a minute
CHAIN_NUS, CHAIN_MAX_STEPS = (2, 3, 4), 16
SERIES_NUS, SERIES_MAX_J = (2, 3, 4, 5), 30
STAR_NUS, STAR_MAX_J = (2, 3, 4, 5, 6), 40
ETA_MAX_I, ETA_MAX_J = 5, 20
QUEUE_NU, QUEUE_MAX_J, QUEUE_MAX_I = 2, 5, 3
PSG_MAX_ALPHA, PSG_ORDER = 5, 25
ASSEMBLY_NUS, ASSEMBLY_MAX_J = (2, 3, 4, 5, 6), 20
ORACLE_MAX_DARTS = 16
MAP_SERIES_NUS, MAP_SERIES_MAX_J = (2, 3, 4), 12
BIJECTION_NUS, BIJECTION_MAX_STEPS, DECOMPOSE_MAX_STEPS = (2, 3, 4), 16, 12
MERGE_NUS, MERGE_MAX_STEPS = (2, 3), 12


@dataclass(frozen=True)
class Case:
    inputs: dict
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return Fraction(self.expected) == Fraction(self.actual)

    def sort_key(self):
        return tuple(self.inputs), tuple(self.inputs.values())

    def to_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def case(expected, actual, **inputs) -> Case:
    return Case(inputs, format_scalar(expected), format_scalar(actual))


def _catalan_suite() -> Iterator[Case]:
    for nu in CHAIN_NUS:
        j_max = CHAIN_MAX_STEPS // nu
        rec = cat.catalan_by_recursion(nu, j_max)
        z = solve_z(nu, j_max)
        for j in range(j_max + 1):
            want = cat.higher_catalan(nu, j)
            yield case(want, z[j], check="chain", nu=nu, j=j, method="series")
            yield case(want, rec[j], check="chain", nu=nu, j=j, method="recursion")
            yield case(want, len(lattice.enumerate_dyck_paths(nu, j)), check="chain", nu=nu, j=j, method="paths")
            if j:
                yield case(want, len(lattice.enumerate_dissections(nu, j)), check="chain", nu=nu, j=j, method="dissections")
    for nu in SERIES_NUS:
        rec = cat.catalan_by_recursion(nu, SERIES_MAX_J)
        z = solve_z(nu, SERIES_MAX_J)
        for j in range(SERIES_MAX_J + 1):
            want = cat.higher_catalan(nu, j)
            yield case(want, z[j], check="range", nu=nu, j=j, method="series")
            yield case(want, rec[j], check="range", nu=nu, j=j, method="recursion")


def _star_suite() -> Iterator[Case]:
    for nu in STAR_NUS:
        for j in range(1, STAR_MAX_J + 1):
            want = cat.higher_catalan(nu, j)
            yield case(want, cat.star_lhs(nu, j), check="binomials", nu=nu, j=j)
            total = lattice.count_paths_between(lattice.LatticePoint(0, 0), lattice.LatticePoint(nu * j, 0), nu)
            yield case(want, total - lattice.count_paths_touching_below(nu, j), check="reflection", nu=nu, j=j)
    for nu in CHAIN_NUS:
        for j in range(1, CHAIN_MAX_STEPS // nu + 1):
            below = sum(1 for p in lattice.iter_all_paths(nu, j) if min(p.heights()) < 0)
            yield case(lattice.count_paths_touching_below(nu, j), below, check="below-exhaustive", nu=nu, j=j)


def _eta_suite() -> Iterator[Case]:
    for nu in SERIES_NUS:
        zm1 = solve_z(nu, ETA_MAX_J) - 1
        for i in range(1, ETA_MAX_I + 1):
            power = series_pow(zm1, i)
            for j in range(ETA_MAX_J + 1):
                want = cat.eta(nu, i, j)
                yield case(want, cat.eta_by_convolution(nu, i, j), check="convolution", nu=nu, i=i, j=j)
                yield case(want, power[j], check="series", nu=nu, i=i, j=j)
    nu = QUEUE_NU
    for j in range(1, QUEUE_MAX_J + 1):
        for i in range(1, min(QUEUE_MAX_I, j) + 1):
            want = cat.eta(nu, i, j)
            arrangements = lattice.enumerate_queue_arrangements(nu, i, j)
            yield case(want, len(arrangements), check="queues", nu=nu, i=i, j=j)
            lines = lattice.enumerate_lines(nu, (nu - 1) * j + i - 1, j - i)
            yield case(want, len(lines), check="shifted-line", nu=nu, i=i, j=j)


def _log_suite() -> Iterator[Case]:
    for nu in SERIES_NUS:
        log_z = series_log(solve_z(nu, SERIES_MAX_J))
        for j in range(1, SERIES_MAX_J + 1):
            yield case(cat.log_coefficient(nu, j), log_z[j], check="series", nu=nu, j=j)


def _psg_suite() -> Iterator[Case]:
    for nu in SERIES_NUS:
        z = solve_z(nu, PSG_ORDER)
        for alpha in range(PSG_MAX_ALPHA + 1):
            power = series_pow(z, alpha)
            for j in range(PSG_ORDER + 1):
                want = cat.psg_coefficient(nu, alpha, j)
                yield case(want, power[j], check="z-power", nu=nu, alpha=alpha, j=j)
                yield case(want, cat.psg_by_eta(nu, alpha, j), check="eta-sum", nu=nu, alpha=alpha, j=j)
        for alpha in range(0, PSG_MAX_ALPHA + 1):
            lhs, rhs = maps.psg_second_sides(nu, alpha, PSG_ORDER)
            for j in range(PSG_ORDER + 1):
                yield case(rhs[j], lhs[j], check="second", nu=nu, alpha=alpha, j=j)


def _zprime_suite() -> Iterator[Case]:
    for nu in SERIES_NUS:
        lhs, rhs = maps.zprime_sides(nu, PSG_ORDER)
        for j in range(PSG_ORDER):
            yield case(rhs[j], lhs[j], nu=nu, j=j)


def _assembly_suite() -> Iterator[Case]:
    for nu in ASSEMBLY_NUS:
        for j in range(1, ASSEMBLY_MAX_J + 1):
            yield case(maps.kappa0(nu, j), maps.kappa0_assembled(nu, j), nu=nu, j=j)


def oracle_range(max_darts: int = ORACLE_MAX_DARTS) -> list[tuple[int, int]]:
    return [
        (nu, j)
        for nu in range(2, max_darts // 2 + 1)
        for j in range(1, max_darts // (2 * nu) + 1)
    ]


def _maps_suite() -> Iterator[Case]:
    for nu, j in oracle_range():
        table = gluing.count_maps_oracle(nu, j, ORACLE_MAX_DARTS)
        yield case(maps.kappa0(nu, j), table.count(0), check="oracle", nu=nu, j=j, genus=0)
        yield case(maps.kappa1(nu, j), table.count(1), check="oracle", nu=nu, j=j, genus=1)
    for nu in MAP_SERIES_NUS:
        e0 = maps.e0_series(nu, MAP_SERIES_MAX_J)
        e1 = maps.e1_series(nu, MAP_SERIES_MAX_J)
        for j in range(1, MAP_SERIES_MAX_J + 1):
            yield case(maps.kappa0(nu, j), maps.kappa_from_series(e0, j), check="series", nu=nu, j=j, genus=0)
            yield case(maps.kappa1(nu, j), maps.kappa_from_series(e1, j), check="series", nu=nu, j=j, genus=1)


def _bijections_suite() -> Iterator[Case]:
    for nu in BIJECTION_NUS:
        for j in range(BIJECTION_MAX_STEPS // nu + 1):
            paths = lattice.enumerate_dyck_paths(nu, j)
            ok = sum(lattice.queue_to_path(lattice.path_to_queue(p)) == p for p in paths)
            yield case(len(paths), ok, check="path-queue", nu=nu, j=j)
            lines = lattice.enumerate_lines(nu, (nu - 1) * j, j)
            dyck = {tuple(lattice.path_to_queue(p).lines[0]) for p in paths}
            yield case(len(paths), len(lines), check="prefix-balance", nu=nu, j=j)
            yield case(len(lines), sum(line in dyck for line in lines), check="prefix-balance-image", nu=nu, j=j)
            if j and nu * j <= DECOMPOSE_MAX_STEPS:
                ok = sum(lattice.compose_dyck_path(lattice.decompose_dyck_path(p)) == p for p in paths)
                yield case(len(paths), ok, check="decompose", nu=nu, j=j)
    for nu in MERGE_NUS:
        for j in range(1, MERGE_MAX_STEPS // nu + 1):
            for i in range(1, j + 1):
                arrangements = lattice.enumerate_queue_arrangements(nu, i, j)
                merged = [lattice.merge_queues(q) for q in arrangements]
                ok = sum(lattice.split_queue(m, nu, i) == q for m, q in zip(merged, arrangements))
                yield case(len(arrangements), ok, check="split-merge", nu=nu, i=i, j=j)
                lines = lattice.enumerate_lines(nu, (nu - 1) * j + i - 1, j - i)
                ok = sum(lattice.merge_queues(lattice.split_queue(m, nu, i)) == m for m in lines)
                yield case(len(lines), ok, check="merge-split", nu=nu, i=i, j=j)
                yield case(len(lines), len(set(merged)), check="merge-onto", nu=nu, i=i, j=j)


SUITES: dict[str, Callable[[], Iterator[Case]]] = {
    "catalan": _catalan_suite,
    "star": _star_suite,
    "eta": _eta_suite,
    "log": _log_suite,
    "psg": _psg_suite,
    "zprime": _zprime_suite,
    "assembly": _assembly_suite,
    "bijections": _bijections_suite,
    "maps": _maps_suite,
}


def _mutated(c: Case) -> Case:
    return Case(c.inputs, c.expected, format_scalar(Fraction(c.actual) + 1))


def run_suite(name: str, mutate: bool = False) -> dict:
    """Run one suite and return its report section.

    ``mutate`` adds one to the first computed value; it exists to check that
    a single wrong coefficient fails the run.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    t0 = time.perf_counter()
    cases = sorted(SUITES[name](), key=Case.sort_key)
    if mutate and cases:
        cases[0] = _mutated(cases[0])
    elapsed = int((time.perf_counter() - t0) * 1000)
    passed = sum(c.passed for c in cases)
    return {
        "suite": name,
        "cases": [c.to_dict() for c in cases],
        "summary": {"total": len(cases), "passed": passed, "elapsed_ms": elapsed},
    }


def run(suite: str = "all", mutate: str | None = None) -> dict:
    """Run ``suite`` (or every suite) and assemble the full report.

    ``mutate`` names a suite whose first value is perturbed, or ``"all"``.
    """
    names = list(SUITES) if suite == "all" else [suite]
    for name in names + ([mutate] if mutate and mutate != "all" else []):
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    t0 = time.perf_counter()
    sections = [run_suite(n, mutate=mutate in (n, "all")) for n in names]
    total = sum(s["summary"]["total"] for s in sections)
    passed = sum(s["summary"]["passed"] for s in sections)
    return {
        "schema": REPORT_SCHEMA,
        "ok": passed == total,
        "summary": {
            "total": total,
            "passed": passed,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        },
        "suites": sections,
    }


def format_table(report: dict) -> str:
    lines = []
    for s in report["suites"]:
        sm = s["summary"]
        status = "PASS" if sm["passed"] == sm["total"] else "FAIL"
        lines.append(f"{status}  {s['suite']:<11} {sm['passed']}/{sm['total']}  {sm['elapsed_ms']} ms")
        for c in s["cases"]:
            if not c["pass"]:
                lines.append(f"      {c['inputs']}: expected {c['expected']}, got {c['actual']}")
    sm = report["summary"]
    lines.append(f"{'PASS' if report['ok'] else 'FAIL'}  total       {sm['passed']}/{sm['total']}  {sm['elapsed_ms']} ms")
    return "\n".join(lines)
