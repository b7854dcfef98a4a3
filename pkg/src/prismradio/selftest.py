"""Cross-module invariant suites backing the ``prismradio selftest`` command.

Each suite re-derives facts one module promises from another module's
independent route: graph diameters against the closed form, the phi table
against its first-principles ceiling derivation, constructions against the
pair-by-pair verifier, and the exact solver against formula values on tiny
instances.  A suite reports its first failing check, so a defect localizes
to the module whose suite goes red.

``inject_fault="phi"`` deliberately perturbs one phi-table entry for the
duration of the run (test mode for the localization story itself); the
bounds suite and only the bounds suite must catch it.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from . import bounds as _bounds
from .bounds import (
    _phi_from_triple_budget,
    check_triple_bound,
    d_offset,
    in_phi_scope,
    lower_bound_rn,
    omega,
    phi,
)
from .exact import SearchConfig, exact_radio_number
from .graphs import Vertex, build_graph, is_v_tight, principal_cycle, standard_cycle
from .labeling import (
    CaseId,
    Labeling,
    case_select,
    construct_labeling,
    label_sequence,
    _POSITION_FOR_CASE,
)
from .verification import verify

__all__ = ["SuiteResult", "run_selftest"]

# entry perturbed by fault injection: (r=2, s=1), i.e. n = 4k+2 with s = 1
_FAULT_KEY = (2, 1)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.first_failure: str | None = None

    def check(self, condition: bool, detail: str) -> None:
        self.checks += 1
        if not condition and self.first_failure is None:
            self.first_failure = detail

    def result(self) -> SuiteResult:
        if self.first_failure is None:
            return SuiteResult(self.name, True, f"{self.checks} checks")
        return SuiteResult(self.name, False, self.first_failure)


def _supported_params(n_max: int):
    for n in range(3, n_max + 1):
        for s in (1, 2, 3):
            if s <= n:
                yield n, s


def _graphs_suite(n_max: int) -> SuiteResult:
    suite = _Suite("graphs")
    for n, s in _supported_params(n_max):
        g = build_graph(n, s)
        suite.check(
            g.diameter == (n + 3 - s) // 2,
            f"diameter of Z({n},{s}) is {g.diameter}, closed form says {(n + 3 - s) // 2}",
        )
        degrees = (g.dist == 1).sum(axis=0)
        suite.check(
            bool((degrees == 2 + s).all()),
            f"Z({n},{s}) has a vertex of degree != {2 + s}",
        )
        d = g.dist
        suite.check(bool((d == d.T).all()) and bool((np.diag(d) == 0).all()),
                    f"distance matrix of Z({n},{s}) not a symmetric metric")
        if n <= 30:
            ok = all(bool((d <= d[:, k][:, None] + d[k][None, :]).all()) for k in range(2 * n))
            suite.check(ok, f"triangle inequality fails in Z({n},{s})")
        if s == 1:
            pos = np.arange(n)
            ring = np.minimum(np.abs(pos[:, None] - pos[None, :]), n - np.abs(pos[:, None] - pos[None, :]))
            closed = np.block([[ring, ring + 1], [ring + 1, ring]])
            suite.check(bool((d == closed).all()),
                        f"s=1 closed-form distances disagree with BFS on Z({n},1)")
        for which in (1, 2):
            pc = principal_cycle(g, which)
            suite.check(all(is_v_tight(g, pc, v) for v in pc),
                        f"principal cycle {which} of Z({n},{s}) not distance-true")
        sc = standard_cycle(g)
        suite.check(sc.length == n + 3 - s,
                    f"standard cycle of Z({n},{s}) has length {sc.length}")
        suite.check(is_v_tight(g, sc, Vertex(1, 1)),
                    f"standard cycle of Z({n},{s}) not tight at (1,1)")
    return suite.result()


def _bounds_suite(n_max: int) -> SuiteResult:
    suite = _Suite("bounds")
    # table vs independent ceiling derivation, over a wide arithmetic range
    for n in range(4, max(n_max, 200) + 1):
        for s in (1, 2, 3):
            if not in_phi_scope(n, s):
                continue
            suite.check(
                phi(n, s) == _phi_from_triple_budget(n, s),
                f"phi table disagrees with triple-budget derivation at (n={n}, s={s}): "
                f"{phi(n, s)} vs {_phi_from_triple_budget(n, s)}",
            )
            diam = (n + 3 - s) // 2
            suite.check(2 * phi(n, s) >= diam, f"2*phi < diam at (n={n}, s={s})")
            if case_select(n, s) is CaseId.CASE1:
                w = omega(n)
                suite.check(phi(n, s) + w >= diam + 1,
                            f"phi + omega < diam + 1 at (n={n}, s={s})")
                slack = 1 if (n - s) % 2 == 0 else 2
                suite.check(phi(n, s) - w >= slack,
                            f"phi - omega < {slack} at (n={n}, s={s})")
    for n, s in _supported_params(n_max):
        g = build_graph(n, s)
        off = d_offset(n, s)
        suite.check(
            all(g.distance(Vertex(1, y), g.vertex(2, y + off)) == g.diameter
                for y in range(1, n + 1)),
            f"d_offset does not realize the diameter on Z({n},{s})",
        )
        if n <= 16:
            suite.check(check_triple_bound(g),
                        f"triple-distance budget exceeded in Z({n},{s})")
    return suite.result()


def _labeling_suite(n_max: int) -> SuiteResult:
    suite = _Suite("labeling")
    for n, s in _supported_params(n_max):
        case = case_select(n, s)
        if case is CaseId.UNSUPPORTED:
            continue
        g = build_graph(n, s)
        lab = construct_labeling(n, s)
        report = verify(g, lab)
        suite.check(report.valid,
                    f"constructed labeling of Z({n},{s}) is invalid: {report.violations[:1]}")
        if case is CaseId.SPECIAL_3_3:
            suite.check(lab.span == 6, "Z(3,3) labeling span is not 6")
        elif case is CaseId.SPECIAL_4_3:
            suite.check(lab.span == 9, "Z(4,3) witness span is not 9")
        if case in _POSITION_FOR_CASE:
            position = _POSITION_FOR_CASE[case]
            seen = {position(n, s, j) for j in range(1, 2 * n + 1)}
            suite.check(len(seen) == 2 * n,
                        f"position map for Z({n},{s}) is not a bijection")
            suite.check(
                all(g.distance(position(n, s, 2 * i - 1), position(n, s, 2 * i)) == g.diameter
                    for i in range(1, n + 1)),
                f"consecutive sorted pair not at diameter distance in Z({n},{s})",
            )
            seq = label_sequence(n, s)
            suite.check(lab.span == seq[-1] == lower_bound_rn(n, s),
                        f"span of Z({n},{s}) misses the lower bound")
            step = phi(n, s)
            suite.check(
                all(seq[j + 4] - seq[j] >= 2 * step for j in range(2 * n - 4))
                and 2 * step >= g.diameter,
                f"window property fails for Z({n},{s})",
            )
    return suite.result()


def _verification_suite(n_max: int) -> SuiteResult:
    suite = _Suite("verification")
    for n, s in [(5, 1), (8, 2), (min(n_max, 12), 3)]:
        if case_select(n, s) is CaseId.UNSUPPORTED:
            continue
        g = build_graph(n, s)
        lab = construct_labeling(n, s)
        shifted = Labeling(n=n, s=s, assignment={v: c + 7 for v, c in lab.assignment.items()})
        suite.check(verify(g, shifted).valid,
                    f"label translation broke validity on Z({n},{s})")
        items = lab.items_sorted()
        broken = dict(lab.assignment)
        broken[items[0][0]] = items[1][1]  # duplicate one label
        report = verify(g, Labeling(n=n, s=s, assignment=broken))
        suite.check(not report.valid and any(w.label_gap == 0 for w in report.violations),
                    f"duplicate label not flagged on Z({n},{s})")
    return suite.result()


def _exact_suite(n_max: int) -> SuiteResult:
    suite = _Suite("exact")
    instances = [(3, 3, 6)]
    if n_max >= 4:
        instances += [(4, 1, 11), (4, 2, 8), (4, 3, 9)]
    for n, s, expected in instances:
        g = build_graph(n, s)
        res = exact_radio_number(g, SearchConfig(use_phi_pruning=in_phi_scope(n, s)))
        suite.check(res.rn == expected and res.proven_optimal,
                    f"exact search on Z({n},{s}) returned {res.rn}, expected {expected}")
        suite.check(verify(g, res.witness).valid and res.witness.span == res.rn,
                    f"exact witness for Z({n},{s}) does not verify")
    return suite.result()


@contextmanager
def _injected_phi_fault():
    _bounds._PHI_STEP[_FAULT_KEY] += 1
    try:
        yield
    finally:
        _bounds._PHI_STEP[_FAULT_KEY] -= 1


def run_selftest(n_max: int = 20, inject_fault: str | None = None) -> list[SuiteResult]:
    """Run all suites up to n_max and return their results in module order."""
    if n_max < 3:
        raise ValueError(f"selftest needs n_max >= 3, got {n_max}")
    if inject_fault not in (None, "phi"):
        raise ValueError(f"unknown fault kind: {inject_fault!r}")

    def run_all() -> list[SuiteResult]:
        return [
            _graphs_suite(n_max),
            _bounds_suite(n_max),
            _labeling_suite(n_max),
            _verification_suite(n_max),
            _exact_suite(n_max),
        ]

    if inject_fault == "phi":
        with _injected_phi_fault():
            return run_all()
    return run_all()
