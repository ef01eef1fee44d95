# --- ybhomology/suites.py ---
"""Verification suites behind the CLI subcommands and the HTTP routes.

Each suite returns a pydantic report; checks are kept in insertion order so
the first failing identity can be named.
"""
from __future__ import annotations

import logging
from typing import Dict, Optional, Union

from ybhomology import settings
from ybhomology.homology.betti import betti_from_ranks, r_ranks, r_ranks_stacked
from ybhomology.homology.complex import ChainComplex, finite_part_homology, homology_dims, verify_complex_splitting
from ybhomology.homology.koszul import delta_exactness, koszul_squares
from ybhomology.homology.modules import (
    VModuleSpec,
    finite_module,
    free_module,
    module_label,
    require_valid_module,
    wall_condition_trials,
)
from ybhomology.kernel import (
    KernelTower,
    b_counts,
    check_direct_sum,
    check_dimension_count,
    check_graded_algebra,
    check_kernel_vanishing,
    check_m2_recurrences,
    check_omega_images,
    check_sigma_restriction,
    expected_tilde_dim,
    hilbert_results,
    kernel_dim_direct,
    kernel_dims_recurrence,
    verify_decomposition,
    verify_generator_examples,
)
from ybhomology.scalar import format_ratfunc
from ybhomology.schemas import (
    CheckReport,
    DecompositionEntry,
    DecompositionPayload,
    FiniteModuleFile,
    FreeModuleFile,
    HomologyReport,
    KernelDegreeRecord,
    KernelReport,
    KoszulReport,
)
from ybhomology.tensor.elimination import current_rank_mode
from ybhomology.ybop import (
    build_R,
    check_bracket_eigen,
    check_bracket_intersection,
    check_bracket_recursions,
    check_invertible,
    check_ybe,
    phi_formula_results,
    sigma_identity_results,
)

LOGGER = logging.getLogger(__name__)

HILBERT_SERIES_DEGREE = 8


def first_failure(checks: Dict[str, bool]) -> Optional[str]:
    return next((name for name, ok in checks.items() if not ok), None)


def spec_from_file(payload: Union[FiniteModuleFile, FreeModuleFile],
                   truncation: Optional[int] = None) -> VModuleSpec:
    """Turn a validated module file into a VModuleSpec; truncation overrides the file's bound."""
    if isinstance(payload, FreeModuleFile):
        bound = truncation if truncation is not None else payload.max_total_degree
        return free_module(payload.m, bound)
    return finite_module(payload.A, name=payload.name or "")


# -- check ----------------------------------------------------------------------

def run_check(m: int, n_max: int, seed: Optional[int] = None, trials: int = 20) -> CheckReport:
    """YBE, the sigma identities, bracket and phi properties, the decomposition and
    wall-condition trials for one alphabet size."""
    yb = build_R(m)
    checks: Dict[str, bool] = {"ybe": check_ybe(yb.R), "invertible": check_invertible(yb.R)}
    for n in range(1, n_max + 1):
        if n >= 2:
            for name, ok in sigma_identity_results(yb, n).items():
                checks[f"{name}_n{n}"] = ok
        checks[f"bracket_recursions_n{n}"] = check_bracket_recursions(yb, n)
        checks[f"bracket_eigen_n{n}"] = check_bracket_eigen(yb, n)
        if n >= 2:
            checks[f"bracket_intersection_n{n}"] = check_bracket_intersection(yb, n)
        for name, ok in phi_formula_results(yb, n).items():
            checks[f"{name}_n{n}"] = ok
        checks[f"decomposition_n{n}"] = verify_decomposition(yb, n).ok
        checks[f"sigma_restriction_n{n}"] = all(check_sigma_restriction(yb, n, k) for k in range(1, n + 1))
    if n_max >= 2:
        records = wall_condition_trials(yb, trials=trials, seed=settings.SEED if seed is None else seed)
        checks["wall_iff_commuting"] = all(r["wall"] == r["commuting"] for r in records)
        checks["commuting_modules_commute"] = all(r["commuting"] for r in records if r["constructed_commuting"])
    failure = first_failure(checks)
    LOGGER.info("check m=%d n_max=%d: %s", m, n_max, "passed" if failure is None else f"failed at {failure}")
    return CheckReport(m=m, n_max=n_max, rank_mode=current_rank_mode(), checks=checks,
                       first_failure=failure, passed=failure is None)


# -- kernel ---------------------------------------------------------------------

def _decomposition_entries(report, bases: bool = False) -> list:
    return [DecompositionEntry(k=p.k, dim=p.dim, eigenvalue=format_ratfunc(p.eigenvalue),
                               basis=p.space.to_payload() if bases else None)
            for p in report.parts]


def run_kernel(m: int, n_max: int, decompositions: bool = True) -> KernelReport:
    """M(n) directly and by recurrence, tilde dimensions and the algebra structure of ⊕ ker σ_n."""
    yb = build_R(m)
    tower = KernelTower(yb)
    recurrence = kernel_dims_recurrence(m, n_max)
    direct = [kernel_dim_direct(yb, n) for n in range(n_max + 1)]
    counts = b_counts(m)
    records = []
    for n in range(n_max + 1):
        LOGGER.debug("kernel suite m=%d n=%d", m, n)
        tilde_dim = tower.tilde(n).dim
        checks = {
            "recurrence": direct[n] == recurrence[n],
            "tilde_dim": tilde_dim == expected_tilde_dim(m, n),
            "dimension_count": check_dimension_count(yb, n, direct),
        }
        entries = []
        if n >= 1:
            checks["direct_sum"] = check_direct_sum(tower, n)
            checks["graded_algebra"] = all(check_graded_algebra(tower, s, n - s) for s in range(1, n))
            checks["omega_images"] = check_omega_images(tower, n)
            if decompositions:
                report = verify_decomposition(yb, n)
                checks["decomposition"] = report.ok
                entries = _decomposition_entries(report)
        if n > m + 1:
            checks["kernel_vanishing"] = check_kernel_vanishing(tower, n)
        records.append(KernelDegreeRecord(
            n=n, M=direct[n], M_recurrence=recurrence[n], tilde_dim=tilde_dim,
            b=counts.get(n, 0), decomposition=entries, checks=checks,
        ))
    hilbert = hilbert_results(m, max(n_max, HILBERT_SERIES_DEGREE))
    recurrences = check_m2_recurrences(direct) if m == 2 else {}
    generators = None
    if m in (2, 3) and n_max >= 2:
        generators = verify_generator_examples(yb, n_max=min(n_max, 5 if m == 2 else 4))
    passed = (all(all(r.checks.values()) for r in records) and all(hilbert.values())
              and all(recurrences.values()) and generators is not False)
    LOGGER.info("kernel m=%d n_max=%d: %s", m, n_max, "passed" if passed else "failed")
    return KernelReport(m=m, n_max=n_max, rank_mode=current_rank_mode(), records=records,
                        hilbert=hilbert, recurrences=recurrences, generators=generators, passed=passed)


def run_decompose(m: int, n: int) -> DecompositionPayload:
    yb = build_R(m)
    report = verify_decomposition(yb, n)
    checks = dict(report.checks)
    checks["sigma_restriction"] = all(check_sigma_restriction(yb, n, k) for k in range(1, n + 1))
    return DecompositionPayload(
        n=n, m=m, parts=_decomposition_entries(report, bases=True), dims_sum=report.dims_sum,
        direct_sum_ok=report.direct_sum_ok, checks=checks,
        passed=report.direct_sum_ok and all(checks.values()),
    )


# -- homology -------------------------------------------------------------------

def run_homology(spec: VModuleSpec, n_max: int) -> HomologyReport:
    """Direct homology, the closed Betti formula, the bracket splitting and the Koszul squares."""
    yb = build_R(spec.m)
    require_valid_module(spec, yb)
    cx = ChainComplex(spec, yb)
    report = homology_dims(spec, yb, n_max, complex_=cx)
    checks: Dict[str, bool] = {}
    if spec.is_free:
        for n in range(1, min(n_max, spec.max_total_degree) + 1):
            checks[f"splitting_n{n}"] = verify_complex_splitting(spec, yb, n, total_degree=n, complex_=cx)
        for name, ok in delta_exactness(spec, yb, cx).items():
            checks[f"delta_exact_{name}"] = ok
    else:
        r = r_ranks(spec, yb)
        stacked = r_ranks_stacked(spec)
        report.r, report.r_stacked = r, stacked
        checks["r_presentations_agree"] = r == stacked
        for record in report.records:
            record.betti_formula = betti_from_ranks(spec.l, spec.m, r, record.n)
            record.checks["betti_formula"] = record.betti_formula == record.dim_H
            if record.betti_formula != record.dim_H:
                LOGGER.warning("Betti formula gives %d but direct homology is %d at n=%d",
                               record.betti_formula, record.dim_H, record.n)
        report.finite_part = finite_part_homology(cx)
        for n in range(0, n_max + 1):
            checks[f"splitting_n{n}"] = verify_complex_splitting(spec, yb, n, complex_=cx)
    checks.update(koszul_squares(spec, yb, cx))
    report.checks = checks
    report.passed = all(checks.values()) and all(all(r.checks.values()) for r in report.records)
    LOGGER.info("homology of %s up to n=%d: %s", module_label(spec), n_max,
                "passed" if report.passed else "failed")
    return report


def run_koszul(spec: VModuleSpec) -> KoszulReport:
    yb = build_R(spec.m)
    require_valid_module(spec, yb)
    cx = ChainComplex(spec, yb)
    squares = koszul_squares(spec, yb, cx)
    delta = delta_exactness(spec, yb, cx) if spec.is_free else {}
    passed = all(squares.values()) and all(delta.values())
    return KoszulReport(module=module_label(spec), kind=spec.kind, m=spec.m, rank_mode=current_rank_mode(),
                        squares=squares, delta_exact=delta, passed=passed)
