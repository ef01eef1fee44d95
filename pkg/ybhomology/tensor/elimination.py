# --- ybhomology/tensor/elimination.py ---
"""Rank over Q(y): sympy DomainMatrix on cleared rows, or evaluation at primes.

Every rank computation first splits the matrix into connected components of
its row/column incidence graph; all the operators built from R_m are block
diagonal over letter-content weight spaces, so the blocks stay small.
"""
from __future__ import annotations

import logging
import math
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from itertools import count
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ybhomology import settings
from ybhomology.errors import RankMismatchError, ResampleRequired
from ybhomology.scalar import ONE_POLY, Y_SYMBOL, IntPoly
from ybhomology.tensor.linmap import LinMap

LOGGER = logging.getLogger(__name__)

_RANK_MODE: ContextVar[str] = ContextVar("ybh_rank_mode", default=settings.RANK_MODE)


@contextmanager
def use_rank_mode(mode: str):
    if mode not in settings.RANK_MODES:
        raise ValueError(f"rank mode must be one of {settings.RANK_MODES}, got {mode!r}")
    token = _RANK_MODE.set(mode)
    try:
        yield mode
    finally:
        _RANK_MODE.reset(token)


def current_rank_mode() -> str:
    return _RANK_MODE.get()


def primes() -> Iterator[int]:
    """2, 3, 5, 7, ... by trial division."""
    found: List[int] = []
    for candidate in count(2):
        if all(candidate % p for p in found if p * p <= candidate):
            found.append(candidate)
            yield candidate


# -- row preparation ------------------------------------------------------

PolyRow = Dict[int, IntPoly]


def components(rows: Dict[int, Dict[int, object]]) -> List[List[int]]:
    """Group row ids into connected components of the row/column graph."""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows.values():
        cols = list(row)
        for c in cols:
            parent.setdefault(c, c)
        root = find(cols[0]) if cols else None
        for c in cols[1:]:
            rc = find(c)
            if rc != root:
                parent[rc] = root
    groups: Dict[int, List[int]] = {}
    for rid in sorted(rows):
        row = rows[rid]
        if row:
            groups.setdefault(find(next(iter(row))), []).append(rid)
    return list(groups.values())


def _clear_row(row) -> Tuple[PolyRow, IntPoly]:
    """Multiply a RatFunc row by its denominator lcm; returns integer polys and that lcm."""
    lcm = ONE_POLY
    for v in row.values():
        if not v.den.is_one():
            g = lcm.gcd(v.den)
            lcm = lcm * v.den.exact_div(g)
    cleared = {}
    for c, v in row.items():
        cleared[c] = v.num if v.den.is_one() and lcm.is_one() else v.num * lcm.exact_div(v.den)
    dens = [Fraction(x).denominator for p in cleared.values() for x in p.coeffs if not isinstance(x, int)]
    if dens:
        scale = math.lcm(*dens)
        cleared = {c: p.scale(scale) for c, p in cleared.items()}
    return cleared, lcm


def cleared_rows(f: LinMap) -> Tuple[Dict[int, PolyRow], List[IntPoly]]:
    rows = {}
    poles = []
    for rid, row in f.row_vectors().items():
        rows[rid], lcm = _clear_row(row)
        if not lcm.is_const():
            poles.append(lcm)
    return rows, poles


# -- exact rank over Z(y) --------------------------------------------------

_ZZ_Y = ZZ[Y_SYMBOL]


def _domain_element(p: IntPoly):
    return _ZZ_Y.ring.from_dict({(k,): c for k, c in enumerate(p.coeffs) if c})


def to_domain_matrix(rows: Dict[int, PolyRow]) -> DomainMatrix:
    """Cleared rows as a sparse DomainMatrix over Z[y], columns renumbered densely."""
    cols = sorted({c for r in rows.values() for c in r})
    col_pos = {c: j for j, c in enumerate(cols)}
    sdm = {i: {col_pos[c]: _domain_element(p) for c, p in row.items()}
           for i, row in enumerate(rows.values())}
    return DomainMatrix(sdm, (len(rows), len(cols)), _ZZ_Y)


def rank_exact(f: LinMap) -> int:
    """Rank over Q(y): fraction-free rref of the integer-cleared rows over Z[y], per component."""
    rows, _ = cleared_rows(f)
    total = 0
    for comp in components(rows):
        _, _, pivots = to_domain_matrix({rid: rows[rid] for rid in comp}).rref_den()
        total += len(pivots)
    LOGGER.debug("rank_exact %dx%d -> %d", f.rows, f.cols, total)
    return total


# -- evaluation at sample points -------------------------------------------

def _int_rank(rows: List[Dict[int, int]]) -> int:
    """Rank over Q of an evaluated block."""
    rows = [r for r in rows if r]
    if not rows:
        return 0
    col_pos = {c: j for j, c in enumerate(sorted({c for r in rows for c in r}))}
    sdm = {i: {col_pos[c]: ZZ(x) for c, x in r.items()} for i, r in enumerate(rows)}
    return DomainMatrix(sdm, (len(rows), len(col_pos)), ZZ).to_field().rank()


def _is_even(p: IntPoly) -> bool:
    return not any(p.coeffs[1::2])


def _even_reduce(rows: Dict[int, PolyRow], poles: List[IntPoly]):
    """Rewrite polynomials in y^2 as polynomials in t = y^2, or None if some are not even."""
    if not all(_is_even(p) for r in rows.values() for p in r.values()):
        return None
    if not all(_is_even(p) for p in poles):
        return None
    halve = lambda p: IntPoly._raw(p.coeffs[::2])  # noqa: E731
    return ({rid: {c: halve(p) for c, p in r.items()} for rid, r in rows.items()},
            [halve(p) for p in poles])


def _component_eval(rows: Dict[int, PolyRow], poles: List[IntPoly],
                    points: Optional[Sequence[int]]) -> Tuple[int, bool]:
    if points is None:
        # R_m only involves y^2, so sample in t = y^2 with half the degree
        reduced = _even_reduce(rows, poles)
        if reduced is not None:
            rows, poles = reduced
    nrows = len(rows)
    ncols = len({c for r in rows.values() for c in r})
    limit = min(nrows, ncols)
    d = max(p.degree for r in rows.values() for p in r.values())
    if d == 0:
        return _int_rank([{c: p(0) for c, p in r.items()} for r in rows.values()]), False
    source = iter(points) if points is not None else primes()
    best = -1
    seen = set()
    valid = 0
    skipped = 0
    cap = (limit + 1) * d + 1 + sum(p.degree for p in poles)
    for point in source:
        if any(p(point) == 0 for p in poles):
            skipped += 1
            continue
        valid += 1
        ev = []
        for r in rows.values():
            er = {}
            for c, p in r.items():
                x = p(point)
                if x:
                    er[c] = x
            ev.append(er)
        rk = _int_rank(ev)
        seen.add(rk)
        best = max(best, rk)
        if best == limit or valid >= (best + 1) * d + 1:
            return best, len(seen) > 1
        if points is None and valid + skipped > cap:
            break
    raise ResampleRequired(
        f"{valid} valid sample points (skipped {skipped}) are not enough for degree bound {d}"
    )


def _rank_eval_detail(f: LinMap, points: Optional[Sequence[int]] = None) -> Tuple[int, bool]:
    rows, poles = cleared_rows(f)
    total = 0
    varied = False
    for comp in components(rows):
        block = {rid: rows[rid] for rid in comp}
        rk, v = _component_eval(block, poles, points)
        total += rk
        varied = varied or v
    return total, varied


def rank_eval(f: LinMap, points: Optional[Sequence[int]] = None) -> int:
    """Rank as the maximum rank over sample points y = p.

    Sampling stops once the number of pole-free points exceeds (rho+1)*d,
    where rho is the best rank seen and d the cleared entry degree: a nonzero
    (rho+1)-minor has at most that many roots. Points where a denominator
    vanishes are skipped; ResampleRequired is raised if an explicit point
    list runs out first.
    """
    return _rank_eval_detail(f, points)[0]


def rank(f: LinMap, mode: Optional[str] = None) -> int:
    mode = mode or current_rank_mode()
    if mode == "exact":
        return rank_exact(f)
    if mode == "eval":
        r, varied = _rank_eval_detail(f)
        if varied:
            exact = rank_exact(f)
            LOGGER.warning("evaluated rank varied across points on %dx%d matrix; exact rank %d",
                           f.rows, f.cols, exact)
            return exact
        return r
    if mode == "both":
        exact = rank_exact(f)
        r, _ = _rank_eval_detail(f)
        if exact != r:
            LOGGER.warning("rank mismatch exact=%d eval=%d", exact, r)
            raise RankMismatchError(exact, r, f.shape)
        return exact
    raise ValueError(f"unknown rank mode {mode!r}")
