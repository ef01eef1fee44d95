# Identity checks on R_m: YBE, sigma identities, brackets, phi, wall trials

from typing import Optional

from fastapi import APIRouter, Query

from ybhomology.errors import YBHomologyError
from ybhomology.routes import RankMode, http_error
from ybhomology.schemas import CheckReport
from ybhomology.suites import run_check
from ybhomology.tensor.elimination import use_rank_mode

router = APIRouter(prefix="/check", tags=["check"])


@router.get("", response_model=CheckReport)
def check(
    m: int = Query(2, ge=1, le=4),
    n_max: int = Query(3, ge=0, le=5),
    seed: Optional[int] = None,
    rank_mode: RankMode = "eval",
):
    """Run the identity suite for R_m up to degree n_max."""
    try:
        with use_rank_mode(rank_mode):
            return run_check(m, n_max, seed=seed)
    except YBHomologyError as e:
        raise http_error(e)
