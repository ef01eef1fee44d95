from fastapi import APIRouter, Query

from ybhomology.errors import YBHomologyError
from ybhomology.routes import RankMode, http_error
from ybhomology.schemas import KernelReport
from ybhomology.suites import run_kernel
from ybhomology.tensor.elimination import use_rank_mode

router = APIRouter(prefix="/kernel", tags=["kernel"])


@router.get("", response_model=KernelReport)
def kernel(
    m: int = Query(2, ge=1, le=4),
    n_max: int = Query(4, ge=0, le=6),
    decompositions: bool = True,
    rank_mode: RankMode = "eval",
):
    """M(n) table with tilde dimensions, generator and Hilbert-series verdicts."""
    try:
        with use_rank_mode(rank_mode):
            return run_kernel(m, n_max, decompositions=decompositions)
    except YBHomologyError as e:
        raise http_error(e)
