from fastapi import APIRouter, Query

from ybhomology.errors import YBHomologyError
from ybhomology.routes import RankMode, http_error
from ybhomology.schemas import DecompositionPayload
from ybhomology.suites import run_decompose
from ybhomology.tensor.elimination import use_rank_mode

router = APIRouter(prefix="/decompose", tags=["kernel"])


@router.get("", response_model=DecompositionPayload)
def decompose(
    m: int = Query(2, ge=1, le=4),
    n: int = Query(3, ge=1, le=5),
    rank_mode: RankMode = "eval",
):
    """V^n as the direct sum of [V]_k ⊗ ker sigma_{n-k}, with the eigenvalue and basis of each part."""
    try:
        with use_rank_mode(rank_mode):
            return run_decompose(m, n)
    except YBHomologyError as e:
        raise http_error(e)
