from typing import Any, Dict

from fastapi import APIRouter, Body

from ybhomology.errors import YBHomologyError
from ybhomology.routes import RankMode, http_error
from ybhomology.routes.homology import parse_module
from ybhomology.schemas import KoszulReport
from ybhomology.suites import run_koszul
from ybhomology.tensor.elimination import use_rank_mode

router = APIRouter(prefix="/koszul", tags=["homology"])


@router.post("", response_model=KoszulReport)
def koszul(payload: Dict[str, Any] = Body(...), rank_mode: RankMode = "eval"):
    spec = parse_module(payload)
    try:
        with use_rank_mode(rank_mode):
            return run_koszul(spec)
    except YBHomologyError as e:
        raise http_error(e)
