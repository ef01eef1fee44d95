# Homology of a posted coefficient module

from typing import Any, Dict

from fastapi import APIRouter, Body, HTTPException, Query
from pydantic import ValidationError

from ybhomology.errors import YBHomologyError
from ybhomology.homology.modules import VModuleSpec
from ybhomology.routes import RankMode, http_error
from ybhomology.schemas import MODULE_FILE_ADAPTER, HomologyReport
from ybhomology.suites import run_homology, spec_from_file
from ybhomology.tensor.elimination import use_rank_mode

router = APIRouter(prefix="/homology", tags=["homology"])


def parse_module(payload: Dict[str, Any]) -> VModuleSpec:
    """Validate a module body the same way module files are validated."""
    try:
        return spec_from_file(MODULE_FILE_ADAPTER.validate_python(payload))
    except ValidationError as e:
        raise HTTPException(status_code=422, detail=e.errors(include_url=False, include_context=False))
    except YBHomologyError as e:
        raise http_error(e)


@router.post("", response_model=HomologyReport)
def homology(
    payload: Dict[str, Any] = Body(...),
    n_max: int = Query(3, ge=0, le=6),
    rank_mode: RankMode = "eval",
):
    """Direct homology dims, Betti formula and splitting checks for the posted module.

    A module whose action matrices do not commute fails the wall condition
    and is rejected with 422.
    """
    spec = parse_module(payload)
    try:
        with use_rank_mode(rank_mode):
            return run_homology(spec, n_max)
    except YBHomologyError as e:
        raise http_error(e)
