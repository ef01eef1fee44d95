from typing import Literal

from fastapi import HTTPException

from ybhomology.errors import YBHomologyError

RankMode = Literal["exact", "eval", "both"]


def http_error(e: YBHomologyError) -> HTTPException:
    """Bad input is a 400; a module or identity that fails a check is a 422."""
    status = 400 if e.exit_code == 2 else 422
    return HTTPException(status_code=status, detail=str(e))
