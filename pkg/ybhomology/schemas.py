# --- ybhomology/schemas.py ---
from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator

from ybhomology.settings import RANK_MODES


# Run configuration shared by the CLI and the HTTP routes
class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Literal["check", "kernel", "homology", "decompose", "koszul"]
    m: int = 2
    n_max: int = 4
    n: Optional[int] = None  # single degree for decompose
    module_path: Optional[str] = None
    free: bool = False
    output: Literal["json", "csv", "pretty"] = "json"
    rank_mode: str = "eval"
    truncation: int = 6
    seed: int = 0
    save: bool = False

    @field_validator("m")
    @classmethod
    def check_m(cls, v: int) -> int:
        if v < 1:
            raise ValueError("m must be at least 1")
        return v

    @field_validator("n_max", "truncation")
    @classmethod
    def check_nonnegative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be nonnegative")
        return v

    @field_validator("rank_mode")
    @classmethod
    def check_rank_mode(cls, v: str) -> str:
        if v not in RANK_MODES:
            raise ValueError(f"rank mode must be one of {', '.join(RANK_MODES)}")
        return v

    @model_validator(mode="after")
    def check_module_source(self):
        if self.command in ("homology", "koszul") and not (self.free or self.module_path):
            raise ValueError(f"{self.command} needs --module or --free")
        if self.command == "decompose" and self.n is not None and self.n < 1:
            raise ValueError("decompose needs n >= 1")
        return self


# Wire formats for matrices and subspaces
class MatrixPayload(BaseModel):
    rows: int
    cols: int
    entries: List[List[Union[int, str]]] = []

    @field_validator("entries")
    @classmethod
    def check_triples(cls, v):
        for entry in v:
            if len(entry) != 3:
                raise ValueError("entries must be [row, col, value] triples")
        return v


class SubspacePayload(BaseModel):
    ambient_dim: int
    basis: MatrixPayload


# Coefficient module files
class FiniteModuleFile(BaseModel):
    kind: Literal["finite"] = "finite"
    l: int
    m: int
    A: List[List[List[Union[int, str]]]]
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_shapes(self):
        if len(self.A) != self.m:
            raise ValueError(f"expected {self.m} action matrices, got {len(self.A)}")
        for idx, mat in enumerate(self.A):
            if len(mat) != self.l or any(len(row) != self.l for row in mat):
                raise ValueError(f"A[{idx}] must be {self.l}x{self.l}")
        return self


class FreeModuleFile(BaseModel):
    kind: Literal["free"] = "free"
    m: int
    max_total_degree: int = 6


ModuleFile = Annotated[Union[FiniteModuleFile, FreeModuleFile], Field(discriminator="kind")]
MODULE_FILE_ADAPTER = TypeAdapter(ModuleFile)


# Reports
class CheckReport(BaseModel):
    command: Literal["check"] = "check"
    m: int
    n_max: int
    rank_mode: str
    checks: Dict[str, bool]
    first_failure: Optional[str] = None
    passed: bool


class DecompositionEntry(BaseModel):
    k: int
    dim: int
    eigenvalue: str
    basis: Optional[SubspacePayload] = None


class DecompositionPayload(BaseModel):
    command: Literal["decompose"] = "decompose"
    n: int
    m: int
    parts: List[DecompositionEntry]
    dims_sum: int
    direct_sum_ok: bool
    checks: Dict[str, bool] = {}
    passed: bool = True


class KernelDegreeRecord(BaseModel):
    n: int
    M: int
    M_recurrence: int
    tilde_dim: Optional[int] = None
    b: int = 0
    decomposition: List[DecompositionEntry] = []
    checks: Dict[str, bool] = {}


class KernelReport(BaseModel):
    command: Literal["kernel"] = "kernel"
    m: int
    n_max: int
    rank_mode: str
    records: List[KernelDegreeRecord]
    hilbert: Dict[str, bool] = {}
    recurrences: Dict[str, bool] = {}
    generators: Optional[bool] = None
    passed: bool


class HomologyRecord(BaseModel):
    n: int
    total_degree: Optional[int] = None
    dim_C: int
    rank_out: int
    rank_in: int
    dim_H: int
    betti_formula: Optional[int] = None
    checks: Dict[str, bool] = {}


class HomologyReport(BaseModel):
    command: Literal["homology"] = "homology"
    module: str
    kind: Literal["finite", "free"]
    m: int
    n_max: int
    rank_mode: str
    r: Optional[List[int]] = None
    r_stacked: Optional[List[int]] = None
    finite_part: Optional[List[int]] = None
    records: List[HomologyRecord] = []
    checks: Dict[str, bool] = {}
    passed: bool = True


class KoszulReport(BaseModel):
    command: Literal["koszul"] = "koszul"
    module: str
    kind: Literal["finite", "free"]
    m: int
    rank_mode: str
    squares: Dict[str, bool]
    delta_exact: Dict[str, bool] = {}
    passed: bool
