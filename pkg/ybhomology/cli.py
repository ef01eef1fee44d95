# --- ybhomology/cli.py ---
"""Command line entry point: ``python -m ybhomology.cli <command> [flags]``.

Exit status 0 means every check passed, 1 that a check was falsified, and 2
a usage error or a malformed module file.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from ybhomology import settings
from ybhomology.errors import ModuleError, YBHomologyError
from ybhomology.homology.modules import free_module
from ybhomology.paths import module_path
from ybhomology.reports import render, save_report
from ybhomology.schemas import MODULE_FILE_ADAPTER, FiniteModuleFile, FreeModuleFile, RunConfig
from ybhomology.suites import run_check, run_decompose, run_homology, run_kernel, run_koszul, spec_from_file
from ybhomology.tensor.elimination import use_rank_mode

LOGGER = logging.getLogger(__name__)

DEFAULT_N_MAX = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ybh", description="Exact one-term Yang-Baxter homology for R_m.")
    parser.add_argument("--log-level", default=None, help="overrides YBH_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--m", type=int, default=2, help="alphabet size")
        p.add_argument("--n-max", type=int, default=None, help="degree bound")
        p.add_argument("--output", choices=["json", "csv", "pretty"], default="json")
        p.add_argument("--rank-mode", choices=list(settings.RANK_MODES), default=settings.RANK_MODE)
        p.add_argument("--save", action="store_true", help="also write the report under YBH_REPORTS_DIR")
        return p

    p = add("check", "YBE, sigma identities, brackets, phi formula, decomposition, wall trials")
    p.add_argument("--seed", type=int, default=settings.SEED)
    add("kernel", "M(n) table, tilde dimensions, generators, Hilbert identity")
    p = add("decompose", "eigenspace decomposition of V^n for a single n")
    p.add_argument("--n", type=int, default=None)
    for name, help_text in (("homology", "homology of a coefficient module"),
                            ("koszul", "Koszul comparison squares")):
        p = add(name, help_text)
        source = p.add_mutually_exclusive_group()
        source.add_argument("--module", dest="module_path", default=None, help="module JSON file")
        source.add_argument("--free", action="store_true", help="use the free module K[v_1..v_m]")
        p.add_argument("--truncation", type=int, default=None, help="total-degree bound for --free")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    truncation = getattr(args, "truncation", None)
    truncation = settings.TRUNCATION if truncation is None else truncation
    n_max = args.n_max
    if n_max is None:
        n_max = truncation if getattr(args, "free", False) else DEFAULT_N_MAX
    return RunConfig(
        command=args.command,
        m=args.m,
        n_max=n_max,
        n=getattr(args, "n", None),
        module_path=getattr(args, "module_path", None),
        free=getattr(args, "free", False),
        output=args.output,
        rank_mode=args.rank_mode,
        truncation=truncation,
        seed=getattr(args, "seed", settings.SEED),
        save=args.save,
    )


def load_module(path: Union[str, Path]) -> Union[FiniteModuleFile, FreeModuleFile]:
    """Read and validate a module file; failures carry the offending location."""
    resolved = module_path(str(path))
    try:
        text = resolved.read_text()
    except OSError as e:
        raise ModuleError(f"cannot read module file: {e.strerror}", str(resolved)) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModuleError(e.msg, f"{resolved.name}:{e.lineno}:{e.colno}") from e
    try:
        return MODULE_FILE_ADAPTER.validate_python(data)
    except ValidationError as e:
        err = e.errors()[0]
        location = ".".join(str(part) for part in err["loc"])
        raise ModuleError(err["msg"], f"{resolved.name}:{location}") from e


def execute(config: RunConfig):
    """Run the suite named by config.command and return its report."""
    if config.command == "check":
        return run_check(config.m, config.n_max, seed=config.seed)
    if config.command == "kernel":
        return run_kernel(config.m, config.n_max)
    if config.command == "decompose":
        return run_decompose(config.m, config.n if config.n is not None else config.n_max)
    if config.free:
        spec = free_module(config.m, config.truncation)
    else:
        spec = spec_from_file(load_module(config.module_path))
    if config.command == "homology":
        return run_homology(spec, config.n_max)
    return run_koszul(spec)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings.configure_logging(args.log_level)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2
    try:
        with use_rank_mode(config.rank_mode):
            report = execute(config)
    except YBHomologyError as e:
        LOGGER.debug("%s raised", type(e).__name__, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    print(render(report, config.output))
    if config.save:
        save_report(report, config.output)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
