# ybhomology/paths.py
from pathlib import Path

# project root (this file is ybhomology/paths.py -> parent.parent is the repo root)
BASE_DIR = Path(__file__).resolve().parent.parent

MODULES_DIR = BASE_DIR / "modules"
REPORTS_DIR = BASE_DIR / "reports"

def module_path(name: str) -> Path:
    path = Path(name)
    if path.suffix != ".json":
        path = path.with_suffix(".json")
    if path.exists():
        return path
    return MODULES_DIR / path.name

def report_path(command: str, m: int, suffix: str, base: Path = None) -> Path:
    return (base or REPORTS_DIR) / f"{command}_m{m}.{suffix}"
