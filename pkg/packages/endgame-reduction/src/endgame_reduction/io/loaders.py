"""
Endgame Reduction — IO Loaders (The "Dirty" Layer)

File IO and YAML parsing for the reduction package.

STRICT BOUNDARY:
- ALLOWED: File IO, YAML parsing, package resources.
- FORBIDDEN: compiler.py, layout.py and templates.py MUST NOT import this.
- CONSUMER: Only `endgame_reduction.factory` should import this.
"""
from importlib import resources
from pathlib import Path
from typing import Any, Dict

import yaml


def load_yaml_file(path: str | Path) -> Dict[str, Any]:
    """Load raw YAML file."""
    p = Path(path)
    with open(p, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def load_packaged_yaml(package: str, name: str) -> Dict[str, Any]:
    """Load a YAML document shipped inside a package."""
    text = resources.files(package).joinpath(name).read_text(encoding="utf-8")
    return yaml.safe_load(text)
