"""
ParityKit Utility Functions Module
==================================
Small helpers shared across the package: PARITYKIT_* overrides from the
environment or the project .env, JSON files (with "-" meaning standard
input/output) and generator lists for error text.

Functions:
----------
- env_setting(name: str, default: Optional[str] = None) -> Optional[str]
- load_json_file(file_path: str) -> Any
- save_json_file(data: Any, file_path: str) -> None
- dump_json(data: Any) -> str
- join_names(names: Iterable, limit: int = 8) -> str
"""

from typing import Any, Iterable, Optional
from dotenv import load_dotenv
import json
import os
import sys

# Explicitly load the .env file located at the project root
dotenv_path = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), '.env')
load_dotenv(dotenv_path)


def env_setting(name: str, default: Optional[str] = None) -> Optional[str]:
    """An override from the environment; blank values count as unset."""
    value = os.getenv(name, '').strip()
    return value or default


def load_json_file(file_path: str) -> Any:
    """Load and parse a JSON file; "-" reads standard input."""
    if file_path == '-':
        return json.load(sys.stdin)
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"File not found: {file_path}")
    with open(file_path, 'r', encoding='utf-8') as file:
        return json.load(file)


def dump_json(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def save_json_file(data: Any, file_path: str) -> None:
    """Save data to a JSON file; "-" writes standard output."""
    text = dump_json(data)
    if file_path == '-':
        sys.stdout.write(text)
        return
    with open(file_path, 'w', encoding='utf-8') as file:
        file.write(text)


def join_names(names: Iterable, limit: int = 8) -> str:
    """Comma-separated names; past the limit the rest are only counted."""
    names = [str(name) for name in names]
    shown = ", ".join(names[:limit])
    if len(names) > limit:
        shown += f" (+{len(names) - limit} more)"
    return shown
