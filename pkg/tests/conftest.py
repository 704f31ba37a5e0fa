"""Shared fixtures - project root on sys.path the way main.py does it."""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture
def cli(tmp_path, capsys):
    """Run the CLI against an empty project root; returns (exit code, stdout, stderr)."""
    from src.cli import main

    def run(*argv: str) -> tuple[int, str, str]:
        code = main(["--project-root", str(tmp_path), *argv])
        out, err = capsys.readouterr()
        return code, out, err

    return run
