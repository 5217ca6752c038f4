import json
import os
import pathlib
import subprocess

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("CANTOR_CLI")
    if not path:
        pytest.skip("CANTOR_CLI not set")

    def run(*args, expect=0):
        proc = subprocess.run([path, *map(str, args)], capture_output=True, text=True)
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    root = pathlib.Path(os.environ.get("CANTOR_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))
    return lambda name: json.loads((root / f"{name}.json").read_text())
