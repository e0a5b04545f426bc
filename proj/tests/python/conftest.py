import json
import os
import subprocess

import pytest


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("K3LAT_BIN", "k3lat")

    def run(*args, env=None):
        e = dict(os.environ)
        e.pop("K3LAT_PRECISION_BITS", None)
        e.update(env or {})
        return subprocess.run([exe, *args], capture_output=True, text=True, env=e)

    return run


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("K3LAT_SCHEMA",
                          os.path.join(os.path.dirname(__file__), "..", "..", "schemas", "run_report.schema.json"))
    with open(path) as f:
        return json.load(f)
