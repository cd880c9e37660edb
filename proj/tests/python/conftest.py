import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def _path(var, default):
    return Path(os.environ.get(var, default))


@pytest.fixture(scope="session")
def cli():
    path = _path("WTYPE_CLI", ROOT / "build" / "wtype")
    if not path.exists():
        pytest.skip("wtype CLI not built")

    def run(*args, stdin=None):
        proc = subprocess.run([str(path), *map(str, args)], input=stdin, capture_output=True, text=True)
        return proc
    return run


@pytest.fixture(scope="session")
def fixtures_dir():
    return _path("WTYPE_FIXTURES", ROOT / "fixtures")


@pytest.fixture(scope="session")
def validator():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    schemas = _path("WTYPE_SCHEMAS", ROOT / "schemas")
    loaded = {p.name: json.loads(p.read_text()) for p in schemas.glob("*.schema.json")}
    registry = Registry()
    for doc in loaded.values():
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

    def validate(name, instance):
        Draft202012Validator(loaded[name], registry=registry).validate(instance)
    return validate
