"""JSON reports: assembly, canonical serialization and schema validation."""
from __future__ import annotations

import json
from importlib import resources

import jsonschema

SCHEMA_VERSION = "1.0"


def load_schema() -> dict:
    text = resources.files("k3deg").joinpath("schemas/report.schema.json").read_text("utf-8")
    return json.loads(text)


def make_report(command: str, input_echo: dict, *, valid=True, errors=(), result=None,
                exit_code=0, seed=None, timing=None) -> dict:
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input_echo,
        "validation": {"valid": bool(valid), "errors": list(errors)},
        "result": result,
        "exit_code": exit_code,
    }
    if seed is not None:
        rep["seed"] = seed
    if timing is not None:
        rep["timing"] = timing
    return rep


def validate_report(rep: dict):
    jsonschema.validate(rep, load_schema())


def dumps(rep: dict) -> str:
    # sorted keys make the output byte-stable for a fixed input and seed
    return json.dumps(rep, sort_keys=True, indent=2, ensure_ascii=False)


def loads(text: str) -> dict:
    rep = json.loads(text)
    validate_report(rep)
    return rep
