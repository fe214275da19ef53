"""JSON Schemas for the ``--format json`` output of every CLI command."""

_MP = {"type": "string", "pattern": r"^(-|\d+(\.\d+)*)(\|(-|\d+(\.\d+)*))*$"}
_POLY = {"type": "string"}
_PARAMS = {
    "e": {"type": "integer", "minimum": 2},
    "charges": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}
_FOCK_VECTOR = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"mp": _MP, "coef": _POLY},
        "required": ["mp", "coef"],
        "additionalProperties": False,
    },
}


def _obj(props: dict, required: list[str]) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": props,
        "required": required,
    }


SCHEMAS = {
    "enumerate": _obj(
        {"d": {"type": "integer"}, "n": {"type": "integer"}, "multipartitions": {"type": "array", "items": _MP}},
        ["d", "n", "multipartitions"],
    ),
    "crystal": _obj(
        {
            **_PARAMS,
            "order": {"enum": ["am", "flotw"]},
            "n_max": {"type": "integer"},
            "layers": {"type": "array", "items": {"type": "array", "items": _MP}},
            "edges": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "source": _MP,
                        "label": {"type": "integer", "minimum": 0},
                        "target": _MP,
                    },
                    "required": ["source", "label", "target"],
                },
            },
        },
        ["e", "charges", "order", "n_max", "layers", "edges"],
    ),
    "flotw": _obj(
        {**_PARAMS, "n": {"type": "integer"}, "multipartitions": {"type": "array", "items": _MP}},
        ["e", "charges", "multipartitions"],
    ),
    "kleshchev": _obj(
        {**_PARAMS, "n": {"type": "integer"}, "multipartitions": {"type": "array", "items": _MP}},
        ["e", "charges", "multipartitions"],
    ),
    "membership": _obj(
        {**_PARAMS, "mp": _MP, "member": {"type": "boolean"}}, ["e", "charges", "mp", "member"]
    ),
    "aseq": _obj(
        {
            **_PARAMS,
            "mp": _MP,
            "sequence": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "runs": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": "integer"},
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        ["e", "charges", "mp", "sequence", "runs"],
    ),
    "avalue": _obj(
        {
            **_PARAMS,
            "n": {"type": "integer"},
            "values": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"mp": _MP, "a": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}},
                    "required": ["mp", "a"],
                },
            },
        },
        ["e", "charges", "n", "values"],
    ),
    "avector": _obj({**_PARAMS, "mp": _MP, "vector": _FOCK_VECTOR}, ["e", "charges", "mp", "vector"]),
    "canbasis": _obj(
        {
            **_PARAMS,
            "n": {"type": "integer"},
            "order": {"enum": ["am", "flotw"]},
            "columns": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"label": _MP, "vector": _FOCK_VECTOR},
                    "required": ["label", "vector"],
                },
            },
        },
        ["e", "charges", "n", "order", "columns"],
    ),
    "decmat": _obj(
        {
            **_PARAMS,
            "n": {"type": "integer"},
            "order": {"enum": ["am", "flotw"]},
            "rows": {"type": "array", "items": _MP},
            "columns": {"type": "array", "items": _MP},
            "entries": {
                "type": "array",
                "items": {"type": "array", "items": {"type": ["integer", "string"]}},
            },
        },
        ["e", "charges", "n", "order", "rows", "columns", "entries"],
    ),
    "verify-cbs": _obj(
        {
            **_PARAMS,
            "n": {"type": "integer"},
            "semisimple": {"type": "boolean"},
            "passed": {"type": "boolean"},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "name": {"type": "string"},
                        "passed": {"type": "boolean"},
                        "detail": {"type": "string"},
                    },
                    "required": ["name", "passed"],
                },
            },
        },
        ["e", "charges", "n", "passed", "checks"],
    ),
    "basicset": _obj(
        {
            "type": {"enum": ["A", "B", "D"]},
            "e": {"type": "integer", "minimum": 2},
            "n": {"type": "integer", "minimum": 0},
            "labels": {
                "type": "array",
                "items": {
                    "anyOf": [
                        {"type": "string"},
                        {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
                        {
                            "type": "object",
                            "properties": {"half": {"type": "string"}, "sign": {"enum": ["+", "-"]}},
                            "required": ["half", "sign"],
                            "additionalProperties": False,
                        },
                    ]
                },
            },
        },
        ["type", "e", "n", "labels"],
    ),
}
