"""JSON schema for problem files (draft 2020-12)."""

from __future__ import annotations

from functools import lru_cache

from jsonschema import Draft202012Validator

SCHEMA_VERSION = "1"

NONNEG = {"type": "integer", "minimum": 0}
POS = {"type": "integer", "minimum": 1}

POLY = {
    "type": "object",
    "propertyNames": {"pattern": "^(0|[1-9][0-9]*)$"},
    "additionalProperties": {
        "anyOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?(0|[1-9][0-9]*)$"}]
    },
}

RATIONAL = {
    "type": "object",
    "required": ["numerator"],
    "properties": {
        "numerator": {"$ref": "#/$defs/poly"},
        "denominator": {"type": "array", "items": POS},
    },
    "additionalProperties": False,
}


def _variant(tag: str, required: list[str], props: dict) -> dict:
    return {
        "if": {"properties": {"type": {"const": tag}}, "required": ["type"]},
        "then": {
            "required": ["type", *required],
            "properties": {"type": True, **props},
            "additionalProperties": False,
        },
    }


GROUP = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["gm", "torus", "gl", "sl", "trivial", "product", "bg-explicit"]}},
    "allOf": [
        _variant("gm", [], {}),
        _variant("torus", ["rank"], {"rank": POS}),
        _variant("gl", ["n"], {"n": POS}),
        _variant("sl", ["n"], {"n": POS}),
        _variant("trivial", [], {}),
        _variant("product", ["factors"], {"factors": {"type": "array", "items": {"$ref": "#/$defs/group"}}}),
        _variant(
            "bg-explicit",
            ["numerator"],
            {
                "numerator": {"$ref": "#/$defs/poly"},
                "denominator": {"type": "array", "items": {"type": "integer", "minimum": 2, "multipleOf": 2}},
                "dim": NONNEG,
            },
        ),
    ],
}

SPACE = {
    "type": "object",
    "required": ["type"],
    "properties": {
        "type": {"enum": ["point", "projective", "grassmannian", "product", "poly", "blowup", "classifying"]}
    },
    "allOf": [
        _variant("point", [], {}),
        _variant("projective", ["n"], {"n": NONNEG}),
        _variant("grassmannian", ["k", "n"], {"k": NONNEG, "n": NONNEG}),
        _variant("product", ["factors"], {"factors": {"type": "array", "items": {"$ref": "#/$defs/space"}}}),
        _variant("poly", ["coeffs", "dim"], {"coeffs": {"$ref": "#/$defs/poly"}, "dim": NONNEG}),
        _variant(
            "blowup",
            ["base", "center", "codim"],
            {"base": {"$ref": "#/$defs/space"}, "center": {"$ref": "#/$defs/space"}, "codim": POS},
        ),
        _variant("classifying", ["group"], {"group": {"$ref": "#/$defs/group"}}),
    ],
}

PIECE = {
    "type": "object",
    "required": ["codim"],
    "properties": {
        "codim": POS,
        "leaf": {"$ref": "#/$defs/rational"},
        "sub": {"$ref": "#/$defs/reductive"},
    },
    "oneOf": [{"required": ["leaf"]}, {"required": ["sub"]}],
    "additionalProperties": False,
}

REDUCTIVE_BODY = {
    "space": {"$ref": "#/$defs/space"},
    "group": {"$ref": "#/$defs/group"},
    "dim_x": NONNEG,
    "dim_g": NONNEG,
    "ss_equals_s": {"type": "boolean"},
    "strata": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["label", "pieces"],
            "properties": {
                "label": {"type": "string", "minLength": 1},
                "pieces": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/piece"}},
            },
            "additionalProperties": False,
        },
    },
}

REDUCTIVE = {
    "type": "object",
    "required": ["space", "group"],
    "properties": {"problem": {"const": "reductive"}, **REDUCTIVE_BODY},
    "additionalProperties": False,
}

STAGE = {
    "type": "object",
    "required": ["stab_dim", "codim", "center_series"],
    "properties": {
        "i": NONNEG,
        "stab_dim": NONNEG,
        "codim": POS,
        "center_series": {"$ref": "#/$defs/poly"},
    },
    "additionalProperties": False,
}

GRADED_GROUP = {
    "type": "object",
    "required": ["dim_u"],
    "properties": {
        "dim_u": POS,
        "grading_weight": POS,
        "levi": {"$ref": "#/$defs/group"},
        "adapted": {"type": "boolean"},
    },
    "additionalProperties": False,
}


def _nr_body(with_stages: bool) -> dict:
    body = {
        "group": GRADED_GROUP,
        "dim_x": NONNEG,
        "dim_zmin": NONNEG,
        "zmin_series": {"$ref": "#/$defs/poly"},
        "zmin_ss_equals_s": {"type": "boolean"},
        "quotient_zmin_dim": NONNEG,
        "stages": {"type": "array", "items": STAGE} if with_stages else {"type": "array", "maxItems": 0},
    }
    return body


BB_BODY = {
    "components": {
        "type": "array",
        "minItems": 1,
        "items": {
            "type": "object",
            "required": ["series", "codim"],
            "properties": {"series": {"$ref": "#/$defs/poly"}, "codim": NONNEG},
            "additionalProperties": False,
        },
    },
    "zmin_series": {"$ref": "#/$defs/poly"},
    "dim": NONNEG,
}

OPTIONS = {
    "type": "object",
    "properties": {
        "truncate": NONNEG,
        "format": {"enum": ["plain", "latex", "json"]},
        "allow_trivial_stages": {"type": "boolean"},
    },
    "additionalProperties": False,
}

PROBLEM_KINDS = ("reductive", "uhat", "h", "uhat-blowups", "h-blowups", "bb", "space")


def _file_variant(kind: str, required: list[str], body: dict, extra: dict | None = None) -> dict:
    then = {
        "required": required,
        "properties": {"problem": True, "schema_version": True, "options": True, **body},
        "additionalProperties": False,
    }
    if extra:
        then.update(extra)
    return {"if": {"properties": {"problem": {"const": kind}}, "required": ["problem"]}, "then": then}


_NR_REQUIRED = ["group", "dim_x", "dim_zmin", "zmin_series"]

PROBLEM_FILE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["problem"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "problem": {"enum": list(PROBLEM_KINDS)},
        "options": OPTIONS,
    },
    "allOf": [
        _file_variant("reductive", ["space", "group"], REDUCTIVE_BODY),
        _file_variant("uhat", _NR_REQUIRED, _nr_body(False)),
        _file_variant("h", _NR_REQUIRED, _nr_body(False)),
        _file_variant("uhat-blowups", _NR_REQUIRED, _nr_body(True)),
        _file_variant("h-blowups", _NR_REQUIRED, _nr_body(True)),
        _file_variant(
            "bb",
            [],
            BB_BODY,
            {"oneOf": [{"required": ["components"]}, {"required": ["zmin_series"]}]},
        ),
        _file_variant("space", ["space"], {"space": {"$ref": "#/$defs/space"}}),
    ],
    "$defs": {
        "poly": POLY,
        "rational": RATIONAL,
        "group": GROUP,
        "space": SPACE,
        "piece": PIECE,
        "reductive": REDUCTIVE,
    },
}


@lru_cache(maxsize=None)
def validator() -> Draft202012Validator:
    Draft202012Validator.check_schema(PROBLEM_FILE)
    return Draft202012Validator(PROBLEM_FILE)
