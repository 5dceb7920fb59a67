"""JSON Schemas (draft 2020-12) for every record the CLI prints.

The package itself never validates against these; they are published so
that downstream tools, and the test suite, can.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_NULLABLE_STR = {"type": ["string", "null"]}

CERTIFICATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ZeroCertificate",
    "type": "object",
    "required": ["verdict", "degree", "distinct_real_roots", "isolation", "fail_reason"],
    "additionalProperties": False,
    "properties": {
        "verdict": {"enum": ["REAL_ROOTED", "IN_P_PLUS", "WEAKLY_HURWITZ", "IDENTICALLY_ZERO", "FAIL"]},
        "degree": {"type": "integer", "minimum": -1},
        "distinct_real_roots": {"type": "integer", "minimum": 0},
        "isolation": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lo", "hi", "mult"],
                "additionalProperties": False,
                "properties": {"lo": RATIONAL, "hi": RATIONAL, "mult": {"type": "integer", "minimum": 1}},
            },
        },
        "fail_reason": _NULLABLE_STR,
    },
}

POLY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Poly",
    "type": "object",
    "required": ["coeffs"],
    "additionalProperties": False,
    "properties": {"coeffs": {"type": "array", "items": RATIONAL}},
}

ITERATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "IterationReport",
    "type": "object",
    "required": ["depth_requested", "depth_achieved", "first_negative", "failure"],
    "additionalProperties": False,
    "properties": {
        "depth_requested": {"type": "integer", "minimum": 1},
        "depth_achieved": {"type": "integer", "minimum": 0},
        "first_negative": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["iteration", "index", "value"],
                    "additionalProperties": False,
                    "properties": {
                        "iteration": {"type": "integer"},
                        "index": {"type": "integer"},
                        "value": RATIONAL,
                    },
                },
            ]
        },
        "failure": _NULLABLE_STR,
    },
}

_SCALAR = {"oneOf": [RATIONAL, {"type": "array", "items": RATIONAL, "minItems": 2, "maxItems": 2},
                     {"type": "null"}]}

IDENTITY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "IdentityReport",
    "type": "object",
    "required": ["identity", "n", "mode", "trials", "verdict", "counterexample", "lhs", "rhs"],
    "additionalProperties": False,
    "properties": {
        "identity": {"enum": ["el-exp", "prodform", "prodform2", "beauty", "jacobi"]},
        "n": {"type": "integer", "minimum": 0},
        "mode": {"enum": ["full", "random"]},
        "trials": {"type": "integer", "minimum": 0},
        "verdict": {"type": "boolean"},
        "counterexample": {"type": ["array", "null"]},
        "lhs": _SCALAR,
        "rhs": _SCALAR,
    },
}

EXPERIMENT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ExperimentRecord",
    "type": "object",
    "required": ["experiment", "params", "verdict", "witness"],
    "additionalProperties": False,
    "properties": {
        "experiment": {"type": "string"},
        "params": {"type": "object"},
        "verdict": {"enum": ["PASS", "FAIL", "FINDING", "SKIPPED"]},
        "witness": {"type": "object"},
        "wall_time": {"type": "number", "minimum": 0},
    },
}

CRITERION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "CriterionResult",
    "type": "object",
    "required": ["criterion", "title", "verdict", "detail"],
    "additionalProperties": False,
    "properties": {
        "criterion": {"type": "integer", "minimum": 1},
        "title": {"type": "string"},
        "verdict": {"enum": ["PASS", "FAIL"]},
        "detail": {"type": "string"},
        "seconds": {"type": "number", "minimum": 0},
    },
}

SCHEMAS = {
    "certificate": CERTIFICATE,
    "poly": POLY,
    "iteration": ITERATION,
    "identity": IDENTITY,
    "experiment": EXPERIMENT,
    "criterion": CRITERION,
}
