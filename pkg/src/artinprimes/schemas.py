"""JSON schemas for command-line output records.

Integers that can exceed 64 bits are encoded as decimal strings.
"""

INT_STR = {"type": "string", "pattern": "^-?[0-9]+$"}
FLOAT_STR = {"type": "string"}
NULLABLE_INT_STR = {"anyOf": [INT_STR, {"type": "null"}]}
FRACTION = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}

TRUNCATION = {
    "type": "object",
    "oneOf": [
        {"required": ["prime_count"], "properties": {"prime_count": {"type": "integer"}}},
        {"required": ["prime_bound"], "properties": {"prime_bound": {"type": "integer"}}},
    ],
}

FACTORIZATION = {
    "type": "object",
    "required": ["n", "prime_powers", "cofactor", "complete"],
    "properties": {
        "n": INT_STR,
        "prime_powers": {"type": "array", "items": {
            "type": "array", "prefixItems": [INT_STR, {"type": "integer"}], "minItems": 2}},
        "cofactor": INT_STR,
        "complete": {"type": "boolean"},
    },
}

DENSITY = {
    "type": "object",
    "required": ["value", "log_value", "kind", "truncation", "prime_bound", "factors_used", "tail"],
    "properties": {
        "value": FLOAT_STR,
        "log_value": FLOAT_STR,
        "kind": {"type": "string"},
        "truncation": TRUNCATION,
        "prime_bound": INT_STR,
        "factors_used": {"type": "integer"},
        "tail": {"type": "boolean"},
    },
}

ARTIN_STATUS = {
    "type": "object",
    "required": ["status", "p", "g"],
    "properties": {
        "status": {"enum": ["artin", "not_artin", "unknown"]},
        "p": INT_STR,
        "g": INT_STR,
        "witness": INT_STR,
        "factorization": FACTORIZATION,
    },
}

LENGTH_REPORT = {
    "type": "object",
    "required": ["length", "primes_found", "failure", "skipped", "scan_bound_hit",
                 "unknown", "next_n", "g", "stop_reason"],
    "properties": {
        "length": {"type": "integer", "minimum": 0},
        "primes_found": {"type": "integer", "minimum": 0},
        "failure": {"anyOf": [{"type": "null"}, {
            "type": "object", "required": ["n", "p", "witness"],
            "properties": {"n": INT_STR, "p": INT_STR, "witness": INT_STR}}]},
        "skipped": {"type": "array", "items": {
            "type": "object", "required": ["n", "p", "reason"],
            "properties": {"n": INT_STR, "p": INT_STR,
                           "reason": {"enum": ["divides_g", "is_two", "unknown_factorization"]}}}},
        "scan_bound_hit": {"type": "boolean"},
        "unknown": {"anyOf": [{"type": "null"}, ARTIN_STATUS]},
        "unknown_n": NULLABLE_INT_STR,
        "next_n": INT_STR,
        "g": INT_STR,
        "stop_reason": {"enum": ["failure", "unknown", "max_n"]},
    },
}

TAU = {
    "type": "object",
    "required": ["f", "D", "values"],
    "properties": {
        "f": {"type": "string"},
        "D": INT_STR,
        "values": {"type": "object", "additionalProperties": FRACTION, "minProperties": 1},
        "equal": {"type": "boolean"},
    },
}

CANDIDATE = {
    "type": "object",
    "required": ["f", "D", "g", "delta", "length"],
    "properties": {
        "f": {"type": "string"},
        "D": INT_STR,
        "g": INT_STR,
        "delta": DENSITY,
        "length": {"anyOf": [{"type": "null"}, LENGTH_REPORT]},
        "variation": {"anyOf": [{"type": "null"}, {"type": "array"}]},
    },
}

PARSE = {
    "type": "object",
    "required": ["input", "coeffs", "canonical", "degree"],
    "properties": {
        "input": {"type": "string"},
        "coeffs": {"type": "array", "items": INT_STR},
        "canonical": {"type": "string"},
        "degree": {"type": "integer", "minimum": 1},
    },
}

ERROR = {
    "type": "object",
    "required": ["error"],
    "properties": {"error": {
        "type": "object", "required": ["type", "message", "exit_code"],
        "properties": {"type": {"type": "string"}, "message": {"type": "string"},
                       "exit_code": {"type": "integer"}, "position": {"type": "integer"}}}},
}

MANIFEST = {
    "type": "object",
    "required": ["record", "command", "config", "version", "truncation", "rho_seed",
                 "wall_time", "outcome"],
    "properties": {
        "record": {"const": "manifest"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "version": {"type": "string"},
        "truncation": {"anyOf": [{"type": "null"}, TRUNCATION]},
        "rho_seed": {"type": "integer"},
        "wall_time": {"type": "number"},
        "outcome": {"type": "object"},
    },
}

LOG_RESULT = {
    "type": "object",
    "required": ["record", "command", "index", "result"],
    "properties": {"record": {"const": "result"}, "command": {"type": "string"},
                   "index": {"type": "integer"}, "result": {"type": "object"}},
}

GENERIC = {"type": "object"}

#: schema for each subcommand's JSON output
COMMAND_SCHEMAS = {
    "parse": PARSE,
    "delta": DENSITY,
    "cf": DENSITY,
    "tau": TAU,
    "length": LENGTH_REPORT,
    "pair-length": LENGTH_REPORT,
    "artin": ARTIN_STATUS,
    "search": {"type": "array", "items": CANDIDATE},
    "variations": {"type": "array", "items": CANDIDATE},
    "discs": GENERIC,
    "jacobsthal": GENERIC,
    "a-d": GENERIC,
    "alphas": GENERIC,
    "empirical-delta": DENSITY,
    "class-dist": GENERIC,
}
