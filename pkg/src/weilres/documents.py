"""The CLI document format: one JSON shape for every input and output.

A document declares a coefficient field, optionally an extension and a group
action over it, named presentations and an options record.  Every record is
schema-checked before any computation and unknown keys are rejected, so a
typo fails loudly instead of silently configuring nothing.  Polynomials and
scalars appear as canonical strings in the grammar of poly.parse_poly.
"""

from __future__ import annotations

import json

from .errors import DocumentError
from .extensions import FreeExtension, from_minimal_polynomial
from .fields import (Field, FunctionField, GaloisField, PrimeField,
                     RationalField)
from .galois import GroupAction
from .lognorm import LogNorm
from .poly import parse_poly
from .restriction import Presentation

VERSION = "weilres/1"


def canonical_json(obj):
    """Deterministic serialisation: sorted keys, two-space indent, newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _check_keys(record, required, optional, path):
    if not isinstance(record, dict):
        raise DocumentError("%s: expected an object" % path)
    unknown = set(record) - set(required) - set(optional)
    if unknown:
        raise DocumentError("%s: unknown keys %s" % (path, sorted(unknown)))
    missing = set(required) - set(record)
    if missing:
        raise DocumentError("%s: missing keys %s" % (path, sorted(missing)))


def _scalar(field, value, path):
    if isinstance(value, int):
        return field.coerce(value)
    if isinstance(value, str):
        try:
            return parse_poly(value, field).constant_value()
        except Exception as exc:
            raise DocumentError("%s: bad scalar %r (%s)" % (path, value, exc))
    raise DocumentError("%s: scalar must be an integer or string" % path)


def parse_field(record, path="field"):
    _check_keys(record, ["kind"], ["p", "modulus", "symbol", "r"], path)
    kind = record["kind"]
    try:
        if kind == "prime":
            _check_keys(record, ["kind", "p"], [], path)
            return PrimeField(record["p"])
        if kind == "galois":
            _check_keys(record, ["kind", "p", "modulus"], ["symbol"], path)
            symbol = record.get("symbol", "t")
            prime = PrimeField(record["p"])
            modulus = record["modulus"]
            if isinstance(modulus, str):
                poly = parse_poly(modulus, prime, (symbol,))
                coeffs = [0] * (poly.total_degree() + 1)
                for exps, c in poly.terms.items():
                    coeffs[exps[0]] = c.value
            else:
                coeffs = list(modulus)
            return GaloisField(record["p"], coeffs, symbol)
        if kind == "rationals":
            _check_keys(record, ["kind"], [], path)
            return RationalField()
        if kind == "padic":
            _check_keys(record, ["kind", "p"], [], path)
            return RationalField(padic=record["p"])
        if kind == "function":
            _check_keys(record, ["kind", "p"], ["r", "symbol"], path)
            from fractions import Fraction
            r = Fraction(record.get("r", "1/2"))
            return FunctionField(record["p"], r, record.get("symbol", "x"))
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError("%s: %s" % (path, exc))
    raise DocumentError("%s: unknown field kind %r" % (path, kind))


def field_record(field):
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": field.p}
    if isinstance(field, GaloisField):
        from .fields import _ustr
        return {"kind": "galois", "p": field.p,
                "modulus": _ustr(field.modulus, field.symbol),
                "symbol": field.symbol}
    if isinstance(field, RationalField):
        if field.padic is None:
            return {"kind": "rationals"}
        return {"kind": "padic", "p": field.padic}
    if isinstance(field, FunctionField):
        return {"kind": "function", "p": field.p, "r": str(field.r),
                "symbol": field.symbol}
    raise DocumentError("cannot serialise field %r" % (field,))


def parse_extension(record, field, path="extension"):
    if "minimal_polynomial" in record:
        _check_keys(record, ["minimal_polynomial"], ["symbol"], path)
        symbol = record.get("symbol", "t")
        try:
            m = parse_poly(record["minimal_polynomial"], field, (symbol,))
            return from_minimal_polynomial(field, m, symbol)
        except DocumentError:
            raise
        except Exception as exc:
            raise DocumentError("%s: %s" % (path, exc))
    _check_keys(record, ["structure_constants", "unit"], ["rank", "basis"], path)
    if "basis" in record:
        basis = record["basis"]
    elif "rank" in record:
        basis = ["e%d" % (i + 1) for i in range(record["rank"])]
    else:
        raise DocumentError("%s: need either basis or rank" % path)
    n = len(basis)
    if record.get("rank", n) != n:
        raise DocumentError("%s: rank disagrees with the basis length" % path)
    structure = record["structure_constants"]
    if len(structure) != n:
        raise DocumentError("%s: structure_constants must be %d^3" % (path, n))
    try:
        parsed = tuple(
            tuple(tuple(_scalar(field, c, path) for c in cell) for cell in row)
            for row in structure)
        unit = tuple(_scalar(field, c, path) for c in record["unit"])
        return FreeExtension(field, basis, parsed, unit)
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError("%s: %s" % (path, exc))


def extension_record(ext):
    if ext.minimal_polynomial is not None:
        return {"minimal_polynomial": ext.minimal_polynomial.to_string(),
                "symbol": ext.symbol}
    return {
        "basis": list(ext.basis_names),
        "structure_constants": [[[str(c) for c in cell] for cell in row]
                                for row in ext.structure],
        "unit": [str(c) for c in ext.unit],
    }


def parse_action(record, field, path="action"):
    _check_keys(record, ["elements", "table", "matrices"], [], path)
    try:
        matrices = [
            [[_scalar(field, c, path) for c in row] for row in m]
            for m in record["matrices"]]
        return GroupAction(record["elements"], record["table"], matrices, field)
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError("%s: %s" % (path, exc))


def action_record(action):
    return {
        "elements": list(action.elements),
        "table": [list(row) for row in action.table],
        "matrices": [[[str(c) for c in row] for row in m] for m in action.matrices],
    }


def parse_presentation(record, field, extension, path):
    _check_keys(record, ["variables", "generators"],
                ["over", "radii", "provenance"], path)
    over = record.get("over", "base")
    if over == "base":
        domain = field
    elif over == "extension":
        if extension is None:
            raise DocumentError("%s: no extension declared in this document" % path)
        domain = extension
    else:
        raise DocumentError("%s: 'over' must be 'base' or 'extension'" % path)
    variables = tuple(record["variables"])
    try:
        gens = [parse_poly(text, domain, variables) for text in record["generators"]]
        radii = None
        if record.get("radii") is not None:
            radii = [LogNorm.parse(r) for r in record["radii"]]
        return Presentation(domain, variables, gens, radii=radii,
                            provenance=record.get("provenance", path))
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError("%s: %s" % (path, exc))


def presentation_record(pres):
    record = {
        "over": "extension" if isinstance(pres.base, FreeExtension) else "base",
        "variables": list(pres.variables),
        "generators": [g.to_string() for g in pres.generators],
    }
    if pres.radii is not None:
        record["radii"] = [str(r) for r in pres.radii]
    if pres.provenance:
        record["provenance"] = pres.provenance
    return record


class Document:
    def __init__(self, field, extension=None, action=None, presentations=None,
                 options=None):
        self.field = field
        self.extension = extension
        self.action = action
        self.presentations = dict(presentations or {})
        self.options = options or {}

    @property
    def seed(self):
        return self.options.get("seed", 0)

    @property
    def threshold(self):
        return self.options.get("threshold")

    @property
    def test_fields(self):
        return self.options.get("test_fields", [])

    @property
    def radius_elements(self):
        return self.options.get("radius_elements", [])


def load_document(data):
    """Validate and build a Document from parsed JSON data."""
    _check_keys(data, ["version", "field"],
                ["extension", "action", "presentations", "options"], "document")
    if data["version"] != VERSION:
        raise DocumentError("unsupported document version %r (want %r)"
                            % (data["version"], VERSION))
    field = parse_field(data["field"])
    extension = None
    if "extension" in data:
        extension = parse_extension(data["extension"], field)
    action = None
    if "action" in data:
        action = parse_action(data["action"], field)
    presentations = {}
    for name, record in (data.get("presentations") or {}).items():
        presentations[name] = parse_presentation(
            record, field, extension, "presentations.%s" % name)
    options = _parse_options(data.get("options") or {}, field, extension)
    return Document(field, extension, action, presentations, options)


def _parse_options(record, field, extension):
    _check_keys(record, [],
                ["seed", "threshold", "test_fields", "radius_elements"],
                "options")
    options = {}
    if "seed" in record:
        if not isinstance(record["seed"], int):
            raise DocumentError("options.seed must be an integer")
        options["seed"] = record["seed"]
    if "threshold" in record:
        try:
            options["threshold"] = LogNorm.parse(str(record["threshold"]))
        except Exception as exc:
            raise DocumentError("options.threshold: %s" % exc)
    if "test_fields" in record:
        options["test_fields"] = [
            parse_field(f, "options.test_fields[%d]" % i)
            for i, f in enumerate(record["test_fields"])]
    if "radius_elements" in record:
        if extension is None:
            raise DocumentError("options.radius_elements need an extension")
        elems = []
        for i, text in enumerate(record["radius_elements"]):
            try:
                poly = parse_poly(str(text), extension)
                elems.append(poly.constant_value())
            except Exception as exc:
                raise DocumentError("options.radius_elements[%d]: %s" % (i, exc))
        options["radius_elements"] = elems
    return options


def load_document_text(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON: %s" % exc)
    return load_document(data)


def restriction_record(result):
    return {
        "base_field": field_record(result.presentation.base),
        "presentation": presentation_record(result.presentation),
        "coordinate_map": {v: list(block)
                           for v, block in result.coordinate_map.items()},
        "coefficient_index": [[p.to_string() for p in row]
                              for row in result.coefficient_index],
        "metadata": _plain(result.metadata),
    }


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)
