"""Fixed-point data of circle actions, manifest I/O and example families."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import jsonschema


class ManifestError(ValueError):
    pass


class SchemaError(ManifestError):
    """The document does not match the manifest schema."""


class ValidationError(ManifestError):
    """The document is well-formed but describes impossible fixed-point data."""


class BadParams(ValueError):
    """Generator parameters out of range or with the wrong parity."""


def _check_sigma(sigma: int, where: str) -> None:
    if sigma not in (1, -1) or isinstance(sigma, bool):
        raise ValidationError(f"{where}: sigma must be +1 or -1, got {sigma!r}")


@dataclass(frozen=True)
class FixedCircle:
    """A fixed circle with determinant weight ``mu``, normal weight ``n`` and orientation sign."""

    id: str
    mu: int
    n: int
    sigma: int = 1

    def __post_init__(self):
        if self.n == 0:
            raise ValidationError(f"circle {self.id!r}: normal weight n must be nonzero")
        _check_sigma(self.sigma, f"circle {self.id!r}")


@dataclass(frozen=True)
class IsolatedFixedPoint:
    id: str
    mu: int
    weights: Tuple[int, ...]
    sigma: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise ValidationError(f"point {self.id!r}: empty weight list")
        if any(w == 0 for w in self.weights):
            raise ValidationError(f"point {self.id!r}: rotation weights must be nonzero")
        _check_sigma(self.sigma, f"point {self.id!r}")
        # Spin^c parity
        if (self.mu + sum(self.weights)) % 2:
            raise ValidationError(
                f"point {self.id!r}: mu + sum(weights) = {self.mu + sum(self.weights)} is odd"
            )


@dataclass(frozen=True)
class OddManifoldData:
    """Three-dimensional fixed-point data plus the integrals ``a_F`` of the class alpha.

    ``alpha`` maps circle ids to integers; a missing id means ``a_F = 0``.
    """

    name: str
    circles: Tuple[FixedCircle, ...] = ()
    alpha: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "circles", tuple(self.circles))
        object.__setattr__(self, "alpha", dict(self.alpha))
        ids = [c.id for c in self.circles]
        if len(set(ids)) != len(ids):
            raise ValidationError(f"{self.name}: duplicate circle ids")
        unknown = set(self.alpha) - set(ids)
        if unknown:
            raise ValidationError(f"{self.name}: alpha refers to unknown circles {sorted(unknown)}")

    def a(self, circle_id: str) -> int:
        return self.alpha.get(circle_id, 0)

    def circle(self, circle_id: str) -> FixedCircle:
        for c in self.circles:
            if c.id == circle_id:
                return c
        raise KeyError(circle_id)

    def with_alpha(self, alpha: Mapping[str, int]) -> "OddManifoldData":
        return OddManifoldData(self.name, self.circles, alpha)


@dataclass(frozen=True)
class EvenManifoldData:
    name: str
    half_dim: int
    points: Tuple[IsolatedFixedPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.half_dim < 1:
            raise ValidationError(f"{self.name}: half_dim must be positive")
        for p in self.points:
            if len(p.weights) != self.half_dim:
                raise ValidationError(
                    f"{self.name}: point {p.id!r} has {len(p.weights)} weights, expected {self.half_dim}"
                )
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise ValidationError(f"{self.name}: duplicate point ids")


ManifoldData = Union[OddManifoldData, EvenManifoldData]


# -- manifests -------------------------------------------------------------

_INT = {"type": "integer"}
_SIGMA = {"type": "integer", "enum": [1, -1]}

MANIFEST_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["name", "kind"],
    "properties": {"name": {"type": "string"}, "kind": {"enum": ["odd3", "even"]}},
    "if": {"properties": {"kind": {"const": "odd3"}}},
    "then": {
        "required": ["circles"],
        "properties": {
            "name": True,
            "kind": True,
            "circles": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "mu", "n", "sigma"],
                    "properties": {"id": {"type": "string"}, "mu": _INT, "n": _INT, "sigma": _SIGMA},
                    "additionalProperties": False,
                },
            },
            "alpha": {"type": "object", "additionalProperties": _INT},
        },
        "additionalProperties": False,
    },
    "else": {
        "required": ["half_dim", "points"],
        "properties": {
            "name": True,
            "kind": True,
            "half_dim": {"type": "integer", "minimum": 1},
            "points": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "mu", "weights", "sigma"],
                    "properties": {
                        "id": {"type": "string"},
                        "mu": _INT,
                        "weights": {"type": "array", "items": _INT, "minItems": 1},
                        "sigma": _SIGMA,
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(MANIFEST_SCHEMA)


def parse_manifest(document: Union[str, bytes, Mapping[str, Any]]) -> ManifoldData:
    """Decode and validate a manifest given as JSON text or an already-decoded mapping."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from None
    errors = sorted(_VALIDATOR.iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {e.message}")

    if document["kind"] == "odd3":
        circles = [FixedCircle(c["id"], c["mu"], c["n"], c["sigma"]) for c in document["circles"]]
        return OddManifoldData(document["name"], circles, document.get("alpha", {}))
    points = [
        IsolatedFixedPoint(p["id"], p["mu"], tuple(p["weights"]), p["sigma"])
        for p in document["points"]
    ]
    return EvenManifoldData(document["name"], document["half_dim"], points)


def emit_manifest(data: ManifoldData) -> Dict[str, Any]:
    if isinstance(data, OddManifoldData):
        return {
            "name": data.name,
            "kind": "odd3",
            "circles": [{"id": c.id, "mu": c.mu, "n": c.n, "sigma": c.sigma} for c in data.circles],
            "alpha": dict(data.alpha),
        }
    return {
        "name": data.name,
        "kind": "even",
        "half_dim": data.half_dim,
        "points": [
            {"id": p.id, "mu": p.mu, "weights": list(p.weights), "sigma": p.sigma} for p in data.points
        ],
    }


def dump_manifest(data: ManifoldData) -> str:
    return json.dumps(emit_manifest(data), indent=2) + "\n"


def load_manifest(path: Union[str, Path]) -> ManifoldData:
    return parse_manifest(Path(path).read_text())


# -- generators ------------------------------------------------------------

def sphere(l: int, mu_north: int, mu_south: int) -> EvenManifoldData:
    """S^2 rotated at speed ``l``; north pole weight +l, south pole weight -l (a convention)."""
    if l < 1:
        raise BadParams(f"sphere: speed l must be >= 1, got {l}")
    if (mu_north - l) % 2 or (mu_south - l) % 2:
        raise BadParams(f"sphere: mu_N={mu_north}, mu_S={mu_south} must have the parity of l={l}")
    return EvenManifoldData(
        f"sphere({l},{mu_north},{mu_south})",
        1,
        [
            IsolatedFixedPoint("N", mu_north, (l,), 1),
            IsolatedFixedPoint("S", mu_south, (-l,), 1),
        ],
    )


def s2xs1(l: int, mu_north: int, mu_south: int, a: int) -> OddManifoldData:
    if l < 1:
        raise BadParams(f"s2xs1: speed l must be >= 1, got {l}")
    if (mu_north - l) % 2 or (mu_south - l) % 2:
        raise BadParams(f"s2xs1: mu_N={mu_north}, mu_S={mu_south} must have the parity of l={l}")
    return OddManifoldData(
        f"s2xs1({l},{mu_north},{mu_south},{a})",
        [FixedCircle("N", mu_north, l, 1), FixedCircle("S", mu_south, -l, 1)],
        {"N": a, "S": a},
    )


def s3(n1: int, n2: int, mu: int = 0) -> OddManifoldData:
    """S^3 with the action (z^n1, z^n2).

    Alpha is always zero here since H^1(S^3) vanishes.
    """
    if n1 == 0 and n2 == 0:
        raise BadParams("s3: (n1, n2) = (0, 0) is the trivial action")
    name = f"s3({n1},{n2},{mu})"
    if n1 and n2:
        return OddManifoldData(name)
    return OddManifoldData(name, [FixedCircle("F", mu, n1 or n2, 1)])


FAMILIES = {"sphere": (sphere, 3), "s2xs1": (s2xs1, 4), "s3": (s3, 3)}


def generate(family: str, params: Sequence[int]) -> ManifoldData:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise BadParams(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise BadParams(f"{family} takes {arity} integer parameters, got {len(params)}")
    return fn(*params)


def disjoint_union(name: str, parts: Iterable[OddManifoldData]) -> OddManifoldData:
    """Disjoint union; circle ids are prefixed with the part index to keep them unique."""
    circles: List[FixedCircle] = []
    alpha: Dict[str, int] = {}
    for i, part in enumerate(parts):
        for c in part.circles:
            cid = f"{i}.{c.id}"
            circles.append(FixedCircle(cid, c.mu, c.n, c.sigma))
            if c.id in part.alpha:
                alpha[cid] = part.alpha[c.id]
    return OddManifoldData(name, circles, alpha)
