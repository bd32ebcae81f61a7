"""Finite linear combinations of crossing-free basis diagrams."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .diagram import Diagram
from .ring import LaurentPoly


class StateVector:
    """Map from canonical key to coefficient, with one representative diagram
    per key.  Zero coefficients are never stored."""

    __slots__ = ("signature", "coeffs", "reps")

    def __init__(self, signature, coeffs: Mapping | None = None, reps: Mapping[str, Diagram] | None = None):
        self.signature = tuple(signature)
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c != 0}
        self.reps = {k: reps[k] for k in self.coeffs} if reps else {}

    @classmethod
    def from_terms(cls, signature, terms: Iterable[tuple[Diagram, object]]) -> StateVector:
        coeffs, reps = {}, {}
        for diagram, c in terms:
            key = diagram.canonical_key()
            coeffs[key] = coeffs.get(key, 0) + c
            reps.setdefault(key, diagram)
        return cls(signature, coeffs, reps)

    @classmethod
    def basis(cls, diagram: Diagram) -> StateVector:
        return cls.from_terms(diagram.boundary, [(diagram, LaurentPoly.const(1))])

    def keys(self) -> list[str]:
        return sorted(self.coeffs)

    def items(self):
        return [(k, self.coeffs[k]) for k in self.keys()]

    def __getitem__(self, key: str):
        return self.coeffs.get(key, 0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.signature == other.signature and self.coeffs == other.coeffs

    def __add__(self, other: StateVector) -> StateVector:
        coeffs = dict(self.coeffs)
        reps = dict(self.reps)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
            reps.setdefault(k, other.reps.get(k))
        return StateVector(self.signature, coeffs, reps)

    def __neg__(self) -> StateVector:
        return StateVector(self.signature, {k: -c for k, c in self.coeffs.items()}, self.reps)

    def __sub__(self, other: StateVector) -> StateVector:
        return self + (-other)

    def scale(self, factor) -> StateVector:
        return StateVector(self.signature, {k: c * factor for k, c in self.coeffs.items()}, self.reps)

    __mul__ = scale
    __rmul__ = scale

    def map_coeffs(self, fn: Callable) -> StateVector:
        return StateVector(self.signature, {k: fn(c) for k, c in self.coeffs.items()}, self.reps)

    def map_coeffs_by_key(self, fn: Callable[[Diagram, object], object]) -> StateVector:
        return StateVector(self.signature, {k: fn(self.reps[k], c) for k, c in self.coeffs.items()}, self.reps)

    def map_diagrams(self, fn: Callable[[Diagram], Diagram]) -> StateVector:
        """Apply a diagram symmetry (adjoint, mirror, ...) key-wise."""
        terms = [(fn(self.reps[k]), c) for k, c in self.coeffs.items()]
        sig = fn(self.reps[next(iter(self.coeffs))]).boundary if terms else self.signature
        return StateVector.from_terms(sig, terms)

    def substitute(self, var: str, image) -> StateVector:
        return self.map_coeffs(lambda c: LaurentPoly.coerce(c).substitute(var, image))

    def evaluate(self, assignment) -> StateVector:
        return StateVector(self.signature, {k: LaurentPoly.coerce(c).evaluate(assignment) for k, c in self.coeffs.items()},
                           self.reps)

    def max_abs_diff(self, other: StateVector) -> float:
        keys = set(self.coeffs) | set(other.coeffs)
        return max((abs(complex(self[k]) - complex(other[k])) for k in keys), default=0.0)

    def scalar(self):
        """Coefficient of the empty diagram (closed diagrams only)."""
        if self.signature:
            raise ValueError("scalar value needs an empty boundary")
        if not self.coeffs:
            return LaurentPoly.const(0)
        (c,) = self.coeffs.values()
        return c

    def to_json(self) -> dict:
        sig = [s if s is not None else "." for s in self.signature]
        return {"signature": sig, "basis": [{"key": k, "coeff": str(c)} for k, c in self.items()]}

    def __repr__(self) -> str:
        body = ", ".join(f"({c})·[{k}]" for k, c in self.items())
        return f"StateVector({body or '0'})"
