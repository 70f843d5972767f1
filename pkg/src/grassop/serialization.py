"""JSON interchange for operators.

The document layout is::

    {"sigma": [...], "d": [...], "N": int, "frames": [[[re, im], ...], ...]}

with one flat column-major entry list per eigenspace frame.  Floats are
emitted through Python's shortest round-trip repr, so a document
reproduces the binary values exactly.  Eigenvalues are listed in the
canonical order (descending multiplicity, then ascending eigenvalue).
"""

from __future__ import annotations

import json

import numpy as np

from .errors import GrassopError, ParseError, ValidationError
from .operators import ClassSignature, SpectralOperator, make_operator
from .subspaces import DEFAULT_TOL, Subspace, Tolerance

__all__ = ["serialize_operator", "deserialize_operator"]


def _frame_entries(frame: np.ndarray) -> list:
    # column-major: all rows of the first column, then the second, ...
    return [[float(z.real), float(z.imag)] for col in frame.T for z in col]


def serialize_operator(op: SpectralOperator) -> str:
    sig = op.signature
    order = sig.canonical_order()
    doc = {
        "sigma": [sig.eigenvalues[t] for t in order],
        "d": [sig.multiplicities[t] for t in order],
        "N": sig.ambient_dim,
        "frames": [_frame_entries(op.eigenspaces[t].frame) for t in order],
    }
    return json.dumps(doc)


def deserialize_operator(text: str, tol: Tolerance = DEFAULT_TOL) -> SpectralOperator:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    for key in ("sigma", "d", "N", "frames"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    sigma, d, n, frames = doc["sigma"], doc["d"], doc["N"], doc["frames"]
    if (
        not isinstance(sigma, list)
        or not isinstance(d, list)
        or not isinstance(frames, list)
        or not isinstance(n, int)
    ):
        raise ParseError("sigma, d and frames must be lists and N an integer")
    if len(frames) != len(sigma):
        raise ValidationError("one frame per eigenvalue is required")
    try:
        sig = ClassSignature(tuple(sigma), tuple(d), n)
    except GrassopError as exc:
        raise ValidationError(str(exc)) from exc
    spaces = []
    for mult, entries in zip(sig.multiplicities, frames):
        if len(entries) != n * mult:
            raise ValidationError(
                f"frame entry count {len(entries)} does not match {n} x {mult}"
            )
        try:
            flat = np.array(
                [complex(re, im) for re, im in entries], dtype=complex
            )
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed frame entry: {exc}") from exc
        frame = flat.reshape(mult, n).T
        try:
            spaces.append(Subspace(frame, tol))
        except GrassopError as exc:
            raise ValidationError(str(exc)) from exc
    try:
        return make_operator(sig, spaces)
    except GrassopError as exc:
        raise ValidationError(str(exc)) from exc
