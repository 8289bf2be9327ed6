"""Segre classification and Pfaffian representations of cubic threefolds.

The functions below wrap the C++ core and return parsed JSON.
"""

import json

from . import _core
from ._core import (
    DomainError,
    FieldLimitation,
    ParseError,
    PfaffcubicError,
    SearchExhausted,
    Undetermined,
    VerificationFailure,
    minus_one_classes,
    pfaffian,
    roots,
)

__all__ = [
    "classify",
    "pfaffianize",
    "curve",
    "verify",
    "verify_certificate",
    "pfaffian",
    "minus_one_classes",
    "roots",
    "PfaffcubicError",
    "ParseError",
    "DomainError",
    "SearchExhausted",
    "FieldLimitation",
    "Undetermined",
    "VerificationFailure",
]


def classify(text, field="p:13", seed=0, d_max=12):
    return json.loads(_core.classify(text, field, seed, d_max))


def pfaffianize(text, field="p:13", seed=0, retries=8, d_max=12, jobs=1):
    return json.loads(_core.pfaffianize(text, field, seed, retries, d_max, jobs))


def curve(text, field="p:13", seed=0, retries=8):
    return json.loads(_core.curve(text, field, seed, retries))


def verify(matrix, cubic, field="p:13"):
    return json.loads(_core.verify(matrix, cubic, field))


def verify_certificate(certificate):
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return json.loads(_core.verify_certificate(certificate))
