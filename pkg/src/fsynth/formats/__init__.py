"""Feedback-conforming scanners for the four subject formats."""

from __future__ import annotations

from .base import Scanner
from .ini import IniScanner
from .jsonfmt import JsonScanner
from .sexp import SexpScanner
from .tinyc import TinyCScanner

FORMATS: dict[str, Scanner] = {
    "json": JsonScanner(),
    "ini": IniScanner(),
    "sexp": SexpScanner(),
    "tinyc": TinyCScanner(),
}


class UnknownFormat(KeyError):
    pass


def get_format(name: str) -> Scanner:
    try:
        return FORMATS[name]
    except KeyError:
        raise UnknownFormat(name) from None


def classify_json(data: bytes):
    return FORMATS["json"].classify(data)


def classify_ini(data: bytes):
    return FORMATS["ini"].classify(data)


def classify_sexp(data: bytes):
    return FORMATS["sexp"].classify(data)


def classify_tinyc(data: bytes):
    return FORMATS["tinyc"].classify(data)


__all__ = [
    "FORMATS",
    "Scanner",
    "UnknownFormat",
    "classify_ini",
    "classify_json",
    "classify_sexp",
    "classify_tinyc",
    "get_format",
]
