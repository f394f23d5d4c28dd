"""Exact JSON/text rendering of results."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .parser import GRAMMAR_VERSION, print_symbol
from .scalars import GaussQ, frac_str, gq
from .symbols import Symbol


def decimal_str(x: Fraction, digits: int) -> str:
    """Round-half-away decimal rendering of an exact rational (display only)."""
    scaled = abs(x) * 10 ** digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    s = str(q).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return "%s%s.%s" % (sign, s[:-digits], s[-digits:])


def scalar_json(x, decimal: Optional[int] = None) -> dict:
    x = gq(x)
    out = {"re": frac_str(x.re), "im": frac_str(x.im)}
    if decimal is not None:
        out["decimal"] = {"re": decimal_str(x.re, decimal), "im": decimal_str(x.im, decimal)}
    return out


def symbol_json(f: Symbol, decimal: Optional[int] = None) -> dict:
    return {
        "text": print_symbol(f),
        "terms": [
            {"coeff": scalar_json(t.coeff, decimal), "p": frac_str(t.p), "s": t.s, "m": t.m}
            for t in f.terms
        ],
    }


def vector_json(v, decimal: Optional[int] = None) -> dict:
    return {str(k): scalar_json(c, decimal) for k, c in v.items()}


def envelope(command: str, inputs: dict, result: dict) -> str:
    return json.dumps(
        {
            "command": command,
            "grammar_version": GRAMMAR_VERSION,
            "inputs": inputs,
            "result": result,
            "exact": True,
        },
        indent=2,
        sort_keys=False,
    )


def scalar_text(x) -> str:
    return str(gq(x)) if isinstance(x, GaussQ) else str(x)


def vector_text(v) -> str:
    if not v:
        return "0"
    return " + ".join("(%s)*z^%d" % (c, k) for k, c in v.items())
