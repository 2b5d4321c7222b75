"""Graph and parameter file formats, and report serialisation.

Graph files are line oriented (UTF-8, ``#`` starts a comment)::

    agents 4
    name 0 Medici
    link 0 1
    link 1 2

Parameter files hold ``key = value`` lines for ``p``, ``q``, ``theta``,
``xi`` and ``sigma``; ``theta[3] = 2`` overrides one agent. Values may be
decimals or fractions (``1/4``) and are kept exact.
"""

from __future__ import annotations

import csv
import io as _io
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .availability import PayoffParams, SharingParams
from .graph import Network, build_network

__all__ = [
    "ParseError",
    "format_graph",
    "parse_graph",
    "parse_params",
    "read_graph",
    "read_params",
    "report_to_csv",
    "report_to_json",
]

PathLike = Union[str, Path]


class ParseError(ValueError):
    """Malformed graph or parameter file; ``lineno`` is 1-based (0 if global)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> tuple[Network, dict[int, str]]:
    """Parse graph-file text into a network and its ``id -> label`` map."""
    n: Optional[int] = None
    labels: dict[int, str] = {}
    links: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        directive = parts[0]
        if n is None and directive != "agents":
            raise ParseError("the first directive must be 'agents <n>'", lineno)
        if directive == "agents":
            if n is not None:
                raise ParseError("duplicate 'agents' directive", lineno)
            if len(parts) != 2:
                raise ParseError("usage: agents <n>", lineno)
            n = _int(parts[1], lineno)
            if n < 1:
                raise ParseError("agent count must be at least 1", lineno)
        elif directive == "name":
            if len(parts) != 3:
                raise ParseError("usage: name <id> <label>", lineno)
            agent = _int(parts[1], lineno)
            if not 0 <= agent < n:
                raise ParseError(f"agent {agent} out of range", lineno)
            if agent in labels:
                raise ParseError(f"agent {agent} named twice", lineno)
            if parts[2] in labels.values():
                raise ParseError(f"label {parts[2]!r} used twice", lineno)
            labels[agent] = parts[2]
        elif directive == "link":
            if len(parts) != 3:
                raise ParseError("usage: link <u> <v>", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            try:
                build_network(n, [(u, v)])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            links.append((u, v))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if n is None:
        raise ParseError("missing 'agents <n>' directive")
    return build_network(n, links), labels


def format_graph(g: Network, labels: Optional[dict[int, str]] = None) -> str:
    lines = [f"agents {g.n}"]
    for agent, label in sorted((labels or {}).items()):
        lines.append(f"name {agent} {label}")
    lines.extend(f"link {u} {v}" for u, v in g.sorted_links())
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> tuple[Network, dict[int, str]]:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


_KEY = re.compile(r"^(p|q|theta|xi|sigma)(?:\[(\d+)\])?$")


def _number(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a number: {token!r}", lineno) from None


def parse_params(
    text: str,
    sharing: SharingParams,
    payoff: PayoffParams,
) -> tuple[SharingParams, PayoffParams]:
    """Apply a parameter file on top of the given defaults."""
    scalars: dict[str, Fraction] = {}
    per_agent: dict[str, dict[int, Fraction]] = {"theta": {}, "xi": {}}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        m = _KEY.match(key)
        if not m:
            raise ParseError(f"unknown parameter {key!r}", lineno)
        name, agent = m.group(1), m.group(2)
        number = _number(value, lineno)
        if agent is None:
            scalars[name] = number
        elif name in per_agent:
            per_agent[name][int(agent)] = number
        else:
            raise ParseError(f"{name} cannot be set per agent", lineno)
    try:
        new_sharing = SharingParams(scalars.get("p", sharing.p), scalars.get("q", sharing.q))
        new_payoff = PayoffParams(
            scalars.get("theta", payoff.theta),
            scalars.get("xi", payoff.xi),
            scalars.get("sigma", payoff.sigma),
            {**payoff.theta_by_agent, **per_agent["theta"]},
            {**payoff.xi_by_agent, **per_agent["xi"]},
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return new_sharing, new_payoff


def read_params(
    path: PathLike, sharing: SharingParams, payoff: PayoffParams
) -> tuple[SharingParams, PayoffParams]:
    return parse_params(Path(path).read_text(encoding="utf-8"), sharing, payoff)


# Reports: floats and fractions are written with exactly six decimals.

_FLOAT_TAG = "\x00f:"
_FLOAT_RE = re.compile(r'"\\u0000f:(-?[0-9.]+)"')


def _fixed(x: Any) -> str:
    text = f"{float(x):.6f}"
    return "0.000000" if text == "-0.000000" else text


def _tag_numbers(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, Fraction)):
        return _FLOAT_TAG + _fixed(obj)
    if isinstance(obj, dict):
        return {str(k): _tag_numbers(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tag_numbers(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_to_json(report: dict) -> str:
    """JSON text with insertion-ordered keys and six-decimal numbers."""
    text = json.dumps(_tag_numbers(report), indent=2, ensure_ascii=False)
    return _FLOAT_RE.sub(r"\1", text) + "\n"


def report_to_csv(report: dict) -> str:
    """CSV projection of the report's ``rows`` (one line per row dict)."""
    rows = report.get("rows") or []
    out = _io.StringIO()
    if not rows:
        return ""
    writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                k: (_fixed(v) if isinstance(v, (float, Fraction)) and not isinstance(v, bool)
                    else v)
                for k, v in row.items()
            }
        )
    return out.getvalue()
