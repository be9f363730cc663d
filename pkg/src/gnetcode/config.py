"""Channel configuration files.

The format is INI-style: named sections with ``key = value`` lines,
chosen over a binary format so test fixtures diff cleanly.  Field symbols
are written as integer indices into the field's canonical element order;
vectors are comma-separated symbols, matrices one comma-separated row per
line (multiline values).  Unknown sections or keys are rejected outright.

Sections::

    [field]     p, k, optional modulus (degree-k coefficients, constant first)
    [weight]    kind = hamming | rank | sum-rank, optional blocks
    [channel]   kind = classical | matrix | network | table, plus kind keys
    [code]      codewords (one per line) | space = N or RxC | generator
    [budgets]   max_field_size, max_pairs

Matrix channels take ``a`` and ``b`` matrices in [channel]; matrix
codewords declare ``rows`` in [code] and list each codeword flattened
row-major.  Network channels declare ``nodes``, ``source``, ``sink`` and
``edges`` (one ``tail head`` pair per line) in [channel] and one
``[function tail head]`` section per non-source edge whose rows map a
comma-separated input tuple to an output symbol.  Table channels declare
``error_length`` and ``output_length`` and list every transfer row in a
``[transfer]`` section as ``x ; z = y``.
"""

from __future__ import annotations

import configparser
import hashlib
import itertools

from .field import Field, DEFAULT_MAX_FIELD_SIZE
from .weights import WeightMeasure, HAMMING, RANK, SUM_RANK
from .channel import (Channel, classical_channel, matrix_channel, table_channel,
                      DEFAULT_PAIR_BUDGET)
from .network import NetworkSpec, compile_network
from . import matrices as mx


class ConfigError(ValueError):
    """A configuration file could not be interpreted."""


_SECTION_KEYS = {
    "field": {"p", "k", "modulus"},
    "weight": {"kind", "blocks"},
    "channel": {"kind", "a", "b", "nodes", "source", "sink", "edges",
                "error_length", "output_length"},
    "code": {"codewords", "space", "generator", "rows"},
    "budgets": {"max_field_size", "max_pairs"},
}
_CHANNEL_KEYS = {
    "classical": {"kind"},
    "matrix": {"kind", "a", "b"},
    "network": {"kind", "nodes", "source", "sink", "edges"},
    "table": {"kind", "error_length", "output_length"},
}


def _int(section: str, key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key} = {raw!r} is not an integer") from None


def _int_list(section: str, key: str, raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in raw.split(",") if tok.strip() != "")
    except ValueError:
        raise ConfigError(f"[{section}] {key} = {raw!r} is not a comma-separated "
                          "integer list") from None


def _matrix(section: str, key: str, raw: str) -> mx.Matrix:
    rows = [line.strip() for line in raw.splitlines() if line.strip()]
    if not rows:
        raise ConfigError(f"[{section}] {key} is empty")
    out = tuple(_int_list(section, key, line) for line in rows)
    if len({len(r) for r in out}) != 1:
        raise ConfigError(f"[{section}] {key} has ragged rows")
    return out


def parse_config(text: str) -> configparser.ConfigParser:
    parser = configparser.ConfigParser(delimiters=("=",), interpolation=None,
                                       strict=True)
    parser.optionxform = str  # keep table keys verbatim
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from None
    return parser


def _reject_unknown(parser: configparser.ConfigParser) -> None:
    kind = parser.get("channel", "kind", fallback=None) if "channel" in parser else None
    for section in parser.sections():
        if section in _SECTION_KEYS:
            allowed = _SECTION_KEYS[section]
            if section == "channel" and kind in _CHANNEL_KEYS:
                allowed = _CHANNEL_KEYS[kind]
            unknown = set(parser[section]) - allowed
            if unknown:
                raise ConfigError(
                    f"unknown key(s) {sorted(unknown)} in section [{section}]")
        elif section.startswith("function "):
            if kind != "network":
                raise ConfigError(f"[{section}] only applies to network channels")
        elif section == "transfer":
            if kind != "table":
                raise ConfigError("[transfer] only applies to table channels")
        else:
            raise ConfigError(f"unknown section [{section}]")
    for required in ("field", "channel"):
        if required not in parser:
            raise ConfigError(f"missing required section [{required}]")


def channel_from_config(text: str,
                        pair_budget: int | None = None) -> Channel:
    """Build a channel from configuration text.

    Referential and dimensional integrity is checked here, before any
    engine call; ``pair_budget`` overrides the [budgets] section.
    """
    parser = parse_config(text)
    _reject_unknown(parser)

    budget_sec = parser["budgets"] if "budgets" in parser else {}
    max_field = _int("budgets", "max_field_size", budget_sec.get(
        "max_field_size", str(DEFAULT_MAX_FIELD_SIZE)))
    budget = pair_budget if pair_budget is not None else _int(
        "budgets", "max_pairs", budget_sec.get("max_pairs", str(DEFAULT_PAIR_BUDGET)))

    fsec = parser["field"]
    p = _int("field", "p", fsec.get("p", ""))
    k = _int("field", "k", fsec.get("k", "1"))
    modulus = _int_list("field", "modulus", fsec["modulus"]) if "modulus" in fsec else None
    try:
        fld = Field(p, k, modulus, max_size=max_field)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"[field] {exc}") from None

    measure = _parse_weight(parser)
    kind = parser.get("channel", "kind", fallback=None)
    if kind == "classical":
        if measure.kind != HAMMING:
            raise ConfigError("classical channels use the hamming weight")
        codewords = _parse_code_vectors(parser, fld)
        return _wrap(lambda: classical_channel(fld, codewords, pair_budget=budget))
    if kind == "matrix":
        return _wrap(lambda: _matrix_from_config(parser, fld, measure, budget))
    if kind == "network":
        if measure.kind != HAMMING:
            raise ConfigError("network channels use the hamming weight")
        return _wrap(lambda: _network_from_config(parser, fld, budget))
    if kind == "table":
        if measure.kind != HAMMING:
            raise ConfigError("table channels use the hamming weight")
        return _wrap(lambda: _table_from_config(parser, fld, budget))
    raise ConfigError(f"[channel] kind must be classical, matrix, network or "
                      f"table, got {kind!r}")


def _wrap(build):
    try:
        return build()
    except ConfigError:
        raise
    except (ValueError, KeyError) as exc:
        raise ConfigError(str(exc)) from None


def config_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _parse_weight(parser) -> WeightMeasure:
    if "weight" not in parser:
        return WeightMeasure(HAMMING)
    wsec = parser["weight"]
    kind = wsec.get("kind", HAMMING)
    if kind not in (HAMMING, RANK, SUM_RANK):
        raise ConfigError(f"[weight] unknown kind {kind!r}")
    blocks = _int_list("weight", "blocks", wsec["blocks"]) if "blocks" in wsec else None
    try:
        return WeightMeasure(kind, blocks)
    except ValueError as exc:
        raise ConfigError(f"[weight] {exc}") from None


def _symbols_ok(fld: Field, vec) -> bool:
    return all(0 <= s < fld.q for s in vec)


def _parse_code_vectors(parser, fld: Field) -> list[tuple[int, ...]]:
    if "code" not in parser:
        raise ConfigError("missing required section [code]")
    csec = parser["code"]
    if "codewords" in csec:
        rows = [line.strip() for line in csec["codewords"].splitlines() if line.strip()]
        out = [_int_list("code", "codewords", line) for line in rows]
    elif "space" in csec:
        spec = csec["space"].strip()
        if "x" in spec:
            raise ConfigError("[code] space = RxC needs a matrix channel")
        n = _int("code", "space", spec)
        out = [tuple(v) for v in itertools.product(range(fld.q), repeat=n)]
    elif "generator" in csec:
        g = _matrix("code", "generator", csec["generator"])
        if not all(_symbols_ok(fld, row) for row in g):
            raise ConfigError(f"[code] generator entries must be symbols of {fld}")
        rows = len(g)
        out = sorted({mx.vec_mat_mul(fld, msg, g)
                      for msg in itertools.product(range(fld.q), repeat=rows)})
    else:
        raise ConfigError("[code] needs codewords, space or generator")
    for x in out:
        if not _symbols_ok(fld, x):
            raise ConfigError(f"[code] codeword {x} has symbols outside {fld}")
    return out


def _parse_code_matrices(parser, fld: Field, rows: int):
    csec = parser["code"]
    if "codewords" in csec:
        flat = [_int_list("code", "codewords", line)
                for line in csec["codewords"].splitlines() if line.strip()]
        out = []
        for v in flat:
            if len(v) % rows:
                raise ConfigError(f"[code] codeword {v} does not fill {rows} rows")
            cols = len(v) // rows
            out.append(tuple(v[i * cols:(i + 1) * cols] for i in range(rows)))
        return out
    if "space" in csec:
        spec = csec["space"].strip()
        try:
            r, c = (int(t) for t in spec.split("x"))
        except ValueError:
            raise ConfigError(f"[code] space = {spec!r} is not RxC") from None
        if r != rows:
            raise ConfigError(f"[code] space rows {r} disagree with rows = {rows}")
        return [tuple(flat[i * c:(i + 1) * c] for i in range(r))
                for flat in itertools.product(range(fld.q), repeat=r * c)]
    raise ConfigError("[code] matrix codewords need codewords lines or space = RxC")


def _matrix_from_config(parser, fld: Field, measure: WeightMeasure, budget: int):
    csec = parser["channel"]
    if "a" not in csec or "b" not in csec:
        raise ConfigError("[channel] matrix channels need both a and b")
    a = _matrix("channel", "a", csec["a"])
    b = _matrix("channel", "b", csec["b"])
    for name, mat in (("a", a), ("b", b)):
        if not all(_symbols_ok(fld, row) for row in mat):
            raise ConfigError(f"[channel] {name} entries must be symbols of {fld}")
    code_rows = parser.get("code", "rows", fallback=None)
    if code_rows is not None or measure.kind in (RANK, SUM_RANK):
        rows = _int("code", "rows", code_rows) if code_rows is not None else None
        if rows is None:
            csec2 = parser["code"] if "code" in parser else {}
            spec = csec2.get("space", "")
            if "x" not in spec:
                raise ConfigError("[code] rank/sum-rank codes need rows or space = RxC")
            rows = int(spec.split("x")[0])
        codewords = _parse_code_matrices(parser, fld, rows)
    else:
        codewords = _parse_code_vectors(parser, fld)
    return matrix_channel(fld, codewords, a, b, measure, pair_budget=budget)


def _network_from_config(parser, fld: Field, budget: int):
    csec = parser["channel"]
    for key in ("nodes", "source", "sink", "edges"):
        if key not in csec:
            raise ConfigError(f"[channel] network channels need {key}")
    nodes = tuple(tok.strip() for tok in csec["nodes"].split(",") if tok.strip())
    edges = []
    for line in csec["edges"].splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConfigError(f"[channel] edge line {line!r} is not 'tail head'")
        edges.append((parts[0], parts[1]))
    local = {}
    for section in parser.sections():
        if not section.startswith("function "):
            continue
        parts = section.split()
        if len(parts) != 3:
            raise ConfigError(f"[{section}] must be [function tail head]")
        edge = (parts[1], parts[2])
        table = {}
        for key, value in parser[section].items():
            ins = _int_list(section, key, key)
            table[ins] = _int(section, key, value)
        local[edge] = table
    spec = NetworkSpec(nodes=nodes, edges=tuple(edges),
                       source=csec["source"].strip(), sink=csec["sink"].strip(),
                       local_functions=local)
    codewords = _parse_code_vectors(parser, fld)
    return compile_network(fld, spec, codewords, pair_budget=budget)


def _table_from_config(parser, fld: Field, budget: int):
    csec = parser["channel"]
    for key in ("error_length", "output_length"):
        if key not in csec:
            raise ConfigError(f"[channel] table channels need {key}")
    err_len = _int("channel", "error_length", csec["error_length"])
    out_len = _int("channel", "output_length", csec["output_length"])
    if "transfer" not in parser:
        raise ConfigError("table channels need a [transfer] section")
    table = {}
    for key, value in parser["transfer"].items():
        halves = key.split(";")
        if len(halves) != 2:
            raise ConfigError(f"[transfer] row key {key!r} is not 'x ; z'")
        x = _int_list("transfer", key, halves[0])
        z = _int_list("transfer", key, halves[1])
        table[(x, z)] = _int_list("transfer", key, value)
    codewords = _parse_code_vectors(parser, fld)
    return table_channel(fld, codewords, err_len, out_len, table, pair_budget=budget)
