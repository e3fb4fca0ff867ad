"""Versioned JSON persistence for built algebras.

All scalars are stored exactly: rationals as "p/q" strings and surds as
lists of {radicand, num, den} records with integer strings, so a dump
round-trips to the identical canonical objects.  Unknown schema versions
are rejected outright.

Loading deliberately skips the construction-time validation that
:func:`gkmalg.liealg.make_algebra` performs: the verification suites read
the stored tables and produce witnesses, so a tampered dump is diagnosed
as a verification failure instead of a parse error.
"""

from __future__ import annotations

import datetime as _dt
import json
from fractions import Fraction
from pathlib import Path

from .algebra import GKMAlgebra
from .liealg import FiniteAlgebra, cartan_weyl, make_algebra
from .modes import ModeSystem, geometry_from_dict
from .scalars import SurdScalar

SCHEMA_VERSION = 1
TOOL_NAME = "gkmalg"
TOOL_VERSION = "0.1.0"


class DumpFormatError(ValueError):
    """Raised when a dump cannot be interpreted under the known schema."""


def _rat_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def _rat_parse(text: str) -> Fraction:
    return Fraction(text)


def _mode_key(label) -> list[int]:
    return [int(x) for x in label]


def _mode_parse(data) -> tuple[int, ...]:
    return tuple(int(x) for x in data)


def _gen_key(gen) -> list:
    if gen[0] == "T":
        return ["T", gen[1], _mode_key(gen[2])]
    return [gen[0], gen[1]]


def dump_algebra(
    alg: GKMAlgebra,
    build_params: dict | None = None,
    include_brackets: bool = False,
    report=None,
) -> dict:
    """Serialise an algebra: base block, mode block, generator index, charges.

    ``include_brackets`` adds the full generator bracket table;  ``report``
    (a VerificationReport) attaches the latest verification outcomes.
    """
    base = alg.base
    f_entries = []
    for (a, b), row in sorted(base.f.items()):
        if a < b:  # independent entries; loader restores antisymmetry
            for c, v in sorted(row.items()):
                f_entries.append([a, b, c, v.to_records()])
    g_entries = [
        [a + 1, b + 1, base.g[a][b].to_records()]
        for a in range(base.dim)
        for b in range(a, base.dim)
        if not base.g[a][b].is_zero
    ]
    ms = alg.modes
    products = [
        [_mode_key(I), _mode_key(J), [[_mode_key(K), c.to_records()] for K, c in sorted(tab.items())]]
        for (I, J), tab in sorted(ms.products.items())
    ]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "provenance": {
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "created": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
            "build_params": build_params or {},
        },
        "base": {
            "name": base.name,
            "dim": base.dim,
            "f": f_entries,
            "g": g_entries,
        },
        "modes": {
            "geometry": ms.geometry.to_dict(),
            "cutoff": ms.cutoff,
            "r": ms.r,
            "modes": [_mode_key(I) for I in ms.modes],
            "products": products,
            "eta": [
                [_mode_key(I), _mode_key(J), phase]
                for I, (J, phase) in sorted(ms.eta_table.items())
            ],
            "eigen": [
                [_mode_key(I), [_rat_str(v) for v in vals]]
                for I, vals in sorted(ms.eigen_table.items())
            ],
        },
        "charges": [_rat_str(c) for c in alg.charges],
        "generators": [_gen_key(g) for g in alg.generators()],
    }
    if report is not None:
        payload["verification"] = report.to_dict()
    if include_brackets:
        table = []
        gens = alg.generators()
        for p in gens:
            for q in gens:
                val = alg.bracket_generators(p, q)
                if not val.is_zero:
                    table.append(
                        [
                            _gen_key(p),
                            _gen_key(q),
                            [[_gen_key(g), c.to_records()] for g, c in sorted(
                                val.coeffs.items(), key=lambda kv: repr(kv[0])
                            )],
                        ]
                    )
        payload["brackets"] = table
    return payload


def save_algebra(alg: GKMAlgebra, path, **kwargs) -> None:
    Path(path).write_text(json.dumps(dump_algebra(alg, **kwargs)), encoding="utf-8")


def load_algebra(source) -> GKMAlgebra:
    """Rebuild an algebra from a dump dict, JSON text path, or Path."""
    if isinstance(source, (str, Path)):
        try:
            data = json.loads(Path(source).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise DumpFormatError(f"cannot read dump: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise DumpFormatError("dump root must be a JSON object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DumpFormatError(
            f"unknown schema_version {version!r}; this tool reads version {SCHEMA_VERSION}"
        )
    try:
        return _load_v1(data)
    except DumpFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DumpFormatError(f"malformed dump: {exc}") from exc


def _load_v1(data: dict) -> GKMAlgebra:
    base_blk = data["base"]
    dim = int(base_blk["dim"])
    f: dict[tuple[int, int], dict[int, SurdScalar]] = {}
    for a, b, c, records in base_blk["f"]:
        v = SurdScalar.from_records(records)
        if v.is_zero:
            continue
        f.setdefault((int(a), int(b)), {})[int(c)] = v
        f.setdefault((int(b), int(a)), {})[int(c)] = -v
    g = [[SurdScalar() for _ in range(dim)] for _ in range(dim)]
    for a, b, records in base_blk["g"]:
        v = SurdScalar.from_records(records)
        g[int(a) - 1][int(b) - 1] = v
        g[int(b) - 1][int(a) - 1] = v
    base = FiniteAlgebra(
        name=str(base_blk["name"]),
        dim=dim,
        f=f,
        g=tuple(tuple(row) for row in g),
    )

    mode_blk = data["modes"]
    geometry = geometry_from_dict(mode_blk["geometry"])
    modes = [_mode_parse(m) for m in mode_blk["modes"]]
    products = {}
    for I, J, entries in mode_blk["products"]:
        products[(_mode_parse(I), _mode_parse(J))] = {
            _mode_parse(K): SurdScalar.from_records(records) for K, records in entries
        }
    eta_table = {
        _mode_parse(I): (_mode_parse(J), int(phase))
        for I, J, phase in mode_blk["eta"]
    }
    eigen_table = {
        _mode_parse(I): tuple(_rat_parse(v) for v in vals)
        for I, vals in mode_blk["eigen"]
    }
    ms = ModeSystem(
        geometry=geometry,
        cutoff=int(mode_blk["cutoff"]),
        modes=modes,
        products=products,
        eta_table=eta_table,
        eigen_table=eigen_table,
    )
    if int(mode_blk["r"]) != ms.r:
        raise DumpFormatError("stored operator count disagrees with the manifold")
    charges = tuple(_rat_parse(c) for c in data["charges"])
    # Cartan-Weyl data is derived from the algebra *name*, not the stored
    # tables: a tampered f/g must surface as a verification witness, not as
    # a crash while validating root vectors at load time.
    if base.is_abelian:
        cw = None
    else:
        cw = cartan_weyl(make_algebra(base.name))
    return GKMAlgebra(base=base, modes=ms, charges=charges, cw=cw)
