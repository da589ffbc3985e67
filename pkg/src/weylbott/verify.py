"""Strong-exceptionality certification for ordered bundle collections.

A collection (E_1, ..., E_n) is strongly exceptional when every E_i is
simple with no higher self-extensions, Ext^k(E_i, E_j) vanishes for all
k >= 1 when i < j, and in every degree when i > j.  The verifier runs
all n^2 ordered pairs, collects every violation, and emits a
deterministic report.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bbw import ExtTable, ext_table
from .lie_core import RootSystem, Weight
from .parabolic import ParabolicSetup, check_bundle, make_setup, twist
from .presets import cartan_from_obj, cartan_to_obj, get_preset


@dataclass(frozen=True)
class Collection:
    """An ordered list of bundle weights on one parabolic setup."""

    name: str
    setup: ParabolicSetup
    bundles: tuple[Weight, ...]
    preset: Optional[str] = None          # name used to rebuild the Cartan matrix
    blocks: Optional[tuple[int, ...]] = None  # display grouping, e.g. by twist

    def __post_init__(self):
        for w in self.bundles:
            check_bundle(self.setup, w)
        if self.blocks is not None and sum(self.blocks) != len(self.bundles):
            raise ValueError("block sizes must sum to the collection size")


@dataclass(frozen=True)
class Violation:
    pair: tuple[int, int]  # 1-based indices into the collection
    degree: int
    dim: int
    rule: str              # which exceptionality clause failed


@dataclass
class VerificationReport:
    collection: Collection
    tables: list[ExtTable]           # row-major over ordered pairs (i, j)
    violations: list[Violation]
    elapsed_seconds: float = field(default=0.0)

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def pairs_checked(self) -> int:
        return len(self.tables)

    def table_for(self, i: int, j: int) -> ExtTable:
        n = len(self.collection.bundles)
        return self.tables[(i - 1) * n + (j - 1)]


def _check_pair(setup: ParabolicSetup, i: int, j: int, table: ExtTable) -> list[Violation]:
    out = []
    if i == j:
        if table.dims[0] != 1:
            out.append(Violation((i, j), 0, table.dims[0], "endomorphisms not scalar"))
        for k in range(1, setup.dim_x + 1):
            if table.dims[k]:
                out.append(Violation((i, j), k, table.dims[k], "higher self-extension"))
    elif i < j:
        for k in range(1, setup.dim_x + 1):
            if table.dims[k]:
                out.append(Violation((i, j), k, table.dims[k], "higher forward extension"))
    else:
        for k in range(0, setup.dim_x + 1):
            if table.dims[k]:
                out.append(Violation((i, j), k, table.dims[k], "backward morphism"))
    return out


def verify_strong_exceptional(coll: Collection, jobs: int = 1) -> VerificationReport:
    """Check all ordered pairs; never stops early, so reports are exhaustive."""
    setup = coll.setup
    n = len(coll.bundles)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    start = time.monotonic()

    def job(pair: tuple[int, int]) -> ExtTable:
        i, j = pair
        return ext_table(setup, coll.bundles[i - 1], coll.bundles[j - 1])

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            tables = list(pool.map(job, pairs))
    else:
        tables = [job(p) for p in pairs]
    violations: list[Violation] = []
    for (i, j), table in zip(pairs, tables):
        violations.extend(_check_pair(setup, i, j, table))
    return VerificationReport(coll, tables, violations, time.monotonic() - start)


def hom_matrix(coll: Collection) -> list[list[int]]:
    """dim Hom(E_i, E_j) for every ordered pair."""
    n = len(coll.bundles)
    return [
        [ext_table(coll.setup, coll.bundles[i], coll.bundles[j]).dims[0] for j in range(n)]
        for i in range(n)
    ]


# -- built-in collections -------------------------------------------------


def builtin_collection(name: str) -> Collection:
    if name == "cayley27":
        rs = RootSystem(get_preset("E6-paper"))
        setup = make_setup(rs, 1)
        s2_star = (-2, 0, 0, 0, 0, 2)
        s_star = (-1, 0, 0, 0, 0, 1)
        o = (0, 0, 0, 0, 0, 0)
        bundles: list[Weight] = []
        blocks: list[int] = []
        for t in range(3):
            bundles += [twist(setup, s2_star, t), twist(setup, s_star, t), twist(setup, o, t)]
            blocks.append(3)
        for t in range(3, 12):
            bundles += [twist(setup, s_star, t), twist(setup, o, t)]
            blocks.append(2)
        return Collection("cayley27", setup, tuple(bundles), "E6-paper", tuple(blocks))
    if name == "kapranovQ7":
        rs = RootSystem(get_preset("B4"))
        setup = make_setup(rs, 1)
        o = (0, 0, 0, 0)
        spinor = (0, 0, 0, 1)
        bundles = [
            twist(setup, o, 5),
            twist(setup, o, 6),
            twist(setup, spinor, 6),
            twist(setup, o, 7),
            twist(setup, o, 8),
            twist(setup, o, 9),
            twist(setup, o, 10),
            twist(setup, o, 11),
        ]
        return Collection("kapranovQ7", setup, tuple(bundles), "B4", (7, 1))
    raise ValueError(f"unknown built-in collection {name!r}; available: cayley27, kapranovQ7")


# -- JSON in/out ------------------------------------------------------------


def collection_from_obj(obj: dict) -> Collection:
    if "preset" in obj and obj["preset"] is not None:
        cartan = get_preset(obj["preset"])
        preset = obj["preset"]
    else:
        cartan = cartan_from_obj(obj["cartan"])
        preset = None
    rs = RootSystem(cartan)
    setup = make_setup(rs, int(obj["crossed"]))
    bundles = tuple(tuple(int(x) for x in b["weight"]) for b in obj["bundles"])
    blocks = tuple(int(x) for x in obj["blocks"]) if obj.get("blocks") else None
    return Collection(str(obj.get("name", "collection")), setup, bundles, preset, blocks)


def load_collection(path: str) -> Collection:
    with open(path, "r", encoding="utf-8") as fh:
        return collection_from_obj(json.load(fh))


def collection_to_obj(coll: Collection) -> dict:
    obj: dict = {"name": coll.name, "crossed": coll.setup.crossed}
    if coll.preset is not None:
        obj["preset"] = coll.preset
    else:
        obj["cartan"] = cartan_to_obj(coll.setup.rs.cartan)
    obj["bundles"] = [{"weight": list(w)} for w in coll.bundles]
    if coll.blocks is not None:
        obj["blocks"] = list(coll.blocks)
    return obj


def _table_obj(setup: ParabolicSetup, table: ExtTable) -> list[dict]:
    rs = setup.rs
    from .lie_core import Subsystem

    full = Subsystem.full(rs.rank)
    out = []
    for k in range(table.dim_x + 1):
        entry: dict = {"degree": k, "dim": table.dims[k], "weights": []}
        for w, m in table.weights[k]:
            entry["weights"].append(
                {"weight": list(w), "dual": list(rs.dual_dominant(full, w)), "mult": m}
            )
        out.append(entry)
    return out


def report_to_obj(report: VerificationReport, include_timing: bool = False) -> dict:
    coll = report.collection
    n = len(coll.bundles)
    obj: dict = {
        "collection": collection_to_obj(coll),
        "dim_x": coll.setup.dim_x,
        "index": coll.setup.index,
        "size": n,
        "pairs_checked": report.pairs_checked,
        "verdict": report.verdict,
        "violations": [
            {"pair": list(v.pair), "degree": v.degree, "dim": v.dim, "rule": v.rule}
            for v in report.violations
        ],
        "tables": [
            {
                "pair": [i + 1, j + 1],
                "table": _table_obj(coll.setup, report.table_for(i + 1, j + 1)),
            }
            for i in range(n)
            for j in range(n)
        ],
    }
    if include_timing:
        obj["elapsed_seconds"] = report.elapsed_seconds
    return obj


def report_to_json(report: VerificationReport, include_timing: bool = False) -> str:
    return json.dumps(report_to_obj(report, include_timing), sort_keys=True, indent=2)


def render_report_text(report: VerificationReport) -> str:
    coll = report.collection
    n = len(coll.bundles)
    lines = [
        f"collection {coll.name}: {n} bundles, {report.pairs_checked} ordered pairs, "
        f"verdict {report.verdict.upper()} ({report.elapsed_seconds:.2f}s)"
    ]
    lines.append("")
    lines.append("Hom matrix (dim Hom(E_row, E_col)):")
    hom = [[report.table_for(i + 1, j + 1).dims[0] for j in range(n)] for i in range(n)]
    width = max(len(str(x)) for row in hom for x in row)
    boundaries: set[int] = set()
    if coll.blocks:
        acc = 0
        for b in coll.blocks[:-1]:
            acc += b
            boundaries.add(acc)

    def fmt_row(row: list[int]) -> str:
        parts = []
        for j, x in enumerate(row):
            if j in boundaries:
                parts.append("|")
            parts.append(str(x).rjust(width))
        return " ".join(parts)

    hline = None
    for i, row in enumerate(hom):
        if i in boundaries:
            if hline is None:
                hline = "-" * len(fmt_row(row))
            lines.append(hline)
        lines.append(fmt_row(row))
    lines.append("")
    if report.violations:
        lines.append(f"{len(report.violations)} violation(s):")
        for v in report.violations:
            lines.append(
                f"  pair {v.pair}: Ext^{v.degree} has dim {v.dim} ({v.rule})"
            )
    else:
        lines.append("no violations: the collection is strongly exceptional")
    return "\n".join(lines)
