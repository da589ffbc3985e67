"""Named Cartan matrices and JSON loading.

The "E6-paper" labeling runs the chain 1-2-3-5-6 with node 4 attached
to node 3; "E6-bourbaki" is the textbook order, kept for comparison.
"""

from __future__ import annotations

import json
from typing import Union

from .lie_core import CartanMatrix


def _simply_laced(rank: int, edges: list[tuple[int, int]]) -> CartanMatrix:
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        rows[i - 1][j - 1] = -1
        rows[j - 1][i - 1] = -1
    return CartanMatrix.from_rows(rows)


def _type_b(rank: int) -> CartanMatrix:
    """Chain 1..rank with the last simple root short."""
    m = _simply_laced(rank, [(i, i + 1) for i in range(1, rank)])
    rows = [list(r) for r in m.entries]
    rows[rank - 1][rank - 2] = -2
    return CartanMatrix.from_rows(rows)


PRESETS: dict[str, CartanMatrix] = {
    "E6-paper": _simply_laced(6, [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)]),
    "E6-bourbaki": _simply_laced(6, [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)]),
    "D5": _simply_laced(5, [(1, 2), (2, 3), (3, 4), (3, 5)]),
    "B4": _type_b(4),
    "B3": _type_b(3),
    "A2": _simply_laced(2, [(1, 2)]),
}


def preset_names() -> list[str]:
    return sorted(PRESETS)


def get_preset(name: str) -> CartanMatrix:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; available: {', '.join(preset_names())}") from None


def cartan_from_obj(obj: dict) -> CartanMatrix:
    """Build a Cartan matrix from {"rank": n, "entries": [[...], ...]}."""
    rank = obj["rank"]
    entries = obj["entries"]
    if len(entries) != rank:
        raise ValueError(f"entries has {len(entries)} rows, rank says {rank}")
    return CartanMatrix.from_rows(entries)


def load_cartan(path: str) -> CartanMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return cartan_from_obj(json.load(fh))


def cartan_to_obj(cartan: CartanMatrix) -> dict:
    return {"rank": cartan.rank, "entries": [list(row) for row in cartan.entries]}


def resolve_cartan(spec: Union[str, dict]) -> CartanMatrix:
    """Accept a preset name or a Cartan-matrix JSON object."""
    if isinstance(spec, str):
        return get_preset(spec)
    return cartan_from_obj(spec)
