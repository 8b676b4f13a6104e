"""Cocharacter maps between root data, and the named presets that build them.

A `TransferMap` sends a coweight of H (row vector in lattice coordinates of
X_*(T_H)) to a coweight of G by right multiplication with `iota`, one row per
basis vector of X_*(T_H).

Presets:
    torus:<type>[:<form>]        H = T_G, iota the identity; G adjoint unless a form is given
    sl2-root:<type>:<i>          H = SL_2 mapped onto the root α_i; G adjoint
    sl2-root:<type>:<i>:reversed the same with the simple roots of G numbered backwards
    custom:<json>                {"source": ..., "target": ..., "iota": [[...]]}; a datum is
                                 {"type": "B2", "form": "adjoint"} or explicit lattice data
"""

import dataclasses
import json
from typing import Sequence

import sympy

from prvkit.lie.rootdata import RootDatum, build_root_datum, colabels, reorder, root_datum_from_json
from prvkit.utils.logging import UsageError
from prvkit.utils.types import ADJOINT, FORMS, SIMPLY_CONNECTED, TORUS, CoweightVec, IntMatrix


@dataclasses.dataclass(frozen=True)
class TransferMap:
    source: RootDatum
    target: RootDatum
    iota: IntMatrix
    label: str = "custom"

    def __post_init__(self):
        if len(self.iota) != self.source.rank or any(len(row) != self.target.rank for row in self.iota):
            raise UsageError(
                "iota must be a {}x{} integer matrix, got {} rows", self.source.rank, self.target.rank, len(self.iota)
            )
        if self.source.rank and sympy.Matrix([list(r) for r in self.iota]).rank() != self.source.rank:
            raise UsageError("iota is not injective")

    def push(self, lam: Sequence[int]) -> CoweightVec:
        if len(lam) != self.source.rank:
            raise UsageError("Coweight {} has length {}, expected {} for {}", tuple(lam), len(lam), self.source.rank,
                             self.source.label)
        return CoweightVec(tuple(sum(lam[k] * self.iota[k][j] for k in range(len(lam)))
                                 for j in range(self.target.rank)))

    def is_source_dominant(self, lam: Sequence[int]) -> bool:
        return all(v >= 0 for v in colabels(self.source, lam))


def torus_in_group(target: RootDatum) -> TransferMap:
    source = build_root_datum(f"T{target.rank}", TORUS)
    iota = tuple(tuple(int(i == j) for j in range(target.rank)) for i in range(target.rank))
    return TransferMap(source, target, iota, f"torus:{target.label}")


def sl2_via_root(target: RootDatum, index: int, label: str = "") -> TransferMap:
    """SL_2 → G along the root α_index; the coweight α∨ of SL_2 goes to α_index∨."""
    if not 1 <= index <= target.n_simple:
        raise UsageError("Root index {} out of range for {}", index, target.label)
    source = build_root_datum("A1", SIMPLY_CONNECTED)
    return TransferMap(source, target, (tuple(target.simple_coroots[index - 1]),), label or f"sl2-root:{index}")


def _datum_from_doc(doc) -> RootDatum:
    if not isinstance(doc, dict):
        raise UsageError("A datum must be a JSON object, got {!r}", doc)
    if "type" in doc:
        form = doc.get("form", SIMPLY_CONNECTED)
        if form not in FORMS:
            raise UsageError("Unknown form {!r}", form)
        return build_root_datum(doc["type"], form)
    return root_datum_from_json(doc)


def parse_preset(name: str) -> TransferMap:
    kind, _, rest = name.partition(":")
    if kind == "torus":
        parts = rest.split(":")
        if not parts[0] or len(parts) > 2:
            raise UsageError("Expected torus:<type>[:<form>], got {!r}", name)
        form = parts[1] if len(parts) == 2 else ADJOINT
        return torus_in_group(build_root_datum(parts[0], form))
    if kind == "sl2-root":
        parts = rest.split(":")
        if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] != "reversed"):
            raise UsageError("Expected sl2-root:<type>:<i>[:reversed], got {!r}", name)
        try:
            index = int(parts[1])
        except ValueError:
            raise UsageError("Root index {!r} is not an integer", parts[1])
        target = build_root_datum(parts[0], ADJOINT)
        if len(parts) == 3:
            target = reorder(target, list(range(target.n_simple, 0, -1)))
        return sl2_via_root(target, index, name)
    if kind == "custom":
        try:
            doc = json.loads(rest)
            iota = tuple(tuple(int(v) for v in row) for row in doc["iota"])
            source, target = _datum_from_doc(doc["source"]), _datum_from_doc(doc["target"])
        except (ValueError, KeyError, TypeError) as e:
            raise UsageError("Malformed custom transfer map: {}", e)
        return TransferMap(source, target, iota, "custom")
    raise UsageError("Unknown preset {!r}; use torus:<type>, sl2-root:<type>:<i> or custom:<json>", name)
