"""Invariants on both sides of a transfer map, and the searches built on them.

Dominant coweights of a group are dominant weights of its dual group, so
every invariant dimension here is computed over a dual root datum.
"""

import concurrent.futures
import dataclasses
import itertools
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from prvkit.lie.repcalc import invariant_dim
from prvkit.lie.rootdata import dual_datum, in_root_lattice
from prvkit.lie.weylgrp import dominant_vector
from prvkit.transfer.maps import TransferMap
from prvkit.utils.logging import UsageError, debug, info
from prvkit.utils.types import CoweightVec

Triple = Tuple[CoweightVec, ...]


def _check_source(tm: TransferMap, lams: Sequence[Sequence[int]]):
    if not lams:
        raise UsageError("Need at least one coweight")
    for lam in lams:
        if len(lam) != tm.source.rank:
            raise UsageError("Coweight {} is not in the cocharacter lattice of {} (rank {})", tuple(lam),
                             tm.source.label, tm.source.rank)
        if not tm.is_source_dominant(lam):
            raise UsageError("Coweight {} is not dominant for {}", tuple(lam), tm.source.label)


def transfer(tm: TransferMap, lam: Sequence[int]) -> CoweightVec:
    """λ′: the dominant W_G-translate of ι(λ)."""
    _check_source(tm, [lam])
    return CoweightVec(dominant_vector(tm.target, tm.push(lam), coweight=True))


def h_invariants(tm: TransferMap, lams: Sequence[Sequence[int]]) -> int:
    _check_source(tm, lams)
    return invariant_dim(dual_datum(tm.source), *lams)


def g_invariants(tm: TransferMap, transfers: Sequence[Sequence[int]]) -> int:
    return invariant_dim(dual_datum(tm.target), *transfers)


@dataclasses.dataclass(frozen=True)
class ImplicationResult:
    lams: Triple
    transfers: Triple
    h_dim: int
    g_dim: int

    @property
    def imp_ok(self) -> bool:
        return self.h_dim == 0 or self.g_dim >= 1

    def to_json(self) -> dict:
        return {
            "lambdas": [list(x) for x in self.lams],
            "transfers": [list(x) for x in self.transfers],
            "h_dim": self.h_dim,
            "g_dim": self.g_dim,
            "imp_ok": self.imp_ok,
        }


def check_implication(tm: TransferMap, lams: Sequence[Sequence[int]]) -> ImplicationResult:
    h_dim = h_invariants(tm, lams)
    transfers = tuple(transfer(tm, lam) for lam in lams)
    return ImplicationResult(
        tuple(CoweightVec(tuple(x)) for x in lams), transfers, h_dim, g_invariants(tm, transfers)
    )


def root_lattice_check(tm: TransferMap, lams: Sequence[Sequence[int]]) -> bool:
    """Whether Σλᵢ′ lies in the coroot lattice of G, i.e. the root lattice of the dual group."""
    transfers = [transfer(tm, lam) for lam in lams]
    total = [sum(col) for col in zip(*transfers)]
    return in_root_lattice(dual_datum(tm.target), total)


def saturation_check(tm: TransferMap, lams: Sequence[Sequence[int]], n_max: int = 10) -> Optional[int]:
    """The least N′ ≤ n_max with (V(N′λ₁′)⊗···)^{G∨} ≠ 0, or None."""
    if h_invariants(tm, lams) < 1:
        raise UsageError("Saturation needs nonzero H-invariants for {}", [tuple(x) for x in lams])
    transfers = [transfer(tm, lam) for lam in lams]
    for n in range(1, n_max + 1):
        if g_invariants(tm, [tuple(n * v for v in x) for x in transfers]):
            return n
    return None


def dominant_box(tm: TransferMap, bound: int) -> List[CoweightVec]:
    """Dominant coweights of H with every coordinate in [−bound, bound], lexicographically."""
    box = itertools.product(range(-bound, bound + 1), repeat=tm.source.rank)
    return [CoweightVec(x) for x in box if tm.is_source_dominant(x)]


def _scan(
    tm: TransferMap, firsts: Sequence[CoweightVec], box: Sequence[CoweightVec], s: int
) -> List[ImplicationResult]:
    out = []
    for first in firsts:
        for rest in itertools.product(box, repeat=s - 1):
            lams = (first,) + rest
            h_dim = h_invariants(tm, lams)
            if h_dim == 0:
                continue
            transfers = tuple(transfer(tm, lam) for lam in lams)
            out.append(ImplicationResult(lams, transfers, h_dim, g_invariants(tm, transfers)))
    return out


def _scan_chunk(args) -> List[ImplicationResult]:
    return _scan(*args)


def scan_box(tm: TransferMap, bound: int, s: int = 3, jobs: int = 1) -> List[ImplicationResult]:
    """Every s-tuple from the dominant box with nonzero H-invariants, in lexicographic order."""
    if s < 1:
        raise UsageError("Tuple length must be positive, got {}", s)
    box = dominant_box(tm, bound)
    debug("Scanning {} dominant coweights of {} for {}", len(box), tm.source.label, tm.label)
    if jobs <= 1 or len(box) < 2:
        return _scan(tm, box, box, s)
    chunks = [(tm, box[i::jobs], box, s) for i in range(jobs)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        results = [r for chunk in pool.map(_scan_chunk, chunks) for r in chunk]
    return sorted(results, key=lambda r: r.lams)


def search_failures(tm: TransferMap, bound: int, s: int = 3, jobs: int = 1) -> List[Triple]:
    """Tuples with H-invariants whose transfers have no G-invariants."""
    return [r.lams for r in scan_box(tm, bound, s, jobs) if not r.imp_ok]


@dataclasses.dataclass
class EvidenceSummary:
    preset: str
    bound: int
    instances: int = 0
    imp_ok: int = 0
    failures: List[Triple] = dataclasses.field(default_factory=list)
    saturation: Dict[Triple, Optional[int]] = dataclasses.field(default_factory=dict)
    lattice_violations: List[Triple] = dataclasses.field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "preset": self.preset,
            "bound": self.bound,
            "instances": self.instances,
            "imp_ok": self.imp_ok,
            "failures": [[list(x) for x in t] for t in self.failures],
            "saturation": [{"lambdas": [list(x) for x in t], "n": n} for t, n in self.saturation.items()],
            "lattice_violations": [[list(x) for x in t] for t in self.lattice_violations],
        }


def evidence_sweep(
    tm: TransferMap, bound: int, s: int = 3, jobs: int = 1, n_max: int = 10, results: Optional[Iterable] = None
) -> EvidenceSummary:
    """Bounded evidence about the implication for one map: never a proof either way."""
    summary = EvidenceSummary(tm.label, bound)
    for r in results if results is not None else scan_box(tm, bound, s, jobs):
        summary.instances += 1
        if r.g_dim >= 1 and not root_lattice_check(tm, r.lams):
            summary.lattice_violations.append(r.lams)
        if r.imp_ok:
            summary.imp_ok += 1
            continue
        summary.failures.append(r.lams)
        summary.saturation[r.lams] = saturation_check(tm, r.lams, n_max)
    info("{}: {} tuples with H-invariants, {} failures of the implication", tm.label, summary.instances,
         len(summary.failures))
    return summary
