"""Exhaustive verification suites over bounded boxes of dominant weights.

Each suite yields JSON-serializable records, one per checked instance, with a
`holds` flag and a `replay` argv that reruns the instance from the command
line. Records come back sorted by instance key whatever the number of
worker processes.
"""

import concurrent.futures
import dataclasses
import itertools
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from prvkit.lie.repcalc import (
    character, character_product_oracle, decompose, dim_irrep, invariant_dim, kostant_multiplicity, weight_multiplicity
)
from prvkit.lie.rootdata import RootDatum, build_root_datum, labels, weight_from_labels
from prvkit.lie.weylgrp import format_word, weyl_group
from prvkit.loop.looplattice import (
    basis_valuations, convolution_membership, sl2_counterexample, stabilizer_intersection_dim,
    torus_translate_orbit_dim, verify_matrix_identities
)
from prvkit.prv.prvcore import (
    dimension_identity, kostant_check, mv_kostant_point, prv_instance, prv_pairs, refined_profile
)
from prvkit.transfer.invariants import (
    dominant_box, evidence_sweep, g_invariants, root_lattice_check, scan_box, transfer
)
from prvkit.transfer.maps import parse_preset, torus_in_group
from prvkit.utils.config import get_config
from prvkit.utils.logging import UsageError, debug, error, info, replay_command
from prvkit.utils.types import ADJOINT, SIMPLY_CONNECTED

Record = Dict[str, object]

DEFAULT_TYPES = {
    "prv": "A1,A2,A3,B2,B3,C3,G2",
    "refined": "A1,A2,A3,B2,B3,C3,G2",
    "identity": "A1,A2,A3,B2,B3,C3,G2",
    "kostant": "A1,A2,A3,B2,B3,C3,G2",
    "mv": "A1,A2,B2,G2",
    "oracle": "A1,A2,B2",
    "freudenthal": "A1,A2",
    "crosscheck": "A1,A2",
    "torus": "A2,B2",
    "counterexample": "B2",
    "sl2-example": "A1",
}
DEFAULT_BOUNDS = {"oracle": 3, "freudenthal": 3, "torus": 3, "counterexample": 10}


def _csv(x: Sequence[int]) -> str:
    return ",".join(str(v) for v in x)


def _coweight_flags(lams) -> List[str]:
    return [f"--coweight={_csv(x)}" for x in lams]


def dominant_labels_box(d: RootDatum, bound: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(bound + 1), repeat=d.n_simple))


def _instance_record(suite: str, d: RootDatum, lam, mu, w) -> Record:
    inst = prv_instance(d, lam, mu, w)
    replay = ["--type", d.label, "--lambda", _csv(lam), "--mu", _csv(mu), "--w", format_word(w.word)]
    rec: Record = {"suite": suite, **inst.to_json()}
    if suite in ("prv", "refined"):
        m = refined_profile(d, lam, mu).get(inst.nu, 0)
        dim = invariant_dim(d, lam, mu, inst.nu)
        rec.update(m=m, dim=dim)
        rec["holds"] = dim >= 1 if suite == "prv" else dim >= m >= 1
        rec["replay"] = [suite] + replay
    elif suite == "identity":
        ident = dimension_identity(d, lam, mu, w)
        rec.update(identity_lhs=str(ident.lhs), identity_rhs=ident.rhs, holds=ident.equal)
        rec["replay"] = ["dim-identity"] + replay
    elif suite == "kostant":
        k = kostant_check(d, lam, mu, w)
        rec.update(applicable=k.applicable, multiplicity=k.multiplicity, holds=k.holds)
        rec["replay"] = ["kostant"] + replay
    elif suite == "crosscheck":
        ident = dimension_identity(d, lam, mu, w)
        moved = labels(d, [a + b for a, b in zip(lam, w.apply(mu))])
        stab = torus_translate_orbit_dim(d.n_simple + 1, labels(d, lam), moved)
        rec.update(identity_rhs=ident.rhs, orbit_dim=stab.orbit_dim, stable=stab.stable,
                   holds=stab.stable and stab.orbit_dim == ident.rhs)
        rec["replay"] = ["orbit-dim", "--type", d.label, "--lambda", _csv(lam), "--mu", _csv(mu), "--w",
                         format_word(w.word)]
    return rec


def _instance_chunk(args) -> List[Record]:
    suite, label, lams, bound = args
    d = build_root_datum(label, SIMPLY_CONNECTED)
    box = [weight_from_labels(d, x) for x in dominant_labels_box(d, bound)]
    group = weyl_group(d)
    out = []
    for lam in lams:
        for mu in box:
            if suite == "mv":
                out.extend(_mv_records(d, lam, mu, group))
                continue
            for w in group:
                out.append(_instance_record(suite, d, lam, mu, w))
        debug("{} {}: lambda={} done", suite, label, lam)
    return out


def _mv_records(d: RootDatum, lam, mu, group) -> Iterator[Record]:
    for w in group:
        for v in group:
            res = mv_kostant_point(d, lam, mu, v, w)
            if not res.applicable:
                continue
            yield {
                "suite": "mv", "type": d.label, "lambda": list(lam), "mu": list(mu), "w": str(w), "v": str(v),
                "nu": list(res.nu), "multiplicity": res.multiplicity, "holds": res.holds,
                "replay": ["tensor", "--type", d.label, "--lambda", _csv(lam), "--mu", _csv(mu), "--nu",
                           _csv(res.nu)],
            }


def _instance_suite(suite: str, types: Sequence[str], bound: int, jobs: int) -> List[Record]:
    chunks = []
    for label in types:
        d = build_root_datum(label, SIMPLY_CONNECTED)
        type_a = d.cartan_label == (("A", d.n_simple),)
        if suite == "crosscheck" and (not type_a or d.n_simple + 1 > get_config().max_size):
            raise UsageError("The cross-check runs on types A_n with n+1 <= {}, not {}", get_config().max_size, label)
        for lab in dominant_labels_box(d, bound):
            chunks.append((suite, label, [weight_from_labels(d, lab)], bound))
    if jobs <= 1:
        results = [_instance_chunk(c) for c in chunks]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_instance_chunk, chunks))
    return [r for chunk in results for r in chunk]


def _oracle_suite(types: Sequence[str], bound: int) -> Iterator[Record]:
    for label in types:
        d = build_root_datum(label, SIMPLY_CONNECTED)
        box = [weight_from_labels(d, x) for x in dominant_labels_box(d, bound)]
        for lam, mu in itertools.product(box, repeat=2):
            klimyk = decompose(d, lam, mu)
            oracle = character_product_oracle(d, lam, mu)
            conserved = sum(c * dim_irrep(d, nu) for nu, c in klimyk.items()) == dim_irrep(d, lam) * dim_irrep(d, mu)
            yield {
                "suite": "oracle", "type": label, "lambda": list(lam), "mu": list(mu), "components": len(klimyk),
                "holds": klimyk == oracle and conserved,
                "replay": ["tensor", "--type", label, "--lambda", _csv(lam), "--mu", _csv(mu), "--check-oracle"],
            }


def _freudenthal_suite(types: Sequence[str], bound: int) -> Iterator[Record]:
    for label in types:
        d = build_root_datum(label, SIMPLY_CONNECTED)
        for lab in dominant_labels_box(d, bound):
            lam = weight_from_labels(d, lab)
            for mu in sorted(character(d, lam)):
                fr, ko = weight_multiplicity(d, lam, mu), kostant_multiplicity(d, lam, mu)
                yield {
                    "suite": "freudenthal", "type": label, "lambda": list(lam), "mu": list(mu),
                    "freudenthal": fr, "kostant": ko, "holds": fr == ko,
                    "replay": ["multiplicity", "--type", label, "--lambda", _csv(lam), f"--weight={_csv(mu)}"],
                }


def _torus_suite(types: Sequence[str], bound: int, jobs: int) -> Iterator[Record]:
    for label in types:
        tm = torus_in_group(build_root_datum(label, ADJOINT))
        for r in scan_box(tm, bound, 3, jobs):
            rec = {"suite": "torus", "preset": tm.label, **r.to_json(), "holds": r.imp_ok}
            rec["replay"] = ["transfer", "--preset", tm.label, "--basis", "lattice"] + _coweight_flags(r.lams)
            yield rec


def lattice_consistency(tm, bound: int, s: int = 3) -> List[Tuple]:
    """Tuples in the box whose transfers carry G-invariants but miss the coroot lattice (expected: none)."""
    box = dominant_box(tm, bound)
    bad = []
    for lams in itertools.product(box, repeat=s):
        transfers = [transfer(tm, lam) for lam in lams]
        if g_invariants(tm, transfers) and not root_lattice_check(tm, lams):
            bad.append(lams)
    return bad


def _counterexample_suite(types: Sequence[str], bound: int, jobs: int) -> Iterator[Record]:
    for label in types:
        found_any = False
        summaries = []
        for preset in (f"sl2-root:{label}:1", f"sl2-root:{label}:1:reversed"):
            tm = parse_preset(preset)
            summary = evidence_sweep(tm, bound, 3, jobs)
            lattice_bad = lattice_consistency(tm, bound)
            found_any = found_any or bool(summary.failures)
            for lams in summary.failures:
                n = summary.saturation[lams]
                yield {
                    "suite": "counterexample", "preset": preset, "lambdas": [list(x) for x in lams],
                    "saturation": n, "holds": n is not None,
                    "replay": ["saturate", "--preset", preset, "--basis", "lattice"] + _coweight_flags(lams),
                }
            summaries.append((preset, summary, lattice_bad))
        for preset, summary, lattice_bad in summaries:
            yield {
                "suite": "counterexample", "preset": preset, "summary": True, "instances": summary.instances,
                "failures": len(summary.failures), "lattice_violations": len(lattice_bad) + len(
                    summary.lattice_violations),
                "holds": found_any and not lattice_bad and not summary.lattice_violations,
                "replay": ["search", "--preset", preset, "--bound", str(bound)],
            }


def sl2_example_checks() -> List[Tuple[str, object, object]]:
    """(name, computed, expected) for every claim about the SL_2 example."""
    ex = sl2_counterexample()
    a1 = build_root_datum("A1", SIMPLY_CONNECTED)
    stab = stabilizer_intersection_dim([ex.t_alpha, ex.y], 2)
    return [
        ("matrix_identities", verify_matrix_identities(), True),
        ("membership", convolution_membership(ex.points, ex.targets), True),
        ("valuations", basis_valuations([ex.t_alpha, ex.y]), ex.valuations),
        ("orbit_dim", stab.orbit_dim, ex.orbit_dim),
        ("stable", stab.stable, True),
        ("prv_pairs", len(prv_pairs(a1, (2,), (2,), (2,))), 0),
        ("invariant_dim", invariant_dim(a1, (2,), (2,), (2,)), 1),
    ]


def _sl2_example_suite() -> Iterator[Record]:
    for name, got, want in sl2_example_checks():
        yield {
            "suite": "sl2-example", "check": name, "value": list(got) if isinstance(got, tuple) else got,
            "expected": list(want) if isinstance(want, tuple) else want, "holds": got == want,
            "replay": ["orbit-dim", "--sl2-example"],
        }


SUITES: Dict[str, Callable] = {
    "prv": lambda t, b, j: _instance_suite("prv", t, b, j),
    "refined": lambda t, b, j: _instance_suite("refined", t, b, j),
    "identity": lambda t, b, j: _instance_suite("identity", t, b, j),
    "kostant": lambda t, b, j: _instance_suite("kostant", t, b, j),
    "mv": lambda t, b, j: _instance_suite("mv", t, b, j),
    "crosscheck": lambda t, b, j: _instance_suite("crosscheck", t, b, j),
    "oracle": lambda t, b, j: _oracle_suite(t, b),
    "freudenthal": lambda t, b, j: _freudenthal_suite(t, b),
    "torus": _torus_suite,
    "counterexample": _counterexample_suite,
    "sl2-example": lambda t, b, j: _sl2_example_suite(),
}


@dataclasses.dataclass
class SuiteSummary:
    suite: str
    types: Tuple[str, ...]
    bound: int
    instances: int = 0
    violations: List[Record] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "types": list(self.types),
            "bound": self.bound,
            "instances": self.instances,
            "violations": len(self.violations),
            "ok": self.ok,
        }


def run_suite(
    name: str, types: Optional[Sequence[str]] = None, bound: Optional[int] = None, jobs: Optional[int] = None
) -> Tuple[List[Record], SuiteSummary]:
    """Run one suite; the records come back sorted by instance key."""
    if name not in SUITES:
        raise UsageError("Unknown suite {!r}; choose from {}", name, ", ".join(sorted(SUITES)))
    types = tuple(types) if types else tuple(DEFAULT_TYPES[name].split(","))
    bound = bound if bound is not None else DEFAULT_BOUNDS.get(name, get_config().bound)
    if bound < 0:
        raise UsageError("Bound must be non-negative, got {}", bound)
    jobs = jobs if jobs is not None else get_config().jobs
    records = sorted(SUITES[name](types, bound, jobs), key=_record_key)
    summary = SuiteSummary(name, types, bound)
    for rec in records:
        summary.instances += 1
        if not rec["holds"]:
            summary.violations.append(rec)
            error("Violation in suite {}: {}", name, replay_command(rec["replay"]))  # type: ignore
    info("Suite {}: {} instances, {} violations", name, summary.instances, len(summary.violations))
    return records, summary


def _record_key(rec: Record):
    return tuple(str(rec.get(k, "")) for k in ("type", "preset", "lambda", "lambdas", "mu", "w", "v", "check"))
