"""Transfer commands - transfer, search, saturate."""

from prvkit.transfer.invariants import check_implication, evidence_sweep, root_lattice_check, saturation_check
from prvkit.transfer.maps import parse_preset
from prvkit.utils.config import get_config
from prvkit.utils.inputs import read_coweight
from prvkit.utils.logging import ViolationError, warning
from prvkit.utils.types import TORUS
from prvkit.utils.ui import emit


def _coweights(tm, args):
    return [read_coweight(tm.source, text, args.basis) for text in args.coweight]


def cmd_transfer(args):
    """Push coweights of H to G and compare the invariants on both sides."""
    tm = parse_preset(args.preset)
    res = check_implication(tm, _coweights(tm, args))
    fields = {
        "preset": tm.label,
        "source": tm.source.label,
        "target": tm.target.label,
        **res.to_json(),
        "coroot_lattice": root_lattice_check(tm, res.lams),
    }
    emit(args, f"Transfer along {tm.label}", fields, args.replay)
    if not res.imp_ok:
        raise ViolationError("H has {} invariants but the transfers {} have none", res.h_dim, res.transfers)


def cmd_search(args):
    """Look for tuples whose invariants do not survive transfer."""
    tm = parse_preset(args.preset)
    jobs = args.jobs if args.jobs is not None else get_config().jobs
    summary = evidence_sweep(tm, args.bound, args.length, jobs, args.n_max)
    if summary.lattice_violations:
        warning("{} tuples with G-invariants miss the coroot lattice", len(summary.lattice_violations))
    emit(args, f"Search along {tm.label}, bound {args.bound}", summary.to_json(), args.replay)
    if tm.source.form == TORUS and summary.failures:
        raise ViolationError("{} tuples lose their invariants along {}, whose source is a torus", len(summary.failures),
                             tm.label)


def cmd_saturate(args):
    """Least N′ with invariants in V(N′λ₁′)⊗···⊗V(N′λ_s′)."""
    tm = parse_preset(args.preset)
    lams = _coweights(tm, args)
    n = saturation_check(tm, lams, args.n_max)
    fields = {"preset": tm.label, "lambdas": [list(x) for x in lams], "n_max": args.n_max, "saturation": n}
    emit(args, f"Saturation along {tm.label}", fields, args.replay)
    if n is None:
        raise ViolationError("No N′ ≤ {} gives invariants for the transfers of {}", args.n_max, lams)
