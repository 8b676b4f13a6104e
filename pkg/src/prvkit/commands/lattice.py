"""Affine Grassmannian commands - orbit-dim, distance, membership."""

from prvkit.lie.rootdata import labels
from prvkit.loop.looplattice import (
    basis_valuations, chevalley_distance, convolution_membership, format_coweight, stabilizer_intersection_dim,
    torus_translate_orbit_dim
)
from prvkit.prv.prvcore import dimension_identity
from prvkit.prv.sweep import sl2_example_checks
from prvkit.utils.inputs import datum_from_args, parse_ints, read_point, read_weight, read_word
from prvkit.utils.logging import UsageError, ViolationError
from prvkit.utils.ui import emit


def _sl2_example(args):
    checks = sl2_example_checks()
    fields = {name: list(got) if isinstance(got, tuple) else got for name, got, _ in checks}
    failed = [name for name, got, want in checks if got != want]
    fields["holds"] = not failed
    emit(args, "SL_2 example: ([α∨], ȳ, [0])", fields, args.replay)
    if failed:
        raise ViolationError("SL_2 example checks failed: {}", ", ".join(failed))


def _torus_translate(args):
    d = datum_from_args(args)
    if d.cartan_label != (("A", d.n_simple),) or d.torus_rank:
        raise UsageError("Torus translates are computed in SL_m; {} is not of type A_n", d.label)
    if args.lam is None or args.mu is None:
        raise UsageError("orbit-dim --type needs --lambda and --mu")
    lam = read_weight(d, args.lam, args.basis, "lambda")
    mu = read_weight(d, args.mu, args.basis, "mu")
    w = read_word(d, args.w)
    moved = [a + b for a, b in zip(lam, w.apply(mu))]
    stab = torus_translate_orbit_dim(d.n_simple + 1, labels(d, lam), labels(d, moved))
    rhs = dimension_identity(d, lam, mu, w).rhs
    holds = stab.stable and stab.orbit_dim == rhs
    fields = {"type": d.label, "lambda": list(lam), "mu": list(mu), "w": str(w), **stab.to_json(),
              "identity_rhs": rhs, "holds": holds}
    emit(args, "Orbit of (t^λ, t^(λ+wμ))", fields, args.replay)
    if not holds:
        raise ViolationError("Orbit dimension {} (stable: {}) differs from the valuation sum {}", stab.orbit_dim,
                             stab.stable, rhs)


def cmd_orbit_dim(args):
    """Dimension of the SL_m(𝒪)-orbit of a tuple of lattices."""
    if args.sl2_example:
        return _sl2_example(args)
    if args.type:
        return _torus_translate(args)
    if not args.point:
        raise UsageError("orbit-dim needs --sl2-example, --type with a PRV instance, or --point")
    mats = [read_point(p).rep for p in args.point]
    stab = stabilizer_intersection_dim(mats, args.truncation)
    fields = {**stab.to_json(), "valuations": list(basis_valuations(mats))}
    emit(args, f"Orbit of {len(mats)} lattices", fields, args.replay)


def cmd_distance(args):
    """Chevalley distance d(L1, L2), in coroot coordinates."""
    first, second = read_point(args.first), read_point(args.second)
    dist = chevalley_distance(first, second)
    emit(args, f"d({first}, {second})", {"distance": list(dist), "coweight": format_coweight(dist)}, args.replay)


def cmd_membership(args):
    """Whether (L1, ..., Ls) lies in the cyclic convolution variety of the target coweights."""
    points = [read_point(p) for p in args.point]
    targets = [parse_ints(t, "target coweight") for t in args.target]
    member = convolution_membership(points, targets)
    fields = {
        "points": [str(p) for p in points],
        "targets": [format_coweight(t) for t in targets],
        "member": member,
    }
    emit(args, "Convolution membership", fields, args.replay)
