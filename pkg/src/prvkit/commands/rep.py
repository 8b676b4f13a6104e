"""Representation commands - info, tensor, invariants, multiplicity."""

from prvkit.lie.repcalc import (
    character_product_oracle, character_to_json, decompose, dim_irrep, invariant_dim, kostant_multiplicity,
    tensor_multiplicity, weight_multiplicity
)
from prvkit.lie.rootdata import dual_datum, labels
from prvkit.lie.weylgrp import longest_element
from prvkit.utils.inputs import datum_from_args, read_weight, read_weights
from prvkit.utils.logging import ViolationError, debug
from prvkit.utils.ui import emit


def cmd_info(args):
    """Print a root datum."""
    d = datum_from_args(args)
    fields = {
        "type": d.label,
        "form": d.form,
        "rank": d.rank,
        "cartan": [list(r) for r in d.cartan],
        "simple_roots": [list(r) for r in d.simple_roots],
        "simple_coroots": [list(r) for r in d.simple_coroots],
        "positive_roots": len(d.positive_roots),
        "weyl_order": d.weyl_order,
        "rho2": list(d.rho2),
        "rho_check2": list(d.rho_check2),
        "longest": str(longest_element(d)),
        "dual": f"{dual_datum(d).label} ({dual_datum(d).form})",
    }
    if args.roots:
        fields["roots"] = [
            {"root": list(p.root), "coroot": list(p.coroot), "height": p.height} for p in d.positive_roots
        ]
    emit(args, f"Root datum {d.label}", fields, args.replay)


def cmd_tensor(args):
    """Decompose V(λ)⊗V(μ), optionally against the character-product oracle."""
    d = datum_from_args(args)
    lam = read_weight(d, args.lam, args.basis, "lambda")
    mu = read_weight(d, args.mu, args.basis, "mu")
    table = decompose(d, lam, mu)
    fields = {
        "type": d.label,
        "lambda": list(lam),
        "mu": list(mu),
        "dim": dim_irrep(d, lam) * dim_irrep(d, mu),
        "components": character_to_json(table),
    }
    if args.nu is not None:
        nu = read_weight(d, args.nu, args.basis, "nu")
        fields["nu"] = list(nu)
        fields["multiplicity"] = tensor_multiplicity(d, lam, mu, nu)
    agree = True
    if args.check_oracle:
        agree = character_product_oracle(d, lam, mu) == table
        fields["oracle_agrees"] = agree
    emit(args, f"V{tuple(lam)} ⊗ V{tuple(mu)} over {d.label}", fields, args.replay)
    if not agree:
        raise ViolationError("Klimyk and the character-product oracle disagree for {} ⊗ {}", lam, mu)


def cmd_invariants(args):
    """dim (V(λ₁)⊗···⊗V(λ_s))^G."""
    d = datum_from_args(args)
    weights = read_weights(d, args.weight, args.basis)
    dim = invariant_dim(d, *weights)
    debug("Invariants of {} weights over {}: {}", len(weights), d.label, dim)
    emit(args, f"Invariants over {d.label}", {"type": d.label, "weights": [list(w) for w in weights], "dim": dim},
         args.replay)


def cmd_multiplicity(args):
    """Weight multiplicity by Freudenthal, checked against Kostant's partition function."""
    d = datum_from_args(args)
    lam = read_weight(d, args.lam, args.basis, "lambda")
    mu = read_weight(d, args.weight, args.basis, "weight")
    fr = weight_multiplicity(d, lam, mu)
    ko = kostant_multiplicity(d, lam, mu)
    fields = {
        "type": d.label, "lambda": list(lam), "weight": list(mu), "labels": list(labels(d, mu)),
        "freudenthal": fr, "kostant": ko, "holds": fr == ko,
    }
    emit(args, f"Multiplicity in V{tuple(lam)}", fields, args.replay)
    if fr != ko:
        raise ViolationError("Freudenthal gives {} but Kostant gives {} for weight {} of V{}", fr, ko, mu, lam)
