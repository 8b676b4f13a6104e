"""PRV commands - prv, refined, kostant, dim-identity, pairs."""

from prvkit.prv.prvcore import (
    dimension_identity, kostant_check, prv_pairs, prv_verify, refined_verify, stabilizer_valuations
)
from prvkit.utils.inputs import datum_from_args, read_weight, read_word
from prvkit.utils.logging import ViolationError
from prvkit.utils.ui import emit


def _instance_args(args):
    d = datum_from_args(args)
    lam = read_weight(d, args.lam, args.basis, "lambda")
    mu = read_weight(d, args.mu, args.basis, "mu")
    return d, lam, mu, read_word(d, args.w)


def cmd_prv(args):
    """Check dim (V(λ)⊗V(μ)⊗V(ν))^G ≥ 1 for ν = v(−λ−wμ)."""
    res = prv_verify(*_instance_args(args))
    fields = {**res.instance.to_json(), "dim": res.invariant_dim, "holds": res.holds}
    emit(args, "PRV", fields, args.replay)
    if not res.holds:
        raise ViolationError("PRV fails: no invariants in V{} ⊗ V{} ⊗ V{}", res.instance.lam, res.instance.mu,
                             res.instance.nu)


def cmd_refined(args):
    """Check dim ≥ m_{λ,μ,w} ≥ 1."""
    res = refined_verify(*_instance_args(args))
    fields = {**res.instance.to_json(), "m": res.m, "dim": res.dim, "holds": res.holds}
    emit(args, "Refined PRV", fields, args.replay)
    if not res.holds:
        raise ViolationError("Refined bound fails: dim {} < m {} for nu = {}", res.dim, res.m, res.instance.nu)


def cmd_kostant(args):
    """When λ+wμ is dominant, V(λ+wμ) occurs exactly once in V(λ)⊗V(μ)."""
    d, lam, mu, w = _instance_args(args)
    res = kostant_check(d, lam, mu, w)
    fields = {
        "type": d.label, "lambda": list(lam), "mu": list(mu), "w": str(w), "nu": list(res.nu),
        "applicable": res.applicable, "multiplicity": res.multiplicity, "holds": res.holds,
    }
    emit(args, "Kostant multiplicity one", fields, args.replay)
    if not res.holds:
        raise ViolationError("V{} occurs {} times, expected once", res.nu, res.multiplicity)


def cmd_dim_identity(args):
    """Compare ⟨λ+μ+ν, ρ∨⟩ with the stabilizer valuation sum."""
    d, lam, mu, w = _instance_args(args)
    ident = dimension_identity(d, lam, mu, w)
    fields = {"type": d.label, "lambda": list(lam), "mu": list(mu), "w": str(w), "lhs": str(ident.lhs),
              "rhs": ident.rhs, "equal": ident.equal}
    if args.valuations:
        fields["valuations"] = stabilizer_valuations(d, lam, mu, w).to_json()
    emit(args, "Dimension identity", fields, args.replay)
    if not ident.equal:
        raise ViolationError("Dimension identity fails: {} != {}", ident.lhs, ident.rhs)


def cmd_pairs(args):
    """List every (w, v) with ν = v(−λ−wμ)."""
    d = datum_from_args(args)
    lam = read_weight(d, args.lam, args.basis, "lambda")
    mu = read_weight(d, args.mu, args.basis, "mu")
    nu = read_weight(d, args.nu, args.basis, "nu")
    pairs = prv_pairs(d, lam, mu, nu)
    fields = {
        "type": d.label, "lambda": list(lam), "mu": list(mu), "nu": list(nu), "prv_triple": bool(pairs),
        "pairs": [{"w": str(w), "v": str(v)} for w, v in pairs],
    }
    emit(args, "PRV pairs", fields, args.replay)
