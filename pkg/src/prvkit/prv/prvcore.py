"""The PRV statement and its refinement, checked inside one root datum.

Representations live on the datum passed in. Pairings of a root of the
dual group with a coweight become pairings of a weight with a coroot here,
and ⟨ρ, ·⟩ on the dual side becomes ⟨·, ρ∨⟩.
"""

import collections
import dataclasses
import functools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from prvkit.lie.repcalc import invariant_dim, tensor_multiplicity
from prvkit.lie.rootdata import RootDatum, is_dominant, labels, pairing
from prvkit.lie.weylgrp import (
    WeylElement, dominant_representative, dominant_vector, element_from_word, minimal_double_coset_representatives,
    weyl_group
)
from prvkit.utils.logging import UsageError
from prvkit.utils.types import CoweightVec, WeightVec

WeylLike = Union[WeylElement, str, Sequence[int]]


def _element(d: RootDatum, w: WeylLike) -> WeylElement:
    if isinstance(w, WeylElement):
        if w not in weyl_group(d):
            raise UsageError("{} is not an element of W({})", w, d.label)
        return weyl_group(d).canonical(w.action)
    return element_from_word(d, w)


def _dominant_pair(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Tuple[WeightVec, WeightVec]:
    for name, x in (("lambda", lam), ("mu", mu)):
        if len(x) != d.rank:
            raise UsageError("{} = {} has length {}, expected rank {} of {}", name, tuple(x), len(x), d.rank, d.label)
        if not is_dominant(d, x):
            raise UsageError("{} = {} is not dominant for {}", name, tuple(x), d.label)
    return WeightVec(tuple(lam)), WeightVec(tuple(mu))


def _add(x: Sequence[int], y: Sequence[int]) -> WeightVec:
    return WeightVec(tuple(a + b for a, b in zip(x, y)))


def _neg(x: Sequence[int]) -> WeightVec:
    return WeightVec(tuple(-a for a in x))


@dataclasses.dataclass(frozen=True)
class PrvInstance:
    """(λ, μ, w) together with the derived ν = v(−λ−wμ) and its canonical v."""
    datum: RootDatum
    lam: WeightVec
    mu: WeightVec
    w: WeylElement
    nu: WeightVec
    v: WeylElement

    @property
    def key(self) -> Tuple:
        return (self.datum.label, self.datum.form, self.lam, self.mu, self.w.word)

    def to_json(self) -> dict:
        return {
            "type": self.datum.label,
            "form": self.datum.form,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "w": str(self.w),
            "nu": list(self.nu),
            "v": str(self.v),
        }


def prv_nu(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> Tuple[WeightVec, WeylElement]:
    lam, mu = _dominant_pair(d, lam, mu)
    elt = _element(d, w)
    return dominant_representative(d, _neg(_add(lam, elt.apply(mu))))


def prv_instance(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> PrvInstance:
    lam, mu = _dominant_pair(d, lam, mu)
    elt = _element(d, w)
    nu, v = dominant_representative(d, _neg(_add(lam, elt.apply(mu))))
    return PrvInstance(d, lam, mu, elt, nu, v)


@dataclasses.dataclass(frozen=True)
class PrvResult:
    instance: PrvInstance
    invariant_dim: int

    @property
    def holds(self) -> bool:
        return self.invariant_dim >= 1


def prv_verify(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> PrvResult:
    inst = prv_instance(d, lam, mu, w)
    return PrvResult(inst, invariant_dim(d, inst.lam, inst.mu, inst.nu))


@functools.lru_cache(maxsize=None)
def _refined_profile(d: RootDatum, lam: WeightVec, mu: WeightVec) -> Tuple[Tuple[WeightVec, int], ...]:
    zero_lam = [i + 1 for i, v in enumerate(labels(d, lam)) if v == 0]
    zero_mu = [i + 1 for i, v in enumerate(labels(d, mu)) if v == 0]
    counts: Dict[WeightVec, int] = collections.Counter()
    for u in minimal_double_coset_representatives(d, zero_lam, zero_mu):
        counts[WeightVec(dominant_vector(d, _neg(_add(lam, u.apply(mu)))))] += 1
    return tuple(sorted(counts.items()))


def refined_profile(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Dict[WeightVec, int]:
    """ν ↦ number of double cosets W_λ u W_μ with −λ−uμ conjugate to ν."""
    lam, mu = _dominant_pair(d, lam, mu)
    return dict(_refined_profile(d, lam, mu))


def refined_count(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> int:
    """m_{λ,μ,w}: double cosets ū with −λ−uμ W-conjugate to −λ−wμ."""
    inst = prv_instance(d, lam, mu, w)
    m = dict(_refined_profile(d, inst.lam, inst.mu)).get(inst.nu, 0)
    assert m >= 1, inst
    return m


@dataclasses.dataclass(frozen=True)
class RefinedResult:
    instance: PrvInstance
    dim: int
    m: int

    @property
    def holds(self) -> bool:
        return self.dim >= self.m >= 1


def refined_verify(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> RefinedResult:
    inst = prv_instance(d, lam, mu, w)
    m = dict(_refined_profile(d, inst.lam, inst.mu)).get(inst.nu, 0)
    return RefinedResult(inst, invariant_dim(d, inst.lam, inst.mu, inst.nu), m)


@dataclasses.dataclass(frozen=True)
class KostantResult:
    applicable: bool
    nu: WeightVec
    multiplicity: int

    @property
    def holds(self) -> bool:
        return not self.applicable or self.multiplicity == 1


def kostant_check(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> KostantResult:
    """When λ+wμ is dominant, V(λ+wμ) occurs in V(λ)⊗V(μ) exactly once."""
    lam, mu = _dominant_pair(d, lam, mu)
    nu = _add(lam, _element(d, w).apply(mu))
    if not is_dominant(d, nu):
        return KostantResult(False, nu, 0)
    return KostantResult(True, nu, tensor_multiplicity(d, lam, mu, nu))


@dataclasses.dataclass(frozen=True)
class MvPointResult:
    applicable: bool
    nu: WeightVec
    multiplicity: int

    @property
    def holds(self) -> bool:
        return not self.applicable or self.multiplicity >= 1


def mv_kostant_point(d: RootDatum, lam: Sequence[int], mu: Sequence[int], v: WeylLike, w: WeylLike) -> MvPointResult:
    """For ν = v(λ+wμ) dominant, V(ν) occurs in V(λ)⊗V(μ)."""
    lam, mu = _dominant_pair(d, lam, mu)
    nu = _element(d, v).apply(_add(lam, _element(d, w).apply(mu)))
    if not is_dominant(d, nu):
        return MvPointResult(False, nu, 0)
    return MvPointResult(True, nu, tensor_multiplicity(d, lam, mu, nu))


@dataclasses.dataclass(frozen=True)
class ValuationProfile:
    """max(0, ⟨λ, α∨⟩, ⟨λ+wμ, α∨⟩) for every coroot α∨."""
    entries: Tuple[Tuple[CoweightVec, int], ...]

    @property
    def total(self) -> int:
        return sum(v for _, v in self.entries)

    def __getitem__(self, coroot: Sequence[int]) -> int:
        return dict(self.entries)[CoweightVec(tuple(coroot))]

    def to_json(self) -> List[dict]:
        return [{"coroot": list(c), "valuation": v} for c, v in self.entries]


def stabilizer_valuations(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> ValuationProfile:
    lam, mu = _dominant_pair(d, lam, mu)
    moved = _add(lam, _element(d, w).apply(mu))
    return ValuationProfile(
        tuple((c, max(0, pairing(lam, c), pairing(moved, c))) for c in d.coroots)
    )


@dataclasses.dataclass(frozen=True)
class DimensionIdentity:
    lhs: Fraction
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def dimension_identity(d: RootDatum, lam: Sequence[int], mu: Sequence[int], w: WeylLike) -> DimensionIdentity:
    """⟨λ+μ+ν, ρ∨⟩ against Σ_{α∨} max(0, ⟨λ,α∨⟩, ⟨λ+wμ,α∨⟩)."""
    inst = prv_instance(d, lam, mu, w)
    total = _add(_add(inst.lam, inst.mu), inst.nu)
    lhs = Fraction(pairing(total, d.rho_check2), 2)
    return DimensionIdentity(lhs, stabilizer_valuations(d, inst.lam, inst.mu, inst.w).total)


def prv_pairs(
    d: RootDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]
) -> List[Tuple[WeylElement, WeylElement]]:
    """Every w (with canonical v) such that ν = v(−λ−wμ); empty means (λ, μ, ν) is not a PRV triple."""
    lam, mu = _dominant_pair(d, lam, mu)
    if len(nu) != d.rank or not is_dominant(d, nu):
        raise UsageError("nu = {} is not a dominant weight of {}", tuple(nu), d.label)
    target = tuple(nu)
    pairs = []
    for w in weyl_group(d):
        x = _neg(_add(lam, w.apply(mu)))
        if dominant_vector(d, x) == target:
            pairs.append((w, dominant_representative(d, x)[1]))
    return pairs
