"""Characters, weight multiplicities and tensor product multiplicities.

The recursions run on Dynkin labels, which only see the semisimple part of
a weight; lattice coordinates are recovered at the boundary through root
coefficients, so central and torus directions are carried exactly.

- Freudenthal's recursion gives dominant weight multiplicities.
- Klimyk's formula (weights of the smaller factor, reflected through the
  ρ-shifted action) gives tensor product decompositions.
- Kostant's partition-function sum and a character-product expansion serve
  as independent brute-force oracles.
"""

import collections
import functools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from prvkit.lie.rootdata import RootDatum, in_root_lattice, is_dominant, labels, weight_from_root_coefficients
from prvkit.lie.weylgrp import dominant_labels, dominant_vector, reflect_labels, weyl_group
from prvkit.utils.config import get_config
from prvkit.utils.logging import CapExceededError, UsageError
from prvkit.utils.types import CharacterMap, Labels, WeightVec

LabelCharacter = Dict[Labels, int]


def _require_dominant(d: RootDatum, *weights: Sequence[int]):
    for x in weights:
        if len(x) != d.rank:
            raise UsageError("Weight {} has length {}, expected rank {} of {}", tuple(x), len(x), d.rank, d.label)
        if not is_dominant(d, x):
            raise UsageError("Weight {} is not dominant for {}", tuple(x), d.label)


@functools.lru_cache(maxsize=None)
def _root_labels(d: RootDatum) -> Tuple[Tuple[int, ...], ...]:
    n = d.n_simple
    return tuple(
        tuple(sum(p.coefficients[i] * d.cartan[i][j] for i in range(n)) for j in range(n)) for p in d.positive_roots
    )


def label_difference_coefficients(d: RootDatum, upper: Sequence[int], lower: Sequence[int]) -> Tuple[Fraction, ...]:
    """Root coefficients n with upper − lower = Σ n_i α_i, on labels."""
    inv = d.cartan_inverse
    diff = [a - b for a, b in zip(upper, lower)]
    return tuple(sum((diff[j] * inv[j][i] for j in range(d.n_simple)), Fraction(0)) for i in range(d.n_simple))


def _lower_by_labels(d: RootDatum, top: Sequence[int], top_labels: Sequence[int], lab: Sequence[int]) -> WeightVec:
    coeffs = label_difference_coefficients(d, top_labels, lab)
    assert all(c.denominator == 1 for c in coeffs), (top_labels, lab)
    drop = weight_from_root_coefficients(d, [int(c) for c in coeffs])
    return WeightVec(tuple(a - b for a, b in zip(top, drop)))


@functools.lru_cache(maxsize=None)
def dominant_multiplicities(d: RootDatum, lam: Labels) -> Tuple[Tuple[Labels, int], ...]:
    """Freudenthal's recursion: dominant weights of V(λ) with their multiplicities, highest first."""
    n = d.n_simple
    rlabels = _root_labels(d)
    depth: Dict[Labels, Tuple[int, ...]] = {lam: (0,) * n}
    queue = [lam]
    idx = 0
    # every dominant weight below λ is reached through dominant weights, one positive root at a time
    while idx < len(queue):
        mu = queue[idx]
        idx += 1
        for p, bl in zip(d.positive_roots, rlabels):
            nu = Labels(tuple(a - b for a, b in zip(mu, bl)))
            if nu in depth or any(v < 0 for v in nu):
                continue
            depth[nu] = tuple(a + c for a, c in zip(depth[mu], p.coefficients))
            queue.append(nu)
    ordered = sorted(queue, key=lambda m: (sum(depth[m]), m))

    mult: Dict[Labels, int] = {lam: 1}
    for mu in ordered[1:]:
        nmu = depth[mu]
        lhs = sum(nmu[i] * d.half_lengths[i] * (lam[i] + mu[i] + 2) for i in range(n))
        rhs = 0
        for p, bl in zip(d.positive_roots, rlabels):
            pair = sum(c * v for c, v in zip(p.co_coefficients, mu))
            k = 1
            while all(a - k * c >= 0 for a, c in zip(nmu, p.coefficients)):
                shifted = tuple(v + k * b for v, b in zip(mu, bl))
                m = mult.get(dominant_labels(d, shifted)[0], 0)
                rhs += p.half_length * (pair + 2 * k) * m
                k += 1
        assert lhs > 0 and (2 * rhs) % lhs == 0, (d.label, lam, mu, lhs, rhs)
        if rhs:
            mult[mu] = 2 * rhs // lhs
    return tuple((mu, mult[mu]) for mu in ordered if mu in mult)


@functools.lru_cache(maxsize=None)
def label_orbit(d: RootDatum, dom: Labels) -> Tuple[Labels, ...]:
    """W-orbit of a dominant label vector, walking down through reflections at positive labels."""
    seen = {dom}
    order = [dom]
    idx = 0
    while idx < len(order):
        cur = order[idx]
        idx += 1
        for i, v in enumerate(cur):
            if v > 0:
                nxt = reflect_labels(d, cur, i)
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
    return tuple(order)


@functools.lru_cache(maxsize=None)
def label_character(d: RootDatum, lam: Labels) -> Tuple[Tuple[Labels, int], ...]:
    """All weights of V(λ) on labels, with multiplicities."""
    return tuple((w, m) for dom, m in dominant_multiplicities(d, lam) for w in label_orbit(d, dom))


def weight_multiplicity(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the weight μ in V(λ)."""
    _require_dominant(d, lam)
    if len(mu) != d.rank:
        raise UsageError("Weight {} has length {}, expected rank {}", tuple(mu), len(mu), d.rank)
    if not in_root_lattice(d, [a - b for a, b in zip(lam, mu)]):
        return 0
    dom = dominant_labels(d, labels(d, mu))[0]
    return dict(dominant_multiplicities(d, labels(d, lam))).get(dom, 0)


def character(d: RootDatum, lam: Sequence[int]) -> CharacterMap:
    """The full weight system of V(λ) in lattice coordinates."""
    _require_dominant(d, lam)
    top = labels(d, lam)
    return {_lower_by_labels(d, lam, top, w): m for w, m in label_character(d, top)}


def dim_irrep(d: RootDatum, lam: Sequence[int]) -> int:
    """Weyl's dimension formula."""
    _require_dominant(d, lam)
    return dim_from_labels(d, labels(d, lam))


def dim_from_labels(d: RootDatum, lab: Sequence[int]) -> int:
    num, den = 1, 1
    for p in d.positive_roots:
        num *= sum(c * (v + 1) for c, v in zip(p.co_coefficients, lab))
        den *= sum(p.co_coefficients)
    assert num % den == 0
    return num // den


@functools.lru_cache(maxsize=None)
def _partitions(d: RootDatum, target: Tuple[int, ...], idx: int) -> int:
    """Ways to write `target` (root coefficients) with positive roots idx, idx+1, ..."""
    if not any(target):
        return 1
    if idx == len(d.positive_roots):
        return 0
    total = _partitions(d, target, idx + 1)
    coeffs = d.positive_roots[idx].coefficients
    rest = tuple(a - c for a, c in zip(target, coeffs))
    if all(v >= 0 for v in rest):
        total += _partitions(d, rest, idx)
    return total


def kostant_partition(d: RootDatum, coeffs: Sequence[int]) -> int:
    """Kostant's partition function on simple-root coefficients."""
    if any(c < 0 for c in coeffs):
        return 0
    return _partitions(d, tuple(coeffs), 0)


def kostant_multiplicity(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Σ_w sgn(w) P(w(λ+ρ) − (μ+ρ)); brute-force oracle for `weight_multiplicity`."""
    _require_dominant(d, lam)
    if not in_root_lattice(d, [a - b for a, b in zip(lam, mu)]):
        return 0
    shifted = tuple(v + 1 for v in labels(d, lam))
    target = tuple(v + 1 for v in labels(d, mu))
    total = 0
    for w in weyl_group(d):
        image = shifted
        for i in reversed(w.word):
            image = reflect_labels(d, image, i - 1)
        coeffs = label_difference_coefficients(d, image, target)
        if all(c.denominator == 1 and c >= 0 for c in coeffs):
            total += (-1) ** w.length * kostant_partition(d, [int(c) for c in coeffs])
    return total


@functools.lru_cache(maxsize=None)
def decompose_labels(d: RootDatum, lam: Labels, mu: Labels) -> Tuple[Tuple[Labels, int], ...]:
    """Klimyk's formula on labels: V(λ)⊗V(μ) = Σ c_ν V(ν), highest ν first."""
    # iterate over the weights of the smaller factor
    if dim_from_labels(d, mu) > dim_from_labels(d, lam):
        lam, mu = mu, lam
    acc: Dict[Labels, int] = collections.defaultdict(int)
    for wt, m in label_character(d, mu):
        dom, steps = dominant_labels(d, tuple(a + b + 1 for a, b in zip(lam, wt)))
        if any(v == 0 for v in dom):
            continue
        acc[Labels(tuple(v - 1 for v in dom))] += m if steps % 2 == 0 else -m
    assert all(v >= 0 for v in acc.values()), (d.label, lam, mu, dict(acc))
    top = tuple(a + b for a, b in zip(lam, mu))
    # highest first: by depth below λ+μ
    items = [(nu, c) for nu, c in acc.items() if c]
    items.sort(key=lambda item: (sum(label_difference_coefficients(d, top, item[0])), item[0]))
    return tuple(items)


def decompose(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Dict[WeightVec, int]:
    """V(λ)⊗V(μ) as a map from highest weights ν (lattice coordinates) to multiplicities."""
    _require_dominant(d, lam, mu)
    top = WeightVec(tuple(a + b for a, b in zip(lam, mu)))
    top_labels = labels(d, top)
    return {_lower_by_labels(d, top, top_labels, nu): c for nu, c in decompose_labels(d, labels(d, lam), labels(d, mu))}


def tensor_multiplicity(d: RootDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of V(ν) in V(λ)⊗V(μ)."""
    _require_dominant(d, lam, mu, nu)
    if not in_root_lattice(d, [a + b - c for a, b, c in zip(lam, mu, nu)]):
        return 0
    return dict(decompose_labels(d, labels(d, lam), labels(d, mu))).get(labels(d, nu), 0)


def dual_weight(d: RootDatum, lam: Sequence[int]) -> WeightVec:
    """−w₀λ, the highest weight of V(λ)*."""
    return WeightVec(dominant_vector(d, [-v for v in lam]))


def dual_labels(d: RootDatum, lab: Sequence[int]) -> Labels:
    return dominant_labels(d, [-v for v in lab])[0]


def invariant_dim(d: RootDatum, *weights: Sequence[int]) -> int:
    """dim (V(λ₁)⊗···⊗V(λ_s))^G."""
    if not weights:
        raise UsageError("invariant_dim needs at least one weight")
    _require_dominant(d, *weights)
    total = [sum(col) for col in zip(*weights)]
    if not in_root_lattice(d, total):
        return 0
    return label_invariant_dim(d, tuple(labels(d, x) for x in weights))


def label_invariant_dim(d: RootDatum, weight_labels: Sequence[Labels]) -> int:
    """Invariant dimension on labels; the caller has already checked the root-lattice condition."""
    if len(weight_labels) == 1:
        return int(not any(weight_labels[0]))
    target = dual_labels(d, weight_labels[-1])
    if len(weight_labels) == 2:
        return int(weight_labels[0] == target)
    acc: Dict[Labels, int] = {Labels(tuple(weight_labels[0])): 1}
    for lab in weight_labels[1:-1]:
        nxt: Dict[Labels, int] = collections.defaultdict(int)
        for nu, c in acc.items():
            for rho, k in decompose_labels(d, nu, Labels(tuple(lab))):
                nxt[rho] += c * k
        acc = nxt
    return acc.get(target, 0)


def character_product_oracle(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Dict[WeightVec, int]:
    """Decompose V(λ)⊗V(μ) by multiplying characters and stripping highest weights."""
    _require_dominant(d, lam, mu)
    cap = get_config().oracle_cap
    size = dim_irrep(d, lam) * dim_irrep(d, mu)
    if size > cap:
        raise CapExceededError("Character product of size {} exceeds the oracle cap {}", size, cap)
    residual: Dict[WeightVec, int] = collections.defaultdict(int)
    for x, a in character(d, lam).items():
        for y, b in character(d, mu).items():
            residual[WeightVec(tuple(p + q for p, q in zip(x, y)))] += a * b
    result: Dict[WeightVec, int] = {}
    while residual:
        # a weight of maximal height in a W-invariant character is dominant
        top = max(residual, key=lambda x: (sum(p * q for p, q in zip(x, d.rho_check2)), x))
        c = residual[top]
        assert c > 0 and is_dominant(d, top), (top, c)
        result[top] = c
        for x, m in character(d, top).items():
            residual[x] -= c * m
            assert residual[x] >= 0, (x, residual[x])
            if residual[x] == 0:
                del residual[x]
    return result


def character_to_json(ch: Dict[WeightVec, int]) -> List[dict]:
    return [{"weight": list(x), "mult": m} for x, m in sorted(ch.items())]
