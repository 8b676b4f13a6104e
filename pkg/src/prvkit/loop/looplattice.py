"""Lattices in the affine Grassmannian of SL_m, through matrix representatives.

A point of G(𝒦)/G(𝒪) is a Laurent matrix g standing for the lattice g·𝒪^m.
Coweights of SL_m are written in coroot coordinates (c_1, ..., c_{m−1}),
c = Σ c_i α_i∨, so the coweight α∨ of SL_2 is (1,).
"""

import dataclasses
import functools
import itertools
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from prvkit.loop.laurent import LaurentMatrix, LaurentPoly, certified_valuations
from prvkit.utils.config import get_config
from prvkit.utils.logging import UsageError, debug
from prvkit.utils.types import CoweightVec


@dataclasses.dataclass(frozen=True)
class LatticePoint:
    rep: LaurentMatrix
    name: str = ""

    @property
    def size(self) -> int:
        return self.rep.size

    def __str__(self) -> str:
        return self.name or self.rep.to_text()


def torus_point(m: int, coroot_coords: Sequence[int]) -> LatticePoint:
    """[λ] = t^λ·[0] for a coweight λ of SL_m given in coroot coordinates."""
    if len(coroot_coords) != m - 1:
        raise UsageError("A coweight of SL_{} needs {} coroot coordinates, got {}", m, m - 1, len(coroot_coords))
    c = [0] + list(coroot_coords) + [0]
    exps = [c[i + 1] - c[i] for i in range(m)]
    return LatticePoint(LaurentMatrix.diagonal(exps), f"[{format_coweight(coroot_coords)}]")


def weight_point(m: int, dynkin: Sequence[int]) -> LatticePoint:
    """A GL_m lift of t^λ for a weight of type A_{m−1} given by Dynkin labels.

    Exponents a_i = ℓ_i + ... + ℓ_{m−1}, a_m = 0, so a_i − a_{i+1} = ℓ_i and
    the adjoint action matches t^λ.
    """
    if len(dynkin) != m - 1:
        raise UsageError("A weight of A_{} needs {} labels, got {}", m - 1, m - 1, len(dynkin))
    exps = [sum(dynkin[i:]) for i in range(m - 1)] + [0]
    return LatticePoint(LaurentMatrix.diagonal(exps), f"t^{tuple(dynkin)}")


def base_point(m: int) -> LatticePoint:
    return LatticePoint(LaurentMatrix.identity(m), "[0]")


def format_coweight(coroot_coords: Sequence[int]) -> str:
    if not any(coroot_coords):
        return "0"
    if len(coroot_coords) == 1:
        c = coroot_coords[0]
        return "α∨" if c == 1 else f"{c}α∨"
    return "+".join(f"{c}α{i + 1}∨" for i, c in enumerate(coroot_coords) if c)


def chevalley_distance(first: LatticePoint, second: LatticePoint) -> CoweightVec:
    """d(L1, L2): the dominant coweight with (L1, L2) in the G(𝒦)-orbit of ([0], [d])."""
    if first.size != second.size:
        raise UsageError("Points of different sizes {} and {}", first.size, second.size)
    g = first.rep.inverse() * second.rep
    # decreasing valuations are the diagonal exponents of a dominant t^λ
    a = sorted(certified_valuations(g), reverse=True)
    if sum(a) != 0:
        raise UsageError("Relative position has determinant valuation {}; not a pair of SL points", sum(a))
    return CoweightVec(tuple(itertools.accumulate(a[:-1])))


def convolution_membership(points: Sequence[LatticePoint], targets: Sequence[Sequence[int]]) -> bool:
    """Whether d(L_{i−1}, L_i) = λ_i for all i, cyclically with L_0 = L_s = [0]."""
    if len(points) != len(targets):
        raise UsageError("{} points but {} target coweights", len(points), len(targets))
    if not points:
        raise UsageError("Membership needs at least one point")
    if any(certified_valuations(points[-1].rep)):
        raise UsageError("The last point has to be the base point [0]")
    for i, (pt, target) in enumerate(zip(points, targets)):
        dist = chevalley_distance(points[i - 1], pt)
        debug("d(L{}, L{}) = {}, target {}", i, i + 1, dist, tuple(target))
        if dist != tuple(target):
            return False
    return True


def sl_basis(m: int) -> List[Tuple[str, LaurentMatrix]]:
    """E_ij above the diagonal, H_i = E_ii − E_{i+1,i+1}, E_ij below; e, h, f for m = 2."""
    def unit(entries):
        rows = [[0] * m for _ in range(m)]
        for (i, j), v in entries.items():
            rows[i][j] = v
        return LaurentMatrix(rows)

    upper = [(f"E{i + 1}{j + 1}", unit({(i, j): 1})) for i in range(m) for j in range(i + 1, m)]
    cartan = [(f"H{i + 1}", unit({(i, i): 1, (i + 1, i + 1): -1})) for i in range(m - 1)]
    lower = [(f"E{i + 1}{j + 1}", unit({(i, j): 1})) for i in range(m) for j in range(i)]
    if m == 2:
        return [("e", upper[0][1]), ("h", cartan[0][1]), ("f", lower[0][1])]
    return upper + cartan + lower


def _conjugates(group_elts: Sequence[LaurentMatrix]) -> List[List[LaurentMatrix]]:
    """g⁻¹ B g for every group element g and basis element B."""
    if not group_elts:
        raise UsageError("Need at least one group element")
    m = group_elts[0].size
    if any(g.size != m for g in group_elts):
        raise UsageError("Group elements of different sizes")
    if m < 2:
        raise UsageError("Stabilizers need SL_m with m ≥ 2, got m = {}", m)
    basis = [b for _, b in sl_basis(m)]
    return [[g.inverse() * b * g for b in basis] for g in group_elts]


def basis_valuations(group_elts: Sequence[LaurentMatrix]) -> Tuple[int, ...]:
    """For each basis element X of 𝔰𝔩_m, the least k ≥ 0 with t^k·X in the stabilizer algebra."""
    conj = _conjugates(group_elts)
    out = []
    for b in range(len(conj[0])):
        worst = 0
        for per_g in conj:
            vals = [e.valuation for row in per_g[b].entries for e in row if e]
            worst = max(worst, -min(vals, default=0))
        out.append(worst)
    return tuple(out)


def _stabilizer_rank(conj: List[List[LaurentMatrix]], truncation: int) -> int:
    """Rank of the map sending X ∈ 𝔰𝔩_m(𝒪/t^N) to the polar parts of all g⁻¹Xg."""
    nbasis = len(conj[0])
    m = conj[0][0].size
    rows = {}
    nrows = 0
    for per_g in conj:
        lowest = min(e.valuation for mat in per_g for row in mat.entries for e in row if e)
        for r, c in itertools.product(range(m), range(m)):
            for degree in range(lowest, 0):
                row = {}
                for b in range(nbasis):
                    entry: LaurentPoly = per_g[b].entries[r][c]
                    for k in range(truncation):
                        coeff = entry.coefficient(degree - k)
                        if coeff:
                            row[b * truncation + k] = QQ(coeff.numerator, coeff.denominator)
                if row:
                    rows[nrows] = row
                    nrows += 1
    if not rows:
        return 0
    return DomainMatrix(rows, (nrows, nbasis * truncation), QQ).rank()


@dataclasses.dataclass(frozen=True)
class StabilizerResult:
    truncation: int
    stab_dim_mod_tN: int
    orbit_dim: int
    stable: bool

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def default_truncation(group_elts: Sequence[LaurentMatrix]) -> int:
    """2 + the largest basis valuation; the configured default when nothing has a pole."""
    worst = max(basis_valuations(group_elts), default=0)
    return 2 + worst if worst else get_config().default_truncation


def stabilizer_intersection_dim(
    group_elts: Sequence[LaurentMatrix], truncation: Optional[int] = None
) -> StabilizerResult:
    """dim of 𝔰𝔩_m(𝒪) ∩ ⋂ Ad_g 𝔰𝔩_m(𝒪) modulo t^N, and the orbit dimension N·dim 𝔰𝔩_m minus that."""
    if truncation is None:
        truncation = default_truncation(group_elts)
    if truncation < 1:
        raise UsageError("Truncation order must be at least 1, got {}", truncation)
    conj = _conjugates(group_elts)
    nbasis = len(conj[0])

    def orbit(n: int) -> Tuple[int, int]:
        stab = n * nbasis - _stabilizer_rank(conj, n)
        return stab, n * nbasis - stab

    stab, orbit_dim = orbit(truncation)
    _, next_orbit = orbit(truncation + 1)
    return StabilizerResult(truncation, stab, orbit_dim, orbit_dim == next_orbit)


def _poly(text: str) -> LaurentPoly:
    return LaurentPoly.coerce(text)


@dataclasses.dataclass(frozen=True)
class Sl2Example:
    """SL_2 with λ = μ = ν = α∨: a point of the convolution variety that is not a torus translate."""
    t_alpha: LaurentMatrix
    y: LaurentMatrix
    z: LaurentMatrix
    a: LaurentMatrix
    b: LaurentMatrix
    c: LaurentMatrix
    product: LaurentMatrix
    points: Tuple[LatticePoint, ...]
    targets: Tuple[Tuple[int, ...], ...]
    valuations: Tuple[int, ...]
    orbit_dim: int


@functools.lru_cache(maxsize=None)
def sl2_counterexample() -> Sl2Example:
    t_alpha = LaurentMatrix.diagonal([1, -1])
    y = LaurentMatrix([[_poly("t"), 1], [0, _poly("t^-1")]])
    return Sl2Example(
        t_alpha=t_alpha,
        y=y,
        z=LaurentMatrix([[1, _poly("t")], [0, 1]]),
        a=t_alpha,
        b=LaurentMatrix([[0, 1], [-1, _poly("t")]]),
        c=LaurentMatrix([[1, 0], [_poly("t"), 1]]),
        product=LaurentMatrix([[_poly("-t"), 1], [-1, 0]]),
        points=(LatticePoint(t_alpha, "[α∨]"), LatticePoint(y, "ȳ"), base_point(2)),
        targets=((1,), (1,), (1,)),
        valuations=(2, 1, 0),
        orbit_dim=3,
    )


def verify_matrix_identities() -> bool:
    """y = z·t^α∨ = A·B·A·C and A·B·A·B·A = [[−t, 1], [−1, 0]], exactly; A·B·A moves [0] to ȳ."""
    ex = sl2_counterexample()
    aba = ex.a * ex.b * ex.a
    checks = [
        ex.z * ex.t_alpha == ex.y,
        aba * ex.c == ex.y,
        aba * ex.b * ex.a == ex.product,
        not any(certified_valuations(ex.y.inverse() * aba)),
        ex.t_alpha * ex.b == LaurentMatrix([[0, _poly("t")], [_poly("-t^-1"), 1]]),
    ]
    return all(checks)


def torus_translate_orbit_dim(m: int, lam_labels: Sequence[int], moved_labels: Sequence[int]) -> StabilizerResult:
    """Orbit dimension of (t^λ, t^{λ+wμ}) for weights of type A_{m−1} given by labels."""
    elts = [weight_point(m, lam_labels).rep, weight_point(m, moved_labels).rep]
    return stabilizer_intersection_dim(elts)

