"""Root data for reductive groups: lattices, roots, coroots and derived constants.

A `RootDatum` fixes a basis of the character lattice X* ("lattice
coordinates"). Weights are integer row vectors in that basis; coweights are
integer row vectors in the dual basis of X_*, so the pairing is the plain dot
product. Simple roots are numbered as in Bourbaki for every type; in
particular α1 is the long simple root of B2.

Two lattice bases are built from type labels:

- simply connected: basis = fundamental weights, so a weight's coordinates
  are its Dynkin labels;
- adjoint: basis = simple roots, so a weight's coordinates are its root
  coefficients.

Torus factors contribute extra coordinates with no roots. Everything else
(Cartan matrix, positive roots, 2ρ, 2ρ∨, the invariant form) is derived from
the two matrices of simple roots and simple coroots, which is also how
explicit lattice data and dual data are handled.
"""

import dataclasses
import functools
import itertools
import math
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from prvkit.utils.config import get_config
from prvkit.utils.logging import UsageError, debug
from prvkit.utils.types import (
    ADJOINT, EXPLICIT, SIMPLY_CONNECTED, SUPPORTED_FAMILIES, TORUS, TORUS_LETTER,
    CoweightVec, IntMatrix, Labels, WeightVec
)

FactorLabel = Tuple[str, int]

_TOKEN_RE = re.compile(r"^([A-GT])(\d+)$")


@dataclasses.dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its coroot, both tagged with simple (co)root coefficients."""
    root: WeightVec
    coroot: CoweightVec
    coefficients: Tuple[int, ...]
    co_coefficients: Tuple[int, ...]
    # (β, β) / 2 for the invariant form normalized so short roots have squared length 2
    half_length: int

    @property
    def height(self) -> int:
        return sum(self.coefficients)


@dataclasses.dataclass(frozen=True)
class RootDatum:
    """Immutable root datum; the single source of truth for one group."""
    rank: int
    cartan_label: Tuple[FactorLabel, ...]
    torus_rank: int
    form: str
    simple_roots: IntMatrix
    simple_coroots: IntMatrix
    cartan: IntMatrix
    half_lengths: Tuple[int, ...]
    positive_roots: Tuple[PositiveRoot, ...]
    rho2: WeightVec
    rho_check2: CoweightVec
    weyl_order: int

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    @property
    def label(self) -> str:
        tokens = [f"{letter}{n}" for letter, n in self.cartan_label]
        if self.torus_rank:
            tokens.append(f"{TORUS_LETTER}{self.torus_rank}")
        return "x".join(tokens) if tokens else f"{TORUS_LETTER}0"

    @property
    def positive_coroots(self) -> Tuple[CoweightVec, ...]:
        return tuple(p.coroot for p in self.positive_roots)

    @property
    def roots(self) -> Tuple[WeightVec, ...]:
        pos = [p.root for p in self.positive_roots]
        return tuple(pos + [WeightVec(tuple(-c for c in r)) for r in pos])

    @property
    def coroots(self) -> Tuple[CoweightVec, ...]:
        pos = [p.coroot for p in self.positive_roots]
        return tuple(pos + [CoweightVec(tuple(-c for c in r)) for r in pos])

    @property
    def rho(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.rho2)

    @property
    def rho_check(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.rho_check2)

    @functools.cached_property
    def cartan_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return rational_inverse(self.cartan)

    @functools.cached_property
    def root_index(self) -> Dict[WeightVec, int]:
        """Map every root (lattice coordinates) to +k or -k for the k-th positive root, 1-based."""
        index: Dict[WeightVec, int] = {}
        for k, p in enumerate(self.positive_roots, start=1):
            index[p.root] = k
            index[WeightVec(tuple(-c for c in p.root))] = -k
        return index

    def __repr__(self) -> str:
        return f"RootDatum({self.label}, {self.form}, rank={self.rank})"


def rational_inverse(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Exact inverse of a square integer matrix."""
    if not rows:
        return ()
    inv = sympy.Matrix([list(r) for r in rows]).inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols))
        for i in range(inv.rows)
    )


def pairing(x: Sequence, y: Sequence):
    """Pair a weight with a coweight; exact for integer and Fraction entries."""
    if len(x) != len(y):
        raise UsageError("Pairing of vectors from different data: lengths {} and {}", len(x), len(y))
    return sum(a * b for a, b in zip(x, y))


def labels(d: RootDatum, x: Sequence[int]) -> Labels:
    """Dynkin labels: pairings of a weight with the simple coroots."""
    return Labels(tuple(pairing(x, c) for c in d.simple_coroots))


def colabels(d: RootDatum, y: Sequence[int]) -> Labels:
    """Pairings of a coweight with the simple roots."""
    return Labels(tuple(pairing(r, y) for r in d.simple_roots))


def is_dominant(d: RootDatum, x: Sequence[int]) -> bool:
    return all(c >= 0 for c in labels(d, x))


def rho_pairing(d: RootDatum, y: Sequence[int]) -> Fraction:
    """⟨ρ, y⟩ for a coweight y, as an exact rational."""
    return Fraction(pairing(d.rho2, y), 2)


def rho_check_pairing(d: RootDatum, x: Sequence[int]) -> Fraction:
    """⟨x, ρ∨⟩ for a weight x, as an exact rational."""
    return Fraction(pairing(x, d.rho_check2), 2)


def symmetric_form(d: RootDatum, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """W-invariant form on X*⊗Q, degenerate on the central directions.

    Short roots have squared length 2; the form only sees Dynkin labels.
    """
    lx, ly = labels(d, x), labels(d, y)
    inv = d.cartan_inverse
    # (ω_i, ω_j) = (A^-1)_{ji} d_i with A_ij = <α_i, α_j∨>
    return sum(
        (lx[i] * ly[j] * inv[j][i] * d.half_lengths[i] for i in range(d.n_simple) for j in range(d.n_simple)),
        Fraction(0),
    )


def root_coefficients(d: RootDatum, x: Sequence[int]) -> Tuple[Tuple[Fraction, ...], bool]:
    """Coefficients of x's semisimple part in the simple roots, and whether x lies in their span."""
    lx = labels(d, x)
    inv = d.cartan_inverse
    coeffs = tuple(sum((lx[j] * inv[j][i] for j in range(d.n_simple)), Fraction(0)) for i in range(d.n_simple))
    rebuilt = [sum((coeffs[i] * d.simple_roots[i][k] for i in range(d.n_simple)), Fraction(0)) for k in range(d.rank)]
    return coeffs, all(rebuilt[k] == x[k] for k in range(d.rank))


def in_root_lattice(d: RootDatum, x: Sequence[int]) -> bool:
    coeffs, in_span = root_coefficients(d, x)
    return in_span and all(c.denominator == 1 for c in coeffs)


def weight_from_labels(d: RootDatum, dynkin: Sequence[int], torus: Sequence[int] = ()) -> WeightVec:
    """Lattice coordinates of the weight with the given Dynkin labels and torus coordinates."""
    if len(dynkin) != d.n_simple:
        raise UsageError("Expected {} Dynkin labels for {}, got {}", d.n_simple, d.label, len(dynkin))
    if len(torus) != d.torus_rank:
        raise UsageError("Expected {} torus coordinates for {}, got {}", d.torus_rank, d.label, len(torus))
    if d.form == EXPLICIT and d.torus_rank:
        raise UsageError("Fundamental coordinates need a split datum; give lattice coordinates for {}", d.label)
    n = d.n_simple
    # Split data keep the semisimple coordinates first and the torus coordinates last.
    block = [list(r[:n]) for r in d.simple_coroots]
    semisimple = list(sympy.Matrix(block).inv() * sympy.Matrix(list(dynkin))) if n else []
    if any(not v.is_integer for v in semisimple):
        raise UsageError("Labels {} are not integral in the {} lattice of {}", tuple(dynkin), d.form, d.label)
    return WeightVec(tuple(int(v) for v in semisimple) + tuple(int(t) for t in torus))


def weight_from_root_coefficients(d: RootDatum, coeffs: Sequence[int]) -> WeightVec:
    """Σ c_i α_i in lattice coordinates."""
    if len(coeffs) != d.n_simple:
        raise UsageError("Expected {} root coefficients for {}, got {}", d.n_simple, d.label, len(coeffs))
    return WeightVec(tuple(sum(c * r[k] for c, r in zip(coeffs, d.simple_roots)) for k in range(d.rank)))


# Ambient (Bourbaki) realizations of the simple roots of each simple type.
def _e(n: int, *pairs) -> List[Fraction]:
    v = [Fraction(0)] * n
    for idx, c in pairs:
        v[idx] += Fraction(c)
    return v


def _ambient_simple_roots(letter: str, n: int) -> List[List[Fraction]]:
    if letter == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if letter == "B":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 1))]
    if letter == "C":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 2))]
    if letter == "D":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 2, 1), (n - 1, 1))]
    if letter == "E":
        h = Fraction(1, 2)
        return [
            _e(8, (0, h), (7, h), *[(k, -h) for k in range(1, 7)]),
            _e(8, (0, 1), (1, 1)),
            _e(8, (1, 1), (0, -1)),
            _e(8, (2, 1), (1, -1)),
            _e(8, (3, 1), (2, -1)),
            _e(8, (4, 1), (3, -1)),
        ]
    if letter == "F":
        h = Fraction(1, 2)
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)), _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if letter == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise UsageError("Unsupported type {}{}", letter, n)


def _check_factor(letter: str, n: int):
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
    exact = {"E": (6,), "F": (4,), "G": (2,)}
    if letter not in SUPPORTED_FAMILIES or n < minimum[letter] or (letter in exact and n not in exact[letter]):
        raise UsageError("Unsupported type {}{}", letter, n)
    if n > get_config().max_rank:
        raise UsageError("Type {}{} exceeds the rank cap {}", letter, n, get_config().max_rank)


@functools.lru_cache(maxsize=None)
def cartan_matrix(letter: str, n: int) -> IntMatrix:
    """Cartan matrix with entries a_ij = <α_i, α_j∨>, Bourbaki numbering."""
    _check_factor(letter, n)
    simple = _ambient_simple_roots(letter, n)

    def dot(u, v):
        return sum((a * b for a, b in zip(u, v)), Fraction(0))

    return tuple(tuple(int(2 * dot(a, b) / dot(b, b)) for b in simple) for a in simple)


def weyl_group_order(letter: str, n: int) -> int:
    if letter == "A":
        return math.factorial(n + 1)
    if letter in "BC":
        return 2**n * math.factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("F", 4): 1152, ("G", 2): 12}[(letter, n)]


def expected_positive_roots(letter: str, n: int) -> int:
    if letter == "A":
        return n * (n + 1) // 2
    if letter in "BC":
        return n * n
    if letter == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("F", 4): 24, ("G", 2): 6}[(letter, n)]


def parse_label(label: str) -> Tuple[Tuple[FactorLabel, ...], int]:
    """Parse "A2", "B3xT1", "T2" into simple factors and a torus rank."""
    factors: List[FactorLabel] = []
    torus_rank = 0
    if not label:
        raise UsageError("Empty type label")
    for token in label.strip().split("x"):
        m = _TOKEN_RE.match(token)
        if not m:
            raise UsageError("Unsupported type string {!r}", label)
        letter, n = m.group(1), int(m.group(2))
        if letter == TORUS_LETTER:
            if n > get_config().max_rank:
                raise UsageError("Torus rank {} exceeds the rank cap {}", n, get_config().max_rank)
            torus_rank += n
            continue
        if n == 0:
            raise UsageError("Rank 0 with non-torus label {!r}", label)
        _check_factor(letter, n)
        factors.append((letter, n))
    if not factors and torus_rank == 0:
        raise UsageError("Rank 0 with non-torus label {!r}", label)
    return tuple(factors), torus_rank


def _block_diag(blocks: Sequence[IntMatrix], extra: int) -> List[List[int]]:
    size = sum(len(b) for b in blocks) + extra
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[offset + i][offset + j] = v
        offset += len(b)
    for k in range(offset, size):
        out[k][k] = 1
    return out


@functools.lru_cache(maxsize=None)
def build_root_datum(label: str, form: str = SIMPLY_CONNECTED) -> RootDatum:
    """Build the root datum of a type label in simply connected, adjoint or torus form."""
    factors, torus_rank = parse_label(label)
    if form == TORUS and factors:
        raise UsageError("Form torus needs a pure torus label, got {!r}", label)
    if form not in (SIMPLY_CONNECTED, ADJOINT, TORUS):
        raise UsageError("Unsupported form {!r}; explicit data goes through root_datum_from_json", form)
    cartans = [cartan_matrix(letter, n) for letter, n in factors]
    n_simple = sum(n for _, n in factors)
    rank = n_simple + torus_rank
    if form == ADJOINT:
        roots_blocks = [tuple(tuple(int(i == j) for j in range(len(c))) for i in range(len(c))) for c in cartans]
        coroot_blocks = [tuple(tuple(c[k][j] for k in range(len(c))) for j in range(len(c))) for c in cartans]
    else:
        roots_blocks = cartans
        coroot_blocks = [tuple(tuple(int(i == j) for j in range(len(c))) for i in range(len(c))) for c in cartans]
    simple_roots = _block_diag(roots_blocks, torus_rank)[:n_simple]
    simple_coroots = _block_diag(coroot_blocks, torus_rank)[:n_simple]
    d = _assemble(rank, simple_roots, simple_coroots, form, factors, torus_rank)
    debug("Built root datum {} ({})", d.label, form)
    return d


def root_datum_from_json(doc: dict) -> RootDatum:
    """Explicit lattice data: {"rank": r, "simple_roots": [[...]], "simple_coroots": [[...]]}."""
    try:
        rank = int(doc["rank"])
        simple_roots = [[int(v) for v in row] for row in doc["simple_roots"]]
        simple_coroots = [[int(v) for v in row] for row in doc["simple_coroots"]]
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError("Malformed explicit root datum: {}", e)
    if len(simple_roots) != len(simple_coroots):
        raise UsageError(
            "Explicit datum has {} simple roots but {} simple coroots", len(simple_roots), len(simple_coroots)
        )
    if any(len(row) != rank for row in simple_roots + simple_coroots):
        raise UsageError("Explicit datum rows must have length rank={}", rank)
    if simple_roots and sympy.Matrix(simple_roots).rank() != len(simple_roots):
        raise UsageError("Explicit simple roots are linearly dependent")
    return _assemble(rank, simple_roots, simple_coroots, EXPLICIT, None, rank - len(simple_roots))


def reorder(d: RootDatum, perm: Sequence[int]) -> RootDatum:
    """Renumber the simple roots: new α_{k+1} is old α_{perm[k]} (1-based entries)."""
    if sorted(perm) != list(range(1, d.n_simple + 1)):
        raise UsageError("Not a permutation of 1..{}: {}", d.n_simple, tuple(perm))
    return _assemble(
        d.rank,
        [d.simple_roots[p - 1] for p in perm],
        [d.simple_coroots[p - 1] for p in perm],
        EXPLICIT, None, d.torus_rank,
    )


@functools.lru_cache(maxsize=None)
def dual_datum(d: RootDatum) -> RootDatum:
    """Langlands dual: roots and coroots swap, the Cartan matrix transposes."""
    dual_form = {SIMPLY_CONNECTED: ADJOINT, ADJOINT: SIMPLY_CONNECTED}.get(d.form, d.form)
    return _assemble(d.rank, d.simple_coroots, d.simple_roots, dual_form, None, d.torus_rank)


def _symmetrizer(cartan: IntMatrix) -> Tuple[int, ...]:
    """Half squared lengths d_i with a_ij d_j = a_ji d_i, shortest root in each component at 1."""
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component, queue = [start], [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if cartan[i][j] == 0 or i == j:
                    continue
                if cartan[j][i] == 0:
                    raise UsageError("Cartan matrix is not symmetrizable")
                dj = d[i] * cartan[j][i] / cartan[i][j]  # type: ignore
                if d[j] is None:
                    d[j] = dj
                    component.append(j)
                    queue.append(j)
                elif d[j] != dj:
                    raise UsageError("Cartan matrix is not symmetrizable")
        low = min(d[k] for k in component)  # type: ignore
        for k in component:
            d[k] = d[k] / low  # type: ignore
    if any(v.denominator != 1 for v in d):  # type: ignore
        raise UsageError("Root lengths are not commensurable")
    return tuple(int(v) for v in d)  # type: ignore


def _positive_root_coefficients(cartan: IntMatrix) -> List[Tuple[int, ...]]:
    """Positive roots in simple-root coefficients, by increasing height (root strings)."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = list(simple)
    seen = set(found)
    idx = 0
    while idx < len(found):
        beta = found[idx]
        idx += 1
        for i in range(n):
            # p: how far the α_i-string extends below β
            p = 0
            while True:
                lower = tuple(c - (p + 1) * int(k == i) for k, c in enumerate(beta))
                if lower not in seen:
                    break
                p += 1
            pair = sum(beta[k] * cartan[k][i] for k in range(n))
            if p - pair > 0:
                higher = tuple(c + int(k == i) for k, c in enumerate(beta))
                if higher not in seen:
                    seen.add(higher)
                    found.append(higher)
        if len(found) > 200:
            raise UsageError("Cartan matrix is not of finite type")
    return found


def _components(cartan: IntMatrix) -> List[List[int]]:
    n = len(cartan)
    comp: List[List[int]] = []
    seen = set()
    for s in range(n):
        if s in seen:
            continue
        block, queue = [], [s]
        seen.add(s)
        while queue:
            i = queue.pop()
            block.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    queue.append(j)
        comp.append(sorted(block))
    return comp


def _identify(cartan: IntMatrix) -> Tuple[FactorLabel, ...]:
    """Name each connected component of a Cartan matrix; components kept in index order."""
    factors = []
    for block in _components(cartan):
        k = len(block)
        sub = [[cartan[i][j] for j in block] for i in block]
        candidates = []
        for letter in SUPPORTED_FAMILIES:
            try:
                candidates.append((letter, cartan_matrix(letter, k)))
            except UsageError:
                continue
        match = None
        # Bourbaki numbering first, so C2 is never reported as a renumbered B2
        for letter, ref in candidates:
            if [list(r) for r in ref] == sub:
                match = (letter, k)
                break
        for letter, ref in candidates:
            if match:
                break
            for perm in itertools.permutations(range(k)):
                if all(sub[perm[i]][perm[j]] == ref[i][j] for i in range(k) for j in range(k)):
                    match = (letter, k)
                    break
        if match is None:
            raise UsageError("Cartan matrix component of size {} is not of supported finite type", k)
        factors.append(match)
    return tuple(factors)


def _assemble(
    rank: int,
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
    form: str,
    factors: Optional[Tuple[FactorLabel, ...]],
    torus_rank: int,
) -> RootDatum:
    roots_m: IntMatrix = tuple(tuple(r) for r in simple_roots)
    coroots_m: IntMatrix = tuple(tuple(r) for r in simple_coroots)
    n = len(roots_m)
    cartan: IntMatrix = tuple(tuple(pairing(a, c) for c in coroots_m) for a in roots_m)
    for i in range(n):
        if cartan[i][i] != 2 or any(cartan[i][j] > 0 for j in range(n) if j != i):
            raise UsageError("Pairing of simple roots and coroots is not a Cartan matrix: {}", cartan)
    if factors is None:
        factors = _identify(cartan)
    half = _symmetrizer(cartan)

    positive = []
    for coeffs in _positive_root_coefficients(cartan):
        # (β,β)/2 = (Σ c_i c_j a_ij d_j) / 2
        hl = sum(coeffs[i] * coeffs[j] * cartan[i][j] * half[j] for i in range(n) for j in range(n)) // 2
        co = tuple(coeffs[k] * half[k] // hl for k in range(n))
        assert all(coeffs[k] * half[k] % hl == 0 for k in range(n))
        root = WeightVec(tuple(sum(c * roots_m[i][k] for i, c in enumerate(coeffs)) for k in range(rank)))
        coroot = CoweightVec(tuple(sum(c * coroots_m[i][k] for i, c in enumerate(co)) for k in range(rank)))
        positive.append(PositiveRoot(root, coroot, coeffs, co, hl))

    expected = sum(expected_positive_roots(letter, k) for letter, k in factors)
    assert len(positive) == expected, (len(positive), expected)
    rho2 = WeightVec(tuple(sum(p.root[k] for p in positive) for k in range(rank)))
    rho_check2 = CoweightVec(tuple(sum(p.coroot[k] for p in positive) for k in range(rank)))
    # <ρ, α_i∨> = 1, checked on the doubled vector
    assert all(pairing(rho2, c) == 2 for c in coroots_m)
    assert all(pairing(r, rho_check2) == 2 for r in roots_m)

    return RootDatum(
        rank=rank,
        cartan_label=factors,
        torus_rank=torus_rank,
        form=form,
        simple_roots=roots_m,
        simple_coroots=coroots_m,
        cartan=cartan,
        half_lengths=half,
        positive_roots=tuple(positive),
        rho2=rho2,
        rho_check2=rho_check2,
        weyl_order=math.prod(weyl_group_order(letter, k) for letter, k in factors),
    )
