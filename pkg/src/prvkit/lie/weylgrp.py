"""Weyl groups of root data, acting on weights and coweights.

An element w is stored as two integer matrices acting on row vectors: the
action on X* (x ↦ x·action) and the contragredient action on X_*, so that
pairings are preserved. The word (j1, ..., jk) stands for s_{j1}···s_{jk};
the rightmost reflection acts first. Every element handed out by a
`WeylGroup` carries its lexicographically smallest reduced word.
"""

import dataclasses
import functools
import re
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from prvkit.lie.rootdata import RootDatum, colabels, labels
from prvkit.utils.config import get_config
from prvkit.utils.logging import CapExceededError, UsageError, debug
from prvkit.utils.types import CoweightVec, IntMatrix, Labels, WeightVec, Word

_WORD_RE = re.compile(r"^(s\d+)+$")


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(b[0]) if b else 0
    return tuple(tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in range(n)) for row in a)


def _vecmul(x: Sequence[int], m: IntMatrix) -> Tuple[int, ...]:
    return tuple(sum(x[k] * m[k][j] for k in range(len(m))) for j in range(len(m)))


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclasses.dataclass(frozen=True)
class WeylElement:
    """A Weyl group element; equality and hashing by the lattice action only."""
    action: IntMatrix
    coaction: IntMatrix
    word: Word = dataclasses.field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, x: Sequence[int]) -> WeightVec:
        return WeightVec(_vecmul(x, self.action))

    def coapply(self, y: Sequence[int]) -> CoweightVec:
        return CoweightVec(_vecmul(y, self.coaction))

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"WeylElement({format_word(self.word)})"


@dataclasses.dataclass(frozen=True)
class Subgroup:
    """A subgroup of W; `generators` lists simple reflection indices for parabolic subgroups."""
    elements: FrozenSet[WeylElement]
    generators: Optional[Tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self.elements


def parse_word(text: str) -> Word:
    """Parse "s1s2", "s1 s2" or "e" into a tuple of 1-based indices."""
    compact = "".join(text.split()).replace("*", "")
    if compact in ("", "e"):
        return Word(())
    if not _WORD_RE.match(compact):
        raise UsageError("Malformed Weyl word {!r}; expected something like 's1 s2' or 'e'", text)
    return Word(tuple(int(tok) for tok in re.findall(r"s(\d+)", compact)))


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def _word_key(w: "WeylElement") -> Tuple[int, Word]:
    return w.length, w.word


def simple_reflection_matrices(d: RootDatum) -> Tuple[List[IntMatrix], List[IntMatrix]]:
    """S_i = I − c_iᵀ a_i on weights and T_i = I − a_iᵀ c_i on coweights."""
    r = d.rank
    acts, coacts = [], []
    for a, c in zip(d.simple_roots, d.simple_coroots):
        acts.append(tuple(tuple(int(k == j) - c[k] * a[j] for j in range(r)) for k in range(r)))
        coacts.append(tuple(tuple(int(k == j) - a[k] * c[j] for j in range(r)) for k in range(r)))
    return acts, coacts


class WeylGroup:
    """The full table of W for one root datum, ordered by (length, word)."""

    def __init__(self, d: RootDatum):
        cap = get_config().weyl_cap
        if d.weyl_order > cap:
            raise CapExceededError("|W| = {} for {} exceeds the Weyl-group cap {}", d.weyl_order, d.label, cap)
        self.datum = d
        self._acts, self._coacts = simple_reflection_matrices(d)
        ident = WeylElement(_identity(d.rank), _identity(d.rank), Word(()))
        self.elements: List[WeylElement] = [ident]
        self._by_action: Dict[IntMatrix, WeylElement] = {ident.action: ident}
        # Breadth first, extending words on the right with ascending indices:
        # the first word to reach an element is its lexicographically least reduced word.
        idx = 0
        while idx < len(self.elements):
            w = self.elements[idx]
            idx += 1
            for i in range(d.n_simple):
                action = _matmul(self._acts[i], w.action)
                if action in self._by_action:
                    continue
                elt = WeylElement(action, _matmul(self._coacts[i], w.coaction), Word(w.word + (i + 1,)))
                self._by_action[action] = elt
                self.elements.append(elt)
        assert len(self.elements) == d.weyl_order, (len(self.elements), d.weyl_order)
        debug("Enumerated W({}) with {} elements", d.label, len(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, WeylElement) and w.action in self._by_action

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def canonical(self, action: IntMatrix) -> WeylElement:
        return self._by_action[action]

    def from_word(self, word: Sequence[int]) -> WeylElement:
        action = self.identity.action
        for i in word:
            if not 1 <= i <= self.datum.n_simple:
                raise UsageError("Reflection s{} out of range for {} ({} simple roots)", i, self.datum.label,
                                 self.datum.n_simple)
            action = _matmul(self._acts[i - 1], action)
        return self._by_action[action]

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """The product a·b, with b acting first."""
        return self._by_action[_matmul(b.action, a.action)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.word)))

    def simple_reflection(self, i: int) -> WeylElement:
        return self.from_word((i,))


@functools.lru_cache(maxsize=None)
def weyl_group(d: RootDatum) -> WeylGroup:
    return WeylGroup(d)


def enumerate_elements(d: RootDatum) -> List[WeylElement]:
    """All of W, sorted by length and then by reduced word."""
    return list(weyl_group(d).elements)


def element_from_word(d: RootDatum, word) -> WeylElement:
    if isinstance(word, str):
        word = parse_word(word)
    return weyl_group(d).from_word(word)


def longest_element(d: RootDatum) -> WeylElement:
    return weyl_group(d).longest


def reflect_labels(d: RootDatum, lab: Sequence[int], i: int) -> Labels:
    """s_i on Dynkin labels (0-based i): ℓ − ℓ_i · (labels of α_i)."""
    li = lab[i]
    row = d.cartan[i]
    return Labels(tuple(v - li * row[j] for j, v in enumerate(lab)))


def dominant_labels(d: RootDatum, lab: Sequence[int]) -> Tuple[Labels, int]:
    """Dominant W-translate of a label vector and the length of the shortest element reaching it."""
    cur = tuple(lab)
    steps = 0
    while True:
        for i, v in enumerate(cur):
            if v < 0:
                cur = reflect_labels(d, cur, i)
                steps += 1
                break
        else:
            return Labels(cur), steps


def _reflect(d: RootDatum, x: Sequence[int], i: int, coweight: bool) -> Tuple[int, ...]:
    if coweight:
        k = sum(a * b for a, b in zip(d.simple_roots[i], x))
        return tuple(v - k * c for v, c in zip(x, d.simple_coroots[i]))
    k = sum(a * b for a, b in zip(x, d.simple_coroots[i]))
    return tuple(v - k * a for v, a in zip(x, d.simple_roots[i]))


def _dominate(d: RootDatum, x: Sequence[int], coweight: bool) -> Tuple[Tuple[int, ...], List[int]]:
    pair = colabels if coweight else labels
    cur = tuple(x)
    word: List[int] = []
    while True:
        lab = pair(d, cur)
        negative = next((i for i, v in enumerate(lab) if v < 0), None)
        if negative is None:
            return cur, word
        cur = _reflect(d, cur, negative, coweight)
        word.append(negative + 1)


def dominant_vector(d: RootDatum, x: Sequence[int], coweight: bool = False) -> Tuple[int, ...]:
    """The dominant W-translate of x, without touching the group table."""
    return _dominate(d, x, coweight)[0]


def dominant_representative(d: RootDatum, x: Sequence[int], coweight: bool = False):
    """Return (dom, v) with dom = v·x dominant and v the unique shortest such element."""
    cur, word = _dominate(d, x, coweight)
    # reflections were applied left to right, so v = s_{last} ... s_{first}
    v = weyl_group(d).from_word(tuple(reversed(word)))
    dom = CoweightVec(cur) if coweight else WeightVec(cur)
    return dom, v


def stabilizer(d: RootDatum, x: Sequence[int], coweight: bool = False) -> Subgroup:
    """{w : w·x = x}."""
    x = tuple(x)
    if coweight:
        members = frozenset(w for w in weyl_group(d) if w.coapply(x) == x)
    else:
        members = frozenset(w for w in weyl_group(d) if w.apply(x) == x)
    return Subgroup(members)


def parabolic_subgroup(d: RootDatum, indices: Iterable[int]) -> Subgroup:
    """Subgroup generated by the simple reflections s_i, i in indices (1-based)."""
    allowed: Set[int] = set(indices)
    if any(not 1 <= i <= d.n_simple for i in allowed):
        raise UsageError("Parabolic generators {} out of range for {}", sorted(allowed), d.label)
    # elements of a standard parabolic subgroup are exactly those with a reduced word in its generators
    members = frozenset(w for w in weyl_group(d) if set(w.word) <= allowed)
    return Subgroup(members, tuple(sorted(allowed)))


def dominant_stabilizer(d: RootDatum, x: Sequence[int]) -> Subgroup:
    """Stabilizer of a dominant weight, read off from its zero labels."""
    return parabolic_subgroup(d, [i + 1 for i, v in enumerate(labels(d, x)) if v == 0])


def double_cosets(d: RootDatum, left: Subgroup, right: Subgroup) -> List[Tuple[WeylElement, FrozenSet[WeylElement]]]:
    """Partition W into left\\W/right, each coset with its shortest (then lexicographically least) member."""
    group = weyl_group(d)
    if not all(w in group for w in left.elements | right.elements):
        raise UsageError("Subgroups do not belong to the Weyl group of {}", d.label)
    assigned: Set[WeylElement] = set()
    cosets = []
    for g in group:
        if g in assigned:
            continue
        members = frozenset(group.multiply(group.multiply(a, g), b) for a in left.elements for b in right.elements)
        assigned |= members
        cosets.append((min(members, key=_word_key), members))
    assert sum(len(m) for _, m in cosets) == len(group)
    return sorted(cosets, key=lambda c: _word_key(c[0]))


def minimal_double_coset_representatives(
    d: RootDatum, left_gens: Iterable[int], right_gens: Iterable[int]
) -> List[WeylElement]:
    """Shortest members of W_I\\W/W_J for parabolic W_I, W_J, without building the cosets.

    w is shortest in its double coset iff s_i·w and w·s_j are both longer for
    every i in I and j in J.
    """
    group = weyl_group(d)
    lefts = [group.simple_reflection(i) for i in left_gens]
    rights = [group.simple_reflection(j) for j in right_gens]
    return sorted(
        (w for w in group
         if all(group.multiply(s, w).length > w.length for s in lefts)
         and all(group.multiply(w, s).length > w.length for s in rights)),
        key=_word_key,
    )


def weyl_orbit(d: RootDatum, x: Sequence[int], coweight: bool = False) -> Set[Tuple[int, ...]]:
    """The W-orbit of a weight (or coweight), by closure under simple reflections."""
    start = tuple(x)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for y in frontier:
            for i in range(d.n_simple):
                z = _reflect(d, y, i, coweight)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def inversion_count(d: RootDatum, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    positive = {p.root for p in d.positive_roots}
    return sum(1 for p in d.positive_roots if w.apply(p.root) not in positive)
