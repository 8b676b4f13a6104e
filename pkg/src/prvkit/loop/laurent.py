"""Exact Laurent polynomials in t over ℚ, square matrices of them, and truncated series.

Text form: entries look like `3*t^-1 + 1/2 + 2*t^2`; matrices are row-major
bracketed lists, `[[t, 1], [0, t^-1]]`. Parsing goes through sympy.
"""

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from prvkit.utils.config import get_config
from prvkit.utils.logging import SingularError, UsageError, WindowError

Scalar = Union[int, Fraction]

_T = sympy.Symbol("t")
_TRANSFORMS = standard_transformations + (convert_xor,)


class LaurentPoly:
    """Finite sum Σ c_k t^k with rational coefficients; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[int, Scalar]] = None):
        self._terms: Dict[int, Fraction] = {
            int(k): Fraction(c) for k, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError(f"Cannot make a Laurent polynomial from {x!r}")

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    @property
    def valuation(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        out: Dict[int, Fraction] = {}
        for (a, x), (b, y) in itertools.product(self._terms.items(), other._terms.items()):
            out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.monomial_inverse() ** (-n)
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def monomial_inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise SingularError("{} is not a unit in ℚ[t, t⁻¹]", self)
        (k, c), = self._terms.items()
        return LaurentPoly.monomial(1 / c, -k)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(sympy.sympify(expr))
    terms: Dict[int, Fraction] = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, exp = term.as_coeff_exponent(_T)
        if not coeff.is_Rational or not exp.is_Integer:
            raise UsageError("Not a Laurent polynomial in t with rational coefficients: {}", expr)
        terms[int(exp)] = terms.get(int(exp), Fraction(0)) + Fraction(int(coeff.p), int(coeff.q))
    return LaurentPoly(terms)


def parse_poly(text: str) -> LaurentPoly:
    """Parse `3*t^-1 + 1/2 + 2*t^2`."""
    try:
        expr = parse_expr(text, local_dict={"t": _T}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise UsageError("Cannot parse Laurent polynomial {!r}: {}", text, e)
    return _from_sympy(expr)


def parse_matrix(text: str) -> "LaurentMatrix":
    """Parse a bracketed row-major matrix such as `[[t, 1], [0, t^-1]]`."""
    try:
        rows = parse_expr(text, local_dict={"t": _T}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise UsageError("Cannot parse Laurent matrix {!r}: {}", text, e)
    if not isinstance(rows, (list, tuple)) or not all(isinstance(r, (list, tuple)) for r in rows):
        raise UsageError("A Laurent matrix must be a list of rows: {!r}", text)
    return LaurentMatrix([[_from_sympy(e) for e in row] for row in rows])


Window = Tuple[int, int]


class LaurentMatrix:
    """Square matrix of Laurent polynomials with a valuation window shared by all entries."""

    def __init__(
        self,
        rows: Sequence[Sequence],
        window: Optional[Window] = None,
        declared_det: Optional[LaurentPoly] = None,
    ):
        entries = tuple(tuple(LaurentPoly.coerce(e) for e in row) for row in rows)
        m = len(entries)
        if m == 0 or any(len(row) != m for row in entries):
            raise UsageError("Laurent matrices must be square and non-empty, got {} rows", m)
        if m > get_config().max_size:
            raise UsageError("Matrix size {} exceeds the size cap {}", m, get_config().max_size)
        self.entries = entries
        support = self._support()
        if window is None:
            window = support
        elif support[0] < window[0] or support[1] > window[1]:
            raise WindowError("Entries with support {} fall outside the window {}", support, window)
        if window[1] - window[0] > get_config().max_window_width:
            raise WindowError("Window {} exceeds the maximal width {}", window, get_config().max_window_width)
        self.window: Window = window
        self.declared_det = declared_det
        if declared_det is not None and self.det() != declared_det:
            raise UsageError("Determinant {} differs from the declared {}", self.det(), declared_det)

    def _support(self) -> Window:
        vals = [e.valuation for row in self.entries for e in row if e]
        degs = [e.degree for row in self.entries for e in row if e]
        return (min(vals), max(degs)) if vals else (0, 0)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, m: int) -> "LaurentMatrix":
        return cls.diagonal([0] * m)

    @classmethod
    def diagonal(cls, exponents: Sequence[int]) -> "LaurentMatrix":
        m = len(exponents)
        return cls([[LaurentPoly.monomial(1, exponents[i]) if i == j else 0 for j in range(m)] for i in range(m)])

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __mul__(self, other) -> "LaurentMatrix":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return LaurentMatrix([[e * other for e in row] for row in self.entries])
        if other.size != self.size:
            raise UsageError("Cannot multiply {}x{} by {}x{}", self.size, self.size, other.size, other.size)
        m = self.size
        rows = [
            [sum((self.entries[i][k] * other.entries[k][j] for k in range(m)), LaurentPoly()) for j in range(m)]
            for i in range(m)
        ]
        lo, hi = self.window[0] + other.window[0], self.window[1] + other.window[1]
        width = get_config().max_window_width
        if hi - lo > width:
            # the nominal window is too wide; keep it only if the true support fits
            return LaurentMatrix(rows)
        return LaurentMatrix(rows, window=(lo, hi))

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix([list(col) for col in zip(*self.entries)])

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
        return _det([[self.entries[i][j] for j in cols] for i in rows])

    def det(self) -> LaurentPoly:
        return _det([list(r) for r in self.entries])

    def adjugate(self) -> "LaurentMatrix":
        m = self.size
        if m == 1:
            return LaurentMatrix([[1]])
        idx = range(m)
        return LaurentMatrix([
            [
                self.minor([r for r in idx if r != j], [c for c in idx if c != i]) * (-1) ** (i + j)
                for j in idx
            ]
            for i in idx
        ])

    def inverse(self) -> "LaurentMatrix":
        """Inverse over ℚ[t, t⁻¹]; the determinant has to be a monomial."""
        det = self.det()
        if not det.is_monomial():
            raise SingularError("Determinant {} is not a unit; the matrix is not invertible over ℚ[t, t⁻¹]", det)
        return self.adjugate() * det.monomial_inverse()

    def to_text(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.to_text()})"


def _det(rows: List[List[LaurentPoly]]) -> LaurentPoly:
    """Cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.const(1)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly()
    for j, pivot in enumerate(rows[0]):
        if not pivot:
            continue
        sub = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = pivot * _det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


class Series:
    """A Laurent series in t known modulo t^prec."""

    __slots__ = ("terms", "prec")

    def __init__(self, terms: Dict[int, Fraction], prec: int):
        self.terms = {k: c for k, c in terms.items() if c != 0 and k < prec}
        self.prec = prec

    @classmethod
    def from_poly(cls, p: LaurentPoly, prec: int) -> "Series":
        return cls(p.terms, prec)

    @property
    def valuation(self) -> Optional[int]:
        """The valuation when it is determined below the precision, else None."""
        return min(self.terms) if self.terms else None

    def __add__(self, other: "Series") -> "Series":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Series(out, min(self.prec, other.prec))

    def __neg__(self) -> "Series":
        return Series({k: -c for k, c in self.terms.items()}, self.prec)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        va, vb = self.valuation, other.valuation
        # an unknown factor only bounds the product from below
        prec = min(
            self.prec + (vb if vb is not None else other.prec),
            other.prec + (va if va is not None else self.prec),
        )
        out: Dict[int, Fraction] = {}
        for (a, x), (b, y) in itertools.product(self.terms.items(), other.terms.items()):
            if a + b < prec:
                out[a + b] = out.get(a + b, 0) + x * y
        return Series(out, prec)

    def inverse(self) -> "Series":
        """1/(t^v u) = t^{-v} u^{-1}, with u^{-1} expanded as far as u is known."""
        v = self.valuation
        if v is None:
            raise WindowError("Cannot invert a series whose valuation lies beyond precision {}", self.prec)
        rel = self.prec - v
        u = [self.terms.get(v + k, Fraction(0)) for k in range(rel)]
        inv = [Fraction(0)] * rel
        inv[0] = 1 / u[0]
        for k in range(1, rel):
            inv[k] = -sum((u[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / u[0]
        return Series({k - v: c for k, c in enumerate(inv)}, rel - v)


def elementary_divisor_valuations(mat: LaurentMatrix, widen: int = 0) -> Tuple[int, ...]:
    """Valuations of the elementary divisors over ℚ[[t]], increasing, by valuation-greedy pivoting.

    Entries are tracked as series modulo t^(window top + 1 + widen); a pivot
    whose valuation cannot be pinned down inside that precision raises
    WindowError.
    """
    det_val = mat.det().valuation
    if det_val is None:
        raise SingularError("Matrix is singular over ℚ((t))")
    m = mat.size
    prec = mat.window[1] + 1 + widen
    block = [[Series.from_poly(e, prec) for e in row] for row in mat.entries]
    vals: List[int] = []
    for step in range(m):
        known = [
            (block[i][j].valuation, i, j)
            for i in range(step, m) for j in range(step, m) if block[i][j].valuation is not None
        ]
        floor = min((block[i][j].prec for i in range(step, m) for j in range(step, m)
                     if block[i][j].valuation is None), default=None)
        if not known:
            raise WindowError("Every remaining entry vanishes to precision; widen the window")
        v, pi, pj = min(known)
        if floor is not None and floor <= v:
            raise WindowError("Pivot valuation {} not certified below precision {}", v, floor)
        block[step], block[pi] = block[pi], block[step]
        for row in block:
            row[step], row[pj] = row[pj], row[step]
        inv = block[step][step].inverse()
        for r in range(step + 1, m):
            factor = block[r][step] * inv
            for c in range(step, m):
                block[r][c] = block[r][c] - factor * block[step][c]
        vals.append(v)
    if sum(vals) != det_val:
        raise WindowError("Pivot valuations {} do not add up to the determinant valuation {}", vals, det_val)
    return tuple(sorted(vals))


def determinantal_valuations(mat: LaurentMatrix) -> Tuple[int, ...]:
    """Elementary-divisor valuations from minors: a_k = δ_k − δ_{k−1}, δ_k the least valuation of k×k minors."""
    m = mat.size
    deltas = [0]
    for k in range(1, m + 1):
        vals = [
            mat.minor(rows, cols).valuation
            for rows in itertools.combinations(range(m), k) for cols in itertools.combinations(range(m), k)
        ]
        vals = [v for v in vals if v is not None]
        if not vals:
            raise SingularError("Matrix is singular over ℚ((t))")
        deltas.append(min(vals))
    return tuple(sorted(deltas[k] - deltas[k - 1] for k in range(1, m + 1)))


def certified_valuations(mat: LaurentMatrix) -> Tuple[int, ...]:
    """Pivoting result, rerun at a wider window; disagreement raises WindowError."""
    first = elementary_divisor_valuations(mat)
    second = elementary_divisor_valuations(mat, widen=get_config().certify_widen)
    if first != second:
        raise WindowError("Elementary divisors changed from {} to {} when widening the window", first, second)
    return first


def matrix_from_rows(rows: Iterable[Iterable]) -> LaurentMatrix:
    return LaurentMatrix([list(r) for r in rows])
