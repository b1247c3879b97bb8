"""Exact polynomial algebra in two families of variables and the
apply-as-differential-operator pairing.

Polynomials are sparse Monomial -> coefficient maps over x_1..x_n, y_1..y_n
with int or Fraction coefficients (integral Fractions normalize to int, so
integer-only pipelines stay fast).  The hook determinant delta, the span of
its iterated derivatives, and the shifted products psi used for orbit
evaluation all live here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from random import Random

from .exactla import RowReducer
from .fillings import Monomial, StandardFilling, inversions
from .shapes import HookShape, cells

Coeff = int | Fraction


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Sparse exact polynomial; terms map Monomial to a nonzero coefficient.
    Treated as immutable."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError(f"bad variable count {n}")
        self.n = n
        clean: dict[Monomial, Coeff] = {}
        for m, c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def constant(cls, c: Coeff, n: int) -> Polynomial:
        return cls(n, {Monomial(): c})

    @classmethod
    def from_monomial(cls, m: Monomial, n: int, c: Coeff = 1) -> Polynomial:
        return cls(n, {m: c})

    @classmethod
    def x_var(cls, i: int, n: int) -> Polynomial:
        return cls(n, {Monomial(x=((i, 1),)): 1})

    @classmethod
    def y_var(cls, i: int, n: int) -> Polynomial:
        return cls(n, {Monomial(y=((i, 1),)): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.n, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.n, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.n, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def mul_linear(self, kind: str, index: int, const: Coeff) -> Polynomial:
        """self * (x_index - const) or self * (y_index - const), computed
        with single-exponent bumps instead of general monomial products."""
        if kind not in ("x", "y"):
            raise ValueError(f"kind must be 'x' or 'y', got {kind!r}")
        if not 1 <= index <= self.n:
            raise ValueError(f"variable index {index} out of range 1..{self.n}")
        const = _norm(const)
        out: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            bumped = m.bump(kind, index)
            out[bumped] = out.get(bumped, 0) + c
            if const:
                out[m] = out.get(m, 0) - c * const
        return Polynomial(self.n, out)

    def total_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def x_degrees(self) -> set[int]:
        return {m.x_degree() for m in self.terms}

    def y_degrees(self) -> set[int]:
        return {m.y_degree() for m in self.terms}

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> Coeff:
        return self.terms[self.leading_monomial()]

    def derivative(self, kind: str, index: int) -> Polynomial:
        """First-order partial derivative in x_index or y_index."""
        if kind not in ("x", "y"):
            raise ValueError(f"kind must be 'x' or 'y', got {kind!r}")
        out: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            pairs = m.x if kind == "x" else m.y
            e = dict(pairs).get(index, 0)
            if not e:
                continue
            lowered = tuple((i, ee - 1 if i == index else ee) for i, ee in pairs)
            dm = Monomial(lowered, m.y) if kind == "x" else Monomial(m.x, lowered)
            out[dm] = out.get(dm, 0) + c * e
        return Polynomial(self.n, out)

    def swap_variables(self, i: int, j: int) -> Polynomial:
        """Exchange x_i with x_j and y_i with y_j simultaneously."""
        def relabel(pairs):
            return tuple((j if k == i else i if k == j else k, e) for k, e in pairs)
        return Polynomial(self.n, {Monomial(relabel(m.x), relabel(m.y)): c
                                   for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in descending graded-lex order (leading first)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            body = str(m) if c == 1 and m.degree else \
                (f"{c}" if not m.degree else f"{c}*{m}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.n}, {self})"

    def to_json(self) -> list[dict]:
        out = []
        for m, c in self.sorted_terms():
            out.append({"c": str(Fraction(c)),
                        "x": {str(i): e for i, e in m.x},
                        "y": {str(i): e for i, e in m.y}})
        return out

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> Polynomial:
        terms: dict[Monomial, Coeff] = {}
        for t in data:
            m = Monomial(((int(i), e) for i, e in t.get("x", {}).items()),
                         ((int(i), e) for i, e in t.get("y", {}).items()))
            terms[m] = terms.get(m, 0) + Fraction(t["c"])
        return cls(n, terms)


def _parity(perm) -> int:
    inv = 0
    for j in range(len(perm)):
        for i in range(j):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def delta(s: HookShape) -> Polynomial:
    """Determinant of the n x n matrix with (i, j) entry
    x_i^(row(cell_j)-1) * y_i^(col(cell_j)-1), cells in reading order.

    The cell biexponents are pairwise distinct, so expanding over
    permutations yields exactly n! distinct monomials with coefficients +-1.
    """
    n = s.n
    biexps = [(r - 1, c - 1) for r, c in cells(s)]
    terms: dict[Monomial, Coeff] = {}
    for perm in permutations(range(n)):
        xv = [0] * n
        yv = [0] * n
        for var, cell in enumerate(perm):
            xv[var], yv[var] = biexps[cell]
        terms[Monomial.from_vectors(xv, yv)] = _parity(perm)
    return Polynomial(n, terms)


def apply_diff(f: Polynomial, g: Polynomial) -> Polynomial:
    """Apply f as a constant-coefficient differential operator to g,
    substituting d/dx_i for x_i and d/dy_i for y_i."""
    if f.n != g.n:
        raise ValueError(f"variable counts differ: {f.n} vs {g.n}")
    out: dict[Monomial, Coeff] = {}
    for mg, cg in g.terms.items():
        gx, gy = mg.x_map(), mg.y_map()
        for mf, cf in f.terms.items():
            coeff = cf * cg
            for pairs, exps in ((mf.x, gx), (mf.y, gy)):
                for i, e in pairs:
                    have = exps.get(i, 0)
                    if have < e:
                        coeff = 0
                        break
                    for t in range(have, have - e, -1):
                        coeff *= t
                if not coeff:
                    break
            if not coeff:
                continue
            fx, fy = mf.x_map(), mf.y_map()
            m = Monomial(((i, e - fx.get(i, 0)) for i, e in gx.items()),
                         ((i, e - fy.get(i, 0)) for i, e in gy.items()))
            out[m] = out.get(m, 0) + coeff
    return Polynomial(g.n, out)


def derivative_module(s: HookShape) -> list[Polynomial]:
    """Basis of the span of delta(s) and all its iterated partial
    derivatives, by breadth-first closure with exact rank bookkeeping.

    Dependent derivatives are pruned without expansion: the accumulated
    span is closed under every first-order derivative of its members, so
    nothing below a dependent node can leave it.
    """
    d = delta(s)
    n = d.n
    red = RowReducer()
    basis: list[Polynomial] = []
    queue: deque[Polynomial] = deque()
    if red.insert(d.terms):
        basis.append(d)
        queue.append(d)
    while queue:
        f = queue.popleft()
        for kind in ("x", "y"):
            for i in range(1, n + 1):
                g = f.derivative(kind, i)
                if g.is_zero():
                    continue
                if red.insert(g.terms):
                    basis.append(g)
                    queue.append(g)
    return basis


@dataclass(frozen=True)
class OrbitParams:
    """Evaluation offsets: alphas[i-1] marks row i, betas[j-1] column j.
    Each family must be pairwise distinct."""

    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(Fraction(b) for b in self.betas))
        if len(set(self.alphas)) != len(self.alphas):
            raise ValueError(f"alphas not pairwise distinct: {self.alphas}")
        if len(set(self.betas)) != len(self.betas):
            raise ValueError(f"betas not pairwise distinct: {self.betas}")

    def alpha(self, i: int) -> Fraction:
        if not 1 <= i <= len(self.alphas):
            raise ValueError(f"alphas cover rows 1..{len(self.alphas)}, need row {i}")
        return self.alphas[i - 1]

    def beta(self, j: int) -> Fraction:
        if not 1 <= j <= len(self.betas):
            raise ValueError(f"betas cover columns 1..{len(self.betas)}, need column {j}")
        return self.betas[j - 1]


def default_params(n: int) -> OrbitParams:
    """alpha_i = i, beta_j = -j."""
    return OrbitParams(tuple(Fraction(i) for i in range(1, n + 1)),
                       tuple(Fraction(-j) for j in range(1, n + 1)))


def seeded_params(n: int, seed: int) -> OrbitParams:
    """2n mutually distinct rationals drawn reproducibly from seed."""
    rng = Random(seed)
    drawn: list[Fraction] = []
    seen = set()
    while len(drawn) < 2 * n:
        q = Fraction(rng.randint(-9999, 9999), rng.randint(1, 99))
        if q not in seen:
            seen.add(q)
            drawn.append(q)
    return OrbitParams(tuple(drawn[:n]), tuple(drawn[n:]))


@dataclass(frozen=True)
class OrbitPoint:
    """Evaluation point: coordinates for x_1..x_n then y_1..y_n."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(Fraction(v) for v in self.xs))
        object.__setattr__(self, "ys", tuple(Fraction(v) for v in self.ys))


def _factor_indices(S: StandardFilling) -> tuple[list, list]:
    """(d, row_of_c) per column inversion and (r, col_of_t) per row
    inversion, in a fixed order."""
    inv = inversions(S)
    col_factors = sorted((d, S.position_of(c).row) for d, c in inv.col_pairs)
    row_factors = sorted((r, S.position_of(t).col) for t, r in inv.row_pairs)
    return col_factors, row_factors


def psi(S: StandardFilling, params: OrbitParams) -> Polynomial:
    """Product of (x_d - alpha_{row(c)}) over column inversions (d, c) and
    (y_r - beta_{col(t)}) over row inversions (t, r).  Its graded-lex
    leading term is phi(S)."""
    n = S.shape.n
    col_factors, row_factors = _factor_indices(S)
    out = Polynomial.constant(1, n)
    for d, row_i in col_factors:
        out = out.mul_linear("x", d, params.alpha(row_i))
    for r, col_j in row_factors:
        out = out.mul_linear("y", r, params.beta(col_j))
    return out


def psi_at(S: StandardFilling, params: OrbitParams, p: OrbitPoint) -> Fraction:
    """psi(S) evaluated at p without expanding the product."""
    col_factors, row_factors = _factor_indices(S)
    val = Fraction(1)
    for d, row_i in col_factors:
        val *= p.xs[d - 1] - params.alpha(row_i)
    for r, col_j in row_factors:
        val *= p.ys[r - 1] - params.beta(col_j)
    return val


def orbit_point(S: StandardFilling, params: OrbitParams) -> OrbitPoint:
    """Point whose k-th x (resp. y) coordinate is the alpha of the row
    (resp. beta of the column) holding label k in S."""
    n = S.shape.n
    xs, ys = [], []
    for k in range(1, n + 1):
        cell = S.position_of(k)
        xs.append(params.alpha(cell.row))
        ys.append(params.beta(cell.col))
    return OrbitPoint(tuple(xs), tuple(ys))


def evaluate(f: Polynomial, p: OrbitPoint) -> Fraction:
    """Exact evaluation of f at p."""
    if len(p.xs) != f.n or len(p.ys) != f.n:
        raise ValueError(f"point dimension {len(p.xs)}/{len(p.ys)} "
                         f"does not match n={f.n}")
    total = Fraction(0)
    for m, c in f.terms.items():
        val = Fraction(c)
        for i, e in m.x:
            val *= p.xs[i - 1] ** e
        for i, e in m.y:
            val *= p.ys[i - 1] ** e
        total += val
    return total
