"""Verification campaigns: exhaustive, exact, reported as certificates.

Each campaign returns a CampaignReport whose claims carry an anchor (the
mathematical statement being certified), the expected value, the computed
value, and the resulting pass flag.  Reports are deterministic for fixed
inputs except for the wall-time field.  Exploratory findings are reported
but never asserted.
"""

from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from . import __version__
from .exactla import ExactMatrix, RowReducer, _integerize, intersection_dim
from .fillings import (
    Monomial,
    StandardFilling,
    complement,
    dual_signature_monomial,
    enumerate_fillings,
    phi,
    signature_monomial,
    split_fillings,
)
from .foata import theta
from .kernels import any_dominates, col_inv_count, col_inv_exponents, \
    row_inv_count, row_inv_exponents
from .polyalg import (
    OrbitParams,
    Polynomial,
    apply_diff,
    default_params,
    delta,
    derivative_module,
    orbit_point,
    psi_at,
)
from .shapes import HookShape, b_stat, conjugate, format_shape, remove_corner


@dataclass
class Claim:
    anchor: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {"anchor": self.anchor, "expected": self.expected,
                "computed": self.computed, "pass": self.passed}


@dataclass
class CampaignReport:
    campaign: str
    inputs: dict
    claims: list[Claim]
    exploratory: list[dict] = field(default_factory=list)
    ms: float = 0.0
    engine: str = __version__

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {"campaign": self.campaign,
                "inputs": self.inputs,
                "claims": [c.to_json() for c in self.claims],
                "exploratory": self.exploratory,
                "ms": self.ms,
                "engine": self.engine}

    def to_text(self) -> str:
        lines = [f"campaign {self.campaign}  inputs {self.inputs}"]
        for c in self.claims:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{tag}] {c.anchor}: expected {c.expected}, "
                         f"computed {c.computed}")
        for e in self.exploratory:
            lines.append(f"  [note] {e}")
        verdict = "OK" if self.ok else "FAILED"
        lines.append(f"  {verdict} in {self.ms:.1f} ms (engine {self.engine})")
        return "\n".join(lines)


def _finish(report: CampaignReport, t0: float) -> CampaignReport:
    report.ms = (time.perf_counter() - t0) * 1000.0
    return report


def _check_guard(n: int, guard: int):
    if n > guard:
        raise ValueError(f"guard exceeded: n={n} > guard={guard}; "
                         "raise the guard explicitly to run anyway")


class HilbertSeries:
    """Bivariate generating function with nonnegative integer coefficients,
    terms keyed by (t_exponent, q_exponent)."""

    def __init__(self, coeffs):
        self.coeffs = {k: int(v) for k, v in dict(coeffs).items() if v}
        if any(v < 0 for v in self.coeffs.values()):
            raise ValueError("coefficients must be nonnegative")

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def t_degree(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def q_degree(self) -> int:
        return max((j for _, j in self.coeffs), default=0)

    def is_symmetric(self, t_top: int, q_top: int) -> bool:
        """Invariance under (i, j) -> (t_top - i, q_top - j)."""
        return all(self.coefficient(t_top - i, q_top - j) == c
                   for (i, j), c in self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, key=lambda k: (k[0] + k[1], k)):
            c = self.coeffs[(i, j)]
            bits = []
            if c != 1 or (i == 0 and j == 0):
                bits.append(str(c))
            if i:
                bits.append("t" if i == 1 else f"t^{i}")
            if j:
                bits.append("q" if j == 1 else f"q^{j}")
            parts.append("*".join(bits))
        return " + ".join(parts)

    def __repr__(self):
        return f"HilbertSeries({self})"

    def to_json(self) -> dict:
        return {"terms": [{"t": i, "q": j, "c": self.coeffs[(i, j)]}
                          for (i, j) in sorted(self.coeffs)]}


def hilbert_series(s: HookShape) -> HilbertSeries:
    """Sum over standard fillings of t^(column inversions) q^(row
    inversions)."""
    a, n = s.arm, s.n
    coeffs: dict[tuple[int, int], int] = {}
    for p in permutations(range(1, n + 1)):
        key = (col_inv_count((p[0],) + p[a:]), row_inv_count(p[:a]))
        coeffs[key] = coeffs.get(key, 0) + 1
    return HilbertSeries(coeffs)


def _phi_poly(S: StandardFilling) -> Polynomial:
    return Polynomial.from_monomial(phi(S), S.shape.n)


def verify_arr_basis(s: HookShape, guard: int = 6) -> CampaignReport:
    """Certify that the n! inversion monomials index an n!-dimensional
    derivative span: distinctness, independence of the paired derivatives,
    and the closure dimension."""
    t0 = time.perf_counter()
    n = s.n
    _check_guard(n, guard)
    report = CampaignReport("verify_arr_basis",
                            {"shape": format_shape(s), "n": n, "guard": guard},
                            [])
    fillings = enumerate_fillings(s)
    report.claims.append(Claim("|SF(shape)| = n!", factorial(n), len(fillings)))
    monomials = [phi(S) for S in fillings]
    report.claims.append(Claim("phi takes n! distinct values on SF",
                               factorial(n), len(set(monomials))))
    d = delta(s)
    paired = [apply_diff(_phi_poly(S), d) for S in fillings]
    red = RowReducer()
    indep = all(red.insert(p.terms) for p in paired)
    report.claims.append(Claim("{phi_S(d) applied to delta} is linearly independent",
                               True, indep))
    basis = derivative_module(s)
    report.claims.append(Claim("dim of the derivative span of delta = n!",
                               factorial(n), len(basis)))
    return _finish(report, t0)


def _distinct_row_vectors(length: int, n: int) -> list[tuple[int, ...]]:
    """Distinct y-exponent vectors over all row words of a given length."""
    return list({row_inv_exponents(w, n) for w in permutations(range(1, n + 1), length)})


def _distinct_col_vectors(length: int, n: int) -> list[tuple[int, ...]]:
    """Distinct x-exponent vectors over all column words of a given length."""
    return list({col_inv_exponents(w, n) for w in permutations(range(1, n + 1), length)})


def _exclusion_scan(signatures, other_vecs: list[tuple[int, ...]], n: int) -> int:
    """Number of signature monomials dominated by some vector in other_vecs
    (i.e. dividing some monomial on the other side)."""
    buckets: dict[int, tuple[list[int], list[tuple[int, ...]]]] = {}

    def bucket(var: int):
        if var not in buckets:
            srt = sorted(other_vecs, key=lambda v: v[var - 1])
            buckets[var] = ([v[var - 1] for v in srt], srt)
        return buckets[var]

    hits = 0
    seen: dict[tuple, bool] = {}
    for pairs in signatures:
        if pairs in seen:
            hits += seen[pairs]
            continue
        target = [0] * n
        for i, e in pairs:
            target[i - 1] = e
        target = tuple(target)
        best = None
        for i, e in pairs:
            keys, srt = bucket(i)
            lo = bisect_left(keys, e)
            size = len(srt) - lo
            if best is None or size < best[0]:
                best = (size, srt, lo)
            if size == 0:
                break
        hit = bool(best) and best[0] > 0 and \
            any_dominates(best[1][best[2]:], target)
        seen[pairs] = hit
        hits += hit
    return hits


def verify_nfact2(lam: HookShape, guard: int = 8) -> CampaignReport:
    """Certify, for lam = (a,1^l) with a >= 2 and l >= 1, that the two
    corner-removed shapes share exactly half their inversion monomials:
    the theta bijection, monomial preservation, set equality, the span
    intersection dimension, and the signature-monomial exclusions."""
    t0 = time.perf_counter()
    if lam.arm < 2 or lam.leg < 1:
        raise ValueError(f"shape {format_shape(lam)} not eligible: "
                         "need arm >= 2 and leg >= 1")
    mu = remove_corner(lam, "column")
    rho = remove_corner(lam, "row")
    n = mu.n
    _check_guard(n, guard)
    half = factorial(n) // 2
    report = CampaignReport("verify_nfact2",
                            {"lambda": format_shape(lam), "mu": format_shape(mu),
                             "rho": format_shape(rho), "n": n, "guard": guard},
                            [])
    claims = report.claims

    mu_less, mu_greater = split_fillings(mu, "mu")
    rho_less, rho_greater = split_fillings(rho, "rho")
    claims.append(Claim("|SF_<(mu)| = n!/2", half, len(mu_less)))
    claims.append(Claim("|SF_<(rho)| = n!/2", half, len(rho_less)))

    images = [theta(S) for S in mu_less]
    rho_less_set = set(rho_less)
    claims.append(Claim("theta maps SF_<(mu) into SF_<(rho)",
                        half, sum(1 for T in images if T in rho_less_set)))
    claims.append(Claim("theta is injective on SF_<(mu)",
                        half, len(set(images))))
    claims.append(Claim("theta is onto SF_<(rho)",
                        True, set(images) == rho_less_set))
    claims.append(Claim("phi(theta(S)) = phi(S) on SF_<(mu)",
                        half, sum(1 for S, T in zip(mu_less, images)
                                  if phi(S) == phi(T))))

    phi_mu_less = {phi(S) for S in mu_less}
    phi_rho_less = {phi(T) for T in rho_less}
    claims.append(Claim("the SF_< monomial sets coincide",
                        0, len(phi_mu_less ^ phi_rho_less)))
    claims.append(Claim("each SF_< monomial set has n!/2 elements",
                        [half, half], [len(phi_mu_less), len(phi_rho_less)]))

    phi_mu_all = [phi(S) for S in enumerate_fillings(mu)]
    phi_rho_all = [phi(T) for T in enumerate_fillings(rho)]
    claims.append(Claim("common monomials across the full sides number n!/2",
                        half, len(set(phi_mu_all) & set(phi_rho_all))))
    U = [Polynomial.from_monomial(m, n) for m in phi_mu_all]
    V = [Polynomial.from_monomial(m, n) for m in phi_rho_all]
    claims.append(Claim("dim(span phi(SF(mu)) ∩ span phi(SF(rho))) = n!/2",
                        half, intersection_dim(U, V)))

    phi_mu_greater = {phi(S) for S in mu_greater}
    phi_rho_greater = {phi(T) for T in rho_greater}
    claims.append(Claim("no SF_>(mu) monomial occurs on the rho side",
                        0, len(phi_mu_greater & set(phi_rho_all))))
    claims.append(Claim("no SF_>(rho) monomial occurs on the mu side",
                        0, len(phi_rho_greater & set(phi_mu_all))))

    mu_sigs = [signature_monomial(S) for S in mu_greater]
    claims.append(Claim("the signature monomial divides phi(S) on SF_>(mu)",
                        half, sum(1 for S, m in zip(mu_greater, mu_sigs)
                                  if m.divides(phi(S)))))
    rho_row_vecs = _distinct_row_vectors(rho.arm, n)
    claims.append(Claim("the signature monomial divides no phi over SF(rho)",
                        0, _exclusion_scan((m.y for m in mu_sigs),
                                           rho_row_vecs, n)))

    rho_sigs = [dual_signature_monomial(T) for T in rho_greater]
    claims.append(Claim("the dual signature divides phi(T) on SF_>(rho)",
                        half, sum(1 for T, m in zip(rho_greater, rho_sigs)
                                  if m.divides(phi(T)))))
    mu_col_vecs = _distinct_col_vectors(mu.leg + 1, n)
    claims.append(Claim("the dual signature divides no phi over SF(mu)",
                        0, _exclusion_scan((m.x for m in rho_sigs),
                                           mu_col_vecs, n)))
    return _finish(report, t0)


def verify_orbit_harmonics(s: HookShape, params: OrbitParams | None = None,
                           guard: int = 5) -> CampaignReport:
    """Certify nonsingularity of the psi-at-orbit-points evaluation matrix
    and the complementation identities for the inversion statistics."""
    t0 = time.perf_counter()
    n = s.n
    _check_guard(n, guard)
    if params is None:
        params = default_params(n)
    report = CampaignReport(
        "verify_orbit_harmonics",
        {"shape": format_shape(s), "n": n, "guard": guard,
         "alphas": [str(a) for a in params.alphas],
         "betas": [str(b) for b in params.betas]},
        [])
    fillings = enumerate_fillings(s)
    points = [orbit_point(T, params) for T in fillings]
    rows = []
    for S in fillings:
        row = {}
        for j, p in enumerate(points):
            v = psi_at(S, params, p)
            if v:
                row[j] = v
        rows.append(row)
    rank = ExactMatrix(rows).rank()
    report.claims.append(Claim("the evaluation matrix psi_S at p_T is nonsingular",
                               factorial(n), rank))

    bt, bq = b_stat(s), b_stat(conjugate(s))
    good = 0
    for S in fillings:
        C = complement(S)
        if (col_inv_count(S.column_word()) + col_inv_count(C.column_word()) == bt
                and row_inv_count(S.row) + row_inv_count(C.row) == bq):
            good += 1
    report.claims.append(Claim(
        "complementation swaps each inversion count with its maximum minus it",
        factorial(n), good))
    return _finish(report, t0)


def _scalar_free(p: Polynomial) -> frozenset:
    """Scalar-normalized fingerprint of a polynomial for up-to-scalar
    set comparisons."""
    return frozenset(_integerize(p.terms).items())


def explore_d_intersection(lam: HookShape, guard: int = 5) -> CampaignReport:
    """EXPLORATORY: report dim of the intersection of the two derivative
    spans, whether the corner-below derivative families overlap up to
    scalar, and how often phi from the corner-above class lands a
    derivative inside the other span.  Nothing here is asserted."""
    t0 = time.perf_counter()
    if lam.arm < 2 or lam.leg < 1:
        raise ValueError(f"shape {format_shape(lam)} not eligible: "
                         "need arm >= 2 and leg >= 1")
    mu = remove_corner(lam, "column")
    rho = remove_corner(lam, "row")
    n = mu.n
    _check_guard(n, guard)
    report = CampaignReport(
        "explore_d_intersection",
        {"lambda": format_shape(lam), "mu": format_shape(mu),
         "rho": format_shape(rho), "n": n, "guard": guard},
        [])

    d_mu = derivative_module(mu)
    d_rho = derivative_module(rho)
    dim_int = intersection_dim(d_mu, d_rho)
    report.exploratory.append({
        "finding": "dim(D_mu ∩ D_rho)",
        "computed": dim_int,
        "half_factorial": factorial(n) // 2,
        "matches_half_factorial": dim_int == factorial(n) // 2})

    delta_mu = delta(mu)
    delta_rho = delta(rho)
    mu_less, mu_greater = split_fillings(mu, "mu")
    rho_less, rho_greater = split_fillings(rho, "rho")
    fam_mu = {_scalar_free(apply_diff(_phi_poly(S), delta_mu)) for S in mu_less}
    fam_rho = {_scalar_free(apply_diff(_phi_poly(T), delta_rho)) for T in rho_less}
    report.exploratory.append({
        "finding": "corner-below derivative families share elements up to scalar",
        "common": len(fam_mu & fam_rho),
        "left": len(fam_mu), "right": len(fam_rho)})

    in_rho = RowReducer(p.terms for p in d_rho)
    fail_mu = sum(1 for S in mu_greater
                  if not in_rho.contains(apply_diff(_phi_poly(S), delta_mu).terms))
    in_mu = RowReducer(p.terms for p in d_mu)
    fail_rho = sum(1 for T in rho_greater
                   if not in_mu.contains(apply_diff(_phi_poly(T), delta_rho).terms))
    report.exploratory.append({
        "finding": "phi_S(d)delta_mu ∈ D_rho over SF_>(mu): failures",
        "failures": fail_mu, "total": len(mu_greater)})
    report.exploratory.append({
        "finding": "phi_T(d)delta_rho ∈ D_mu over SF_>(rho): failures",
        "failures": fail_rho, "total": len(rho_greater)})
    return _finish(report, t0)
