"""Spectral criteria on automorphisms, all decided in exact arithmetic.

- expansion (every eigenvalue strictly outside the unit circle) via a
  Schur-Cohn chain on the reciprocal characteristic polynomial;
- integer-likeness (characteristic polynomial in Z[X], determinant +-1);
- the semisimple part over Q by Newton iteration (Jordan-Chevalley);
- norm profiles: each primary component of a semisimple automorphism is
  tagged with |p_i(0)|^(lcm/deg), a fixed positive power of the absolute
  field norm of its eigenvalues.  Equal-norm classes assemble into the
  positive / non-negative gradings promised by the expansion and
  self-cover criteria.

The splitting field itself is never constructed: a common positive power
of the norms preserves equality classes, ordering, the >1 predicate and
all multiplicative relations, which is everything the gradings need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm, log2

import numpy as np

from . import matrices as mx
from .grading import Grading, preserved_by
from .liealg import LieAlgebra, is_automorphism
from .linineq import feasible, minimal_integer_point
from .polynomials import Polynomial, factor_order_key, poly_xgcd, squarefree_part


def schur_all_inside(p: Polynomial) -> bool:
    """All complex roots strictly inside the unit circle, exactly.

    One Schur-Cohn step: with a0, am the outer coefficients, the roots of
    p lie strictly inside iff am^2 - a0^2 > 0 and the reduced polynomial
    (am*p - a0*reverse(p))/z does too.  A non-positive gap anywhere means
    a root on or outside the circle (so strict stability fails), which is
    exactly what the caller wants to know.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    f = p
    for _ in range(p.degree):
        a0, am = f.coeffs[0], f.coeffs[-1]
        if am * am - a0 * a0 <= 0:
            return False
        g = am * f - a0 * f.reciprocal()
        assert g.coeffs[0] == 0 or g.is_zero()
        f = Polynomial(g.coeffs[1:])
    return True


def is_expanding(m: np.ndarray) -> bool:
    """Every eigenvalue of absolute value > 1 (unit-circle roots: False)."""
    p = mx.charpoly(m)
    if p.coeffs[0] == 0:
        raise ValueError("singular matrix cannot be expanding")
    return schur_all_inside(p.reciprocal())


def is_z_charpoly(m: np.ndarray) -> bool:
    return all(c.denominator == 1 for c in mx.charpoly(m).coeffs)


def is_integer_like(m: np.ndarray) -> bool:
    """Characteristic polynomial in Z[X] and determinant +-1."""
    p = mx.charpoly(m)
    return all(c.denominator == 1 for c in p.coeffs) and abs(p.coeffs[0]) == 1


def semisimple_part(m: np.ndarray) -> np.ndarray:
    """Jordan-Chevalley semisimple part over Q (a polynomial in M).

    Newton iteration against the squarefree part g of the characteristic
    polynomial: S <- S - g(S) * u(S) with u an inverse of g' modulo g;
    quadratic convergence gives g(S) = 0 after ceil(log2 n) steps.
    """
    n = m.shape[0]
    g = squarefree_part(mx.charpoly(m))
    gd = g.derivative()
    _, u, _ = poly_xgcd(gd, g)
    s = m
    for _ in range(max(1, ceil(log2(max(2, n)))) + 1):
        gs = mx.eval_poly(g, s)
        if mx.is_zero_mat(gs):
            break
        s = s - gs @ mx.eval_poly(u, s)
    assert mx.is_zero_mat(mx.eval_poly(g, s)), "Newton iteration failed to converge"
    return s


def is_semisimple(m: np.ndarray) -> bool:
    p = mx.minpoly(m)
    from .polynomials import poly_gcd

    return poly_gcd(p, p.derivative()).degree == 0


# -- norm profiles ------------------------------------------------------------


@dataclass(frozen=True)
class NormProfileEntry:
    factor: Polynomial
    degree: int
    subspace: np.ndarray
    value: Fraction


@dataclass(frozen=True)
class NormProfile:
    entries: tuple[NormProfileEntry, ...]
    lcm_degree: int

    def flattened_values(self) -> list[Fraction]:
        out = []
        for e in self.entries:
            out.extend([e.value] * e.subspace.shape[1])
        return out


def norm_profile(algebra: LieAlgebra, m: np.ndarray) -> NormProfile:
    """Primary components tagged with a fixed positive power of the norm.

    Requires a semisimple automorphism; the value on the component of the
    irreducible factor p_i is |p_i(0)|^(lcm(degrees)/deg p_i).
    """
    if not is_automorphism(algebra, m):
        raise ValueError("matrix is not an automorphism of the algebra")
    if not is_semisimple(m):
        raise ValueError("map is not semisimple; take semisimple_part first")
    primary = mx.primary_decomposition(m)
    mhat = lcm(*[p.degree for p, _ in primary])
    entries = []
    for p, sub in primary:
        value = abs(p.coeffs[0]) ** (mhat // p.degree)
        entries.append(NormProfileEntry(p, p.degree, sub, value))
    entries.sort(key=lambda e: (e.value, factor_order_key(e.factor)))
    return NormProfile(tuple(entries), mhat)


def _norm_classes(profile: NormProfile) -> list[tuple[Fraction, np.ndarray]]:
    """Merge profile entries of equal value, ascending by value."""
    classes: dict[Fraction, list[np.ndarray]] = {}
    for e in profile.entries:
        classes.setdefault(e.value, []).append(e.subspace)
    return [
        (v, mx.col_basis(mx.hstack(subs))) for v, subs in sorted(classes.items())
    ]


def _grading_from_classes(
    algebra: LieAlgebra,
    classes: list[tuple[Fraction, np.ndarray]],
    zero_for_value_one: bool,
) -> Grading:
    """Integer weights for multiplicative norm classes, canonicalized.

    Constraints: w_a + w_b = w_{a*b} whenever [V_a, V_b] != 0 (the class
    a*b is then present, by multiplicativity of the norm on brackets);
    weights strictly increase with the value, value-1 classes pin to 0
    when requested, everything else is >= 1.  Feasible by construction
    (log of the values solves it over R and the system is rational);
    infeasibility would be an internal invariant violation.
    """
    values = [v for v, _ in classes]
    index = {v: a for a, v in enumerate(values)}
    nvars = len(values)
    eqs = []
    for a, (va, sa) in enumerate(classes):
        for b, (vb, sb) in enumerate(classes):
            if b < a:
                continue
            prod = va * vb
            nonzero = None
            for x in range(sa.shape[1]):
                for y in range(sb.shape[1]):
                    if a == b and y <= x:
                        continue
                    z = algebra.bracket(sa[:, x], sb[:, y])
                    if not (z == Fraction(0)).all():
                        nonzero = z
                        break
                if nonzero is not None:
                    break
            if nonzero is None:
                continue
            if prod not in index:
                raise RuntimeError("norm multiplicativity violated on brackets")
            if not mx.col_space_contains(classes[index[prod]][1], nonzero):
                raise RuntimeError("norm multiplicativity violated on brackets")
            coeffs = [Fraction(0)] * nvars
            coeffs[a] += 1
            coeffs[b] += 1
            coeffs[index[prod]] -= 1
            eqs.append((tuple(coeffs), Fraction(0)))
    ineqs = []
    lows = []
    for a, v in enumerate(values):
        if zero_for_value_one and v == 1:
            coeffs = [Fraction(0)] * nvars
            coeffs[a] = Fraction(1)
            eqs.append((tuple(coeffs), Fraction(0)))
            lows.append(0)
        else:
            coeffs = [Fraction(0)] * nvars
            coeffs[a] = Fraction(1)
            ineqs.append((tuple(coeffs), Fraction(1)))
            lows.append(1)
        if a > 0:
            # strictly order-preserving renaming keeps distinct classes apart
            coeffs = [Fraction(0)] * nvars
            coeffs[a] = Fraction(1)
            coeffs[a - 1] = Fraction(-1)
            ineqs.append((tuple(coeffs), Fraction(1)))
    if not feasible(eqs, ineqs, nvars):
        raise RuntimeError("integer re-weighting infeasible; invariant violation")
    w = minimal_integer_point(eqs, ineqs, lows)
    return Grading(tuple((w[a], classes[a][1]) for a in range(nvars)))


def expanding_to_positive_grading(algebra: LieAlgebra, m: np.ndarray) -> Grading:
    """Positive grading preserved by the expanding automorphism m."""
    if not is_expanding(m):
        raise ValueError("map is not expanding")
    s = semisimple_part(m)
    if not is_automorphism(algebra, s):
        raise RuntimeError("semisimple part is not an automorphism")
    profile = norm_profile(algebra, s)
    classes = _norm_classes(profile)
    if any(v <= 1 for v, _ in classes):
        raise RuntimeError("expanding map produced a norm value <= 1")
    g = _grading_from_classes(algebra, classes, zero_for_value_one=False)
    _assert_extraction(algebra, g, m, "positive")
    return g


def selfcover_to_nonneg_grading(algebra: LieAlgebra, m: np.ndarray) -> Grading:
    """Non-negative, non-trivial grading preserved by m.

    Requires characteristic polynomial in Z[X] and |det| > 1.
    """
    if not is_automorphism(algebra, m):
        raise ValueError("matrix is not an automorphism of the algebra")
    if not is_z_charpoly(m):
        raise ValueError("characteristic polynomial is not in Z[X]")
    if abs(mx.det(m)) <= 1:
        raise ValueError("|det| > 1 required")
    s = semisimple_part(m)
    if not is_automorphism(algebra, s):
        raise RuntimeError("semisimple part is not an automorphism")
    profile = norm_profile(algebra, s)
    classes = _norm_classes(profile)
    g = _grading_from_classes(algebra, classes, zero_for_value_one=True)
    _assert_extraction(algebra, g, m, "nonnegative-nontrivial")
    return g


def _assert_extraction(algebra, g: Grading, m: np.ndarray, expected: str):
    from .grading import classify

    if classify(algebra, g) != expected:
        raise RuntimeError(f"extracted grading is not {expected}")
    if not preserved_by(g, m):
        raise RuntimeError("extracted grading is not preserved by the input map")


def commuting_preservation_check(
    algebra: LieAlgebra, grading: Grading, m: np.ndarray, psi: np.ndarray
) -> bool:
    """psi commutes with m, so it must preserve the extracted grading."""
    if not mx.mat_eq(m @ psi, psi @ m):
        raise ValueError("maps do not commute")
    return preserved_by(grading, psi)
