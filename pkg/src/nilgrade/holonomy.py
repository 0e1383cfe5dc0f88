"""Finite holonomy data and the equivariant expansion / self-cover criteria.

A holonomy group is an explicit finite set of automorphisms.  The two
theorem-level checks accept a certificate (a grading or a commuting
automorphism) and report which condition it witnesses; the restricted
search handles monomial holonomy by adding weight equalities along the
induced basis permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import matrices as mx
from . import specmaps
from .grading import Grading, classify, preserved_by, verify_grading
from .liealg import LieAlgebra, is_automorphism
from .linineq import feasible, minimal_integer_point
from .serialize import grading_to_dict, matrix_to_lists
from .verdict import Verdict


@dataclass(frozen=True)
class HolonomyGroup:
    """Explicit finite matrix group, identity first, deterministic order."""

    elements: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _key(m: np.ndarray) -> tuple:
    return tuple(m.flat)


def close_group(generators: list[np.ndarray], cap: int = 1024) -> HolonomyGroup:
    """Close under products (breadth-first, lexicographic within levels).

    A finite set of invertible matrices closed under multiplication is a
    group, so inverses come for free once the closure stabilizes; if it
    exceeds `cap` elements the group is reported as not finite within
    bound.
    """
    if not generators:
        raise ValueError("at least one generator required")
    n = generators[0].shape[0]
    gens = []
    for g in generators:
        if g.shape != (n, n):
            raise ValueError("generator dimensions disagree")
        if mx.det(g) == 0:
            raise ValueError("generators must be invertible")
        gens.append(g)
    ident = mx.identity(n)
    seen = {_key(ident)}
    ordered = [ident]
    level = [ident]
    while level:
        nxt = []
        for a in level:
            for g in gens:
                prod = a @ g
                k = _key(prod)
                if k not in seen:
                    seen.add(k)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise ValueError(f"not finite within bound {cap}")
        nxt.sort(key=_key)
        ordered.extend(nxt)
        level = nxt
    return HolonomyGroup(tuple(ordered))


def holonomy_is_valid(algebra: LieAlgebra, group: HolonomyGroup) -> bool:
    return all(is_automorphism(algebra, f) for f in group)


def preserves_grading_all(group: HolonomyGroup, grading: Grading) -> bool:
    return all(preserved_by(grading, f) for f in group)


def commutes_with_all(m: np.ndarray, group: HolonomyGroup) -> bool:
    return all(mx.mat_eq(m @ f, f @ m) for f in group)


def _first_noncommuting(m: np.ndarray, group: HolonomyGroup) -> int | None:
    for idx, f in enumerate(group):
        if not mx.mat_eq(m @ f, f @ m):
            return idx
    return None


def check_expinfra(algebra: LieAlgebra, group: HolonomyGroup, certificate) -> Verdict:
    """Expansion criterion: certificate witnesses condition 2 or 3.

    Condition 2: a verified positive grading preserved by all of F.
    Condition 3: an expanding automorphism commuting with all of F.
    """
    if not holonomy_is_valid(algebra, group):
        raise ValueError("holonomy elements must be automorphisms of the algebra")
    if isinstance(certificate, Grading):
        return _check_grading_condition(
            algebra, group, certificate, "expinfra", "positive"
        )
    if isinstance(certificate, np.ndarray):
        m = certificate
        if not is_automorphism(algebra, m):
            return Verdict(
                "reject",
                condition="expinfra-cond-3",
                certificate={"matrix": matrix_to_lists(m)},
                diagnostics=["certificate map is not an automorphism"],
            )
        if not specmaps.is_expanding(m):
            return Verdict(
                "reject",
                condition="expinfra-cond-3",
                certificate={"matrix": matrix_to_lists(m)},
                diagnostics=["certificate map is not expanding"],
            )
        bad = _first_noncommuting(m, group)
        if bad is not None:
            return Verdict(
                "reject",
                condition="expinfra-cond-3",
                certificate={
                    "matrix": matrix_to_lists(m),
                    "noncommuting_element": matrix_to_lists(group.elements[bad]),
                },
                diagnostics=[f"map fails to commute with holonomy element {bad}"],
            )
        return Verdict(
            "accept",
            condition="expinfra-cond-3",
            certificate={"matrix": matrix_to_lists(m)},
            diagnostics=["expanding automorphism commutes with the holonomy group"],
        )
    raise ValueError("certificate must be a Grading or an automorphism matrix")


def check_covinfra(algebra: LieAlgebra, group: HolonomyGroup, certificate) -> Verdict:
    """Self-cover criterion: non-negative nontrivial grading, or a commuting
    automorphism with Z[X] characteristic polynomial and |det| > 1."""
    if not holonomy_is_valid(algebra, group):
        raise ValueError("holonomy elements must be automorphisms of the algebra")
    if isinstance(certificate, Grading):
        return _check_grading_condition(
            algebra, group, certificate, "covinfra", "nonnegative-nontrivial"
        )
    if isinstance(certificate, np.ndarray):
        m = certificate
        problems = []
        if not is_automorphism(algebra, m):
            problems.append("certificate map is not an automorphism")
        else:
            if not specmaps.is_z_charpoly(m):
                problems.append("characteristic polynomial is not in Z[X]")
            if abs(mx.det(m)) <= 1:
                problems.append("|det| is not > 1")
        if problems:
            return Verdict(
                "reject",
                condition="covinfra-cond-3",
                certificate={"matrix": matrix_to_lists(m)},
                diagnostics=problems,
            )
        bad = _first_noncommuting(m, group)
        if bad is not None:
            return Verdict(
                "reject",
                condition="covinfra-cond-3",
                certificate={
                    "matrix": matrix_to_lists(m),
                    "noncommuting_element": matrix_to_lists(group.elements[bad]),
                },
                diagnostics=[f"map fails to commute with holonomy element {bad}"],
            )
        det = mx.det(m)
        return Verdict(
            "accept",
            condition="covinfra-cond-3",
            certificate={"matrix": matrix_to_lists(m), "det": str(det)},
            diagnostics=["self-cover automorphism commutes with the holonomy group"],
        )
    raise ValueError("certificate must be a Grading or an automorphism matrix")


def _check_grading_condition(algebra, group, grading, theorem, wanted) -> Verdict:
    cond = f"{theorem}-cond-2"
    v = verify_grading(algebra, grading)
    if not v.accepted():
        return Verdict(
            "reject", condition=cond, certificate=v.certificate, diagnostics=v.diagnostics
        )
    label = classify(algebra, grading)
    labels_ok = {"positive"} if wanted == "positive" else {"positive", "nonnegative-nontrivial"}
    if label not in labels_ok:
        return Verdict(
            "reject",
            condition=cond,
            certificate=grading_to_dict(grading),
            diagnostics=[f"grading classifies as {label}, need {wanted}"],
        )
    if not preserves_grading_all(group, grading):
        bad = next(
            i for i, f in enumerate(group) if not preserved_by(grading, f)
        )
        return Verdict(
            "reject",
            condition=cond,
            certificate={
                "grading": grading_to_dict(grading),
                "violating_element": matrix_to_lists(group.elements[bad]),
            },
            diagnostics=[f"holonomy element {bad} does not preserve the grading"],
        )
    return Verdict(
        "accept",
        condition=cond,
        certificate=grading_to_dict(grading),
        diagnostics=[f"{label} grading preserved by all {len(group)} holonomy elements"],
    )


# -- restricted equivariant search -------------------------------------------


def monomial_permutation(m: np.ndarray) -> list[int] | None:
    """sigma with m e_j = c e_{sigma(j)} if m is monomial, else None."""
    n = m.shape[0]
    sigma = []
    for j in range(n):
        nz = [i for i in range(n) if m[i, j] != 0]
        if len(nz) != 1:
            return None
        sigma.append(nz[0])
    if sorted(sigma) != list(range(n)):
        return None
    return sigma


def equivariant_weight_search(
    algebra: LieAlgebra, group: HolonomyGroup, mode: str
) -> tuple[int, ...] | None:
    """Weight system invariant under a monomial holonomy group.

    mode is "positive" or "nonneg-nontrivial".  Non-monomial holonomy is
    outside the supported search class; supply a certificate instead.
    """
    from .grading import _constraint_rows, _unit_row

    if mode not in ("positive", "nonneg-nontrivial"):
        raise ValueError(f"unknown mode {mode!r}")
    n = algebra.dim
    eqs = _constraint_rows(algebra)
    for f in group:
        sigma = monomial_permutation(f)
        if sigma is None:
            raise ValueError("search unsupported, use certificate mode")
        for j in range(n):
            if sigma[j] != j:
                coeffs = [Fraction(0)] * n
                coeffs[j] += 1
                coeffs[sigma[j]] -= 1
                eqs.append((tuple(coeffs), Fraction(0)))
    if mode == "positive":
        bound = [_unit_row(n, i) for i in range(n)]
        if not feasible(eqs, bound, n):
            return None
        return minimal_integer_point(eqs, [], lows=[1] * n)
    nonneg = [_unit_row(n, i, Fraction(0)) for i in range(n)]
    if not any(feasible(eqs, nonneg + [_unit_row(n, i)], n) for i in range(n)):
        return None
    return minimal_integer_point(eqs, [], lows=[0] * n)
