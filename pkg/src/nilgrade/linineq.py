"""Exact linear (in)equality solving over Q.

Feasibility is decided by Fourier-Motzkin elimination with Fractions; the
systems here are tiny (one variable per basis vector or per eigenvalue
class), so the classical doubly-exponential worst case never bites.
Canonical integer solutions are produced by shell enumeration: smallest
possible maximum coordinate first, lexicographically smallest within that
shell.  This makes solver output reproducible across implementations.

Constraints are (coefficients, rhs) pairs: ``sum(c*x) >= rhs`` for
inequalities and ``== rhs`` for equations.
"""

from __future__ import annotations

from fractions import Fraction

Constraint = tuple[tuple[Fraction, ...], Fraction]


def _normalized(coeffs, rhs) -> Constraint:
    scale = next((abs(c) for c in coeffs if c != 0), None)
    if scale is None:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def _substitute_equations(
    eqs: list[Constraint], ineqs: list[Constraint], nvars: int
) -> list[Constraint] | None:
    """Gauss-eliminate the equations, rewriting the inequalities over the
    free variables only.  Returns None when the equations alone are
    inconsistent.  Keeps Fourier-Motzkin small: weight systems are
    equation-heavy and leave few free variables."""
    rows = [list(coeffs) + [rhs] for coeffs, rhs in eqs]
    pivots: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        for col, prow in pivots:
            if row[col] != 0:
                f = row[col]
                row[:] = [a - f * b for a, b in zip(row, prow)]
        col = next((j for j in range(nvars) if row[j] != 0), None)
        if col is None:
            if row[nvars] != 0:
                return None
            continue
        f = row[col]
        row[:] = [a / f for a in row]
        for _, prow in pivots:
            if prow[col] != 0:
                g = prow[col]
                prow[:] = [a - g * b for a, b in zip(prow, row)]
        pivots.append((col, row))
    out: list[Constraint] = []
    for coeffs, rhs in ineqs:
        work = list(coeffs) + [-rhs]
        for col, prow in pivots:
            if work[col] != 0:
                f = work[col]
                work[:] = [a - f * b for a, b in zip(work, prow)]
        out.append((tuple(work[:nvars]), -work[nvars]))
    return out


def feasible(eqs: list[Constraint], ineqs: list[Constraint], nvars: int) -> bool:
    """Rational feasibility of {eqs hold, ineqs hold}.

    Equations are substituted out first; the residual inequalities go
    through Fourier-Motzkin elimination with row normalization/dedup.
    """
    reduced = _substitute_equations(eqs, ineqs, nvars)
    if reduced is None:
        return False
    rows = {_normalized(coeffs, rhs) for coeffs, rhs in reduced}
    for j in range(nvars):
        pos, neg, rest = [], [], set()
        for coeffs, rhs in rows:
            if coeffs[j] > 0:
                pos.append((coeffs, rhs))
            elif coeffs[j] < 0:
                neg.append((coeffs, rhs))
            else:
                rest.add((coeffs, rhs))
        for cp, bp in pos:
            for cn, bn in neg:
                lam, mu = -cn[j], cp[j]
                combo = [lam * a + mu * b for a, b in zip(cp, cn)]
                rest.add(_normalized(combo, lam * bp + mu * bn))
        rows = rest
    return all(rhs <= 0 for _, rhs in rows)


def minimal_integer_point(
    eqs: list[Constraint],
    ineqs: list[Constraint],
    lows: list[int],
    cap: int = 64,
) -> tuple[int, ...]:
    """Canonical integer solution: minimal max coordinate, then lex smallest.

    Assumes the rational system is feasible (check with `feasible` first)
    and that an integer solution with coordinates <= cap exists; the cap
    is an internal-error guard, not a search parameter.
    """
    nvars = len(lows)
    checks_at: list[list[tuple]] = [[] for _ in range(nvars)]
    for coeffs, rhs in eqs:
        top = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
        checks_at[top].append((coeffs, rhs, True))
    for coeffs, rhs in ineqs:
        top = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
        checks_at[top].append((coeffs, rhs, False))

    def search(t: int) -> tuple[int, ...] | None:
        vals: list[int] = []

        def rec(depth: int, seen_t: bool):
            if depth == nvars:
                return tuple(vals) if seen_t else None
            for v in range(lows[depth], t + 1):
                vals.append(v)
                ok = True
                for coeffs, rhs, is_eq in checks_at[depth]:
                    s = sum(c * x for c, x in zip(coeffs, vals) if c != 0)
                    if (s != rhs) if is_eq else (s < rhs):
                        ok = False
                        break
                if ok:
                    hit = rec(depth + 1, seen_t or v == t)
                    if hit is not None:
                        return hit
                vals.pop()
            return None

        return rec(0, False)

    for t in range(max([1] + list(lows)), cap + 1):
        hit = search(t)
        if hit is not None:
            return hit
    raise RuntimeError(f"no integer solution with coordinates <= {cap}")


def enumerate_integer_points(
    eqs: list[Constraint],
    lows: list[int],
    highs: list[int],
):
    """All integer points of box [lows, highs] satisfying the equations.

    Brute-force cross-check oracle used by the test suite; prunes on the
    first violated fully-assigned equation.
    """
    nvars = len(lows)
    checks_at: list[list[Constraint]] = [[] for _ in range(nvars)]
    for coeffs, rhs in eqs:
        top = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
        checks_at[top].append((coeffs, rhs))
    vals: list[int] = []
    out: list[tuple[int, ...]] = []

    def rec(depth: int):
        if depth == nvars:
            out.append(tuple(vals))
            return
        for v in range(lows[depth], highs[depth] + 1):
            vals.append(v)
            if all(
                sum(c * x for c, x in zip(coeffs, vals) if c != 0) == rhs
                for coeffs, rhs in checks_at[depth]
            ):
                rec(depth + 1)
            vals.pop()

    rec(0)
    return out
