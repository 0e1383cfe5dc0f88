"""JSON wire formats.

Rationals travel as "p/q" strings (the "/q" omitted when q = 1, which is
exactly `str(Fraction)`); matrices as row-major nested arrays of such
strings; algebras as {"dim": n, "brackets": [{"i", "j", "terms"}]} with
1-indexed i < j and omitted brackets zero.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import matrices as mx
from .grading import Grading
from .liealg import LieAlgebra


def _bad(msg: str) -> ValueError:
    return ValueError(f"malformed input: {msg}")


def parse_fraction(s) -> Fraction:
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise _bad(f"cannot parse rational {s!r}") from e
    if isinstance(s, int):
        return Fraction(s)
    raise _bad(f"rational entries must be strings or integers, got {type(s).__name__}")


def vector_to_list(v: np.ndarray) -> list[str]:
    return [str(e) for e in v]


def vector_from_list(data) -> np.ndarray:
    if not isinstance(data, list):
        raise _bad("vector must be a JSON array")
    return mx.rvec([parse_fraction(e) for e in data])


def matrix_to_lists(m: np.ndarray) -> list[list[str]]:
    return [[str(e) for e in row] for row in m]


def matrix_from_lists(data) -> np.ndarray:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise _bad("matrix must be a non-empty array of rows")
    if any(len(r) != len(data[0]) for r in data):
        raise _bad("matrix rows must have equal length")
    return mx.rmat([[parse_fraction(e) for e in row] for row in data])


# -- Lie algebras --------------------------------------------------------


def algebra_to_dict(algebra: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(algebra.table):
        vec = algebra.table[(i, j)]
        terms = [{"k": k + 1, "c": str(vec[k])} for k in range(algebra.dim) if vec[k] != 0]
        brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
    return {"dim": algebra.dim, "brackets": brackets}


def algebra_from_dict(data) -> LieAlgebra:
    if not isinstance(data, dict):
        raise _bad("algebra file must contain a JSON object")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise _bad('"dim" must be a positive integer')
    table: dict[tuple[int, int], list[Fraction]] = {}
    for entry in data.get("brackets", []):
        if not isinstance(entry, dict):
            raise _bad("bracket entries must be objects")
        i, j = entry.get("i"), entry.get("j")
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
            raise _bad(f"bracket indices must satisfy 1 <= i < j <= dim, got ({i}, {j})")
        if (i - 1, j - 1) in table:
            raise _bad(f"duplicate bracket ({i}, {j})")
        vec = [Fraction(0)] * dim
        for term in entry.get("terms", []):
            k = term.get("k")
            if not (isinstance(k, int) and 1 <= k <= dim):
                raise _bad(f"bracket ({i}, {j}) has target index {k} out of range")
            vec[k - 1] += parse_fraction(term.get("c"))
        table[(i - 1, j - 1)] = vec
    return LieAlgebra(dim, table)


# -- weights and gradings --------------------------------------------------


def weights_to_dict(weights) -> dict:
    return {"weights": [int(w) for w in weights]}


def weights_from_dict(data) -> tuple[int, ...]:
    if not isinstance(data, dict) or "weights" not in data:
        raise _bad('expected {"weights": [...]}')
    ws = data["weights"]
    if not isinstance(ws, list) or not all(isinstance(w, int) for w in ws):
        raise _bad("weights must be integers")
    return tuple(ws)


def grading_to_dict(grading: Grading) -> dict:
    return {
        "components": [
            {"weight": w, "basis": [vector_to_list(s[:, c]) for c in range(s.shape[1])]}
            for w, s in grading.components
        ]
    }


def grading_from_dict(data) -> Grading:
    if not isinstance(data, dict) or "components" not in data:
        raise _bad('expected {"components": [...]}')
    comps = []
    for entry in data["components"]:
        if not isinstance(entry, dict) or "weight" not in entry or "basis" not in entry:
            raise _bad("each component needs a weight and a basis")
        w = entry["weight"]
        if not isinstance(w, int):
            raise _bad("component weights must be integers")
        vecs = [vector_from_list(v) for v in entry["basis"]]
        if not vecs:
            raise _bad("component basis must be non-empty")
        comps.append((w, np.stack(vecs, axis=1)))
    comps.sort(key=lambda ws: ws[0])
    return Grading(tuple(comps))


# -- holonomy, profiles, certificates ---------------------------------------


def holonomy_payload(data) -> tuple[list[np.ndarray], int]:
    if not isinstance(data, dict) or "generators" not in data:
        raise _bad('expected {"generators": [...], "cap": n}')
    gens = [matrix_from_lists(g) for g in data["generators"]]
    cap = data.get("cap", 1024)
    if not isinstance(cap, int) or cap < 1:
        raise _bad('"cap" must be a positive integer')
    return gens, cap


def polynomial_to_list(p) -> list[str]:
    return [str(c) for c in p.coeffs]


def profile_to_dict(profile) -> dict:
    return {
        "lcm_degree": profile.lcm_degree,
        "entries": [
            {
                "factor": polynomial_to_list(e.factor),
                "degree": e.degree,
                "basis": [vector_to_list(e.subspace[:, c]) for c in range(e.subspace.shape[1])],
                "value": str(e.value),
            }
            for e in profile.entries
        ],
        "values": [str(v) for v in profile.flattened_values()],
    }


def lattice_certificate_to_dict(cert) -> dict:
    return {
        "primes": list(cert.primes),
        "modulus": cert.modulus,
        "k": cert.k,
        "conjugated_power": matrix_to_lists(cert.conjugated_power),
        "order_bound": cert.order_bound,
    }
