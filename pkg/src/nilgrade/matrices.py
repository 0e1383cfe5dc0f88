"""Exact linear algebra over Q on numpy object arrays of Fractions.

Matrices are plain `np.ndarray` with ``dtype=object`` holding
`fractions.Fraction` entries; `@`, `+`, scalar `*` all stay exact.
Everything that numpy cannot do exactly on such arrays (determinants,
inverses, echelon forms, kernels) is implemented here by Gaussian
elimination over Q.

Also home to the integer-lattice utilities: column-style Hermite normal
form, exact lattice membership, and matrix orders in GL(n, Z/m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

import numpy as np

from .polynomials import Polynomial


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def rvec(entries) -> np.ndarray:
    return np.array([frac(e) for e in entries], dtype=object)


def rmat(rows) -> np.ndarray:
    """Matrix from nested row data (ints, 'p/q' strings or Fractions)."""
    data = [[frac(e) for e in row] for row in rows]
    if data and any(len(r) != len(data[0]) for r in data):
        raise ValueError("ragged rows")
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, e in enumerate(row):
            out[i, j] = e
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out[...] = Fraction(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def diag(entries) -> np.ndarray:
    es = [frac(e) for e in entries]
    out = zeros(len(es), len(es))
    for i, e in enumerate(es):
        out[i, i] = e
    return out


def mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((a == b).all())


def is_zero_mat(a: np.ndarray) -> bool:
    return bool((a == Fraction(0)).all())


def is_integral(a: np.ndarray) -> bool:
    return all(e.denominator == 1 for e in a.flat)


def trace(a: np.ndarray) -> Fraction:
    return sum((a[i, i] for i in range(a.shape[0])), Fraction(0))


def mat_pow(a: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        return mat_pow(inverse(a), -k)
    out = identity(a.shape[0])
    base = a
    while k:
        if k & 1:
            out = out @ base
        base = base @ base if k > 1 else base
        k >>= 1
    return out


def _require_square(m: np.ndarray) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    return m.shape[0]


# -- elimination ---------------------------------------------------------


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and its pivot columns."""
    m = a.copy()
    nr, nc = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i, c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = m[r] * (Fraction(1) / m[r, c])
        for i in range(nr):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def rank(a: np.ndarray) -> int:
    return len(rref(a)[1])


def det(a: np.ndarray) -> Fraction:
    n = _require_square(a)
    m = a.copy()
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i, c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[[c, pr]] = m[[pr, c]]
            d = -d
        d *= m[c, c]
        inv = Fraction(1) / m[c, c]
        for i in range(c + 1, n):
            if m[i, c] != 0:
                m[i] = m[i] - m[i, c] * inv * m[c]
    return d


def inverse(a: np.ndarray) -> np.ndarray:
    n = _require_square(a)
    aug = np.concatenate([a, identity(n)], axis=1)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One exact solution of a x = b (free variables 0), or None."""
    nr, nc = a.shape
    aug = np.concatenate([a, b.reshape(nr, 1)], axis=1)
    red, pivots = rref(aug)
    if nc in pivots:
        return None
    x = np.array([Fraction(0)] * nc, dtype=object)
    for r, c in enumerate(pivots):
        x[c] = red[r, nc]
    return x


def nullspace(a: np.ndarray) -> np.ndarray:
    """Canonical kernel basis as columns (free variable = 1 pattern)."""
    nr, nc = a.shape
    red, pivots = rref(a)
    free = [c for c in range(nc) if c not in pivots]
    out = zeros(nc, len(free))
    for k, fc in enumerate(free):
        out[fc, k] = Fraction(1)
        for r, pc in enumerate(pivots):
            out[pc, k] = -red[r, fc]
    return out


# -- column spaces (subspaces are matrices whose columns span them) -------


def col_basis(a: np.ndarray) -> np.ndarray:
    """Canonical basis of the column space, as columns (echelon form).

    Two matrices span the same column space iff their col_basis arrays
    are identical, so subspace equality is array equality.
    """
    red, pivots = rref(a.T)
    return red[: len(pivots)].T.copy()


def col_space_contains(space: np.ndarray, v: np.ndarray) -> bool:
    return solve(space, v) is not None


def col_space_contains_all(space: np.ndarray, w: np.ndarray) -> bool:
    return all(col_space_contains(space, w[:, j]) for j in range(w.shape[1]))


def col_spaces_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return mat_eq(col_basis(a), col_basis(b))


def hstack(mats: list[np.ndarray]) -> np.ndarray:
    return np.concatenate(mats, axis=1)


# -- characteristic / minimal polynomials ---------------------------------


def charpoly(m: np.ndarray) -> Polynomial:
    """Monic characteristic polynomial det(X I - M), Faddeev-LeVerrier."""
    n = _require_square(m)
    coeffs_desc = [Fraction(1)]
    a = m.copy()
    c = -trace(a)
    coeffs_desc.append(c)
    for k in range(2, n + 1):
        a = m @ (a + c * identity(n))
        c = -trace(a) / k
        coeffs_desc.append(c)
    return Polynomial(reversed(coeffs_desc))


def eval_poly(p: Polynomial, m: np.ndarray) -> np.ndarray:
    n = _require_square(m)
    acc = zeros(n, n)
    for c in reversed(p.coeffs):
        acc = acc @ m + c * identity(n)
    return acc


def minpoly(m: np.ndarray) -> Polynomial:
    """Monic minimal polynomial via first linear dependence of powers."""
    n = _require_square(m)
    powers = [identity(n)]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ m)
        stacked = np.stack([p.reshape(n * n) for p in powers[:k]], axis=1)
        x = solve(stacked, powers[k].reshape(n * n))
        if x is not None:
            return Polynomial(list(-x) + [Fraction(1)])
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def is_nilpotent(m: np.ndarray) -> bool:
    n = _require_square(m)
    return is_zero_mat(mat_pow(m, n))


def primary_decomposition(m: np.ndarray) -> list[tuple[Polynomial, np.ndarray]]:
    """Split Q^n into ker p_i(M)^{e_i} over the irreducible factors p_i.

    Components come back in the canonical factor order (degree, then
    coefficients); each subspace is a canonical column basis and is
    M-invariant.
    """
    from .polynomials import factor_over_q

    _require_square(m)
    out = []
    for p, mult in factor_over_q(charpoly(m)):
        k = mat_pow(eval_poly(p, m), mult)
        out.append((p, col_basis(nullspace(k))))
    return out


# -- integer lattices ------------------------------------------------------


@dataclass(frozen=True)
class IntegerLattice:
    """Z-span of the columns of an invertible rational matrix."""

    basis: np.ndarray

    def __post_init__(self):
        _require_square(self.basis)
        if det(self.basis) == 0:
            raise ValueError("lattice basis must be invertible")
        object.__setattr__(self, "basis", self.basis.copy())
        self.basis.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def hnf(a: np.ndarray) -> np.ndarray:
    """Column-style Hermite normal form of a nonsingular integer matrix.

    Lower triangular, positive pivots, entries left of each pivot reduced
    into [0, pivot).  Unique for the column lattice, so certificates that
    embed it are byte-stable.
    """
    n = _require_square(a)
    if not is_integral(a):
        raise ValueError("integer matrix required")
    h = np.array([[int(e) for e in row] for row in a], dtype=object)
    for r in range(n):
        while True:
            cols = [c for c in range(r, n) if h[r, c] != 0]
            if not cols:
                raise ValueError("matrix is singular")
            cmin = min(cols, key=lambda c: abs(h[r, c]))
            if cmin != r:
                h[:, [r, cmin]] = h[:, [cmin, r]]
            done = True
            for c in range(r + 1, n):
                if h[r, c] != 0:
                    q = h[r, c] // h[r, r]
                    h[:, c] = h[:, c] - q * h[:, r]
                    done = done and h[r, c] == 0
            if done:
                break
        if h[r, r] < 0:
            h[:, r] = -h[:, r]
        for c in range(r):
            q = h[r, c] // h[r, r]
            if q != 0:
                h[:, c] = h[:, c] - q * h[:, r]
    return h


def _scaled_integer_basis(lattice: IntegerLattice) -> tuple[np.ndarray, int]:
    d = 1
    for e in lattice.basis.flat:
        d = d * e.denominator // int_gcd(d, e.denominator)
    scaled = np.array([[int(e * d) for e in row] for row in lattice.basis], dtype=object)
    return scaled, d


def hnf_membership(v: np.ndarray, lattice: IntegerLattice) -> bool:
    """Exact test for v in the Z-span of the lattice basis."""
    n = lattice.dim
    if v.shape != (n,):
        raise ValueError(f"vector of length {n} required, got shape {v.shape}")
    scaled, d = _scaled_integer_basis(lattice)
    h = hnf(scaled)
    target = [frac(e) * d for e in v]
    y = [Fraction(0)] * n
    for r in range(n):
        acc = target[r]
        for c in range(r):
            acc -= h[r, c] * y[c]
        y[r] = Fraction(acc, h[r, r])
    return all(e.denominator == 1 for e in y)


def _mod_reduce(m: np.ndarray, modulus: int) -> np.ndarray:
    return np.array([[int(e) % modulus for e in row] for row in m], dtype=object)


def _int_identity(n: int) -> np.ndarray:
    return np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)], dtype=object)


def _mat_pow_mod(base: np.ndarray, k: int, modulus: int) -> np.ndarray:
    out = _int_identity(base.shape[0])
    b = base % modulus
    while k:
        if k & 1:
            out = (out @ b) % modulus
        b = (b @ b) % modulus if k > 1 else b
        k >>= 1
    return out


def _order_mod_prime_power(m: np.ndarray, p: int, e: int) -> int:
    """Order in GL(n, Z_{p^e}): scan the order mod p, then lift p-adically.

    The kernel of GL(n, Z_{p^e}) -> GL(n, Z_p) is a p-group, so the order
    mod p^e is (order mod p) * p^j with j found by repeated p-th powers.
    """
    n = m.shape[0]
    ident = _int_identity(n)
    base_p = _mod_reduce(m, p)
    acc = base_p
    r = 1
    cap = p ** (n * n)
    while not (acc == ident).all():
        acc = (acc @ base_p) % p
        r += 1
        if r > cap:  # pragma: no cover - impossible when det is a unit
            raise RuntimeError("order search exceeded the group-order cap")
    q = p**e
    b = _mat_pow_mod(_mod_reduce(m, q), r, q)
    order = r
    while not (b == _int_identity(n)).all():
        b = _mat_pow_mod(b, p, q)
        order *= p
    return order


def order_mod(m: np.ndarray, modulus: int) -> int:
    """Smallest k >= 1 with M^k = I mod modulus (M integral, det invertible)."""
    from .intutil import factor_int

    _require_square(m)
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if not is_integral(m):
        raise ValueError("integer matrix required")
    if modulus == 1:
        return 1
    d = int(det(m)) % modulus
    if int_gcd(d, modulus) != 1:
        raise ValueError(f"det {d} not invertible mod {modulus}")
    order = 1
    for p, e in factor_int(modulus).items():
        o = _order_mod_prime_power(m, p, e)
        order = order * o // int_gcd(order, o)
    return order
