"""Two independent a-number computations for a basic cover, plus the p-rank.

Fast path: for each basis kernel tuple, reconstruct the corresponding
differential on the cover level by level and record the coefficients that can
spoil regularity; the a-number is the nullity of that obstruction matrix.

Oracle path: expand the Cartier operator of the cover itself on the full
monomial basis of regular differentials (rewriting powers of y through
y^p = y + f) and take the kernel dimension there.  The paths share only the
polynomial layer, so their agreement is a meaningful end-to-end check.  The
oracle matrix also yields the p-rank as its stable rank.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bounds import lower_bound_single
from .curve import BasicCurve, domain_basis, level_exponents
from .fppoly import Differential, FpPoly, cartier, section_after_cartier
from .linalg import FpMatrix, _matmul_mod, _row_echelon_rank, rank_nullity


class KernelTuple:
    """One line differential per level, each killed by the Cartier operator.

    Component i must also respect the level degree cap reg_bound[i]; these
    two conditions carve out the domain of the obstruction map.
    """

    __slots__ = ("curve", "nu")

    def __init__(self, curve: BasicCurve, nu):
        nu = tuple(nu)
        if len(nu) != curve.p:
            raise ValueError(f"expected {curve.p} components, got {len(nu)}")
        for i, w in enumerate(nu):
            if w.p != curve.p:
                raise ValueError("component modulus mismatch")
            if not cartier(w).is_zero:
                raise ValueError(f"component {i} is not in the Cartier kernel")
            if w.degree > curve.reg_bound[i]:
                raise ValueError(f"component {i} exceeds degree cap {curve.reg_bound[i]}")
        self.curve = curve
        self.nu = nu

    @classmethod
    def unit(cls, curve: BasicCurve, level: int, exponent: int) -> "KernelTuple":
        """The basis tuple with x^exponent dx at the given level, 0 elsewhere."""
        nu = [Differential.zero(curve.p) for _ in range(curve.p)]
        nu[level] = Differential.monomial(curve.p, exponent)
        return cls(curve, nu)

    @classmethod
    def from_coefficients(cls, curve: BasicCurve, vec) -> "KernelTuple":
        """Build a tuple from coordinates in domain_basis order."""
        basis = domain_basis(curve)
        if len(vec) != len(basis):
            raise ValueError("coordinate vector has wrong length")
        polys = [dict() for _ in range(curve.p)]
        for (i, j), c in zip(basis, vec):
            polys[i][j] = c
        nu = []
        for i in range(curve.p):
            coeffs = [0] * (curve.reg_bound[i] + 1 if polys[i] else 0)
            for j, c in polys[i].items():
                coeffs[j] = c
            nu.append(Differential(FpPoly(curve.p, coeffs)))
        return cls(curve, nu)

    def __add__(self, other):
        if not isinstance(other, KernelTuple) or other.curve is not self.curve:
            return NotImplemented
        return KernelTuple(self.curve, [a + b for a, b in zip(self.nu, other.nu)])

    def scale(self, c: int) -> "KernelTuple":
        return KernelTuple(self.curve, [w.scale(c) for w in self.nu])

    def __eq__(self, other):
        return (
            isinstance(other, KernelTuple)
            and self.curve == other.curve
            and self.nu == other.nu
        )


class CoverDifferential:
    """A differential on the cover, stored as its tuple of y-power components."""

    __slots__ = ("curve", "omega")

    def __init__(self, curve: BasicCurve, omega):
        omega = tuple(omega)
        if len(omega) != curve.p:
            raise ValueError(f"expected {curve.p} components, got {len(omega)}")
        self.curve = curve
        self.omega = omega

    def __eq__(self, other):
        return (
            isinstance(other, CoverDifferential)
            and self.curve == other.curve
            and self.omega == other.omega
        )

    def __str__(self):
        parts = []
        for i in range(self.curve.p - 1, -1, -1):
            h = self.omega[i].h
            if h.is_zero:
                continue
            y = "" if i == 0 else (" y" if i == 1 else f" y^{i}")
            parts.append(f"({h}){y} dx")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=64)
def _neg_f_power_polys(curve: BasicCurve) -> tuple[FpPoly, ...]:
    """(-f)^e for e = 0 .. p-1."""
    neg = -curve.f
    out = [FpPoly.one(curve.p)]
    for _ in range(1, curve.p):
        out.append(out[-1] * neg)
    return tuple(out)


def _neg_f_power_arrays(curve: BasicCurve) -> list[np.ndarray]:
    return [np.array(g.coeffs, dtype=np.int64) for g in _neg_f_power_polys(curve)]


def reconstruct(curve: BasicCurve, v: KernelTuple) -> CoverDifferential:
    """The differential on the cover determined by a kernel tuple.

    Working down from the top level, each component picks up the projection
    (onto exponents = -1 mod p) of minus the binomial-weighted combination of
    the higher components multiplied by powers of -f.
    """
    p = curve.p
    negf = _neg_f_power_polys(curve)
    omega: list = [None] * p
    omega[p - 1] = v.nu[p - 1]
    for t in range(p - 2, -1, -1):
        acc = FpPoly.zero(p)
        for src in range(t + 1, p):
            h = omega[src].h
            if h.is_zero:
                continue
            scale = math.comb(src, t) % p
            if scale == 0:
                continue
            acc = acc + h * negf[src - t] * scale
        omega[t] = v.nu[t] + section_after_cartier(Differential(-acc))
    return CoverDifferential(curve, omega)


def is_regular(curve: BasicCurve, w: CoverDifferential) -> bool:
    """True when every component respects its level degree cap."""
    return all(w.omega[i].degree <= curve.reg_bound[i] for i in range(curve.p))


def obstruction_vector(curve: BasicCurve, v: KernelTuple) -> tuple[int, ...]:
    """Coefficients of the reconstructed differential at the obstruction slots.

    Level-major, slot exponent ascending; the zero vector exactly when the
    reconstruction is regular.
    """
    w = reconstruct(curve, v)
    out = []
    for i in range(curve.p):
        s = curve.slot_start[i]
        h = w.omega[i].h
        out.extend(h.coeff(s + u * curve.p) for u in range(curve.slot_count[i]))
    return tuple(out)


def obstruction_matrix(curve: BasicCurve) -> FpMatrix:
    """Matrix of the obstruction map over the kernel-tuple basis.

    Columns follow domain_basis order; rows are obstruction slots,
    level-major then exponent ascending.  Computed levelwise on numpy
    coefficient blocks, one block of basis columns at a time, which keeps the
    degree-500 family sweeps fast; columnwise agreement with
    obstruction_vector is covered by tests.
    """
    p = curve.p
    negf = _neg_f_power_arrays(curve)
    mat = np.zeros((curve.dim_obstruction, curve.dim_domain), dtype=np.int64)
    row_offset = []
    total = 0
    for t in range(p):
        row_offset.append(total)
        total += curve.slot_count[t]
    col = 0
    for i in range(p):
        exps = level_exponents(curve, i)
        k = len(exps)
        if k == 0:
            continue
        # omega[t]: level-t coefficient columns for all k basis tuples at once
        omega: dict[int, np.ndarray] = {}
        top = np.zeros((curve.reg_bound[i] + 1, k), dtype=np.int64)
        top[exps, np.arange(k)] = 1
        omega[i] = top
        for t in range(i - 1, -1, -1):
            acc = np.zeros((curve.comp_bound[t] + 1, k), dtype=np.int64)
            for src in range(t + 1, i + 1):
                w = omega[src]
                if w.shape[0] == 0:
                    continue
                scale = math.comb(src, t) % p
                if scale == 0:
                    continue
                g = negf[src - t]
                for e in np.flatnonzero(g):
                    acc[e : e + w.shape[0]] += (int(g[e]) * scale) * w
            proj = np.zeros_like(acc)
            proj[p - 1 :: p] = (-acc[p - 1 :: p]) % p
            omega[t] = proj
        # the level-i component is the original monomial: degree cap respected,
        # so only levels below i can reach obstruction slots
        for t in range(i):
            r_t = curve.slot_count[t]
            if r_t == 0:
                continue
            block = omega[t][curve.slot_start[t] :: p]
            mat[row_offset[t] : row_offset[t] + r_t, col : col + k] = block
        col += k
    return FpMatrix(p, mat)


def a_number_fast(curve: BasicCurve) -> int:
    """a-number as the nullity of the obstruction matrix."""
    return rank_nullity(obstruction_matrix(curve))[1]


def cartier_matrix(curve: BasicCurve) -> FpMatrix:
    """Matrix of the Cartier operator of the cover on regular differentials.

    Basis: x^j y^i dx with 0 <= j <= reg_bound[i], level-major; its size is
    the genus.  The operator preserves the regular span; the implementation
    checks this instead of assuming it.
    """
    p = curve.p
    negf = _neg_f_power_arrays(curve)
    level_off = []
    total = 0
    for i in range(p):
        level_off.append(total)
        total += max(curve.reg_bound[i] + 1, 0)
    if total != curve.genus:
        raise AssertionError("regular basis size disagrees with the genus")
    mat = np.zeros((total, total), dtype=np.int64)
    col = 0
    for i in range(p):
        for j in range(curve.reg_bound[i] + 1):
            for t in range(i + 1):
                scale = math.comb(i, t) % p
                if scale == 0:
                    continue
                g = negf[i - t]
                # x^e of (-f)^(i-t) contributes x^(e+j), surviving when
                # e + j = -1 (mod p) and landing at exponent (e+j+1)/p - 1
                start = (p - 1 - j) % p
                offs = np.arange(start, len(g), p)
                if offs.size == 0:
                    continue
                vals = g[offs]
                keep = np.flatnonzero(vals)
                if keep.size == 0:
                    continue
                offs = offs[keep]
                vals = vals[keep]
                exps = (j + offs + 1) // p - 1
                if int(exps[-1]) > curve.reg_bound[t]:
                    raise AssertionError("Cartier image left the regular span")
                rows = level_off[t] + exps
                mat[rows, col] = (mat[rows, col] + scale * vals) % p
            col += 1
    return FpMatrix(p, mat)


def a_number_oracle(curve: BasicCurve) -> int:
    """a-number as the nullity of the full Cartier matrix."""
    return rank_nullity(cartier_matrix(curve))[1]


def p_rank(curve: BasicCurve) -> int:
    """Stable rank of the Cartier matrix, i.e. the rank of its genus-th power.

    rank is nonincreasing under powers and frozen once it repeats, so squaring
    with early exit gives the same value without computing the full power.
    """
    m = cartier_matrix(curve)
    if m.rows == 0:
        return 0
    b = m.a
    r = _row_echelon_rank(b, curve.p)
    e = 1
    while r > 0 and e < curve.genus:
        b = _matmul_mod(b, b, curve.p)
        e *= 2
        nxt = _row_echelon_rank(b, curve.p)
        if nxt == r:
            break
        r = nxt
    return r


@dataclass(frozen=True)
class ANumberReport:
    """a-number of one cover together with the standard companion invariants."""

    a: int
    method: str
    genus: int
    p_rank: int
    lower_bound: int
    dim_domain: int
    dim_obstruction: int


def report(curve: BasicCurve, method: str = "fast") -> ANumberReport:
    """Assemble the a-number (by the requested method) and companions."""
    if method == "fast":
        a = a_number_fast(curve)
    elif method == "oracle":
        a = a_number_oracle(curve)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'fast' or 'oracle'")
    bound = lower_bound_single(curve.p, curve.d)
    if not bound <= a <= curve.genus:
        raise AssertionError(f"a = {a} outside [{bound}, {curve.genus}]")
    return ANumberReport(
        a=a,
        method=method,
        genus=curve.genus,
        p_rank=p_rank(curve),
        lower_bound=bound,
        dim_domain=curve.dim_domain,
        dim_obstruction=curve.dim_obstruction,
    )
