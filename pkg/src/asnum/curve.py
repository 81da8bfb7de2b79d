"""Validated model of a cover y^p - y = f of the line branched only at infinity.

A differential on the cover is a tuple of line differentials, one per power
of y.  All the per-level integer data needed downstream is derived here once:
degree caps for regular components, degree caps for reconstructed components,
and the arithmetic progression of "obstruction" exponents in between.
"""

from dataclasses import dataclass

from .fppoly import FpPoly, normalize_artin_schreier
from .numutil import ceil_div


@dataclass(frozen=True)
class BasicCurve:
    """y^p - y = f with f normalized, plus derived integer data.

    Per level i (the coefficient of y^i in a differential on the cover):

      reg_bound[i]    largest exponent a regular component may carry
      comp_bound[i]   largest exponent a reconstructed component may carry
      slot_start[i]   first obstruction exponent, or None when there are none
      slot_count[i]   number of obstruction exponents

    Obstruction exponents are the e = -1 (mod p) with
    reg_bound[i] < e <= comp_bound[i]; a reconstructed differential is regular
    exactly when its coefficients vanish at every one of them.
    """

    p: int
    f: FpPoly
    d: int
    reg_bound: tuple[int, ...]
    comp_bound: tuple[int, ...]
    slot_start: tuple
    slot_count: tuple[int, ...]
    genus: int
    dim_domain: int
    dim_obstruction: int

    @classmethod
    def from_poly(cls, p: int, f: FpPoly) -> "BasicCurve":
        """Normalize f and fill in the derived data.

        Raises SplitCoverError when f reduces to a^p - a.  The normalized
        polynomial never has degree divisible by p (such monomials are folded
        away), but the guard is kept as a cheap sanity check.
        """
        if f.p != p:
            raise ValueError(f"polynomial is over F_{f.p}, expected F_{p}")
        g = normalize_artin_schreier(f)
        d = int(g.degree)
        if d % p == 0:
            raise ValueError("ramification invariant divisible by p")
        reg = tuple(ceil_div((p - 1 - i) * d, p) - 2 for i in range(p))
        comp = tuple((p - 1 - i) * d - 2 for i in range(p))
        starts = []
        counts = []
        for i in range(p):
            s = reg[i] + 1 + (p - 1 - (reg[i] + 1)) % p
            if s <= comp[i]:
                starts.append(s)
                counts.append((comp[i] - s) // p + 1)
            else:
                starts.append(None)
                counts.append(0)
        genus = (p - 1) * (d - 1) // 2
        dim_domain = sum(
            ceil_div((p - 1 - i) * d, p) - ceil_div((p - 1 - i) * d, p * p)
            for i in range(p)
        )
        return cls(
            p=p,
            f=g,
            d=d,
            reg_bound=reg,
            comp_bound=comp,
            slot_start=tuple(starts),
            slot_count=tuple(counts),
            genus=genus,
            dim_domain=dim_domain,
            dim_obstruction=sum(counts),
        )


def level_exponents(curve: BasicCurve, i: int) -> list[int]:
    """Exponents j usable in the level-i component of a kernel tuple.

    These are 0 <= j <= reg_bound[i] with j != -1 (mod p), i.e. the monomial
    differentials x^j dx killed by the Cartier operator within the degree cap.
    """
    p = curve.p
    return [j for j in range(curve.reg_bound[i] + 1) if (j + 1) % p != 0]


def domain_basis(curve: BasicCurve) -> list[tuple[int, int]]:
    """All (level, exponent) pairs indexing the kernel-tuple basis, level-major."""
    return [(i, j) for i in range(curve.p) for j in level_exponents(curve, i)]
