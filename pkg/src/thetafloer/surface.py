"""Cyclic covers y^d = f(x) of the projective line and their fixed-point data."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .errors import InputError, NoFixedPoints, TooFewBranchPoints
from .exactnum import check_order


class LowGenusWarning(UserWarning):
    """Raised (as a warning) for genus-1 surfaces."""


@dataclass(frozen=True)
class CyclicCurve:
    """The Z_d-curve y^d = f(x); only root multiplicities of f matter."""

    order: int
    finite_mults: tuple[int, ...]

    def __post_init__(self):
        check_order(self.order)
        object.__setattr__(self, "finite_mults", tuple(self.finite_mults))
        if not self.finite_mults:
            raise InputError("a cyclic curve needs at least one root")
        if any(not isinstance(a, int) or a < 1 for a in self.finite_mults):
            raise InputError(f"root multiplicities must be positive integers: {self.finite_mults}")


@dataclass(frozen=True)
class RamificationData:
    """Rotation exponents e_p: the differential at fixed point p is exp(2 pi i e_p / d)."""

    order: int
    rotations: tuple[int, ...]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        check_order(self.order)
        object.__setattr__(self, "rotations", tuple(self.rotations))
        for e in self.rotations:
            if not isinstance(e, int) or not 1 <= e <= self.order - 1:
                raise InputError(f"rotation exponent {e!r} not in 1..{self.order - 1}")


def ramification_from_curve(c: CyclicCurve) -> RamificationData:
    d = c.order
    rotations = []
    notes = []
    for idx, a in enumerate(c.finite_mults):
        res = a % d
        if res == 0:
            notes.append(f"root {idx} has multiplicity {a} = 0 mod {d}: unramified, skipped")
            continue
        rotations.append(pow(res, -1, d))
    total = sum(c.finite_mults)
    if total % d:
        res = -total % d
        rotations.append(pow(res, -1, d))
        notes.append(f"point at infinity with multiplicity residue {res}")
    if not rotations:
        raise NoFixedPoints(f"every multiplicity is divisible by {d}; the cover is unramified")
    return RamificationData(d, tuple(rotations), tuple(notes))


def genus(r: RamificationData) -> int:
    """Riemann-Hurwitz for a cyclic cover of prime degree fully ramified at each fixed point."""
    b = len(r.rotations)
    if b < 3:
        raise TooFewBranchPoints(f"need at least 3 fixed points, got {b}")
    g = (r.order - 1) * (b - 2) // 2
    if g == 1:
        warnings.warn("genus 1 surface", LowGenusWarning, stacklevel=2)
    return g


def validate_realizable(r: RamificationData) -> tuple[bool, str]:
    """Monodromy condition: branch residues e_p^-1 must sum to 0 mod d.

    A False result is advisory; the rest of the pipeline still runs.
    """
    d = r.order
    total = sum(pow(e, -1, d) for e in r.rotations)
    if total % d == 0:
        return True, "ok"
    return False, f"sum of branch residues is {total} = {total % d} mod {d}, not 0"
