"""Floer chain complex over the circle of reducibles.

Layout for a spectrum with k >= 1 entries (maxima on top, minima below)::

    max_k      max_{k-1}  ...  max_1      max_0
         \\    /       \\        /    \\    /
         min_k          ...        min_1

max_0 and max_k are single towers over the points +1 and -1 of the circle;
every other slot is a conjugate pair of towers (members 0 and 1).  The
edge family r_i runs max_i -> min_i and l_i runs max_{i-1} -> min_i.  The
U^{m_i} twist sits on r_i when r_i > 0 and on l_i when r_i < 0.  Edges out
of a single tower hit both members of the adjacent pair (diagonal
inclusion); all other edges preserve the member.

With an empty spectrum the circle carries one maximum and one minimum
joined by two flow lines of opposite sign; they cancel unless a local
system weights one of them.

A tower with bottom grading b has generators U^-n, n >= 0, in grading
b + 2n.  An edge with twist U^p maps U^-n to U^-(n-p) and must have
degree -1, so b_source = b_target + 1 - 2p.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import GradingInconsistent, InputError, TruncationTooSmall
from .gspin import Spectrum


@dataclass(frozen=True)
class LocalSystem:
    kind: str = "trivial"
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.kind not in ("trivial", "generic"):
            raise InputError(f"unknown local system kind {self.kind!r}")
        if self.kind == "generic" and self.weight in (0, 1):
            raise InputError("a generic local system needs a holonomy weight other than 0 and 1")

    @classmethod
    def trivial(cls) -> LocalSystem:
        return cls("trivial", Fraction(1))

    @classmethod
    def generic(cls, weight=2) -> LocalSystem:
        return cls("generic", Fraction(weight))

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"


@dataclass(frozen=True, order=True)
class Tower:
    kind: str  # "max" or "min"
    slot: int
    member: int = 0

    @property
    def label(self) -> str:
        return f"{self.kind}{self.slot}.{self.member}"


@dataclass(frozen=True)
class Edge:
    family: str  # "r3", "l1", ...
    source: Tower
    target: Tower
    u_power: int
    sign: int
    holonomy: bool = False


@dataclass(frozen=True)
class FloerComplex:
    spectrum: Spectrum
    truncation: int
    local_system: LocalSystem
    towers: tuple[Tower, ...]
    edges: tuple[Edge, ...]
    gradings: dict | None = field(default=None, compare=False)

    @property
    def k(self) -> int:
        return self.spectrum.k

    def coefficient(self, e: Edge) -> int | Fraction:
        if not e.holonomy:
            return e.sign
        w = self.local_system.weight
        return e.sign * (w.numerator if w.denominator == 1 else w)

    def parity(self, t: Tower) -> int:
        return int(self.gradings[t] % 2)

    def ceiling(self) -> Fraction:
        """Highest grading kept: N levels above the lowest tower bottom."""
        return min(self.gradings.values()) + 2 * self.truncation


def default_truncation(s: Spectrum) -> int:
    return s.total_multiplicity + 2


def _default_holonomy_index(edges: list[Edge], k: int) -> int:
    if k == 0:
        return 1
    for i, e in enumerate(edges):
        if e.family == f"r{k}" and e.target.member == 1:
            return i
    raise AssertionError("no r_k member-1 edge")


def build_complex(
    s: Spectrum,
    truncation: int | None = None,
    ls: LocalSystem | None = None,
    holonomy_edge: int | None = None,
) -> FloerComplex:
    """Towers and edges for ``s``; call ``assign_gradings`` before computing homology.

    ``holonomy_edge`` picks which edge (index into ``edges``) carries the
    local-system weight; by default the member-1 edge of r_k.
    """
    ls = ls or LocalSystem.trivial()
    n_min = s.total_multiplicity + 1
    if truncation is None:
        truncation = default_truncation(s)
    if truncation < n_min:
        raise TruncationTooSmall(f"truncation {truncation} < {n_min} (1 + total multiplicity)")
    k = s.k
    edges: list[Edge] = []
    if k == 0:
        top, bot = Tower("max", 0), Tower("min", 0)
        towers = (top, bot)
        edges = [Edge("r0", top, bot, 0, 1), Edge("l0", top, bot, 0, -1)]
    else:

        def tops(i):
            return [Tower("max", i)] if i in (0, k) else [Tower("max", i, 0), Tower("max", i, 1)]

        towers = tuple(t for i in range(k, -1, -1) for t in tops(i)) + tuple(
            Tower("min", i, a) for i in range(k, 0, -1) for a in (0, 1)
        )
        for i in range(1, k + 1):
            r, m = s.entries[i - 1]
            u_r, u_l = (m, 0) if r > 0 else (0, m)
            for fam, src_slot, u, sign in ((f"r{i}", i, u_r, 1), (f"l{i}", i - 1, u_l, -1)):
                srcs = tops(src_slot)
                for a in (0, 1):
                    src = srcs[0] if len(srcs) == 1 else srcs[a]
                    edges.append(Edge(fam, src, Tower("min", i, a), u, sign))
    if ls.is_generic:
        idx = _default_holonomy_index(edges, k) if holonomy_edge is None else holonomy_edge
        if not 0 <= idx < len(edges):
            raise InputError(f"holonomy edge index {idx} out of range")
        edges[idx] = replace(edges[idx], holonomy=True)
    return FloerComplex(s, truncation, ls, towers, tuple(edges))


def assign_gradings(c: FloerComplex) -> FloerComplex:
    """Propagate bottom gradings from max_0 := 0 along the edges."""
    adj: dict[Tower, list[tuple[Tower, int]]] = {t: [] for t in c.towers}
    for e in c.edges:
        # b_source - b_target = 1 - 2p
        delta = 1 - 2 * e.u_power
        adj[e.source].append((e.target, -delta))
        adj[e.target].append((e.source, delta))
    start = Tower("max", 0)
    g = {start: Fraction(0)}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for nb, delta in adj[t]:
            want = g[t] + delta
            if nb not in g:
                g[nb] = want
                queue.append(nb)
            elif g[nb] != want:
                raise GradingInconsistent(f"grading loop fails to close at {nb.label}")
    if len(g) != len(c.towers):
        raise GradingInconsistent("complex is not connected")
    for t, b in g.items():
        if (t.kind == "max") != (b % 2 == 0):
            raise GradingInconsistent(f"{t.label} has grading {b} of the wrong parity")
    for t in c.towers:
        if t.kind == "max" and t.member == 1 and g[t] != g[replace(t, member=0)]:
            raise GradingInconsistent(f"conjugate towers in slot {t.slot} disagree")
    return replace(c, gradings=g)


def floer_complex(s: Spectrum, truncation: int | None = None, ls: LocalSystem | None = None,
                  holonomy_edge: int | None = None) -> FloerComplex:
    return assign_gradings(build_complex(s, truncation, ls, holonomy_edge))


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def complex_to_dict(c: FloerComplex) -> dict:
    """Stable JSON-ready dump (slots, edges, gradings)."""
    out = {
        "spectrum": [[_q(r), m] for r, m in c.spectrum.entries],
        "truncation": c.truncation,
        "local_system": {"kind": c.local_system.kind, "weight": _q(c.local_system.weight)},
        "towers": [],
        "edges": [
            {
                "family": e.family,
                "source": e.source.label,
                "target": e.target.label,
                "u_power": e.u_power,
                "sign": e.sign,
                "holonomy": e.holonomy,
            }
            for e in c.edges
        ],
    }
    for t in c.towers:
        row = {"tower": t.label}
        if c.gradings is not None:
            row["bottom_grading"] = _q(c.gradings[t])
            row["parity"] = "even" if c.parity(t) == 0 else "odd"
        out["towers"].append(row)
    return out
