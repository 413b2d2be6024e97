"""End-to-end jobs: ramification data -> character -> spectrum -> Floer homology, as a Report."""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from .errors import FloerError, InputError
from .exactnum import CyclotomicNumber, is_prime
from .floer import LocalSystem
from .gspin import (
    SignedEigen,
    Spectrum,
    character,
    character_of_spectrum,
    solve_spectrum,
    spectrum_from_signed,
)
from .homology import (
    ClosedFormSummary,
    GradedModuleDecomp,
    closed_form,
    cross_check,
    euler_characteristic,
)
from .hyperelliptic import distribution, enumerate_classes, floer_of_class, h0
from .surface import CyclicCurve, RamificationData, genus, ramification_from_curve, validate_realizable
from .torsion import alexander_torus_knot, torsion_sum

MODES = ("curve", "ramification", "spectrum", "hyperelliptic", "torusknot", "selftest")
SCHEMA_VERSION = 1


def q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_q(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class JobSpec:
    mode: str
    order: int | None = None
    mults: tuple[int, ...] = ()
    rotations: tuple[int, ...] = ()
    eigens: tuple[tuple[int, int], ...] = ()
    pairs: tuple[tuple[Fraction, int], ...] = ()
    genus: int | None = None
    classes: bool = False
    p: int | None = None
    q: int | None = None
    local: bool = True
    plain: bool = True
    weight: Fraction = Fraction(2)
    truncation: int | None = None
    extra_checks: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        self.weight = Fraction(self.weight)
        if self.weight in (0, 1):
            raise InputError("holonomy weight must not be 0 or 1")

    @property
    def local_system(self) -> LocalSystem:
        return LocalSystem.generic(self.weight)


@dataclass
class Report:
    mode: str
    input: dict[str, Any]
    derived: dict[str, Any] = field(default_factory=dict)
    closed_form: dict[str, Any] | None = None
    homology: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(**d)

    @classmethod
    def from_json(cls, s: str) -> Report:
        return cls.from_dict(json.loads(s))


# -- serializers -------------------------------------------------------------


def cyclotomic_to_list(x: CyclotomicNumber) -> list[str]:
    return [q(c) for c in x.coeffs]


def spectrum_to_list(s: Spectrum) -> list[list]:
    return [[q(r), m] for r, m in s.entries]


def decomp_to_dict(dec: GradedModuleDecomp) -> dict:
    return {
        "field": dec.field,
        "towers": [{"bottom": q(t.bottom), "parity": t.parity} for t in dec.towers],
        "cyclic": [{"length": c.length, "top": q(c.top), "parity": c.parity} for c in dec.cyclic],
    }


def decomp_from_dict(d: dict) -> GradedModuleDecomp:
    from .homology import CyclicSummand, TowerSummand

    return GradedModuleDecomp(
        tuple(TowerSummand(parse_q(t["bottom"]), t["parity"]) for t in d["towers"]),
        tuple(CyclicSummand(c["length"], parse_q(c["top"]), c["parity"]) for c in d["cyclic"]),
        d.get("field", "Q"),
    )


def closed_form_to_dict(cf: ClosedFormSummary) -> dict:
    return {
        "h0": cf.h0,
        "c_L": cf.c_L,
        "Delta_L": cf.Delta_L,
        "local_rank": cf.local_rank,
        "reduced_rank": cf.reduced_rank,
    }


# -- pipeline stages -----------------------------------------------------------


def _spectrum_tail(rep: Report, s: Spectrum, eigens: list[SignedEigen] | None, job: JobSpec) -> None:
    d = s.order
    rep.derived["spectrum"] = spectrum_to_list(s)
    if eigens is not None and d >= 3 and is_prime(d):
        chi = character_of_spectrum(d, eigens)
        rep.derived["roundtrip_character"] = cyclotomic_to_list(chi)
        ok = solve_spectrum(chi) == sorted(eigens, key=lambda e: e.index)
        rep.derived["roundtrip_solver"] = "ok" if ok else "mismatch"
        rep.checks["character_roundtrip"] = ok
    cf = closed_form(s)
    rep.closed_form = closed_form_to_dict(cf)
    check = cross_check(s, job.truncation, job.weight)
    rep.checks.update(check.checks)
    if job.local:
        loc = check.detail["local"]
        rep.homology["local"] = decomp_to_dict(loc)
        rep.homology["local"]["euler_characteristic"] = euler_characteristic(loc)
        rep.checks["euler_characteristic_equals_h0"] = euler_characteristic(loc) == cf.h0
    if job.plain:
        rep.homology["plain"] = decomp_to_dict(check.detail["plain"])
        rep.homology["plain"]["note"] = "H^1 generator maps the even tower onto the odd tower (not computed)"
    if job.extra_checks:
        from .homology import local_homology

        base = check.detail["local"]
        n = (job.truncation or s.total_multiplicity + 2) + 3
        rep.checks["local_truncation_invariant"] = local_homology(s, job.weight, n) == base
        rep.checks["local_weight_invariant"] = all(
            sorted(local_homology(s, w).cyclic_lengths) == base.cyclic_lengths
            for w in (2, 3, 5)
        )


def _from_ramification(rep: Report, r: RamificationData, job: JobSpec) -> None:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            rep.derived["genus"] = genus(r)
        except FloerError as exc:
            rep.warnings.append(str(exc))
    rep.warnings += [str(w.message) for w in caught]
    ok, diag = validate_realizable(r)
    rep.derived["realizable"] = ok
    if not ok:
        rep.warnings.append(f"not realizable as a cyclic cover: {diag}")
    chi = character(r)
    rep.derived["character"] = cyclotomic_to_list(chi)
    eigens = solve_spectrum(chi)
    rep.derived["signed_eigenvalues"] = [[e.index, e.n] for e in eigens]
    _spectrum_tail(rep, spectrum_from_signed(r.order, eigens), eigens, job)


def run(job: JobSpec) -> Report:
    if job.mode == "curve":
        curve = CyclicCurve(job.order, tuple(job.mults))
        rep = Report("curve", {"order": job.order, "mults": list(job.mults)})
        r = ramification_from_curve(curve)
        rep.derived["rotations"] = list(r.rotations)
        rep.warnings += list(r.notes)
        _from_ramification(rep, r, job)
    elif job.mode == "ramification":
        rep = Report("ramification", {"order": job.order, "rotations": list(job.rotations)})
        _from_ramification(rep, RamificationData(job.order, tuple(job.rotations)), job)
    elif job.mode == "spectrum":
        if job.eigens:
            if job.order is None:
                raise InputError("--eigens needs --order")
            eigens = [SignedEigen(j, n) for j, n in job.eigens]
            rep = Report("spectrum", {"order": job.order, "eigens": [list(e) for e in job.eigens]})
            s = spectrum_from_signed(job.order, eigens)
            _spectrum_tail(rep, s, eigens, job)
        else:
            rep = Report("spectrum", {"pairs": [[q(r), m] for r, m in job.pairs]})
            _spectrum_tail(rep, Spectrum.from_pairs(job.pairs), None, job)
    elif job.mode == "hyperelliptic":
        rep = _hyperelliptic(job)
    elif job.mode == "torusknot":
        rep = _torusknot(job)
    else:
        from .acceptance import run_all

        rep = Report("selftest", {"truncation": job.truncation, "weight": q(job.weight)})
        for res in run_all(truncation=job.truncation, weight=job.weight):
            rep.checks[res.name] = res.passed
            rep.derived[res.name] = res.detail
    rep.input["local_system"] = {"weight": q(job.weight)}
    if job.truncation is not None:
        rep.input["truncation"] = job.truncation
    return rep


def _hyperelliptic(job: JobSpec) -> Report:
    g = job.genus
    rep = Report("hyperelliptic", {"genus": g, "classes": job.classes})
    dist = distribution(g)
    rep.derived["distribution"] = {str(k): v for k, v in dist.items()}
    expected = {0: comb(2 * g + 1, g)}
    for w in range(1, g + 1, 2):
        expected[(w + 1) // 2] = comb(2 * g + 2, g - w)
    rep.checks["distribution_matches_binomials"] = dist == expected
    rep.checks["total_is_4_to_the_g"] = sum(dist.values()) == 4**g
    if job.classes:
        rows = []
        for t in enumerate_classes(g):
            row = {"subset": list(t.subset), "h0": h0(t)}
            if job.local:
                loc = floer_of_class(t, job.local_system)
                row["local"] = [c.length for c in loc.cyclic]
            if job.plain:
                row["plain_towers"] = [q(x.bottom) for x in floer_of_class(t).towers]
            rows.append(row)
        rep.derived["classes"] = rows
    else:
        # one representative per h0 value
        reps = {}
        for t in enumerate_classes(g):
            reps.setdefault(h0(t), t)
        rep.homology["local_by_h0"] = {
            str(k): decomp_to_dict(floer_of_class(t, job.local_system)) for k, t in sorted(reps.items())
        }
    return rep


def _torusknot(job: JobSpec) -> Report:
    p, qq = job.p, job.q
    rep = Report("torusknot", {"p": p, "q": qq})
    a = alexander_torus_knot(p, qq)
    rep.derived["alexander"] = list(a.coeffs)
    rep.derived["degree"] = a.degree
    rep.derived["fiber_genus"] = (p - 1) * (qq - 1) // 2
    rep.derived["torsion_sum"] = torsion_sum(a)
    rep.checks["degree_equals_fiber_genus"] = a.degree == (p - 1) * (qq - 1) // 2
    return rep
