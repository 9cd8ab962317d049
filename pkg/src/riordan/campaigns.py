"""Seeded verification campaigns over randomly generated elements.

A campaign draws random algebra elements from a deterministic stream,
runs one named check per trial, and reports every trial as a JSON line
followed by a summary line.  The report is a function of the
configuration alone: trial seeds are derived by a splitmix-style mix of
the campaign seed, suite name, dimension, truncation order, and trial
index, so reruns reproduce the same bytes, any worker count produces
the same bytes, and a failing line pins down its inputs exactly.

Suites:

``group``
    Group laws for pairs-with-substitution elements: associativity,
    identity, verified two-sided inverses, double inverse.
``homomorphism``
    The monomial-matrix representation turns products into matrix
    products; ``elements="general"`` draws non-invertible elements
    (singular linear parts, non-unit scalar factors) as well.
``ftra``
    Applying an element to a series equals the matrix-vector product
    of its monomial matrix with the series' coefficient vector.
``projective``
    Truncation towers: every lower level of an element's matrix is the
    leading sub-block of the full one, and levels depend only on the
    image at their own order.
``verdestar``
    Windowed Laurent pairs: the unit criterion both ways, inverse
    windows, and the banded-product conjecture harness under a chosen
    product convention.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import AlgebraError
from .formal_maps import FormalMap
from .matrices import homomorphism_check, riordan_matrix
from .monomials import mono_one
from .projective import level_matrix
from .rings import PrimeFieldRing, RationalRing, Ring, ring_from_tag
from .riordan import RiordanElement
from .series import Series
from .verdestar import (
    CONVENTIONS,
    LEFT_INTO_RIGHT,
    LaurentSeries,
    StarTuple,
    VSRElement,
    conjecture_trial,
)

SUITES = ("group", "homomorphism", "ftra", "projective", "verdestar")
ELEMENT_POOLS = ("invertible", "general")

_MASK64 = (1 << 64) - 1


def _mix64(h: int) -> int:
    h = (h + 0x9E3779B97F4A7C15) & _MASK64
    h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & _MASK64
    return h ^ (h >> 31)


def derive_seed(*parts) -> int:
    """Fold integers and strings into one 64-bit trial seed."""
    h = 0x8BADF00D5EEDC0DE
    for p in parts:
        if isinstance(p, str):
            p = int.from_bytes(p.encode("utf-8"), "big")
        elif not isinstance(p, int):
            raise TypeError(f"seed parts must be int or str, got {p!r}")
        if p < 0:
            p &= _MASK64  # two's-complement word for negatives
        while True:
            h = _mix64(h ^ (p & _MASK64))
            p >>= 64
            if not p:
                break
    return h


@dataclass(frozen=True)
class CampaignConfig:
    """Everything a campaign needs; the report is a function of this."""

    suite: str
    dims: tuple = (2,)
    truncs: tuple = (4,)
    ring: str = "int"
    trials: int = 100
    seed: int = 0
    convention: str = LEFT_INTO_RIGHT
    elements: str = "invertible"
    radius: int = 3
    workers: int = 1

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {SUITES}")
        if self.elements not in ELEMENT_POOLS:
            raise ValueError(
                f"unknown element pool {self.elements!r}; choose from {ELEMENT_POOLS}"
            )
        if self.convention not in CONVENTIONS:
            raise ValueError(
                f"unknown convention {self.convention!r}; choose from {CONVENTIONS}"
            )
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "truncs", tuple(self.truncs))
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"dims must be positive, got {self.dims}")
        floor = 0 if self.suite == "verdestar" else 1
        if not self.truncs or any(k < floor for k in self.truncs):
            raise ValueError(f"truncs must all be >= {floor}, got {self.truncs}")
        if self.trials < 0:
            raise ValueError(f"trials must be >= 0, got {self.trials}")
        if self.radius < 0:
            raise ValueError(f"radius must be >= 0, got {self.radius}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        ring_from_tag(self.ring)  # validates the tag early

    def to_payload(self) -> dict:
        return {
            "suite": self.suite,
            "dims": list(self.dims),
            "truncs": list(self.truncs),
            "ring": self.ring,
            "trials": self.trials,
            "seed": self.seed,
            "convention": self.convention,
            "elements": self.elements,
            "radius": self.radius,
        }


# -- random element generation ------------------------------------------------


def _sign(rng: random.Random) -> int:
    return -1 if rng.randrange(2) else 1


def random_unit_constant(rng: random.Random, ring: Ring):
    """A random unit of the coefficient ring, small by construction."""
    if isinstance(ring, RationalRing):
        return ring.parse(f"{_sign(rng) * rng.randint(1, 3)}/{rng.randint(1, 3)}")
    if isinstance(ring, PrimeFieldRing):
        return ring.coerce(rng.randrange(1, ring.p))
    return ring.coerce(_sign(rng))


def random_monomial(rng: random.Random, dim: int, lo: int, hi: int) -> tuple:
    """A random exponent tuple with total degree in ``[lo, hi]``."""
    total = rng.randint(lo, hi)
    exps = [0] * dim
    for _ in range(total):
        exps[rng.randrange(dim)] += 1
    return tuple(exps)


def _sparse_terms(rng, dim, lo, hi, count) -> dict:
    """Up to ``count`` random terms of degree in ``[lo, hi]``, coefficients in [-3, 3]."""
    terms = {}
    if hi < lo:
        return terms
    for _ in range(rng.randrange(count + 1)):
        m = random_monomial(rng, dim, lo, hi)
        c = rng.randint(-3, 3)
        if c:
            terms[m] = terms.get(m, 0) + c
    return terms


def random_unit_series(rng: random.Random, dim: int, trunc: int, ring: Ring) -> Series:
    """Unit constant term by construction, plus a few sparse higher terms."""
    terms = _sparse_terms(rng, dim, 1, trunc, 5)
    terms[mono_one(dim)] = random_unit_constant(rng, ring)
    return Series(dim, trunc, ring, terms)


def random_nonunit_series(rng: random.Random, dim: int, trunc: int, ring: Ring) -> Series:
    """Constant term a ring non-unit (0 over fields), plus sparse terms."""
    terms = _sparse_terms(rng, dim, 1, trunc, 5)
    terms.pop(mono_one(dim), None)
    if ring.tag == "int" and rng.randrange(2):
        terms[mono_one(dim)] = _sign(rng) * rng.randint(2, 3)
    return Series(dim, trunc, ring, terms)


def random_series(rng: random.Random, dim: int, trunc: int, ring: Ring) -> Series:
    """No constraints at all: any constant term, sparse support."""
    terms = _sparse_terms(rng, dim, 0, trunc, 6)
    return Series(dim, trunc, ring, terms)


def random_unimodular_matrix(rng: random.Random, dim: int) -> list:
    """Integer matrix of determinant +-1: a product of elementary matrices."""
    rows = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    if dim >= 2:
        for _ in range(2 * dim):
            i = rng.randrange(dim)
            j = rng.randrange(dim - 1)
            if j >= i:
                j += 1
            c = _sign(rng) * rng.randint(1, 2)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    for i in range(dim):
        if rng.randrange(2):
            rows[i] = [-v for v in rows[i]]
    return rows


def random_singular_matrix(rng: random.Random, dim: int) -> list:
    """Small integer matrix with determinant exactly zero."""
    rows = [[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)]
    i = rng.randrange(dim)
    if dim == 1 or rng.randrange(2) == 0:
        rows[i] = [0] * dim
    else:
        j = rng.randrange(dim - 1)
        if j >= i:
            j += 1
        c = rng.randint(-2, 2)
        rows[i] = [c * v for v in rows[j]]
    return rows


def _map_from_matrix(rng, dim, trunc, ring, mat) -> FormalMap:
    comps = []
    for i in range(dim):
        terms = _sparse_terms(rng, dim, 2, trunc, 3)
        for j, c in enumerate(mat[i]):
            if c:
                e = tuple(1 if t == j else 0 for t in range(dim))
                terms[e] = terms.get(e, 0) + c
        comps.append(Series(dim, trunc, ring, terms))
    return FormalMap(comps)


def random_invertible_map(rng: random.Random, dim: int, trunc: int, ring: Ring) -> FormalMap:
    """Unimodular linear part, so invertible over every coefficient ring."""
    return _map_from_matrix(rng, dim, trunc, ring, random_unimodular_matrix(rng, dim))


def random_singular_map(rng: random.Random, dim: int, trunc: int, ring: Ring) -> FormalMap:
    """Zero-determinant linear part: never invertible under composition."""
    return _map_from_matrix(rng, dim, trunc, ring, random_singular_matrix(rng, dim))


def random_riordan(
    rng: random.Random, dim: int, trunc: int, ring: Ring, elements: str = "invertible"
) -> RiordanElement:
    """A random pair element from the requested pool."""
    if elements == "invertible":
        return RiordanElement(
            random_unit_series(rng, dim, trunc, ring),
            random_invertible_map(rng, dim, trunc, ring),
        )
    defect = rng.randrange(3)
    f = (
        random_unit_series(rng, dim, trunc, ring)
        if defect == 1
        else random_nonunit_series(rng, dim, trunc, ring)
    )
    g = (
        random_invertible_map(rng, dim, trunc, ring)
        if defect == 0
        else random_singular_map(rng, dim, trunc, ring)
    )
    return RiordanElement(f, g)


def random_laurent_unit(
    rng: random.Random, dim: int, accuracy: int, ring: Ring
) -> LaurentSeries:
    """Random vertex in [-2, 2]^d, unit vertex coefficient."""
    vertex = tuple(rng.randint(-2, 2) for _ in range(dim))
    terms = _sparse_terms(rng, dim, 1, accuracy, 4)
    terms[mono_one(dim)] = random_unit_constant(rng, ring)
    return LaurentSeries(vertex, Series(dim, accuracy, ring, terms))


def random_laurent_nonunit(
    rng: random.Random, dim: int, accuracy: int, ring: Ring
) -> LaurentSeries:
    """A Laurent element that fails the unit criterion.

    Over a field this needs several incomparable minimal terms, so it
    requires ``dim >= 2``; over the integers a non-unit vertex
    coefficient works in any dimension.
    """
    if ring.tag == "int" and (dim == 1 or rng.randrange(2)):
        vertex = tuple(rng.randint(-2, 2) for _ in range(dim))
        terms = _sparse_terms(rng, dim, 1, accuracy, 3)
        terms[mono_one(dim)] = _sign(rng) * rng.randint(2, 3)
        return LaurentSeries(vertex, Series(dim, accuracy, ring, terms))
    if dim < 2:
        raise ValueError("every nonzero one-variable Laurent element is a unit over a field")
    vertex = tuple(rng.randint(-2, 2) for _ in range(dim))
    i = rng.randrange(dim)
    j = rng.randrange(dim - 1)
    if j >= i:
        j += 1
    terms = _sparse_terms(rng, dim, 2, accuracy, 2)
    e_i = tuple(1 if t == i else 0 for t in range(dim))
    e_j = tuple(1 if t == j else 0 for t in range(dim))
    terms[e_i] = random_unit_constant(rng, ring)
    terms[e_j] = random_unit_constant(rng, ring)
    terms.pop(mono_one(dim), None)
    return LaurentSeries(vertex, Series(dim, accuracy, ring, terms))


def random_star_tuple(rng: random.Random, dim: int, trunc: int, ring: Ring) -> StarTuple:
    return StarTuple(random_unit_series(rng, dim, trunc, ring) for _ in range(dim))


def random_vsr(rng: random.Random, dim: int, accuracy: int, ring: Ring) -> VSRElement:
    return VSRElement(
        random_laurent_unit(rng, dim, accuracy, ring),
        random_star_tuple(rng, dim, accuracy, ring),
    )


# -- per-suite trial bodies ----------------------------------------------------


def _trial_group(cfg: CampaignConfig, rng, dim, trunc, ring):
    a = random_riordan(rng, dim, trunc, ring)
    b = random_riordan(rng, dim, trunc, ring)
    c = random_riordan(rng, dim, trunc, ring)
    e = RiordanElement.identity(dim, trunc, ring)
    failures = []
    if (a * b) * c != a * (b * c):
        failures.append("associativity")
    if a * e != a or e * a != a:
        failures.append("identity")
    try:
        ai = a.inverse()
        if a * ai != e or ai * a != e:
            failures.append("inverse")
        elif ai.inverse() != a:
            failures.append("double-inverse")
    except AlgebraError as exc:
        failures.append(f"inverse raised: {exc}")
    inputs = {"a": a.to_payload(), "b": b.to_payload(), "c": c.to_payload()}
    return not failures, inputs, {"failures": failures}


def _trial_homomorphism(cfg: CampaignConfig, rng, dim, trunc, ring):
    if cfg.elements == "general":
        pattern = rng.randrange(3)
        a = random_riordan(rng, dim, trunc, ring, "general" if pattern != 1 else "invertible")
        b = random_riordan(rng, dim, trunc, ring, "general" if pattern != 0 else "invertible")
    else:
        a = random_riordan(rng, dim, trunc, ring)
        b = random_riordan(rng, dim, trunc, ring)
    ok = homomorphism_check(a, b)
    inputs = {"a": a.to_payload(), "b": b.to_payload()}
    return ok, inputs, {}


def _trial_ftra(cfg: CampaignConfig, rng, dim, trunc, ring):
    a = random_riordan(rng, dim, trunc, ring, cfg.elements)
    u = random_series(rng, dim, trunc, ring)
    lhs = a.apply(u)
    mat = riordan_matrix(a)
    uvec = [u.coeff(n) for n in mat.basis]
    bad = []
    for i, m in enumerate(mat.basis):
        acc = None
        row = mat.rows[i]
        for j in range(len(uvec)):
            v = row[j]
            if v:
                w = uvec[j]
                if w:
                    p = ring.mul(v, w)
                    acc = p if acc is None else ring.add(acc, p)
        acc = ring.finalize(acc) if acc is not None else ring.zero
        if acc != lhs.coeff(m):
            bad.append(
                {
                    "m": list(m),
                    "matrix": ring.format(acc),
                    "direct": ring.format(lhs.coeff(m)),
                }
            )
    inputs = {"a": a.to_payload(), "u": u.to_payload()}
    return not bad, inputs, {"mismatches": bad}


def _trial_projective(cfg: CampaignConfig, rng, dim, trunc, ring):
    a = random_riordan(rng, dim, trunc, ring, cfg.elements)
    full = riordan_matrix(a)
    failures = []
    for level in range(trunc + 1):
        got = level_matrix(a, level)
        for m in got.basis:
            for n in got.basis:
                if got.entry(m, n) != full.entry(m, n):
                    failures.append(f"level {level} disagrees at ({m}, {n})")
                    break
            else:
                continue
            break
    level = rng.randrange(trunc)
    deg = rng.randint(level + 1, trunc)
    scale = _sign(rng) * rng.randint(1, 3)
    bump_f = Series.monomial(dim, trunc, ring, random_monomial(rng, dim, deg, deg), scale)
    which = rng.randrange(dim)
    bump_g = Series.monomial(dim, trunc, ring, random_monomial(rng, dim, deg, deg), scale)
    comps = list(a.g.components)
    comps[which] = comps[which] + bump_g
    perturbed = RiordanElement(a.f + bump_f, FormalMap(comps))
    if level_matrix(perturbed, level) != level_matrix(a, level):
        failures.append(f"level {level} saw a perturbation of degree {deg}")
    inputs = {"a": a.to_payload()}
    return not failures, inputs, {"failures": failures}


def _trial_verdestar(cfg: CampaignConfig, rng, dim, trunc, ring):
    a = random_vsr(rng, dim, trunc, ring)
    b = random_vsr(rng, dim, trunc, ring)
    nonunit_possible = dim >= 2 or ring.tag == "int"
    want_unit = rng.randrange(2) == 0 or not nonunit_possible
    u = (
        random_laurent_unit(rng, dim, trunc, ring)
        if want_unit
        else random_laurent_nonunit(rng, dim, trunc, ring)
    )
    failures = []
    if u.is_unit() != want_unit:
        failures.append("unit-criterion")
    if u.is_unit():
        w = u * u.inverse()
        if w != LaurentSeries.one(dim, w.accuracy, ring):
            failures.append("inverse-window")
    report = conjecture_trial(a, b, cfg.radius, cfg.convention)
    if not report.homomorphism_ok:
        failures.append("banded-product")
    inputs = {"a": a.to_payload(), "b": b.to_payload(), "u": u.to_payload()}
    detail = {"failures": failures, "conjecture": report.to_payload()}
    return not failures, inputs, detail


_TRIALS = {
    "group": _trial_group,
    "homomorphism": _trial_homomorphism,
    "ftra": _trial_ftra,
    "projective": _trial_projective,
    "verdestar": _trial_verdestar,
}


# -- campaign driver -----------------------------------------------------------


def trial_specs(cfg: CampaignConfig):
    """The deterministic (index, dim, trunc, seed) grid for a configuration."""
    out = []
    index = 0
    for dim in cfg.dims:
        for trunc in cfg.truncs:
            for i in range(cfg.trials):
                out.append((index, dim, trunc, derive_seed(cfg.seed, cfg.suite, dim, trunc, i)))
                index += 1
    return out


def run_one_trial(cfg: CampaignConfig, index: int, dim: int, trunc: int, seed: int) -> dict:
    """One trial as a JSON-ready record; the line is buffered until the verdict."""
    ring = ring_from_tag(cfg.ring)
    rng = random.Random(seed)
    ok, inputs, detail = _TRIALS[cfg.suite](cfg, rng, dim, trunc, ring)
    record = {
        "trial": index,
        "suite": cfg.suite,
        "d": dim,
        "k": trunc,
        "seed": seed,
        "inputs": inputs,
        "verdict": "pass" if ok else "fail",
    }
    if detail:
        record["detail"] = detail
    return record


def _pool_trial(args) -> dict:
    return run_one_trial(*args)


@dataclass(frozen=True)
class CampaignReport:
    """All lines of a finished campaign, in trial order, summary last."""

    config: CampaignConfig
    lines: tuple = ()
    passed: int = 0
    failed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Run every trial in the grid and assemble the deterministic report.

    With ``workers > 1`` trials run in a process pool; results are
    reordered to trial order, so the bytes match a single-worker run.
    """
    specs = trial_specs(cfg)
    if cfg.workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunk = max(1, len(specs) // (4 * cfg.workers))
            records = list(
                pool.map(_pool_trial, [(cfg, *spec) for spec in specs], chunksize=chunk)
            )
    else:
        records = [run_one_trial(cfg, *spec) for spec in specs]
    records.sort(key=lambda r: r["trial"])
    passed = sum(1 for r in records if r["verdict"] == "pass")
    failed = len(records) - passed
    lines = [json.dumps(r, separators=(",", ":")) for r in records]
    summary = {
        "summary": {
            "config": cfg.to_payload(),
            "trials": len(records),
            "passed": passed,
            "failed": failed,
            "verdict": "pass" if failed == 0 else "fail",
        }
    }
    lines.append(json.dumps(summary, separators=(",", ":")))
    return CampaignReport(config=cfg, lines=tuple(lines), passed=passed, failed=failed)
