"""Grid sweeps comparing every closed form with its oracle, and report writing."""

from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction

import mpmath

from . import closed_forms as cf
from .circulant import (
    DEFAULT_ORDER_CAP,
    build_g_circulant,
    build_s_circulant,
    det_oracle_exact,
    dft_eigenvalues,
    spectral_norm_oracle,
)
from .errors import ConfigInvalid, TribcircError
from .recurrence import RecurrenceParams, SequenceKind, all_presets, gen_g, gen_s, power_sums, resolve_preset
from .roots import binet_g, binet_s, root_sym2, solve_characteristic

CHECKS = ("eig_g", "eig_s", "norm_g", "norm_s", "det_g", "det_s", "presets", "identities")
PRESET_TOL = 1e-10
BINET_TOL = 1e-9

PASS = "pass"
FAIL = "fail"
SKIPPED_DEGENERATE = "skipped_degenerate"
SKIPPED_GUARD = "skipped_guard"


@dataclass(frozen=True)
class SweepConfig:
    p_range: tuple[int, int] = (-2, 3)
    q_range: tuple[int, int] = (-2, 3)
    r_range: tuple[int, int] = (-2, 3)
    n_max: int = 12
    tolerance_rel: float = 1e-8
    det_tolerance_rel: float = 1e-6
    checks: frozenset = frozenset(CHECKS)
    output_format: str = "json"
    output_path: str | None = None
    include_repeated: bool = False
    workers: int = 1
    seed: int | None = None

    def validate(self) -> None:
        for name in ("p_range", "q_range", "r_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ConfigInvalid(f"{name} is empty: {lo} > {hi}")
        if not 1 <= self.n_max <= DEFAULT_ORDER_CAP:
            raise ConfigInvalid(f"n_max must lie in [1, {DEFAULT_ORDER_CAP}], got {self.n_max}")
        if not (self.tolerance_rel > 0 and self.det_tolerance_rel > 0):
            raise ConfigInvalid("tolerances must be positive")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ConfigInvalid(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.output_format not in ("json", "csv"):
            raise ConfigInvalid(f"unknown format {self.output_format!r}")
        if self.workers < 1:
            raise ConfigInvalid("workers must be >= 1")

    def grid(self) -> list[RecurrenceParams]:
        axes = [range(lo, hi + 1) for lo, hi in (self.p_range, self.q_range, self.r_range)]
        return [RecurrenceParams(*t) for t in itertools.product(*axes)]

    def echo(self) -> dict:
        return {
            "p_range": list(self.p_range),
            "q_range": list(self.q_range),
            "r_range": list(self.r_range),
            "n_max": self.n_max,
            "tolerance_rel": self.tolerance_rel,
            "det_tolerance_rel": self.det_tolerance_rel,
            "preset_tolerance_rel": PRESET_TOL,
            "binet_tolerance_rel": BINET_TOL,
            "checks": sorted(self.checks),
            "include_repeated": self.include_repeated,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class VerificationRecord:
    check: str
    params: RecurrenceParams
    n: int
    j: int | None = None
    closed_value: str | None = None
    oracle_value: str | None = None
    abs_error: str | None = None
    rel_error: str | None = None
    verdict: str = PASS
    skip_reason: str | None = None

    @property
    def sort_key(self):
        return (self.check, self.params.as_tuple, self.n, -1 if self.j is None else self.j)

    def to_flat(self) -> dict:
        out = {"check": self.check, "p": self.params.p, "q": self.params.q, "r": self.params.r}
        for f in fields(self):
            if f.name not in ("check", "params"):
                out[f.name] = getattr(self, f.name)
        return out


FLAT_FIELDS = ("check", "p", "q", "r", "n", "j", "closed_value", "oracle_value",
               "abs_error", "rel_error", "verdict", "skip_reason")


def fmt(value) -> str:
    """17 significant digits; complex values as ``re+imj``."""
    if isinstance(value, Fraction):
        value = mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, (mpmath.mpc, complex)):
        return f"{fmt(mpmath.mpf(value.real))}{'-' if value.imag < 0 else '+'}{fmt(abs(mpmath.mpf(value.imag)))}j"
    if isinstance(value, mpmath.mpf):
        if value == 0 or 1e-300 < abs(value) < 1e300:
            value = float(value)
        else:
            return mpmath.nstr(value, 17, min_fixed=1, max_fixed=0)
    return format(float(value), ".17g")


def _magnitude(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return abs(mpmath.mpf(value.numerator) / value.denominator)
    return abs(mpmath.mpmathify(value))


def compare(check, params, n, closed, oracle, tol, j=None, guarded=False, reason=None):
    """Build a pass/fail (or skipped_guard) record for one closed-vs-oracle pair."""
    def as_mp(v):
        if isinstance(v, Fraction):
            return mpmath.mpf(v.numerator) / v.denominator
        return mpmath.mpmathify(v)

    with mpmath.workdps(40):
        err = abs(as_mp(closed) - as_mp(oracle))
        rel = err / max(1, _magnitude(oracle))
        ok = rel <= tol
    if guarded:
        verdict = SKIPPED_GUARD
    else:
        verdict = PASS if ok else FAIL
    return VerificationRecord(
        check, params, n, j,
        closed_value=fmt(closed), oracle_value=fmt(oracle),
        abs_error=fmt(err), rel_error=fmt(rel),
        verdict=verdict, skip_reason=reason,
    )


def skipped(check, params, n, j=None, reason="", oracle=None, closed=None):
    return VerificationRecord(
        check, params, n, j,
        closed_value=None if closed is None else fmt(closed),
        oracle_value=None if oracle is None else fmt(oracle),
        verdict=SKIPPED_DEGENERATE, skip_reason=reason,
    )


def _reason(exc: TribcircError) -> str:
    return type(exc).__name__


def _cells(check, n_max):
    if check.startswith("eig"):
        return [(n, j) for n in range(1, n_max + 1) for j in range(n)]
    return [(n, None) for n in range(1, n_max + 1)]


def _skip_all(check, params, n_max, reason):
    return [skipped(check, params, n, j, reason) for n, j in _cells(check, n_max)]


def _eig_records(check, params, cfg):
    build, closed = (
        (build_g_circulant, cf.eig_g_closed) if check == "eig_g" else (build_s_circulant, cf.eig_s_closed)
    )
    out = []
    for n in range(1, cfg.n_max + 1):
        spectrum = dft_eigenvalues(build(params, n))
        for j in range(n):
            try:
                value = closed(params, n, j)
            except TribcircError as exc:
                out.append(skipped(check, params, n, j, _reason(exc), oracle=spectrum[j]))
                continue
            out.append(compare(check, params, n, value, spectrum[j], cfg.tolerance_rel, j=j))
    return out


def _norm_records(check, params, cfg):
    build, closed = (
        (build_g_circulant, cf.norm_g_closed) if check == "norm_g" else (build_s_circulant, cf.norm_s_closed)
    )
    out = []
    for n in range(1, cfg.n_max + 1):
        m = build(params, n)
        oracle = spectral_norm_oracle(m)
        try:
            value = closed(params, n, guard=False)
        except TribcircError as exc:
            out.append(skipped(check, params, n, reason=_reason(exc), oracle=oracle))
            continue
        guarded = not cf.perron_guard(m.first_row)
        reason = "NegativeEntriesUnsupported" if guarded else None
        out.append(compare(check, params, n, value, oracle, cfg.tolerance_rel, guarded=guarded, reason=reason))
    return out


def _det_records(check, params, cfg, roots):
    build, closed = (
        (build_g_circulant, cf.det_g_closed) if check == "det_g" else (build_s_circulant, cf.det_s_closed)
    )
    out = []
    for n in range(1, cfg.n_max + 1):
        exact = det_oracle_exact(build(params, n))
        try:
            value = closed(params, n, roots)
        except TribcircError as exc:
            out.append(skipped(check, params, n, reason=_reason(exc), oracle=exact))
            continue
        out.append(compare(check, params, n, value, exact, cfg.det_tolerance_rel))
    return out


def _identity_records(params, cfg, roots):
    out = []
    n_max = cfg.n_max
    g = gen_g(params, n_max + 1)
    ps = power_sums(params, 2 * n_max + 1)
    s = gen_s(params, n_max + 1) if params.r != 0 else None
    for n in range(1, n_max + 1):
        if roots.distinct:
            out.append(compare("binet_g", params, n, binet_g(params, n, roots), g[n], BINET_TOL))
        else:
            out.append(skipped("binet_g", params, n, reason="RepeatedRoots", oracle=g[n]))
        if s is None:
            out.append(skipped("binet_s", params, n, reason="ZeroRCoefficient"))
        else:
            out.append(compare("binet_s", params, n, binet_s(params, n, roots), s[n], BINET_TOL))
        exact_sym2 = (ps[n] ** 2 - ps[2 * n]) / 2
        out.append(compare("sym2", params, n, root_sym2(params, roots, n), exact_sym2, cfg.tolerance_rel))
    return out


def evaluate_group(task) -> list[VerificationRecord]:
    """All records for one (check, params) pair; the unit of parallel work."""
    check, triple, cfg = task
    if check == "presets":
        return run_preset_identities(cfg.n_max)
    params = RecurrenceParams(*triple)
    roots = solve_characteristic(params)
    names = ("binet_g", "binet_s", "sym2") if check == "identities" else (check,)
    if check.endswith("_s") and params.r == 0:
        return [r for name in names for r in _skip_all(name, params, cfg.n_max, "ZeroRCoefficient")]
    if not roots.distinct and not cfg.include_repeated:
        return [r for name in names for r in _skip_all(name, params, cfg.n_max, "RepeatedRoots")]
    if check.startswith("eig"):
        return _eig_records(check, params, cfg)
    if check.startswith("norm"):
        return _norm_records(check, params, cfg)
    if check.startswith("det"):
        return _det_records(check, params, cfg, roots)
    return _identity_records(params, cfg, roots)


def run_preset_identities(n_max: int) -> list[VerificationRecord]:
    """Named-sequence norm identities against the general closed form and the oracle."""
    if n_max < 1:
        raise ConfigInvalid("n_max must be >= 1")
    out = []
    for preset in all_presets():
        params, kind = resolve_preset(preset)
        build = build_s_circulant if kind is SequenceKind.S else build_g_circulant
        for n in range(1, n_max + 1):
            base = f"preset:{preset.label}"
            try:
                identity = cf.special_norm_identity(preset, n)
            except TribcircError as exc:
                out.append(skipped(base + ":closed", params, n, reason=_reason(exc)))
                out.append(skipped(base + ":oracle", params, n, reason=_reason(exc)))
                continue
            try:
                closed = cf.preset_closed_norm(preset, n)
                out.append(compare(base + ":closed", params, n, identity, closed, PRESET_TOL))
            except TribcircError as exc:
                out.append(skipped(base + ":closed", params, n, reason=_reason(exc), closed=identity))
            oracle = spectral_norm_oracle(build(params, n))
            out.append(compare(base + ":oracle", params, n, identity, oracle, PRESET_TOL))
    return out


def expected_record_count(cfg: SweepConfig) -> int:
    cells = len(cfg.grid())
    n = cfg.n_max
    per_check = {
        "eig_g": cells * n * (n + 1) // 2,
        "eig_s": cells * n * (n + 1) // 2,
        "norm_g": cells * n,
        "norm_s": cells * n,
        "det_g": cells * n,
        "det_s": cells * n,
        "identities": 3 * cells * n,
        "presets": 2 * len(all_presets()) * n,
    }
    return sum(per_check[c] for c in cfg.checks)


def run_sweep(cfg: SweepConfig) -> list[VerificationRecord]:
    """Evaluate every requested check over the grid; records in canonical order."""
    cfg.validate()
    tasks = []
    for check in sorted(cfg.checks):
        if check == "presets":
            tasks.append((check, None, cfg))
        else:
            tasks.extend((check, params.as_tuple, cfg) for params in cfg.grid())
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            groups = list(pool.map(evaluate_group, tasks, chunksize=8))
    else:
        groups = [evaluate_group(t) for t in tasks]
    records = [r for group in groups for r in group]
    records.sort(key=lambda r: r.sort_key)
    return records


def summarize(records) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        if r.verdict == PASS:
            counts["pass"] += 1
        elif r.verdict == FAIL:
            counts["fail"] += 1
        else:
            counts["skipped"] += 1
    return counts


def render(records, cfg: SweepConfig) -> str:
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FLAT_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(r.to_flat())
        return buf.getvalue()
    report = {
        "config": cfg.echo(),
        "records": [r.to_flat() for r in records],
        "summary": summarize(records),
    }
    return json.dumps(report, indent=1) + "\n"
