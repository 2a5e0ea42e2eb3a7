"""Range-scanning engines.

These are deliberately naive sweeps: x ascending from floor(n/a)+1, and
for the perfect-square route a fixed window of t values above
t_min = max(1, 2nx // (ax-n)^2), the point where the scanned polynomial
turns positive. Reproducing published runs depends on keeping exactly
this scan order, so no residue shortcuts or reordering tricks belong
here. The only liberty taken over the published loops is exact integer
square-root detection, which cannot miss squares at any magnitude.

Scans over an n-range are embarrassingly parallel across n; workers are
pure, results are merged in n order, and an optional line-oriented
checkpoint file makes long sweeps resumable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from multiprocessing import Pool
from typing import Iterator

from .decompose import Certificate, Instance, Route, Triple, formula_one_at, formula_two_at

__all__ = [
    "ScanConfig",
    "CoverageReport",
    "MordellReport",
    "MORDELL_RESIDUES",
    "mordell_is_exception",
    "formula_one_scan",
    "formula_two_scan",
    "formula_two_hits",
    "coverage_scan",
    "mordell_scan",
    "square_scan_fixed_x",
    "t_floor",
    "load_checkpoint",
]

PRESETS = {
    # x ceiling 10n: the per-n certificate hunts behind the published tables
    # and the Mordell exceptional-case sweeps.
    "paper-tables": (10, 100),
    # x ceiling 100n: the interval coverage runs that report recalcitrant n.
    "paper-coverage": (100, 100),
}


@dataclass(frozen=True)
class ScanConfig:
    """Search bounds. x is scanned in [floor(n/a)+1, x_ceiling_factor*n);
    t in [t_min, t_min + t_window) with the fixed t_min rule above.
    stop_at_first: a per-n search stops at its first certificate (the
    exhaustive alternative is formula_two_hits)."""

    x_ceiling_factor: int = 10
    t_window: int = 100
    stop_at_first: bool = True

    def __post_init__(self) -> None:
        if self.x_ceiling_factor < 1 or self.t_window < 1:
            raise ValueError(f"x_ceiling_factor and t_window must be >= 1, got {self}")

    @classmethod
    def preset(cls, name: str) -> "ScanConfig":
        try:
            factor, window = PRESETS[name]
        except KeyError:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
        return cls(x_ceiling_factor=factor, t_window=window)


def t_floor(n: int, x: int, d: int) -> int:
    """Smallest t worth probing at a given x: below 2nx/d^2 the scanned
    polynomial t^2 d^2 - 2ntx is negative."""
    return max(1, (2 * n * x) // (d * d))


def formula_one_scan(inst: Instance, cfg: ScanConfig | None = None) -> Certificate | None:
    """First divisibility certificate with x ascending; None if the bound
    is exhausted."""
    cfg = cfg or ScanConfig()
    for x in range(inst.n // inst.a + 1, cfg.x_ceiling_factor * inst.n):
        cert = formula_one_at(inst, x)
        if cert is not None:
            return cert
    return None


def formula_two_hits(inst: Instance, cfg: ScanConfig | None = None) -> Iterator[Certificate]:
    """Every perfect-square certificate in scan order (x outer ascending,
    t inner ascending, at most one hit per x)."""
    cfg = cfg or ScanConfig()
    a, n = inst.a, inst.n
    window = cfg.t_window
    for x in range(n // a + 1, cfg.x_ceiling_factor * n):
        d = a * x - n
        if d <= 0:
            continue
        dd = d * d
        c = 2 * n * x
        t0 = max(1, c // dd)
        for t in range(t0, t0 + window):
            # inline q_poly = t^2 d^2 - 2ntx; this loop dominates runtime
            v = t * (t * dd - c)
            if v < 0:
                continue
            q = isqrt(v)
            if q * q == v and t * d > q:
                cert = formula_two_at(inst, x, t)
                assert cert is not None  # gates above mirror formula_two_at
                yield cert
                break


def formula_two_scan(inst: Instance, cfg: ScanConfig | None = None) -> Certificate | None:
    """First perfect-square certificate in scan order; None if bounds are
    exhausted."""
    return next(formula_two_hits(inst, cfg), None)


# Mordell's congruence proof covers every n outside these residues mod 840
# (1 and the squares of 11, 13, 17, 19, 23).
MORDELL_RESIDUES = frozenset({1, 121, 169, 289, 361, 529})


def mordell_is_exception(n: int) -> bool:
    """True iff n (>= 2) falls in a residue class the congruence methods
    leave unresolved."""
    return n % 840 in MORDELL_RESIDUES


@dataclass
class CoverageReport:
    """Outcome of a per-n sweep over [n_lo, n_hi]: which n got a
    certificate and which resisted the bounded search."""

    a: int
    n_lo: int
    n_hi: int
    captured: list[Certificate] = field(default_factory=list)
    recalcitrant: list[int] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.n_hi - self.n_lo + 1

    @property
    def percent(self) -> Fraction:
        return Fraction(len(self.captured), self.total)


@dataclass
class MordellReport:
    """Exceptional n in [n_lo, n_hi] and how many of them the bounded
    perfect-square search settles."""

    n_lo: int
    n_hi: int
    exceptional: list[int] = field(default_factory=list)
    verified: list[Certificate] = field(default_factory=list)
    unverified: list[int] = field(default_factory=list)

    @property
    def percent(self) -> Fraction:
        if not self.exceptional:
            return Fraction(0)
        return Fraction(len(self.verified), len(self.exceptional))


def _capture_one(args: tuple[int, int, ScanConfig]) -> tuple[int, Certificate | None]:
    a, n, cfg = args
    return n, formula_two_scan(Instance(a, n), cfg)


def _run_captures(
    a: int,
    ns: list[int],
    cfg: ScanConfig,
    jobs: int,
    checkpoint: str | os.PathLike | None,
) -> dict[int, Certificate | None]:
    """formula_two_scan over each n, optionally resuming from / appending
    to a checkpoint file. Results are keyed by n and independent of jobs."""
    done: dict[int, Certificate | None] = {}
    if checkpoint is not None and os.path.exists(checkpoint):
        done = load_checkpoint(checkpoint, a)
    pending = [n for n in ns if n not in done]

    sink = open(checkpoint, "a", encoding="utf-8") if checkpoint is not None else None
    try:
        tasks = [(a, n, cfg) for n in pending]
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                results = pool.imap(_capture_one, tasks)
                for n, cert in results:
                    done[n] = cert
                    _append_record(sink, n, cert)
        else:
            for task in tasks:
                n, cert = _capture_one(task)
                done[n] = cert
                _append_record(sink, n, cert)
    finally:
        if sink is not None:
            sink.close()
    return {n: done[n] for n in ns}


def coverage_scan(
    a: int,
    n_lo: int,
    n_hi: int,
    cfg: ScanConfig | None = None,
    *,
    jobs: int = 1,
    checkpoint: str | os.PathLike | None = None,
) -> CoverageReport:
    """Sweep every n in [n_lo, n_hi] with the perfect-square search and
    report capture percentage plus the recalcitrant n list."""
    if not 2 <= n_lo <= n_hi:
        raise ValueError(f"need 2 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    cfg = cfg or ScanConfig.preset("paper-coverage")
    results = _run_captures(a, list(range(n_lo, n_hi + 1)), cfg, jobs, checkpoint)
    report = CoverageReport(a=a, n_lo=n_lo, n_hi=n_hi)
    for n in sorted(results):
        cert = results[n]
        if cert is None:
            report.recalcitrant.append(n)
        else:
            report.captured.append(cert)
    return report


def mordell_scan(
    n_lo: int,
    n_hi: int,
    cfg: ScanConfig | None = None,
    *,
    jobs: int = 1,
    checkpoint: str | os.PathLike | None = None,
) -> MordellReport:
    """Collect the Mordell-exceptional n in [n_lo, n_hi] (numerator fixed
    at 4) and run the perfect-square search on each."""
    if not 2 <= n_lo <= n_hi:
        raise ValueError(f"need 2 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    cfg = cfg or ScanConfig.preset("paper-tables")
    exceptional = [n for n in range(n_lo, n_hi + 1) if mordell_is_exception(n)]
    results = _run_captures(4, exceptional, cfg, jobs, checkpoint)
    report = MordellReport(n_lo=n_lo, n_hi=n_hi, exceptional=exceptional)
    for n in exceptional:
        cert = results[n]
        if cert is None:
            report.unverified.append(n)
        else:
            report.verified.append(cert)
    return report


def square_scan_fixed_x(
    inst: Instance, x: int, t_lo: int, t_hi: int
) -> list[tuple[int, int, int]]:
    """All t in [t_lo, t_hi] where the polynomial t^2 (ax-n)^2 - 2ntx is a
    perfect square >= 0, as (t, value, root) triples ascending in t.

    This is the manual tool for hunting squares outside the windowed
    scans, e.g. with a much wider t range at a pinned x.
    """
    d = inst.a * x - inst.n
    dd = d * d
    c = 2 * inst.n * x
    out: list[tuple[int, int, int]] = []
    for t in range(t_lo, t_hi + 1):
        v = t * (t * dd - c)
        if v < 0:
            continue
        r = isqrt(v)
        if r * r == v:
            out.append((t, v, r))
    return out


# Checkpoint files: one line per completed n, "n,status,x,y,z,t,q" with
# status captured|recalcitrant; non-captured rows leave x..q empty.


def _append_record(sink, n: int, cert: Certificate | None) -> None:
    if sink is None:
        return
    if cert is None:
        sink.write(f"{n},recalcitrant,,,,,\n")
    else:
        t = cert.triple
        sink.write(f"{n},captured,{t.x},{t.y},{t.z},{cert.witness_t},{cert.witness_q}\n")
    sink.flush()


def load_checkpoint(path: str | os.PathLike, a: int) -> dict[int, Certificate | None]:
    """Parse a checkpoint file back into per-n results. Captured rows are
    rebuilt as certificates (and therefore re-verified); malformed lines
    raise."""
    done: dict[int, Certificate | None] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 7:
                raise ValueError(f"{path}:{lineno}: expected 7 fields, got {len(parts)}")
            n, status = int(parts[0]), parts[1]
            if status == "recalcitrant":
                done[n] = None
            elif status == "captured":
                x, y, z, t, q = (int(p) for p in parts[2:])
                done[n] = Certificate(
                    instance=Instance(a, n),
                    triple=Triple(x, y, z),
                    route=Route.FORMULA_TWO,
                    witness_t=t,
                    witness_q=q,
                )
            else:
                raise ValueError(f"{path}:{lineno}: unknown status {status!r}")
    return done
