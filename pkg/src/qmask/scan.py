"""(p, theta) grid scans of the masked families and their CSV/JSON encodings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

import numpy as np

from .entanglement import (
    concurrence,
    eof_from_concurrence,
    negativity,
    von_neumann_entropy,
)
from .linalg import partial_trace
from .masking import pure_masking_residual
from .states import (
    canonical_nonorthogonal_pair,
    canonical_orthogonal_pair,
    mix,
)

__all__ = ["CASES", "ScanRecord", "scan_record", "scan_grid", "theta_range", "to_csv", "to_json", "read_csv"]

CASES = ("commuting", "noncommuting")
CSV_COLUMNS = ("p", "theta", "s_global", "s_local", "delta_s", "concurrence", "eof", "negativity", "residual")


@dataclass(frozen=True)
class ScanRecord:
    p: float
    theta: float
    s_global: float
    s_local: float
    delta_s: float
    concurrence: float
    eof: float
    negativity: float
    residual: float


def _pair(case: str, theta: float):
    if case == "commuting":
        return canonical_orthogonal_pair(theta)
    if case == "noncommuting":
        return canonical_nonorthogonal_pair(theta)
    raise ValueError(f"unknown case {case!r}; expected one of {CASES}")


def theta_range(case: str) -> tuple[float, float]:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    return (0.0, np.pi) if case == "commuting" else (0.0, np.pi / 2)


def scan_record(case: str, p: float, theta: float) -> ScanRecord:
    psi1, psi2 = _pair(case, theta)
    rho = mix(psi1, psi2, p)
    s = von_neumann_entropy(rho)
    s_local = von_neumann_entropy(partial_trace(rho, 1))
    c = concurrence(rho)
    return ScanRecord(
        p=float(p),
        theta=float(theta),
        s_global=s,
        s_local=s_local,
        delta_s=s - s_local,
        concurrence=c,
        eof=float(eof_from_concurrence(c)),
        negativity=negativity(rho),
        residual=pure_masking_residual(psi1, psi2),
    )


def scan_grid(case: str, p_steps: int, theta: float | None = None, theta_steps: int | None = None) -> list[ScanRecord]:
    """Records over ``p_steps`` uniform p values and either one theta or a theta grid.

    Rows are ordered with p outermost.
    """
    if p_steps < 2:
        raise ValueError("p_steps must be at least 2")
    lo, hi = theta_range(case)
    if (theta is None) == (theta_steps is None):
        raise ValueError("give exactly one of theta or theta_steps")
    if theta_steps is not None:
        if theta_steps < 2:
            raise ValueError("theta_steps must be at least 2")
        thetas = np.linspace(lo, hi, theta_steps)
    else:
        if not lo <= theta <= hi:
            raise ValueError(f"theta={theta} outside [{lo}, {hi}] for case {case!r}")
        thetas = np.array([theta])
    return [scan_record(case, p, t) for p in np.linspace(0.0, 1.0, p_steps) for t in thetas]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def to_csv(records, metadata: dict | None = None) -> str:
    buf = io.StringIO()
    for key, value in (metadata or {}).items():
        buf.write(f"# {key}={value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_fmt(getattr(rec, name)) for name in CSV_COLUMNS])
    return buf.getvalue()


def to_json(records, metadata: dict | None = None) -> str:
    payload = {"metadata": metadata or {}, "records": [asdict(r) for r in records]}
    return json.dumps(payload, indent=2) + "\n"


def read_csv(text: str) -> tuple[dict, list[ScanRecord]]:
    """Parse :func:`to_csv` output back into metadata and records."""
    metadata = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key] = value
        elif line.strip():
            body.append(line)
    reader = csv.DictReader(body)
    names = [f.name for f in fields(ScanRecord)]
    records = [ScanRecord(**{n: float(row[n]) for n in names}) for row in reader]
    return metadata, records
