"""CSV, manifest, and plot-script emission.

Schemas (fixed; part of the test surface):

    traces:        t_ps, t_over_tau1, density, method
    poles:         n, E_meV, Gamma_meV, Re_k_per_nm, Im_k_per_nm, tau_ps
    transmission:  E_meV, T

Manifests are plain structured text: one `check: name, expected, measured,
tolerance, verdict` line per assertion plus free-form `info:` lines.  All
numbers go through one formatter so identical inputs produce byte-identical
files.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

from .poles import ResonancePole
from .transient import TransientTrace

__all__ = [
    "fmt",
    "write_trace_csv",
    "poles_csv_text",
    "write_poles_csv",
    "transmission_csv_text",
    "write_transmission_csv",
    "Manifest",
    "gnuplot_script",
]


def fmt(v) -> str:
    """Deterministic number formatting for all emitted files."""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def write_trace_csv(path, trace: TransientTrace, method: str) -> str:
    """One curve of a trace; time in both ps and tau_1 units."""
    path = Path(path)
    with path.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["t_ps", "t_over_tau1", "density", "method"])
        d = trace.densities[method]
        for t, v in zip(trace.times, d):
            w.writerow([fmt(float(t)), fmt(float(t / trace.tau_1)), fmt(float(v)), method])
    return str(path)


def poles_csv_text(poles: list[ResonancePole]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "E_meV", "Gamma_meV", "Re_k_per_nm", "Im_k_per_nm", "tau_ps"])
    for p in poles:
        w.writerow(
            [
                p.index,
                fmt(p.E_position * 1e3),
                fmt(p.Gamma * 1e3),
                fmt(p.k.real),
                fmt(p.k.imag),
                fmt(p.tau),
            ]
        )
    return buf.getvalue()


def write_poles_csv(path, poles: list[ResonancePole]) -> str:
    path = Path(path)
    path.write_text(poles_csv_text(poles), newline="")
    return str(path)


def transmission_csv_text(energies_meV, T_values) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["E_meV", "T"])
    for e, t in zip(energies_meV, T_values):
        w.writerow([fmt(float(e)), fmt(float(t))])
    return buf.getvalue()


def write_transmission_csv(path, energies_meV, T_values) -> str:
    path = Path(path)
    path.write_text(transmission_csv_text(energies_meV, T_values), newline="")
    return str(path)


@dataclass
class ManifestCheck:
    name: str
    expected: str
    measured: str
    tolerance: str
    passed: bool

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def render(self) -> str:
        return (
            f"check: {self.name}, {self.expected}, {self.measured}, "
            f"{self.tolerance}, {self.verdict}"
        )


@dataclass
class Manifest:
    """Collects check/info lines for one figure run."""

    title: str
    checks: list[ManifestCheck] = field(default_factory=list)
    infos: list[str] = field(default_factory=list)

    def add_info(self, key: str, value) -> None:
        self.infos.append(f"info: {key} = {fmt(value)}")

    def check_abs(self, name: str, expected: float, measured: float, tol: float) -> bool:
        """|measured - expected| <= tol."""
        ok = abs(measured - expected) <= tol
        self.checks.append(
            ManifestCheck(name, fmt(expected), fmt(measured), fmt(tol), ok)
        )
        return ok

    def check_bound(self, name: str, expected: str, measured: float, ok: bool) -> bool:
        """Inequality or ordering check; caller supplies the verdict."""
        self.checks.append(ManifestCheck(name, expected, fmt(measured), "-", ok))
        return ok

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"manifest: {self.title}"]
        lines.extend(self.infos)
        lines.extend(c.render() for c in self.checks)
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def write(self, path) -> str:
        path = Path(path)
        path.write_text(self.render())
        return str(path)


def gnuplot_script(
    path,
    title: str,
    curves: list[tuple[str, str]],
    xlabel: str = "t / tau_1",
    ylabel: str = "|Psi|^2",
    x_col: int = 2,
    y_col: int = 3,
) -> str:
    """Plain-text plotting script over the emitted CSVs (no plotting
    dependency in the package); curves are (csv_filename, legend) pairs."""
    path = Path(path)
    png = path.with_suffix(".png").name
    # every ::1 skips the header row
    plots = ", \\\n     ".join(
        f"'{fname}' using {x_col}:{y_col} every ::1 with lines title '{label}'"
        for fname, label in curves
    )
    script = (
        "# generated plotting script; run with: gnuplot <this file>\n"
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        f"set xlabel '{xlabel}'\n"
        f"set ylabel '{ylabel}'\n"
        "set key top right\n"
        "set grid\n"
        "set terminal pngcairo size 960,640\n"
        f"set output '{png}'\n"
        f"plot {plots}\n"
    )
    path.write_text(script)
    return str(path)
