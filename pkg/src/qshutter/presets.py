"""Figure presets: frozen scenario sets reproducing the five study figures.

Each preset emits one CSV per curve, a gnuplot script, and a manifest of
`check:` lines (expected vs measured with verdicts) plus `info:` records.
A preset whose internal checks fail still writes all files; the caller
(CLI `figure` subcommand) turns a failed manifest into a non-zero exit.

Stated reference numbers that depend on the source's printed resonance
parameters fail honestly here when the self-computed doublet sits a few
tenths of a percent away (see the pole table the selftest prints); every
such number still appears in the manifest with its measured counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import Incidence, ScenarioConfig, resolve_scenario
from .errors import DomainError
from .output import Manifest, gnuplot_script, write_trace_csv
from .scattering import transmission
from .transient import (
    METHOD_EXACT,
    METHOD_EXPONENTIAL,
    METHOD_TWO_LEVEL_CLOSED,
    METHOD_TWO_LEVEL_M,
    evolve_trace,
)
from .twolevel import (
    density_resonant_exponential,
    dominant_frequency_series,
    frequencies,
)

__all__ = ["FigurePreset", "FigureResult", "PRESETS", "run_figure"]

TRIPLE_LAYERS = ((3.0, 0.12), (16.0, 0.0), (3.0, 0.12), (16.0, 0.0), (3.0, 0.12))
DOUBLE_LAYERS = ((5.0, 0.23), (5.0, 0.0), (5.0, 0.23))
MASS_RATIO = 0.067


def _triple_cfg(**kw) -> ScenarioConfig:
    return ScenarioConfig(layers=TRIPLE_LAYERS, mass_ratio=MASS_RATIO, **kw)


@dataclass(frozen=True)
class FigurePreset:
    preset_id: str
    description: str
    configs: tuple[ScenarioConfig, ...]


@dataclass
class FigureResult:
    preset_id: str
    files: list[str]
    manifest_path: str
    manifest: Manifest

    @property
    def ok(self) -> bool:
        return self.manifest.ok


PRESETS: dict[str, FigurePreset] = {
    "fig1": FigurePreset(
        "fig1",
        "triple barrier offresonance: exact N=4 vs closed two-level density",
        (
            _triple_cfg(
                incidence=Incidence("offset", 2.0),
                n_poles=4,
                methods=(METHOD_EXACT, METHOD_TWO_LEVEL_CLOSED),
                out="fig1",
            ),
        ),
    ),
    "fig2a": FigurePreset(
        "fig2a",
        "triple barrier on resonance: doublet M-form vs exponential envelope",
        (
            _triple_cfg(
                incidence=Incidence("offset", 0.0),
                n_poles=2,
                methods=(METHOD_TWO_LEVEL_M, METHOD_EXPONENTIAL),
                out="fig2a",
            ),
        ),
    ),
    "fig2b": FigurePreset(
        "fig2b",
        "triple barrier at the doublet center: single-frequency regime",
        (
            _triple_cfg(
                incidence=Incidence("doublet-center"),
                n_poles=4,
                methods=(METHOD_EXACT, METHOD_TWO_LEVEL_CLOSED),
                out="fig2b",
            ),
        ),
    ),
    "fig3a": FigurePreset(
        "fig3a",
        "transient enhancement: triple at the doublet center vs double barrier",
        (
            _triple_cfg(
                incidence=Incidence("doublet-center"),
                n_poles=4,
                methods=(METHOD_EXACT,),
                out="fig3a_triple",
            ),
            ScenarioConfig(
                layers=DOUBLE_LAYERS,
                mass_ratio=MASS_RATIO,
                incidence=Incidence("offset", 3.515),
                n_poles=2,
                methods=(METHOD_EXACT,),
                out="fig3a_double",
            ),
        ),
    ),
    "fig3b": FigurePreset(
        "fig3b",
        "transmission enhancement vs central barrier width b2 = 3, 4, 5 nm",
        tuple(
            ScenarioConfig(
                layers=(
                    (3.0, 0.12),
                    (16.0, 0.0),
                    (float(b2), 0.12),
                    (16.0, 0.0),
                    (3.0, 0.12),
                ),
                mass_ratio=MASS_RATIO,
                incidence=Incidence("doublet-center"),
                n_poles=4,
                methods=(METHOD_EXACT,),
                out=f"fig3b_b2_{b2}nm",
            )
            for b2 in (3, 4, 5)
        ),
    ),
}


def run_figure(preset_id: str, out_dir: str = ".") -> FigureResult:
    """Run one preset into out_dir; see module docstring for outputs."""
    if preset_id not in PRESETS:
        raise DomainError(
            f"unknown preset '{preset_id}'; available: {', '.join(sorted(PRESETS))}"
        )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    runner = {
        "fig1": _run_fig1,
        "fig2a": _run_fig2a,
        "fig2b": _run_fig2b,
        "fig3a": _run_fig3a,
        "fig3b": _run_fig3b,
    }[preset_id]
    manifest, files = runner(PRESETS[preset_id], out)
    manifest_path = manifest.write(out / f"{preset_id}_manifest.txt")
    return FigureResult(
        preset_id=preset_id,
        files=[str(f) for f in files],
        manifest_path=manifest_path,
        manifest=manifest,
    )


def _emit_curves(rs, cfg, out: Path):
    trace = evolve_trace(rs.problem, rs.x, rs.times, cfg.methods)
    files = []
    for method in cfg.methods:
        files.append(write_trace_csv(out / f"{cfg.out}_{method}.csv", trace, method))
    return files, trace


def _run_fig1(preset: FigurePreset, out: Path):
    cfg = preset.configs[0]
    rs = resolve_scenario(cfg)
    man = Manifest(title=preset.description)
    man.add_info("window", "t in [0, 10 tau1], 2000 points (reproduction choice)")
    files, trace = _emit_curves(rs, cfg, out)
    T = abs(rs.problem.field.t) ** 2
    man.add_info("incidence", cfg.incidence.describe())
    man.add_info("resolved_E_meV", rs.E_meV)
    man.add_info("T_at_E", float(T))
    man.check_abs("E1 + 2*Gamma1 (meV)", 12.33, rs.E_meV, 0.005)
    man.check_abs("tau1 (ps)", 1.61, rs.tau_1, 0.01)
    d_exact = trace.densities[METHOD_EXACT]
    d_closed = trace.densities[METHOD_TWO_LEVEL_CLOSED]
    window = trace.times >= 0.5 * rs.tau_1
    dev = np.max(
        np.abs(d_closed[window] - d_exact[window]) / np.abs(d_exact[window])
    )
    man.check_bound(
        "two-level closed vs exact, max rel dev on [0.5, 10] tau1",
        "< 0.05",
        float(dev),
        bool(dev < 0.05),
    )
    files.append(
        gnuplot_script(
            out / "fig1.gp",
            preset.description,
            [(Path(f).name, m) for f, m in zip(files, cfg.methods)],
        )
    )
    return man, files


def _run_fig2a(preset: FigurePreset, out: Path):
    cfg = preset.configs[0]
    rs = resolve_scenario(cfg)
    man = Manifest(title=preset.description)
    files, trace = _emit_curves(rs, cfg, out)
    T = abs(rs.problem.field.t) ** 2
    p1 = rs.problem.modes[0].pole
    man.add_info("incidence", cfg.incidence.describe())
    man.add_info("resolved_E_meV", rs.E_meV)
    man.add_info("T_at_E1", float(T))
    man.add_info("envelope_time_constant_ps", 2.0 * p1.hbar / p1.Gamma)
    d_m = trace.densities[METHOD_TWO_LEVEL_M]
    d_env = trace.densities[METHOD_EXPONENTIAL]
    dev = float(np.max(np.abs(d_m - d_env)))
    man.check_bound(
        "max |doublet M-form - envelope| over [0, 10 tau1]",
        f"< {0.05 * T:.6g} (0.05 T)",
        dev,
        bool(dev < 0.05 * T),
    )
    # the same envelope with the bare pole lifetime misses by ~0.38 T;
    # recorded so nobody silently "fixes" the time constant
    d_env_bare = density_resonant_exponential(float(T), p1.tau, trace.times)
    man.add_info(
        "bare-lifetime envelope max deviation (not used)",
        float(np.max(np.abs(d_m - d_env_bare))),
    )
    freqs = frequencies(rs.problem.E, p1, rs.problem.modes[1].pole)
    f_res = dominant_frequency_series(trace.times, d_m - d_env)
    ok = f_res is not None and abs(f_res - freqs.omega_21) <= 0.05 * freqs.omega_21
    man.check_bound(
        "residual oscillation frequency (rad/ps)",
        f"{freqs.omega_21:.6g} +- 5%",
        -1.0 if f_res is None else float(f_res),
        bool(ok),
    )
    files.append(
        gnuplot_script(
            out / "fig2a.gp",
            preset.description,
            [(Path(f).name, m) for f, m in zip(files, cfg.methods)],
        )
    )
    return man, files


def _run_fig2b(preset: FigurePreset, out: Path):
    cfg = preset.configs[0]
    rs = resolve_scenario(cfg)
    man = Manifest(title=preset.description)
    files, trace = _emit_curves(rs, cfg, out)
    T = abs(rs.problem.field.t) ** 2
    man.add_info("incidence", cfg.incidence.describe())
    man.add_info("resolved_E_meV", rs.E_meV)
    man.check_abs("T at the doublet center", 0.119, float(T), 0.001)
    freqs = frequencies(
        rs.problem.E, rs.problem.modes[0].pole, rs.problem.modes[1].pole
    )
    man.add_info("omega21_rad_per_ps", freqs.omega_21)
    f_dom = dominant_frequency_series(trace.times, trace.densities[METHOD_EXACT])
    target = freqs.omega_21 / 2.0
    ok = f_dom is not None and abs(f_dom - target) <= 0.03 * target
    man.check_bound(
        "dominant frequency (rad/ps)",
        f"{target:.6g} +- 3%",
        -1.0 if f_dom is None else float(f_dom),
        bool(ok),
    )
    files.append(
        gnuplot_script(
            out / "fig2b.gp",
            preset.description,
            [(Path(f).name, m) for f, m in zip(files, cfg.methods)],
        )
    )
    return man, files


def _run_fig3a(preset: FigurePreset, out: Path):
    cfg_t, cfg_d = preset.configs
    rs_t = resolve_scenario(cfg_t)
    rs_d = resolve_scenario(cfg_d)
    man = Manifest(title=preset.description)
    files_t, trace_t = _emit_curves(rs_t, cfg_t, out)
    files_d, trace_d = _emit_curves(rs_d, cfg_d, out)
    T_t = abs(rs_t.problem.field.t) ** 2
    T_d = abs(rs_d.problem.field.t) ** 2
    man.add_info("triple incidence", cfg_t.incidence.describe())
    man.add_info("double incidence", cfg_d.incidence.describe())
    man.add_info("triple resolved_E_meV", rs_t.E_meV)
    man.add_info("double resolved_E_meV", rs_d.E_meV)
    man.add_info("triple transient maximum", float(trace_t.densities[METHOD_EXACT].max()))
    man.add_info("double transient maximum", float(trace_d.densities[METHOD_EXACT].max()))
    man.check_abs("triple asymptote T", 0.119, float(T_t), 0.001)
    man.check_abs("double asymptote T (own doublet offset)", 0.0229, float(T_d), 0.0002)
    # the stated value is tied to the printed incidence energy; record it too
    T_lit = transmission(cfg_d.profile(), 83.740e-3)[1]
    man.check_abs("double T at the stated 83.740 meV", 0.0229, float(T_lit), 0.0002)
    files = files_t + files_d
    files.append(
        gnuplot_script(
            out / "fig3a.gp",
            preset.description,
            [
                (Path(files_t[0]).name, "triple barrier at doublet center"),
                (Path(files_d[0]).name, "double barrier, matched offset"),
            ],
        )
    )
    return man, files


def _run_fig3b(preset: FigurePreset, out: Path):
    man = Manifest(title=preset.description)
    files: list[str] = []
    curve_specs = []
    T_values = []
    for cfg, b2 in zip(preset.configs, (3, 4, 5)):
        rs = resolve_scenario(cfg)
        f, trace = _emit_curves(rs, cfg, out)
        files.extend(f)
        T = abs(rs.problem.field.t) ** 2
        T_values.append(float(T))
        man.add_info(f"b2={b2}nm doublet center (meV)", rs.E_meV)
        man.add_info(f"b2={b2}nm T at doublet center", float(T))
        man.add_info(
            f"b2={b2}nm transient maximum",
            float(trace.densities[METHOD_EXACT].max()),
        )
        curve_specs.append((Path(f[0]).name, f"b2 = {b2} nm"))
    increasing = T_values[0] < T_values[1] < T_values[2]
    man.check_bound(
        "T(doublet center) strictly increasing over b2 = 3, 4, 5 nm",
        "T(3) < T(4) < T(5)",
        float(T_values[2] - T_values[0]),
        bool(increasing),
    )
    man.check_bound(
        "T(doublet center) at b2 = 5 nm",
        "> 0.5",
        T_values[2],
        bool(T_values[2] > 0.5),
    )
    files.append(gnuplot_script(out / "fig3b.gp", preset.description, curve_specs))
    return man, files
