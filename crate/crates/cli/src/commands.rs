use std::path::PathBuf;

use clap::ValueEnum;
use polariton_core::cavity;
use polariton_core::dielectric;
use polariton_core::fluct;
use polariton_core::greens::{green_coefficients, green_function, ode_residual};
use polariton_core::hopfield::{self, BogoliubovProblem};
use polariton_core::iomodel::{self, FIGURE2_COLUMNS};
use polariton_core::table::monotonic_trend;
use polariton_core::{Branch, PolaritonError, C64};

use crate::config::{Config, SweepSpec};
use crate::csv::{format_f64, Cell, Csv};
use crate::error::{CliError, Result};
use crate::svg::{Plot, Stroke};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Bulk polariton branches omega_L,U(k), index and group velocity
    Dispersion,
    /// Hopfield coefficients of the discrete cavity mode versus coupling
    Hopfield,
    /// Cavity resonances and their dissipation rates in a frequency range
    Resonances,
    /// Intracavity transfer and reflection amplitudes versus frequency
    Spectrum,
    /// Boundary-derived dissipation rate versus frequency
    KappaSweep,
    /// Frequencies and rates of both coupling routes versus Rabi splitting
    Figure2,
    /// Green's function against the cavity amplitudes and its wave equation
    GreensCheck,
    /// Field commutator weights versus wavenumber
    Fluct,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Dispersion => "dispersion",
            Command::Hopfield => "hopfield",
            Command::Resonances => "resonances",
            Command::Spectrum => "spectrum",
            Command::KappaSweep => "kappa-sweep",
            Command::Figure2 => "figure2",
            Command::GreensCheck => "greens-check",
            Command::Fluct => "fluct",
        }
    }

    fn default_sweep(self) -> SweepSpec {
        match self {
            Command::Dispersion => SweepSpec::new(0.01, 4.0, 400),
            Command::Hopfield | Command::Figure2 => SweepSpec::new(0.01, 1.5, 150),
            Command::Resonances => SweepSpec::new(0.5, 1.5, 2),
            Command::Spectrum => SweepSpec::new(0.9, 1.1, 2001),
            Command::KappaSweep => SweepSpec::new(0.05, 4.0, 400),
            Command::GreensCheck => SweepSpec::new(0.05, 4.0, 1000),
            Command::Fluct => SweepSpec::new(0.01, 4.0, 200),
        }
    }
}

/// Runs `cmd`, writes its files and returns the lines to print on stdout.
pub fn run(cmd: Command, cfg: &mut Config) -> Result<Vec<String>> {
    let sweep = cfg.resolve_sweep(cmd.default_sweep())?;
    let out = cfg.out_dir();
    std::fs::create_dir_all(&out).map_err(|e| CliError::io(&out, e))?;
    let ctx = Context {
        cmd,
        out,
        svg: cfg.bool("output", "svg")?,
        header: header(cmd, cfg),
    };
    match cmd {
        Command::Dispersion => dispersion(&ctx, cfg, sweep),
        Command::Hopfield => hopfield_sweep(&ctx, cfg, sweep),
        Command::Resonances => resonances(&ctx, cfg, sweep),
        Command::Spectrum => spectrum(&ctx, cfg, sweep),
        Command::KappaSweep => kappa_sweep(&ctx, cfg, sweep),
        Command::Figure2 => figure2(&ctx, cfg, sweep),
        Command::GreensCheck => greens_check(&ctx, cfg, sweep),
        Command::Fluct => fluct_sweep(&ctx, cfg, sweep),
    }
}

struct Context {
    cmd: Command,
    out: PathBuf,
    svg: bool,
    header: Vec<String>,
}

impl Context {
    fn path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }

    fn stem(&self) -> String {
        self.cmd.name().replace('-', "_")
    }

    fn write_csv(&self, mut csv: Csv, name: &str, lines: &mut Vec<String>) -> Result<()> {
        let path = self.path(name);
        let rows = csv.len();
        csv.prepend_comments(&self.header);
        csv.write(&path)?;
        lines.push(format!("wrote {} ({rows} rows)", path.display()));
        Ok(())
    }

    fn write_svg(&self, plot: &Plot, name: &str, lines: &mut Vec<String>) -> Result<()> {
        let path = self.path(name);
        plot.write(&path)?;
        lines.push(format!("wrote {}", path.display()));
        Ok(())
    }
}

fn header(cmd: Command, cfg: &Config) -> Vec<String> {
    let mut lines = vec![format!(
        "polariton-mbc {} {}",
        cmd.name(),
        env!("CARGO_PKG_VERSION")
    )];
    lines.extend(cfg.render());
    lines
}

fn column(rows: &[Vec<f64>], i: usize) -> Vec<f64> {
    rows.iter().map(|r| r[i]).collect()
}

fn numeric_csv(names: &[&str], rows: &[Vec<f64>]) -> Csv {
    let mut csv = Csv::new(names);
    for r in rows {
        csv.push(r.iter().map(|&v| Cell::from(v)).collect());
    }
    csv
}

fn dispersion(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let medium = cfg.medium()?;
    let rows = sweep
        .points()
        .into_iter()
        .map(|k| {
            let (wl, wu) = hopfield::eigenfrequencies(&BogoliubovProblem::bulk(k, &medium)?);
            Ok(vec![
                k,
                wl,
                wu,
                k / wl,
                k / wu,
                dielectric::branch_group_velocity(k, wl, &medium),
                dielectric::branch_group_velocity(k, wu, &medium),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let names = ["k", "omega_L", "omega_U", "n_L", "n_U", "vg_L", "vg_U"];
    let mut lines = Vec::new();
    ctx.write_csv(
        numeric_csv(&names, &rows),
        &format!("{}.csv", ctx.stem()),
        &mut lines,
    )?;
    if ctx.svg {
        let k = column(&rows, 0);
        let plot = Plot::new(
            "Bulk polariton dispersion",
            "c k / omega_T",
            "omega / omega_T",
        )
        .line("omega_L", &k, &column(&rows, 1), Stroke::Solid, 0)
        .line("omega_U", &k, &column(&rows, 2), Stroke::Solid, 1)
        .line("c k", &k, &k, Stroke::Dotted, 5);
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

fn hopfield_sweep(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let omega_t = cfg.f64("medium", "omega_t")?;
    let photon_freq = cfg.f64("hopfield", "photon_freq")?;
    let rows = sweep
        .points()
        .into_iter()
        .map(|rabi| {
            let prob = BogoliubovProblem::new(photon_freq, omega_t, rabi)?;
            let (l, u) = hopfield::diagonalize(&prob);
            let mut row = vec![
                rabi,
                l.omega,
                u.omega,
                hopfield::photon_weight(&l),
                hopfield::photon_weight(&u),
            ];
            for m in [l, u] {
                row.extend([m.w.re, m.x.im, m.y.re, m.z.im]);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let names = [
        "rabi", "omega_L", "omega_U", "photon_L", "photon_U", "w_L", "x_L_im", "y_L", "z_L_im",
        "w_U", "x_U_im", "y_U", "z_U_im",
    ];
    let mut lines = Vec::new();
    ctx.write_csv(
        numeric_csv(&names, &rows),
        &format!("{}.csv", ctx.stem()),
        &mut lines,
    )?;
    if ctx.svg {
        let rabi = column(&rows, 0);
        let plot = Plot::new(
            "Discrete-mode polaritons",
            "Omega_R / omega_T",
            "omega / omega_T",
        )
        .line("omega_L", &rabi, &column(&rows, 1), Stroke::Solid, 0)
        .line("omega_U", &rabi, &column(&rows, 2), Stroke::Solid, 1)
        .line("|w_L|^2", &rabi, &column(&rows, 3), Stroke::Dashed, 0)
        .line("|w_U|^2", &rabi, &column(&rows, 4), Stroke::Dashed, 1);
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

fn resonances(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let cav = cfg.cavity()?;
    let found = cfg.search()?.find(
        &cav,
        sweep.start..sweep.stop,
        cfg.usize("resonances", "max_count")?,
    )?;
    let mut csv = Csv::new(&["omega", "kappa", "mode_index", "branch"]);
    for r in &found {
        csv.push(vec![
            Cell::Num(r.omega),
            Cell::Num(r.kappa),
            Cell::Int(r.mode_index.into()),
            Cell::Text(r.branch.label()),
        ]);
    }
    csv.comment(format!("length = {}", format_f64(cav.length())));
    let mut lines = found
        .iter()
        .map(|r| {
            format!(
                "{} {}: omega = {:.12}, kappa = {:.6e}",
                r.branch.label(),
                r.mode_index,
                r.omega,
                r.kappa
            )
        })
        .collect::<Vec<_>>();
    ctx.write_csv(csv, &format!("{}.csv", ctx.stem()), &mut lines)?;
    if ctx.svg && !found.is_empty() {
        let w: Vec<f64> = found.iter().map(|r| r.omega).collect();
        let k: Vec<f64> = found.iter().map(|r| r.kappa).collect();
        let plot = Plot::new("Cavity resonances", "omega / omega_T", "kappa / omega_T").line(
            "kappa",
            &w,
            &k,
            Stroke::Solid,
            0,
        );
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

fn spectrum(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let cav = cfg.cavity()?;
    let rows: Vec<Vec<f64>> = sweep
        .points()
        .into_iter()
        .map(|w| {
            let t = cavity::intracavity_transfer(w, &cav);
            let r = cavity::reflection(w, &cav);
            vec![w, t.re, t.im, t.norm_sqr(), r.re, r.im, r.norm()]
        })
        .collect();
    let names = ["omega", "T_re", "T_im", "T_abs2", "r_re", "r_im", "r_abs"];
    let mut lines = Vec::new();
    ctx.write_csv(
        numeric_csv(&names, &rows),
        &format!("{}.csv", ctx.stem()),
        &mut lines,
    )?;
    if ctx.svg {
        let plot = Plot::new("Intracavity transfer", "omega / omega_T", "|T|^2").line(
            "|T|^2",
            &column(&rows, 0),
            &column(&rows, 3),
            Stroke::Solid,
            0,
        );
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

fn kappa_sweep(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let cav = cfg.cavity()?;
    let kappa0 = cavity::bare_kappa(cfg.f64("cavity", "lambda")?, cav.length());
    let medium = *cav.medium();
    let rows = sweep
        .points()
        .into_iter()
        .map(|w| {
            if medium.in_stop_band(w) {
                return Ok(vec![w, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN]);
            }
            let kappa = cavity::kappa_mbc(w, &cav)?;
            Ok(vec![
                w,
                dielectric::lossless_index(w, &medium)?,
                dielectric::group_velocity(w, &medium)?,
                kappa,
                kappa / kappa0,
                cav.good_cavity_ratio(w)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let names = [
        "omega",
        "n",
        "vg",
        "kappa_mbc",
        "kappa_over_kappa0",
        "good_cavity_ratio",
    ];
    let mut csv = numeric_csv(&names, &rows);
    csv.comment(format!("kappa0 = {}", format_f64(kappa0)));
    let mut lines = Vec::new();
    ctx.write_csv(csv, &format!("{}.csv", ctx.stem()), &mut lines)?;
    if ctx.svg {
        let plot = Plot::new(
            "Boundary-derived dissipation rate",
            "omega / omega_T",
            "kappa / kappa_0",
        )
        .line(
            "kappa_MBC",
            &column(&rows, 0),
            &column(&rows, 4),
            Stroke::Solid,
            0,
        )
        .hline("kappa_0", 1.0, Stroke::Dotted, 5);
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

fn figure2(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let lambda = cfg.f64("figure2", "lambda")?;
    let kappa0 = cfg.f64("figure2", "kappa0")?;
    let table = iomodel::figure2_sweep(&sweep.points(), lambda, kappa0)?;
    let col = |name: &str| table.column(name).expect("figure2 column");

    let mut lines = Vec::new();
    let freqs = Csv::from_table(&table);
    ctx.write_csv(freqs, "fig2_frequencies.csv", &mut lines)?;

    let mut rates = Csv::from_table(&table);
    for name in &FIGURE2_COLUMNS[5..] {
        let values = col(name);
        rates.comment(format!(
            "trend {name} = {} (first/kappa0 = {})",
            monotonic_trend(values).label(),
            format_f64(values[0] / kappa0)
        ));
    }
    ctx.write_csv(rates, "fig2_rates.csv", &mut lines)?;

    for name in &FIGURE2_COLUMNS[5..] {
        lines.push(format!("{name}: {}", monotonic_trend(col(name)).label()));
    }

    let rabi = table.axis();
    let a = Plot::new(
        "Polariton frequencies",
        "Omega_R / omega_T",
        "omega / omega_T",
    )
    .line("L (MBC)", rabi, col("omega_L_mbc"), Stroke::Solid, 0)
    .line("U (MBC)", rabi, col("omega_U_mbc"), Stroke::Solid, 1)
    .line("L (discrete)", rabi, col("omega_L_disc"), Stroke::Dashed, 0)
    .line("U (discrete)", rabi, col("omega_U_disc"), Stroke::Dashed, 1);
    ctx.write_svg(&a, "fig2a.svg", &mut lines)?;
    let over = |name: &str| col(name).iter().map(|k| k / kappa0).collect::<Vec<_>>();
    let b = Plot::new("Dissipation rates", "Omega_R / omega_T", "kappa / kappa_0")
        .line("L (MBC)", rabi, &over("kappa_L_mbc"), Stroke::Solid, 0)
        .line("U (MBC)", rabi, &over("kappa_U_mbc"), Stroke::Solid, 1)
        .line("L (RWA)", rabi, &over("kappa_L_rwa"), Stroke::Dashed, 0)
        .line("U (RWA)", rabi, &over("kappa_U_rwa"), Stroke::Dashed, 1)
        .hline("kappa_0", 1.0, Stroke::Dotted, 5);
    ctx.write_svg(&b, "fig2b.svg", &mut lines)?;
    Ok(lines)
}

/// Low-discrepancy points in `[lo, hi]`: golden-ratio additive recurrence.
fn recurrence(lo: f64, hi: f64, count: usize, alpha: f64) -> Vec<f64> {
    (1..=count)
        .map(|i| lo + (hi - lo) * (i as f64 * alpha).fract())
        .collect()
}

fn greens_check(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let cav = cfg.cavity()?;
    let length = cav.length();
    let tol_coef = cfg.f64("tolerances", "coefficients")?;
    let tol_ode = cfg.f64("tolerances", "ode")?;
    let tol_recip = cfg.f64("tolerances", "reciprocity")?;
    let zprime = cfg.f64("greens", "zprime_over_length")? * length;
    let step = cfg.f64("greens", "step_over_length")? * length;
    let ode_samples = cfg.usize("greens", "ode_samples")?;

    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let freqs = recurrence(sweep.start, sweep.stop, sweep.count, golden);
    let depths = recurrence(0.0, 1.0, sweep.count, 2f64.sqrt() - 1.0);

    let mut csv = Csv::new(&[
        "omega",
        "coefficient_dev",
        "reciprocity_dev",
        "ode_residual",
    ]);
    let (mut max_coef, mut max_recip, mut max_ode) = (0.0f64, 0.0f64, 0.0f64);
    for (i, (&w, &u)) in freqs.iter().zip(&depths).enumerate() {
        let g = green_coefficients(C64::new(w, 0.0), &cav);
        let r = cavity::reflection(w, &cav);
        let t = cavity::intracavity_transfer(w, &cav);
        let coef = ((g.g_r21 - r).norm() / r.norm().max(1.0))
            .max((g.g_t21 - t).norm() / t.norm().max(1.0));

        let z = -2.0 * length * u;
        let a = green_function(z, zprime, C64::new(w, 0.0), &cav)?;
        let b = green_function(zprime, z, C64::new(w, 0.0), &cav)?;
        let recip = (a - b).norm() / a.norm().max(f64::MIN_POSITIVE);

        let ode = if i < ode_samples {
            ode_residual(zprime, w, &cav, step)?
        } else {
            f64::NAN
        };
        max_coef = max_coef.max(coef);
        max_recip = max_recip.max(recip);
        if ode.is_finite() {
            max_ode = max_ode.max(ode);
        }
        csv.push(vec![Cell::Num(w), coef.into(), recip.into(), ode.into()]);
    }
    for (name, v) in [
        ("coefficients", max_coef),
        ("reciprocity", max_recip),
        ("ode", max_ode),
    ] {
        csv.comment(format!("max {name} = {}", format_f64(v)));
    }

    let mut lines = vec![
        format!("max coefficient deviation {max_coef:.3e} (tolerance {tol_coef:e})"),
        format!("max reciprocity deviation {max_recip:.3e} (tolerance {tol_recip:e})"),
        format!(
            "max ODE residual {max_ode:.3e} (tolerance {tol_ode:e}, {} frequencies)",
            ode_samples.min(freqs.len())
        ),
    ];
    ctx.write_csv(csv, &format!("{}.csv", ctx.stem()), &mut lines)?;

    let failed: Vec<&str> = [
        ("coefficients", max_coef, tol_coef),
        ("reciprocity", max_recip, tol_recip),
        ("ode", max_ode, tol_ode),
    ]
    .into_iter()
    .filter(|(_, v, tol)| v.is_nan() || v > tol)
    .map(|(name, _, _)| name)
    .collect();
    if !failed.is_empty() {
        return Err(CliError::Tolerance(format!(
            "{} exceeded ({})",
            failed.join(", "),
            lines[..3].join("; ")
        )));
    }
    Ok(lines)
}

fn parse_branch(raw: &str) -> Result<Branch> {
    match raw {
        "lower" | "L" => Ok(Branch::Lower),
        "upper" | "U" => Ok(Branch::Upper),
        "bare" => Ok(Branch::Bare),
        _ => Err(CliError::Config(format!(
            "fluct.branch = `{raw}` is not lower, upper or bare"
        ))),
    }
}

fn fluct_sweep(ctx: &Context, cfg: &Config, sweep: SweepSpec) -> Result<Vec<String>> {
    let medium = cfg.medium()?.lossless();
    let branch = parse_branch(cfg.raw("fluct", "branch"))?;
    let rows = sweep
        .points()
        .into_iter()
        .map(|q| match fluct::mode_commutators(q, &medium, branch) {
            Ok(c) => Ok(vec![
                q, c.omega_q, c.index, c.a_comm, c.e_comm, c.b_comm, c.d_comm,
            ]),
            Err(PolaritonError::NoModeOnBranch { .. }) => Ok(vec![
                q,
                f64::NAN,
                f64::NAN,
                f64::NAN,
                f64::NAN,
                f64::NAN,
                f64::NAN,
            ]),
            Err(e) => Err(e.into()),
        })
        .collect::<Result<Vec<_>>>()?;
    let names = ["q", "omega_q", "n", "A_comm", "E_comm", "B_comm", "D_comm"];
    let mut lines = Vec::new();
    ctx.write_csv(
        numeric_csv(&names, &rows),
        &format!("{}.csv", ctx.stem()),
        &mut lines,
    )?;
    if ctx.svg {
        let q = column(&rows, 0);
        let ratio = |i: usize, vac: fn(f64) -> f64| {
            rows.iter().map(|r| r[i] / vac(r[0])).collect::<Vec<_>>()
        };
        let plot = Plot::new(
            "Field commutators relative to vacuum",
            "c q / omega_T",
            "ratio",
        )
        .line("E", &q, &ratio(4, |q| q / 2.0), Stroke::Solid, 0)
        .line("D", &q, &ratio(6, |q| q / 2.0), Stroke::Solid, 1)
        .line("A", &q, &ratio(3, |q| 1.0 / (2.0 * q)), Stroke::Dashed, 2)
        .hline("vacuum", 1.0, Stroke::Dotted, 5);
        ctx.write_svg(&plot, &format!("{}.svg", ctx.stem()), &mut lines)?;
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_stays_in_range() {
        let pts = recurrence(0.05, 4.0, 1000, (5f64.sqrt() - 1.0) / 2.0);
        assert!(pts.iter().all(|&w| (0.05..4.0).contains(&w)));
        let mut sorted = pts.clone();
        sorted.sort_by(f64::total_cmp);
        let max_gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        assert!(max_gap < 0.02);
    }

    #[test]
    fn branch_names() {
        assert_eq!(parse_branch("upper").unwrap(), Branch::Upper);
        assert!(parse_branch("middle").is_err());
    }
}
