//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::f64::consts::{E, LN_2, PI};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use v2i_secrecy::config::reference_config;
use v2i_secrecy::figure::figure_preset;
use v2i_secrecy::parallel::parallel_simulate;
use v2i_secrecy::sweep::{run_sweep, SweepResult, SweepSpec, SweepVariable};
use v2i_secrecy::validate::{validate, ValidateOptions};
use v2i_secrecy_core::analytic::*;
use v2i_secrecy_core::channels::*;
use v2i_secrecy_core::montecarlo::{chunk_rng, McConfig, McModel};
use v2i_secrecy_core::quadrature::{
    integrate_finite, integrate_semi_infinite, integrate_vertical_contour, ContourSpec,
};
use v2i_secrecy_core::specfun::{bessel_k, expint_e1, gamma_q, log_gamma, upper_incomplete_gamma};

type Outcome = (bool, String);

const SAMPLES: u64 = 1_000_000;
const ALL: [Architecture; 3] = [Architecture::Irs, Architecture::Df, Architecture::Affg];

fn fp(alpha: f64, beta: f64) -> FadingParams {
    FadingParams::new(alpha, beta).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn analytic_only(spec: &SweepSpec) -> SweepSpec {
    SweepSpec { methods: vec![Method::Analytic], ..spec.clone() }
}

/// Secrecy, L and E per (value, architecture) of an analytic sweep.
fn table(result: &SweepResult) -> Vec<(f64, Architecture, SecrecyReport)> {
    result.rows.iter().map(|r| (r.value, r.architecture, r.outcome.clone().expect("sweep row failed"))).collect()
}

fn series(table: &[(f64, Architecture, SecrecyReport)], arch: Architecture) -> Vec<(f64, SecrecyReport)> {
    table.iter().filter(|(_, a, _)| *a == arch).map(|(v, _, r)| (*v, *r)).collect()
}

fn c1_analytic_vs_monte_carlo() -> Outcome {
    let spec = SweepSpec {
        variable: SweepVariable::TxPowerDbm,
        from: 0.0,
        to: 20.0,
        step: 10.0,
        architectures: ALL.to_vec(),
        methods: vec![Method::Analytic, Method::MonteCarlo],
    };
    let cfg = McConfig::new(SAMPLES, 1);
    let mut config = reference_config();
    config.irs.n_elements = 1;
    let n1 = validate(&config, Some(&spec), &[Architecture::Irs], &cfg, &ValidateOptions::default());
    config.irs.n_elements = 4;
    let n4 = validate(&config, Some(&spec), &ALL, &cfg, &ValidateOptions::default());
    let entries = n1.entries.len() + n4.entries.len();
    let failed: Vec<String> = n1
        .entries
        .iter()
        .chain(&n4.entries)
        .filter(|e| !e.pass)
        .map(|e| format!("{} dB {} {} z={:.2}", e.value, e.architecture.label(), e.quantity.label(), e.z))
        .collect();
    (
        failed.is_empty(),
        format!(
            "{entries} comparisons at P ∈ {{0,10,20}} dB, IRS N ∈ {{1,4}}, DF, AFFG, 10⁶ samples; max |z| = {:.2}{}",
            n1.max_abs_z().max(n4.max_abs_z()),
            if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(", ")) }
        ),
    )
}

fn c2_df_three_paths() -> Outcome {
    let mut worst: f64 = 0.0;
    for a1 in 1..=3 {
        for ab in 1..=3 {
            for b1 in [0.5, 1.0, 5.0] {
                for bb in [0.5, 1.0, 5.0] {
                    let (f1, fb) = (fp(f64::from(a1), b1), fp(f64::from(ab), bb));
                    let v = |p| df_ergodic_capacity_via(f1, fb, p).map(|c| c.bits_per_sec_hz);
                    match (v(DfPath::TricomiU), v(DfPath::MellinBarnes), v(DfPath::Quadrature)) {
                        (Ok(u), Ok(mb), Ok(q)) => worst = worst.max(rel(u, mb)).max(rel(u, q)).max(rel(mb, q)),
                        _ => return (false, format!("evaluation failed at α=({a1},{ab}) β=({b1},{bb})")),
                    }
                }
            }
        }
    }
    (worst <= 1e-7, format!("81 parameter sets; worst pairwise relative difference {worst:.2e} (limit 1e-7)"))
}

fn c3_exponential_case() -> Outcome {
    let oracle = E * expint_e1(1.0).unwrap() / LN_2;
    let (f1, fb) = (fp(1.0, 0.3), fp(1.0, 0.7));
    let analytic = df_ergodic_capacity(f1, fb).unwrap().bits_per_sec_hz;
    let scenario = ScenarioRelay {
        geometry: Geometry { d_source_node: 1.0, d_node_legit: 1.0, d_node_eve: 1.0, pathloss_exponent: 2.0 },
        fading_1: f1,
        fading_2: fb,
        fading_3: fb,
        tx_power_dbm: 0.0,
        noise: NoisePowers::uniform(1.0),
        relay_gain: RelayGain::Auto,
    };
    let mc = parallel_simulate(&McModel::df(&scenario).unwrap(), &McConfig::new(SAMPLES, 3)).unwrap().legit;
    let z = (mc.bits_per_sec_hz - oracle) / mc.std_error;
    let pass = (analytic - 0.86034).abs() <= 1e-4 && (analytic - oracle).abs() <= 1e-4 && z.abs() <= 3.0;
    (pass, format!("oracle {oracle:.6}, analytic {analytic:.6}, Monte Carlo {:.6} (z = {z:.2})", mc.bits_per_sec_hz))
}

fn c4_gamma_gamma_distribution() -> Outcome {
    const DRAWS: usize = 10_000_000;
    const BINS: usize = 48;
    let mut lines = Vec::new();
    let mut pass = true;
    for (seed, (a_t, b_t, a_i, b_i)) in
        [(2.0, 1.0, 2.0, 1.0), (2.0, 2.0, 3.0, 5.0), (1.5, 1.0, 4.0, 2.0)].into_iter().enumerate()
    {
        let (t, i) = (fp(a_t, b_t), fp(a_i, b_i));
        let p = GammaGammaParams::from_hops(t, i, 1.0).unwrap();
        let pdf = |g: f64| gamma_gamma_pdf(g, &p).unwrap();
        let mass = integrate_semi_infinite(pdf, 1e-12, 200_000).unwrap().value;

        let (lo, hi) = (1e-2 * p.mean(), 12.0 * p.mean());
        let ratio = (hi / lo).powf(1.0 / (BINS - 2) as f64);
        let mut edges = vec![0.0];
        edges.extend((0..BINS - 1).map(|k| lo * ratio.powi(k as i32)));
        let mut probs: Vec<f64> =
            edges.windows(2).map(|w| integrate_finite(pdf, w[0], w[1], 1e-12, 200_000).unwrap().value).collect();
        probs.push(1.0 - probs.iter().sum::<f64>());
        let (st, si) = (GammaSampler::new(t).unwrap(), GammaSampler::new(i).unwrap());
        let mut rng = chunk_rng(2024 + seed as u64, 0);
        let mut counts = vec![0u64; BINS];
        for _ in 0..DRAWS {
            let g = st.sample(&mut rng) * si.sample(&mut rng);
            counts[edges.partition_point(|&e| e <= g) - 1] += 1;
        }
        let (mut chi2, mut dof) = (0.0, 0usize);
        for (c, pr) in counts.iter().zip(&probs) {
            let expected = pr * DRAWS as f64;
            if expected >= 5.0 {
                chi2 += (*c as f64 - expected).powi(2) / expected;
                dof += 1;
            }
        }
        let p_value = gamma_q(0.5 * (dof - 1) as f64, 0.5 * chi2).unwrap();
        pass &= (mass - 1.0).abs() <= 1e-8 && p_value > 0.01;
        lines.push(format!("set {}: |∫−1| = {:.1e}, p = {p_value:.3}", seed + 1, (mass - 1.0).abs()));
    }
    (pass, format!("10⁷ draws per set; {}", lines.join("; ")))
}

fn power_table() -> Vec<(f64, Architecture, SecrecyReport)> {
    let preset = figure_preset(3, &[Method::Analytic]).unwrap();
    let s = &preset[0];
    table(&run_sweep(&analytic_only(&s.spec), &s.config.irs, &s.config.relay, &s.config.mc))
}

fn c5a_df_beats_affg_ergodic(t: &[(f64, Architecture, SecrecyReport)]) -> Outcome {
    let (df, af) = (series(t, Architecture::Df), series(t, Architecture::Affg));
    let bad: Vec<f64> = df
        .iter()
        .zip(&af)
        .filter(|((_, d), (_, a))| {
            !(d.legit.bits_per_sec_hz > a.legit.bits_per_sec_hz && d.eve.bits_per_sec_hz > a.eve.bits_per_sec_hz)
        })
        .map(|((p, _), _)| *p)
        .collect();
    (bad.is_empty(), format!("{} powers 0..50 dB, both receivers; violations at {bad:?}", df.len()))
}

fn c5b_secrecy_crossover(t: &[(f64, Architecture, SecrecyReport)]) -> Outcome {
    let (df, af) = (series(t, Architecture::Df), series(t, Architecture::Affg));
    let pairs: Vec<(f64, f64, f64)> =
        df.iter().zip(&af).map(|((p, d), (_, a))| (*p, d.secrecy.bits_per_sec_hz, a.secrecy.bits_per_sec_hz)).collect();
    let high = pairs.iter().enumerate().find(|(k, (_, d, a))| a > d && pairs[..*k].iter().any(|(_, d, a)| d > a));
    let low = high.and_then(|(k, _)| pairs[..k].iter().rev().find(|(_, d, a)| d > a));
    let high = high.map(|(_, h)| h);
    match (low, high) {
        (Some(l), Some(h)) => (
            true,
            format!("DF {:.3} > AFFG {:.3} at {} dB; AFFG {:.3} > DF {:.3} at {} dB", l.1, l.2, l.0, h.2, h.1, h.0),
        ),
        _ => (false, "no DF-then-AFFG crossover on 0..50 dB".into()),
    }
}

fn c5c_irs_beats_relays(t: &[(f64, Architecture, SecrecyReport)]) -> Outcome {
    let at = |arch| series(t, arch).into_iter().find(|(p, _)| *p == 20.0).unwrap().1.secrecy.bits_per_sec_hz;
    let (irs, df, af) = (at(Architecture::Irs), at(Architecture::Df), at(Architecture::Affg));
    (irs > df && irs > af, format!("at 20 dB: IRS (N=4) {irs:.4}, DF {df:.4}, AFFG {af:.4}"))
}

fn c6_monotonicity(power: &[(f64, Architecture, SecrecyReport)]) -> Outcome {
    let mut problems = Vec::new();
    let mut count = power.len();

    for s in figure_preset(5, &[Method::Analytic]).unwrap() {
        let t = table(&run_sweep(&s.spec, &s.config.irs, &s.config.relay, &s.config.mc));
        count += t.len();
        for arch in ALL {
            let v = series(&t, arch);
            for w in v.windows(2) {
                if w[1].1.secrecy.bits_per_sec_hz < w[0].1.secrecy.bits_per_sec_hz {
                    problems.push(format!("{} {} d3 {}→{}", s.name, arch.label(), w[0].0, w[1].0));
                }
            }
            problems.extend(
                v.iter().filter(|(_, r)| r.secrecy.bits_per_sec_hz < 0.0).map(|(d, _)| format!("negative at {d}")),
            );
        }
    }

    let mut by_n = Vec::new();
    for s in figure_preset(6, &[Method::Analytic]).unwrap() {
        let t = table(&run_sweep(&s.spec, &s.config.irs, &s.config.relay, &s.config.mc));
        count += t.len();
        by_n.push((s.config.irs.n_elements, series(&t, Architecture::Irs)));
    }
    by_n.sort_by_key(|(n, _)| *n);
    for w in by_n.windows(2) {
        for ((d, small), (_, large)) in w[0].1.iter().zip(&w[1].1) {
            if large.secrecy.bits_per_sec_hz < small.secrecy.bits_per_sec_hz {
                problems.push(format!("N {}→{} at d1 = {d}", w[0].0, w[1].0));
            }
        }
    }
    problems.extend(
        power.iter().filter(|(_, _, r)| r.secrecy.bits_per_sec_hz < 0.0).map(|(p, _, _)| format!("negative at {p} dB")),
    );

    let mut symmetric = 0;
    for p in [0.0, 20.0, 40.0] {
        let mut c = reference_config().with_power(p);
        c.irs.geometry.d_node_eve = c.irs.geometry.d_node_legit;
        c.relay.geometry.d_node_eve = c.relay.geometry.d_node_legit;
        for arch in ALL {
            let s = report(arch, &c.irs, &c.relay).unwrap().secrecy.bits_per_sec_hz;
            symmetric += 1;
            if s != 0.0 {
                problems.push(format!("symmetric {} at {p} dB gives {s:e}", arch.label()));
            }
        }
    }
    (
        problems.is_empty(),
        format!(
            "{count} preset points (eavesdropper distance, N ∈ {{2,8,32,64}}, power), {symmetric} symmetric cases; {}",
            if problems.is_empty() { "no violations".to_string() } else { problems.join(", ") }
        ),
    )
}

fn c7_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("scenario.conf");
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/reference.conf")).unwrap();
    let text = text
        .replace("sweep.to = 50", "sweep.to = 20")
        .replace("sweep.step = 2", "sweep.step = 5")
        .replace("sweep.methods = [\"analytic\"]", "sweep.methods = [\"analytic\", \"monte-carlo\"]")
        .replace("mc.samples = 1000000", "mc.samples = 200000\nmc.chunk_size = 8192");
    std::fs::write(&config, text).unwrap();
    let run = |threads: &str, name: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_v2i-secrecy"))
            .args(["--threads", threads, "sweep", "--config"])
            .arg(&config)
            .arg("--out")
            .arg(&out)
            .output()
            .unwrap()
            .status;
        assert!(status.success());
        std::fs::read(out).unwrap()
    };
    let a = run("1", "a.csv");
    let b = run("1", "b.csv");
    let c = run("4", "c.csv");
    let d = run("3", "d.csv");
    let same = a == b && a == c && a == d;
    (
        same,
        format!("4 runs (threads 1, 1, 4, 3), {} bytes each, analytic + Monte Carlo rows; identical: {same}", a.len()),
    )
}

fn c8_special_functions() -> Outcome {
    let mut worst_k: f64 = 0.0;
    for x in [1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0] {
        let closed = (PI / (2.0 * x)).sqrt() * (-x).exp();
        worst_k = worst_k.max(rel(bessel_k(0.5, x).unwrap(), closed)).max(rel(bessel_k(-0.5, x).unwrap(), closed));
    }
    let mut worst_g: f64 = 0.0;
    for a in 1..=8u32 {
        for x in [0.0f64, 0.1, 0.5, 1.0, 1.5, 3.0, 10.0, 30.0] {
            let (mut term, mut sum) = (1.0, 1.0);
            for k in 1..a {
                term *= x / f64::from(k);
                sum += term;
            }
            let factorial: f64 = (1..a).map(f64::from).product();
            let closed = factorial * (-x).exp() * sum;
            worst_g = worst_g.max(rel(upper_incomplete_gamma(f64::from(a), x).unwrap(), closed));
        }
    }
    let spec = ContourSpec::new(0.5, 60.0, 4801).unwrap();
    let mut worst_c: f64 = 0.0;
    for x in [0.5f64, 1.0, 2.0, 5.0] {
        let v = integrate_vertical_contour(|s: Complex64| (log_gamma(s).unwrap() - s * x.ln()).exp(), &spec).unwrap();
        worst_c = worst_c.max(rel(v.re, (-x).exp()));
    }
    (
        worst_k <= 1e-10 && worst_g <= 1e-12 && worst_c <= 1e-8,
        format!("K_{{±1/2}} worst rel {worst_k:.1e} (≤1e-10); Γ(n,x) worst rel {worst_g:.1e} (≤1e-12); Cahen–Mellin worst rel {worst_c:.1e} (≤1e-8)"),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |id: &str, name: &str, started: Instant, (pass, detail): Outcome| {
        all &= pass;
        println!(
            "criterion {id:<3} {} {name}: {detail} [{:.1} s]",
            if pass { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64()
        );
    };
    let t = Instant::now();
    report("1", "analytic vs Monte Carlo", t, c1_analytic_vs_monte_carlo());
    let t = Instant::now();
    report("2", "DF three-path equivalence", t, c2_df_three_paths());
    let t = Instant::now();
    report("3", "exponential-case closed form", t, c3_exponential_case());
    let t = Instant::now();
    report("4", "Gamma-Gamma distribution", t, c4_gamma_gamma_distribution());
    let t = Instant::now();
    let power = power_table();
    report("5a", "DF ergodic > AFFG ergodic", t, c5a_df_beats_affg_ergodic(&power));
    let t = Instant::now();
    report("5b", "DF/AFFG secrecy crossover", t, c5b_secrecy_crossover(&power));
    let t = Instant::now();
    report("5c", "IRS secrecy above both relays at 20 dB", t, c5c_irs_beats_relays(&power));
    let t = Instant::now();
    report("6", "monotonicity and sign", t, c6_monotonicity(&power));
    let t = Instant::now();
    report("7", "determinism across thread counts", t, c7_determinism());
    let t = Instant::now();
    report("8", "special-function spot suite", t, c8_special_functions());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
