//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::{PI, TAU};
use std::process::{Command, ExitCode};

use irrep_entropy::entropy::{shannon, subadditivity_report, tsallis_subadditivity_report, QParam};
use irrep_entropy::probability::{JointTable, ProbabilityVector};
use irrep_entropy::specfun::{
    bargmann_b, bargmann_b_continued, dmatrix, hyp2f1, jacobi, s_factor, wigner_d, wigner_oracle,
    Su11Args, WignerDArgs,
};
use irrep_entropy::su11::{discrete_series_distribution, su11_subadditivity};
use irrep_entropy::su2::{closed_form_check, su2_subadditivity, su2_tsallis_subadditivity};
use irrep_entropy::{HalfInt, SeriesKind};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn grid(count: usize, stop: f64) -> Vec<f64> {
    (0..count)
        .map(|i| stop * i as f64 / (count - 1) as f64)
        .collect()
}

fn bistochasticity() -> Outcome {
    let mut worst = 0.0f64;
    for two_j in 1..=10 {
        for &theta in &grid(64, TAU) {
            let d = dmatrix(h(two_j), theta).unwrap();
            let n = d.dim();
            for k in 0..n {
                let row: f64 = (0..n).map(|c| d.get(k, c).powi(2)).sum();
                let col: f64 = (0..n).map(|r| d.get(r, k).powi(2)).sum();
                worst = worst.max((row - 1.0).abs()).max((col - 1.0).abs());
            }
        }
    }
    outcome(
        worst <= 1e-10,
        format!("max |row/column sum - 1| = {worst:.3e} (limit 1e-10)"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for two_j in 0..=8 {
        for &theta in &grid(16, TAU) {
            let a = dmatrix(h(two_j), theta).unwrap();
            let b = wigner_oracle(h(two_j), theta).unwrap();
            worst = worst.max(a.max_abs_diff(&b));
        }
    }
    outcome(
        worst <= 1e-9,
        format!("max entrywise deviation = {worst:.3e} (limit 1e-9)"),
    )
}

fn closed_forms() -> Outcome {
    let mut worst = 0.0f64;
    for &theta in &grid(64, TAU) {
        worst = worst.max(closed_form_check(h(3), theta).unwrap());
        worst = worst.max(closed_form_check(h(4), theta).unwrap());
    }
    outcome(
        worst <= 1e-12,
        format!("max deviation over j = 3/2, 2 = {worst:.3e} (limit 1e-12)"),
    )
}

fn figure_sweeps() -> Outcome {
    let roots = [0.0, PI, TAU];
    let mut min_slack = f64::INFINITY;
    let mut at_roots = 0.0f64;
    let mut away = f64::INFINITY;
    let mut away_theta = 0.0;
    for two_j in [3, 4] {
        let j = h(two_j);
        for &theta in &grid(256, TAU) {
            let s = su2_subadditivity(j, j, theta).unwrap().slack;
            min_slack = min_slack.min(s);
            let distance = roots
                .iter()
                .map(|r| (theta - r).abs())
                .fold(f64::INFINITY, f64::min);
            if distance > 0.1 && s < away {
                away = s;
                away_theta = theta;
            }
        }
        for r in roots {
            at_roots = at_roots.max(su2_subadditivity(j, j, r).unwrap().slack.abs());
        }
    }
    let pass = min_slack >= -1e-12 && at_roots <= 1e-9 && away >= 1e-4;
    outcome(
        pass,
        format!(
            "min slack = {min_slack:.3e} (>= -1e-12: {}); |slack| at 0, π, 2π <= {at_roots:.3e} (<= 1e-9: {}); \
             min slack farther than 0.1 from roots = {away:.3e} at θ = {away_theta:.4} (>= 1e-4: {})",
            min_slack >= -1e-12,
            at_roots <= 1e-9,
            away >= 1e-4
        ),
    )
}

fn symmetry_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = [0.0f64; 4];
    for _ in 0..1000 {
        let two_j: i64 = rng.gen_range(1..=10);
        let two_mp = 2 * rng.gen_range(0..=two_j) - two_j;
        let two_m = 2 * rng.gen_range(0..=two_j) - two_j;
        let theta: f64 = rng.gen_range(0.0..TAU);
        let d = |a: i64, b: i64, t: f64| {
            wigner_d(&WignerDArgs::new(h(two_j), h(a), h(b), t).unwrap()).unwrap()
        };
        let sign = if ((two_mp - two_m) / 2) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        let v = d(two_mp, two_m, theta);

        // canonical sector: d = sqrt(S) P for angles in [0, π), where both half-angle factors are nonnegative
        let (cp, cm) = (two_mp.abs().max(two_m.abs()), two_mp.abs().min(two_m.abs()));
        let angle = theta / 2.0;
        let args = WignerDArgs::new(h(two_j), h(cp), h(cm), angle).unwrap();
        let n = ((two_j - cp) / 2) as u32;
        let p = jacobi(
            n,
            ((cp - cm) / 2) as f64,
            ((cp + cm) / 2) as f64,
            angle.cos(),
        );
        let direct = s_factor(&args).unwrap().sqrt() * p;
        worst[0] = worst[0].max((d(cp, cm, angle) - direct).abs());

        worst[1] = worst[1].max((v - d(-two_m, -two_mp, theta)).abs());
        worst[2] = worst[2].max((v - sign * d(two_m, two_mp, theta)).abs());
        worst[3] = worst[3].max((v - sign * d(-two_mp, -two_m, theta)).abs());
    }
    let max = worst.iter().copied().fold(0.0, f64::max);
    outcome(
        max <= 1e-12,
        format!(
            "max deviations (canonical, reflected, transposed, negated) = {:.2e}, {:.2e}, {:.2e}, {:.2e} (limit 1e-12)",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

fn random_table(rng: &mut ChaCha8Rng) -> JointTable {
    let (n1, n2) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
    let mut w: Vec<f64> = (0..n1 * n2).map(|_| rng.gen::<f64>()).collect();
    // occasional exact zeros
    for v in w.iter_mut() {
        if rng.gen_bool(0.1) {
            *v = 0.0;
        }
    }
    w[0] += 1e-3;
    let total: f64 = w.iter().sum();
    JointTable::new(vec![n1, n2], w.iter().map(|v| v / total).collect()).unwrap()
}

fn tsallis_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut min_examples = f64::INFINITY;
    let mut min_random = f64::INFINITY;
    for q in [1.5, 2.0, 3.0] {
        let q = QParam::new(q).unwrap();
        for two_j in [3, 4] {
            for &theta in &grid(256, TAU) {
                let r = su2_tsallis_subadditivity(h(two_j), h(two_j), theta, q).unwrap();
                min_examples = min_examples.min(r.slack);
            }
        }
    }
    let qs = [1.5, 2.0, 3.0].map(|q| QParam::new(q).unwrap());
    for _ in 0..1000 {
        let t = random_table(&mut rng);
        for q in qs {
            min_random = min_random.min(tsallis_subadditivity_report(&t, q).unwrap().slack);
        }
    }
    let near_one = QParam::new(1.0 + 1e-6).unwrap();
    let mut limit = 0.0f64;
    for two_j in [3, 4] {
        for &theta in &grid(64, TAU) {
            let t = su2_tsallis_subadditivity(h(two_j), h(two_j), theta, near_one).unwrap();
            let s = su2_subadditivity(h(two_j), h(two_j), theta).unwrap();
            for (a, b) in [
                (t.h_joint, s.h_joint),
                (t.h_first, s.h_first),
                (t.h_second, s.h_second),
                (t.slack, s.slack),
            ] {
                limit = limit.max((a - b).abs());
            }
        }
    }
    let pass = min_examples >= -1e-12 && min_random >= -1e-12 && limit <= 1e-5;
    outcome(
        pass,
        format!(
            "min slack on examples = {min_examples:.3e}, on 1000 random tables = {min_random:.3e} \
             (limit -1e-12); max |Tsallis(q = 1 + 1e-6) - Shannon| = {limit:.3e} (limit 1e-5)"
        ),
    )
}

fn hypergeometric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
        let b = Complex64::new(rng.gen_range(0.1..4.0), rng.gen_range(-1.0..1.0));
        let z = Complex64::from_polar(rng.gen_range(0.0..0.8), rng.gen_range(0.0..TAU));
        let v = hyp2f1(a, b, b, z).unwrap();
        let want = (1.0 - z).powc(-a);
        worst = worst.max((v - want).norm() / want.norm());
    }
    let at_zero = hyp2f1(
        Complex64::new(0.7, 0.2),
        Complex64::new(-1.3, 0.0),
        Complex64::new(2.5, 1.0),
        Complex64::new(0.0, 0.0),
    )
    .unwrap();
    let exact_one = at_zero == Complex64::new(1.0, 0.0);
    outcome(
        worst <= 1e-12 && exact_one,
        format!("max relative error of (1-z)^(-a) identity = {worst:.3e} (limit 1e-12); 2F1(z=0) == 1 exactly: {exact_one}"),
    )
}

fn discrete_series() -> Outcome {
    let mut mass_dev = 0.0f64;
    let mut route_dev = 0.0f64;
    let mut min_slack = f64::INFINITY;
    for k in 1..=4u32 {
        let j = h(-i64::from(k));
        let m = -j;
        for t in [0.1, 0.5, 1.0, 1.5] {
            let d = discrete_series_distribution(k, m, t, 1e-9).unwrap();
            mass_dev = mass_dev.max((d.captured_mass - 1.0).abs());
            for (i, &v) in d.values.iter().enumerate() {
                let mp = SeriesKind::DiscretePositive.weight_at(j, i);
                let args = Su11Args::discrete_positive(k, mp, m, t).unwrap();
                let direct = bargmann_b(&args).unwrap().norm_sqr();
                let continued = bargmann_b_continued(&args).unwrap();
                route_dev = route_dev
                    .max((direct - continued).abs())
                    .max((v - direct).abs());
            }
            min_slack = min_slack.min(su11_subadditivity(&d).unwrap().slack);
        }
    }
    let pass = mass_dev <= 1e-8 && route_dev <= 1e-9 && min_slack >= -1e-10;
    outcome(
        pass,
        format!(
            "max |Σ|b|² - 1| = {mass_dev:.3e} (limit 1e-8); max route deviation = {route_dev:.3e} \
             (limit 1e-9); min slack = {min_slack:.3e} (limit -1e-10)"
        ),
    )
}

fn entropy_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut min_slack = f64::INFINITY;
    let mut max_product = 0.0f64;
    let mut min_dependent = f64::INFINITY;
    for i in 0..10_000 {
        if i % 2 == 0 {
            let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let draw = |n: usize, rng: &mut ChaCha8Rng| {
                let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() + 1e-3).collect();
                ProbabilityVector::normalized(&w).unwrap()
            };
            let (p, q) = (draw(n1, &mut rng), draw(n2, &mut rng));
            let r = subadditivity_report(&JointTable::product(&p, &q).unwrap()).unwrap();
            min_slack = min_slack.min(r.slack);
            max_product = max_product.max(r.slack.abs());
        } else {
            let t = random_table(&mut rng);
            let r = subadditivity_report(&t).unwrap();
            min_slack = min_slack.min(r.slack);
            let (first, second) = t.marginals().unwrap();
            let (n1, n2) = (t.dims()[0], t.dims()[1]);
            let mut dependence = 0.0f64;
            for a in 0..n1 {
                for b in 0..n2 {
                    let gap = t.get(a, b) - second.as_slice()[a] * first.as_slice()[b];
                    dependence = dependence.max(gap.abs());
                }
            }
            if dependence > 1e-3 {
                min_dependent = min_dependent.min(r.slack);
            }
        }
    }
    let p = ProbabilityVector::normalized(&[0.1, 0.4, 0.2, 0.3, 0.05]).unwrap();
    let padding_exact = (1..=6).all(|extra| shannon(&p.padded(extra)) == shannon(&p));
    let pass = min_slack >= -1e-12 && max_product <= 1e-8 && min_dependent > 1e-8 && padding_exact;
    outcome(
        pass,
        format!(
            "min slack = {min_slack:.3e} (limit -1e-12); max |slack| on product tables = {max_product:.3e} \
             (limit 1e-8); min slack on dependent tables = {min_dependent:.3e} (> 1e-8); zero padding exact: {padding_exact}"
        ),
    )
}

fn documented_commands() -> Vec<(Vec<&'static str>, i32)> {
    vec![
        (vec!["dmat", "--j", "1/2", "--theta", "0"], 0),
        (vec!["dmat", "--j", "2", "--theta", "1.0"], 0),
        (vec!["dmat", "--j", "3/2", "--theta", "3.14159"], 0),
        (
            vec![
                "su2-check",
                "--j",
                "3/2",
                "--m",
                "3/2",
                "--grid",
                "0:6.2832:256",
            ],
            0,
        ),
        (
            vec![
                "su2-check",
                "--j",
                "2",
                "--m",
                "2",
                "--grid",
                "0:6.2832:256",
            ],
            0,
        ),
        (
            vec!["su2-check", "--j", "3/2", "--m", "3/2", "--grid", "0:0:1"],
            0,
        ),
        (
            vec![
                "su2-tsallis",
                "--j",
                "3/2",
                "--grid",
                "0:6.2832:256",
                "--q",
                "2",
            ],
            0,
        ),
        (
            vec![
                "su2-tsallis",
                "--j",
                "3/2",
                "--grid",
                "0:6.2832:256",
                "--q",
                "0.5",
            ],
            0,
        ),
        (
            vec![
                "su2-tsallis",
                "--j",
                "3/2",
                "--grid",
                "0:6.2832:256",
                "--q",
                "1",
            ],
            2,
        ),
        (
            vec!["su11-check", "--k", "2", "--m", "1", "--grid", "0.1:1.5:8"],
            0,
        ),
        (
            vec!["su11-check", "--k", "2", "--m", "1", "--grid", "0:0:1"],
            0,
        ),
        (
            vec![
                "su11-check",
                "--series",
                "continuous",
                "--s",
                "0.5",
                "--sigma",
                "0",
                "--m",
                "0.5",
                "--grid",
                "0.1:0.5:5",
            ],
            0,
        ),
        (
            vec!["hyp2f1", "--a", "1", "--b", "2", "--c", "2", "--z", "0.5"],
            0,
        ),
        (
            vec!["hyp2f1", "--a", "1", "--b", "2", "--c", "2", "--z", "0"],
            0,
        ),
        (
            vec!["hyp2f1", "--a", "-2", "--b", "3", "--c", "1", "--z", "0.7"],
            0,
        ),
        (
            vec!["hyp2f1", "--a", "1", "--b", "2", "--c", "2", "--z", "0.99"],
            2,
        ),
        (
            vec!["su2-check", "--j", "1", "--m", "1/2", "--grid", "0:1:2"],
            2,
        ),
    ]
}

fn cli_determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_irrep-entropy");
    let mut failures = Vec::new();
    let commands = documented_commands();
    for (args, expected) in &commands {
        for format in ["csv", "json"] {
            let run = || {
                Command::new(exe)
                    .args(args)
                    .args(["--format", format])
                    .output()
                    .unwrap()
            };
            let (a, b) = (run(), run());
            if a.stdout != b.stdout {
                failures.push(format!("{} ({format}): output differs", args.join(" ")));
            }
            if a.status.code() != Some(*expected) || b.status.code() != Some(*expected) {
                failures.push(format!(
                    "{} ({format}): exit {:?}, expected {expected}",
                    args.join(" "),
                    a.status.code()
                ));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!(
            "{} commands x 2 formats byte-identical across runs, exit codes as expected",
            commands.len()
        )
    } else {
        failures.join("; ")
    };
    outcome(failures.is_empty(), detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("bistochasticity of |d|^2", bistochasticity),
        ("d-matrix vs matrix-exponential oracle", oracle_equivalence),
        ("closed forms for j = 3/2 and j = 2", closed_forms),
        (
            "256-point sweeps: sign, equality points, margin away from them",
            figure_sweeps,
        ),
        ("d-function symmetry relations", symmetry_suite),
        ("Tsallis subadditivity and q -> 1 limit", tsallis_suite),
        ("hypergeometric binomial identity", hypergeometric),
        (
            "SU(1,1) discrete series normalization, routes, slack",
            discrete_series,
        ),
        (
            "Shannon slack sign, product-form equality, padding",
            entropy_properties,
        ),
        ("CLI determinism and exit codes", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
