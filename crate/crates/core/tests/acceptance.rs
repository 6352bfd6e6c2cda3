//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use rand::Rng;
use softshrink::io::{read_csv, write_csv};
use softshrink::linalg::orthonormality_residual;
use softshrink::oracle::random::{matrix_with_spectrum, random_direction, uniform_matrix};
use softshrink::oracle::rng::{stream, OracleRng};
use softshrink::oracle::{
    bisect_budget_lambda, coordinate_grid_l1, feasible_spectral_point, grid_min_scalar,
    random_orthogonal, spectral_family_sweep, support_enum_l0, support_enum_l0_candidate,
    symmetric_eigs_jacobi, OracleReport, PerturbationCheck,
};
use softshrink::vector_prox::solve_budget_magnitudes;
use softshrink::{
    l0_approx, nuclear_ball_nearest, scalar_objective, shrink, soft_threshold, svd, svt, Beta,
    Lambda, Matrix, Tau,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "shrink matches scalar grid oracle", budget: secs(30), run: c1 },
        Criterion { id: 2, name: "shrink case coverage and uniqueness", budget: secs(5), run: c2 },
        Criterion { id: 3, name: "l0 approximation is exact", budget: secs(60), run: c3 },
        Criterion { id: 4, name: "soft threshold beats grid and perturbations", budget: secs(60), run: c4 },
        Criterion { id: 5, name: "svd quality", budget: secs(120), run: c5 },
        Criterion { id: 6, name: "diagonal inequality and unitary invariance", budget: secs(60), run: c6 },
        Criterion { id: 7, name: "singular value thresholding optimality", budget: secs(120), run: c7 },
        Criterion { id: 8, name: "nuclear ball nearest point", budget: secs(120), run: c8 },
        Criterion { id: 9, name: "budget solve matches bisection", budget: secs(10), run: c9 },
        Criterion { id: 10, name: "cli golden files and csv round trip", budget: secs(10), run: c10 },
    ];
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());

    let mut failed = 0;
    for c in criteria.iter().filter(|c| only.is_none_or(|k| k == c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!(
                "{detail}; runtime {:.2}s exceeds {}s",
                elapsed.as_secs_f64(),
                c.budget.as_secs()
            )),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "criterion {:>2} {tag}  {} ({:.2}s): {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
        if outcome.is_err() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Draw from `(0, hi]`.
fn open_closed(rng: &mut OracleRng, hi: f64) -> f64 {
    hi * (1.0 - rng.gen::<f64>())
}

fn lam(x: f64) -> Lambda<f64> {
    Lambda::new(x).unwrap()
}

fn random_shape(rng: &mut OracleRng, max_rows: usize, max_cols: usize) -> (usize, usize) {
    (rng.gen_range(1..=max_rows), rng.gen_range(1..=max_cols))
}

fn shifted(rng: &mut OracleRng, x: &Matrix, by: f64) -> Matrix {
    let (m, n) = x.shape();
    x.add(&random_direction::<f64>(rng, m, n).scale(by)).unwrap()
}

fn c1() -> Outcome {
    let mut worst = 0f64;
    let mut control_caught = 0;
    let n = 1000;
    for i in 0..n {
        let mut rng = stream(1, i);
        let a: f64 = rng.gen_range(-10.0..=10.0);
        let l = open_closed(&mut rng, 5.0);
        let x = shrink(a, lam(l)).map_err(|e| e.to_string())?;
        let g = grid_min_scalar(a, lam(l), 3.0 * l + a.abs(), 1_000_000);
        let err = (x - g).abs();
        worst = worst.max(err);
        check(err <= 1e-6, || format!("a={a} lambda={l}: shrink {x} vs grid {g}"))?;
        if ((x + 0.05) - g).abs() > 1e-6 {
            control_caught += 1;
        }
    }
    check(control_caught == n, || format!("shifted answer accepted on {} instances", n - control_caught))?;
    Ok(format!("{n} instances, max |shrink - grid| = {worst:.2e}, shifted control rejected on all"))
}

fn c2() -> Outcome {
    let mut instances = 0;
    for case in 0..3 {
        for i in 0..100 {
            let mut rng = stream(2, 1000 * case + i);
            let l = open_closed(&mut rng, 5.0);
            let (a, expected) = match case {
                0 => {
                    let a = l + open_closed(&mut rng, 10.0);
                    (a, a - l)
                }
                1 => {
                    let a = -l - open_closed(&mut rng, 10.0);
                    (a, a + l)
                }
                _ => (rng.gen_range(-l..=l), 0.0),
            };
            let x = shrink(a, lam(l)).map_err(|e| e.to_string())?;
            check(x == expected, || format!("case {case}: shrink({a}, {l}) = {x}, expected {expected}"))?;
            let f = |t: f64| scalar_objective(t, a, lam(l)).unwrap();
            let fx = f(x);
            for off in [-1e-3, 1e-3] {
                check(f(x + off) > fx, || {
                    format!("case {case}: objective not strictly larger at offset {off} (a={a}, lambda={l})")
                })?;
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} instances across the three branches"))
}

fn c3() -> Outcome {
    let mut worst = f64::INFINITY;
    let n = 200;
    for i in 0..n {
        let mut rng = stream(3, i);
        let len = rng.gen_range(1..=12);
        let v = uniform_matrix::<f64>(&mut rng, 1, len, -3.0, 3.0);
        let beta = Beta::new(open_closed(&mut rng, 5.0)).unwrap();
        let report = support_enum_l0(&v, beta).map_err(|e| e.to_string())?;
        worst = worst.min(report.margin);
        check(report.passed() && report.margin >= -1e-12, || {
            format!("instance {i}: margin {:e}", report.margin)
        })?;
        let corrupted = l0_approx(&v, beta).map(|x| x + 0.05);
        let control = support_enum_l0_candidate(&v, beta, &corrupted).map_err(|e| e.to_string())?;
        check(!control.passed(), || format!("instance {i}: corrupted candidate passed"))?;
    }
    Ok(format!("{n} vectors, min margin {worst:.2e}, corrupted candidate failed on all"))
}

fn l1_objective(beta: f64, v: &Matrix) -> impl Fn(&Matrix) -> f64 + '_ {
    move |u: &Matrix| {
        let d = u.sub(v).unwrap().frobenius_norm();
        u.l1_norm() + 0.5 * beta * d * d
    }
}

fn c4() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut perturbation_trials = 0;
    let n = 200;
    for i in 0..n {
        let mut rng = stream(4, i);
        let b = open_closed(&mut rng, 5.0);
        let beta = Beta::new(b).unwrap();
        let lambda = beta.to_lambda().unwrap();

        // small vector: grid oracle and perturbations
        let len = rng.gen_range(1..=6);
        let v = uniform_matrix::<f64>(&mut rng, 1, len, -5.0, 5.0);
        let u = soft_threshold(&v, lambda);
        let grid = coordinate_grid_l1(&v, beta, &u).map_err(|e| e.to_string())?;
        check(grid.margin >= -1e-12, || format!("instance {i}: grid margin {:e}", grid.margin))?;
        worst = worst.min(grid.margin);
        let control = coordinate_grid_l1(&v, beta, &u.map(|x| x + 0.05)).map_err(|e| e.to_string())?;
        check(!control.passed(), || format!("instance {i}: corrupted vector passed the grid oracle"))?;

        // matrix up to 10×10: perturbations only
        let (r, c) = random_shape(&mut rng, 10, 10);
        let a = uniform_matrix::<f64>(&mut rng, r, c, -5.0, 5.0);
        let x = soft_threshold(&a, lambda);
        for (candidate, target, label) in [(&u, &v, "vector"), (&x, &a, "matrix")] {
            let audit = PerturbationCheck::new(10_000, 0.5, 1e-12, 40_000 + i)
                .unwrap()
                .run(candidate, l1_objective(b, target));
            check(audit.margin >= -1e-12, || {
                format!("instance {i}: {label} perturbation margin {:e}", audit.margin)
            })?;
            worst = worst.min(audit.margin);
            perturbation_trials += audit.competitors_tested;
        }
    }
    Ok(format!(
        "{n} instances, {perturbation_trials} perturbations, min margin {worst:.2e}, corrupted vectors rejected"
    ))
}

fn c5() -> Outcome {
    let n = 1000;
    let mut worst_recon = 0f64;
    let mut worst_orth = 0f64;
    let mut worst_eig = 0f64;
    let mut deficient = 0;
    let mut control_caught = 0;
    for i in 0..n {
        let mut rng = stream(5, i);
        let (m, k) = random_shape(&mut rng, 50, 50);
        let p = m.min(k);
        let a = if i % 4 == 0 {
            deficient += 1;
            let rank = rng.gen_range(0..p);
            let spectrum: Vec<f64> = (0..rank).map(|_| rng.gen_range(0.1..10.0)).collect();
            matrix_with_spectrum(&mut rng, m, k, &spectrum)
        } else {
            uniform_matrix::<f64>(&mut rng, m, k, -1.0, 1.0)
        };
        let f = svd(&a).map_err(|e| format!("instance {i} ({m}x{k}): {e}"))?;
        let scale = a.frobenius_norm().max(1.0);
        let recon = f.reconstruct().sub(&a).unwrap().frobenius_norm() / scale;
        let orth = orthonormality_residual(f.u()).max(orthonormality_residual(f.v()));
        worst_recon = worst_recon.max(recon);
        worst_orth = worst_orth.max(orth);
        check(recon <= 1e-10, || format!("instance {i} ({m}x{k}): reconstruction residual {recon:e}"))?;
        check(orth <= 1e-10, || format!("instance {i} ({m}x{k}): orthonormality residual {orth:e}"))?;
        let s = f.sigma();
        check(s.windows(2).all(|w| w[0] >= w[1]) && s.iter().all(|&x| x >= 0.0), || {
            format!("instance {i}: singular values not descending and nonnegative")
        })?;

        // eigenvalues of the smaller Gram matrix hold all p squared singular values
        let gram = if k <= m {
            a.transpose().matmul(&a).unwrap()
        } else {
            a.matmul(&a.transpose()).unwrap()
        };
        let eig = symmetric_eigs_jacobi(&gram).map_err(|e| e.to_string())?;
        let top = s[0] * s[0];
        let err = s
            .iter()
            .zip(&eig)
            .map(|(&x, &e)| (x * x - e).abs())
            .fold(0.0, f64::max);
        let tol = 1e-8 * top;
        worst_eig = worst_eig.max(if top > 0.0 { err / top } else { err });
        check(err <= tol, || {
            format!("instance {i} ({m}x{k}): sigma^2 vs eigenvalues differ by {err:e}")
        })?;
        let corrupted = (s[0] + 0.05).powi(2);
        if (corrupted - eig[0]).abs() > tol {
            control_caught += 1;
        }
    }
    check(control_caught == n, || format!("corrupted sigma accepted on {} instances", n - control_caught))?;
    Ok(format!(
        "{n} matrices ({deficient} rank-deficient), max recon {worst_recon:.1e}, orth {worst_orth:.1e}, eig {worst_eig:.1e}"
    ))
}

fn c6() -> Outcome {
    let n = 1000;
    let mut worst = 0f64;
    for i in 0..n {
        let mut rng = stream(6, i);
        let (m, k) = random_shape(&mut rng, 12, 12);
        let a = uniform_matrix::<f64>(&mut rng, m, k, -3.0, 3.0);
        let nuc = a.nuclear_norm().map_err(|e| e.to_string())?;
        let diag = a.diag_part().nuclear_norm().map_err(|e| e.to_string())?;
        check(diag <= nuc + 1e-9, || format!("instance {i}: diagonal part {diag} exceeds {nuc}"))?;

        let left = random_orthogonal::<f64>(&mut rng, m);
        let right = random_orthogonal::<f64>(&mut rng, k);
        let rotated = left.matmul(&a).unwrap().matmul(&right).unwrap();
        let tol = 1e-9 * nuc.max(1.0);
        let dn = (rotated.nuclear_norm().map_err(|e| e.to_string())? - nuc).abs();
        let df = (rotated.frobenius_norm() - a.frobenius_norm()).abs();
        worst = worst.max(dn.max(df) / nuc.max(1.0));
        check(dn <= tol, || format!("instance {i}: nuclear norm moved by {dn:e}"))?;
        check(df <= tol, || format!("instance {i}: Frobenius norm moved by {df:e}"))?;
    }
    Ok(format!("{n} matrices, max relative invariance error {worst:.1e}"))
}

fn c7() -> Outcome {
    let n = 200;
    let mut worst_sigma = 0f64;
    let mut worst_margin = f64::INFINITY;
    for i in 0..n {
        let mut rng = stream(7, i);
        let (m, k) = random_shape(&mut rng, 20, 20);
        let a = uniform_matrix::<f64>(&mut rng, m, k, -2.0, 2.0);
        let b = open_closed(&mut rng, 5.0);
        let beta = Beta::new(b).unwrap();
        let out = svt(&a, beta).map_err(|e| e.to_string())?;

        let l = 1.0 / b;
        for (&si, &so) in out.sigma_in.iter().zip(&out.sigma_out) {
            let e = (so - (si - l).max(0.0)).abs();
            worst_sigma = worst_sigma.max(e);
            check(e <= 1e-9, || format!("instance {i}: sigma_out off by {e:e}"))?;
        }
        // the spectrum of the assembled solution, from a fresh factorization
        let fresh = out.solution.singular_values().map_err(|e| e.to_string())?;
        for (&f, &so) in fresh.iter().zip(&out.sigma_out) {
            let e = (f - so).abs();
            check(e <= 1e-9 * out.sigma_in[0].max(1.0), || {
                format!("instance {i}: solution spectrum off by {e:e}")
            })?;
        }

        let objective = |x: &Matrix| {
            let d = x.sub(&a).unwrap().frobenius_norm();
            x.nuclear_norm().unwrap() + 0.5 * b * d * d
        };
        let audit = PerturbationCheck::new(1000, 0.1, 1e-9, 70_000 + i)
            .unwrap()
            .run(&out.solution, objective);
        check(audit.passed(), || format!("instance {i}: perturbation margin {:e}", audit.margin))?;
        let factors = svd(&a).unwrap();
        let sweep = spectral_family_sweep(&factors, &out.solution, objective, 1000, 2.0 * out.sigma_in[0], 1e-9);
        check(sweep.passed(), || format!("instance {i}: spectral sweep margin {:e}", sweep.margin))?;
        worst_margin = worst_margin.min(audit.margin).min(sweep.margin);

        // negative control at the 3×3 scale, where random directions reach back
        let small = uniform_matrix::<f64>(&mut rng, 3, 3, -2.0, 2.0);
        let good = svt(&small, beta).unwrap().solution;
        let bad = shifted(&mut rng, &good, 0.05);
        let small_obj = |x: &Matrix| {
            let d = x.sub(&small).unwrap().frobenius_norm();
            x.nuclear_norm().unwrap() + 0.5 * b * d * d
        };
        let control = PerturbationCheck::new(1000, 0.1, 1e-9, 71_000 + i)
            .unwrap()
            .run(&bad, small_obj);
        check(!control.passed(), || format!("instance {i}: shifted 3x3 candidate passed"))?;
    }
    Ok(format!(
        "{n} matrices, max sigma error {worst_sigma:.1e}, min oracle margin {worst_margin:.2e}, shifted controls rejected"
    ))
}

/// Frobenius distance to `a`, `+∞` outside the nuclear ball of radius `tau`.
fn ball_objective(a: &Matrix, tau: f64) -> impl Fn(&Matrix) -> f64 + '_ {
    move |x: &Matrix| {
        if x.nuclear_norm().unwrap() > tau * (1.0 + 1e-12) {
            f64::INFINITY
        } else {
            x.sub(a).unwrap().frobenius_norm()
        }
    }
}

fn c8() -> Outcome {
    let n = 200;
    let mut worst_norm = 0f64;
    let mut worst_margin = f64::INFINITY;
    let mut competitors = 0;
    for i in 0..n {
        let mut rng = stream(8, i);
        let (m, k) = random_shape(&mut rng, 10, 10);
        let a = uniform_matrix::<f64>(&mut rng, m, k, -2.0, 2.0);
        let factors = svd(&a).unwrap();
        let nuc = factors.nuclear_norm();
        for (ri, r) in [0.25, 0.5, 0.9].into_iter().enumerate() {
            let tau = r * nuc;
            let out = nuclear_ball_nearest(&a, Tau::new(tau).unwrap()).map_err(|e| e.to_string())?;
            let got = out.solution.nuclear_norm().map_err(|e| e.to_string())?;
            let e = (got - tau).abs();
            worst_norm = worst_norm.max(e / tau.max(1.0));
            check(e <= 1e-9 * tau.max(1.0), || format!("instance {i}, r={r}: nuclear norm off by {e:e}"))?;

            let objective = ball_objective(&a, tau);
            let seed = 80_000 + 3 * i + ri as u64;
            let mut tally = Vec::with_capacity(1100);
            for j in 0..1100u64 {
                let mut draw = stream(seed, j);
                let noise = if j < 1000 { 0.0 } else { 0.1 };
                tally.push(objective(&feasible_spectral_point(&mut draw, &factors, tau, noise)));
            }
            let best = tally.iter().copied().fold(f64::INFINITY, f64::min);
            let report = OracleReport::new(objective(&out.solution), best, tally.len(), 1e-9);
            check(report.passed(), || format!("instance {i}, r={r}: competitor margin {:e}", report.margin))?;
            worst_margin = worst_margin.min(report.margin);
            competitors += tally.len();

            // scaling the answer outward leaves the ball
            let outside = out.solution.scale(1.05);
            let control = OracleReport::new(objective(&outside), best, tally.len(), 1e-9);
            check(!control.passed(), || format!("instance {i}, r={r}: infeasible candidate passed"))?;
        }
        let inactive = nuclear_ball_nearest(&a, Tau::new(1.1 * nuc).unwrap()).map_err(|e| e.to_string())?;
        let d = inactive.solution.max_abs_diff(&a).unwrap();
        check(d <= 1e-12, || format!("instance {i}: inactive case moved the input by {d:e}"))?;
    }
    Ok(format!(
        "{n} matrices x 3 radii, {competitors} competitors, max norm error {worst_norm:.1e}, min margin {worst_margin:.2e}"
    ))
}

fn c9() -> Outcome {
    let n = 1000;
    let mut worst = 0f64;
    let mut duplicates = 0;
    let mut control_caught = 0;
    for i in 0..n {
        let mut rng = stream(9, i);
        let len = rng.gen_range(1..=50);
        let mags: Vec<f64> = match i % 5 {
            0 => {
                duplicates += 1;
                vec![rng.gen_range(0.1..10.0); len]
            }
            1 => {
                duplicates += 1;
                let pool: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..10.0)).collect();
                (0..len).map(|_| pool[rng.gen_range(0..3)]).collect()
            }
            _ => (0..len).map(|_| rng.gen_range(0.0..10.0)).collect(),
        };
        let total: f64 = mags.iter().sum();
        if total == 0.0 {
            continue;
        }
        let tau = rng.gen_range(0.05..0.95) * total;
        let fast = solve_budget_magnitudes(&mags, Tau::new(tau).unwrap());
        let slow = bisect_budget_lambda(&mags, tau);
        let e = (fast.lambda_star - slow).abs();
        worst = worst.max(e);
        check(fast.active && e <= 1e-12, || {
            format!("instance {i}: sort {} vs bisection {slow} ({e:e})", fast.lambda_star)
        })?;
        if (fast.lambda_star + 0.05 - slow).abs() > 1e-12 {
            control_caught += 1;
        }
    }
    check(control_caught == n, || format!("shifted lambda accepted on {} instances", n - control_caught))?;
    Ok(format!("{n} vectors ({duplicates} with repeated magnitudes), max |difference| {worst:.1e}"))
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn read_golden(name: &str) -> Result<Vec<u8>, String> {
    std::fs::read(golden_dir().join(name)).map_err(|e| format!("golden file {name}: {e}"))
}

fn run_cli(args: &[&str], input: &Path, report: &Path) -> Result<(i32, Vec<u8>, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_softshrink"))
        .args(args)
        .arg("--report")
        .arg(report)
        .stdin(Stdio::from(std::fs::File::open(input).map_err(|e| e.to_string())?))
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout, out.stderr))
}

fn c10() -> Outcome {
    let cases: [(&str, &str, &[&str]); 4] = [
        ("svt_beta_1", "diag.csv", &["svt", "--beta", "1"]),
        ("nuclear_tau_2", "diag.csv", &["nuclear-project", "--tau", "2"]),
        ("sparse_l0_beta_2", "vector.csv", &["sparse", "--mode", "l0", "--beta", "2"]),
        ("svt_negative_beta", "diag.csv", &["svt", "--beta", "-1"]),
    ];
    let scratch = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, input, args) in cases {
        let report = scratch.path().join(format!("{name}.json"));
        let (code, stdout, stderr) = run_cli(args, &golden_dir().join(input), &report)?;
        let want_code: i32 = String::from_utf8(read_golden(&format!("{name}.exit"))?)
            .unwrap()
            .trim()
            .parse()
            .unwrap();
        check(code == want_code, || format!("{name}: exit {code}, expected {want_code}"))?;
        check(stdout == read_golden(&format!("{name}.stdout"))?, || {
            format!("{name}: stdout {:?} differs", String::from_utf8_lossy(&stdout))
        })?;
        let golden_report = golden_dir().join(format!("{name}.report.json"));
        if golden_report.exists() {
            let got = std::fs::read(&report).map_err(|e| format!("{name}: no report: {e}"))?;
            check(got == read_golden(&format!("{name}.report.json"))?, || format!("{name}: report differs"))?;
        } else {
            check(!report.exists(), || format!("{name}: unexpected report written"))?;
            let msg = String::from_utf8_lossy(&stderr);
            check(msg.contains("beta > 0"), || format!("{name}: stderr {msg:?} does not name beta > 0"))?;
        }
    }

    // the documented values, independent of the stored files
    check(read_golden("svt_beta_1.stdout")? == b"2,0\n0,0\n", || "svt golden stdout".into())?;
    check(read_golden("nuclear_tau_2.stdout")? == b"2,0\n0,0\n", || "nuclear golden stdout".into())?;
    check(read_golden("sparse_l0_beta_2.stdout")? == b"0,-3\n", || "sparse golden stdout".into())?;
    let report: serde_json::Value =
        serde_json::from_slice(&read_golden("nuclear_tau_2.report.json")?).map_err(|e| e.to_string())?;
    check(report["effective_lambda"] == 1.0, || "nuclear golden effective_lambda".into())?;

    let n = 1000;
    for i in 0..n {
        let mut rng = stream(10, i);
        let (m, k) = random_shape(&mut rng, 8, 8);
        let data: Vec<f64> = (0..m * k)
            .map(|_| match rng.gen_range(0..4) {
                0 => 0.0,
                1 => rng.gen_range(-10.0..10.0),
                2 => rng.gen_range(-1.0..1.0) * 10f64.powi(rng.gen_range(-300..300)),
                _ => f64::from_bits(rng.gen_range(0..0x7fe0_0000_0000_0000u64)) * if rng.gen() { 1.0 } else { -1.0 },
            })
            .collect();
        let a = Matrix::new(m, k, data).unwrap();
        let mut buf = Vec::new();
        write_csv(&a, &mut buf).map_err(|e| e.to_string())?;
        let back = read_csv::<f64, _>(buf.as_slice(), "roundtrip").map_err(|e| e.to_string())?.matrix;
        let exact = back.shape() == a.shape()
            && a.as_slice().iter().zip(back.as_slice()).all(|(x, y)| x.to_bits() == y.to_bits());
        check(exact, || format!("round trip {i} not bit-exact"))?;
    }
    Ok(format!("4 golden cases byte-exact, {n} csv round trips bit-exact"))
}
