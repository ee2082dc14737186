//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p rotor-eigen --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rotor_eigen::algebra::{pseudoscalar, BasisBlade, Multivector, Signature};
use rotor_eigen::cli::{self, ModelKind};
use rotor_eigen::models::ModelParams;
use rotor_eigen::models::{bilayer_quantization_residual, bilayer_spectrum};
use rotor_eigen::oracle::eig_symmetric;
use rotor_eigen::oracle::oracle_energies;
use rotor_eigen::outermorphism::{
    apply_outermorphism, apply_vector, determinant, secular_cubic, secular_eigenvalues, CubicRoots,
    VectorMap,
};
use rotor_eigen::rotor::{is_rotor, rotor_from_reflections};
use rotor_eigen::spinor::{
    ga_action_cl31, pauli_action_cl30, pauli_matrix, spinor_to_column, Complex, GaAction, Spinor,
    SpinorAlgebra,
};

type Outcome = Result<String, String>;
type Check = Box<dyn Fn() -> Outcome>;

const BIN: &str = env!("CARGO_BIN_EXE_rotor-eigen");

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn draws(model: ModelKind, n: usize, seed: u64) -> Vec<ModelParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| cli::draw(model, &mut rng)).collect()
}

/// Largest absolute gap between rotor-method and oracle energies.
fn spectrum_gap(points: &[ModelParams]) -> Result<f64, String> {
    let mut worst: f64 = 0.0;
    for p in points {
        let rotor = p.energies().map_err(|e| format!("{p:?}: {e}"))?;
        let oracle = oracle_energies(p).map_err(|e| format!("{p:?}: {e}"))?;
        ensure(rotor.len() == oracle.len(), || {
            format!("{p:?}: level count differs")
        })?;
        for (a, b) in rotor.iter().zip(&oracle) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

fn spectrum_criterion(model: ModelKind, n: usize, tol: f64, budget: Option<Duration>) -> Outcome {
    let points = draws(model, n, 1);
    let start = Instant::now();
    let gap = spectrum_gap(&points)?;
    let elapsed = start.elapsed();
    ensure(gap <= tol, || format!("max |dE| = {gap:e} > {tol:e}"))?;
    if let Some(b) = budget {
        ensure(elapsed <= b, || format!("took {elapsed:?}, budget {b:?}"))?;
    }
    Ok(format!("{n} trials, max |dE| = {gap:e}, {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let points = draws(ModelKind::Bilayer, 500, 4);
    let gap = spectrum_gap(&points)?;
    ensure(gap <= 1e-10, || format!("max |dE| = {gap:e}"))?;
    let mut worst: f64 = 0.0;
    let mut roots = 0;
    for p in &points {
        let ModelParams::Bilayer {
            kx, ky, u, gamma1, ..
        } = *p
        else {
            unreachable!()
        };
        let k = kx.hypot(ky);
        for e in bilayer_spectrum(k, u, gamma1) {
            // Indeterminate roots are degenerate by definition.
            if let Ok(r) = bilayer_quantization_residual(e, k, u, gamma1) {
                worst = worst.max(r.abs());
                roots += 1;
            }
        }
    }
    ensure(worst <= 1e-10, || format!("|a^2 - 1| = {worst:e}"))?;
    Ok(format!(
        "500 trials, max |dE| = {gap:e}; {roots} roots, max |a^2 - 1| = {worst:e}"
    ))
}

fn coords(m: &Multivector) -> [f64; 3] {
    let v = m.vector_coords();
    [v[0], v[1], v[2]]
}

fn vec_gap(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
}

/// Checks `R R~ = 1` and `R e3 R~ = target`; returns the worst deviation.
fn rotor_gap(r: &Multivector, target: [f64; 3]) -> f64 {
    let sig = r.signature();
    let one = Multivector::scalar(sig, 1.0);
    let norm = r.geometric(&r.reverse()).max_diff(&one);
    let e3 = Multivector::basis(sig, &[3]);
    let image = r.sandwich(&e3, &r.reverse());
    let spatial = image.grade_part(1);
    norm.max(vec_gap(coords(&spatial), target))
        .max((image - spatial).max_abs())
}

fn has_e4(m: &Multivector) -> bool {
    m.terms()
        .any(|(b, c): (BasisBlade, f64)| b.mask() & 0b1000 != 0 && c.abs() > 1e-15)
}

fn criterion_5() -> Outcome {
    let mut worst_res: f64 = 0.0;
    let mut worst_rotor: f64 = 0.0;
    let mut count = 0;
    for model in ModelKind::ALL {
        for p in draws(model, 1000, 5) {
            let sols = p.solve().map_err(|e| format!("{p:?}: {e}"))?;
            for s in &sols {
                let psi = s
                    .spinor
                    .as_ref()
                    .ok_or_else(|| format!("{p:?}: missing spinor"))?;
                let res = p
                    .apply(psi)
                    .map_err(|e| e.to_string())?
                    .max_diff(&psi.scale(s.energy));
                worst_res = worst_res.max(res);
                count += 1;
                let e = s.energy;
                let gap = match p {
                    ModelParams::Monolayer { kx, ky } => {
                        let k = kx.hypot(ky);
                        let sign = e.signum();
                        rotor_gap(psi.value(), [sign * kx / k, sign * ky / k, 0.0])
                    }
                    ModelParams::Qw { kx, ky, .. } => {
                        let k = kx.hypot(ky);
                        let sign = (e - 0.5 * k * k).signum();
                        rotor_gap(psi.value(), [sign * ky / k, -sign * kx / k, 0.0])
                    }
                    ModelParams::Atoms { omega, gamma } => {
                        let sign = e.signum();
                        let (carrier, target) = if has_e4(psi.value()) {
                            let e34 = Multivector::basis(Signature::CL31, &[3, 4]);
                            (e34.geometric(psi.value()), [0.0, -sign, 0.0])
                        } else {
                            let r = omega.hypot(gamma);
                            (
                                psi.value().clone(),
                                [0.0, -sign * gamma / r, sign * omega / r],
                            )
                        };
                        let gap = rotor_gap(&carrier, target);
                        let recorded = s.target.ok_or("atoms solution without target")?;
                        gap.max(vec_gap(recorded, target))
                    }
                    ModelParams::Bilayer { .. } => 0.0,
                };
                ensure(gap <= 1e-12, || {
                    format!("{p:?}, E = {e}: rotor contract off by {gap:e}")
                })?;
                worst_rotor = worst_rotor.max(gap);
            }
        }
    }
    ensure(worst_res <= 1e-10, || format!("residual {worst_res:e}"))?;
    Ok(format!(
        "{count} solutions, max residual = {worst_res:e}, max rotor gap = {worst_rotor:e}"
    ))
}

fn random_spinor(alg: SpinorAlgebra, rng: &mut ChaCha8Rng) -> Spinor {
    let coeffs: Vec<f64> = (0..alg.dim())
        .map(|_| rng.random_range(-1.0..1.0))
        .collect();
    Spinor::from_coeffs(alg, &coeffs).unwrap()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    let mut actions = 0;
    let e12 = Multivector::basis(Signature::CL30, &[1, 2]);
    for i in 0..4 {
        actions += 1;
        for _ in 0..100 {
            let psi = random_spinor(SpinorAlgebra::Cl30, &mut rng);
            let col = spinor_to_column(&psi).map_err(|e| e.to_string())?;
            let (ga, mat) = if i < 3 {
                let ga = pauli_action_cl30(i + 1, &psi).map_err(|e| e.to_string())?;
                (ga, pauli_matrix(i + 1).unwrap().apply(&col).unwrap())
            } else {
                // The imaginary unit acts as right multiplication by e12.
                (
                    Spinor::new(psi.value().geometric(&e12)).unwrap(),
                    col.scale(Complex::I),
                )
            };
            worst = worst.max(spinor_to_column(&ga).unwrap().max_diff(&mat));
        }
    }
    for action in GaAction::all() {
        actions += 1;
        let m = action.matrix().map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let psi = random_spinor(SpinorAlgebra::Cl31, &mut rng);
            let col = spinor_to_column(&psi).unwrap();
            let ga = ga_action_cl31(action, &psi).map_err(|e| e.to_string())?;
            worst = worst.max(
                spinor_to_column(&ga)
                    .unwrap()
                    .max_diff(&m.apply(&col).unwrap()),
            );
        }
    }
    ensure(worst <= 1e-12, || format!("max mismatch {worst:e}"))?;
    Ok(format!(
        "{actions} actions x 100 spinors, max mismatch = {worst:e}"
    ))
}

fn random_mv(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector {
    let c = (0..sig.blade_count())
        .map(|_| rng.random_range(-1.0..1.0))
        .collect();
    Multivector::from_coeffs(sig, c).unwrap()
}

fn random_vector(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector {
    let c: Vec<f64> = (0..sig.dim())
        .map(|_| rng.random_range(-1.0..1.0))
        .collect();
    Multivector::vector(sig, &c)
}

/// Unit spatial vector (positive square in both algebras).
fn random_unit_spatial(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector {
    loop {
        let mut c: Vec<f64> = (0..3).map(|_| rng.random_range(-1.0..1.0)).collect();
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 {
            c.iter_mut().for_each(|x| *x /= n);
            c.resize(sig.dim(), 0.0);
            return Multivector::vector(sig, &c);
        }
    }
}

fn random_map(sig: Signature, rng: &mut ChaCha8Rng) -> VectorMap {
    let n = sig.dim();
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    VectorMap::from_matrix(sig, &rows).unwrap()
}

fn det3(m: &[Vec<f64>]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn criterion_7() -> Outcome {
    const N: usize = 1000;
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = [0.0f64; 8];
    let names = [
        "associativity",
        "anticommutation",
        "reversion",
        "grade decomposition",
        "rotation properties",
        "outermorphism composition",
        "determinant",
        "secular coefficients",
    ];
    for sig in [Signature::CL30, Signature::CL31] {
        let i = pseudoscalar(sig);
        for _ in 0..N {
            let (a, b, c) = (
                random_mv(sig, &mut rng),
                random_mv(sig, &mut rng),
                random_mv(sig, &mut rng),
            );
            let d = a
                .geometric(&b)
                .geometric(&c)
                .max_diff(&a.geometric(&b.geometric(&c)));
            worst[0] = worst[0].max(d);

            let (u, v) = (random_vector(sig, &mut rng), random_vector(sig, &mut rng));
            let sym = u.geometric(&v) + v.geometric(&u);
            let dot = Multivector::scalar(sig, 2.0 * u.inner(&v).scalar_part());
            let mut d = sym.max_diff(&dot);
            for p in 1..=sig.dim() {
                for q in p + 1..=sig.dim() {
                    let (ep, eq) = (Multivector::basis(sig, &[p]), Multivector::basis(sig, &[q]));
                    d = d.max((ep.geometric(&eq) + eq.geometric(&ep)).max_abs());
                }
            }
            worst[1] = worst[1].max(d);

            let d = a
                .geometric(&b)
                .reverse()
                .max_diff(&b.reverse().geometric(&a.reverse()));
            worst[2] = worst[2].max(d);

            let mut sum = Multivector::zero(sig);
            let mut d: f64 = 0.0;
            for k in 0..=sig.dim() {
                let part = a.grade_part(k);
                if !part.is_grade(k, 0.0) && part.max_abs() > 0.0 {
                    d = f64::INFINITY;
                }
                sum = sum + part;
            }
            worst[3] = worst[3].max(d.max(sum.max_diff(&a)));

            let r = rotor_from_reflections(
                &random_unit_spatial(sig, &mut rng),
                &random_unit_spatial(sig, &mut rng),
            )
            .map_err(|e| e.to_string())?;
            let alpha: f64 = rng.random_range(-2.0..2.0);
            let rot = |m: &Multivector| r.rotate(m);
            let mut d = rot(&(&a * alpha)).max_diff(&(&rot(&a) * alpha));
            d = d.max(rot(&(&a + &b)).max_diff(&(&rot(&a) + &rot(&b))));
            d = d.max(rot(&a.inner(&b)).max_diff(&rot(&a).inner(&rot(&b))));
            d = d.max(rot(&a.wedge(&b)).max_diff(&rot(&a).wedge(&rot(&b))));
            d = d.max(rot(&a.geometric(&b)).max_diff(&rot(&a).geometric(&rot(&b))));
            for k in 0..=sig.dim() {
                let image = rot(&a.grade_part(k));
                d = d.max((image.clone() - image.grade_part(k)).max_abs());
            }
            d = d.max(rot(&i).max_diff(&i));
            if !is_rotor(r.as_multivector(), TOL) {
                d = f64::INFINITY;
            }
            worst[4] = worst[4].max(d);

            let (f, g) = (random_map(sig, &mut rng), random_map(sig, &mut rng));
            let fg = f.compose(&g).unwrap();
            let through = apply_outermorphism(&f, &apply_outermorphism(&g, &a).unwrap()).unwrap();
            let mut d = apply_outermorphism(&fg, &a).unwrap().max_diff(&through);
            let wedge_image = apply_outermorphism(&f, &u.wedge(&v)).unwrap();
            let fu = apply_vector(&f, &u).unwrap();
            let fv = apply_vector(&f, &v).unwrap();
            d = d.max(wedge_image.max_diff(&fu.wedge(&fv)));
            worst[5] = worst[5].max(d);

            let d = (determinant(&fg) - determinant(&f) * determinant(&g)).abs();
            worst[6] = worst[6].max(d);
            if sig == Signature::CL30 {
                worst[6] = worst[6].max((determinant(&f) - det3(&f.matrix())).abs());
            }
        }
    }

    // Secular cubic vs the characteristic polynomial and a Jacobi oracle.
    let mut worst_root: f64 = 0.0;
    for _ in 0..N {
        let f = random_map(Signature::CL30, &mut rng);
        let m = f.matrix();
        let trace = m[0][0] + m[1][1] + m[2][2];
        let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
            + m[1][1] * m[2][2]
            - m[1][2] * m[2][1];
        let (a2, a1, a0) = secular_cubic(&f).map_err(|e| e.to_string())?;
        let d = (a2 + trace)
            .abs()
            .max((a1 - minors).abs())
            .max((a0 + det3(&m)).abs());
        worst[7] = worst[7].max(d);

        let sym: Vec<Vec<f64>> = (0..3)
            .map(|i| (0..3).map(|j| 0.5 * (m[i][j] + m[j][i])).collect())
            .collect();
        let oracle = eig_symmetric(&sym).map_err(|e| e.to_string())?;
        let s = VectorMap::from_matrix(Signature::CL30, &sym).unwrap();
        match secular_eigenvalues(&s).map_err(|e| e.to_string())? {
            CubicRoots::Real(roots) => {
                for (x, y) in roots.iter().zip(&oracle) {
                    worst_root = worst_root.max((x - y).abs());
                    ensure((x - y).abs() <= 1e-10, || {
                        format!("secular root {x} vs {y}")
                    })?;
                }
            }
            CubicRoots::OneReal { .. } => {
                return Err(format!("symmetric map {sym:?} gave complex roots"))
            }
        }
    }
    for (name, w) in names.iter().zip(worst) {
        ensure(w <= TOL, || format!("{name}: {w:e}"))?;
    }
    Ok(format!(
        "{N} cases per property per algebra; worst = {:e}; secular roots vs Jacobi {worst_root:e}",
        worst.iter().copied().fold(0.0, f64::max)
    ))
}

/// Runs the CLI in-process and parses the CSV into rows of numbers.
fn sweep_csv(args: &[&str]) -> Result<(String, Vec<Vec<f64>>), String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["rotor-eigen", "spectrum"]
        .into_iter()
        .chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    ensure(code == 0, || {
        format!("exit {code}: {}", String::from_utf8_lossy(&err))
    })?;
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().to_string();
    let rows = lines
        .map(|l| {
            l.split(',')
                .map(|x| x.parse::<f64>().map_err(|e| e.to_string()))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Ok((header, rows))
}

fn check_rows(rows: &[Vec<f64>], want: impl Fn(f64) -> Vec<f64>) -> f64 {
    rows.iter()
        .map(|r| {
            let w = want(r[0]);
            r[1..]
                .iter()
                .zip(&w)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// Refines the conduction-band minimum from successively narrower sweeps.
fn cli_band_minimum(u: f64, g: f64) -> Result<f64, String> {
    let (us, gs) = (u.to_string(), g.to_string());
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut best = 0.0;
    for _ in 0..4 {
        let (los, his) = (lo.to_string(), hi.to_string());
        let (_, rows) = sweep_csv(&[
            "--model",
            "bilayer",
            "--bias-u",
            &us,
            "--gamma1",
            &gs,
            "--kmin",
            &los,
            "--kmax",
            &his,
            "--samples",
            "1001",
        ])?;
        let i = (0..rows.len())
            .min_by(|&a, &b| rows[a][3].total_cmp(&rows[b][3]))
            .unwrap();
        best = rows[i][0];
        let step = (hi - lo) / 1000.0;
        lo = (best - step).max(0.0);
        hi = best + step;
    }
    Ok(best)
}

fn golden_minimum(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-12 {
        let c = b - ratio * (b - a);
        let d = a + ratio * (b - a);
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

fn criterion_8() -> Outcome {
    let (h, rows) = sweep_csv(&[
        "--model",
        "monolayer",
        "--kmin",
        "0",
        "--kmax",
        "5",
        "--samples",
        "501",
    ])?;
    ensure(h == "k,E1,E2", || format!("monolayer header {h}"))?;
    let d = check_rows(&rows, |k| vec![-k.abs(), k.abs()]);
    ensure(d <= 1e-12, || format!("monolayer cones off by {d:e}"))?;

    let (_, rows) = sweep_csv(&[
        "--model",
        "qw",
        "--alpha",
        "0.5",
        "--kmin",
        "-2",
        "--kmax",
        "2",
        "--samples",
        "401",
    ])?;
    let d = check_rows(&rows, |k| {
        vec![k * k / 2.0 - 0.5 * k.abs(), k * k / 2.0 + 0.5 * k.abs()]
    });
    ensure(d <= 1e-12, || format!("qw parabolas off by {d:e}"))?;
    let mid = &rows[200];
    ensure(mid[0] == 0.0 && mid[1] == 0.0 && mid[2] == 0.0, || {
        format!("qw crossing row {mid:?}")
    })?;

    let (h, rows) = sweep_csv(&[
        "--model",
        "atoms",
        "--omega",
        "1",
        "--kmin",
        "0",
        "--kmax",
        "2",
        "--samples",
        "201",
    ])?;
    ensure(h == "Gamma,E1,E2,E3,E4", || format!("atoms header {h}"))?;
    let d = check_rows(&rows, |g| {
        let r = g.hypot(1.0);
        vec![-r, -g, g, r]
    });
    ensure(d <= 1e-12, || format!("atoms branches off by {d:e}"))?;

    let (u, g) = (0.3, 0.4);
    let k_cli = cli_band_minimum(u, g)?;
    let k_golden = golden_minimum(|k| bilayer_spectrum(k, u, g)[2], 0.0, 1.0);
    let k_closed = (2.0 * u * u * (2.0 * u * u + g * g) / (4.0 * u * u + g * g)).sqrt();
    ensure(k_cli > 0.0, || "bilayer minimum at k = 0".into())?;
    ensure((k_cli - k_golden).abs() <= 1e-6, || {
        format!("k* sweep {k_cli} vs golden {k_golden}")
    })?;
    ensure((k_golden - k_closed).abs() <= 1e-6, || {
        format!("k* golden {k_golden} vs closed {k_closed}")
    })?;
    Ok(format!("cones, parabolas, branches exact; bilayer k* = {k_cli} (golden {k_golden}, closed {k_closed})"))
}

fn run_bin(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_9(suite_start: Instant) -> Outcome {
    let verify = ["verify", "--trials", "1000", "--seed", "42"];
    let (c1, o1) = run_bin(&verify)?;
    let (c2, o2) = run_bin(&verify)?;
    ensure(c1 == 0 && c2 == 0, || {
        format!(
            "verify exit codes {c1}, {c2}: {}",
            String::from_utf8_lossy(&o1)
        )
    })?;
    ensure(o1 == o2, || "verify output differs between runs".into())?;
    for format in ["csv", "json"] {
        let sweep = [
            "spectrum",
            "--model",
            "bilayer",
            "--bias-u",
            "0.3",
            "--gamma1",
            "0.4",
            "--kmin",
            "0",
            "--kmax",
            "2",
            "--samples",
            "2001",
            "--format",
            format,
        ];
        let (a, b) = (run_bin(&sweep)?, run_bin(&sweep)?);
        ensure(a.0 == 0 && a == b, || {
            format!("{format} sweep not reproducible")
        })?;
    }
    let total = suite_start.elapsed();
    ensure(total <= Duration::from_secs(60), || {
        format!("suite took {total:?}")
    })?;
    Ok(format!(
        "verify and sweeps byte-identical; suite wall-clock {total:.2?}"
    ))
}

fn main() {
    let start = Instant::now();
    let criteria: Vec<(&str, Check)> = vec![
        (
            "1 monolayer spectrum vs 2x2 oracle",
            Box::new(|| {
                spectrum_criterion(
                    ModelKind::Monolayer,
                    1000,
                    1e-12,
                    Some(Duration::from_secs(1)),
                )
            }),
        ),
        (
            "2 quantum well spectrum vs 2x2 oracle",
            Box::new(|| spectrum_criterion(ModelKind::Qw, 1000, 1e-12, None)),
        ),
        (
            "3 two atoms spectrum vs 4x4 oracle",
            Box::new(|| spectrum_criterion(ModelKind::Atoms, 1000, 1e-12, None)),
        ),
        ("4 bilayer spectrum vs 8x8 operator", Box::new(criterion_4)),
        ("5 eigenspinor contracts", Box::new(criterion_5)),
        ("6 mapping-rule equivalence", Box::new(criterion_6)),
        ("7 GA property suite", Box::new(criterion_7)),
        ("8 figure-level sweeps", Box::new(criterion_8)),
        (
            "9 determinism and runtime",
            Box::new(move || criterion_9(start)),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
