//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails. Run with `--nocapture` to see the table.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use fanocheck::corpus::{dim2_corpus, gen_pn, product_family, product_shapes, standard_corpus};
use fanocheck::hodge_diamond::HodgeDiamond;
use fanocheck::identity::{
    chi_weighted, ehx_form, lhs_weighted_betti, rhs_chern, verify_combinatorial,
    verify_prop22, verify_proposition,
};
use fanocheck::io::{parse_input, read_input, write_diamond, write_polytope, InputFile};
use fanocheck::lattice_polytope::{edge_interior_points, FanoPolytope};
use fanocheck::rational::{frac, int, Rational};
use fanocheck::report::{run_batch, run_diamond, CheckOptions};
use fanocheck::toric_invariants::{second_derivative_at_one, IntPolynomial, ToricInvariants};
use fanocheck::{Error, IdentityReport};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

fn fixtures() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    v.sort();
    v
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn sample<S: Strategy>(runner: &mut TestRunner, strategy: &S) -> S::Value {
    strategy.new_tree(runner).expect("strategy generates").current()
}

struct Toric {
    inv: ToricInvariants,
    report: IdentityReport,
    combinatorial: bool,
}

fn toric(p: &FanoPolytope) -> Result<Toric, String> {
    let dual = p.polar_dual().map_err(|e| e.to_string())?;
    let faces = dual.face_lattice().map_err(|e| e.to_string())?;
    let inv = ToricInvariants::from_faces(&dual, &faces).map_err(|e| e.to_string())?;
    let diamond = HodgeDiamond::from_betti(&inv.betti).map_err(|e| e.to_string())?;
    let report = verify_proposition(&diamond, inv.c1_cn1, inv.c_n).map_err(|e| e.to_string())?;
    let combinatorial = verify_combinatorial(&dual, &faces).map_err(|e| e.to_string())?;
    Ok(Toric {
        inv,
        report,
        combinatorial,
    })
}

/// Every identity form must hold with equality on a smooth toric Fano.
fn all_identities_hold(name: &str, t: &Toric) -> Outcome {
    let n = t.inv.n;
    let r = &t.report;
    ensure!(r.equality && r.defect == int(0), "{name}: lhs {} rhs {}", r.lhs, r.rhs);
    ensure!(r.inequality_ok && r.balance_ok, "{name}: inequality/balance");
    let chi: Vec<i64> = t.inv.betti.iter().map(|&b| b as i64).collect();
    ensure!(
        verify_prop22(&chi, t.inv.c1_cn1, t.inv.c_n, n).map_err(|e| e.to_string())?,
        "{name}: weighted χ identity"
    );
    let (a, b) = ehx_form(&t.inv.betti, t.inv.c1_cn1, n).map_err(|e| e.to_string())?;
    ensure!(a == b, "{name}: original form {a} vs {b}");
    ensure!(t.combinatorial, "{name}: combinatorial form");
    Ok(())
}

// 1. Projective spaces P^1..P^8 against closed forms.
fn projective_family() -> Outcome {
    for n in 1..=8usize {
        let start = Instant::now();
        let p = gen_pn(n).map_err(|e| e.to_string())?;
        let t = toric(&p)?;
        let elapsed = start.elapsed();
        let ni = n as i64;
        ensure!(t.inv.betti == vec![1; n + 1], "P{n}: betti {:?}", t.inv.betti);
        ensure!(t.inv.c_n == ni + 1, "P{n}: c_n {}", t.inv.c_n);
        ensure!(t.inv.c1_cn1 == ni * (ni + 1) * (ni + 1) / 2, "P{n}: c1c_(n-1) {}", t.inv.c1_cn1);
        let closed = frac(ni * (ni + 1) * (ni + 2), 12);
        ensure!(t.report.lhs == closed && t.report.rhs == closed, "P{n}: lhs {} rhs {}", t.report.lhs, t.report.rhs);
        all_identities_hold(&format!("P{n}"), &t)?;
        ensure!(elapsed < Duration::from_secs(1), "P{n}: took {elapsed:?}");
    }
    Ok(())
}

// 2. The five smooth toric del Pezzo surfaces.
fn del_pezzo() -> Outcome {
    let corpus = dim2_corpus();
    ensure!(corpus.len() == 5, "expected 5 entries, got {}", corpus.len());
    for entry in &corpus {
        let p = &entry.polytope;
        ensure!(p.is_smooth().map_err(|e| e.to_string())?, "{} not smooth", entry.name);
        ensure!(p.is_reflexive(), "{} not reflexive", entry.name);
        let t = toric(p)?;
        all_identities_hold(&entry.name, &t)?;
        match entry.name.as_str() {
            "P2" => {
                ensure!(t.report.lhs == int(2) && t.report.rhs == int(2), "P2 lhs/rhs");
                ensure!(t.inv.c1_cn1 == 9, "P2 c1^2 = {}", t.inv.c1_cn1);
            }
            "Bl3P2" => {
                ensure!(t.inv.betti == vec![1, 4, 1], "hexagon betti {:?}", t.inv.betti);
                ensure!(t.inv.c1_cn1 == 6, "hexagon c1^2 = {}", t.inv.c1_cn1);
            }
            _ => {}
        }
    }
    Ok(())
}

// 3. Products of P^1, P^2, P^3 up to dimension 5.
fn products() -> Outcome {
    let shapes = product_shapes(3, 5);
    let family = product_family(3, 5).map_err(|e| e.to_string())?;
    ensure!(family.len() == shapes.len() && !family.is_empty(), "family size");
    for (shape, entry) in shapes.iter().zip(&family) {
        let t = toric(&entry.polytope)?;
        // Ê(P^d) = 1 + t + ... + t^d
        let expected = shape.iter().try_fold(IntPolynomial::constant(1), |acc, &d| {
            acc.checked_mul(&IntPolynomial::new(vec![1; d + 1]))
        });
        let expected = expected.map_err(|e| e.to_string())?;
        ensure!(t.inv.e_hat == expected, "{}: Ê = {} expected {}", entry.name, t.inv.e_hat, expected);
        all_identities_hold(&entry.name, &t)?;
        if shape == &vec![1, 2] {
            ensure!(t.inv.betti == vec![1, 2, 2, 1], "P1xP2 betti");
            ensure!(t.inv.c_n == 6 && t.inv.c1_cn1 == 24, "P1xP2 chern ({}, {})", t.inv.c_n, t.inv.c1_cn1);
            ensure!(t.report.lhs == frac(11, 2) && t.report.rhs == frac(11, 2), "P1xP2 lhs/rhs");
        }
    }
    ensure!(shapes.contains(&vec![1, 2]), "P1xP2 missing");
    Ok(())
}

// 4. K3 in diamond mode.
fn k3_diamond() -> Outcome {
    let report = run_diamond(&fixture_dir().join("k3.json"));
    ensure!(report.exit_code() == 0, "exit {}", report.exit_code());
    let r = report.entries[0].identity.as_ref().ok_or("no identity report")?;
    ensure!(r.lhs == int(2) && r.rhs == int(4) && r.defect == int(2), "lhs {} rhs {} defect {}", r.lhs, r.rhs, r.defect);
    ensure!(!r.equality && r.inequality_ok, "expected strict inequality");
    ensure!(r.prop22_ok == Some(true), "weighted χ identity");
    Ok(())
}

fn symmetric_diamond() -> impl Strategy<Value = HodgeDiamond> {
    (1usize..=6, any::<bool>()).prop_flat_map(|(n, diagonal)| {
        prop::collection::vec(0u32..=50, (n + 1) * (n + 1)).prop_map(move |raw| {
            let mut h = vec![vec![0u32; n + 1]; n + 1];
            for p in 0..=n {
                for q in p..=n {
                    if (p + q) % 2 == 0 && (!diagonal || p == q) {
                        h[p][q] = raw[p * (n + 1) + q];
                        h[q][p] = h[p][q];
                    }
                }
            }
            h[0][0] = 1;
            HodgeDiamond::new(n, h).expect("symmetric")
        })
    })
}

// 5. Algebraic decomposition on random diamonds.
fn decomposition() -> Outcome {
    let mut runner = runner();
    let strategy = symmetric_diamond();
    let (mut diagonal, mut off) = (0, 0);
    for _ in 0..1200 {
        let d = sample(&mut runner, &strategy);
        let n = d.n();
        let lhs = lhs_weighted_betti(&d.even_betti(), n).map_err(|e| e.to_string())?;
        let chi_side = chi_weighted(&d.chi_p(), n).map_err(|e| e.to_string())?;
        let defect = d.defect();
        ensure!(&lhs + &defect == chi_side, "decomposition fails on {:?}", d.table());
        ensure!(defect >= int(0), "negative defect");
        ensure!((defect == int(0)) == d.is_diagonal(), "defect/diagonal mismatch on {:?}", d.table());
        if d.is_diagonal() {
            diagonal += 1;
        } else {
            off += 1;
        }
    }
    ensure!(diagonal > 100 && off > 100, "coverage: {diagonal} diagonal, {off} off-diagonal");
    Ok(())
}

// 6. Internal consistency on the whole built-in corpus.
fn consistency() -> Outcome {
    for entry in standard_corpus().map_err(|e| e.to_string())? {
        let p = &entry.polytope;
        let n = p.dim();
        let dual = p.polar_dual().map_err(|e| e.to_string())?;
        let faces = dual.face_lattice().map_err(|e| e.to_string())?;
        let inv = ToricInvariants::from_faces(&dual, &faces).map_err(|e| e.to_string())?;
        let f = faces.f_vector();
        let fp = p.face_lattice().map_err(|e| e.to_string())?.f_vector();
        let f2 = f.get(2).copied().unwrap_or(0) as i64;
        let name = &entry.name;

        let second = second_derivative_at_one(&inv.e_hat).map_err(|e| e.to_string())?;
        ensure!(second == 2 * f2, "{name}: Ê''(1) = {second}, 2f_2 = {}", 2 * f2);

        // c1·c_(n-1) recomputed from the edges directly
        let mut c1_cn1 = 0i64;
        for e in faces.faces(1) {
            let (a, b) = (e.vertex_indices()[0], e.vertex_indices()[1]);
            c1_cn1 += edge_interior_points(&dual.vertices()[a], &dual.vertices()[b])
                .map_err(|e| e.to_string())? as i64
                + 1;
        }
        ensure!(c1_cn1 == inv.c1_cn1, "{name}: c1c_(n-1)");
        let ni = n as i64;
        let rhs: Rational = frac(c1_cn1, 6) + (frac(ni * ni, 4) - frac(5 * ni, 12)) * int(inv.c_n);
        ensure!(int(2 * f2) == rhs, "{name}: 2f_2 = {} vs {}", 2 * f2, rhs);
        ensure!(2 * f.get(1).copied().unwrap_or(0) == n * f[0], "{name}: simplicity");
        for k in 0..n {
            ensure!(f[k] == fp[n - 1 - k], "{name}: f_{k}(Δ) = {} vs f_{}(P) = {}", f[k], n - 1 - k, fp[n - 1 - k]);
        }
        let betti_sum: u64 = inv.betti.iter().sum();
        let e1 = inv.e_hat.eval(1).map_err(|e| e.to_string())?;
        ensure!(
            e1 == betti_sum as i64 && e1 == inv.c_n && inv.c_n == f[0] as i64,
            "{name}: Euler characteristic"
        );
    }
    Ok(())
}

// 7. Original and rewritten forms are equivalent.
fn equivalence() -> Outcome {
    let mut runner = runner();
    let strategy = (1usize..=8, prop::collection::vec(0u64..40, 9), -600i64..600, any::<bool>());
    let (mut holds, mut fails) = (0, 0);
    for _ in 0..1200 {
        let (n, raw, c1, force) = sample(&mut runner, &strategy);
        let betti = &raw[..=n];
        let c_n = betti.iter().sum::<u64>() as i64;
        let lhs = lhs_weighted_betti(betti, n).map_err(|e| e.to_string())?;
        // half the samples pick c1 so the rewritten form holds, when integral
        let c1 = if force {
            let target = (&lhs - rhs_chern(0, c_n, n)) * int(6);
            if target.is_integer() {
                i64::try_from(target.to_integer()).map_err(|e| e.to_string())?
            } else {
                c1
            }
        } else {
            c1
        };
        let rewritten = lhs == rhs_chern(c1, c_n, n);
        let (a, b) = ehx_form(betti, c1, n).map_err(|e| e.to_string())?;
        ensure!((a == b) == rewritten, "forms disagree for betti {betti:?}, c1 {c1}");
        if rewritten {
            holds += 1;
        } else {
            fails += 1;
        }
    }
    ensure!(holds > 100 && fails > 100, "coverage: {holds} holding, {fails} failing");
    Ok(())
}

// 8. Negative controls.
fn negative_controls() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_fanocheck"))
        .args(["check", fixture_dir().join("singular.txt").to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(2), "singular check exit {:?}", out.status.code());
    let sing = FanoPolytope::new(2, vec![[1, 0].into(), [0, 1].into(), [-1, -2].into()])
        .map_err(|e| e.to_string())?;
    ensure!(sing.is_reflexive(), "singular polygon should be reflexive");
    ensure!(!sing.is_smooth().map_err(|e| e.to_string())?, "singular polygon should not be smooth");

    let asym = HodgeDiamond::new(2, vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    ensure!(matches!(asym, Err(Error::InvalidDiamond(_))), "asymmetric diamond accepted");
    ensure!(run_diamond(&fixture_dir().join("asymmetric.json")).exit_code() == 2, "asymmetric file exit");

    // P^3 with c_n weighted by 1/12 instead of n/12
    let lhs = lhs_weighted_betti(&[1, 1, 1, 1], 3).map_err(|e| e.to_string())?;
    let variant = frac(24, 6) + frac(1, 12) * int(4);
    ensure!(lhs == rhs_chern(24, 4, 3), "n/12 form must hold for P3");
    ensure!(lhs != variant, "1/12 variant must fail for P3");
    Ok(())
}

// 9. Parser round-trip and batch determinism.
fn robustness() -> Outcome {
    for path in fixtures() {
        let input = read_input(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let text = match &input {
            InputFile::Polytope(p) => write_polytope(p.dim, &p.vertices, None),
            InputFile::Diamond(d) => write_diamond(d),
        };
        let back = parse_input(&text).map_err(|e| e.to_string())?;
        let same = match (&input, &back) {
            (InputFile::Polytope(a), InputFile::Polytope(b)) => {
                let mut x = a.vertices.clone();
                let mut y = b.vertices.clone();
                x.sort();
                y.sort();
                a.dim == b.dim && x == y
            }
            (a, b) => a == b,
        };
        ensure!(same, "{} does not round-trip", path.display());
    }

    let files = fixtures();
    let options = CheckOptions::default();
    let sequential = run_batch(&files, &options, false);
    let parallel = run_batch(&files, &options, true);
    ensure!(sequential == parallel, "batch reports differ");
    ensure!(sequential.to_json() == parallel.to_json(), "batch JSON differs");

    let dir = fixture_dir();
    let batch = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_fanocheck"))
            .args(["batch", dir.to_str().unwrap(), "--format", "json"])
            .args(extra)
            .output()
            .map_err(|e| e.to_string())
    };
    let (par, seq) = (batch(&[])?, batch(&["--sequential"])?);
    ensure!(par.stdout == seq.stdout && !par.stdout.is_empty(), "binary batch output differs");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC1 projective spaces P^1..P^8", projective_family),
        ("AC2 smooth toric del Pezzo surfaces", del_pezzo),
        ("AC3 products of P^1, P^2, P^3 up to dim 5", products),
        ("AC4 K3 diamond mode", k3_diamond),
        ("AC5 algebraic decomposition (1200 diamonds)", decomposition),
        ("AC6 internal consistency on corpus", consistency),
        ("AC7 equivalence of forms (1200 samples)", equivalence),
        ("AC8 negative controls", negative_controls),
        ("AC9 round-trip and batch determinism", robustness),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
