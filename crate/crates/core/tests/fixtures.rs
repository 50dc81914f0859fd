use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use fanocheck::io::{parse_input, read_polytope, write_polytope, InputFile};
use fanocheck::report::{run_batch, run_check, CheckOptions, Status};

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fixtures() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

fn status_of(name: &str, options: CheckOptions) -> Status {
    let report = run_check(&fixture_dir().join(name), &options);
    report.entries[0].status
}

#[test]
fn polytope_fixtures_round_trip() {
    let mut seen = 0;
    for path in fixtures() {
        if path.extension().is_some_and(|e| e == "txt") {
            let original = read_polytope(&path).unwrap();
            let text = write_polytope(original.dim, &original.vertices, None);
            let InputFile::Polytope(back) = parse_input(&text).unwrap() else {
                panic!("{} re-parsed as a diamond", path.display())
            };
            let mut a = original.vertices.clone();
            let mut b = back.vertices;
            a.sort();
            b.sort();
            assert_eq!(a, b, "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 8);
}

#[test]
fn fixture_statuses() {
    let plain = CheckOptions::default();
    let expected: BTreeMap<&str, Status> = [
        ("p2.txt", Status::Pass),
        ("p1xp1.txt", Status::Pass),
        ("hexagon.txt", Status::Pass),
        ("p1xp2.txt", Status::Pass),
        ("bl_p3.txt", Status::Pass),
        ("p1_cubed.txt", Status::Pass),
        ("singular.txt", Status::Invalid),
        ("k3.json", Status::Pass),
        ("p3_diamond.json", Status::Pass),
        ("asymmetric.json", Status::Invalid),
        ("quintic.json", Status::Invalid),
    ]
    .into_iter()
    .collect();
    for (name, status) in expected {
        assert_eq!(status_of(name, plain), status, "{name}");
    }
    assert_eq!(status_of("p2_dual.txt", CheckOptions { dual: true }), Status::Pass);
    // read as an N-side polytope, the triangle has non-primitive vertices
    assert_eq!(status_of("p2_dual.txt", plain), Status::Invalid);
}

#[test]
fn blown_up_p3_invariants() {
    let report = run_check(&fixture_dir().join("bl_p3.txt"), &CheckOptions::default());
    let t = report.entries[0].toric.as_ref().unwrap();
    // Bl_pt P^3: b_2 = 2, χ = 6, c_1 c_2 = 24 (Todd: χ(O) = c_1 c_2 / 24)
    assert_eq!(t.betti, vec![1, 2, 2, 1]);
    assert_eq!((t.c_n, t.c1_cn1), (6, 24));
}

#[test]
fn batch_parallel_matches_sequential() {
    let files = fixtures();
    let options = CheckOptions::default();
    let sequential = run_batch(&files, &options, false);
    let parallel = run_batch(&files, &options, true);
    assert_eq!(sequential, parallel);
    assert_eq!(sequential.to_json(), parallel.to_json());
    let s = sequential.summary;
    assert_eq!(s.total, files.len());
    assert_eq!(s.passed + s.violations + s.invalid, s.total);
    assert_eq!(s.exit_code, 2);
}
