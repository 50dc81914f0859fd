//! Built-in smooth Fano polytopes: projective spaces, direct sums (products
//! of varieties), and the five smooth toric del Pezzo surfaces.

use crate::error::{Error, Result};
use crate::lattice_polytope::{FanoPolytope, LatticePoint};

/// Pinned invariants for regression checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub betti: Vec<u64>,
    pub c_n: i64,
    pub c1_cn1: i64,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub polytope: FanoPolytope,
    pub expected: Option<ExpectedInvariants>,
}

/// The fan of `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
pub fn gen_pn(n: usize) -> Result<FanoPolytope> {
    if n < 1 {
        return Err(Error::InvalidDimension(n));
    }
    let mut vertices: Vec<LatticePoint> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            LatticePoint::new(e)
        })
        .collect();
    vertices.push(LatticePoint::new(vec![-1; n]));
    FanoPolytope::new(n, vertices)
}

/// Free sum `P ⊕ Q`, the fan of the product `X_P × X_Q`.
pub fn gen_direct_sum(p: &FanoPolytope, q: &FanoPolytope) -> Result<FanoPolytope> {
    let (dp, dq) = (p.dim(), q.dim());
    let left = p.vertices().iter().map(|v| {
        let mut c = v.coords().to_vec();
        c.resize(dp + dq, 0);
        LatticePoint::new(c)
    });
    let right = q.vertices().iter().map(|v| {
        let mut c = vec![0i64; dp];
        c.extend_from_slice(v.coords());
        LatticePoint::new(c)
    });
    FanoPolytope::new(dp + dq, left.chain(right).collect())
}

fn polygon(rays: &[[i64; 2]]) -> FanoPolytope {
    FanoPolytope::new(2, rays.iter().map(|&r| LatticePoint::from(r)).collect())
        .expect("built-in polygon is a valid Fano polytope")
}

fn expected(betti: &[u64], c_n: i64, c1_cn1: i64) -> Option<ExpectedInvariants> {
    Some(ExpectedInvariants {
        betti: betti.to_vec(),
        c_n,
        c1_cn1,
    })
}

/// The smooth toric del Pezzo surfaces: `P^2`, `P^1 × P^1`, and `P^2` blown
/// up in one, two and three torus-fixed points.
pub fn dim2_corpus() -> Vec<CorpusEntry> {
    let p2 = [[1, 0], [0, 1], [-1, -1]];
    let bl1 = [[1, 0], [0, 1], [-1, -1], [1, 1]];
    let bl2 = [[1, 0], [0, 1], [-1, -1], [1, 1], [0, -1]];
    let bl3 = [[1, 0], [0, 1], [-1, -1], [1, 1], [0, -1], [-1, 0]];
    let p1 = gen_pn(1).expect("n = 1 is valid");
    vec![
        CorpusEntry {
            name: "P2".into(),
            polytope: polygon(&p2),
            expected: expected(&[1, 1, 1], 3, 9),
        },
        CorpusEntry {
            name: "P1xP1".into(),
            polytope: gen_direct_sum(&p1, &p1).expect("direct sum of P1"),
            expected: expected(&[1, 2, 1], 4, 8),
        },
        CorpusEntry {
            name: "Bl1P2".into(),
            polytope: polygon(&bl1),
            expected: expected(&[1, 2, 1], 4, 8),
        },
        CorpusEntry {
            name: "Bl2P2".into(),
            polytope: polygon(&bl2),
            expected: expected(&[1, 3, 1], 5, 7),
        },
        CorpusEntry {
            name: "Bl3P2".into(),
            polytope: polygon(&bl3),
            expected: expected(&[1, 4, 1], 6, 6),
        },
    ]
}

/// `P^n` for `n = 1..=max_dim`, with closed-form invariants.
pub fn projective_family(max_dim: usize) -> Result<Vec<CorpusEntry>> {
    (1..=max_dim)
        .map(|n| {
            let np1 = n as i64 + 1;
            Ok(CorpusEntry {
                name: format!("P{n}"),
                polytope: gen_pn(n)?,
                expected: expected(&vec![1; n + 1], np1, n as i64 * np1 * np1 / 2),
            })
        })
        .collect()
}

/// Factor dimensions (non-decreasing, each in `1..=max_factor`, at least two
/// factors) of every product of projective spaces up to `max_total`.
pub fn product_shapes(max_factor: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, cap: usize, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.iter().rev().copied().collect());
        }
        for d in (1..=cap.min(remaining)).rev() {
            prefix.push(d);
            extend(prefix, d, remaining - d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_factor, max_total, &mut out);
    out.sort_by_key(|s| (s.iter().sum::<usize>(), s.clone()));
    out
}

/// Direct sums of projective spaces for every shape in
/// [`product_shapes`], named like `P1xP2`.
pub fn product_family(max_factor: usize, max_total: usize) -> Result<Vec<CorpusEntry>> {
    product_shapes(max_factor, max_total)
        .into_iter()
        .map(|shape| {
            let mut factors = shape.iter().map(|&d| gen_pn(d));
            let first = factors.next().expect("at least two factors")?;
            let polytope = factors.try_fold(first, |acc, f| gen_direct_sum(&acc, &f?))?;
            let name = shape.iter().map(|d| format!("P{d}")).collect::<Vec<_>>().join("x");
            Ok(CorpusEntry {
                name,
                polytope,
                expected: None,
            })
        })
        .collect()
}

/// Every built-in entry: projective spaces up to dimension 8, products up to
/// dimension 5, and the del Pezzo surfaces.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let mut all = projective_family(8)?;
    all.extend(product_family(3, 5)?);
    all.extend(dim2_corpus());
    Ok(all)
}
