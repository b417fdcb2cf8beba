//! Fox calculus, Alexander matrices and the Alexander polynomials `Δ^#`
//! and `Δ^ψ`, with the derived nonvanishing and Betti-bound queries.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intmat;
use crate::laurent::{self, CanonicalForm, Covector, ExponentVector, LaurentPoly};
use crate::presentation::{AbelianizationData, Presentation, Word};
use crate::rational::{self, rat_json, rvec_json, Q};

/// Abelianized Fox derivative `∂w/∂x_gen`, with each generator sent to the
/// monomial `images[j]` of a Laurent ring of rank `rank`.
pub fn fox_derivative_with(w: &Word, gen: usize, images: &[ExponentVector], rank: usize) -> Result<LaurentPoly> {
    if gen >= images.len() {
        return Err(Error::UnknownGenerator(gen));
    }
    let mut out = LaurentPoly::zero(rank);
    let mut prefix = ExponentVector::zero(rank);
    for l in w.letters() {
        let img = images.get(l.gen).ok_or(Error::UnknownGenerator(l.gen))?;
        if l.gen == gen {
            if l.exp > 0 {
                for i in 0..l.exp {
                    out.add_term(prefix.plus(&img.scaled(i)), BigInt::one());
                }
            } else {
                for i in 1..=-l.exp {
                    out.add_term(prefix.minus(&img.scaled(i)), -BigInt::one());
                }
            }
        }
        prefix = prefix.plus(&img.scaled(l.exp));
    }
    Ok(out)
}

fn free_images(ab: &AbelianizationData) -> Vec<ExponentVector> {
    ab.free_map.iter().map(|r| ExponentVector(r.clone())).collect()
}

fn psi_images(ab: &AbelianizationData, psi: &[i64]) -> Vec<ExponentVector> {
    ab.psi_values(psi)
        .into_iter()
        .map(|v| ExponentVector(vec![v]))
        .collect()
}

/// Abelianized Fox derivative over `Z[H]`.
pub fn fox_derivative(w: &Word, gen: usize, ab: &AbelianizationData) -> Result<LaurentPoly> {
    fox_derivative_with(w, gen, &free_images(ab), ab.b)
}

/// Fox Jacobian of a presentation over a Laurent ring.
#[derive(Clone, Debug)]
pub struct AlexanderMatrix {
    pub rank: usize,
    /// `entries[i][j] = ∂r_i/∂x_j`.
    pub entries: Vec<Vec<LaurentPoly>>,
    pub images: Vec<ExponentVector>,
}

impl AlexanderMatrix {
    fn build(p: &Presentation, images: Vec<ExponentVector>, rank: usize) -> Result<Self> {
        let entries = p
            .relators()
            .iter()
            .map(|r| {
                (0..p.num_generators())
                    .map(|j| fox_derivative_with(r, j, &images, rank))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = AlexanderMatrix {
            rank,
            entries,
            images,
        };
        assert!(m.row_identity_holds(), "fundamental Fox identity failed");
        Ok(m)
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    pub fn num_relators(&self) -> usize {
        self.entries.len()
    }

    /// `Σ_j (∂r/∂x_j)(x̄_j − 1) = 0` on every row.
    pub fn row_identity_holds(&self) -> bool {
        let one = LaurentPoly::one(self.rank);
        self.entries.iter().all(|row| {
            let mut acc = LaurentPoly::zero(self.rank);
            for (d, img) in row.iter().zip(&self.images) {
                let xm1 = &LaurentPoly::monomial(img.clone(), 1) - &one;
                acc = &acc + &(d * &xm1);
            }
            acc.is_zero()
        })
    }

    /// GCD of the `(g−1)`-minors (the first elementary ideal); zero when
    /// there are fewer than `g − 1` relators.
    pub fn first_elementary_gcd(&self) -> CanonicalForm {
        let g = self.num_generators();
        let n = self.num_relators();
        let k = g.saturating_sub(1);
        if k == 0 {
            return LaurentPoly::one(self.rank).canonicalize();
        }
        if n < k {
            return LaurentPoly::zero(self.rank).canonicalize();
        }
        let mut acc = LaurentPoly::zero(self.rank);
        for rows in combinations(n, k) {
            for skip in 0..g {
                let minor: Vec<Vec<LaurentPoly>> = rows
                    .iter()
                    .map(|&i| {
                        (0..g)
                            .filter(|&j| j != skip)
                            .map(|j| self.entries[i][j].clone())
                            .collect()
                    })
                    .collect();
                let d = laurent::determinant(self.rank, &minor);
                if d.is_zero() {
                    continue;
                }
                acc = acc.gcd(&d).expect("equal ranks").into_poly();
                if acc.is_unit() {
                    return acc.canonicalize();
                }
            }
        }
        acc.canonicalize()
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Fox Jacobian over `Z[H]`.
pub fn alexander_matrix(p: &Presentation) -> Result<AlexanderMatrix> {
    let ab = p.homology();
    AlexanderMatrix::build(p, free_images(&ab), ab.b)
}

/// Fox Jacobian pushed forward to `Z[t^±]` along `ψ`.
pub fn specialized_matrix(p: &Presentation, psi: &Covector) -> Result<AlexanderMatrix> {
    let ab = p.homology();
    let entries = checked_psi(&ab, psi)?;
    AlexanderMatrix::build(p, psi_images(&ab, &entries), 1)
}

fn checked_psi(ab: &AbelianizationData, psi: &Covector) -> Result<Vec<i64>> {
    if ab.b == 0 {
        return Err(Error::TrivialAbelianization);
    }
    if psi.rank() != ab.b {
        return Err(Error::RankMismatch {
            left: ab.b,
            right: psi.rank(),
        });
    }
    psi.primitive_entries()
}

/// Multivariable Alexander polynomial `Δ^#` over `Z[H]`.
pub fn multivariable_alexander(p: &Presentation) -> Result<CanonicalForm> {
    let ab = p.homology();
    if ab.b == 0 {
        return Err(Error::TrivialAbelianization);
    }
    Ok(AlexanderMatrix::build(p, free_images(&ab), ab.b)?.first_elementary_gcd())
}

/// `ψ_*(Δ^#)` times `(t−1)^2` when `b ≥ 2`.
pub fn psi_from_sharp(delta_sharp: &LaurentPoly, b: usize, psi: &Covector) -> Result<CanonicalForm> {
    let spec = delta_sharp.specialize(psi)?;
    if b >= 2 {
        let tm1 = LaurentPoly::univariate(0, &[-1, 1]);
        Ok((&spec * &tm1.pow(2)).canonicalize())
    } else {
        Ok(spec.canonicalize())
    }
}

/// `Δ^ψ` computed from `Δ^#`.
pub fn alexander_poly_psi(p: &Presentation, psi: &Covector) -> Result<CanonicalForm> {
    let ab = p.homology();
    checked_psi(&ab, psi)?;
    let sharp = multivariable_alexander(p)?;
    psi_from_sharp(sharp.poly(), ab.b, psi)
}

/// `Δ^ψ` computed directly from the specialized Jacobian.
pub fn alexander_poly_psi_direct(p: &Presentation, psi: &Covector) -> Result<CanonicalForm> {
    Ok(specialized_matrix(p, psi)?.first_elementary_gcd())
}

pub fn is_nonvanishing(p: &Presentation, psi: &Covector) -> Result<bool> {
    Ok(!alexander_poly_psi(p, psi)?.is_zero())
}

/// `deg Δ^ψ + 1`, the ceiling on `b_1` of every finite cyclic cover dual to `ψ`.
pub fn betti_bound(p: &Presentation, psi: &Covector) -> Result<usize> {
    bound_from_poly(&alexander_poly_psi(p, psi)?, psi)
}

fn bound_from_poly(delta: &CanonicalForm, psi: &Covector) -> Result<usize> {
    if delta.is_zero() {
        return Err(Error::VanishingAlexander(psi.to_i64().unwrap_or_default()));
    }
    Ok(delta.poly().floating_degree()? as usize + 1)
}

/// Primitive integer covectors in `[−r, r]^b`, one per `±` pair (first
/// nonzero entry positive), in lexicographic order.
pub fn primitive_classes_in_box(b: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-r; b];
    if b == 0 {
        return out;
    }
    loop {
        let first = cur.iter().find(|&&x| x != 0);
        if matches!(first, Some(&x) if x > 0)
            && cur.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) == 1
        {
            out.push(cur.clone());
        }
        let mut i = b;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < r {
                cur[i] += 1;
                for x in cur.iter_mut().skip(i + 1) {
                    *x = -r;
                }
                break;
            }
        }
    }
}

/// Primitive classes in the box whose `Δ^ψ` vanishes.
pub fn scan_vanishing_classes(p: &Presentation, box_radius: i64) -> Result<Vec<Covector>> {
    if box_radius < 1 {
        return Err(Error::OutOfRange("box radius must be at least 1".into()));
    }
    let ab = p.homology();
    let sharp = multivariable_alexander(p)?;
    let mut out = Vec::new();
    for v in primitive_classes_in_box(ab.b, box_radius) {
        let psi = Covector::from_ints(&v);
        if sharp.poly().specialize(&psi)?.is_zero() {
            out.push(psi);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SemicontinuitySample {
    pub delta: Vec<Q>,
    pub phi: Vec<i64>,
    pub nonvanishing: bool,
}

#[derive(Clone, Debug)]
pub struct SemicontinuityReport {
    pub psi: Vec<i64>,
    pub denominator_bound: i64,
    pub samples: Vec<SemicontinuitySample>,
    /// Largest `‖δ‖∞` such that every sample within it is nonvanishing.
    pub radius: Q,
}

impl SemicontinuityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "psi": self.psi,
            "denominator_bound": self.denominator_bound,
            "radius": rat_json(&self.radius),
            "samples": self.samples.iter().map(|s| json!({
                "delta": rvec_json(&s.delta),
                "phi": s.phi,
                "nonvanishing": s.nonvanishing,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Samples perturbations `ψ + δ` with `δ_i = k/q`, `q ≤ bound`,
/// `|δ_i| ≤ 1/bound`, and records whether the primitive class in each
/// direction has nonvanishing `Δ`.
pub fn semicontinuity_witness(p: &Presentation, psi: &Covector, denominator_bound: i64) -> Result<SemicontinuityReport> {
    if denominator_bound < 1 {
        return Err(Error::OutOfRange("denominator bound must be at least 1".into()));
    }
    let ab = p.homology();
    let entries = checked_psi(&ab, psi)?;
    let sharp = multivariable_alexander(p)?;
    if psi_from_sharp(sharp.poly(), ab.b, psi)?.is_zero() {
        return Err(Error::VanishingAlexander(entries));
    }
    let limit = Q::new(BigInt::one(), BigInt::from(denominator_bound));
    let mut steps: Vec<Q> = Vec::new();
    for qd in 1..=denominator_bound {
        for k in -qd..=qd {
            let x = Q::new(BigInt::from(k), BigInt::from(qd));
            if x.abs() <= limit && !steps.contains(&x) {
                steps.push(x);
            }
        }
    }
    steps.sort();

    let base: Vec<Q> = entries.iter().map(|&x| rational::q(x)).collect();
    let mut samples = Vec::new();
    let mut idx = vec![0usize; ab.b];
    loop {
        let delta: Vec<Q> = idx.iter().map(|&i| steps[i].clone()).collect();
        let point = rational::add(&base, &delta);
        if !rational::is_zero_vec(&point) {
            let phi: Vec<i64> = rational::primitive_integer(&point)
                .into_iter()
                .map(|x| i64::try_from(&x).expect("small perturbation"))
                .collect();
            let nonvanishing = !sharp.poly().specialize(&Covector::from_ints(&phi))?.is_zero();
            samples.push(SemicontinuitySample {
                delta,
                phi,
                nonvanishing,
            });
        }
        let mut i = ab.b;
        loop {
            if i == 0 {
                let radius = witness_radius(&samples, &steps);
                return Ok(SemicontinuityReport {
                    psi: entries,
                    denominator_bound,
                    samples,
                    radius,
                });
            }
            i -= 1;
            if idx[i] + 1 < steps.len() {
                idx[i] += 1;
                for x in idx.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

fn witness_radius(samples: &[SemicontinuitySample], steps: &[Q]) -> Q {
    let mut radii: Vec<Q> = steps.iter().map(|s| s.abs()).collect();
    radii.sort();
    radii.dedup();
    let mut best = Q::zero();
    for r in radii {
        let ok = samples
            .iter()
            .filter(|s| rational::max_abs(&s.delta) <= r)
            .all(|s| s.nonvanishing);
        if !ok {
            break;
        }
        best = r;
    }
    best
}

/// `det(t·I − A)` as a rank-one Laurent polynomial.
pub fn characteristic_polynomial(a: &[Vec<i64>]) -> Result<LaurentPoly> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = LaurentPoly::constant(1, -a[i][j]);
                    if i == j {
                        p = &p + &LaurentPoly::univariate(1, &[1]);
                    }
                    p
                })
                .collect()
        })
        .collect();
    Ok(laurent::determinant(1, &m))
}

/// Whether `Δ_φ ≐ det(t·I − A)` for an integral automorphism `A`.
pub fn fibered_degree_check(monodromy: &[Vec<i64>], delta_phi: &LaurentPoly) -> Result<bool> {
    let cp = characteristic_polynomial(monodromy)?;
    let det = intmat::determinant(&intmat::from_i64(monodromy));
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    cp.doteq(delta_phi)
}

/// One row of an Alexander report.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub psi: Vec<i64>,
    pub delta_psi: CanonicalForm,
    pub nonvanishing: bool,
    pub degree: i64,
    pub betti_bound: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct AlexanderReport {
    pub b1: usize,
    pub torsion: Vec<BigInt>,
    pub delta_sharp: CanonicalForm,
    pub classes: Vec<ClassReport>,
}

impl AlexanderReport {
    pub fn new(p: &Presentation, classes: &[Covector]) -> Result<Self> {
        let ab = p.homology();
        let delta_sharp = multivariable_alexander(p)?;
        let classes = classes
            .iter()
            .map(|psi| {
                let entries = checked_psi(&ab, psi)?;
                let delta_psi = psi_from_sharp(delta_sharp.poly(), ab.b, psi)?;
                let nonvanishing = !delta_psi.is_zero();
                Ok(ClassReport {
                    psi: entries,
                    degree: delta_psi.poly().floating_degree()?,
                    betti_bound: bound_from_poly(&delta_psi, psi).ok(),
                    delta_psi,
                    nonvanishing,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlexanderReport {
            b1: ab.b,
            torsion: ab.torsion,
            delta_sharp,
            classes,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "b1": self.b1,
            "torsion": self.torsion.iter().map(rational::int_json).collect::<Vec<_>>(),
            "delta_sharp": self.delta_sharp.poly().to_json(),
            "classes": self.classes.iter().map(|c| json!({
                "psi": c.psi,
                "delta_psi": c.delta_psi.poly().to_json(),
                "nonvanishing": c.nonvanishing,
                "degree": c.degree,
                "betti_bound": c.betti_bound,
            })).collect::<Vec<_>>(),
        })
    }
}
