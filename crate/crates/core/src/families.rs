//! Presentations of the example families: circle bundles over the torus,
//! mapping tori of products of Dehn twists, a trefoil complement, and
//! Dehn fillings with their Alexander-polynomial scaling checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::alexander::alexander_poly_psi;
use crate::error::{Error, Result};
use crate::laurent::{CanonicalForm, Covector, LaurentPoly};
use crate::presentation::{parse_presentation, Presentation, Word};
use crate::rational::int_json;

fn commutator(a: usize, b: usize) -> Word {
    Word::from_letters([(a, 1), (b, 1), (a, -1), (b, -1)])
}

/// `⟨a, b, z | [a,z], [b,z], [a,b] z^{-e}⟩`: the circle bundle over the
/// torus with Euler number `e`.
pub fn circle_bundle_presentation(e: i64) -> Presentation {
    let gens = ["a", "b", "z"].map(String::from).to_vec();
    let mut last = commutator(0, 1);
    last.push(2, -e);
    Presentation::new(gens, vec![commutator(0, 2), commutator(1, 2), last]).expect("valid generators")
}

/// Three-torus group.
pub fn three_torus_presentation() -> Presentation {
    circle_bundle_presentation(0)
}

/// Product of a closed genus-`g` surface with a circle.
pub fn surface_times_circle(g: usize) -> Result<Presentation> {
    mapping_torus_presentation_unchecked(g, 0)
}

/// Mapping torus of the product of Dehn twists along `a_1, …, a_s` on a
/// closed genus-`g` surface. Generators `a1 b1 … ag bg tau`.
pub fn mapping_torus_presentation(g: usize, s: usize) -> Result<Presentation> {
    if g < 2 || s > g {
        return Err(Error::OutOfRange(format!(
            "mapping torus needs 2 ≤ g and 0 ≤ s ≤ g, got g={g}, s={s}"
        )));
    }
    mapping_torus_presentation_unchecked(g, s)
}

fn mapping_torus_presentation_unchecked(g: usize, s: usize) -> Result<Presentation> {
    if g == 0 || s > g {
        return Err(Error::OutOfRange(format!("g={g}, s={s}")));
    }
    let mut gens = Vec::with_capacity(2 * g + 1);
    for i in 1..=g {
        gens.push(format!("a{i}"));
        gens.push(format!("b{i}"));
    }
    gens.push("tau".to_string());
    let tau = 2 * g;
    let mut surface = Word::empty();
    for i in 0..g {
        surface = surface.concat(&commutator(2 * i, 2 * i + 1));
    }
    let mut rels = vec![surface];
    for x in 0..2 * g {
        // τ x τ⁻¹ f(x)⁻¹ with f(b_i) = b_i a_i for i ≤ s.
        let mut w = Word::from_letters([(tau, 1), (x, 1), (tau, -1)]);
        let twisted = x % 2 == 1 && x / 2 < s;
        if twisted {
            w.push(x - 1, -1);
        }
        w.push(x, -1);
        rels.push(w);
    }
    Presentation::new(gens, rels)
}

/// Action of the monodromy on `H_1` of the fiber in the basis
/// `a1, b1, …, ag, bg` (column `j` is the image of basis vector `j`).
pub fn mapping_torus_monodromy(g: usize, s: usize) -> Result<Vec<Vec<i64>>> {
    if s > g {
        return Err(Error::OutOfRange(format!("s={s} exceeds g={g}")));
    }
    let n = 2 * g;
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..s {
        m[2 * i][2 * i + 1] = 1;
    }
    Ok(m)
}

/// Rank of the fixed sublattice of an integral matrix, i.e. `dim ker(A − I)`.
pub fn fixed_rank(a: &[Vec<i64>]) -> usize {
    let n = a.len();
    let shifted: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(a[i][j] - (i == j) as i64)).collect())
        .collect();
    n - crate::intmat::smith(&shifted, n).rank()
}

pub const TREFOIL_COMPLEMENT: &str = "gens x y\nrel x y x y^-1 x^-1 y^-1\n";
pub const TREFOIL_MERIDIAN: &str = "x";
/// `(xyx)^2 x^{-6}`: central, null-homologous, commutes with the meridian.
pub const TREFOIL_LONGITUDE: &str = "x y x x y x^-5";

/// The trefoil complement with its peripheral words.
pub fn trefoil_complement() -> (Presentation, Word, Word) {
    let p = parse_presentation(TREFOIL_COMPLEMENT).expect("static presentation");
    let mu = p.parse_word(TREFOIL_MERIDIAN).expect("static word");
    let lambda = p.parse_word(TREFOIL_LONGITUDE).expect("static word");
    (p, mu, lambda)
}

/// `π_1(T^3) * π_1(S^3 ∖ trefoil)`, modelling a trefoil inside a ball of
/// `T^3`; returns the presentation with the peripheral words.
pub fn free_product_fixture() -> (Presentation, Word, Word) {
    let (k, mu, lambda) = trefoil_complement();
    let p = three_torus_presentation().free_product(&k).expect("disjoint names");
    let offset = 3;
    let map: Vec<usize> = (0..k.num_generators()).map(|i| i + offset).collect();
    (p, mu.map_generators(&map), lambda.map_generators(&map))
}

/// Dehn filling data: slope `p/q` for `p·μ + q·λ`.
#[derive(Clone, Debug)]
pub struct SurgerySpec {
    pub complement: Presentation,
    pub meridian: Word,
    pub longitude: Word,
    pub p: i64,
    pub q: i64,
}

impl SurgerySpec {
    pub fn new(complement: Presentation, meridian: Word, longitude: Word, p: i64, q: i64) -> Result<Self> {
        validate_slope(p, q)?;
        Ok(SurgerySpec {
            complement,
            meridian,
            longitude,
            p,
            q,
        })
    }
}

/// Coprime, `p ≥ 0`; the meridian slope `1/0` is allowed.
pub fn validate_slope(p: i64, q: i64) -> Result<()> {
    if p < 0 {
        return Err(Error::NegativeSlope);
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NonCoprimeSlope { p, q });
    }
    Ok(())
}

/// Complement presentation with the filling relator `μ^p λ^q` appended.
pub fn surgered_presentation(spec: &SurgerySpec) -> Result<Presentation> {
    validate_slope(spec.p, spec.q)?;
    let rel = spec.meridian.pow(spec.p).concat(&spec.longitude.pow(spec.q));
    let mut rels = spec.complement.relators().to_vec();
    rels.push(rel);
    Ok(spec.complement.with_relators(rels))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Ok,
    Failed,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Ok => "ok",
            CheckStatus::Failed => "failed",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FillCheck {
    pub p: i64,
    pub q: i64,
    pub delta: CanonicalForm,
    pub expected: CanonicalForm,
    pub content: BigInt,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct SurgeryReport {
    pub psi: Vec<i64>,
    pub base_delta: CanonicalForm,
    pub fills: Vec<FillCheck>,
    pub trnh: bool,
    pub status: CheckStatus,
}

impl SurgeryReport {
    pub fn to_json(&self) -> Value {
        json!({
            "psi": self.psi,
            "trnh": self.trnh,
            "base_delta": self.base_delta.poly().to_json(),
            "fills": self.fills.iter().map(|f| json!({
                "p": f.p,
                "q": f.q,
                "delta_psi": f.delta.poly().to_json(),
                "expected": f.expected.poly().to_json(),
                "content": int_json(&f.content),
                "holds": f.holds,
            })).collect::<Vec<_>>(),
            "status": self.status.as_str(),
        })
    }
}

/// Checks `Δ^ψ(M_{p/q}(K)) ≐ p · Δ^ψ(M)` for each slope, where `M` is the
/// meridian (`1/0`) filling. Without the `trnh` flag a mismatch is
/// reported as inconclusive rather than failed.
pub fn verify_surgery_scaling(
    complement: &Presentation,
    meridian: &Word,
    longitude: &Word,
    fills: &[(i64, i64)],
    psi: &Covector,
    trnh: bool,
) -> Result<SurgeryReport> {
    let base_spec = SurgerySpec::new(complement.clone(), meridian.clone(), longitude.clone(), 1, 0)?;
    let base = surgered_presentation(&base_spec)?;
    let base_ab = base.homology();
    let base_delta = alexander_poly_psi(&base, psi)?;
    let mut checks = Vec::new();
    for &(p, q) in fills {
        if p == 0 {
            return Err(Error::ZeroSlope);
        }
        let spec = SurgerySpec::new(complement.clone(), meridian.clone(), longitude.clone(), p, q)?;
        let filled = surgered_presentation(&spec)?;
        if filled.homology().free_map != base_ab.free_map {
            return Err(Error::IncompatibleCohomology);
        }
        let delta = alexander_poly_psi(&filled, psi)?;
        let expected = base_delta.poly().scale(&BigInt::from(p)).canonicalize();
        checks.push(FillCheck {
            p,
            q,
            content: delta.poly().integer_content(),
            holds: delta == expected,
            delta,
            expected,
        });
    }
    let all = checks.iter().all(|c| c.holds);
    let status = match (all, trnh) {
        (true, _) => CheckStatus::Ok,
        (false, true) => CheckStatus::Failed,
        (false, false) => CheckStatus::Inconclusive,
    };
    Ok(SurgeryReport {
        psi: psi.primitive_entries()?,
        base_delta,
        fills: checks,
        trnh,
        status,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSurgery {
    pub delta: CanonicalForm,
    /// Set when `ψ(μ) = 0`: the answer vanishes and cyclic covers have
    /// unbounded first Betti number.
    pub unbounded_betti: bool,
}

/// `Δ^ψ` of the zero filling from the complement's polynomial:
/// `Δ_c · (t^{ψμ} − 1) / (t − 1)` when `b_1 ≥ 2`, divided by `(t − 1)^2`
/// when `b_1 = 1`.
pub fn zero_surgery_formula(delta_complement: &LaurentPoly, psi_mu: i64, b1_complement: usize) -> Result<ZeroSurgery> {
    if delta_complement.rank() != 1 {
        return Err(Error::NotUnivariate(delta_complement.rank()));
    }
    if psi_mu == 0 {
        return Ok(ZeroSurgery {
            delta: LaurentPoly::zero(1).canonicalize(),
            unbounded_betti: true,
        });
    }
    let tk = LaurentPoly::univariate(psi_mu, &[1]);
    let numerator = delta_complement * &(&tk - &LaurentPoly::one(1));
    let tm1 = LaurentPoly::univariate(0, &[-1, 1]);
    let denom = if b1_complement >= 2 { tm1 } else { tm1.pow(2) };
    let q = numerator.div_exact(&denom).ok_or(Error::FormulaViolation)?;
    Ok(ZeroSurgery {
        delta: q.canonicalize(),
        unbounded_betti: false,
    })
}

/// `p` extracted from an integer-content check: positive content of a
/// canonical form.
pub fn content_of(c: &CanonicalForm) -> BigInt {
    let k = c.poly().integer_content();
    if k.is_zero() {
        k
    } else {
        k.abs()
    }
}

/// Homology class of a peripheral word.
pub fn meridian_class(p: &Presentation, meridian: &Word) -> Vec<i64> {
    p.homology().image(meridian)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_bundle_homology() {
        assert_eq!(circle_bundle_presentation(0).homology().b, 3);
        let h = circle_bundle_presentation(2).homology();
        assert_eq!(h.b, 2);
        assert_eq!(h.torsion_i64(), vec![2]);
    }

    #[test]
    fn mapping_torus_betti() {
        for (g, s) in [(2, 0), (2, 1), (2, 2), (3, 2)] {
            let p = mapping_torus_presentation(g, s).unwrap();
            assert_eq!(p.homology().b, 1 + 2 * g - s);
        }
        assert!(mapping_torus_presentation(1, 0).is_err());
        assert!(mapping_torus_presentation(2, 3).is_err());
    }

    #[test]
    fn tau_is_last_coordinate() {
        let p = mapping_torus_presentation(2, 1).unwrap();
        let h = p.homology();
        let tau = h.free_map.last().unwrap();
        assert_eq!(tau, &vec![0, 0, 0, 1]);
    }

    #[test]
    fn monodromy_fixed_rank() {
        for s in 0..=2 {
            assert_eq!(fixed_rank(&mapping_torus_monodromy(2, s).unwrap()), 4 - s);
        }
    }

    #[test]
    fn trefoil_longitude_is_null_homologous() {
        let (p, mu, lambda) = trefoil_complement();
        assert_eq!(meridian_class(&p, &mu), vec![1]);
        assert_eq!(meridian_class(&p, &lambda), vec![0]);
    }

    #[test]
    fn trefoil_fillings() {
        let (p, mu, lambda) = trefoil_complement();
        let s3 = surgered_presentation(&SurgerySpec::new(p.clone(), mu.clone(), lambda.clone(), 1, 0).unwrap()).unwrap();
        let h = s3.homology();
        assert_eq!(h.b, 0);
        assert!(h.torsion.is_empty());
        let l5 = surgered_presentation(&SurgerySpec::new(p, mu, lambda, 5, 1).unwrap()).unwrap();
        assert_eq!(l5.homology().torsion_i64(), vec![5]);
    }

    #[test]
    fn slope_validation() {
        assert_eq!(validate_slope(2, 4), Err(Error::NonCoprimeSlope { p: 2, q: 4 }));
        assert_eq!(validate_slope(-1, 1), Err(Error::NegativeSlope));
        assert!(validate_slope(1, 0).is_ok());
        assert!(validate_slope(0, 1).is_ok());
    }

    #[test]
    fn zero_surgery_cases() {
        let tm1 = LaurentPoly::univariate(0, &[-1, 1]);
        assert_eq!(
            zero_surgery_formula(&LaurentPoly::one(1), 1, 1).unwrap_err(),
            Error::FormulaViolation
        );
        let z = zero_surgery_formula(&LaurentPoly::one(1), 0, 1).unwrap();
        assert!(z.unbounded_betti && z.delta.is_zero());
        let r = zero_surgery_formula(&tm1, 2, 2).unwrap();
        assert_eq!(r.delta, LaurentPoly::univariate(0, &[-1, 0, 1]).canonicalize());
        let r = zero_surgery_formula(&tm1, -3, 1).unwrap();
        assert_eq!(r.delta, LaurentPoly::univariate(0, &[1, 1, 1]).canonicalize());
    }
}
