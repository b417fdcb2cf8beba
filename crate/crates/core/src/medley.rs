//! Cover plans for cyclically stacked blocks, the Euler-class pushforward,
//! convex realization with divisibility planning, Betti stabilization and
//! assembly of realization certificates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::alexander;
use crate::cover;
use crate::error::{Error, Result};
use crate::fixture::Fixture;
use crate::laurent::Covector;
use crate::lp;
use crate::polytope::{Face, RationalPolytope};
use crate::presentation::Presentation;
use crate::rational::{self, int_json, rat_json, rvec_json, Q, RVec};

/// A piece of the stacked cover. `Connector(j)` is the part of a base copy
/// between the frontiers `S_j` and `S_{j+1}`; `Special(i)` is a copy of the
/// block cut open along `S_i`. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Connector(usize),
    Special(usize),
}

impl Piece {
    /// Frontier labels `(inward, outward)` for `n` special blocks.
    fn frontiers(self, n: usize) -> (usize, usize) {
        match self {
            Piece::Connector(j) => (j, j % n + 1),
            Piece::Special(i) => (i, i),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Connector(j) => write!(f, "C{j}"),
            Piece::Special(i) => write!(f, "X{i}"),
        }
    }
}

/// Compact block symbol: a base copy or a special block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Base,
    Special(usize),
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Base => write!(f, "B0"),
            Block::Special(i) => write!(f, "X{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPlan {
    pub n: usize,
    /// `m_0, m_1, …, m_n`.
    pub multiplicities: Vec<usize>,
    /// Cyclic sequence of pieces.
    pub pieces: Vec<Piece>,
}

/// Parses order tokens: `B` (a whole base copy `C1 … Cn`), `C<j>`, `X<i>`.
pub fn parse_order(tokens: &[&str], n: usize) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    for tok in tokens {
        let bad = || Error::OrderMismatch(format!("unrecognized block token `{tok}`"));
        if *tok == "B" || *tok == "B0" {
            out.extend((1..=n).map(Piece::Connector));
            continue;
        }
        let (kind, idx) = tok.split_at(1);
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > n {
            return Err(bad());
        }
        out.push(match kind {
            "C" => Piece::Connector(i),
            "X" => Piece::Special(i),
            _ => return Err(bad()),
        });
    }
    Ok(out)
}

fn canonical_pieces(n: usize, m: &[usize]) -> Vec<Piece> {
    let mut pieces = Vec::new();
    for _ in 1..m[0] {
        pieces.extend((1..=n).map(Piece::Connector));
    }
    for j in 1..=n {
        pieces.push(Piece::Connector(j));
        let next = j % n + 1;
        if next != 1 {
            pieces.extend(std::iter::repeat_n(Piece::Special(next), m[next]));
        }
    }
    pieces.extend(std::iter::repeat_n(Piece::Special(1), m[1]));
    pieces
}

/// Validates multiplicities and an optional piece order (canonical when absent).
pub fn build_cover_plan(n: usize, multiplicities: &[usize], order: Option<Vec<Piece>>) -> Result<CoverPlan> {
    if n == 0 {
        return Err(Error::NoSpecialBlocks);
    }
    if multiplicities.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: multiplicities.len(),
        });
    }
    if multiplicities[0] == 0 {
        return Err(Error::ZeroBaseMultiplicity);
    }
    let pieces = match order {
        None => canonical_pieces(n, multiplicities),
        Some(p) => p,
    };
    for (k, piece) in pieces.iter().enumerate() {
        let want = match piece {
            Piece::Connector(_) => multiplicities[0],
            Piece::Special(i) => multiplicities[*i],
        };
        let (Piece::Connector(i) | Piece::Special(i)) = *piece;
        if i == 0 || i > n {
            return Err(Error::OrderMismatch(format!("piece {piece} at position {k} out of range")));
        }
        let got = pieces.iter().filter(|p| *p == piece).count();
        if got != want {
            return Err(Error::OrderMismatch(format!("{piece} appears {got} times, expected {want}")));
        }
    }
    for j in 1..=n {
        if !pieces.contains(&Piece::Connector(j)) {
            return Err(Error::OrderMismatch(format!("missing C{j}")));
        }
    }
    for i in 1..=n {
        if multiplicities[i] > 0 && !pieces.contains(&Piece::Special(i)) {
            return Err(Error::OrderMismatch(format!("missing X{i}")));
        }
    }
    for k in 0..pieces.len() {
        let (_, out) = pieces[k].frontiers(n);
        let (inward, _) = pieces[(k + 1) % pieces.len()].frontiers(n);
        if out != inward {
            return Err(Error::FrontierMismatch(k));
        }
    }
    Ok(CoverPlan {
        n,
        multiplicities: multiplicities.to_vec(),
        pieces,
    })
}

impl CoverPlan {
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Block sequence with one `B0` per base copy (emitted at each `C1`).
    pub fn blocks(&self) -> Vec<Block> {
        self.pieces
            .iter()
            .filter_map(|p| match p {
                Piece::Connector(1) => Some(Block::Base),
                Piece::Connector(_) => None,
                Piece::Special(i) => Some(Block::Special(*i)),
            })
            .collect()
    }

    /// Number of frontiers labeled `S_i` in the cyclic word.
    pub fn frontier_count(&self, i: usize) -> usize {
        self.pieces.iter().filter(|p| p.frontiers(self.n).1 == i).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "multiplicities": self.multiplicities,
            "degree": self.degree(),
            "blocks": self.blocks().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "pieces": self.pieces.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// `Σ m_i e_i`.
pub fn pushforward_euler(plan: &CoverPlan, euler: &[RVec]) -> Result<RVec> {
    if euler.len() != plan.n + 1 {
        return Err(Error::DimensionMismatch {
            expected: plan.n + 1,
            got: euler.len(),
        });
    }
    let b = euler[0].len();
    let mut acc = vec![Q::zero(); b];
    for (e, &m) in euler.iter().zip(&plan.multiplicities) {
        if e.len() != b {
            return Err(Error::RankMismatch { left: b, right: e.len() });
        }
        acc = rational::add(&acc, &rational::scale(&rational::q(m as i64), e));
    }
    Ok(acc)
}

fn in_convex_hull(x: &[Q], points: &[RVec]) -> bool {
    let mut a: Vec<RVec> = (0..x.len())
        .map(|i| points.iter().map(|p| p[i].clone()).collect())
        .collect();
    a.push(vec![Q::one(); points.len()]);
    let mut b = x.to_vec();
    b.push(Q::one());
    lp::minimize(&vec![Q::zero(); points.len()], &a, &b).is_ok()
}

/// Weights `(μ_0, …, μ_n)` with `w = μ_0 v_0 + Σ μ_i v_i`: `μ_0` maximal,
/// then `(μ_1, …, μ_n)` lexicographically least.
pub fn convex_realization(w: &[Q], v0: &[Q], vertices: &[RVec]) -> Result<Vec<Q>> {
    let b = w.len();
    if v0.len() != b || vertices.iter().any(|v| v.len() != b) {
        return Err(Error::DimensionMismatch {
            expected: b,
            got: v0.len(),
        });
    }
    if vertices.is_empty() {
        return Err(Error::EmptyFace);
    }
    if !in_convex_hull(v0, vertices) {
        return Err(Error::BasePointNotInFace);
    }
    let n = vertices.len();
    let mut a: Vec<RVec> = (0..b)
        .map(|i| {
            let mut row = vec![v0[i].clone()];
            row.extend(vertices.iter().map(|v| v[i].clone()));
            row
        })
        .collect();
    a.push(vec![Q::one(); n + 1]);
    let mut rhs = w.to_vec();
    rhs.push(Q::one());

    let mut objective = vec![Q::zero(); n + 1];
    objective[0] = Q::one();
    let best = match lp::maximize(&objective, &a, &rhs) {
        Ok(s) => s.value,
        Err(Error::Infeasible) => return Err(Error::TargetNotInFace),
        Err(e) => return Err(e),
    };
    if !best.is_positive() {
        return Err(Error::BoundaryInfeasible);
    }
    let mut fixed = vec![best];
    for k in 1..=n {
        let mut a_k = a.clone();
        let mut rhs_k = rhs.clone();
        for (j, val) in fixed.iter().enumerate() {
            let mut row = vec![Q::zero(); n + 1];
            row[j] = Q::one();
            a_k.push(row);
            rhs_k.push(val.clone());
        }
        let mut c = vec![Q::zero(); n + 1];
        c[k] = Q::one();
        fixed.push(lp::minimize(&c, &a_k, &rhs_k)?.value);
    }
    Ok(fixed)
}

/// Least `D > 0` with every `μ_i D / d` integral, and the counts `μ_i D / d`.
pub fn divisibility_degree(mu: &[Q], d: u64) -> Result<(BigInt, Vec<BigInt>)> {
    if d == 0 || mu.is_empty() || !mu[0].is_positive() || mu.iter().any(Signed::is_negative) {
        return Err(Error::BadWeights);
    }
    if mu.iter().sum::<Q>() != Q::one() {
        return Err(Error::BadWeights);
    }
    let d = BigInt::from(d);
    let mut big_d = BigInt::one();
    for m in mu.iter().filter(|m| !m.is_zero()) {
        let dq = &d * m.denom();
        let need = &dq / m.numer().gcd(&dq);
        big_d = big_d.lcm(&need);
    }
    let counts = mu
        .iter()
        .map(|m| {
            let c = m * Q::from_integer(big_d.clone()) / Q::from_integer(d.clone());
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    Ok((big_d, counts))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub m_star: usize,
    pub b_max: usize,
    pub search_bound: usize,
    /// `b_1` of the `m`-fold cover for `m = 1, …, search_bound`.
    pub betti: Vec<usize>,
}

/// Smallest cover degree attaining the largest `b_1` among cyclic covers of
/// degree at most `4 · (deg Δ^ψ + 1)`.
pub fn stabilize_betti(p: &Presentation, psi: &Covector) -> Result<Stabilization> {
    let bound = alexander::betti_bound(p, psi)?;
    let search_bound = 4 * bound;
    let betti = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=search_bound)
            .map(|m| scope.spawn(move || cover::betti_of_cyclic_cover(p, psi, m)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("cover worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    let b_max = *betti.iter().max().expect("nonempty search");
    let m_star = betti.iter().position(|&b| b == b_max).expect("max attained") + 1;
    Ok(Stabilization {
        m_star,
        b_max,
        search_bound,
        betti,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Assumed,
    Fixture,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Assumed => "assumed",
            Provenance::Fixture => "fixture",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MedleyCertificate {
    pub psi: Vec<i64>,
    pub stabilization: Option<Stabilization>,
    pub face_vertices: Vec<RVec>,
    pub face_dim: usize,
    pub v0: RVec,
    pub cover_degree: u64,
    pub provenance: Provenance,
    pub vertex_axiom: bool,
    pub mu: Vec<Q>,
    pub total_degree: BigInt,
    pub block_counts: Vec<BigInt>,
    pub plan: CoverPlan,
    pub target: RVec,
    pub pushforward: RVec,
    pub pushforward_check: bool,
    pub norm_check: bool,
}

impl MedleyCertificate {
    pub fn to_json(&self) -> Value {
        let st = self.stabilization.as_ref();
        json!({
            "psi": self.psi,
            "m_star": st.map(|s| s.m_star),
            "b_max": st.map(|s| s.b_max),
            "search_bound": st.map(|s| s.search_bound),
            "face": {
                "dim": self.face_dim,
                "vertices": self.face_vertices.iter().map(|v| rvec_json(v)).collect::<Vec<_>>(),
            },
            "v0": {
                "point": rvec_json(&self.v0),
                "cover_degree": self.cover_degree,
                "provenance": self.provenance.as_str(),
            },
            "vertex_axiom": self.vertex_axiom,
            "mu": self.mu.iter().map(rat_json).collect::<Vec<_>>(),
            "D": int_json(&self.total_degree),
            "block_counts": self.block_counts.iter().map(int_json).collect::<Vec<_>>(),
            "plan": self.plan.to_json(),
            "target_w": rvec_json(&self.target),
            "pushforward": rvec_json(&self.pushforward),
            "pushforward_check": self.pushforward_check,
            "norm_check": self.norm_check,
        })
    }
}

/// Whether `x` is a positive multiple of a point in the relative interior
/// of the face dual to `face`: the vertices of `face` take a common value
/// `λ > 0` on `x` and every other vertex of `dual_ball` takes less.
pub fn in_dual_cone(dual_ball: &RationalPolytope, face: &Face, x: &[Q]) -> bool {
    let values: Vec<Q> = dual_ball.vertices.iter().map(|v| rational::dot(v, x)).collect();
    let Some(&first) = face.vertices.first() else {
        return false;
    };
    let lambda = &values[first];
    lambda.is_positive()
        && values.iter().enumerate().all(|(i, val)| {
            if face.vertices.contains(&i) {
                val == lambda
            } else {
                val < lambda
            }
        })
}

/// Base class supplied with a certificate request.
#[derive(Clone, Debug)]
pub struct BaseDatum {
    pub point: RVec,
    pub cover_degree: u64,
}

/// Assembles the arithmetic part of a certificate for a target on the
/// boundary of `dual_ball`: face, weights, degree, plan and checks.
pub fn assemble_certificate(
    dual_ball: &RationalPolytope,
    w: &[Q],
    psi: &[i64],
    base: Option<&BaseDatum>,
    stabilization: Option<Stabilization>,
) -> Result<MedleyCertificate> {
    let face = match dual_ball.face_of(w) {
        Ok(f) => f,
        Err(Error::PointInterior | Error::PointExterior) => return Err(Error::TargetNotOnBoundary),
        Err(e) => return Err(e),
    };
    let psi_q = rational::qvec(psi);
    if !in_dual_cone(dual_ball, &face, &psi_q) {
        return Err(Error::PsiNotInCone);
    }
    let vertices = dual_ball.face_points(&face);
    let vertex_axiom = face.dim == 0;
    let (v0, d, provenance) = if vertex_axiom {
        (w.to_vec(), 1, Provenance::Assumed)
    } else {
        match base {
            Some(b) => {
                if b.cover_degree == 0 {
                    return Err(Error::BadWeights);
                }
                if !dual_ball.contains(&b.point) || !face.facets.iter().all(|&f| dual_ball.facets[f].value(&b.point).is_zero()) {
                    return Err(Error::BasePointNotInFace);
                }
                (b.point.clone(), b.cover_degree, Provenance::Fixture)
            }
            None => (dual_ball.barycenter(&face), 1, Provenance::Assumed),
        }
    };
    let (mu, plan_vertices) = if vertex_axiom {
        (vec![Q::one()], Vec::new())
    } else {
        (convex_realization(w, &v0, &vertices)?, vertices.clone())
    };
    let (total_degree, block_counts) = divisibility_degree(&mu, d)?;
    let counts: Vec<usize> = block_counts
        .iter()
        .map(|c| usize::try_from(c).map_err(|_| Error::OutOfRange("block count too large".into())))
        .collect::<Result<_>>()?;
    let n = plan_vertices.len().max(1);
    let mut multiplicities = counts.clone();
    multiplicities.resize(n + 1, 0);
    let plan = build_cover_plan(n, &multiplicities, None)?;

    // Lifted classes push forward to d·v_i.
    let dq = rational::q(d as i64);
    let mut euler = vec![rational::scale(&dq, &v0)];
    if vertex_axiom {
        euler.push(vec![Q::zero(); w.len()]);
    } else {
        euler.extend(plan_vertices.iter().map(|v| rational::scale(&dq, v)));
    }
    let pushforward = pushforward_euler(&plan, &euler)?;
    let target_total = rational::scale(&Q::from_integer(total_degree.clone()), w);
    let pushforward_check = pushforward == target_total;
    let realized = rational::scale(&(Q::one() / Q::from_integer(total_degree.clone())), &pushforward);
    let norm_check = dual_ball.contains(&realized)
        && dual_ball
            .facets
            .iter()
            .map(|f| rational::dot(&f.normal, &realized) / &f.rhs)
            .max()
            .is_some_and(|m| m.is_one());
    Ok(MedleyCertificate {
        psi: psi.to_vec(),
        stabilization,
        face_vertices: if vertex_axiom { vec![w.to_vec()] } else { vertices },
        face_dim: face.dim,
        v0,
        cover_degree: d,
        provenance,
        vertex_axiom,
        mu,
        total_degree,
        block_counts,
        plan,
        target: w.to_vec(),
        pushforward,
        pushforward_check,
        norm_check,
    })
}

/// Full pipeline on a fixture: face and cone tests, nonvanishing,
/// stabilization, then the arithmetic certificate.
pub fn certify_virtual_realization(
    fixture: &Fixture,
    w: &[Q],
    psi: &Covector,
    base: Option<&BaseDatum>,
) -> Result<MedleyCertificate> {
    let ball = fixture.ball.as_ref().ok_or(Error::MissingBall)?;
    let entries = psi.primitive_entries()?;
    if entries.len() != ball.rank || w.len() != ball.rank {
        return Err(Error::DimensionMismatch {
            expected: ball.rank,
            got: if entries.len() != ball.rank { entries.len() } else { w.len() },
        });
    }
    let dual = &ball.dual_ball;
    let face = match dual.face_of(w) {
        Ok(f) => f,
        Err(Error::PointInterior | Error::PointExterior) => return Err(Error::TargetNotOnBoundary),
        Err(e) => return Err(e),
    };
    if !in_dual_cone(dual, &face, &rational::qvec(&entries)) {
        return Err(Error::PsiNotInCone);
    }
    if !alexander::is_nonvanishing(&fixture.presentation, psi)? {
        return Err(Error::VanishingAlexander(entries));
    }
    let st = stabilize_betti(&fixture.presentation, psi)?;
    assemble_certificate(dual, w, &entries, base, Some(st))
}
