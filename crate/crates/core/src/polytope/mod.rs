//! Exact rational polytopes with both representations, their faces,
//! polar duality, membership classification and gauge evaluation.

mod ball;
pub(crate) mod hull;

pub use ball::{
    alexander_norm_ball, ball_from_functionals, default_sample_grid, newton_polytope,
    thurston_lower_bound_check, AlexanderNormBall, BoundCheck, NormBallPair, ThurstonBoundReport,
};

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lp;
use crate::rational::{self, rat_json, rvec_json, Q, RVec};

/// Affine constraint `normal · x ≤ rhs` (or `=` for equations).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: RVec,
    pub rhs: Q,
}

impl Facet {
    pub fn value(&self, x: &[Q]) -> Q {
        rational::dot(&self.normal, x) - &self.rhs
    }

    /// `rhs = 1` when positive, otherwise a primitive integer normal.
    fn normalized(normal: RVec, rhs: Q) -> Facet {
        if rhs.is_positive() {
            Facet {
                normal: normal.iter().map(|x| x / &rhs).collect(),
                rhs: Q::one(),
            }
        } else {
            let mut all = normal.clone();
            all.push(rhs);
            let v = hull::primitive_direction(&all);
            let rhs = v[v.len() - 1].clone();
            Facet {
                normal: v[..v.len() - 1].to_vec(),
                rhs,
            }
        }
    }
}

/// A bounded convex polytope in `Q^dim` carrying both its irredundant vertex
/// list and its facet inequalities, plus the equations of its affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub dim: usize,
    pub vertices: Vec<RVec>,
    pub facets: Vec<Facet>,
    pub equations: Vec<Facet>,
}

/// A nonempty face, described by the facets that contain it and its vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub facets: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary(Face),
    Exterior,
}

/// Convex hull of finitely many rational points.
pub fn convex_hull(points: &[RVec]) -> Result<RationalPolytope> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: p.len(),
        });
    }
    let pts: Vec<RVec> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let p0 = pts[0].clone();
    let diffs: Vec<RVec> = pts.iter().skip(1).map(|p| rational::sub(p, &p0)).collect();
    let (_, pivots) = hull::rref(&diffs, d);
    let k = pivots.len();
    let mut equations: Vec<Facet> = hull::nullspace(&diffs, d)
        .into_iter()
        .map(|a| {
            let a = hull::primitive_direction(&a);
            let rhs = rational::dot(&a, &p0);
            Facet { normal: a, rhs }
        })
        .collect();
    equations.sort();
    if k == 0 {
        return Ok(RationalPolytope {
            dim: d,
            vertices: vec![p0],
            facets: Vec::new(),
            equations,
        });
    }
    // Coordinates at the pivots embed the affine hull injectively.
    let projected: Vec<RVec> = pts
        .iter()
        .map(|p| pivots.iter().map(|&j| p[j].clone()).collect())
        .collect();
    let raw = hull::full_dim_facets(&projected, k);
    let mut vertex_ids = Vec::new();
    for i in 0..pts.len() {
        let normals: Vec<RVec> = raw
            .iter()
            .filter(|(_, _, on)| on.contains(&i))
            .map(|(n, _, _)| n.clone())
            .collect();
        if hull::rank(&normals, k) == k {
            vertex_ids.push(i);
        }
    }
    let mut facets: Vec<Facet> = raw
        .into_iter()
        .map(|(n, rhs, _)| {
            let mut lifted = vec![Q::zero(); d];
            for (x, &j) in n.into_iter().zip(&pivots) {
                lifted[j] = x;
            }
            Facet::normalized(lifted, rhs)
        })
        .collect();
    facets.sort();
    facets.dedup();
    Ok(RationalPolytope {
        dim: d,
        vertices: vertex_ids.into_iter().map(|i| pts[i].clone()).collect(),
        facets,
        equations,
    })
}

impl RationalPolytope {
    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.equations.iter().all(|e| e.value(x).is_zero())
            && self.facets.iter().all(|f| !f.value(x).is_positive())
    }

    /// Vertices lying on every facet in `facets`.
    fn vertices_on(&self, facets: &[usize]) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| facets.iter().all(|&f| self.facets[f].value(&self.vertices[v]).is_zero()))
            .collect()
    }

    /// Facets containing all the given vertices.
    fn facets_containing(&self, vertices: &[usize]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&f| vertices.iter().all(|&v| self.facets[f].value(&self.vertices[v]).is_zero()))
            .collect()
    }

    fn affine_rank(&self, vertices: &[usize]) -> usize {
        let Some(&first) = vertices.first() else {
            return 0;
        };
        let diffs: Vec<RVec> = vertices[1..]
            .iter()
            .map(|&v| rational::sub(&self.vertices[v], &self.vertices[first]))
            .collect();
        hull::rank(&diffs, self.dim)
    }

    /// The face spanned by a set of vertex indices (its smallest face).
    pub fn face_from_vertices(&self, vertices: &[usize]) -> Result<Face> {
        if vertices.is_empty() {
            return Err(Error::EmptyFace);
        }
        let facets = self.facets_containing(vertices);
        let all = self.vertices_on(&facets);
        Ok(Face {
            dim: self.affine_rank(&all),
            facets,
            vertices: all,
        })
    }

    /// The whole polytope as a face of itself.
    pub fn improper_face(&self) -> Face {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        Face {
            dim: self.affine_dim(),
            facets: Vec::new(),
            vertices: all,
        }
    }

    /// All nonempty proper faces, ordered by dimension then vertex set.
    pub fn faces(&self) -> Vec<Face> {
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = (0..self.facets.len()).map(|f| self.vertices_on(&[f])).collect();
        let facet_sets = frontier.clone();
        while let Some(s) = frontier.pop() {
            if s.is_empty() || !sets.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let meet: Vec<usize> = s.iter().copied().filter(|v| f.contains(v)).collect();
                if !meet.is_empty() && !sets.contains(&meet) {
                    frontier.push(meet);
                }
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|vs| Face {
                dim: self.affine_rank(&vs),
                facets: self.facets_containing(&vs),
                vertices: vs,
            })
            .collect();
        faces.sort();
        faces
    }

    pub fn face_points(&self, face: &Face) -> Vec<RVec> {
        face.vertices.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    pub fn barycenter(&self, face: &Face) -> RVec {
        let pts = self.face_points(face);
        let n = Q::from_integer((pts.len() as i64).into());
        let mut acc = vec![Q::zero(); self.dim];
        for p in &pts {
            acc = rational::add(&acc, p);
        }
        acc.into_iter().map(|x| x / &n).collect()
    }

    /// Interior, boundary (with the smallest face containing `x`), or exterior.
    pub fn classify(&self, x: &[Q]) -> Result<Membership> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if !self.contains(x) {
            return Ok(Membership::Exterior);
        }
        let active: Vec<usize> = (0..self.facets.len())
            .filter(|&f| self.facets[f].value(x).is_zero())
            .collect();
        if active.is_empty() {
            return Ok(Membership::Interior);
        }
        let vertices = self.vertices_on(&active);
        Ok(Membership::Boundary(Face {
            dim: self.affine_rank(&vertices),
            facets: self.facets_containing(&vertices),
            vertices,
        }))
    }

    /// The face whose relative interior contains the boundary point `w`.
    pub fn face_of(&self, w: &[Q]) -> Result<Face> {
        match self.classify(w)? {
            Membership::Boundary(f) => Ok(f),
            Membership::Interior => Err(Error::PointInterior),
            Membership::Exterior => Err(Error::PointExterior),
        }
    }

    /// Whether `y` lies in the relative interior of `face`.
    pub fn in_relative_interior(&self, y: &[Q], face: &Face) -> bool {
        self.contains(y)
            && (0..self.facets.len()).all(|f| {
                let v = self.facets[f].value(y);
                if face.facets.contains(&f) {
                    v.is_zero()
                } else {
                    v.is_negative()
                }
            })
    }

    /// Whether `x = λ·y` for some `λ > 0` and `y` in the relative interior of `face`.
    pub fn in_cone_over_interior(&self, x: &[Q], face: &Face) -> bool {
        // Each constraint pins or bounds λ.
        let mut exact: Option<Q> = None;
        let mut lower = Q::zero();
        let mut upper: Option<Q> = None;
        let mut pin = |a: Q, b: &Q| -> bool {
            // a = λ b
            if b.is_zero() {
                return a.is_zero();
            }
            let l = a / b;
            match &exact {
                Some(e) => *e == l,
                None => {
                    exact = Some(l);
                    true
                }
            }
        };
        for e in &self.equations {
            if !pin(rational::dot(&e.normal, x), &e.rhs) {
                return false;
            }
        }
        for &f in &face.facets {
            let fa = &self.facets[f];
            if !pin(rational::dot(&fa.normal, x), &fa.rhs) {
                return false;
            }
        }
        // Strict: a·x < λ b for the remaining facets.
        let mut strict_ok = true;
        for (f, fa) in self.facets.iter().enumerate() {
            if face.facets.contains(&f) {
                continue;
            }
            let a = rational::dot(&fa.normal, x);
            if fa.rhs.is_zero() {
                strict_ok &= a.is_negative();
            } else if fa.rhs.is_positive() {
                let l = a / &fa.rhs;
                if l > lower {
                    lower = l;
                }
                // λ > l, recorded as a strict lower bound.
            } else {
                let l = a / &fa.rhs;
                upper = Some(match upper {
                    Some(u) if u < l => u,
                    _ => l,
                });
            }
        }
        if !strict_ok {
            return false;
        }
        match exact {
            Some(l) => {
                l.is_positive()
                    && self.facets.iter().enumerate().all(|(f, fa)| {
                        face.facets.contains(&f) || (rational::dot(&fa.normal, x) - &l * &fa.rhs).is_negative()
                    })
            }
            None => match upper {
                Some(u) => lower < u,
                None => true,
            },
        }
    }

    /// `max_i (u_i · x)` over facets with `rhs = 1`; the gauge when the
    /// origin is interior.
    pub fn norm_from_facets(&self, x: &[Q]) -> Result<Q> {
        if !self.is_full_dimensional() || self.facets.iter().any(|f| !f.rhs.is_one()) {
            return Err(Error::OriginNotInterior);
        }
        Ok(self
            .facets
            .iter()
            .map(|f| rational::dot(&f.normal, x))
            .max()
            .unwrap_or_else(Q::zero))
    }

    /// Gauge `min{λ ≥ 0 : x ∈ λP}` from the vertex representation by exact LP.
    pub fn gauge(&self, x: &[Q]) -> Result<Q> {
        if !self.is_full_dimensional() || !self.facets.iter().all(|f| f.rhs.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let n = self.vertices.len();
        let a: Vec<RVec> = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).collect())
            .collect();
        let c = vec![Q::one(); n];
        Ok(lp::minimize(&c, &a, x)?.value)
    }

    /// Polar body `{y : y·x ≤ 1 ∀x ∈ P}` for full-dimensional `P` with 0 interior.
    pub fn polar(&self) -> Result<RationalPolytope> {
        if !self.is_full_dimensional() || !self.facets.iter().all(|f| f.rhs.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let normals: Vec<RVec> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|x| x / &f.rhs).collect())
            .collect();
        convex_hull(&normals)
    }

    /// Dual face `F^∨ = {x ∈ P° : ⟨u, x⟩ = 1 ∀u ∈ F}` inside `polar`.
    pub fn dual_face(&self, face: &Face, polar: &RationalPolytope) -> Result<Face> {
        if face.vertices.is_empty() {
            return Err(Error::EmptyFace);
        }
        let pts = self.face_points(face);
        let on: Vec<usize> = (0..polar.vertices.len())
            .filter(|&v| pts.iter().all(|u| rational::dot(u, &polar.vertices[v]).is_one()))
            .collect();
        if on.is_empty() {
            return Err(Error::NotAFace);
        }
        polar.face_from_vertices(&on)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "vertices": self.vertices.iter().map(|v| rvec_json(v)).collect::<Vec<_>>(),
            "facets": self.facets.iter().map(|f| json!({"u": rvec_json(&f.normal), "rhs": rat_json(&f.rhs)})).collect::<Vec<_>>(),
            "equations": self.equations.iter().map(|f| json!({"u": rvec_json(&f.normal), "rhs": rat_json(&f.rhs)})).collect::<Vec<_>>(),
        })
    }
}

impl Face {
    pub fn to_json(&self, parent: &RationalPolytope) -> Value {
        json!({
            "dim": self.dim,
            "vertices": parent.face_points(self).iter().map(|v| rvec_json(v)).collect::<Vec<_>>(),
        })
    }
}
