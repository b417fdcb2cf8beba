use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{convex_hull, RationalPolytope};
use crate::error::{Error, Result};
use crate::laurent::{Covector, LaurentPoly};
use crate::rational::{self, rat_json, rvec_json, Q, RVec};

/// Thurston ball `B = {x : |u_i·x| ≤ 1}` and dual ball `B* = conv{±u_i}`
/// defined by even lattice functionals.
#[derive(Clone, Debug)]
pub struct NormBallPair {
    pub rank: usize,
    pub functionals: Vec<Vec<i64>>,
    pub dual_ball: RationalPolytope,
    /// `None` when the functionals do not span (a seminorm ball is unbounded).
    pub thurston_ball: Option<RationalPolytope>,
}

fn validated(functionals: &[Vec<i64>]) -> Result<usize> {
    let first = functionals.first().ok_or(Error::EmptyInput)?;
    let b = first.len();
    for u in functionals {
        if u.len() != b {
            return Err(Error::DimensionMismatch {
                expected: b,
                got: u.len(),
            });
        }
        if u.iter().any(|x| x % 2 != 0) {
            return Err(Error::OddFunctional(u.clone()));
        }
    }
    Ok(b)
}

/// Builds the ball pair of a nondegenerate norm.
pub fn ball_from_functionals(functionals: &[Vec<i64>]) -> Result<NormBallPair> {
    let pair = NormBallPair::seminorm(functionals)?;
    let span = pair.span_rank();
    if span < pair.rank {
        return Err(Error::DegenerateNorm {
            rank: span,
            dim: pair.rank,
        });
    }
    Ok(pair)
}

impl NormBallPair {
    /// Like [`ball_from_functionals`] but accepts functionals that do not
    /// span, keeping `B*` as a lower-dimensional polytope.
    pub fn seminorm(functionals: &[Vec<i64>]) -> Result<NormBallPair> {
        let b = validated(functionals)?;
        let mut pts: Vec<RVec> = Vec::new();
        for u in functionals {
            let v = rational::qvec(u);
            pts.push(rational::neg(&v));
            pts.push(v);
        }
        let dual_ball = convex_hull(&pts)?;
        let thurston_ball = if dual_ball.is_full_dimensional() {
            Some(dual_ball.polar()?)
        } else {
            None
        };
        Ok(NormBallPair {
            rank: b,
            functionals: functionals.to_vec(),
            dual_ball,
            thurston_ball,
        })
    }

    pub fn span_rank(&self) -> usize {
        self.dual_ball.affine_dim()
    }

    pub fn is_degenerate(&self) -> bool {
        self.thurston_ball.is_none()
    }

    /// `max_i |u_i · x|`.
    pub fn thurston_norm(&self, x: &[Q]) -> Q {
        self.functionals
            .iter()
            .map(|u| rational::dot(&rational::qvec(u), x).abs())
            .max()
            .unwrap_or_else(Q::zero)
    }

    /// Gauge of `B*`, defined on the span of the functionals.
    pub fn dual_norm(&self, w: &[Q]) -> Option<Q> {
        let b = &self.dual_ball;
        if !b.equations.iter().all(|e| rational::dot(&e.normal, w).is_zero()) {
            return None;
        }
        Some(
            b.facets
                .iter()
                .map(|f| rational::dot(&f.normal, w) / &f.rhs)
                .max()
                .unwrap_or_else(Q::zero),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "functionals": self.functionals,
            "degenerate": self.is_degenerate(),
            "dual_ball": self.dual_ball.to_json(),
            "thurston_ball": self.thurston_ball.as_ref().map(|b| b.to_json()),
        })
    }
}

/// Convex hull of the support exponents.
pub fn newton_polytope(p: &LaurentPoly) -> Result<RationalPolytope> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    convex_hull(&p.support_points())
}

/// The Alexander norm `α ↦ deg_α(Δ)`, carried by the centered difference
/// body `P − P` of the Newton polytope.
#[derive(Clone, Debug)]
pub struct AlexanderNormBall {
    pub newton: RationalPolytope,
    pub difference: RationalPolytope,
    /// Polar of `P − P`; `None` for a degenerate seminorm.
    pub unit_ball: Option<RationalPolytope>,
}

impl AlexanderNormBall {
    pub fn is_degenerate(&self) -> bool {
        self.unit_ball.is_none()
    }

    /// Support function of `P − P`.
    pub fn norm(&self, alpha: &[Q]) -> Q {
        self.difference
            .vertices
            .iter()
            .map(|z| rational::dot(alpha, z))
            .max()
            .unwrap_or_else(Q::zero)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "newton": self.newton.to_json(),
            "difference": self.difference.to_json(),
            "degenerate": self.is_degenerate(),
            "unit_ball": self.unit_ball.as_ref().map(|b| b.to_json()),
        })
    }
}

pub fn alexander_norm_ball(delta_sharp: &LaurentPoly) -> Result<AlexanderNormBall> {
    let newton = newton_polytope(delta_sharp)?;
    let mut diffs = Vec::new();
    for a in &newton.vertices {
        for b in &newton.vertices {
            diffs.push(rational::sub(a, b));
        }
    }
    let difference = convex_hull(&diffs)?;
    let unit_ball = if difference.is_full_dimensional() {
        Some(difference.polar()?)
    } else {
        None
    };
    Ok(AlexanderNormBall {
        newton,
        difference,
        unit_ball,
    })
}

/// One evaluation of `deg_α(Δ^#) ≤ ‖α‖_Th + c`.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub alpha: RVec,
    pub lhs: Q,
    pub rhs: Q,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct ThurstonBoundReport {
    pub correction: i64,
    pub checks: Vec<BoundCheck>,
    pub holds: bool,
    pub equality_attained: bool,
}

impl ThurstonBoundReport {
    pub fn to_json(&self) -> Value {
        json!({
            "correction": self.correction,
            "holds": self.holds,
            "equality_attained": self.equality_attained,
            "checks": self.checks.iter().map(|c| json!({
                "alpha": rvec_json(&c.alpha),
                "lhs": rat_json(&c.lhs),
                "rhs": rat_json(&c.rhs),
                "holds": c.holds,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks the Alexander-norm lower bound for the Thurston norm at the dual
/// ball vertices and at the supplied sample classes. Classes and homology
/// are identified through the stored basis.
pub fn thurston_lower_bound_check(
    delta_sharp: &LaurentPoly,
    ball: &NormBallPair,
    b: usize,
    samples: &[RVec],
) -> Result<ThurstonBoundReport> {
    if ball.rank != delta_sharp.rank() {
        return Err(Error::RankMismatch {
            left: delta_sharp.rank(),
            right: ball.rank,
        });
    }
    let correction = if b >= 2 { 0 } else { 2 };
    let mut alphas: Vec<RVec> = ball.dual_ball.vertices.clone();
    alphas.extend(samples.iter().cloned());
    let checks = alphas
        .into_iter()
        .map(|alpha| {
            if alpha.len() != ball.rank {
                return Err(Error::DimensionMismatch {
                    expected: ball.rank,
                    got: alpha.len(),
                });
            }
            let lhs = delta_sharp.deg_alpha(&Covector(alpha.clone()))?;
            let rhs = ball.thurston_norm(&alpha) + rational::q(correction);
            Ok(BoundCheck {
                holds: lhs <= rhs,
                alpha,
                lhs,
                rhs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ThurstonBoundReport {
        correction,
        holds: checks.iter().all(|c| c.holds),
        equality_attained: checks.iter().any(|c| c.lhs == c.rhs && !c.lhs.is_zero()),
        checks,
    })
}

/// `count` rational classes spread through `{−2, −3/2, …, 2}^b`, in a fixed order.
pub fn default_sample_grid(b: usize, count: usize) -> Vec<RVec> {
    let steps: Vec<Q> = (-4..=4).map(|k| rational::qf(k, 2)).collect();
    let total = steps.len().pow(b as u32);
    let stride = (total / count.max(1)).max(1);
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count && i < total {
        let mut k = i;
        let v: RVec = (0..b)
            .map(|_| {
                let s = steps[k % steps.len()].clone();
                k /= steps.len();
                s
            })
            .collect();
        if !rational::is_zero_vec(&v) {
            out.push(v);
        }
        i += stride;
    }
    out
}
