//! Convex domains with Euclidean projection.

use crate::error::CoreError;
use crate::scalar::Scalar;
use crate::vector::DenseVec;

/// Nonempty closed convex constraint set for one variable block.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain<S: Scalar> {
    /// All of R^d (projection is the identity).
    Unbounded { dim: usize },
    /// Euclidean ball of positive radius around a center.
    Ball { radius: S, center: DenseVec<S> },
    /// Axis-aligned box, lower <= upper componentwise.
    Box { lower: DenseVec<S>, upper: DenseVec<S> },
}

impl<S: Scalar> Domain<S> {
    pub fn unbounded(dim: usize) -> Self {
        Domain::Unbounded { dim }
    }

    /// Origin-centered ball.
    pub fn ball(radius: S, dim: usize) -> Result<Self, CoreError> {
        Self::ball_at(radius, DenseVec::zeros(dim))
    }

    pub fn ball_at(radius: S, center: DenseVec<S>) -> Result<Self, CoreError> {
        if !(radius > S::zero()) || !radius.is_finite() {
            return Err(CoreError::InvalidDomain(format!(
                "ball radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Domain::Ball { radius, center })
    }

    pub fn boxed(lower: DenseVec<S>, upper: DenseVec<S>) -> Result<Self, CoreError> {
        if lower.dim() != upper.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: lower.dim(),
                got: upper.dim(),
            });
        }
        for i in 0..lower.dim() {
            if lower[i] > upper[i] {
                return Err(CoreError::InvalidDomain(format!(
                    "box lower entry {i} exceeds upper ({} > {})",
                    lower[i], upper[i]
                )));
            }
        }
        Ok(Domain::Box { lower, upper })
    }

    /// Symmetric box [-half_width, half_width]^dim.
    pub fn symmetric_box(half_width: S, dim: usize) -> Result<Self, CoreError> {
        let lower = DenseVec::from_raw(vec![-half_width; dim]);
        let upper = DenseVec::from_raw(vec![half_width; dim]);
        Self::boxed(lower, upper)
    }

    pub fn dim(&self) -> usize {
        match self {
            Domain::Unbounded { dim } => *dim,
            Domain::Ball { center, .. } => center.dim(),
            Domain::Box { lower, .. } => lower.dim(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self, Domain::Unbounded { .. })
    }

    /// Radius bound: max_{x in domain} ||x||_2, if the domain is bounded.
    pub fn norm_bound(&self) -> Option<S> {
        match self {
            Domain::Unbounded { .. } => None,
            Domain::Ball { radius, center } => Some(*radius + center.norm2()),
            Domain::Box { lower, upper } => {
                let mut sum = S::zero();
                for i in 0..lower.dim() {
                    let m = lower[i].abs().max(upper[i].abs());
                    sum += m * m;
                }
                Some(sum.sqrt())
            }
        }
    }

    /// Euclidean projection onto the domain.
    ///
    /// Idempotent; members are returned unchanged (a point exactly on the
    /// ball boundary is not renormalized).
    pub fn project(&self, p: &DenseVec<S>) -> Result<DenseVec<S>, CoreError> {
        if p.dim() != self.dim() {
            return Err(CoreError::DimensionMismatch { expected: self.dim(), got: p.dim() });
        }
        let mut out = p.clone();
        self.project_in_place(&mut out);
        Ok(out)
    }

    /// Projection without the dimension check, for validated hot loops.
    pub(crate) fn project_in_place(&self, p: &mut DenseVec<S>) {
        debug_assert_eq!(p.dim(), self.dim());
        match self {
            Domain::Unbounded { .. } => {}
            Domain::Ball { radius, center } => {
                let mut dist_sq = S::zero();
                for i in 0..p.dim() {
                    let d = p[i] - center[i];
                    dist_sq += d * d;
                }
                let dist = dist_sq.sqrt();
                if dist > *radius {
                    let scale = *radius / dist;
                    for i in 0..p.dim() {
                        p[i] = center[i] + (p[i] - center[i]) * scale;
                    }
                }
            }
            Domain::Box { lower, upper } => {
                for i in 0..p.dim() {
                    if p[i] < lower[i] {
                        p[i] = lower[i];
                    } else if p[i] > upper[i] {
                        p[i] = upper[i];
                    }
                }
            }
        }
    }

    /// Membership up to a relative tolerance of 1e-12.
    pub fn contains(&self, p: &DenseVec<S>) -> bool {
        if p.dim() != self.dim() {
            return false;
        }
        let tol = S::from_f64_c(1e-12);
        match self {
            Domain::Unbounded { .. } => true,
            Domain::Ball { radius, center } => {
                p.distance(center) <= *radius * (S::one() + tol)
            }
            Domain::Box { lower, upper } => {
                let one_plus = S::one() + tol;
                (0..p.dim()).all(|i| {
                    let slack = (upper[i] - lower[i]).abs().max(S::one()) * tol * one_plus;
                    p[i] >= lower[i] - slack && p[i] <= upper[i] + slack
                })
            }
        }
    }
}
