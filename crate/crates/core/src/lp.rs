//! Exact-rational phase-one simplex for Newton-polyhedron membership.
//!
//! Decides whether some convex combination of the given points lies
//! componentwise below a target vector:
//!
//! ```text
//!   find λ ≥ 0 with  Σ λ_i = 1  and  Σ λ_i v_i ≤ a
//! ```
//!
//! Rows are the `n` coordinate constraints (with slacks as the starting
//! basis) and the convexity row (with one artificial). Bland's rule is used
//! for both the entering and leaving choice, so the method terminates.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::Exp;

/// Exact rational vector in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, q| num::integer::lcm(acc, q.denom().clone()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    obj: Vec<BigRational>,
    basis: Vec<usize>,
    /// index of the right-hand side column
    rhs: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for (x, p) in self.obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes the objective row; returns when no reduced cost is negative.
    fn optimize(&mut self) {
        loop {
            let Some(col) = (0..self.rhs).find(|&j| self.obj[j].is_negative()) else { return };
            let mut best: Option<(usize, BigRational)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if !r[col].is_positive() {
                    continue;
                }
                let ratio = &r[self.rhs] / &r[col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // The phase-one objective is bounded below by zero, so some row
            // always limits the step.
            let (row, _) = best.expect("phase-one objective is bounded");
            self.pivot(row, col);
        }
    }
}

/// A valid inequality `w·x ≥ c` for the polyhedron, with `w ≥ 0`, scaled
/// to integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub weights: Vec<BigInt>,
    pub bound: BigInt,
}

impl Cut {
    pub fn is_violated_by(&self, a: &[Exp]) -> bool {
        let lhs: BigInt = self.weights.iter().zip(a).map(|(w, &x)| w * BigInt::from(x)).sum();
        lhs < self.bound
    }
}

/// Result of a membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Convex weights `λ` with `Σ λ_i v_i ≤ a`.
    Inside(RationalVector),
    /// A separating inequality read off the optimal phase-one dual.
    Outside(Cut),
}

/// Returns a certificate `λ` when `a` lies in `conv(points) + ℝ^n_{≥0}`.
pub fn convex_dominated(points: &[Vec<Exp>], a: &[Exp]) -> Result<Option<RationalVector>> {
    Ok(match decide(points, a)? {
        Membership::Inside(cert) => Some(cert),
        Membership::Outside(_) => None,
    })
}

/// Decides membership of `a` in `conv(points) + ℝ^n_{≥0}` with a
/// certificate either way.
pub fn decide(points: &[Vec<Exp>], a: &[Exp]) -> Result<Membership> {
    let Some(first) = points.first() else { return Err(AlgebraError::EmptyPointSet) };
    let n = first.len();
    if a.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: a.len() });
    }
    if let Some(bad) = points.iter().find(|p| p.len() != n) {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: bad.len() });
    }
    let r = points.len();
    // columns: λ_0..λ_{r-1}, s_0..s_{n-1}, t, rhs
    let art = r + n;
    let rhs = art + 1;
    let int = |x: u64| BigRational::from_integer(BigInt::from(x));
    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row = vec![BigRational::zero(); rhs + 1];
        for (i, p) in points.iter().enumerate() {
            row[i] = int(u64::from(p[j]));
        }
        row[r + j] = BigRational::one();
        row[rhs] = int(u64::from(a[j]));
        rows.push(row);
    }
    let mut conv = vec![BigRational::zero(); rhs + 1];
    for x in conv.iter_mut().take(r) {
        *x = BigRational::one();
    }
    conv[art] = BigRational::one();
    conv[rhs] = BigRational::one();
    // objective: minimize t, expressed in terms of the non-basic columns
    let mut obj: Vec<BigRational> = conv.iter().map(|x| -x).collect();
    obj[art] = BigRational::zero();
    rows.push(conv);
    let mut basis: Vec<usize> = (r..r + n).collect();
    basis.push(art);

    let mut tab = Tableau { rows, obj, basis, rhs };
    tab.optimize();

    let residual = tab
        .basis
        .iter()
        .zip(&tab.rows)
        .find(|(&b, _)| b == art)
        .map(|(_, row)| row[rhs].clone())
        .unwrap_or_else(BigRational::zero);
    if !residual.is_zero() {
        // Duals: y_j = -d(s_j) for coordinate rows, y_conv = 1 - d(t). The
        // cut is (-y)·x ≥ y_conv, which every point satisfies and `a` does
        // not.
        let mut w: Vec<BigRational> = (0..n).map(|j| tab.obj[r + j].clone()).collect();
        let mut c = BigRational::one() - &tab.obj[art];
        let scale = w.iter().chain(std::iter::once(&c)).fold(BigInt::one(), |acc, q| num::integer::lcm(acc, q.denom().clone()));
        let scale = BigRational::from_integer(scale);
        for x in w.iter_mut() {
            *x = &*x * &scale;
        }
        c *= &scale;
        let cut = Cut { weights: w.into_iter().map(|x| x.to_integer()).collect(), bound: c.to_integer() };
        debug_assert!(cut.is_violated_by(a));
        debug_assert!(points.iter().all(|p| !cut.is_violated_by(p)));
        return Ok(Membership::Outside(cut));
    }
    let mut lambda = vec![BigRational::zero(); r];
    for (&b, row) in tab.basis.iter().zip(&tab.rows) {
        if b < r {
            lambda[b] = row[rhs].clone();
        }
    }
    Ok(Membership::Inside(RationalVector(lambda)))
}
