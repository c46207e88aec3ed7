//! The recursive matrix `R^{σ,τ}` and its Catalan-like numbers.
//!
//! `r_{0,0} = 1`, `r_{n+1,k} = r_{n,k-1} + s_k r_{n,k} + t_{k+1} r_{n,k+1}`,
//! with `r_{n,k} = 0` unless `n ≥ k ≥ 0`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, serde_rational_vec, DenseMatrix, Rational};
use crate::jacobi::JacobiMatrix;
use crate::seqspec::SequenceSpec;

/// Path enumeration is exponential; this is the largest length accepted.
pub const MOTZKIN_ORACLE_MAX: usize = 14;

/// Rows `0..=depth` of the recursive matrix, stored as a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveMatrix {
    rows: Vec<Vec<Rational>>,
    sigma: SequenceSpec,
    tau: SequenceSpec,
}

impl RecursiveMatrix {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn sigma(&self) -> &SequenceSpec {
        &self.sigma
    }

    pub fn tau(&self) -> &SequenceSpec {
        &self.tau
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `r_{n,k}`; zero outside the stored triangle's nonzero pattern.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        (0..self.rows.len()).map(|n| self.get(n, k)).collect()
    }

    /// The leading `(n+1)`×`(n+1)` section `R_n`.
    pub fn section(&self, n: usize) -> Result<DenseMatrix> {
        if n > self.depth() {
            return Err(Error::Dimension(format!(
                "section {n} requested from a matrix of depth {}",
                self.depth()
            )));
        }
        DenseMatrix::from_fn(n + 1, n + 1, |i, j| self.get(i, j))
    }

    /// One line per row: `n,r_{n,0},…,r_{n,n}`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            out.push_str(&format!("{n},{}\n", cells.join(",")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row<'a>(#[serde(with = "serde_rational_vec")] &'a Vec<Rational>);
        serde_json::json!({
            "sigma": self.sigma,
            "tau": self.tau,
            "depth": self.depth(),
            "rows": self.rows.iter().map(Row).collect::<Vec<_>>(),
        })
    }
}

/// Builds rows `0..=depth` by the three-term recurrence.
pub fn build_recursive(
    sigma: &SequenceSpec,
    tau: &SequenceSpec,
    depth: usize,
) -> Result<RecursiveMatrix> {
    // row m+1 reads s_0..s_m and t_1..t_m, m < depth
    let s: Vec<Rational> = (0..depth).map(|k| sigma.eval(k)).collect::<Result<_>>()?;
    let t: Vec<Rational> = (1..depth).map(|k| tau.eval(k)).collect::<Result<_>>()?;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(depth + 1);
    rows.push(vec![Rational::one()]);
    for m in 0..depth {
        let prev = &rows[m];
        let next: Vec<Rational> = (0..=m + 1)
            .map(|k| {
                let mut v = Rational::zero();
                if k >= 1 {
                    v += &prev[k - 1];
                }
                if k <= m {
                    v += &s[k] * &prev[k];
                }
                if k < m {
                    // t_{k+1} lives at t[k]
                    v += &t[k] * &prev[k + 1];
                }
                v
            })
            .collect();
        rows.push(next);
    }
    Ok(RecursiveMatrix {
        rows,
        sigma: sigma.clone(),
        tau: tau.clone(),
    })
}

/// The Catalan-like numbers `r_{0,0}, …, r_{depth,0}`.
pub fn catalan_like(
    sigma: &SequenceSpec,
    tau: &SequenceSpec,
    depth: usize,
) -> Result<Vec<Rational>> {
    Ok(build_recursive(sigma, tau, depth)?.column(0))
}

/// Total weight of Motzkin paths of length `n`, by explicit enumeration.
///
/// A level step at height `k` weighs `s_k`; a down step from height `k`
/// weighs `t_k`; up steps weigh 1. Shares nothing with the recurrence.
pub fn motzkin_oracle(sigma: &SequenceSpec, tau: &SequenceSpec, n: usize) -> Result<Rational> {
    if n > MOTZKIN_ORACLE_MAX {
        return Err(Error::SizeLimit {
            what: "Motzkin path length",
            got: n,
            limit: MOTZKIN_ORACLE_MAX,
        });
    }
    // the path never climbs above n/2
    let top = n / 2;
    let s: Vec<Rational> = (0..=top).map(|k| sigma.eval(k)).collect::<Result<_>>()?;
    let t: Vec<Rational> = std::iter::once(Ok(Rational::zero()))
        .chain((1..=top).map(|k| tau.eval(k)))
        .collect::<Result<_>>()?;

    fn walk(
        height: usize,
        left: usize,
        weight: Rational,
        s: &[Rational],
        t: &[Rational],
        total: &mut Rational,
    ) {
        if left == 0 {
            if height == 0 {
                *total += weight;
            }
            return;
        }
        if height > left {
            return;
        }
        if height < left - 1 {
            walk(height + 1, left - 1, weight.clone(), s, t, total);
        }
        walk(height, left - 1, &weight * &s[height], s, t, total);
        if height > 0 {
            walk(height - 1, left - 1, &weight * &t[height], s, t, total);
        }
    }

    let mut total = Rational::zero();
    walk(0, n, Rational::one(), &s, &t, &mut total);
    Ok(total)
}

/// Checks `R̄ = R J` on sections: rows `1..=depth` of `R` against
/// rows `0..depth` of `R` times the leading `depth`×`(depth+1)` block of `J`.
pub fn verify_rj_identity(r: &RecursiveMatrix, j: &JacobiMatrix, depth: usize) -> Result<bool> {
    if depth == 0 {
        return Err(Error::Dimension("R = RJ check needs depth >= 1".into()));
    }
    if r.depth() < depth {
        return Err(Error::Dimension(format!(
            "matrix of depth {} cannot be checked at depth {depth}",
            r.depth()
        )));
    }
    let shifted = DenseMatrix::from_fn(depth, depth + 1, |i, k| r.get(i + 1, k))?;
    let head = DenseMatrix::from_fn(depth, depth, |i, k| r.get(i, k))?;
    let jac = j.section(depth, depth + 1)?;
    Ok(head.mul(&jac)? == shifted)
}

/// The `(n+2)`×`(n+2)` factor `L_n`: ones on the diagonal, `s_0..s_n` on the
/// first subdiagonal, `t_1..t_n` on the second.
pub fn ln_factor(sigma: &SequenceSpec, tau: &SequenceSpec, n: usize) -> Result<DenseMatrix> {
    let s: Vec<Rational> = (0..=n).map(|k| sigma.eval(k)).collect::<Result<_>>()?;
    let t: Vec<Rational> = (1..=n).map(|k| tau.eval(k)).collect::<Result<_>>()?;
    DenseMatrix::from_fn(n + 2, n + 2, |i, j| {
        if i == j {
            Rational::one()
        } else if i == j + 1 {
            s[j].clone()
        } else if i == j + 2 {
            t[j].clone()
        } else {
            Rational::zero()
        }
    })
}

/// Checks `R_{n+1} = diag(1, R_n) · L_n`.
pub fn verify_ln_factorization(sigma: &SequenceSpec, tau: &SequenceSpec, n: usize) -> Result<bool> {
    let r = build_recursive(sigma, tau, n + 1)?;
    let lhs = r.section(n + 1)?;
    let rhs = r
        .section(n)?
        .bordered_by_one()
        .mul(&ln_factor(sigma, tau, n)?)?;
    Ok(lhs == rhs)
}
