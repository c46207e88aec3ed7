//! Truncated formal power series over the rationals, and the Riordan-array
//! generating functions of `R(p, q; s, t)`.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `x^0..=x^N`;
//! everything above is unknown, so binary operations truncate to the
//! smaller order.
//!
//! `R(p, q; s, t)` has A-sequence `A(x) = 1 + sx + tx²` and Z-sequence
//! `Z(x) = p + qx`. Its column `k` is generated by `x^k h(x)^k d(x)` where
//! `h = A(x h)` and `d = 1 / (1 - x Z(x h))`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, serde_rational, serde_rational_vec, Rational};
use crate::jacobi::JacobiParams;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// `coeffs.len() - 1` becomes the truncation order.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a power series needs at least a constant term".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// A polynomial, zero-padded or truncated to `order`.
    pub fn from_poly(poly: &[Rational], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| poly.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Self { coeffs }
    }

    pub fn from_ints(poly: &[i64], order: usize) -> Self {
        Self::from_poly(&poly.iter().map(|&c| int(c)).collect::<Vec<_>>(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_poly(&[c], order)
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Rational::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_poly(&self.coeffs, order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = Rational::zero();
                for i in 0..=k {
                    let a = &self.coeffs[i];
                    if !a.is_zero() {
                        acc += a * &other.coeffs[k - i];
                    }
                }
                acc
            })
            .collect();
        Self { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `x · f`, keeping the order (the top coefficient falls off).
    pub fn mul_x(&self) -> Self {
        self.mul_x_pow(1)
    }

    pub fn mul_x_pow(&self, k: usize) -> Self {
        let n = self.order();
        Self {
            coeffs: (0..=n)
                .map(|i| {
                    if i < k {
                        Rational::zero()
                    } else {
                        self.coeffs[i - k].clone()
                    }
                })
                .collect(),
        }
    }

    /// `f / x^k`; the low coefficients must vanish and the order drops by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Domain(format!(
                "cannot divide an order-{} series by x^{k}",
                self.order()
            )));
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::Domain(format!(
                "coefficient of x^{i} is nonzero; not divisible by x^{k}"
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `self / other` by long division; needs `other(0) ≠ 0`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let g0 = &other.coeffs[0];
        if g0.is_zero() {
            return Err(Error::ConstantTerm(
                "division by a series with zero constant term".into(),
            ));
        }
        let n = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc -= &other.coeffs[i] * &q[k - i];
            }
            q.push(acc / g0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// The square root with constant term 1; needs `f(0) = 1`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm(format!(
                "square root needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let n = self.order();
        let two = int(2);
        let mut g: Vec<Rational> = Vec::with_capacity(n + 1);
        g.push(Rational::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &g[i] * &g[k - i];
            }
            g.push(acc / &two);
        }
        Ok(Self { coeffs: g })
    }

    /// `P(f)` for a polynomial `P` given by its coefficients.
    pub fn compose_poly(poly: &[Rational], f: &Self) -> Self {
        let n = f.order();
        poly.iter().rev().fold(Self::zero(n), |acc, c| {
            acc.mul(f).add(&Self::constant(c.clone(), n))
        })
    }
}

/// The unique `h` with `h = A(x h)`, to order `N`.
///
/// Each pass of the fixed-point map pins one more coefficient, because the
/// coefficient of `x^n` in `A(x h)` only sees `h_0..h_{n-1}`.
pub fn solve_h(a: &[Rational], order: usize) -> Result<PowerSeries> {
    match a.first() {
        Some(a0) if !a0.is_zero() => {}
        _ => return Err(Error::ConstantTerm("A(0) must be nonzero".into())),
    }
    let mut h = PowerSeries::zero(order);
    for _ in 0..=order {
        h = PowerSeries::compose_poly(a, &h.mul_x());
    }
    Ok(h)
}

/// `d = 1 / (1 - x Z(x h))`, to order `N`.
pub fn solve_d(z: &[Rational], h: &PowerSeries, order: usize) -> Result<PowerSeries> {
    let h = h.truncate(order);
    if h.order() < order {
        return Err(Error::Domain(format!(
            "h has order {}, need {order}",
            h.order()
        )));
    }
    let inner = PowerSeries::compose_poly(z, &h.mul_x()).mul_x();
    PowerSeries::one(order).sub(&inner).recip()
}

fn require_nonnegative(params: &[(&str, &Rational)]) -> Result<()> {
    for (name, v) in params {
        if v.is_negative() {
            return Err(Error::Domain(format!("parameter {name} = {v} is negative")));
        }
    }
    Ok(())
}

/// `1 - 2sx + (s² - 4t)x²` to the given order.
fn radicand(s: &Rational, t: &Rational, order: usize) -> PowerSeries {
    PowerSeries::from_poly(&[Rational::one(), -(int(2) * s), s * s - int(4) * t], order)
}

fn radical(s: &Rational, t: &Rational, order: usize) -> PowerSeries {
    radicand(s, t, order)
        .sqrt()
        .expect("radicand has constant term 1")
}

/// `h(x) = (1 - sx - √(1 - 2sx + (s²-4t)x²)) / (2t x²)`; refuses `t = 0`.
pub fn closed_form_h(s: &Rational, t: &Rational, order: usize) -> Result<PowerSeries> {
    require_nonnegative(&[("s", s), ("t", t)])?;
    if t.is_zero() {
        return Err(Error::ZeroT);
    }
    let numer = PowerSeries::from_poly(&[Rational::one(), -s.clone()], order + 2).sub(&radical(
        s,
        t,
        order + 2,
    ));
    Ok(numer.div_x_pow(2)?.scale(&(Rational::one() / (int(2) * t))))
}

/// `d(x) = 2t / (2t - q + (qs - 2pt)x + q√(1 - 2sx + (s²-4t)x²))`; refuses `t = 0`.
pub fn closed_form_d(
    p: &Rational,
    q: &Rational,
    s: &Rational,
    t: &Rational,
    order: usize,
) -> Result<PowerSeries> {
    require_nonnegative(&[("p", p), ("q", q), ("s", s), ("t", t)])?;
    if t.is_zero() {
        return Err(Error::ZeroT);
    }
    let two_t = int(2) * t;
    let linear = PowerSeries::from_poly(&[&two_t - q, q * s - int(2) * p * t], order);
    let denom = linear.add(&radical(s, t, order).scale(q));
    PowerSeries::constant(two_t, order).div(&denom)
}

/// A generating function in one of the closed-form families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GfSpec {
    /// `2t / (2t - q + (qs - 2pt)x + q√R)`.
    ClosedFormD {
        #[serde(with = "serde_rational")]
        p: Rational,
        #[serde(with = "serde_rational")]
        q: Rational,
        #[serde(with = "serde_rational")]
        s: Rational,
        #[serde(with = "serde_rational")]
        t: Rational,
    },
    /// The `q = t` family: `2 / (1 + (s - 2p)x + √R)`.
    CorollaryTq {
        #[serde(with = "serde_rational")]
        p: Rational,
        #[serde(with = "serde_rational")]
        s: Rational,
        #[serde(with = "serde_rational")]
        t: Rational,
    },
    /// The `q = t, p = s` family: `2 / (1 - sx + √R)`.
    CorollaryTqsp {
        #[serde(with = "serde_rational")]
        s: Rational,
        #[serde(with = "serde_rational")]
        t: Rational,
    },
    /// The `q = 2t, p = s` family: `1 / √R`.
    Corollary2tqsp {
        #[serde(with = "serde_rational")]
        s: Rational,
        #[serde(with = "serde_rational")]
        t: Rational,
    },
    /// One of the five listed closed forms, by catalog name.
    Named { name: String },
}

impl GfSpec {
    pub fn named(name: &str) -> Self {
        GfSpec::Named {
            name: name.to_string(),
        }
    }

    pub fn from_params(params: &JacobiParams) -> Self {
        let JacobiParams { p, q, s, t } = params.clone();
        GfSpec::ClosedFormD { p, q, s, t }
    }
}

pub const NAMED_GFS: [&str; 5] = [
    "catalan",
    "central_binomial",
    "delannoy",
    "schroder_large",
    "schroder_little",
];

fn two_over(denom: &PowerSeries) -> Result<PowerSeries> {
    PowerSeries::constant(int(2), denom.order()).div(denom)
}

fn named_gf(name: &str, order: usize) -> Result<PowerSeries> {
    let sqrt_1_4x = || PowerSeries::from_ints(&[1, -4], order).sqrt();
    let sqrt_1_6x_x2 = || PowerSeries::from_ints(&[1, -6, 1], order).sqrt();
    match name {
        // 2 / (1 + √(1-4x))
        "catalan" => two_over(&PowerSeries::one(order).add(&sqrt_1_4x()?)),
        // 1 / √(1-4x)
        "central_binomial" => sqrt_1_4x()?.recip(),
        // 1 / √(1-6x+x²)
        "delannoy" => sqrt_1_6x_x2()?.recip(),
        // 2 / (1 - x + √(1-6x+x²))
        "schroder_large" => {
            two_over(&PowerSeries::from_ints(&[1, -1], order).add(&sqrt_1_6x_x2()?))
        }
        // 2 / (1 + x + √(1-6x+x²))
        "schroder_little" => {
            two_over(&PowerSeries::from_ints(&[1, 1], order).add(&sqrt_1_6x_x2()?))
        }
        other => Err(Error::UnknownName(format!(
            "{other} (no closed-form generating function)"
        ))),
    }
}

pub fn gf_expand(spec: &GfSpec, order: usize) -> Result<PowerSeries> {
    match spec {
        GfSpec::ClosedFormD { p, q, s, t } => closed_form_d(p, q, s, t, order),
        GfSpec::CorollaryTq { p, s, t } => {
            require_nonnegative(&[("p", p), ("s", s), ("t", t)])?;
            let linear = PowerSeries::from_poly(&[Rational::one(), s - int(2) * p], order);
            two_over(&linear.add(&radical(s, t, order)))
        }
        GfSpec::CorollaryTqsp { s, t } => {
            require_nonnegative(&[("s", s), ("t", t)])?;
            let linear = PowerSeries::from_poly(&[Rational::one(), -s.clone()], order);
            two_over(&linear.add(&radical(s, t, order)))
        }
        GfSpec::Corollary2tqsp { s, t } => {
            require_nonnegative(&[("s", s), ("t", t)])?;
            radical(s, t, order).recip()
        }
        GfSpec::Named { name } => {
            let key = name.trim().to_ascii_lowercase().replace('-', "_");
            named_gf(&key, order)
        }
    }
}

/// CLI-facing expansion record: `{"spec": …, "order": N, "coeffs": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub spec: GfSpec,
    pub order: usize,
    #[serde(with = "serde_rational_vec")]
    pub coeffs: Vec<Rational>,
}

pub fn series_report(spec: &GfSpec, order: usize) -> Result<SeriesReport> {
    let f = gf_expand(spec, order)?;
    Ok(SeriesReport {
        spec: spec.clone(),
        order,
        coeffs: f.coeffs,
    })
}

/// Rows `0..=depth` of `R(p, q; s, t)` straight from its defining recurrence:
/// `r_{n+1,0} = p r_{n,0} + q r_{n,1}`, `r_{n+1,k+1} = r_{n,k} + s r_{n,k+1} + t r_{n,k+2}`.
pub fn pqst_triangle(params: &JacobiParams, depth: usize) -> Vec<Vec<Rational>> {
    let JacobiParams { p, q, s, t } = params;
    let mut rows = vec![vec![Rational::one()]];
    for n in 0..depth {
        let prev = &rows[n];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
        let mut next = Vec::with_capacity(n + 2);
        next.push(p * at(0) + q * at(1));
        for k in 0..=n {
            next.push(at(k) + s * at(k + 1) + t * at(k + 2));
        }
        rows.push(next);
    }
    rows
}

/// Compares columns `0..=max_col` of a triangle with `x^k h^k d`, to `order`.
pub fn riordan_columns_match(
    rows: &[Vec<Rational>],
    d: &PowerSeries,
    h: &PowerSeries,
    max_col: usize,
    order: usize,
) -> bool {
    if rows.len() <= order || d.order() < order || h.order() < order {
        return false;
    }
    let (d, h) = (d.truncate(order), h.truncate(order));
    (0..=max_col).all(|k| {
        let col = h.pow(k).mul(&d).mul_x_pow(k);
        (0..=order).all(|n| {
            let r = rows[n].get(k).cloned().unwrap_or_else(Rational::zero);
            r == col.coeff(n)
        })
    })
}

/// Columns `0..=max_col` of `R(p, q; s, t)` against the fixed-point `(d, h)`.
pub fn riordan_column_check(params: &JacobiParams, order: usize, max_col: usize) -> Result<bool> {
    let JacobiParams { p, q, s, t } = params;
    let h = solve_h(&[Rational::one(), s.clone(), t.clone()], order)?;
    let d = solve_d(&[p.clone(), q.clone()], &h, order)?;
    Ok(riordan_columns_match(
        &pqst_triangle(params, order),
        &d,
        &h,
        max_col,
        order,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn basic_arithmetic() {
        let a = PowerSeries::from_ints(&[1, 1], 4);
        let b = PowerSeries::from_ints(&[1, -1], 4);
        assert_eq!(a.mul(&b), PowerSeries::from_ints(&[1, 0, -1], 4));
        assert_eq!(
            PowerSeries::one(6).div(&b).unwrap().coeffs(),
            ints(&[1; 5]).as_slice()
        );
        assert_eq!(a.add(&b), PowerSeries::from_ints(&[2], 4));
        // mixed orders truncate to the smaller
        assert_eq!(a.mul(&PowerSeries::from_ints(&[1, -1], 2)).order(), 2);
    }

    #[test]
    fn division_needs_unit_constant() {
        let f = PowerSeries::from_ints(&[0, 1], 3);
        assert!(matches!(
            PowerSeries::one(3).div(&f),
            Err(Error::ConstantTerm(_))
        ));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(PowerSeries::one(5).sqrt().unwrap(), PowerSeries::one(5));
        let r = PowerSeries::from_ints(&[1, -4], 5).sqrt().unwrap();
        assert_eq!(r.coeffs(), ints(&[1, -2, -2, -4, -10, -28]).as_slice());
        assert_eq!(r.mul(&r), PowerSeries::from_ints(&[1, -4], 5));
        assert!(matches!(
            PowerSeries::from_ints(&[4, 1], 3).sqrt(),
            Err(Error::ConstantTerm(_))
        ));
    }

    #[test]
    fn solve_h_examples() {
        assert_eq!(solve_h(&ints(&[1]), 5).unwrap(), PowerSeries::one(5));
        let h = solve_h(&ints(&[1, 2, 1]), 4).unwrap();
        assert_eq!(h.coeffs(), ints(&[1, 2, 5, 14, 42]).as_slice());
        // residual h - A(xh) vanishes termwise
        let residual = h.sub(&PowerSeries::compose_poly(&ints(&[1, 2, 1]), &h.mul_x()));
        assert_eq!(residual, PowerSeries::zero(4));
        // t = 0: h = 1/(1 - sx)
        let s = frac(5, 3);
        let h = solve_h(&[int(1), s.clone()], 8).unwrap();
        let geometric = PowerSeries::from_poly(&[int(1), -s], 8).recip().unwrap();
        assert_eq!(h, geometric);
        assert!(solve_h(&ints(&[0, 1]), 3).is_err());
        assert!(solve_h(&[], 3).is_err());
    }

    #[test]
    fn solve_d_examples() {
        let h = solve_h(&ints(&[1, 3, 2]), 6).unwrap();
        assert_eq!(solve_d(&[], &h, 6).unwrap(), PowerSeries::one(6));
        let p = frac(7, 2);
        let d = solve_d(std::slice::from_ref(&p), &h, 6).unwrap();
        assert_eq!(d, PowerSeries::from_poly(&[int(1), -p], 6).recip().unwrap());
        let h = solve_h(&ints(&[1, 3, 2]), 3).unwrap();
        let d = solve_d(&ints(&[3, 4]), &h, 3).unwrap();
        assert_eq!(d.coeffs(), ints(&[1, 3, 13, 63]).as_slice());
    }

    #[test]
    fn closed_form_h_examples() {
        let h = closed_form_h(&int(2), &int(1), 4).unwrap();
        assert_eq!(h.coeffs(), ints(&[1, 2, 5, 14, 42]).as_slice());
        let h = closed_form_h(&int(3), &int(2), 3).unwrap();
        assert_eq!(h.coeffs(), ints(&[1, 3, 11, 45]).as_slice());
        let h = closed_form_h(&int(0), &int(1), 6).unwrap();
        assert_eq!(h.coeffs(), ints(&[1, 0, 1, 0, 2, 0, 5]).as_slice());
        for (s, t) in [(2, 1), (3, 2), (0, 1), (5, 7)] {
            assert_eq!(
                closed_form_h(&int(s), &int(t), 12).unwrap(),
                solve_h(&ints(&[1, s, t]), 12).unwrap()
            );
        }
        assert_eq!(closed_form_h(&int(2), &int(0), 4), Err(Error::ZeroT));
    }

    #[test]
    fn closed_form_d_examples() {
        let d = closed_form_d(&int(1), &int(1), &int(2), &int(1), 3).unwrap();
        assert_eq!(d.coeffs(), ints(&[1, 1, 2, 5]).as_slice());
        let d = closed_form_d(&int(3), &int(4), &int(3), &int(2), 4).unwrap();
        assert_eq!(d.coeffs(), ints(&[1, 3, 13, 63, 321]).as_slice());
        let d = closed_form_d(&int(2), &int(2), &int(3), &int(2), 4).unwrap();
        assert_eq!(d.coeffs(), ints(&[1, 2, 6, 22, 90]).as_slice());
        assert_eq!(
            closed_form_d(&int(1), &int(1), &int(1), &int(0), 4),
            Err(Error::ZeroT)
        );
        assert!(matches!(
            closed_form_d(&int(-1), &int(1), &int(1), &int(1), 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn named_and_corollaries() {
        let c = gf_expand(&GfSpec::named("central_binomial"), 4).unwrap();
        assert_eq!(c.coeffs(), ints(&[1, 2, 6, 20, 70]).as_slice());
        let cor5 = gf_expand(
            &GfSpec::Corollary2tqsp {
                s: int(3),
                t: int(2),
            },
            16,
        )
        .unwrap();
        assert_eq!(
            cor5,
            closed_form_d(&int(3), &int(4), &int(3), &int(2), 16).unwrap()
        );

        // the q = t, p = 1, s = 2 member is Catalan's 2 / (1 + √(1-4x))
        let catalan = gf_expand(&GfSpec::named("catalan"), 16).unwrap();
        let cor3 = gf_expand(
            &GfSpec::CorollaryTq {
                p: int(1),
                s: int(2),
                t: int(1),
            },
            16,
        )
        .unwrap();
        assert_eq!(cor3, catalan);
        // the p = s = 2, q = t = 1 member is Catalan shifted by one
        let cor4 = gf_expand(
            &GfSpec::CorollaryTqsp {
                s: int(2),
                t: int(1),
            },
            15,
        )
        .unwrap();
        assert_eq!(cor4.coeffs(), &catalan.coeffs()[1..]);

        assert!(matches!(
            gf_expand(&GfSpec::named("bell"), 4),
            Err(Error::UnknownName(_))
        ));
        // t = 0 is fine for the corollary families: 1/√((1-sx)²) = 1/(1-sx)
        let cor5 = gf_expand(
            &GfSpec::Corollary2tqsp {
                s: int(2),
                t: int(0),
            },
            6,
        )
        .unwrap();
        assert_eq!(cor5.coeffs(), ints(&[1, 2, 4, 8, 16, 32, 64]).as_slice());
    }

    #[test]
    fn gf_json_shape() {
        let spec: GfSpec = serde_json::from_str(
            r#"{"kind": "closed_form_d", "p": "3", "q": 4, "s": "3", "t": "2"}"#,
        )
        .unwrap();
        let rep = series_report(&spec, 3).unwrap();
        let js = serde_json::to_value(&rep).unwrap();
        assert_eq!(js["order"], 3);
        assert_eq!(js["coeffs"], serde_json::json!(["1", "3", "13", "63"]));
        assert_eq!(js["spec"]["kind"], "closed_form_d");
        let named: GfSpec =
            serde_json::from_str(r#"{"kind": "named", "name": "delannoy"}"#).unwrap();
        assert_eq!(named, GfSpec::named("delannoy"));
    }

    #[test]
    fn riordan_columns() {
        for params in [(1, 1, 2, 1), (3, 4, 3, 2)] {
            let params = JacobiParams::from_ints(params.0, params.1, params.2, params.3).unwrap();
            assert!(riordan_column_check(&params, 10, 5).unwrap());
        }
        let params = JacobiParams::from_ints(1, 1, 2, 1).unwrap();
        let h = solve_h(&ints(&[1, 2, 1]), 10).unwrap();
        let d = solve_d(&ints(&[1, 1]), &h, 10).unwrap();
        let rows = pqst_triangle(&params, 10);
        assert!(riordan_columns_match(&rows, &d, &h, 5, 10));
        let mut bad = d.coeffs().to_vec();
        bad[0] = int(2);
        let bad = PowerSeries::new(bad).unwrap();
        assert!(!riordan_columns_match(&rows, &bad, &h, 5, 10));
    }

    #[test]
    fn pqst_triangle_matches_general_recurrence() {
        let params = JacobiParams::from_ints(2, 2, 3, 2).unwrap();
        let r = crate::recursive::build_recursive(&params.sigma(), &params.tau(), 9).unwrap();
        assert_eq!(pqst_triangle(&params, 9), r.rows());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
    }

    fn small_nonneg() -> impl Strategy<Value = Rational> {
        (0i64..=9, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sqrt_squares_back(tail in proptest::collection::vec(small_rational(), 24)) {
            let mut c = vec![int(1)];
            c.extend(tail);
            let f = PowerSeries::new(c).unwrap();
            let g = f.sqrt().unwrap();
            prop_assert_eq!(g.mul(&g), f);
        }

        #[test]
        fn div_round_trips(c0 in small_rational(), tail in proptest::collection::vec(small_rational(), 24),
                           other in proptest::collection::vec(small_rational(), 25)) {
            prop_assume!(!c0.is_zero());
            let mut c = vec![c0];
            c.extend(tail);
            let f = PowerSeries::new(c).unwrap();
            prop_assert_eq!(f.mul(&f.recip().unwrap()), PowerSeries::one(24));
            let g = PowerSeries::new(other).unwrap();
            prop_assert_eq!(g.div(&f).unwrap().mul(&f), g);
        }

        #[test]
        fn closed_form_d_matches_fixed_point(p in small_nonneg(), q in small_nonneg(), s in small_nonneg(), t in small_nonneg()) {
            prop_assume!(!t.is_zero());
            let h = solve_h(&[int(1), s.clone(), t.clone()], 16).unwrap();
            let d = solve_d(&[p.clone(), q.clone()], &h, 16).unwrap();
            prop_assert_eq!(closed_form_d(&p, &q, &s, &t, 16).unwrap(), d);
            prop_assert_eq!(closed_form_h(&s, &t, 16).unwrap(), h);
        }

        #[test]
        fn corollaries_are_substitutions(p in small_nonneg(), s in small_nonneg(), t in small_nonneg()) {
            prop_assume!(!t.is_zero());
            let n = 16;
            prop_assert_eq!(
                gf_expand(&GfSpec::CorollaryTq { p: p.clone(), s: s.clone(), t: t.clone() }, n).unwrap(),
                closed_form_d(&p, &t, &s, &t, n).unwrap()
            );
            prop_assert_eq!(
                gf_expand(&GfSpec::CorollaryTqsp { s: s.clone(), t: t.clone() }, n).unwrap(),
                closed_form_d(&s, &t, &s, &t, n).unwrap()
            );
            prop_assert_eq!(
                gf_expand(&GfSpec::Corollary2tqsp { s: s.clone(), t: t.clone() }, n).unwrap(),
                closed_form_d(&s, &(int(2) * &t), &s, &t, n).unwrap()
            );
        }
    }
}
