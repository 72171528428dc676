//! The Casimir generating series `F(u)`, the universal odd-Casimir relation
//! and the Perelomov–Popov form for so, sp and osp.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::engine::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::poly::{InversePowerSeries, Poly, Var};
use crate::scalar::Scalar;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 10;

fn half<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    p.scale(&S::from_frac(1, 2))
}

/// `(1 − αt)/(1 − βt)` with `α = (C_0 − 1)/2`, `β = (C_0 − 2)/2`, `t = u^{-1}`.
fn prefactor<S: Scalar>(order: usize, c0: &Poly<S>) -> InversePowerSeries<S> {
    let alpha = half(&(c0 - &Poly::one()));
    let beta = half(&(c0 - &Poly::from_int(2)));
    let num = InversePowerSeries::from_coeffs(order, [Poly::one(), -alpha]);
    let den = InversePowerSeries::from_coeffs(order, [Poly::one(), -beta]);
    num.div(&den).expect("unit denominator")
}

/// `F(u) = 1 − (u − (C_0−1)/2)/(u − (C_0−2)/2) · Σ_m C_m u^{-m-1}` truncated at
/// `order`. `casimirs` overrides the symbolic `C_m`; `C_0` in the prefactor
/// follows the override for `m = 0`.
pub fn build_f<S: Scalar>(order: usize, casimirs: &BTreeMap<usize, Poly<S>>) -> InversePowerSeries<S> {
    let c = |m: usize| casimirs.get(&m).cloned().unwrap_or_else(|| Poly::c(m));
    let sum = InversePowerSeries::from_coeffs(
        order,
        std::iter::once(Poly::zero()).chain((0..order).map(c)),
    );
    let prod = prefactor(order, &c(0)).mul(&sum).expect("same order");
    InversePowerSeries::one(order).sub(&prod).expect("same order")
}

/// Inverse of [`build_f`]: the `C_m` with `m < order` encoded by a series `F`.
pub fn extract_casimirs<S: Scalar>(f: &InversePowerSeries<S>, c0: &Poly<S>) -> Vec<Poly<S>> {
    let order = f.order();
    let one_minus = InversePowerSeries::one(order).sub(f).expect("same order");
    let sum = one_minus
        .div(&prefactor(order, c0))
        .expect("unit prefactor");
    (1..=order).map(|k| sum.coeff(k).clone()).collect()
}

/// Solves `F(u)·F(C_0 − 1 − u) = 1` for the odd `C_m`, `m ≤ max_m`, as
/// polynomials in the even ones.
pub fn solve_odd_casimirs<S: Scalar>(max_m: usize) -> Result<BTreeMap<usize, Poly<S>>> {
    if max_m % 2 == 0 {
        return Err(Error::NotOdd(max_m));
    }
    let order = max_m + 1;
    let f = build_f::<S>(order, &BTreeMap::new());
    let g = f.mul(&f.reflect(&(Poly::c(0) - Poly::one())))?;
    let mut solved: BTreeMap<usize, Poly<S>> = BTreeMap::new();
    let mut assignment: HashMap<Var, Poly<S>> = HashMap::new();
    for k in 1..=order {
        let e = g.coeff(k).substitute(&assignment);
        if k % 2 == 1 {
            if !e.is_zero() {
                return Err(Error::InconsistentSeries(k));
            }
            continue;
        }
        let m = k - 1;
        let v = Var::c(m);
        let a = e.coefficient_of(v, 1).as_constant();
        let a = match a {
            Some(a) if e.degree_in(v) == 1 && !a.is_zero() => a,
            _ => return Err(Error::NonLinearEquation { order: k, target: m }),
        };
        let rest = e.coefficient_of(v, 0);
        let value = rest.scale(&(-S::one() / a));
        debug_assert!(value.has_only_even_casimirs());
        assignment.insert(v, value.clone());
        solved.insert(m, value);
    }
    Ok(solved)
}

/// Data of the Perelomov–Popov product for a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPData {
    pub spec: FamilySpec,
    /// `σ_i` for each formal variable `x_i`, `i = 1, 2, …`.
    pub sigma: Vec<i8>,
    /// Whether `P` carries the extra factor `u` (odd `N`).
    pub odd_factor: bool,
}

impl PPData {
    /// For osp the `M` odd variables come first, then the `[N/2]` even ones.
    pub fn new(spec: FamilySpec) -> Self {
        let (odd, even) = match spec.family {
            Family::So => (0, spec.n / 2),
            Family::Sp => (spec.m, 0),
            Family::Osp => (spec.m, spec.n / 2),
        };
        let mut sigma = vec![-1; odd];
        sigma.extend(std::iter::repeat(1).take(even));
        PPData {
            spec,
            sigma,
            odd_factor: spec.n % 2 == 1,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.sigma.len()
    }

    /// The shifts `r_i` relating `x_i` to the diagonal generators.
    pub fn shifts<S: Scalar>(&self) -> Vec<S> {
        let d = S::from_frac(self.spec.c0(), 2);
        let mut partial = 0i64;
        self.sigma
            .iter()
            .map(|&s| {
                let s = s as i64;
                let r = S::int(s) * (d.clone() - S::int(partial)) - S::from_frac(s + 1, 2);
                partial += s;
                r
            })
            .collect()
    }
}

/// `P(u − C_0/2)/P(u − (C_0−2)/2)` in powers of `u^{-1}` with `C_0` set to the
/// family value and the `x_i` formal.
pub fn pp_f<S: Scalar>(pp: &PPData, order: usize) -> InversePowerSeries<S> {
    let c0 = S::int(pp.spec.c0());
    let a = c0.clone() / S::int(2);
    let b = (c0 - S::int(2)) / S::int(2);
    // (u − s)^2 − x^2 = u^2 (1 − 2s t + (s^2 − x^2) t^2)
    let quad = |s: &S, i: usize| {
        let x2 = Poly::x(i + 1).pow(2);
        InversePowerSeries::from_coeffs(
            order,
            [
                Poly::one(),
                Poly::constant(S::int(-2) * s.clone()),
                &Poly::constant(s.clone() * s.clone()) - &x2,
            ],
        )
    };
    let mut num = InversePowerSeries::one(order);
    let mut den = InversePowerSeries::one(order);
    if pp.odd_factor {
        num = InversePowerSeries::from_coeffs(order, [Poly::one(), Poly::constant(-a.clone())]);
        den = InversePowerSeries::from_coeffs(order, [Poly::one(), Poly::constant(-b.clone())]);
    }
    for (i, &s) in pp.sigma.iter().enumerate() {
        let (qa, qb) = (quad(&a, i), quad(&b, i));
        let (qn, qd) = if s > 0 { (qa, qb) } else { (qb, qa) };
        num = num.mul(&qn).expect("same order");
        den = den.mul(&qd).expect("same order");
    }
    num.div(&den).expect("unit denominator")
}

/// Outcome of [`verify_pp`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PPReport {
    pub family: Family,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub order: usize,
    pub c0_ok: bool,
    pub odd_casimirs_ok: bool,
    pub reflection_ok: bool,
    pub first_failure: Option<String>,
}

impl PPReport {
    pub fn passed(&self) -> bool {
        self.c0_ok && self.odd_casimirs_ok && self.reflection_ok
    }
}

/// Checks the Perelomov–Popov series of a family against the universal
/// relations: the value of `C_0`, the solved odd Casimirs, and
/// `F(u)·F(C_0 − 1 − u) = 1`.
pub fn verify_pp<S: Scalar>(pp: &PPData, order: usize) -> Result<PPReport> {
    let c0 = Poly::from_int(pp.spec.c0());
    let f = pp_f::<S>(pp, order);
    let cs = extract_casimirs(&f, &c0);
    let mut failures = Vec::new();

    let c0_ok = cs[0] == c0;
    if !c0_ok {
        failures.push("C0".to_string());
    }

    let max_odd = if order % 2 == 0 { order - 1 } else { order - 2 };
    let mut odd_ok = true;
    if max_odd >= 1 {
        let solved = solve_odd_casimirs::<S>(max_odd)?;
        let mut assignment: HashMap<Var, Poly<S>> = HashMap::new();
        assignment.insert(Var::c(0), c0.clone());
        for (k, v) in cs.iter().enumerate().skip(2).step_by(2) {
            assignment.insert(Var::c(k), v.clone());
        }
        for (&m, expr) in &solved {
            if expr.substitute(&assignment) != cs[m] {
                odd_ok = false;
                failures.push(format!("C{m}"));
                break;
            }
        }
    }

    let g = f.mul(&f.reflect(&(&c0 - &Poly::one())))?;
    let reflection_ok = g == InversePowerSeries::one(order);
    if let Some(k) = g.first_difference(&InversePowerSeries::one(order)) {
        failures.push(format!("reflection at u^-{k}"));
    }

    Ok(PPReport {
        family: pp.spec.family,
        n: pp.spec.n,
        m: pp.spec.m,
        order,
        c0_ok,
        odd_casimirs_ok: odd_ok,
        reflection_ok,
        first_failure: failures.into_iter().next(),
    })
}
