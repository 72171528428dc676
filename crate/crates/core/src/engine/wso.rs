use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Engine;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `w_so(s)` with a fresh engine.
pub fn eval_wso<S: Scalar>(s: &Permutation) -> Poly<S> {
    Engine::so().eval(s)
}

/// `w_so` of the standard `m`-cycle for odd `m`.
pub fn odd_cycle_value<S: Scalar>(m: usize) -> Result<Poly<S>> {
    Engine::so().odd_cycle_value(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    So,
    Sp,
    Osp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::So => "so",
            Family::Sp => "sp",
            Family::Osp => "osp",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "so" => Ok(Family::So),
            "sp" => Ok(Family::Sp),
            "osp" => Ok(Family::Osp),
            _ => Err(Error::InvalidFamily(format!("unknown family `{s}`"))),
        }
    }
}

/// so(N), sp(2M) or osp(N|2M).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, m: usize) -> Result<Self> {
        match family {
            Family::So if m != 0 => Err(Error::InvalidFamily("so requires M = 0".into())),
            Family::Sp if n != 0 => Err(Error::InvalidFamily("sp requires N = 0".into())),
            _ => Ok(FamilySpec { family, n, m }),
        }
    }

    pub fn so(n: usize) -> Self {
        FamilySpec {
            family: Family::So,
            n,
            m: 0,
        }
    }

    pub fn sp(m: usize) -> Self {
        FamilySpec {
            family: Family::Sp,
            n: 0,
            m,
        }
    }

    pub fn osp(n: usize, m: usize) -> Self {
        FamilySpec {
            family: Family::Osp,
            n,
            m,
        }
    }

    /// The value of `C_0`: `N − 2M` in every case.
    pub fn c0(&self) -> i64 {
        self.n as i64 - 2 * self.m as i64
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::So => write!(f, "so({})", self.n),
            Family::Sp => write!(f, "sp({})", 2 * self.m),
            Family::Osp => write!(f, "osp({}|{})", self.n, 2 * self.m),
        }
    }
}

/// Substitutes `C_0` by the family value; other variables stay symbolic.
pub fn specialize_family<S: Scalar>(p: &Poly<S>, f: &FamilySpec) -> Result<Poly<S>> {
    if let Some(k) = p.first_odd_casimir() {
        return Err(Error::OddVariable(k));
    }
    Ok(p.specialize_c0(&S::int(f.c0())))
}
