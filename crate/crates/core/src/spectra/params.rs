use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::Generator;

/// Weights `(t, u, v, w)` of the generators `a, b, c, d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub t: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

impl Params {
    pub const fn new(t: f64, u: f64, v: f64, w: f64) -> Self {
        Params { t, u, v, w }
    }

    /// `D = u + v + w`.
    pub fn d(&self) -> f64 {
        self.u + self.v + self.w
    }

    /// `t ≠ 0`, `u + v ≠ 0`, `u + w ≠ 0`, `v + w ≠ 0`: every coupling of the
    /// operator is nonzero.
    pub fn is_admissible(&self) -> bool {
        self.t != 0.0 && self.u + self.v != 0.0 && self.u + self.w != 0.0 && self.v + self.w != 0.0
    }

    /// `u = v = w`.
    pub fn is_isotropic(&self) -> bool {
        self.u == self.v && self.v == self.w
    }

    pub fn weight(&self, g: Generator) -> f64 {
        match g {
            Generator::A => self.t,
            Generator::B => self.u,
            Generator::C => self.v,
            Generator::D => self.w,
        }
    }

    pub fn scaled(&self, c: f64) -> Params {
        Params::new(c * self.t, c * self.u, c * self.v, c * self.w)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.t, self.u, self.v, self.w)
    }
}
