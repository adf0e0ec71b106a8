use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const TOL: f64 = 1e-9;

/// `⌈x⌉`, treating values within a relative `1e-9` of an integer as that
/// integer so that e.g. `900^0.5` computed as `30.000000000000004` yields 30.
pub fn ceil_tolerant(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() <= TOL * r.abs().max(1.0) {
        r.max(0.0) as usize
    } else {
        x.ceil().max(0.0) as usize
    }
}

#[derive(Clone)]
enum Kind {
    Power(f64),
    Custom {
        name: String,
        f: Arc<dyn Fn(usize) -> f64 + Send + Sync>,
    },
}

/// A query rate function `f`: `f(1) = 1` and
/// `f(m) <= f(m+1) <= (1 + 1/m) f(m)`. It fixes how many probes a pivot
/// spends before committing to a full scan.
#[derive(Clone)]
pub struct QueryRate {
    kind: Kind,
}

impl QueryRate {
    /// `f(x) = x^alpha` for `alpha` in `[0, 1]`.
    pub fn power(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::param(format!(
                "power-law exponent must lie in [0, 1], got {alpha}"
            )));
        }
        Ok(QueryRate {
            kind: Kind::Power(alpha),
        })
    }

    /// `f(x) = x`: every pivot scans its whole residual (KwikCluster).
    pub fn identity() -> Self {
        QueryRate { kind: Kind::Power(1.0) }
    }

    /// An arbitrary rate; checked by [`QueryRate::validate`] before use.
    pub fn custom(name: impl Into<String>, f: impl Fn(usize) -> f64 + Send + Sync + 'static) -> Self {
        QueryRate {
            kind: Kind::Custom {
                name: name.into(),
                f: Arc::new(f),
            },
        }
    }

    pub fn exponent(&self) -> Option<f64> {
        match self.kind {
            Kind::Power(a) => Some(a),
            Kind::Custom { .. } => None,
        }
    }

    pub fn eval(&self, m: usize) -> f64 {
        match &self.kind {
            Kind::Power(a) if *a == 1.0 => m as f64,
            Kind::Power(a) if *a == 0.0 => 1.0,
            Kind::Power(a) => (m as f64).powf(*a),
            Kind::Custom { f, .. } => f(m),
        }
    }

    /// `⌈f(m)⌉`, never more than `m`.
    pub fn ceil_at(&self, m: usize) -> usize {
        if m == 0 {
            return 0;
        }
        ceil_tolerant(self.eval(m)).clamp(1, m)
    }

    /// Checks the defining conditions on `1..=n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let f1 = self.eval(1);
        if (f1 - 1.0).abs() > TOL {
            return Err(Error::param(format!("{self}: f(1) = {f1}, expected 1")));
        }
        let mut prev = f1;
        for m in 1..n.max(1) {
            let next = self.eval(m + 1);
            if !next.is_finite() || next < prev * (1.0 - TOL) {
                return Err(Error::param(format!("{self}: decreasing at m = {m}")));
            }
            if next > (1.0 + 1.0 / m as f64) * prev * (1.0 + TOL) {
                return Err(Error::param(format!("{self}: grows faster than (1 + 1/m) at m = {m}")));
            }
            prev = next;
        }
        Ok(())
    }
}

impl fmt::Display for QueryRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Power(a) => write!(f, "x^{a}"),
            Kind::Custom { name, .. } => f.write_str(name),
        }
    }
}

impl fmt::Debug for QueryRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QueryRate({self})")
    }
}
