//! Query access to the hidden similarity.
//!
//! Every query is counted, including repeats of a pair already asked.
//! [`MemoOracle`] is the opt-in alternative that charges each pair once.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::instance::{Label, LabeledInstance};

/// Anything the clustering algorithms can ask for pair labels.
pub trait SimilarityOracle {
    /// Number of nodes.
    fn n(&self) -> usize;

    /// `σ(u, v)`. Fails on `u == v`, out-of-range ids or an exhausted budget.
    fn query(&mut self, u: usize, v: usize) -> Result<Label>;

    /// Queries charged so far.
    fn queries_issued(&self) -> u64;
}

/// `(queries issued, remaining budget)`; remaining is `None` when unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Snapshot {
    pub issued: u64,
    pub remaining: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct QueryOracle<'a> {
    instance: &'a LabeledInstance,
    issued: u64,
    budget: Option<u64>,
}

impl<'a> QueryOracle<'a> {
    pub fn new(instance: &'a LabeledInstance) -> Self {
        QueryOracle {
            instance,
            issued: 0,
            budget: None,
        }
    }

    pub fn with_budget(instance: &'a LabeledInstance, budget: u64) -> Self {
        QueryOracle {
            instance,
            issued: 0,
            budget: Some(budget),
        }
    }

    pub fn instance(&self) -> &'a LabeledInstance {
        self.instance
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            issued: self.issued,
            remaining: self.budget.map(|b| b - self.issued),
        }
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u == v || u >= n || v >= n {
        return Err(Error::InvalidQuery { u, v, n });
    }
    Ok(())
}

impl SimilarityOracle for QueryOracle<'_> {
    fn n(&self) -> usize {
        self.instance.n()
    }

    fn query(&mut self, u: usize, v: usize) -> Result<Label> {
        check_pair(self.instance.n(), u, v)?;
        if let Some(budget) = self.budget {
            if self.issued >= budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        self.issued += 1;
        Ok(self.instance.label(u, v))
    }

    fn queries_issued(&self) -> u64 {
        self.issued
    }
}

/// Caches answers so that a repeated pair is not charged again.
#[derive(Debug)]
pub struct MemoOracle<O> {
    inner: O,
    cache: HashMap<(usize, usize), Label>,
}

impl<O: SimilarityOracle> MemoOracle<O> {
    pub fn new(inner: O) -> Self {
        MemoOracle {
            inner,
            cache: HashMap::new(),
        }
    }

    pub fn into_inner(self) -> O {
        self.inner
    }

    pub fn distinct_pairs(&self) -> usize {
        self.cache.len()
    }
}

impl<O: SimilarityOracle> SimilarityOracle for MemoOracle<O> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn query(&mut self, u: usize, v: usize) -> Result<Label> {
        check_pair(self.inner.n(), u, v)?;
        let key = (u.min(v), u.max(v));
        if let Some(&label) = self.cache.get(&key) {
            return Ok(label);
        }
        let label = self.inner.query(u, v)?;
        self.cache.insert(key, label);
        Ok(label)
    }

    fn queries_issued(&self) -> u64 {
        self.inner.queries_issued()
    }
}

impl<T: SimilarityOracle + ?Sized> SimilarityOracle for &mut T {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn query(&mut self, u: usize, v: usize) -> Result<Label> {
        (**self).query(u, v)
    }

    fn queries_issued(&self) -> u64 {
        (**self).queries_issued()
    }
}
