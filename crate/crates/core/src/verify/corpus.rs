//! Shared instance corpora, built once per run.

use std::sync::OnceLock;

use rayon::prelude::*;

use super::{Outcome, VerifyConfig};
use crate::biact::FiniteBiact;
use crate::enumerate::{
    biacts_up_to, random_biacts, random_transformation_semigroup, semigroups_up_to,
    MAX_EXHAUSTIVE_ORDER,
};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Configuration plus lazily built corpora shared by every claim.
pub struct Context {
    pub config: VerifyConfig,
    biacts: OnceLock<Result<Vec<FiniteBiact>>>,
    semigroups: OnceLock<Result<Vec<FiniteSemigroup>>>,
}

impl Context {
    pub fn new(config: VerifyConfig) -> Self {
        Context {
            config,
            biacts: OnceLock::new(),
            semigroups: OnceLock::new(),
        }
    }

    /// Every biact with `|S|,|T| <= exhaustive_order` and carrier
    /// `<= exhaustive_size`, followed by `random_biacts` seeded ones.
    pub fn biacts(&self) -> Result<&[FiniteBiact]> {
        let c = &self.config;
        self.biacts
            .get_or_init(|| {
                let mut out = biacts_up_to(c.exhaustive_order, c.exhaustive_size)?;
                out.extend(
                    random_biacts(c.seed, c.random_order, c.random_size).take(c.random_biacts),
                );
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Every semigroup of order `<= max_order` (at most the exhaustive
    /// limit) followed by random transformation semigroups of small order.
    pub fn semigroups(&self) -> Result<&[FiniteSemigroup]> {
        let c = &self.config;
        self.semigroups
            .get_or_init(|| {
                let mut out = semigroups_up_to(c.max_order.clamp(1, MAX_EXHAUSTIVE_ORDER))?;
                let mut seed = c.seed;
                let mut added = 0;
                let mut tries = 0;
                while added < c.random_semigroups && tries < 50 * c.random_semigroups.max(1) {
                    tries += 1;
                    seed = seed.wrapping_add(1);
                    match random_transformation_semigroup(3, 2, seed) {
                        Ok(s)
                            if s.order() > MAX_EXHAUSTIVE_ORDER
                                && s.order() <= c.random_semigroup_max_order =>
                        {
                            out.push(s);
                            added += 1;
                        }
                        Ok(_) | Err(Error::CapExceeded(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }
}

/// Runs `f` on every item in parallel and merges the outcomes in item
/// order, so the listed violations do not depend on scheduling.
pub fn over<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Outcome> + Sync) -> Result<Outcome> {
    let parts: Vec<Result<Outcome>> = items.par_iter().map(|x| f(x)).collect();
    let mut out = Outcome::default();
    for p in parts {
        out.merge(p?);
    }
    Ok(out)
}
