//! Verification suites over parameter ranges.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::family::{verify_companion_similarity, verify_structure};
use crate::genfun::verify_genfun;
use crate::report::{CaseRecord, RunReport, Verification};
use crate::spectra::{
    verify_eigenvectors, verify_modular_charpoly, verify_power_identity, verify_printed_w4,
    verify_spectrum, verify_trace,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Structure,
    Spectrum,
    Mod3,
    Mod5,
    Power,
    Genfun,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] =
        [Suite::Structure, Suite::Spectrum, Suite::Mod3, Suite::Mod5, Suite::Power, Suite::Genfun];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Spectrum => "spectrum",
            Suite::Mod3 => "mod3",
            Suite::Mod5 => "mod5",
            Suite::Power => "power",
            Suite::Genfun => "genfun",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

pub const DEFAULT_PRIMES: [u64; 6] = [2, 3, 7, 13, 17, 23];
pub const DEFAULT_E_MAX: u64 = 8;
/// Largest order for which the spectrum suite solves for eigenvectors; the
/// exact kernel computation over Q(phi) grows steeply beyond it.
pub const EIGENVECTOR_N_MAX: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteOptions {
    pub n_max: usize,
    pub e_max: u64,
    pub primes: Vec<u64>,
}

impl SuiteOptions {
    pub fn new(n_max: usize) -> Self {
        SuiteOptions { n_max, e_max: DEFAULT_E_MAX, primes: DEFAULT_PRIMES.to_vec() }
    }

    fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::Domain("n-max must be positive".into()));
        }
        if self.e_max == 0 {
            return Err(Error::Domain("e-max must be positive".into()));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
struct Case {
    suite: Suite,
    n: usize,
    e: Option<u64>,
    p: Option<u64>,
}

impl Case {
    fn run(self) -> Verification {
        let n = self.n;
        match self.suite {
            Suite::Structure => {
                let mut v = verify_structure(n);
                v.merge(verify_companion_similarity(n));
                v.merge(verify_trace(n));
                v
            }
            Suite::Spectrum => {
                let mut v = verify_spectrum(n);
                if n <= EIGENVECTOR_N_MAX {
                    v.merge(verify_eigenvectors(n));
                } else {
                    v.info("eigenvectors", format!("skipped: eigenvector solve limited to n <= {EIGENVECTOR_N_MAX}"));
                }
                if n == 4 {
                    v.merge(verify_printed_w4());
                }
                v
            }
            Suite::Mod3 => verify_modular_charpoly(3, n),
            Suite::Mod5 => verify_modular_charpoly(5, n),
            Suite::Power => verify_power_identity(self.p.expect("power case has p"), n),
            Suite::Genfun => verify_genfun(n, self.e.expect("genfun case has e")),
            Suite::All => unreachable!("expanded before running"),
        }
    }
}

fn cases(suite: Suite, opts: &SuiteOptions) -> Vec<Case> {
    let ns = 1..=opts.n_max;
    let plain = |suite| ns.clone().map(move |n| Case { suite, n, e: None, p: None }).collect::<Vec<_>>();
    match suite {
        Suite::Structure | Suite::Spectrum | Suite::Mod3 | Suite::Mod5 => plain(suite),
        Suite::Power => {
            let mut primes = opts.primes.clone();
            primes.sort_unstable();
            primes.dedup();
            primes
                .into_iter()
                .flat_map(|p| ns.clone().map(move |n| Case { suite, n, e: None, p: Some(p) }))
                .collect()
        }
        Suite::Genfun => ns
            .flat_map(|n| (1..=opts.e_max).map(move |e| Case { suite, n, e: Some(e), p: None }))
            .collect(),
        Suite::All => Suite::INDIVIDUAL.into_iter().flat_map(|s| cases(s, opts)).collect(),
    }
}

/// Runs every case of `suite` in parallel; the case order in the report is
/// the canonical parameter order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<RunReport> {
    opts.validate()?;
    let records: Vec<CaseRecord> = cases(suite, opts)
        .into_par_iter()
        .map(|case| {
            let start = Instant::now();
            let v = case.run();
            let micros = start.elapsed().as_micros() as u64;
            CaseRecord::new(case.suite.name(), case.n as u64, case.e, case.p, v, micros)
        })
        .collect();
    Ok(RunReport::new(suite.name(), records))
}
