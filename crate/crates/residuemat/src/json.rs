//! JSON shapes for classifications and realizations.
//!
//! Indices (sigma, witness pairs, transcript positions) are 1-based.

use residuemat_core::matrix::{Classification, Verdict, Witness};
use residuemat_core::realize::{Realization, RealizeOptions, Step};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub verdict: String,
    pub branch: String,
    pub s: Option<usize>,
    pub sigma: Option<Vec<usize>>,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum WitnessJson {
    AsymmetricPair { pair: [usize; 2] },
    IncompatiblePair { pair: [usize; 2] },
    Diagonal { diagonal: Vec<i64> },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::AsymmetricPair(i, j) => WitnessJson::AsymmetricPair {
                pair: [i + 1, j + 1],
            },
            Witness::IncompatiblePair(i, j) => WitnessJson::IncompatiblePair {
                pair: [i + 1, j + 1],
            },
            Witness::Diagonal(diag) => WitnessJson::Diagonal {
                diagonal: diag.clone(),
            },
        }
    }
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        let branch = c.law.name().to_string();
        match &c.verdict {
            Verdict::Realizable { block } => ClassificationJson {
                verdict: "Realizable".into(),
                branch,
                s: block.as_ref().map(|b| b.s),
                sigma: block.as_ref().map(|b| b.sigma.to_one_based()),
                witness: None,
            },
            Verdict::NotRealizable { witness } => ClassificationJson {
                verdict: "NotRealizable".into(),
                branch,
                s: None,
                sigma: None,
                witness: Some(witness.into()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueJson {
    /// Residue `u_j` modulo the `j`-th polynomial in construction order.
    pub u: String,
    pub target: u32,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub position: usize,
    pub poly: String,
    pub degree: usize,
    pub residues: Vec<ResidueJson>,
    pub crt_residue: String,
    pub crt_modulus: String,
    pub degrees_tried: Vec<usize>,
    pub candidates_tested: usize,
}

impl From<&Step> for StepJson {
    fn from(s: &Step) -> Self {
        StepJson {
            position: s.position + 1,
            poly: s.poly.to_string(),
            degree: s.poly.degree(),
            residues: s
                .residues
                .iter()
                .zip(&s.residue_trials)
                .map(|((u, target), &trials)| ResidueJson {
                    u: u.to_string(),
                    target: *target,
                    trials,
                })
                .collect(),
            crt_residue: s.crt_residue.to_string(),
            crt_modulus: s.crt_modulus.to_string(),
            degrees_tried: s.degrees_tried.clone(),
            candidates_tested: s.candidates_tested,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionsJson {
    pub seed: u64,
    pub max_degree: usize,
    pub deterministic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    pub q: u32,
    pub d: u32,
    pub branch: String,
    pub s: Option<usize>,
    pub sigma: Vec<usize>,
    pub polys: Vec<String>,
    pub options: OptionsJson,
    pub transcript: Vec<StepJson>,
}

impl RealizationJson {
    pub fn new(q: u32, d: u32, r: &Realization, opts: &RealizeOptions) -> Self {
        RealizationJson {
            q,
            d,
            branch: r.law.name().to_string(),
            s: r.s,
            sigma: r.sigma.to_one_based(),
            polys: r.polys.iter().map(|p| p.to_string()).collect(),
            options: OptionsJson {
                seed: opts.seed,
                max_degree: opts.max_degree,
                deterministic: opts.deterministic,
            },
            transcript: r.transcript.iter().map(StepJson::from).collect(),
        }
    }
}
