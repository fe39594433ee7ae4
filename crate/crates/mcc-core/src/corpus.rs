//! Randomized verification corpus.
//!
//! A fixed family of small rings (GF(2) and GF(3) crossed with shapes
//! (2,2), (3,2), (2,2,2), (3,3)) is exercised with seeded random generator
//! lists, plus an exhaustive sweep of every single-generator ideal over
//! GF(2) with shape (2,2). Each case runs the whole pipeline and checks the
//! structural invariants; the report aggregates counts and carries the
//! first failure per case, so a clean run is a strong end-to-end signal
//! while a red run names the invariant that broke.
//!
//! Everything is deterministic in the seed: case generation uses one
//! sequential stream, per-case checks derive their own stream from the seed
//! and case index, so sequential and parallel runs agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gf::FieldSpec;
use crate::ideal::{span_closure, Code};
use crate::idealbasis::SelectionStrategy;
use crate::qring::{RingElement, RingSpec};
use crate::sepasdar::{analyze, expected_member_count, verify_independence, BasisStatus};
use crate::ExecMode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Deliberate corruption hooks for exercising the failure paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Duplicate the first basis member, breaking independence.
    DuplicateMember,
}

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub seed: u64,
    /// Number of random cases, spread round-robin over the ring family.
    pub random_cases: usize,
    /// Include the exhaustive single-generator sweep over GF(2), (2,2).
    pub include_sweep: bool,
    /// Random codewords per case for the shift-invariance check.
    pub codewords_per_case: usize,
    /// Random (f, g) pairs per ring for the degree-product check.
    pub deg_prod_pairs: usize,
    pub strategy: SelectionStrategy,
    pub fault: Option<Fault>,
}

impl Default for CorpusConfig {
    fn default() -> CorpusConfig {
        CorpusConfig {
            seed: 0,
            random_cases: 200,
            include_sweep: true,
            codewords_per_case: 100,
            deg_prod_pairs: 1000,
            strategy: SelectionStrategy::MinALex,
            fault: None,
        }
    }
}

/// The fixed ring family.
pub fn standard_rings() -> Vec<RingSpec> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let field = FieldSpec::prime(p).unwrap();
        for rho in [&[2u64, 2][..], &[3, 2], &[2, 2, 2], &[3, 3]] {
            out.push(RingSpec::new(field.clone(), rho).unwrap());
        }
    }
    out
}

fn ring_label(spec: &RingSpec) -> String {
    let rho: Vec<String> = spec.rho().iter().map(|r| r.to_string()).collect();
    format!("q={} rho=({})", spec.field().q(), rho.join(","))
}

#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub index: usize,
    pub label: String,
    pub spec: RingSpec,
    pub generators: Vec<RingElement>,
}

/// Seeded case list: `random_cases` random ideals round-robin over the ring
/// family (one or two generators each), then the sweep.
pub fn generate_cases(cfg: &CorpusConfig) -> Vec<CorpusCase> {
    let rings = standard_rings();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for i in 0..cfg.random_cases {
        let spec = &rings[i % rings.len()];
        let count = rng.random_range(1..=2);
        let generators: Vec<RingElement> =
            (0..count).map(|_| spec.random_element(&mut rng)).collect();
        cases.push(CorpusCase {
            index: i,
            label: ring_label(spec),
            spec: spec.clone(),
            generators,
        });
    }
    if cfg.include_sweep {
        let field = FieldSpec::prime(2).unwrap();
        let spec = RingSpec::new(field, &[2, 2]).unwrap();
        for v in 0..16u64 {
            let values: Vec<u64> = (0..4).map(|b| (v >> b) & 1).collect();
            let g = spec.element_from_values(values);
            let index = cases.len();
            cases.push(CorpusCase {
                index,
                label: format!("{} sweep v={}", ring_label(&spec), v),
                spec: spec.clone(),
                generators: vec![g],
            });
        }
    }
    cases
}

/// The per-case invariants, in check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Independence,
    Membership,
    BoxCount,
    RowspaceEquality,
    ShiftInvariance,
    StaircaseRegeneration,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Independence => "independence",
            Invariant::Membership => "membership",
            Invariant::BoxCount => "box-count",
            Invariant::RowspaceEquality => "rowspace-equality",
            Invariant::ShiftInvariance => "shift-invariance",
            Invariant::StaircaseRegeneration => "staircase-regeneration",
        }
    }
}

const INVARIANTS: [Invariant; 6] = [
    Invariant::Independence,
    Invariant::Membership,
    Invariant::BoxCount,
    Invariant::RowspaceEquality,
    Invariant::ShiftInvariance,
    Invariant::StaircaseRegeneration,
];

#[derive(Debug, Clone)]
pub struct CaseFailure {
    pub invariant: Invariant,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub index: usize,
    pub label: String,
    pub dimension: usize,
    /// |B| under the configured strategy.
    pub members: usize,
    /// |B| under each strategy, for the comparison counter.
    pub members_min: usize,
    pub members_first: usize,
    pub proven: bool,
    /// Invariants that ran before the first failure stopped the case.
    pub checked: Vec<Invariant>,
    pub failure: Option<CaseFailure>,
}

fn err_failure(invariant: Invariant, e: Error) -> CaseFailure {
    CaseFailure {
        invariant,
        detail: format!("pipeline error: {e}"),
    }
}

/// Run the whole pipeline on one case and check every invariant, stopping
/// at the first failure.
pub fn check_case(case: &CorpusCase, cfg: &CorpusConfig, mode: ExecMode) -> CaseReport {
    let mut report = CaseReport {
        index: case.index,
        label: case.label.clone(),
        dimension: 0,
        members: 0,
        members_min: 0,
        members_first: 0,
        proven: false,
        checked: Vec::new(),
        failure: None,
    };
    let code = match Code::new(case.spec.clone(), case.generators.clone()) {
        Ok(c) => c,
        Err(e) => {
            report.failure = Some(err_failure(Invariant::Independence, e));
            return report;
        }
    };
    report.dimension = code.dimension();
    let analysis = match analyze(&code, cfg.strategy, mode) {
        Ok(a) => a,
        Err(e) => {
            report.failure = Some(err_failure(Invariant::Independence, e));
            return report;
        }
    };
    let other = match cfg.strategy {
        SelectionStrategy::MinALex => SelectionStrategy::First,
        SelectionStrategy::First => SelectionStrategy::MinALex,
    };
    let other_len = match analyze(&code, other, mode) {
        Ok(a) => a.basis.len(),
        Err(e) => {
            report.failure = Some(err_failure(Invariant::Independence, e));
            return report;
        }
    };
    report.members = analysis.basis.len();
    (report.members_min, report.members_first) = match cfg.strategy {
        SelectionStrategy::MinALex => (report.members, other_len),
        SelectionStrategy::First => (other_len, report.members),
    };
    report.proven = analysis.basis.status() == BasisStatus::ProvenBasis;

    let mut members = analysis.basis.members().to_vec();
    if cfg.fault == Some(Fault::DuplicateMember) {
        if let Some(first) = members.first().cloned() {
            members.push(first);
        }
    }

    let spec = &case.spec;
    for inv in INVARIANTS {
        let result: Result<(), String> = match inv {
            Invariant::Independence => {
                verify_independence(spec, &members, mode).map_err(|e| e.to_string())
            }
            Invariant::Membership => members
                .iter()
                .try_for_each(|m| match code.contains(m.element()) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err(format!("member {} outside the ideal", m.element())),
                    Err(e) => Err(e.to_string()),
                }),
            Invariant::BoxCount => {
                let expect = expected_member_count(spec, &analysis.representatives);
                if members.len() == expect {
                    Ok(())
                } else {
                    Err(format!("|B| = {} but boxes sum to {expect}", members.len()))
                }
            }
            Invariant::RowspaceEquality => {
                if !report.proven {
                    // Not claimed, nothing to check.
                    continue;
                }
                let elems: Vec<RingElement> =
                    members.iter().map(|m| m.element().clone()).collect();
                match span_closure(spec, &elems, mode) {
                    Ok(rows) => {
                        if rows.as_slice() == code.oracle_basis() {
                            Ok(())
                        } else {
                            Err("reduced B differs from the oracle basis".to_string())
                        }
                    }
                    Err(e) => Err(e.to_string()),
                }
            }
            Invariant::ShiftInvariance => {
                let mut rng = case_rng(cfg.seed, case.index);
                let mut failure = None;
                'outer: for _ in 0..cfg.codewords_per_case {
                    let w = code.random_codeword(&mut rng);
                    for axis in 0..spec.num_vars() {
                        let mut coords = vec![0u64; spec.num_vars()];
                        coords[axis] = 1 % spec.rho()[axis];
                        let e = spec.exponent(&coords).expect("unit shift is reduced");
                        let shifted = w.mul_monomial(&e).expect("same arity");
                        match code.contains(&shifted) {
                            Ok(true) => {}
                            Ok(false) => {
                                failure = Some(format!(
                                    "x{} shift of codeword {} escapes the ideal",
                                    axis + 1,
                                    w
                                ));
                                break 'outer;
                            }
                            Err(e) => {
                                failure = Some(e.to_string());
                                break 'outer;
                            }
                        }
                    }
                }
                match failure {
                    None => Ok(()),
                    Some(f) => Err(f),
                }
            }
            Invariant::StaircaseRegeneration => {
                let rows: Vec<RingElement> = analysis
                    .staircase
                    .rows()
                    .map(|r| r.element().clone())
                    .collect();
                match span_closure(spec, &rows, mode) {
                    Ok(regen) => {
                        if regen.as_slice() == code.oracle_basis() {
                            Ok(())
                        } else {
                            Err("staircase rows span a different space".to_string())
                        }
                    }
                    Err(e) => Err(e.to_string()),
                }
            }
        };
        report.checked.push(inv);
        if let Err(detail) = result {
            report.failure = Some(CaseFailure {
                invariant: inv,
                detail,
            });
            break;
        }
    }
    report
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed ^ (index as u64)
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(0xD1B5_4A32_D192_ED03),
    )
}

/// Exact-degree random element: nonzero coefficient at `deg`, zero above.
fn random_with_degree(spec: &RingSpec, deg: &[u64], rng: &mut impl Rng) -> RingElement {
    let q = spec.field().q();
    let top = spec.lex_rank(&spec.exponent(deg).expect("degree below rho"));
    let mut values = vec![0u64; spec.n()];
    for v in values.iter_mut().take(top) {
        *v = rng.random_range(0..q);
    }
    values[top] = rng.random_range(1..q);
    spec.element_from_values(values)
}

/// deg(fg) = deg f + deg g whenever the degree sum stays below rho in every
/// coordinate. Returns the first violation.
pub fn degree_product_check(spec: &RingSpec, pairs: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = spec.num_vars();
    let rho = spec.rho();
    for _ in 0..pairs {
        let mut df = vec![0u64; s];
        let mut dg = vec![0u64; s];
        for j in 0..s {
            df[j] = rng.random_range(0..rho[j]);
            dg[j] = rng.random_range(0..rho[j] - df[j]);
        }
        let f = random_with_degree(spec, &df, &mut rng);
        let g = random_with_degree(spec, &dg, &mut rng);
        let sum: Vec<u64> = df.iter().zip(&dg).map(|(&a, &b)| a + b).collect();
        let got = f
            .mul(&g)
            .expect("same spec")
            .degree()
            .map_err(|e| format!("{}: product of nonzero top terms vanished: {e}", ring_label(spec)))?;
        if got.coords() != sum.as_slice() {
            return Err(format!(
                "{}: deg(fg) = {got} but deg f + deg g = ({})",
                ring_label(spec),
                sum.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
    }
    Ok(())
}

#[derive(Debug)]
pub struct CorpusReport {
    pub seed: u64,
    pub random_cases: usize,
    pub sweep_cases: usize,
    pub cases: Vec<CaseReport>,
    pub deg_prod_rings: usize,
    pub deg_prod_pairs: usize,
    pub deg_prod_failure: Option<String>,
}

impl CorpusReport {
    pub fn total(&self) -> usize {
        self.cases.len()
    }

    pub fn proven_count(&self) -> usize {
        self.cases.iter().filter(|c| c.proven).count()
    }

    pub fn first_failure(&self) -> Option<(&CaseReport, &CaseFailure)> {
        if let Some(case) = self.cases.iter().find(|c| c.failure.is_some()) {
            return Some((case, case.failure.as_ref().unwrap()));
        }
        None
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none() && self.deg_prod_failure.is_none()
    }

    /// Cases where min_a_lex produced a smaller B than first. Expected to
    /// stay at zero; tracked rather than assumed.
    pub fn strategy_regressions(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.members_min < c.members_first)
            .count()
    }

    fn invariant_counts(&self, inv: Invariant) -> (usize, usize) {
        let mut passed = 0;
        let mut ran = 0;
        for case in &self.cases {
            if case.checked.contains(&inv) {
                ran += 1;
                let failed_here = case
                    .failure
                    .as_ref()
                    .map(|f| f.invariant == inv)
                    .unwrap_or(false);
                if !failed_here {
                    passed += 1;
                }
            }
        }
        (passed, ran)
    }

    /// Deterministic multi-line summary, ending in a PASS or FAIL line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "corpus seed={} cases={} ({} random + {} sweep)\n",
            self.seed,
            self.total(),
            self.random_cases,
            self.sweep_cases
        ));
        if self.cases.len() == 1 {
            let c = &self.cases[0];
            out.push_str(&format!(
                "case {}: {} dim={} |B|={} status={}\n",
                c.index,
                c.label,
                c.dimension,
                c.members,
                if c.proven { "ProvenBasis" } else { "IndependentOnly" }
            ));
        }
        for inv in INVARIANTS {
            let (passed, ran) = self.invariant_counts(inv);
            let note = if inv == Invariant::RowspaceEquality {
                " (proven cases)"
            } else {
                ""
            };
            out.push_str(&format!("{}: {passed}/{ran}{note}\n", inv.name()));
        }
        match &self.deg_prod_failure {
            None => out.push_str(&format!(
                "deg-prod: {} rings x {} pairs: ok\n",
                self.deg_prod_rings, self.deg_prod_pairs
            )),
            Some(f) => out.push_str(&format!("deg-prod: FAIL {f}\n")),
        }
        out.push_str(&format!(
            "strategy-comparison: min_a_lex >= first in {}/{} cases\n",
            self.total() - self.strategy_regressions(),
            self.total()
        ));
        let rate = if self.total() == 0 {
            100.0
        } else {
            100.0 * self.proven_count() as f64 / self.total() as f64
        };
        out.push_str(&format!(
            "proven-basis rate: {}/{} ({rate:.2}%)\n",
            self.proven_count(),
            self.total()
        ));
        match self.first_failure() {
            None if self.deg_prod_failure.is_none() => out.push_str("verify: PASS\n"),
            None => out.push_str("verify: FAIL invariant=deg-prod\n"),
            Some((case, failure)) => out.push_str(&format!(
                "verify: FAIL invariant={} case={} ({}) {}\n",
                failure.invariant.name(),
                case.index,
                case.label,
                failure.detail
            )),
        }
        out
    }
}

/// Run the full corpus. Parallel mode fans cases out over the rayon pool;
/// reports come back in case order either way.
pub fn run_corpus(cfg: &CorpusConfig, mode: ExecMode) -> CorpusReport {
    let cases = generate_cases(cfg);
    let reports = run_cases(&cases, cfg, mode);
    let rings = standard_rings();
    let mut deg_prod_failure = None;
    for spec in &rings {
        if let Err(f) = degree_product_check(spec, cfg.deg_prod_pairs, cfg.seed) {
            deg_prod_failure = Some(f);
            break;
        }
    }
    CorpusReport {
        seed: cfg.seed,
        random_cases: cfg.random_cases,
        sweep_cases: if cfg.include_sweep { 16 } else { 0 },
        cases: reports,
        deg_prod_rings: rings.len(),
        deg_prod_pairs: cfg.deg_prod_pairs,
        deg_prod_failure,
    }
}

fn run_cases(cases: &[CorpusCase], cfg: &CorpusConfig, mode: ExecMode) -> Vec<CaseReport> {
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        return cases
            .par_iter()
            .map(|case| check_case(case, cfg, mode))
            .collect();
    }
    let _ = mode;
    cases.iter().map(|case| check_case(case, cfg, mode)).collect()
}

/// Verify a single explicit code with the same per-case checks plus the
/// degree-product check on its ring.
pub fn check_single(
    spec: &RingSpec,
    generators: Vec<RingElement>,
    cfg: &CorpusConfig,
    mode: ExecMode,
) -> CorpusReport {
    let case = CorpusCase {
        index: 0,
        label: ring_label(spec),
        spec: spec.clone(),
        generators,
    };
    let report = check_case(&case, cfg, mode);
    let deg_prod_failure = degree_product_check(spec, cfg.deg_prod_pairs, cfg.seed).err();
    CorpusReport {
        seed: cfg.seed,
        random_cases: 1,
        sweep_cases: 0,
        cases: vec![report],
        deg_prod_rings: 1,
        deg_prod_pairs: cfg.deg_prod_pairs,
        deg_prod_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> CorpusConfig {
        CorpusConfig {
            random_cases: 24,
            codewords_per_case: 20,
            deg_prod_pairs: 50,
            ..CorpusConfig::default()
        }
    }

    #[test]
    fn corpus_is_deterministic_in_the_seed() {
        let cfg = small_cfg();
        let a = generate_cases(&cfg);
        let b = generate_cases(&cfg);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.generators, y.generators);
        }
        let other = CorpusConfig {
            seed: 1,
            ..small_cfg()
        };
        let c = generate_cases(&other);
        assert!(a.iter().zip(&c).any(|(x, y)| x.generators != y.generators));
    }

    #[test]
    fn small_corpus_passes_all_invariants() {
        let cfg = small_cfg();
        let report = run_corpus(&cfg, ExecMode::Sequential);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.total(), 24 + 16);
        // min_a_lex never came out smaller than first.
        assert_eq!(report.strategy_regressions(), 0);
        let rendered = report.render();
        assert!(rendered.contains("proven-basis rate:"));
        assert!(rendered.ends_with("verify: PASS\n"));
    }

    #[test]
    fn modes_agree_on_the_report() {
        let cfg = small_cfg();
        let seq = run_corpus(&cfg, ExecMode::Sequential);
        let par = run_corpus(&cfg, ExecMode::Parallel);
        assert_eq!(seq.render(), par.render());
        assert_eq!(seq.proven_count(), par.proven_count());
    }

    #[test]
    fn fault_injection_breaks_independence_first() {
        let cfg = CorpusConfig {
            fault: Some(Fault::DuplicateMember),
            ..small_cfg()
        };
        let report = run_corpus(&cfg, ExecMode::Sequential);
        assert!(!report.passed());
        let (_, failure) = report.first_failure().unwrap();
        assert_eq!(failure.invariant, Invariant::Independence);
        assert!(report.render().contains("verify: FAIL invariant=independence"));
    }

    #[test]
    fn degree_product_holds_on_every_standard_ring() {
        for spec in standard_rings() {
            degree_product_check(&spec, 200, 7).unwrap();
        }
    }

    #[test]
    fn single_case_report() {
        let spec = standard_rings()[0].clone();
        let g = spec.parse_polynomial("1 + x2").unwrap();
        let report = check_single(&spec, vec![g], &small_cfg(), ExecMode::Sequential);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.cases[0].dimension, 2);
        assert!(report.cases[0].proven);
        let rendered = report.render();
        assert!(rendered.contains("case 0: q=2 rho=(2,2) dim=2 |B|=2 status=ProvenBasis"));
    }
}
