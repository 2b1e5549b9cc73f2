//! Verification suites over the catalog.

use std::cell::OnceCell;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use weakcomm_core::checks::CheckReport;
use weakcomm_core::enumerate::{EnumerationError, Limits};
use weakcomm_core::groupring::{
    build_aug_quotient, build_aug_quotient_with, compare_l_abelianization,
    verify_relation_calculus, RelationFamily,
};
use weakcomm_core::model::model_group;
use weakcomm_core::perm::PermError;
use weakcomm_core::weak::{
    build_chi, build_nu, build_r, build_r_oracle, build_r_with_transversal, induced_epimorphism,
    schur_multiplier, verify_abelian_theorem, verify_canonical_quotients,
    verify_corollary_chimodr, verify_gamma_series, verify_lemma_chain, ChiContext, NuContext,
};
use weakcomm_core::{Error, FiniteGroupModel, PermGroup};

use crate::catalog::{self, CatalogEntry, Source};
use crate::report::{ClaimRecord, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lemma11,
    Quotients,
    Schur,
    Prop21,
    Prop42Oracle,
    Abelian421,
    Elem2,
    RTrivial,
    Remark41,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma11,
        Suite::Quotients,
        Suite::Schur,
        Suite::Prop21,
        Suite::Prop42Oracle,
        Suite::Abelian421,
        Suite::Elem2,
        Suite::RTrivial,
        Suite::Remark41,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Lemma11 => "lemma11",
            Suite::Quotients => "quotients",
            Suite::Schur => "schur",
            Suite::Prop21 => "prop21",
            Suite::Prop42Oracle => "prop42-oracle",
            Suite::Abelian421 => "abelian-421",
            Suite::Elem2 => "elem2",
            Suite::RTrivial => "rtrivial",
            Suite::Remark41 => "remark41",
        }
    }

    /// Parses a suite id; `all` yields every suite.
    pub fn parse_selection(id: &str) -> Option<Vec<Suite>> {
        if id == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|s| s.id() == id).map(|&s| vec![s])
    }

    /// Whether the suite runs on this entry by default.
    pub fn in_scope(self, e: &CatalogEntry) -> bool {
        let order = e.order().unwrap_or(u64::MAX);
        match self {
            Suite::Lemma11 | Suite::Quotients | Suite::Prop21 => true,
            Suite::Schur => order <= 8,
            Suite::Prop42Oracle => order <= 16,
            Suite::Abelian421 => e.is_abelian_family(),
            Suite::Elem2 => e.family == "elem2",
            Suite::RTrivial => {
                !matches!(e.family.as_str(), "elem2" | "trivial")
                    && e.expectation("r_order").is_some_and(|x| x.value == "1")
            }
            Suite::Remark41 => REMARK_PAIRS.iter().any(|p| p.source == e.key),
        }
    }
}

/// Claim ids and the statements they check.
pub const CLAIMS: &[(&str, &str)] = &[
    ("r-normal-psi-invariant", "basic lemma: R is normal in chi and invariant under the swap"),
    ("subgroup-chain", "basic lemma: [W,H] <= R <= W <= D"),
    ("conjugation-by-either-copy", "basic lemma: [h1,h2^psi] conjugates alike by h3 and h3^psi"),
    ("d-centralizes-l", "basic lemma: [D,L] = 1"),
    ("defects-in-r", "basic lemma: conjugation-compatibility defects lie in R"),
    ("chi-mod-d", "epimorphism chi -> H x H with kernel D"),
    ("chi-mod-dl", "subgroup diagram: chi/DL isomorphic to H/H'"),
    ("chi-mod-w", "epimorphism chi -> T(H) with kernel W"),
    ("chi-order-l-times-h", "epimorphism chi -> H with kernel L"),
    ("chi-order", "finiteness and order of chi(H) for finite H"),
    ("schur-two-routes", "Schur multiplier as W/R and as J/Delta"),
    ("schur-order", "order of the Schur multiplier of an elementary abelian 2-group"),
    ("nu-order", "order of nu(H)"),
    ("chi-mod-r-vs-nu-mod-delta", "corollary: chi/R isomorphic to nu/Delta"),
    ("chi-mod-r-order", "corollary: |chi/R| = |H|^2 |M(H)|"),
    ("chi-mod-r-via-t", "corollary: |chi/R| = |T(H)| |M(H)| through W/R"),
    ("l-abelianization", "L/L' isomorphic to A(H)/I2(H)"),
    ("aug-invariants", "invariants of A(H)/I2(H)"),
    ("l-invariants", "L elementary abelian of order 2^(2^n - 1) for elementary abelian 2-groups"),
    ("reduced-family", "I2(H) generated by (h-1)^2 b"),
    ("square", "relation calculus: a^2 = 2a - 1 modulo I2"),
    ("power", "relation calculus: a^k = k a - (k-1) modulo I2"),
    ("inverse-of-product", "relation calculus: (a_j a_i)^-1 = 2 - a_j a_i modulo I2"),
    ("product-of-inverses", "relation calculus: a_i^-1 a_j^-1 = a_i a_j - 2a_i - 2a_j + 4 modulo I2"),
    ("reorder", "relation calculus: a_j a_i = -a_i a_j + 2a_j + 2a_i - 2 modulo I2"),
    ("ordered-products-span", "relation calculus: ordered products span ZH/I2"),
    ("r-oracle", "R generated by transversal conjugates of generator defects"),
    ("r-transversal-choice", "R independent of the choice of transversal"),
    ("d-equals-w-equals-l-h", "abelian H: D = W = [L,H]"),
    ("r-equals-d-h", "abelian H: R = [D,H]"),
    ("r-equals-l-2h", "abelian H: R = [L,H,H]"),
    ("l-class-at-most-2", "abelian H: L nilpotent of class at most 2"),
    ("l-derived-central", "abelian H: L' central in chi"),
    ("l-derived-from-squares", "abelian H: L' generated by commutators of squares"),
    ("r-exponent-2", "abelian H: R has exponent dividing 2"),
    ("r-order", "elementary abelian 2-groups: |R| = 2^(n-1-k-k(k-1)/2)"),
    ("gamma2-equals-d", "elementary abelian 2-groups: gamma2(chi) = D"),
    ("gamma3-equals-r", "elementary abelian 2-groups: gamma3(chi) = R"),
    ("r-trivial", "R trivial for odd abelian, metacyclic and class-2 nilpotent groups"),
    ("onto", "induced epimorphism chi(H) -> chi(K) is onto"),
    ("commutes-with-psi", "induced epimorphism commutes with the swap"),
    ("l-image", "induced epimorphism maps L(H) onto L(K)"),
    ("r-image", "induced epimorphism maps R(H) onto R(K)"),
    ("setup", "construction of the groups a suite needs"),
];

pub fn anchor(claim: &str) -> &'static str {
    CLAIMS
        .iter()
        .find(|(id, _)| *id == claim)
        .map(|(_, a)| *a)
        .unwrap_or_else(|| panic!("claim {claim} has no anchor"))
}

/// An epimorphism between catalog groups, given by generator images
/// written in the target's generators.
pub struct RemarkPair {
    pub source: &'static str,
    pub target: &'static str,
    pub images: &'static [&'static str],
    pub label: &'static str,
}

pub const REMARK_PAIRS: &[RemarkPair] = &[
    RemarkPair { source: "elem2:3", target: "elem2:2", images: &["a", "b", ""], label: "drop the last generator" },
    RemarkPair { source: "elem2:2", target: "elem2:2", images: &["a", "b"], label: "identity" },
    RemarkPair { source: "elem2:2", target: "elem2:2", images: &["b", "ab"], label: "automorphism of order 3" },
    RemarkPair { source: "cyc:9", target: "cyc:3", images: &["a"], label: "reduction mod 3" },
    RemarkPair { source: "s3", target: "cyc:2", images: &["a", ""], label: "sign" },
    RemarkPair { source: "d4", target: "elem2:2", images: &["a", "b"], label: "abelianization" },
];

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Coset definitions allowed per enumeration.
    pub max_cosets: Option<usize>,
    /// Wall time allowed per entry.
    pub time_budget: Option<Duration>,
    /// Record per-entry wall time in the report. Timings make reports
    /// nondeterministic, so they are off by default.
    pub timings: bool,
    /// Restrict to these catalog keys.
    pub select: Option<Vec<String>>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_cosets: None,
            time_budget: Some(Duration::from_secs(300)),
            timings: false,
            select: None,
        }
    }
}

impl RunOptions {
    fn limits(&self, start: Instant) -> Limits {
        let mut limits = Limits::default();
        if let Some(n) = self.max_cosets {
            limits.max_cosets = n;
        }
        limits.deadline = self.time_budget.map(|d| start + d);
        limits
    }

    fn selected(&self, key: &str) -> bool {
        self.select
            .as_ref()
            .is_none_or(|keys| keys.iter().any(|k| k == key))
    }
}

/// True for errors that mean a resource budget ran out rather than a
/// computation going wrong.
pub fn is_budget_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Budget { .. }
            | Error::ModelTooLarge { .. }
            | Error::Enumeration(EnumerationError::LimitExceeded { .. })
            | Error::Enumeration(EnumerationError::TimeExceeded { .. })
            | Error::Perm(PermError::ThresholdExceeded { .. })
    )
}

/// Lazily built groups for one catalog entry.
struct EntryContext {
    entry: &'static CatalogEntry,
    limits: Limits,
    model: OnceCell<Result<Arc<FiniteGroupModel>, Error>>,
    chi: OnceCell<Result<ChiContext, Error>>,
    r: OnceCell<Result<PermGroup, Error>>,
    nu: OnceCell<Result<NuContext, Error>>,
}

impl EntryContext {
    fn new(entry: &'static CatalogEntry, limits: Limits) -> Self {
        EntryContext {
            entry,
            limits,
            model: OnceCell::new(),
            chi: OnceCell::new(),
            r: OnceCell::new(),
            nu: OnceCell::new(),
        }
    }

    fn model(&self) -> Result<&Arc<FiniteGroupModel>, Error> {
        self.model
            .get_or_init(|| model_group(&self.entry.presentation, self.limits).map(Arc::new))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn chi(&self) -> Result<&ChiContext, Error> {
        self.chi
            .get_or_init(|| build_chi(self.model()?, self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn r(&self) -> Result<&PermGroup, Error> {
        self.r
            .get_or_init(|| build_r(self.chi()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn nu(&self) -> Result<&NuContext, Error> {
        self.nu
            .get_or_init(|| build_nu(self.model()?, self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Claims produced by one suite on one entry, before report assembly.
struct Claim {
    claim: String,
    status: Status,
    measured: String,
    expected: Option<String>,
    source: Option<Source>,
    note: Option<String>,
}

impl Claim {
    fn new(claim: &str, passed: bool, measured: impl Into<String>) -> Self {
        Claim {
            claim: claim.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            measured: measured.into(),
            expected: None,
            source: None,
            note: None,
        }
    }

    fn with_note(mut self, note: Option<&str>) -> Self {
        self.note = note.map(str::to_string);
        self
    }
}

fn from_checks(out: &mut Vec<Claim>, report: CheckReport) {
    for c in report.checks {
        out.push(Claim::new(&c.id, c.passed, c.detail));
    }
}

/// A claim comparing a measured value with the catalog's expectation for
/// `quantity`, if the catalog records one.
fn expected_claim(out: &mut Vec<Claim>, e: &CatalogEntry, claim: &str, quantity: &str, measured: String) {
    if let Some(x) = e.expectation(quantity) {
        let mut c = Claim::new(claim, measured == x.value, measured);
        c.expected = Some(x.value.clone());
        c.source = Some(x.source);
        out.push(c);
    }
}

fn run_claims(suite: Suite, ctx: &EntryContext) -> Result<Vec<Claim>, Error> {
    let e = ctx.entry;
    let mut out = Vec::new();
    match suite {
        Suite::Lemma11 => {
            from_checks(&mut out, verify_lemma_chain(ctx.chi()?, ctx.r()?)?);
        }
        Suite::Quotients => {
            let c = ctx.chi()?;
            from_checks(&mut out, verify_canonical_quotients(c)?);
            expected_claim(&mut out, e, "chi-order", "chi_order", c.order().to_string());
        }
        Suite::Schur => {
            let (c, r, nu) = (ctx.chi()?, ctx.r()?, ctx.nu()?);
            let s = schur_multiplier(c, r, nu)?;
            let note = (!s.abelian).then_some("a quotient is non-abelian; invariants describe its abelianization");
            out.push(
                Claim::new(
                    "schur-two-routes",
                    s.agree,
                    format!("W/R = {}, J/Delta = {}", s.via_chi, s.via_nu),
                )
                .with_note(note),
            );
            let order = s.via_chi.order().map_or("infinite".to_string(), |o| o.to_string());
            expected_claim(&mut out, e, "schur-order", "schur_order", order);
            expected_claim(&mut out, e, "nu-order", "nu_order", nu.order().to_string());
            from_checks(&mut out, verify_corollary_chimodr(c, r, nu, &s)?);
        }
        Suite::Prop21 => {
            let (m, c) = (ctx.model()?, ctx.chi()?);
            let q = build_aug_quotient(m)?;
            from_checks(&mut out, compare_l_abelianization(c, &q));
            expected_claim(&mut out, e, "aug-invariants", "aug_invariants", q.invariants().to_string());
            expected_claim(&mut out, e, "l-invariants", "l_invariants", c.l().abelian_invariants().to_string());
            let reduced = build_aug_quotient_with(m, RelationFamily::LeftTrivial)?;
            out.push(Claim::new(
                "reduced-family",
                reduced.invariants() == q.invariants(),
                format!("{} vs {}", reduced.invariants(), q.invariants()),
            ));
            from_checks(&mut out, verify_relation_calculus(m, &q)?);
        }
        Suite::Prop42Oracle => {
            let (m, c, r) = (ctx.model()?, ctx.chi()?, ctx.r()?);
            let oracle = build_r_oracle(c)?;
            out.push(Claim::new(
                "r-oracle",
                oracle.same_group(r),
                format!("|R| = {}, oracle {}", r.order(), oracle.order()),
            ));
            let seed = catalog::position(&e.key).unwrap_or(0) as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(0x7e57 + seed);
            let transversal: Vec<usize> = m
                .transversal()
                .iter()
                .map(|&t| {
                    let members = m.coset_members(m.derived_coset(t));
                    *members.choose(&mut rng).expect("cosets are nonempty")
                })
                .collect();
            let other = build_r_with_transversal(c, &transversal)?;
            out.push(Claim::new(
                "r-transversal-choice",
                other.same_group(r),
                format!("|R| = {} with transversal {:?}", other.order(), transversal),
            ));
        }
        Suite::Abelian421 => {
            from_checks(&mut out, verify_abelian_theorem(ctx.chi()?, ctx.r()?)?);
        }
        Suite::Elem2 => {
            let (c, r) = (ctx.chi()?, ctx.r()?);
            expected_claim(&mut out, e, "chi-order", "chi_order", c.order().to_string());
            expected_claim(&mut out, e, "r-order", "r_order", r.order().to_string());
            from_checks(&mut out, verify_gamma_series(c, r)?);
        }
        Suite::RTrivial => {
            let r = ctx.r()?;
            let mut c = Claim::new("r-trivial", r.is_trivial(), format!("|R| = {}", r.order()));
            if let Some(x) = e.expectation("r_order") {
                c.expected = Some(x.value.clone());
                c.source = Some(x.source);
            }
            out.push(c.with_note(e.note.as_deref().filter(|_| e.family == "heisenberg")));
        }
        Suite::Remark41 => {
            for pair in REMARK_PAIRS.iter().filter(|p| p.source == e.key) {
                out.extend(remark_claims(ctx, pair)?);
            }
        }
    }
    Ok(out)
}

fn remark_claims(ctx: &EntryContext, pair: &RemarkPair) -> Result<Vec<Claim>, Error> {
    let target_entry = catalog::lookup(pair.target)
        .ok_or_else(|| Error::Precondition(format!("unknown catalog key {}", pair.target)))?;
    let target = EntryContext::new(target_entry, ctx.limits);
    let k = target.model()?;
    let phi = pair
        .images
        .iter()
        .map(|w| Ok(k.element_of(&k.presentation().parse_word(w)?)))
        .collect::<Result<Vec<usize>, Error>>()?;
    let report = induced_epimorphism(ctx.chi()?, ctx.r()?, target.chi()?, target.r()?, &phi)?;
    let note = format!("to {} ({})", pair.target, pair.label);
    Ok(report
        .checks
        .into_iter()
        .map(|c| Claim::new(&c.id, c.passed, c.detail).with_note(Some(&note)))
        .collect())
}

fn error_claim(e: &Error) -> Claim {
    let status = if is_budget_error(e) { Status::Skipped } else { Status::Fail };
    Claim {
        claim: "setup".into(),
        status,
        measured: e.to_string(),
        expected: None,
        source: None,
        note: None,
    }
}

/// Runs one catalog entry through the given suites.
fn run_entry(entry: &'static CatalogEntry, suites: &[Suite], opts: &RunOptions) -> Vec<(Suite, Vec<ClaimRecord>)> {
    let start = Instant::now();
    let ctx = EntryContext::new(entry, opts.limits(start));
    let mut out = Vec::new();
    for &suite in suites {
        if !suite.in_scope(entry) {
            continue;
        }
        let t = Instant::now();
        let claims = run_claims(suite, &ctx).unwrap_or_else(|e| vec![error_claim(&e)]);
        let wall_ms = opts.timings.then(|| t.elapsed().as_millis() as u64);
        let records = claims
            .into_iter()
            .map(|c| ClaimRecord {
                group: entry.key.clone(),
                suite: suite.id().to_string(),
                anchor: anchor(&c.claim).to_string(),
                claim: c.claim,
                status: c.status,
                measured: c.measured,
                expected: c.expected,
                source: c.source,
                note: c.note,
                wall_ms,
            })
            .collect();
        out.push((suite, records));
    }
    out
}

/// Runs the suites over the selected catalog entries. Entries run in
/// parallel; records are ordered by suite, then catalog position.
pub fn run_suite(suite_id: &str, suites: &[Suite], opts: &RunOptions) -> VerificationReport {
    let entries: Vec<&'static CatalogEntry> = catalog::catalog()
        .iter()
        .filter(|e| opts.selected(&e.key))
        .collect();
    let per_entry: Vec<Vec<(Suite, Vec<ClaimRecord>)>> = entries
        .par_iter()
        .map(|e| run_entry(e, suites, opts))
        .collect();
    let mut records = Vec::new();
    for &suite in suites {
        for results in &per_entry {
            for (s, rs) in results {
                if *s == suite {
                    records.extend(rs.iter().cloned());
                }
            }
        }
    }
    VerificationReport::new(suite_id, records)
}
