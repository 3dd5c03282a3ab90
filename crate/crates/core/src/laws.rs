//! Catalogue of relation-algebra laws and a finite model checker for them.
//!
//! Every law is a universally quantified statement over a fixed number of
//! relation variables. [`exhaustive_check`] enumerates every tuple of
//! relations on a small carrier; [`randomized_check`] samples tuples from a
//! seeded generator. Both produce a [`LawReport`] whose verdict, counts and
//! witness are deterministic functions of their inputs, independent of how
//! rayon schedules the work.
//!
//! | id | statement |
//! |----|-----------|
//! | `heyting-gc` | `R ∩ S ⊆ T ⇔ R ⊆ S → T` |
//! | `converse-gc` | `R⌣ ⊆ S ⇔ R ⊆ S⌣` |
//! | `converse-compose` | `(R;S)⌣ = S⌣;R⌣` |
//! | `converse-identity` | `I⌣ = I` |
//! | `modularity-left` | `R;S ∩ T ⊆ R;(S ∩ R⌣;T)` |
//! | `modularity-right` | `R ∩ S;T ⊆ (R;T⌣ ∩ S);T` |
//! | `star-unfold` | `I ∪ R;R* ⊆ R*` |
//! | `star-induction` | `I ∪ R;T ⊆ T ⇒ R* ⊆ T` |
//! | `star-reflexive` | `I ⊆ R*` |
//! | `star-idempotent` | `(R*)* = R*` |
//! | `star-transitive` | `R*;R* = R*` |
//! | `star-converse` | `(R⌣)* = (R*)⌣` |
//! | `star-monotonic` | `R ⊆ S ⇒ R* ⊆ S*` |
//! | `easy-inclusion` | `(R ∩ S*)* ⊆ R* ∩ S*` |
//! | `lemma-fused` | `R;(S→T*) ∩ S ⊆ T* ⇒ R* ∩ S ⊆ T*` |
//! | `lemma-elim-arrow` | `R⌣;S ⊆ S ⇒ R;(S→T*) ∩ S ⊆ R;T*` |
//! | `lemma-main-step` | `S = (R⌣)* ∧ T = R ∩ (R⌣)* ⇒ R;(S→T*) ∩ S ⊆ T*` |
//! | `theorem-sub` | `R* ∩ (R⌣)* ⊆ (R ∩ (R⌣)*)*` |
//! | `cancellation` | `(S→T) ∩ S ⊆ T` |
//! | `strengthened-inclusion` | `R⌣;S ⊆ S ⇒ R;(S→T*) ∩ S ⊆ R;T* ∩ S` |
//! | `strengthened-equality` | `R⌣;S ⊆ S ⇒ R;(S→T*) ∩ S = R;T* ∩ S` |
//! | `main-theorem` | `R* ∩ (R*)⌣ = (R ∩ (R⌣)*)*` |

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::write_relation;
use crate::generate::random_relation;
use crate::relation::Relation;

/// Default cap on the number of tuples an exhaustive run may enumerate.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

pub const DEFAULT_DENSITIES: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Equation,
    Inclusion,
    Equivalence,
    Implication,
}

/// Result of evaluating a law on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// An implication whose antecedent is false.
    Vacuous,
    Violated,
}

impl Outcome {
    fn from_bool(holds: bool) -> Self {
        if holds {
            Outcome::Holds
        } else {
            Outcome::Violated
        }
    }

    fn implication(antecedent: bool, consequent: impl FnOnce() -> Result<bool>) -> Result<Self> {
        if !antecedent {
            return Ok(Outcome::Vacuous);
        }
        consequent().map(Outcome::from_bool)
    }
}

/// A checkable statement over `arity()` relation variables.
///
/// [`LawId`] implements this for the built-in catalogue; other
/// implementations can be passed to the checkers as well.
pub trait Law: Sync {
    /// Stable lowercase-hyphenated identifier.
    fn id(&self) -> &'static str;

    /// Names of the quantified variables, in environment order.
    fn variables(&self) -> &'static [&'static str];

    fn arity(&self) -> usize {
        self.variables().len()
    }

    fn shape(&self) -> Shape;

    /// Evaluates the law on an environment that has already been validated:
    /// `env.len() == arity()` and every relation has size `carrier`.
    fn evaluate(&self, carrier: usize, env: &[Relation]) -> Result<Outcome>;

    /// Rewrites a randomly drawn environment so that the antecedent of an
    /// implication holds. Returns `false` when the law has no generator.
    fn force_antecedent(&self, _env: &mut [Relation]) -> Result<bool> {
        Ok(false)
    }
}

fn validate(law: &dyn Law, carrier: usize, env: &[Relation]) -> Result<()> {
    let invalid = |reason: String| Error::InvalidEnvironment {
        law: law.id(),
        reason,
    };
    if env.len() != law.arity() {
        return Err(invalid(format!(
            "expected {} relations, got {}",
            law.arity(),
            env.len()
        )));
    }
    if carrier == 0 {
        return Err(Error::InvalidCarrier(0));
    }
    if let Some(r) = env.iter().find(|r| r.size() != carrier) {
        return Err(invalid(format!(
            "relation over carrier {} in a check over carrier {carrier}",
            r.size()
        )));
    }
    Ok(())
}

/// Evaluates `law` on one instance, distinguishing vacuous implications.
pub fn evaluate_instance(law: &dyn Law, carrier: usize, env: &[Relation]) -> Result<Outcome> {
    validate(law, carrier, env)?;
    law.evaluate(carrier, env)
}

/// `true` iff the law holds on this instance (vacuous implications hold).
pub fn check_instance(law: &dyn Law, carrier: usize, env: &[Relation]) -> Result<bool> {
    Ok(evaluate_instance(law, carrier, env)? != Outcome::Violated)
}

/// The built-in law catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    HeytingGc,
    ConverseGc,
    ConverseCompose,
    ConverseIdentity,
    ModularityLeft,
    ModularityRight,
    StarUnfold,
    StarInduction,
    StarReflexive,
    StarIdempotent,
    StarTransitive,
    StarConverse,
    StarMonotonic,
    EasyInclusion,
    LemmaFused,
    LemmaElimArrow,
    LemmaMainStep,
    TheoremSub,
    Cancellation,
    StrengthenedInclusion,
    StrengthenedEquality,
    MainTheorem,
}

impl LawId {
    pub const ALL: [LawId; 22] = [
        LawId::HeytingGc,
        LawId::ConverseGc,
        LawId::ConverseCompose,
        LawId::ConverseIdentity,
        LawId::ModularityLeft,
        LawId::ModularityRight,
        LawId::StarUnfold,
        LawId::StarInduction,
        LawId::StarReflexive,
        LawId::StarIdempotent,
        LawId::StarTransitive,
        LawId::StarConverse,
        LawId::StarMonotonic,
        LawId::EasyInclusion,
        LawId::LemmaFused,
        LawId::LemmaElimArrow,
        LawId::LemmaMainStep,
        LawId::TheoremSub,
        LawId::Cancellation,
        LawId::StrengthenedInclusion,
        LawId::StrengthenedEquality,
        LawId::MainTheorem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::HeytingGc => "heyting-gc",
            LawId::ConverseGc => "converse-gc",
            LawId::ConverseCompose => "converse-compose",
            LawId::ConverseIdentity => "converse-identity",
            LawId::ModularityLeft => "modularity-left",
            LawId::ModularityRight => "modularity-right",
            LawId::StarUnfold => "star-unfold",
            LawId::StarInduction => "star-induction",
            LawId::StarReflexive => "star-reflexive",
            LawId::StarIdempotent => "star-idempotent",
            LawId::StarTransitive => "star-transitive",
            LawId::StarConverse => "star-converse",
            LawId::StarMonotonic => "star-monotonic",
            LawId::EasyInclusion => "easy-inclusion",
            LawId::LemmaFused => "lemma-fused",
            LawId::LemmaElimArrow => "lemma-elim-arrow",
            LawId::LemmaMainStep => "lemma-main-step",
            LawId::TheoremSub => "theorem-sub",
            LawId::Cancellation => "cancellation",
            LawId::StrengthenedInclusion => "strengthened-inclusion",
            LawId::StrengthenedEquality => "strengthened-equality",
            LawId::MainTheorem => "main-theorem",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .into_iter()
            .find(|law| law.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown law `{s}`")))
    }
}

/// `R;(S→T*) ∩ S`, the expression the lemmas about eliminating `S→` share.
fn arrow_term(r: &Relation, s: &Relation, t_star: &Relation) -> Result<Relation> {
    r.compose(&s.heyting(t_star)?)?.meet(s)
}

/// `R⌣;S ⊆ S`.
fn converse_closed(r: &Relation, s: &Relation) -> Result<bool> {
    r.converse().compose(s)?.is_subset(s)
}

impl Law for LawId {
    fn id(&self) -> &'static str {
        self.as_str()
    }

    fn variables(&self) -> &'static [&'static str] {
        match self {
            LawId::ConverseIdentity => &[],
            LawId::StarUnfold
            | LawId::StarReflexive
            | LawId::StarIdempotent
            | LawId::StarTransitive
            | LawId::StarConverse
            | LawId::TheoremSub
            | LawId::MainTheorem => &["R"],
            LawId::StarInduction => &["R", "T"],
            LawId::Cancellation => &["S", "T"],
            LawId::ConverseGc
            | LawId::ConverseCompose
            | LawId::StarMonotonic
            | LawId::EasyInclusion => &["R", "S"],
            LawId::HeytingGc
            | LawId::ModularityLeft
            | LawId::ModularityRight
            | LawId::LemmaFused
            | LawId::LemmaElimArrow
            | LawId::LemmaMainStep
            | LawId::StrengthenedInclusion
            | LawId::StrengthenedEquality => &["R", "S", "T"],
        }
    }

    fn shape(&self) -> Shape {
        match self {
            LawId::HeytingGc | LawId::ConverseGc => Shape::Equivalence,
            LawId::ConverseCompose
            | LawId::ConverseIdentity
            | LawId::StarIdempotent
            | LawId::StarTransitive
            | LawId::StarConverse
            | LawId::MainTheorem => Shape::Equation,
            LawId::ModularityLeft
            | LawId::ModularityRight
            | LawId::StarUnfold
            | LawId::StarReflexive
            | LawId::EasyInclusion
            | LawId::TheoremSub
            | LawId::Cancellation => Shape::Inclusion,
            LawId::StarInduction
            | LawId::StarMonotonic
            | LawId::LemmaFused
            | LawId::LemmaElimArrow
            | LawId::LemmaMainStep
            | LawId::StrengthenedInclusion
            | LawId::StrengthenedEquality => Shape::Implication,
        }
    }

    fn evaluate(&self, carrier: usize, env: &[Relation]) -> Result<Outcome> {
        let identity = || Relation::identity(carrier);
        match self {
            LawId::HeytingGc => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                let lhs = r.meet(s)?.is_subset(t)?;
                let rhs = r.is_subset(&s.heyting(t)?)?;
                Ok(Outcome::from_bool(lhs == rhs))
            }
            LawId::ConverseGc => {
                let (r, s) = (&env[0], &env[1]);
                let lhs = r.converse().is_subset(s)?;
                let rhs = r.is_subset(&s.converse())?;
                Ok(Outcome::from_bool(lhs == rhs))
            }
            LawId::ConverseCompose => {
                let (r, s) = (&env[0], &env[1]);
                let lhs = r.compose(s)?.converse();
                let rhs = s.converse().compose(&r.converse())?;
                lhs.equals(&rhs).map(Outcome::from_bool)
            }
            LawId::ConverseIdentity => {
                let i = identity()?;
                i.converse().equals(&i).map(Outcome::from_bool)
            }
            LawId::ModularityLeft => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                let lhs = r.compose(s)?.meet(t)?;
                let rhs = r.compose(&s.meet(&r.converse().compose(t)?)?)?;
                lhs.is_subset(&rhs).map(Outcome::from_bool)
            }
            LawId::ModularityRight => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                let lhs = r.meet(&s.compose(t)?)?;
                let rhs = r.compose(&t.converse())?.meet(s)?.compose(t)?;
                lhs.is_subset(&rhs).map(Outcome::from_bool)
            }
            LawId::StarUnfold => {
                let r = &env[0];
                let r_star = r.star();
                identity()?
                    .join(&r.compose(&r_star)?)?
                    .is_subset(&r_star)
                    .map(Outcome::from_bool)
            }
            LawId::StarInduction => {
                let (r, t) = (&env[0], &env[1]);
                let closed = identity()?.join(&r.compose(t)?)?.is_subset(t)?;
                Outcome::implication(closed, || r.star().is_subset(t))
            }
            LawId::StarReflexive => identity()?
                .is_subset(&env[0].star())
                .map(Outcome::from_bool),
            LawId::StarIdempotent => {
                let r_star = env[0].star();
                r_star.star().equals(&r_star).map(Outcome::from_bool)
            }
            LawId::StarTransitive => {
                let r_star = env[0].star();
                r_star
                    .compose(&r_star)?
                    .equals(&r_star)
                    .map(Outcome::from_bool)
            }
            LawId::StarConverse => {
                let r = &env[0];
                r.converse()
                    .star()
                    .equals(&r.star().converse())
                    .map(Outcome::from_bool)
            }
            LawId::StarMonotonic => {
                let (r, s) = (&env[0], &env[1]);
                Outcome::implication(r.is_subset(s)?, || r.star().is_subset(&s.star()))
            }
            LawId::EasyInclusion => {
                let (r, s) = (&env[0], &env[1]);
                let s_star = s.star();
                let lhs = r.meet(&s_star)?.star();
                let rhs = r.star().meet(&s_star)?;
                lhs.is_subset(&rhs).map(Outcome::from_bool)
            }
            LawId::LemmaFused => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                let t_star = t.star();
                let antecedent = arrow_term(r, s, &t_star)?.is_subset(&t_star)?;
                Outcome::implication(antecedent, || r.star().meet(s)?.is_subset(&t_star))
            }
            LawId::LemmaElimArrow => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                Outcome::implication(converse_closed(r, s)?, || {
                    let t_star = t.star();
                    arrow_term(r, s, &t_star)?.is_subset(&r.compose(&t_star)?)
                })
            }
            LawId::LemmaMainStep => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                let reversed = r.converse().star();
                let antecedent = s.equals(&reversed)? && t.equals(&r.meet(&reversed)?)?;
                Outcome::implication(antecedent, || {
                    let t_star = t.star();
                    arrow_term(r, s, &t_star)?.is_subset(&t_star)
                })
            }
            LawId::TheoremSub => {
                let r = &env[0];
                let reversed = r.converse().star();
                let lhs = r.star().meet(&reversed)?;
                let rhs = r.meet(&reversed)?.star();
                lhs.is_subset(&rhs).map(Outcome::from_bool)
            }
            LawId::Cancellation => {
                let (s, t) = (&env[0], &env[1]);
                s.heyting(t)?.meet(s)?.is_subset(t).map(Outcome::from_bool)
            }
            LawId::StrengthenedInclusion => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                Outcome::implication(converse_closed(r, s)?, || {
                    let t_star = t.star();
                    arrow_term(r, s, &t_star)?.is_subset(&r.compose(&t_star)?.meet(s)?)
                })
            }
            LawId::StrengthenedEquality => {
                let (r, s, t) = (&env[0], &env[1], &env[2]);
                Outcome::implication(converse_closed(r, s)?, || {
                    let t_star = t.star();
                    arrow_term(r, s, &t_star)?.equals(&r.compose(&t_star)?.meet(s)?)
                })
            }
            LawId::MainTheorem => {
                let r = &env[0];
                let r_star = r.star();
                let lhs = r_star.meet(&r_star.converse())?;
                let rhs = r.meet(&r.converse().star())?.star();
                lhs.equals(&rhs).map(Outcome::from_bool)
            }
        }
    }

    /// Generators, with `X`, `Y` standing for the randomly drawn values:
    ///
    /// * `star-induction`: `T := (R ∪ X)*`
    /// * `star-monotonic`: `S := R ∪ X`
    /// * `lemma-fused`: `S := (R⌣ ∪ X)*`, `T := (R ∩ S) ∪ (Y ∩ S⌣)`, which
    ///   satisfies every side condition of the main-step derivation
    /// * `lemma-elim-arrow`, `strengthened-*`: `S := (R⌣)*;(I ∪ X)`
    /// * `lemma-main-step`: `S := (R⌣)*`, `T := R ∩ S`
    fn force_antecedent(&self, env: &mut [Relation]) -> Result<bool> {
        match self {
            LawId::StarInduction => {
                env[1] = env[0].join(&env[1])?.star();
            }
            LawId::StarMonotonic => {
                env[1] = env[0].join(&env[1])?;
            }
            LawId::LemmaFused => {
                let s = env[0].converse().join(&env[1])?.star();
                let t = env[0].meet(&s)?.join(&env[2].meet(&s.converse())?)?;
                env[1] = s;
                env[2] = t;
            }
            LawId::LemmaElimArrow | LawId::StrengthenedInclusion | LawId::StrengthenedEquality => {
                let widen = Relation::identity(env[1].size())?.join(&env[1])?;
                env[1] = env[0].converse().star().compose(&widen)?;
            }
            LawId::LemmaMainStep => {
                let s = env[0].converse().star();
                env[2] = env[0].meet(&s)?;
                env[1] = s;
            }
            _ => return Ok(false),
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Randomized,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Randomized => "randomized",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// A variable of a law bound to a concrete relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub variable: &'static str,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub mode: Mode,
    pub size: usize,
    pub instances: u64,
    /// Instances where an implication's antecedent was false.
    pub vacuous: u64,
    pub verdict: Verdict,
    /// First failing instance in canonical order; present iff the verdict is
    /// [`Verdict::Fail`].
    pub witness: Option<Vec<Binding>>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The witness relations in environment order.
    pub fn witness_env(&self) -> Option<Vec<Relation>> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|b| b.relation.clone()).collect())
    }
}

/// One summary line, then one `# witness <var>` edge-list block per variable
/// on failure. The blocks parse back with
/// [`parse_relation_blocks`](crate::format::parse_relation_blocks).
impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "law={} mode={} n={} instances={} vacuous={} verdict={}",
            self.law, self.mode, self.size, self.instances, self.vacuous, self.verdict
        )?;
        for binding in self.witness.iter().flatten() {
            writeln!(f, "# witness {}", binding.variable)?;
            f.write_str(&write_relation(&binding.relation))?;
        }
        Ok(())
    }
}

/// Parameters of a randomized run.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckConfig {
    pub size: usize,
    pub samples: u64,
    pub seed: u64,
    /// Edge probabilities, cycled through sample by sample.
    pub densities: Vec<f64>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            size: 8,
            samples: 1000,
            seed: 0,
            densities: DEFAULT_DENSITIES.to_vec(),
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<()> {
        if self.size == 0 || self.size > crate::relation::MAX_CARRIER {
            return Err(Error::InvalidCarrier(self.size));
        }
        if self.samples == 0 {
            return Err(Error::Config("sample count must be at least 1".into()));
        }
        if self.densities.is_empty() {
            return Err(Error::Config("density schedule is empty".into()));
        }
        if let Some(p) = self.densities.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return Err(Error::Config(format!("density {p} is not in (0, 1)")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    vacuous: u64,
    first_failure: Option<u64>,
}

impl Tally {
    fn record(index: u64, outcome: Outcome) -> Self {
        Tally {
            vacuous: u64::from(outcome == Outcome::Vacuous),
            first_failure: (outcome == Outcome::Violated).then_some(index),
        }
    }

    fn merge(self, other: Tally) -> Tally {
        let first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Tally {
            vacuous: self.vacuous + other.vacuous,
            first_failure,
        }
    }
}

fn run_instances(count: u64, evaluate: impl Fn(u64) -> Result<Outcome> + Sync) -> Result<Tally> {
    (0..count)
        .into_par_iter()
        .map(|i| evaluate(i).map(|o| Tally::record(i, o)))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn bind(law: &dyn Law, env: Vec<Relation>) -> Vec<Binding> {
    law.variables()
        .iter()
        .zip(env)
        .map(|(&variable, relation)| Binding { variable, relation })
        .collect()
}

/// Number of tuples an exhaustive run over carrier `n` enumerates, as a
/// power of two: `n² · arity`.
pub fn exhaustive_log2(law: &dyn Law, n: usize) -> u32 {
    (n * n * law.arity()).try_into().unwrap_or(u32::MAX)
}

/// Tuple number `index` in canonical order: variable `v` takes the relation
/// whose flattened bit pattern is bits `v·n² .. (v+1)·n²` of `index`, so the
/// first variable varies fastest.
pub fn exhaustive_instance(law: &dyn Law, n: usize, index: u64) -> Result<Vec<Relation>> {
    let cells = n * n;
    let mask = if cells >= 64 {
        u64::MAX
    } else {
        (1 << cells) - 1
    };
    (0..law.arity())
        .map(|v| {
            let shift = v * cells;
            let pattern = if shift >= 64 {
                0
            } else {
                index >> shift & mask
            };
            Relation::from_pattern(n, pattern)
        })
        .collect()
}

pub fn exhaustive_check(law: &dyn Law, n: usize) -> Result<LawReport> {
    exhaustive_check_with_budget(law, n, DEFAULT_BUDGET)
}

/// Checks `law` on every tuple of relations over carrier `n`.
///
/// Fails with [`Error::BudgetExceeded`] when `2^(n²·arity)` exceeds `budget`.
pub fn exhaustive_check_with_budget(law: &dyn Law, n: usize, budget: u64) -> Result<LawReport> {
    if n == 0 {
        return Err(Error::InvalidCarrier(0));
    }
    let log2 = exhaustive_log2(law, n);
    let over_budget = log2 >= 64 || 1u64 << log2 > budget;
    if over_budget {
        return Err(Error::BudgetExceeded {
            required_log2: log2,
            budget,
        });
    }
    let instances = 1u64 << log2;
    let tally = run_instances(instances, |i| {
        law.evaluate(n, &exhaustive_instance(law, n, i)?)
    })?;
    let witness = tally
        .first_failure
        .map(|i| exhaustive_instance(law, n, i).map(|env| bind(law, env)))
        .transpose()?;
    Ok(LawReport {
        law: law.id(),
        mode: Mode::Exhaustive,
        size: n,
        instances,
        vacuous: tally.vacuous,
        verdict: if witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        witness,
    })
}

/// The environment of sample `index` under `config`, and whether it came
/// from the law's antecedent generator.
///
/// Each sample draws from its own ChaCha8 stream, keyed by the seed and the
/// sample index, so samples are independent of evaluation order. All
/// relations of sample `i` use density `densities[i % len]`. For laws with an
/// antecedent generator, three samples in four (those with `i % 4 != 3`) are
/// passed through it; the rest stay raw.
pub fn randomized_instance(
    law: &dyn Law,
    config: &CheckConfig,
    index: u64,
) -> Result<(Vec<Relation>, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let density = config.densities[(index % config.densities.len() as u64) as usize];
    let mut env: Vec<Relation> = (0..law.arity())
        .map(|_| random_relation(config.size, density, &mut rng))
        .collect();
    let constructive = index % 4 != 3 && law.force_antecedent(&mut env)?;
    Ok((env, constructive))
}

/// Checks `law` on `config.samples` seeded random instances.
pub fn randomized_check(law: &dyn Law, config: &CheckConfig) -> Result<LawReport> {
    config.validate()?;
    let tally = run_instances(config.samples, |i| {
        let (env, _) = randomized_instance(law, config, i)?;
        law.evaluate(config.size, &env)
    })?;
    let witness = tally
        .first_failure
        .map(|i| randomized_instance(law, config, i).map(|(env, _)| bind(law, env)))
        .transpose()?;
    Ok(LawReport {
        law: law.id(),
        mode: Mode::Randomized,
        size: config.size,
        instances: config.samples,
        vacuous: tally.vacuous,
        verdict: if witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        witness,
    })
}
