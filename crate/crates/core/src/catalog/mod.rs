//! The identity catalog: every summation formula as an [`IdentityCase`]
//! pairing a left-hand series with a transcribed right-hand side.
//!
//! Left-hand sides are always the defining series built in [`lhs`]; closed
//! forms live only in [`andrews`] and [`jain`], so a transcription slip on one
//! side can never be mirrored on the other.

mod andrews;
mod jain;
pub mod lhs;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{EvalError, ParseError};
use crate::exact::{poch_fraction, Rational};
use crate::point::ParamPoint;
use crate::series::phi_eval_checked;

use andrews::Family;

/// Bumped whenever a formula or catalog entry changes.
pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Andrews,
    Jain,
    Phi65,
    UnityA,
    UnityB,
    RelA,
    RelB,
    RelC,
    RelD,
    ThmA,
    ThmB,
    ThmC,
    ThmD,
    CorA1,
    CorA2,
    CorB1,
    CorB2,
    CorC1,
    CorC2,
    CorD1,
    CorD2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 21] = [
        IdentityId::Andrews,
        IdentityId::Jain,
        IdentityId::Phi65,
        IdentityId::UnityA,
        IdentityId::UnityB,
        IdentityId::RelA,
        IdentityId::RelB,
        IdentityId::RelC,
        IdentityId::RelD,
        IdentityId::ThmA,
        IdentityId::ThmB,
        IdentityId::ThmC,
        IdentityId::ThmD,
        IdentityId::CorA1,
        IdentityId::CorA2,
        IdentityId::CorB1,
        IdentityId::CorB2,
        IdentityId::CorC1,
        IdentityId::CorC2,
        IdentityId::CorD1,
        IdentityId::CorD2,
    ];

    pub fn key(self) -> &'static str {
        use IdentityId::*;
        match self {
            Andrews => "andrews",
            Jain => "jain",
            Phi65 => "phi65",
            UnityA => "unity-a",
            UnityB => "unity-b",
            RelA => "rel-a",
            RelB => "rel-b",
            RelC => "rel-c",
            RelD => "rel-d",
            ThmA => "thm-a",
            ThmB => "thm-b",
            ThmC => "thm-c",
            ThmD => "thm-d",
            CorA1 => "cor-a1",
            CorA2 => "cor-a2",
            CorB1 => "cor-b1",
            CorB2 => "cor-b2",
            CorC1 => "cor-c1",
            CorC2 => "cor-c2",
            CorD1 => "cor-d1",
            CorD2 => "cor-d2",
        }
    }

    pub fn index(self) -> usize {
        IdentityId::ALL.iter().position(|&id| id == self).unwrap()
    }

    /// True for ids whose series contain `sqrt(qac)`.
    pub fn is_jain_type(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            Jain | RelC | RelD | ThmC | ThmD | CorC1 | CorC2 | CorD1 | CorD2
        )
    }

    pub fn case(self) -> IdentityCase {
        IdentityCase::new(self)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for IdentityId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.key() == s)
            .ok_or_else(|| ParseError::UnknownId(s.to_string()))
    }
}

/// How an identity uses the point's `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsRule {
    /// The identity has no `eps`; the point's value is ignored and sampled as 0.
    Unused,
    /// Any `eps` is allowed (subject to `eps_le_n`).
    Free,
    /// The identity is a specialization at this `eps`.
    Fixed(usize),
}

/// Domain restrictions checked before an identity is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraints {
    pub n_min: usize,
    pub eps: EpsRule,
    pub eps_le_n: bool,
    /// `q` must be a rational square so that `sqrt(qac)` is rational.
    pub square_q: bool,
}

impl Constraints {
    pub fn check(&self, p: &ParamPoint) -> Result<(), EvalError> {
        let violated = |msg: String| Err(EvalError::ConstraintViolated(msg));
        if p.n() < self.n_min {
            return violated(format!("requires n >= {} (got n={})", self.n_min, p.n()));
        }
        if let EpsRule::Fixed(e) = self.eps {
            if p.eps() != e {
                return violated(format!("requires eps = {e} (got eps={})", p.eps()));
            }
        }
        if self.eps_le_n && self.eps != EpsRule::Unused && p.eps() > p.n() {
            return violated(format!(
                "requires eps <= n (got eps={}, n={})",
                p.eps(),
                p.n()
            ));
        }
        if self.square_q {
            p.sqrt_q()?;
        }
        Ok(())
    }

    /// Smallest admissible `eps` and, when bounded by the identity itself, the largest.
    pub fn eps_range(&self) -> (usize, Option<usize>) {
        match self.eps {
            EpsRule::Unused => (0, Some(0)),
            EpsRule::Free => (0, None),
            EpsRule::Fixed(e) => (e, Some(e)),
        }
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        match self.eps {
            EpsRule::Unused => {}
            EpsRule::Free => parts.push("eps >= 0".to_string()),
            EpsRule::Fixed(e) => parts.push(format!("eps = {e}")),
        }
        if self.eps_le_n {
            parts.push("eps <= n".to_string());
        }
        if self.n_min > 0 {
            parts.push(format!("n >= {}", self.n_min));
        }
        if self.square_q {
            parts.push("q a rational square".to_string());
        }
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join(", ")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `n = 2s` or `n = 1 + 2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCase {
    pub s: usize,
    pub parity: Parity,
}

impl ParityCase {
    pub fn of(n: usize) -> Self {
        let parity = if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        };
        ParityCase { s: n / 2, parity }
    }

    pub fn n(&self) -> usize {
        2 * self.s + usize::from(self.parity == Parity::Odd)
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub constraints: Constraints,
    /// Where the identity is stated, e.g. "Theorem 1".
    pub paper_ref: &'static str,
    /// Shape of the two sides.
    pub description: &'static str,
    /// The documented single-token perturbation used by mutation testing.
    pub mutation: &'static str,
}

impl IdentityCase {
    fn new(id: IdentityId) -> Self {
        use IdentityId::*;
        let free = |eps_le_n, square_q| Constraints {
            n_min: 0,
            eps: EpsRule::Free,
            eps_le_n,
            square_q,
        };
        let fixed = |e, jain_type| Constraints {
            n_min: if jain_type { e } else { 0 },
            eps: EpsRule::Fixed(e),
            eps_le_n: jain_type,
            square_q: jain_type,
        };
        let unused = |square_q| Constraints {
            n_min: 0,
            eps: EpsRule::Unused,
            eps_le_n: false,
            square_q,
        };
        let (constraints, paper_ref, description, mutation) = match id {
            Andrews => (
                unused(false),
                "Andrews q-Watson formula",
                "4phi3[q^-n, q^(1+n)a, sqrt(c), -sqrt(c); q sqrt(a), -q sqrt(a), c] = c^s (q, q^2a/c; q^2)_s/(q^2a, qc; q^2)_s (n=2s), 0 (n odd)",
                "c^s -> c^(s+1)",
            ),
            Jain => (
                unused(true),
                "Jain q-Watson formula",
                "4phi3[a, c, q^-n, -q^-n; sqrt(qac), -sqrt(qac), q^-2n] = (qa, qc; q^2)_n/(q, qac; q^2)_n",
                "qa -> q^2 a in the numerator",
            ),
            Phi65 => (
                free(false, false),
                "terminating 6phi5 summation",
                "6phi5[a, q sqrt(a), -q sqrt(a), b, c', q^-eps; ...; q^(1+eps)a/(bc')] = (qa, qa/(bc'); q)_eps/(qa/b, qa/c'; q)_eps with b = C^2, c' = AC",
                "qa -> q^2 a in the numerator",
            ),
            UnityA => (
                free(false, false),
                "first unity sum (6phi5 at b = q^-k, c -> infinity)",
                "sum_i [k,i]_q q^((i+eps-1)i) c^i ... (q^-eps; q)_i/(q^eps c; q)_i = 1, cutoff k = n",
                "q^((i+eps-1)i) -> q^((i+eps-1)i+1)",
            ),
            UnityB => (
                free(false, false),
                "second unity sum (6phi5 at b = q^-k, c -> sqrt(c))",
                "sum_i (-1)^i q^(eps+C(i,2)) c^((i-eps)/2) ... <q^k;q>_i <cq^(k+eps-1);q>_(eps-i)/(q^k sqrt(c);q)_eps = 1, cutoff k = n",
                "q^(eps+C(i,2)) -> q^(eps+C(i,2)+1)",
            ),
            RelA => (
                free(false, false),
                "rearrangement relation, first Andrews family",
                "4phi3[..., sqrt(c), -sqrt(c); ..., q^eps c] = sum_i q^((i+eps)i) c^i (...)_i * inner 4phi3",
                "q^((i+eps)i) -> q^((i+eps)i+1)",
            ),
            RelB => (
                free(false, false),
                "rearrangement relation, second Andrews family",
                "4phi3[..., q^eps sqrt(c), -sqrt(c); ..., q^eps c] = sum_i (-1)^i q^(eps i+C(i+1,2)) c^(i/2) (...)_i * inner 4phi3",
                "q^(eps i+C(i+1,2)) -> q^(eps i+C(i+1,2)+1)",
            ),
            RelC => (
                free(true, true),
                "substituted rearrangement relation, first Jain family",
                "4phi3[a, c, q^-n, -q^-n; ..., q^(eps-2n)] = sum_i q^((i+eps-2n)i) (...)_i * inner 4phi3",
                "q^((i+eps-2n)i) -> q^((i+eps-2n)i+1)",
            ),
            RelD => (
                free(true, true),
                "substituted rearrangement relation, second Jain family",
                "4phi3[a, c, q^(eps-n), -q^-n; ..., q^(eps-2n)] = sum_i (-1)^i q^((eps-n)i+C(i+1,2)) (...)_i * inner 4phi3",
                "q^((eps-n)i+C(i+1,2)) -> q^((eps-n)i+C(i+1,2)+1)",
            ),
            ThmA => (
                free(false, false),
                "Theorem 1",
                "4phi3[q^-n, q^(1+n)a, sqrt(c), -sqrt(c); q sqrt(a), -q sqrt(a), q^eps c] = sum_i q^((eps+n)i) c^((n+i)/2) (...)_i (q, q^2a/c; q^2)_((n-i)/2)/(...) chi(n-i even)",
                "q^((eps+n)i) -> q^((eps+n)i+1)",
            ),
            ThmB => (
                free(false, false),
                "Theorem 2",
                "4phi3[q^-n, q^(1+n)a, q^eps sqrt(c), -sqrt(c); q sqrt(a), -q sqrt(a), q^eps c] = sum_i (-1)^i q^((eps+n)i-C(i,2)) c^(n/2) (...)_i (...)_((n-i)/2) chi(n-i even)",
                "q^((eps+n)i-C(i,2)) -> q^((eps+n)i-C(i,2)+1)",
            ),
            ThmC => (
                free(true, true),
                "Theorem 3",
                "4phi3[a, c, q^-n, -q^-n; sqrt(qac), -sqrt(qac), q^(eps-2n)] = sum_i q^((i+eps-2n)i) (...)_i (q^(1+i)a, q^(1+i)c; q^2)_(n-i)/(q, q^(1+2i)ac; q^2)_(n-i)",
                "q^((i+eps-2n)i) -> q^((i+eps-2n)i+1)",
            ),
            ThmD => (
                free(true, true),
                "Theorem 4",
                "4phi3[a, c, q^(eps-n), -q^-n; sqrt(qac), -sqrt(qac), q^(eps-2n)] = sum_i (-1)^i q^((eps-n)i+C(i+1,2)) (...)_i (...)_(n-i)",
                "q^((eps-n)i+C(i+1,2)) -> q^((eps-n)i+C(i+1,2)+1)",
            ),
            CorA1 => (
                fixed(1, false),
                "Corollary (eps=1 in Theorem 1)",
                "4phi3[...; ..., qc] = c^s (q, q^2a/c; q^2)_s/(q^2a, qc; q^2)_s (n=2s), c^(1+s) (q; q^2)_(1+s)/(qc; q^2)_(1+s) (q^2a/c; q^2)_s/(q^2a; q^2)_s (n=1+2s)",
                "odd branch c^(1+s) -> c^(2+s)",
            ),
            CorA2 => (
                fixed(2, false),
                "Corollary (eps=2 in Theorem 1)",
                "4phi3[...; ..., q^2 c] = {1 + q^2c(1-c)(1-q^2s)(1-q^(1+2s)a)/(...)} c^s (...)_s (n=2s), (1-q^2)/(1-q^2c) c^(1+s) (q^3, q^2a/c; q^2)_s/(q^2a, q^3c; q^2)_s (n=1+2s)",
                "brace q^2 c -> q^3 c",
            ),
            CorB1 => (
                fixed(1, false),
                "Corollary (eps=1 in Theorem 2)",
                "4phi3[..., q sqrt(c), -sqrt(c); ..., qc] = c^s (...)_s (n=2s), -c^(1/2+s) (q; q^2)_(1+s)/(qc; q^2)_(1+s) (q^2a/c; q^2)_s/(q^2a; q^2)_s (n=1+2s)",
                "odd branch c^(1/2+s) -> c^(1+s)",
            ),
            CorB2 => (
                fixed(2, false),
                "Corollary (eps=2 in Theorem 2)",
                "4phi3[..., q^2 sqrt(c), -sqrt(c); ..., q^2 c] = {1 + q(1-c)(1-q^2s)(1-q^(1+2s)a)/(...)} c^s (...)_s (n=2s), (q^2-1)/(1-q^2c) c^(1/2+s) (q^3, q^2a/c; q^2)_s/(...) (n=1+2s)",
                "brace q -> q^2",
            ),
            CorC1 => (
                fixed(1, true),
                "Corollary (eps=1 in Theorem 3)",
                "4phi3[a, c, q^-n, -q^-n; ..., q^(1-2n)] = (qa, qc; q^2)_n/(q, qac; q^2)_n + (a, c; q^2)_n/(q, qac; q^2)_n",
                "qa -> q^2 a in the first term",
            ),
            CorC2 => (
                fixed(2, true),
                "Corollary (eps=2 in Theorem 3)",
                "4phi3[a, c, q^-n, -q^-n; ..., q^(2-2n)] = (1+q)(1-q^(1-2n))/(1-q^(2-2n)) (a, c; q^2)_n/(...) + {1 + q(1-a)(1-c)(1-q^-2n)/(...)} (qa, qc; q^2)_n/(...)",
                "(1+q) -> (1+q^2)",
            ),
            CorD1 => (
                fixed(1, true),
                "Corollary (eps=1 in Theorem 4)",
                "4phi3[a, c, q^(1-n), -q^-n; ..., q^(1-2n)] = (qa, qc; q^2)_n/(q, qac; q^2)_n - q^n (a, c; q^2)_n/(q, qac; q^2)_n",
                "q^n -> q^(n+1)",
            ),
            CorD2 => (
                fixed(2, true),
                "Corollary (eps=2 in Theorem 4)",
                "4phi3[a, c, q^(2-n), -q^-n; ..., q^(2-2n)] = (1+q)(1-q^(2n-1))/(q^(n-1)-q^(1-n)) (a, c; q^2)_n/(...) + {1 - (1-a)(1-c)(1-q^2n)/(...)} (qa, qc; q^2)_n/(...)",
                "brace (1-q^2n) -> (1-q^(2n+1))",
            ),
        };
        IdentityCase {
            id,
            constraints,
            paper_ref,
            description,
            mutation,
        }
    }

    pub fn lhs(&self, p: &ParamPoint) -> Result<Rational, EvalError> {
        self.constraints.check(p)?;
        lhs_unchecked(self.id, p)
    }

    pub fn rhs(&self, p: &ParamPoint) -> Result<Rational, EvalError> {
        self.constraints.check(p)?;
        rhs_with(self.id, p, 0)
    }

    /// Both sides with the documented mutation applied to the transcribed side.
    pub fn mutated_sides(&self, p: &ParamPoint) -> Result<(Rational, Rational), EvalError> {
        self.constraints.check(p)?;
        match self.id {
            // the transcribed side of a unity sum is the sum itself
            IdentityId::UnityA => Ok((andrews::unity_a(p, p.n(), 1)?, Rational::one())),
            IdentityId::UnityB => Ok((andrews::unity_b(p, p.n(), 1)?, Rational::one())),
            id => Ok((lhs_unchecked(id, p)?, rhs_with(id, p, 1)?)),
        }
    }
}

pub fn catalog() -> Vec<IdentityCase> {
    IdentityId::ALL.iter().map(|id| id.case()).collect()
}

fn lhs_unchecked(id: IdentityId, p: &ParamPoint) -> Result<Rational, EvalError> {
    use IdentityId::*;
    let q = p.q();
    let e = p.eps();
    match id {
        Andrews => phi_eval_checked(&lhs::andrews_type_series(p, 0, 0), q),
        Jain => phi_eval_checked(&lhs::jain_type_series(p, 0, 0)?, q),
        Phi65 => {
            let (b, c) = lhs::phi65_bc(p);
            lhs::phi65_lhs(p.sqrt_a(), &b, &c, q, e)
        }
        UnityA => andrews::unity_a(p, p.n(), 0),
        UnityB => andrews::unity_b(p, p.n(), 0),
        RelA | ThmA | CorA1 | CorA2 => phi_eval_checked(&lhs::andrews_type_series(p, 0, e), q),
        RelB | ThmB | CorB1 | CorB2 => phi_eval_checked(&lhs::andrews_type_series(p, e, e), q),
        RelC | ThmC | CorC1 | CorC2 => phi_eval_checked(&lhs::jain_type_series(p, 0, e)?, q),
        RelD | ThmD | CorD1 | CorD2 => phi_eval_checked(&lhs::jain_type_series(p, e, e)?, q),
    }
}

fn sum(terms: Vec<Rational>) -> Rational {
    terms.into_iter().fold(Rational::zero(), |acc, t| acc + t)
}

fn rhs_with(id: IdentityId, p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    use IdentityId::*;
    match id {
        Andrews => andrews::andrews(p, tw),
        Jain => jain::jain(p, tw),
        Phi65 => {
            let (b, c) = lhs::phi65_bc(p);
            phi65_rhs_with(&p.a(), &b, &c, p.q(), p.eps(), tw)
        }
        UnityA | UnityB => Ok(Rational::one()),
        RelA => Ok(sum(andrews::relation_terms(p, Family::First, tw)?)),
        RelB => Ok(sum(andrews::relation_terms(p, Family::Second, tw)?)),
        RelC => Ok(sum(jain::relation_terms(p, Family::First, tw)?)),
        RelD => Ok(sum(jain::relation_terms(p, Family::Second, tw)?)),
        ThmA => Ok(sum(andrews::theorem_terms(p, Family::First, tw)?)),
        ThmB => Ok(sum(andrews::theorem_terms(p, Family::Second, tw)?)),
        ThmC => Ok(sum(jain::theorem_terms(p, Family::First, tw)?)),
        ThmD => Ok(sum(jain::theorem_terms(p, Family::Second, tw)?)),
        CorA1 => andrews::cor_a1(p, tw),
        CorA2 => andrews::cor_a2(p, tw),
        CorB1 => andrews::cor_b1(p, tw),
        CorB2 => andrews::cor_b2(p, tw),
        CorC1 => jain::cor_c1(p, tw),
        CorC2 => jain::cor_c2(p, tw),
        CorD1 => jain::cor_d1(p, tw),
        CorD2 => jain::cor_d2(p, tw),
    }
}

fn phi65_rhs_with(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    q: &Rational,
    eps: usize,
    tw: i64,
) -> Result<Rational, EvalError> {
    if b.is_zero() || c.is_zero() {
        return Err(EvalError::ConstraintViolated(
            "6phi5 parameters b and c must be nonzero".to_string(),
        ));
    }
    let qa = q * a;
    let lead = crate::exact::qpow(q, 1 + tw)? * a;
    poch_fraction(&[lead, &qa / (b * c)], &[&qa / b, &qa / c], q, eps)
}

/// Left-hand side of any catalog identity, evaluated as its defining series
/// (the i-sum itself for the two unity identities).
pub fn lhs_eval(id: IdentityId, p: &ParamPoint) -> Result<Rational, EvalError> {
    id.case().lhs(p)
}

/// Right-hand side of any catalog identity.
pub fn rhs_eval(id: IdentityId, p: &ParamPoint) -> Result<Rational, EvalError> {
    id.case().rhs(p)
}

/// Base Andrews q-Watson closed form.
pub fn andrews_rhs(p: &ParamPoint) -> Result<Rational, EvalError> {
    andrews::andrews(p, 0)
}

/// Base Jain q-Watson closed form; needs no square root.
pub fn jain_rhs(p: &ParamPoint) -> Result<Rational, EvalError> {
    jain::jain(p, 0)
}

/// `(qa, qa/(bc); q)_eps / (qa/b, qa/c; q)_eps`.
pub fn phi65_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    q: &Rational,
    eps: usize,
) -> Result<Rational, EvalError> {
    phi65_rhs_with(a, b, c, q, eps, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnityVariant {
    A,
    B,
}

/// The full `i`-sum of a unity identity at cutoff `k`, using the point's `eps`.
pub fn unity_lhs(which: UnityVariant, p: &ParamPoint, k: usize) -> Result<Rational, EvalError> {
    match which {
        UnityVariant::A => andrews::unity_a(p, k, 0),
        UnityVariant::B => andrews::unity_b(p, k, 0),
    }
}

fn theorem_family(id: IdentityId) -> Option<(bool, Family)> {
    use IdentityId::*;
    match id {
        ThmA => Some((false, Family::First)),
        ThmB => Some((false, Family::Second)),
        ThmC => Some((true, Family::First)),
        ThmD => Some((true, Family::Second)),
        _ => None,
    }
}

/// The per-`i` summands of a theorem's right-hand side (`eps + 1` entries).
pub fn theorem_terms(id: IdentityId, p: &ParamPoint) -> Result<Vec<Rational>, EvalError> {
    let Some((jain_type, family)) = theorem_family(id) else {
        return Err(EvalError::ConstraintViolated(format!(
            "{id} is not a theorem"
        )));
    };
    if jain_type {
        jain::theorem_terms(p, family, 0)
    } else {
        andrews::theorem_terms(p, family, 0)
    }
}

/// Right-hand side of `thm-a`..`thm-d`.
pub fn thm_rhs(id: IdentityId, p: &ParamPoint) -> Result<Rational, EvalError> {
    Ok(sum(theorem_terms(id, p)?))
}

/// Right-hand side of a corollary, evaluated from its own display.
pub fn cor_rhs(id: IdentityId, p: &ParamPoint) -> Result<Rational, EvalError> {
    use IdentityId::*;
    if !matches!(
        id,
        CorA1 | CorA2 | CorB1 | CorB2 | CorC1 | CorC2 | CorD1 | CorD2
    ) {
        return Err(EvalError::ConstraintViolated(format!(
            "{id} is not a corollary"
        )));
    }
    rhs_eval(id, p)
}

/// The two readings of the fourth theorem's eps=2 corollary left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorD2Lhs {
    /// Upper parameter `q^{-n}` as printed.
    Printed,
    /// Upper parameter `q^{2-n}`, the eps=2 case of Theorem 4.
    Shifted,
}

impl CorD2Lhs {
    pub fn label(self) -> &'static str {
        match self {
            CorD2Lhs::Printed => "q^{-n}",
            CorD2Lhs::Shifted => "q^{2-n}",
        }
    }
}

/// Evaluates one reading of the cor-d2 left-hand side at a point with `n >= 2`.
pub fn cor_d2_lhs_variant(variant: CorD2Lhs, p: &ParamPoint) -> Result<Rational, EvalError> {
    let p = p.with_eps(2);
    IdentityId::CorD2.case().constraints.check(&p)?;
    let top = match variant {
        CorD2Lhs::Printed => 0,
        CorD2Lhs::Shifted => 2,
    };
    phi_eval_checked(&lhs::jain_type_series(&p, top, 2)?, p.q())
}
