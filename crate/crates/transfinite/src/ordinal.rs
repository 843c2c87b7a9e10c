//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An ordinal is a sum `w^e1*c1 + ... + w^ek*ck` with strictly decreasing
//! exponents (themselves ordinals) and positive integer coefficients. The
//! empty sum is zero. Sequence lengths in this crate stay below `w^w`, but
//! the arithmetic is closed below epsilon-zero so carriers such as the
//! ordinal-sum semigroup can hold larger values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Maximum nesting of parenthesized exponents accepted by the parser.
const MAX_PARSE_DEPTH: u32 = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
struct CnfTerm {
    exp: Ordinal,
    coeff: u64,
}

/// An ordinal below epsilon-zero, kept in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<CnfTerm>,
}

/// Zero / successor / limit trichotomy. `Successor` carries the predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalClass {
    Zero,
    Successor(Ordinal),
    Limit,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrdinalError {
    /// `left_subtract(base, total)` needs `base <= total`.
    #[error("cannot left-subtract {base} from the smaller ordinal {total}")]
    SubtrahendTooLarge { base: Ordinal, total: Ordinal },
    /// Omega powers of zero are excluded: sequences are nonempty.
    #[error("omega multiple of zero is undefined")]
    MulOmegaZero,
    /// Operation requires a limit ordinal.
    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),
    /// `div_rem_finite(i, c)` needs `i < c * omega`.
    #[error("{dividend} has no finite quotient by {divisor}")]
    NoFiniteQuotient { dividend: Ordinal, divisor: Ordinal },
    /// A coefficient left the `u64` range.
    #[error("coefficient overflow")]
    CoeffOverflow,
    /// Term list with a zero coefficient or non-decreasing exponents.
    #[error("not a valid Cantor normal form term list")]
    InvalidTerms,
}

/// CNF text parse failure, with the byte offset of the offending input.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct CnfParseError {
    pub pos: usize,
    pub msg: String,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1)
    }

    pub fn from_nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![CnfTerm { exp: Ordinal::zero(), coeff: n }],
            }
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `w^exp` (so `omega_pow(0) = 1`).
    pub fn omega_pow(exp: Ordinal) -> Self {
        Ordinal {
            terms: vec![CnfTerm { exp, coeff: 1 }],
        }
    }

    /// Build from `(exponent, coefficient)` pairs; exponents must strictly
    /// decrease and coefficients must be nonzero.
    pub fn from_terms(pairs: Vec<(Ordinal, u64)>) -> Result<Self, OrdinalError> {
        let mut terms: Vec<CnfTerm> = Vec::with_capacity(pairs.len());
        for (exp, coeff) in pairs {
            if coeff == 0 {
                return Err(OrdinalError::InvalidTerms);
            }
            if let Some(prev) = terms.last() {
                if prev.exp <= exp {
                    return Err(OrdinalError::InvalidTerms);
                }
            }
            terms.push(CnfTerm { exp, coeff });
        }
        Ok(Ordinal { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` when the ordinal is a natural number.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exp.is_zero() => Some(t.coeff),
            _ => None,
        }
    }

    /// Exponent of the leading CNF term; `None` for zero.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exp)
    }

    /// `(exponent, coefficient)` view of the CNF terms, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Ordinal, u64)> {
        self.terms.iter().map(|t| (&t.exp, t.coeff))
    }

    /// Ordinal sum. Terms of `self` below the leading exponent of `rhs` are
    /// absorbed. `None` when a merged coefficient leaves `u64`.
    pub fn checked_add(&self, rhs: &Ordinal) -> Option<Ordinal> {
        let Some(lead) = rhs.terms.first() else {
            return Some(self.clone());
        };
        let mut terms: Vec<CnfTerm> = self
            .terms
            .iter()
            .take_while(|t| t.exp > lead.exp)
            .cloned()
            .collect();
        let boundary = self.terms.get(terms.len());
        let mut rhs_iter = rhs.terms.iter();
        let first = rhs_iter.next().expect("nonzero rhs");
        let merged = match boundary {
            Some(t) if t.exp == lead.exp => t.coeff.checked_add(first.coeff)?,
            _ => first.coeff,
        };
        terms.push(CnfTerm { exp: first.exp.clone(), coeff: merged });
        terms.extend(rhs_iter.cloned());
        Some(Ordinal { terms })
    }

    /// Left-multiply by a natural: `self * n`. Only the leading coefficient
    /// grows; lower terms survive once at the tail. `mul_nat(a, 0) = 0`.
    pub fn checked_mul_nat(&self, n: u64) -> Option<Ordinal> {
        if n == 0 || self.is_zero() {
            return Some(Ordinal::zero());
        }
        let mut terms = self.terms.clone();
        terms[0].coeff = terms[0].coeff.checked_mul(n)?;
        Some(Ordinal { terms })
    }

    /// Panicking variant of [`checked_mul_nat`](Self::checked_mul_nat).
    pub fn mul_nat(&self, n: u64) -> Ordinal {
        self.checked_mul_nat(n).expect("ordinal coefficient overflow")
    }

    /// `self * omega = w^(e+1)` where `e` is the leading exponent; lower
    /// terms are absorbed in the limit. Zero is rejected.
    pub fn mul_omega(&self) -> Result<Ordinal, OrdinalError> {
        let lead = self.terms.first().ok_or(OrdinalError::MulOmegaZero)?;
        Ok(Ordinal::omega_pow(&lead.exp + &Ordinal::one()))
    }

    /// Zero / successor / limit classification. An ordinal is a successor
    /// exactly when its last CNF term has exponent zero.
    pub fn classify(&self) -> OrdinalClass {
        match self.terms.last() {
            None => OrdinalClass::Zero,
            Some(last) if last.exp.is_zero() => {
                let mut terms = self.terms.clone();
                if last.coeff == 1 {
                    terms.pop();
                } else {
                    terms.last_mut().unwrap().coeff -= 1;
                }
                OrdinalClass::Successor(Ordinal { terms })
            }
            Some(_) => OrdinalClass::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.classify(), OrdinalClass::Limit)
    }

    /// `j`-th entry of the canonical increasing sequence converging to a
    /// limit ordinal. Entry 0 is 0. For `a = p + w^(n+1)` entry `j >= 1` is
    /// `p + w^n * j`; for a limit exponent the exponent itself is approximated
    /// recursively. Entries strictly increase and are cofinal in `a`.
    pub fn fundamental_sequence(&self, j: u64) -> Result<Ordinal, OrdinalError> {
        let last = match self.terms.last() {
            Some(t) if !t.exp.is_zero() => t,
            _ => return Err(OrdinalError::NotLimit(self.clone())),
        };
        if j == 0 {
            return Ok(Ordinal::zero());
        }
        // prefix = self with one copy of w^(last.exp) removed
        let mut prefix_terms = self.terms.clone();
        if last.coeff == 1 {
            prefix_terms.pop();
        } else {
            prefix_terms.last_mut().unwrap().coeff -= 1;
        }
        let prefix = Ordinal { terms: prefix_terms };
        let step = match last.exp.classify() {
            OrdinalClass::Successor(e) => Ordinal::omega_pow(e).mul_nat(j),
            OrdinalClass::Limit => Ordinal::omega_pow(last.exp.fundamental_sequence(j)?),
            OrdinalClass::Zero => unreachable!("limit ordinals have nonzero last exponent"),
        };
        Ok(prefix
            .checked_add(&step)
            .expect("fundamental sequence entries stay in range"))
    }
}

/// The unique `r` with `base + r = total`; needs `base <= total`.
pub fn left_subtract(base: &Ordinal, total: &Ordinal) -> Result<Ordinal, OrdinalError> {
    let too_large = || OrdinalError::SubtrahendTooLarge {
        base: base.clone(),
        total: total.clone(),
    };
    let mut i = 0;
    while i < base.terms.len() && i < total.terms.len() && base.terms[i] == total.terms[i] {
        i += 1;
    }
    if i == base.terms.len() {
        // base is a prefix of total; the rest concatenates directly
        return Ok(Ordinal { terms: total.terms[i..].to_vec() });
    }
    if i == total.terms.len() {
        return Err(too_large());
    }
    let (b, t) = (&base.terms[i], &total.terms[i]);
    match b.exp.cmp(&t.exp) {
        Ordering::Greater => Err(too_large()),
        Ordering::Less => Ok(Ordinal { terms: total.terms[i..].to_vec() }),
        Ordering::Equal => {
            if b.coeff >= t.coeff {
                return Err(too_large());
            }
            let mut terms = vec![CnfTerm { exp: t.exp.clone(), coeff: t.coeff - b.coeff }];
            terms.extend_from_slice(&total.terms[i + 1..]);
            Ok(Ordinal { terms })
        }
    }
}

/// Unique `(k, r)` with `dividend = divisor*k + r`, `r < divisor` and `k`
/// finite. Exists exactly when `dividend < divisor * omega`.
pub fn div_rem_finite(
    dividend: &Ordinal,
    divisor: &Ordinal,
) -> Result<(u64, Ordinal), OrdinalError> {
    if divisor.is_zero() {
        return Err(OrdinalError::MulOmegaZero);
    }
    if dividend < divisor {
        return Ok((0, dividend.clone()));
    }
    let d_lead = &dividend.terms[0];
    let c_lead = &divisor.terms[0];
    if d_lead.exp != c_lead.exp {
        // dividend >= divisor rules out a smaller leading exponent
        return Err(OrdinalError::NoFiniteQuotient {
            dividend: dividend.clone(),
            divisor: divisor.clone(),
        });
    }
    let rest = Ordinal { terms: divisor.terms[1..].to_vec() };
    let low = Ordinal { terms: dividend.terms[1..].to_vec() };
    let (n, m) = (d_lead.coeff, c_lead.coeff);
    let (k, p) = (n / m, n % m);
    if p > 0 {
        let mut terms = vec![CnfTerm { exp: c_lead.exp.clone(), coeff: p }];
        terms.extend(low.terms);
        return Ok((k, Ordinal { terms }));
    }
    if low >= rest {
        Ok((k, left_subtract(&rest, &low).expect("low >= rest checked")))
    } else {
        // k >= 2 here: k == 1 with low < rest would mean dividend < divisor
        let mut terms = vec![CnfTerm { exp: c_lead.exp.clone(), coeff: m }];
        terms.extend(low.terms);
        Ok((k - 1, Ordinal { terms }))
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.exp.cmp(&b.exp).then_with(|| a.coeff.cmp(&b.coeff)) {
                Ordering::Equal => continue,
                non_eq => return non_eq,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl std::ops::Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.checked_add(rhs).expect("ordinal coefficient overflow")
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match t.exp.as_nat() {
                Some(0) => write!(f, "{}", t.coeff)?,
                Some(1) => {
                    f.write_str("w")?;
                    if t.coeff > 1 {
                        write!(f, "*{}", t.coeff)?;
                    }
                }
                Some(k) => {
                    write!(f, "w^{k}")?;
                    if t.coeff > 1 {
                        write!(f, "*{}", t.coeff)?;
                    }
                }
                None => {
                    write!(f, "w^({})", t.exp)?;
                    if t.coeff > 1 {
                        write!(f, "*{}", t.coeff)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

impl FromStr for Ordinal {
    type Err = CnfParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = CnfParser { bytes: s.as_bytes(), pos: 0, depth: 0 };
        let o = p.sum()?;
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(o)
    }
}

struct CnfParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    depth: u32,
}

enum TermParse {
    /// The literal `0`; valid only as a whole sum.
    ZeroLiteral,
    Term(Ordinal, u64),
}

impl<'a> CnfParser<'a> {
    fn err(&self, msg: impl Into<String>) -> CnfParseError {
        CnfParseError { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Ordinal, CnfParseError> {
        let first = self.term()?;
        let (exp, coeff) = match first {
            TermParse::ZeroLiteral => return Ok(Ordinal::zero()),
            TermParse::Term(e, c) => (e, c),
        };
        let mut terms = vec![CnfTerm { exp, coeff }];
        while self.bytes[self.pos..].starts_with(b" + ") {
            self.pos += 3;
            let at = self.pos;
            match self.term()? {
                TermParse::ZeroLiteral => {
                    self.pos = at;
                    return Err(self.err("zero is not a summand"));
                }
                TermParse::Term(exp, coeff) => {
                    if terms.last().unwrap().exp <= exp {
                        self.pos = at;
                        return Err(self.err("exponents must strictly decrease"));
                    }
                    terms.push(CnfTerm { exp, coeff });
                }
            }
        }
        Ok(Ordinal { terms })
    }

    fn term(&mut self) -> Result<TermParse, CnfParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.nat()?;
                if n == 0 {
                    Ok(TermParse::ZeroLiteral)
                } else {
                    Ok(TermParse::Term(Ordinal::zero(), n))
                }
            }
            Some(b'w') => {
                self.pos += 1;
                let mut exp = Ordinal::one();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = self.exponent()?;
                }
                let mut coeff = 1;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    let at = self.pos;
                    coeff = self.nat()?;
                    if coeff == 0 {
                        self.pos = at;
                        return Err(self.err("zero coefficient"));
                    }
                    if coeff == 1 {
                        self.pos = at;
                        return Err(self.err("coefficient 1 is implicit; drop `*1`"));
                    }
                }
                Ok(TermParse::Term(exp, coeff))
            }
            _ => Err(self.err("expected a term (`w...` or a natural)")),
        }
    }

    fn exponent(&mut self) -> Result<Ordinal, CnfParseError> {
        match self.peek() {
            Some(b'(') => {
                self.depth += 1;
                if self.depth > MAX_PARSE_DEPTH {
                    return Err(self.err("exponent nesting too deep"));
                }
                self.pos += 1;
                let at = self.pos;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                self.depth -= 1;
                if e.is_zero() {
                    self.pos = at;
                    return Err(self.err("zero exponent: write a plain natural instead"));
                }
                Ok(e)
            }
            Some(b'0'..=b'9') => {
                let at = self.pos;
                let k = self.nat()?;
                if k == 0 {
                    self.pos = at;
                    return Err(self.err("zero exponent: write a plain natural instead"));
                }
                Ok(Ordinal::from_nat(k))
            }
            _ => Err(self.err("expected an exponent (natural or `(...)`)")),
        }
    }

    fn nat(&mut self) -> Result<u64, CnfParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let digits = &self.bytes[start..self.pos];
        debug_assert!(!digits.is_empty());
        if digits.len() > 1 && digits[0] == b'0' {
            self.pos = start;
            return Err(self.err("leading zeros are not canonical"));
        }
        let mut n: u64 = 0;
        for &d in digits {
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| CnfParseError { pos: start, msg: "number too large".into() })?;
        }
        Ok(n)
    }
}
