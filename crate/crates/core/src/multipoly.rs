//! Sparse multivariate polynomials over the integers with variables indexed
//! by primes: the codomain of the correspondence mapping Dirichlet indices to
//! monomials, and the arena where irreducibility arguments run.
//!
//! Only the machinery the verification pipeline needs is provided: ring
//! arithmetic, gcd by primitive pseudo-remainder sequences, perfect-power
//! detection, binomial and linear-in-one-variable shape analysis, and a
//! bounded exhaustive factor search. Full multivariate factorization is
//! deliberately absent.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector: finitely many primes with exponents >= 1, sorted by
/// prime. The empty vector is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: Vec<(u64, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { vars: Vec::new() }
    }

    pub fn var(prime: u64, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                vars: vec![(prime, exp)],
            }
        }
    }

    pub fn from_pairs(mut pairs: Vec<(u64, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial { vars: pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.vars
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn exp_of(&self, prime: u64) -> u32 {
        self.vars
            .iter()
            .find(|&&(p, _)| p == prime)
            .map_or(0, |&(_, e)| e)
    }

    pub fn total_degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() || j < other.vars.len() {
            match (self.vars.get(i), other.vars.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    out.push((p, e + f));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, e)), Some(&(q, _))) if p < q => {
                    out.push((p, e));
                    i += 1;
                }
                (Some(_), Some(&(q, f))) => {
                    out.push((q, f));
                    j += 1;
                }
                (Some(&(p, e)), None) => {
                    out.push((p, e));
                    i += 1;
                }
                (None, Some(&(q, f))) => {
                    out.push((q, f));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { vars: out }
    }

    /// Exact division, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.vars.len());
        let mut j = 0;
        for &(p, e) in &self.vars {
            let mut e = e;
            while j < other.vars.len() && other.vars[j].0 < p {
                return None; // divisor has a variable self lacks
            }
            if j < other.vars.len() && other.vars[j].0 == p {
                let f = other.vars[j].1;
                if f > e {
                    return None;
                }
                e -= f;
                j += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        if j < other.vars.len() {
            return None;
        }
        Some(Monomial { vars: out })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            vars: self.vars.iter().map(|&(p, e)| (p, e * k)).collect(),
        }
    }
}

/// Lexicographic term order giving smaller primes higher priority: at the
/// smallest prime where exponents differ, the larger exponent wins. This is
/// multiplicative with the constant monomial as minimum, as a division-based
/// algorithm requires.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.vars.get(i), other.vars.get(j)) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(&(p, e)), Some(&(q, f))) => {
                    if p == q {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    } else if p < q {
                        // self has a positive exponent at the smaller prime
                        return std::cmp::Ordering::Greater;
                    } else {
                        return std::cmp::Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the integers. No zero coefficients
/// are stored; equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(prime: u64) -> MultiPoly {
        MultiPoly::from_term(Monomial::var(prime, 1), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, BigInt)>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in pairs {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| c.magnitude().is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest term under the term order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Smallest term under the term order.
    pub fn trailing(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn divide_by_content(&self) -> MultiPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v / &c))
                .collect(),
        }
    }

    /// Sorted primes occurring as variables.
    pub fn variables(&self) -> Vec<u64> {
        let mut vars: Vec<u64> = Vec::new();
        for m in self.terms.keys() {
            for &(p, _) in m.pairs() {
                if !vars.contains(&p) {
                    vars.push(p);
                }
            }
        }
        vars.sort_unstable();
        vars
    }

    pub fn degree_in(&self, prime: u64) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exp_of(prime))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Coefficients as a polynomial in `x_prime`, ascending by power.
    /// Index `k` holds the coefficient of `x_prime^k`.
    pub fn as_univariate(&self, prime: u64) -> Vec<MultiPoly> {
        let deg = self.degree_in(prime) as usize;
        let mut coeffs = vec![MultiPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp_of(prime) as usize;
            let rest = m.div(&Monomial::var(prime, e as u32)).unwrap();
            coeffs[e].add_term(rest, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(prime: u64, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_term(&Monomial::var(prime, k as u32), &BigInt::one()));
        }
        out
    }

    /// Exact polynomial division; `None` if `divisor` does not divide `self`
    /// over the integers.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(&dm)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let term = MultiPoly::from_term(qm, qc);
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Substitute an integer for every variable.
    pub fn eval(&self, assign: &BTreeMap<u64, BigInt>) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(p, e) in m.pairs() {
                let x = assign.get(&p).expect("assignment covers all variables");
                v *= x.pow(e);
            }
            total += v;
        }
        total
    }

    /// Flip sign so the leading coefficient under the term order is positive.
    pub fn normalize_sign(&self) -> MultiPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                let mut first = !mag.is_one();
                if first {
                    write!(f, "{mag}")?;
                }
                for &(p, e) in m.pairs() {
                    if first {
                        write!(f, "*")?;
                    }
                    first = true;
                    if e == 1 {
                        write!(f, "x{p}")?;
                    } else {
                        write!(f, "x{p}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// gcd by primitive pseudo-remainder sequences
// ---------------------------------------------------------------------------

/// Content of `f` viewed as a polynomial in `x_prime`: the gcd of its
/// coefficient polynomials.
fn content_in(f: &MultiPoly, prime: u64) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in f.as_univariate(prime) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` with respect to `x_prime`; requires
/// `deg(b) >= 1` in that variable.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, prime: u64) -> MultiPoly {
    let db = b.degree_in(prime);
    let b_coeffs = b.as_univariate(prime);
    let lb = b_coeffs[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(prime) >= db {
        let dr = r.degree_in(prime);
        let r_coeffs = r.as_univariate(prime);
        let lr = r_coeffs[dr as usize].clone();
        let shift = Monomial::var(prime, dr - db);
        // r <- lb*r - lr*x^(dr-db)*b kills the leading term in x_prime.
        r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&shift, &BigInt::one()));
    }
    r
}

/// Greatest common divisor, sign-normalized so the leading coefficient under
/// the term order is positive. `gcd(f, 0)` is the normalized `f`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.normalize_sign();
    }
    if g.is_zero() {
        return f.normalize_sign();
    }
    if let Some(c) = f.as_constant() {
        return MultiPoly::constant(c.gcd(&g.content()));
    }
    if let Some(c) = g.as_constant() {
        return MultiPoly::constant(c.gcd(&f.content()));
    }
    // Recurse on the lowest-indexed variable present.
    let v = *f
        .variables()
        .iter()
        .chain(g.variables().iter())
        .min()
        .unwrap();
    let fc = content_in(f, v);
    let gc = content_in(g, v);
    let cont = gcd(&fc, &gc);
    let mut a = f.divide_exact(&fc).expect("content divides");
    let mut b = g.divide_exact(&gc).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree_in(v) == 0 {
            // A v-free divisor of a v-primitive polynomial is a unit.
            a = MultiPoly::one();
            break;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            let rc = content_in(&r, v);
            r.divide_exact(&rc).expect("content divides")
        };
    }
    let result = cont.mul(&a).normalize_sign();
    debug_assert!(
        f.divide_exact(&result).is_some() && g.divide_exact(&result).is_some(),
        "gcd must divide both arguments"
    );
    result
}

// ---------------------------------------------------------------------------
// perfect powers
// ---------------------------------------------------------------------------

/// Exact integer k-th root, honoring sign for odd k.
fn integer_kth_root(c: &BigInt, k: u32) -> Option<BigInt> {
    if c.is_zero() {
        return Some(BigInt::zero());
    }
    if c.is_negative() && k % 2 == 0 {
        return None;
    }
    let mag = c.magnitude().nth_root(k);
    let root = BigInt::from(mag);
    let signed = if c.is_negative() { -root } else { root };
    if signed.pow(k) == *c {
        Some(signed)
    } else {
        None
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Try to extract a k-th root of `f` by leading-term recursion; verified by
/// exact re-expansion.
fn kth_root(f: &MultiPoly, k: u32) -> Option<MultiPoly> {
    let (lm, lc) = f.leading()?;
    if lm.pairs().iter().any(|&(_, e)| e % k != 0) {
        return None;
    }
    let root_m = Monomial::from_pairs(lm.pairs().iter().map(|&(p, e)| (p, e / k)).collect());
    let root_c = integer_kth_root(lc, k)?;
    let mut g = MultiPoly::from_term(root_m, root_c);
    // Each recovered term is strictly smaller in the term order, so this
    // terminates; cap iterations defensively anyway.
    for _ in 0..(f.num_terms() as u32 * k + 64) {
        let diff = f.sub(&g.pow(k));
        if diff.is_zero() {
            return Some(g);
        }
        let (dm, dc) = diff.leading().unwrap();
        let (gm, gc) = g.leading().unwrap();
        let denom_m = gm.pow(k - 1);
        let denom_c = gc.pow(k - 1) * BigInt::from(k);
        let tm = dm.div(&denom_m)?;
        let (tc, rem) = dc.div_rem(&denom_c);
        if !rem.is_zero() || tc.is_zero() {
            return None;
        }
        let term = MultiPoly::from_term(tm.clone(), tc);
        // The update must strictly reduce the leading term of the defect.
        if g.leading().map(|(m, _)| m.clone()) < Some(tm) {
            return None;
        }
        g = g.add(&term);
    }
    None
}

/// Whether `f = g^k` for some `k >= 2`; returns such a pair if so.
pub fn is_perfect_power(f: &MultiPoly) -> Option<(MultiPoly, u32)> {
    if f.is_zero() {
        return None;
    }
    if let Some(c) = f.as_constant() {
        if c.magnitude().is_one() {
            return None;
        }
        let bits = c.magnitude().bits() as u32;
        for k in 2..=bits.max(2) {
            if let Some(r) = integer_kth_root(&c, k) {
                return Some((MultiPoly::constant(r), k));
            }
        }
        return None;
    }
    // k must divide every exponent of the extreme terms and the content must
    // be a k-th power.
    let (lm, _) = f.leading().unwrap();
    let (tm, _) = f.trailing().unwrap();
    let mut g = 0u32;
    for &(_, e) in lm.pairs().iter().chain(tm.pairs().iter()) {
        g = gcd_u32(g, e);
    }
    let bound = if tm.is_one() {
        // Constant trailing term: k must still divide the leading exponents.
        lm.pairs().iter().map(|&(_, e)| e).fold(0, gcd_u32)
    } else {
        g
    };
    if bound < 2 {
        return None;
    }
    for k in 2..=bound {
        if bound % k != 0 {
            continue;
        }
        if let Some(root) = kth_root(f, k) {
            return Some((root, k));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// shape analysis for the irreducibility strategies
// ---------------------------------------------------------------------------

/// Matches `f = 1 - a*x_r^m` with `a` free of `x_r` and `m >= 1`.
pub fn binomial_form(f: &MultiPoly, r: u64) -> Option<(MultiPoly, u32)> {
    if !f.constant_term().is_one() {
        return None;
    }
    let mut m: Option<u32> = None;
    let mut a = MultiPoly::zero();
    for (mono, c) in f.terms() {
        if mono.is_one() {
            continue;
        }
        let e = mono.exp_of(r);
        if e == 0 {
            return None;
        }
        match m {
            None => m = Some(e),
            Some(prev) if prev != e => return None,
            _ => {}
        }
        let rest = mono.div(&Monomial::var(r, e)).unwrap();
        a.add_term(rest, -c.clone());
    }
    m.map(|m| (a, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearVerdict {
    /// Content is 1 and the two coefficient polynomials are coprime.
    Irreducible,
    /// A non-unit common factor (the stored witness) divides the polynomial.
    Reducible { witness: MultiPoly },
    /// The polynomial does not have degree exactly 1 in the variable.
    Inapplicable,
}

/// Decide irreducibility of `f = A + B*x_r` (degree exactly 1 in `x_r`):
/// irreducible iff `content(f) = 1` and `gcd(A, B) = 1`. Any factorization
/// would have an `x_r`-free factor dividing both `A` and `B`.
pub fn linear_variable_irreducible(f: &MultiPoly, r: u64) -> LinearVerdict {
    if f.degree_in(r) != 1 {
        return LinearVerdict::Inapplicable;
    }
    let coeffs = f.as_univariate(r);
    let a = &coeffs[0];
    let b = &coeffs[1];
    let content = f.content();
    if content > BigInt::one() {
        return LinearVerdict::Reducible {
            witness: MultiPoly::constant(content),
        };
    }
    let d = gcd(a, b);
    if d.is_unit() {
        LinearVerdict::Irreducible
    } else {
        LinearVerdict::Reducible { witness: d }
    }
}

// ---------------------------------------------------------------------------
// bounded exhaustive factor search (oracle)
// ---------------------------------------------------------------------------

/// Exhaustive search for a factorization `f = g*h` into non-units where `g`
/// has at most `max_terms` terms drawn from the degree box of `f` and
/// coefficients bounded by `coeff_bound` in absolute value.
///
/// Complete only within those bounds; used as an independent oracle, not as
/// a proof of irreducibility.
pub fn factor_search_small_support(
    f: &MultiPoly,
    max_terms: usize,
    coeff_bound: i64,
) -> Option<(MultiPoly, MultiPoly)> {
    if f.is_zero() || f.is_unit() {
        return None;
    }
    let content = f.content();
    let prim = f.divide_by_content();
    if content > BigInt::one() && !prim.is_unit() {
        return Some((MultiPoly::constant(content), prim));
    }
    // Monomial universe: the degree box of f.
    let vars = f.variables();
    let mut universe = vec![Monomial::one()];
    for &v in &vars {
        let d = f.degree_in(v);
        let mut next = Vec::new();
        for m in &universe {
            for e in 0..=d {
                next.push(m.mul(&Monomial::var(v, e)));
            }
        }
        universe = next;
    }
    universe.sort();
    universe.dedup();
    // Enumerate supports of size 1..=max_terms and coefficient vectors.
    let mut support = Vec::new();
    search_supports(f, &universe, 0, &mut support, max_terms, coeff_bound)
}

fn search_supports(
    f: &MultiPoly,
    universe: &[Monomial],
    start: usize,
    support: &mut Vec<Monomial>,
    max_terms: usize,
    coeff_bound: i64,
) -> Option<(MultiPoly, MultiPoly)> {
    if !support.is_empty() {
        if let Some(found) = try_coefficients(f, support, coeff_bound) {
            return Some(found);
        }
    }
    if support.len() == max_terms {
        return None;
    }
    for i in start..universe.len() {
        support.push(universe[i].clone());
        if let Some(found) = search_supports(f, universe, i + 1, support, max_terms, coeff_bound) {
            support.pop();
            return Some(found);
        }
        support.pop();
    }
    None
}

fn try_coefficients(
    f: &MultiPoly,
    support: &[Monomial],
    coeff_bound: i64,
) -> Option<(MultiPoly, MultiPoly)> {
    let k = support.len();
    let mut coeffs = vec![-coeff_bound; k];
    loop {
        if coeffs.iter().all(|&c| c != 0) {
            let g = MultiPoly::from_terms(
                support
                    .iter()
                    .cloned()
                    .zip(coeffs.iter().map(|&c| BigInt::from(c))),
            );
            if !g.is_unit() && g.as_constant().is_none() {
                if let Some(h) = f.divide_exact(&g) {
                    if !h.is_unit() {
                        return Some((g, h));
                    }
                }
            }
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            if coeffs[i] < coeff_bound {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = -coeff_bound;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(p: u64) -> MultiPoly {
        MultiPoly::var(p)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(n))
    }

    #[test]
    fn ring_arithmetic_examples() {
        let one = MultiPoly::one();
        // (1 + x2)(1 - x2) = 1 - x2^2
        let lhs = one.add(&x(2)).mul(&one.sub(&x(2)));
        let expected = one.sub(&x(2).mul(&x(2)));
        assert_eq!(lhs, expected);
        // f + (-f) = 0
        let f = c(3).mul(&x(5)).add(&one);
        assert!(f.add(&f.neg()).is_zero());
        // (1 - x2)(1 - 3x3) = 1 - x2 - 3x3 + 3x2x3
        let lhs = one.sub(&x(2)).mul(&one.sub(&c(3).mul(&x(3))));
        let expected = MultiPoly::from_terms(vec![
            (Monomial::one(), BigInt::from(1)),
            (Monomial::var(2, 1), BigInt::from(-1)),
            (Monomial::var(3, 1), BigInt::from(-3)),
            (Monomial::from_pairs(vec![(2, 1), (3, 1)]), BigInt::from(3)),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn gcd_examples() {
        assert!(gcd(&x(2), &x(3)).is_one());
        let f = MultiPoly::one().sub(&x(2));
        let g = MultiPoly::one().add(&x(3));
        let prod = f.mul(&g);
        assert_eq!(gcd(&prod, &f), f.neg().normalize_sign());
        assert!(gcd(&f, &MultiPoly::one()).is_one());
        // gcd(f, 0) = normalized f
        assert_eq!(gcd(&f, &MultiPoly::zero()), f.normalize_sign());
        assert_eq!(gcd(&f, &MultiPoly::zero()).leading().unwrap().1, &BigInt::from(1));
    }

    #[test]
    fn gcd_divides_and_scales() {
        let f = x(2).add(&c(2)).mul(&x(3).sub(&c(1)));
        let g = x(2).add(&c(2)).mul(&x(5).add(&c(4)));
        let d = gcd(&f, &g);
        assert!(f.divide_exact(&d).is_some());
        assert!(g.divide_exact(&d).is_some());
        assert_eq!(d, x(2).add(&c(2)));
    }

    #[test]
    fn perfect_power_examples() {
        // 4 x2^2 = (2 x2)^2
        let f = c(4).mul(&x(2)).mul(&x(2));
        let (g, k) = is_perfect_power(&f).unwrap();
        assert_eq!(k, 2);
        assert_eq!(g.pow(k), f);
        // 1 + x2 is not a power
        assert!(is_perfect_power(&MultiPoly::one().add(&x(2))).is_none());
        // x2^3 x3^3 = (x2 x3)^3
        let f = x(2).pow(3).mul(&x(3).pow(3));
        let (g, k) = is_perfect_power(&f).unwrap();
        assert_eq!(g.pow(k), f);
        assert_eq!(k, 3);
        // constants
        assert_eq!(is_perfect_power(&c(64)).map(|(g, k)| (g, k)).unwrap().0.pow(2), c(64));
        assert!(is_perfect_power(&c(6)).is_none());
        let (g, k) = is_perfect_power(&c(-8)).unwrap();
        assert_eq!(g.pow(k), c(-8));
        // (1 + 2 x2 + x2^2) = (1 + x2)^2
        let sq = MultiPoly::one().add(&x(2)).pow(2);
        let (g, k) = is_perfect_power(&sq).unwrap();
        assert_eq!(k, 2);
        assert_eq!(g.pow(2), sq);
    }

    #[test]
    fn binomial_form_examples() {
        // 1 - 6 x2 x7, r = 7 -> (6 x2, 1)
        let f = MultiPoly::one().sub(&c(6).mul(&x(2)).mul(&x(7)));
        let (a, m) = binomial_form(&f, 7).unwrap();
        assert_eq!(m, 1);
        assert_eq!(a, c(6).mul(&x(2)));
        // 1 - 22 x11 - 12 x2^2 x3 at r = 3: the x11 term has x3-degree 0
        let f = MultiPoly::one()
            .sub(&c(22).mul(&x(11)))
            .sub(&c(12).mul(&x(2).pow(2)).mul(&x(3)));
        assert!(binomial_form(&f, 3).is_none());
        // constant
        assert!(binomial_form(&MultiPoly::one(), 5).is_none());
    }

    #[test]
    fn linear_variable_examples() {
        // x2 + x3 at r = 2: A = x3, B = 1
        assert_eq!(
            linear_variable_irreducible(&x(2).add(&x(3)), 2),
            LinearVerdict::Irreducible
        );
        // 2 + 2 x2: content 2
        let f = c(2).add(&c(2).mul(&x(2)));
        match linear_variable_irreducible(&f, 2) {
            LinearVerdict::Reducible { witness } => assert_eq!(witness, c(2)),
            v => panic!("expected reducible, got {v:?}"),
        }
        // (1 - x3) + (1 - x3) x2: witness 1 - x3
        let a = MultiPoly::one().sub(&x(3));
        let f = a.add(&a.mul(&x(2)));
        match linear_variable_irreducible(&f, 2) {
            LinearVerdict::Reducible { witness } => {
                assert!(a.divide_exact(&witness).is_some());
                assert!(!witness.is_unit());
            }
            v => panic!("expected reducible, got {v:?}"),
        }
        // degree 2 in the variable
        assert_eq!(
            linear_variable_irreducible(&x(2).pow(2).add(&x(3)), 2),
            LinearVerdict::Inapplicable
        );
    }

    #[test]
    fn factor_search_finds_small_products() {
        let f = MultiPoly::one().sub(&c(2).mul(&x(2)));
        let g = MultiPoly::one().add(&c(2).mul(&x(2)));
        let prod = f.mul(&g);
        let (a, b) = factor_search_small_support(&prod, 2, 3).unwrap();
        assert_eq!(a.mul(&b), prod);
        assert!(!a.is_unit() && !b.is_unit());
        // x2 + x3 is irreducible: nothing within generous bounds
        assert!(factor_search_small_support(&x(2).add(&x(3)), 3, 4).is_none());
    }

    #[test]
    fn divide_exact_roundtrip() {
        let f = x(2).add(&c(3)).mul(&x(3).sub(&c(5)));
        let q = f.divide_exact(&x(2).add(&c(3))).unwrap();
        assert_eq!(q, x(3).sub(&c(5)));
        assert!(f.divide_exact(&x(5)).is_none());
    }

    #[test]
    fn display_is_deterministic() {
        let f = MultiPoly::one()
            .sub(&c(22).mul(&x(11)))
            .sub(&c(12).mul(&x(2).pow(2)).mul(&x(3)));
        assert_eq!(f.to_string(), "1 - 22*x11 - 12*x2^2*x3");
    }
}
