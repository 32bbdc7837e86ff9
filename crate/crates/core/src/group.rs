//! Permutation-group kernel: deterministic stabilizer chains (order,
//! membership, uniform sampling) and the group constructors used by the rest
//! of the engine: PSL(2,p), PGL(2,p), SL(2,p), alternating/symmetric/cyclic
//! groups, direct products, wreath products, and quotients by normal
//! subgroups.

use crate::elements::ElementTable;
use crate::numtheory;
use crate::perm::Perm;
use crate::{Bounds, Error, Result};
use rand::Rng;
use std::sync::OnceLock;

/// One level of a stabilizer chain: the chosen base point, the generators of
/// the current stabilizer, and a transversal `transversal[p]` mapping the base
/// point to `p`.
#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base as usize] = Some(Perm::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            i += 1;
            let t_p = self.transversal[p as usize].clone().unwrap();
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q as usize].is_none() {
                    self.transversal[q as usize] = Some(t_p.compose(g));
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// Deterministic Schreier-Sims stabilizer chain. Base points are always the
/// smallest moved point of the offending residue, generators are processed in
/// insertion order, so identical generator lists produce identical chains.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, gens: &[Perm]) -> Result<StabChain> {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
            let (residue, level) = chain.strip_from(0, g.clone());
            chain.extend_level(level, residue);
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|lv| lv.orbit.len() as u128)
            .product()
    }

    /// Sift `g` starting at `level`; returns the residue and the level at
    /// which sifting stopped.
    fn strip_from(&self, level: usize, mut g: Perm) -> (Perm, usize) {
        let mut i = level;
        while i < self.levels.len() {
            if g.is_identity() {
                return (g, i);
            }
            let lv = &self.levels[i];
            let p = g.apply(lv.base);
            match &lv.transversal[p as usize] {
                Some(t) => g = g.compose(&t.inverse()),
                None => return (g, i),
            }
            i += 1;
        }
        (g, i)
    }

    /// Install `g` (which stabilizes the base prefix up to `level`) and
    /// restore the Schreier invariant below.
    fn extend_level(&mut self, level: usize, g: Perm) {
        if g.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base = g.smallest_moved().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, base));
        }
        if self.levels[level].gens.contains(&g) {
            return;
        }
        self.levels[level].gens.push(g);
        self.levels[level].recompute_orbit(self.degree);

        // Every Schreier generator of this level must sift to the identity
        // through the deeper levels.
        let orbit = self.levels[level].orbit.clone();
        let gens = self.levels[level].gens.clone();
        for &p in &orbit {
            let t_p = self.levels[level].transversal[p as usize]
                .clone()
                .unwrap();
            for h in &gens {
                let q = h.apply(p);
                let t_q = self.levels[level].transversal[q as usize]
                    .clone()
                    .unwrap();
                let schreier = t_p.compose(h).compose(&t_q.inverse());
                let (residue, lvl) = self.strip_from(level + 1, schreier);
                if !residue.is_identity() {
                    self.extend_level(lvl.max(level + 1), residue);
                }
            }
        }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.strip_from(0, g.clone());
        residue.is_identity()
    }

    /// Exactly uniform random element: one uniform transversal pick per level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for lv in self.levels.iter().rev() {
            let p = lv.orbit[rng.gen_range(0..lv.orbit.len())];
            let t = lv.transversal[p as usize].as_ref().unwrap();
            acc = acc.compose(t);
        }
        acc
    }

    /// All group elements, identity first, in chain order. The caller is
    /// responsible for size checks.
    pub fn enumerate(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for lv in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * lv.orbit.len());
            for e in &elems {
                for &p in &lv.orbit {
                    next.push(e.compose(lv.transversal[p as usize].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        elems
    }
}

/// A finite permutation group with a verified stabilizer chain.
///
/// Immutable after construction; the dense element table (used by lattice
/// machinery) is built lazily and cached.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    name: Option<String>,
    table: OnceLock<ElementTable>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: self.chain.clone(),
            name: self.name.clone(),
            table: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Build a group from generators sharing one degree.
    pub fn from_gens(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        let mut clean = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
            if !g.is_identity() && !clean.contains(&g) {
                clean.push(g);
            }
        }
        let chain = StabChain::build(degree, &clean)?;
        Ok(PermGroup {
            degree,
            gens: clean,
            chain,
            name: None,
            table: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_gens(degree, vec![]).expect("trivial group")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> PermGroup {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        self.chain.random_element(rng)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Dense element table, built on first use. Refuses groups larger than
    /// the enumeration bound.
    pub fn table(&self, bounds: &Bounds) -> Result<&ElementTable> {
        if self.order() > bounds.enumeration {
            return Err(Error::SizeRefusal {
                order: self.order(),
                bound: bounds.enumeration,
                what: "element enumeration",
            });
        }
        Ok(self
            .table
            .get_or_init(|| ElementTable::build(&self.chain, &self.gens)))
    }

    /// True iff some element has order equal to the group order. Requires the
    /// element table.
    pub fn is_cyclic(&self, bounds: &Bounds) -> Result<bool> {
        let order = self.order();
        if order == 1 {
            return Ok(true);
        }
        let table = self.table(bounds)?;
        Ok((0..table.len()).any(|i| table.order_of(i as u32) as u128 == order))
    }
}

/// Greedily pick a small generating set from `candidates` for the group they
/// generate, in candidate order.
pub fn reduce_generators(degree: usize, candidates: &[Perm]) -> Result<Vec<Perm>> {
    let full = StabChain::build(degree, candidates)?;
    let target = full.order();
    let mut gens: Vec<Perm> = Vec::new();
    let mut chain = StabChain::build(degree, &[])?;
    for c in candidates {
        if chain.order() == target {
            break;
        }
        if !chain.contains(c) {
            gens.push(c.clone());
            chain = StabChain::build(degree, &gens)?;
        }
    }
    Ok(gens)
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

pub fn cyclic(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1).with_name("C1");
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let g = Perm::from_cycles(n, &[cycle]).unwrap();
    PermGroup::from_gens(n, vec![g])
        .unwrap()
        .with_name(format!("C{n}"))
}

/// Dihedral group of order `2n` acting on `n` points, `n >= 3`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidInput("dihedral requires n >= 3".into()));
    }
    let r = Perm::from_cycles(n, &[(0..n as u32).collect()])?;
    let s = Perm::from_images((0..n as u32).map(|x| (n as u32 - x) % n as u32).collect())?;
    let g = PermGroup::from_gens(n, vec![r, s])?.with_name(format!("D{n}"));
    debug_assert_eq!(g.order(), 2 * n as u128);
    Ok(g)
}

pub fn symmetric(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(n.max(1)).with_name(format!("Sym({n})"));
    }
    let swap = Perm::from_cycles(n, &[vec![0, 1]]).unwrap();
    let cycle = Perm::from_cycles(n, &[(0..n as u32).collect()]).unwrap();
    PermGroup::from_gens(n, vec![swap, cycle])
        .unwrap()
        .with_name(format!("Sym({n})"))
}

pub fn alternating(n: usize) -> PermGroup {
    if n <= 2 {
        return PermGroup::trivial(n.max(1)).with_name(format!("Alt({n})"));
    }
    let three = Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
    let long = if n % 2 == 1 {
        Perm::from_cycles(n, &[(0..n as u32).collect()]).unwrap()
    } else {
        Perm::from_cycles(n, &[(1..n as u32).collect()]).unwrap()
    };
    let g = PermGroup::from_gens(n, vec![three, long])
        .unwrap()
        .with_name(format!("Alt({n})"));
    debug_assert_eq!(g.order(), (1..=n as u128).product::<u128>() / 2);
    g
}

/// Quaternion group of order 8 in its regular action.
/// Points: 1, -1, i, -i, j, -j, k, -k in that order.
pub fn quaternion8() -> PermGroup {
    let ri = Perm::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap();
    let rj = Perm::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap();
    let g = PermGroup::from_gens(8, vec![ri, rj])
        .unwrap()
        .with_name("Q8");
    debug_assert_eq!(g.order(), 8);
    g
}

/// SL(2,p) acting on the nonzero vectors of F_p^2.
pub fn sl2(p: u64) -> Result<PermGroup> {
    if !numtheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let degree = (p * p - 1) as usize;
    let idx = |a: u64, b: u64| -> u32 { (a * p + b - 1) as u32 };
    let mut e12 = vec![0u32; degree];
    let mut e21 = vec![0u32; degree];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            // Row vectors acted on the right by [[1,1],[0,1]] and [[1,0],[1,1]].
            e12[idx(a, b) as usize] = idx(a, (a + b) % p);
            e21[idx(a, b) as usize] = idx((a + b) % p, b);
        }
    }
    let g = PermGroup::from_gens(
        degree,
        vec![Perm::from_images(e12)?, Perm::from_images(e21)?],
    )?
    .with_name(format!("SL(2,{p})"));
    if g.order() != (p as u128) * ((p * p - 1) as u128) {
        return Err(Error::Internal(format!("SL(2,{p}) order mismatch")));
    }
    Ok(g)
}

fn projective_line_gens(p: u64, multiplier: u64) -> Result<Vec<Perm>> {
    let degree = (p + 1) as usize;
    let inf = p as u32;
    // z -> z + 1
    let mut u = vec![0u32; degree];
    for z in 0..p {
        u[z as usize] = ((z + 1) % p) as u32;
    }
    u[inf as usize] = inf;
    // z -> c z
    let mut d = vec![0u32; degree];
    for z in 0..p {
        d[z as usize] = ((multiplier * z) % p) as u32;
    }
    d[inf as usize] = inf;
    // z -> -1/z
    let mut w = vec![0u32; degree];
    w[0] = inf;
    w[inf as usize] = 0;
    for z in 1..p {
        let inv = numtheory::pow_mod(z, p - 2, p);
        w[z as usize] = ((p - inv) % p) as u32;
    }
    Ok(vec![
        Perm::from_images(u)?,
        Perm::from_images(d)?,
        Perm::from_images(w)?,
    ])
}

/// PSL(2,p) acting on the projective line, `p >= 5` prime. Generators are
/// z -> z+1, z -> c z with c a generator of the squares, and z -> -1/z.
pub fn psl2(p: u64) -> Result<PermGroup> {
    if !numtheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidInput("psl2 requires p >= 5".into()));
    }
    let root = numtheory::primitive_root_mod(p)?;
    let gens = projective_line_gens(p, (root * root) % p)?;
    let g = PermGroup::from_gens((p + 1) as usize, gens)?.with_name(format!("PSL(2,{p})"));
    let expect = (p as u128) * ((p * p - 1) as u128) / 2;
    if g.order() != expect {
        return Err(Error::Internal(format!("PSL(2,{p}) order mismatch")));
    }
    Ok(g)
}

/// PGL(2,p) acting on the projective line, `p >= 5` prime.
pub fn pgl2(p: u64) -> Result<PermGroup> {
    if !numtheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidInput("pgl2 requires p >= 5".into()));
    }
    let root = numtheory::primitive_root_mod(p)?;
    let gens = projective_line_gens(p, root)?;
    let g = PermGroup::from_gens((p + 1) as usize, gens)?.with_name(format!("PGL(2,{p})"));
    let expect = (p as u128) * ((p * p - 1) as u128);
    if g.order() != expect {
        return Err(Error::Internal(format!("PGL(2,{p}) order mismatch")));
    }
    Ok(g)
}

/// PGL(2,p) together with generators of its PSL(2,p) subgroup on the same
/// points.
pub fn pgl2_with_psl2(p: u64) -> Result<(PermGroup, Vec<Perm>)> {
    let pgl = pgl2(p)?;
    let root = numtheory::primitive_root_mod(p)?;
    let psl_gens = projective_line_gens(p, (root * root) % p)?;
    debug_assert!(psl_gens.iter().all(|g| pgl.contains(g)));
    Ok((pgl, psl_gens))
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.gens() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(a.degree() as u32..degree as u32);
        gens.push(Perm::from_images(images).unwrap());
    }
    for g in b.gens() {
        let mut images: Vec<u32> = (0..a.degree() as u32).collect();
        images.extend(g.images().iter().map(|&x| x + a.degree() as u32));
        gens.push(Perm::from_images(images).unwrap());
    }
    let prod = PermGroup::from_gens(degree, gens).unwrap();
    debug_assert_eq!(prod.order(), a.order() * b.order());
    prod
}

/// Wreath product `S wr T` with `T` a permutation group on `n` points: the
/// base `S^n` acts on `n` disjoint copies of `S`'s points and `T` permutes
/// the copies.
pub fn wreath_with_top(s: &PermGroup, top: &PermGroup) -> PermGroup {
    let n = top.degree();
    let ds = s.degree();
    let degree = n * ds;
    let mut gens = Vec::new();
    for copy in 0..n {
        for g in s.gens() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for x in 0..ds {
                images[copy * ds + x] = (copy * ds) as u32 + g.apply(x as u32);
            }
            gens.push(Perm::from_images(images).unwrap());
        }
    }
    for t in top.gens() {
        let mut images = vec![0u32; degree];
        for copy in 0..n {
            let target = t.apply(copy as u32) as usize;
            for x in 0..ds {
                images[copy * ds + x] = (target * ds + x) as u32;
            }
        }
        gens.push(Perm::from_images(images).unwrap());
    }
    let w = PermGroup::from_gens(degree, gens).unwrap();
    debug_assert_eq!(
        w.order(),
        s.order().pow(n as u32) * top.order(),
        "wreath product order"
    );
    w
}

/// Coset map realizing `G/N` as a permutation group on the right cosets of
/// `N`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    reps: Vec<Perm>,
    n_chain: StabChain,
}

impl QuotientMap {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, x: &Perm) -> Result<usize> {
        for (j, rep) in self.reps.iter().enumerate() {
            if self.n_chain.contains(&x.compose(&rep.inverse())) {
                return Ok(j);
            }
        }
        Err(Error::Internal("element not covered by coset table".into()))
    }

    /// Image of a group element in the quotient's coset action.
    pub fn project(&self, x: &Perm) -> Result<Perm> {
        let mut images = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            images.push(self.coset_of(&rep.compose(x))? as u32);
        }
        Perm::from_images(images)
    }

    /// A preimage of a quotient point (the stored coset representative).
    pub fn lift(&self, coset: usize) -> &Perm {
        &self.reps[coset]
    }
}

/// Quotient of `g` by the normal subgroup generated by `n_gens`, as a
/// faithful action on the cosets of `N`.
pub fn quotient_by_normal(g: &PermGroup, n_gens: &[Perm]) -> Result<(PermGroup, QuotientMap)> {
    for x in n_gens {
        if !g.contains(x) {
            return Err(Error::InvalidInput(
                "normal-subgroup generator lies outside the group".into(),
            ));
        }
    }
    let n_chain = StabChain::build(g.degree(), n_gens)?;
    for a in g.gens() {
        for x in n_gens {
            if !n_chain.contains(&x.conjugate_by(a)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let index = (g.order() / n_chain.order()) as usize;
    let mut reps = vec![Perm::identity(g.degree())];
    let mut i = 0;
    while i < reps.len() && reps.len() < index {
        let rep = reps[i].clone();
        i += 1;
        for a in g.gens() {
            let x = rep.compose(a);
            let known = reps
                .iter()
                .any(|r| n_chain.contains(&x.compose(&r.inverse())));
            if !known {
                reps.push(x);
                if reps.len() == index {
                    break;
                }
            }
        }
    }
    if reps.len() != index {
        return Err(Error::Internal("coset enumeration incomplete".into()));
    }
    let map = QuotientMap { reps, n_chain };
    let mut q_gens = Vec::new();
    for a in g.gens() {
        q_gens.push(map.project(a)?);
    }
    let q = PermGroup::from_gens(index.max(1), q_gens)?;
    if q.order() != index as u128 {
        return Err(Error::Internal("quotient action not faithful".into()));
    }
    Ok((q, map))
}

/// Generators of the normal closure of `seeds` in `g`.
pub fn normal_closure(g: &PermGroup, seeds: &[Perm]) -> Result<PermGroup> {
    let mut gens: Vec<Perm> = Vec::new();
    for s in seeds {
        if !g.contains(s) {
            return Err(Error::InvalidInput("seed lies outside the group".into()));
        }
        if !s.is_identity() && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut chain = StabChain::build(g.degree(), &gens)?;
    let mut i = 0;
    while i < gens.len() {
        let w = gens[i].clone();
        i += 1;
        for a in g.gens() {
            let c = w.conjugate_by(a);
            if !chain.contains(&c) {
                gens.push(c);
                chain = StabChain::build(g.degree(), &gens)?;
            }
        }
    }
    PermGroup::from_gens(g.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chain_orders() {
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(PermGroup::trivial(4).order(), 1);
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(sl2(3).unwrap().order(), 24);
        assert_eq!(sl2(5).unwrap().order(), 120);
        assert_eq!(psl2(5).unwrap().order(), 60);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(11).unwrap().order(), 660);
        assert_eq!(psl2(13).unwrap().order(), 1092);
        assert_eq!(pgl2(5).unwrap().order(), 120);
        assert_eq!(pgl2(7).unwrap().order(), 336);
        assert!(psl2(4).is_err());
        assert!(psl2(9).is_err());
    }

    #[test]
    fn membership() {
        let g = alternating(5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut w = Perm::identity(5);
            for _ in 0..5 {
                let k = rng.gen_range(0..g.gens().len());
                w = w.compose(&g.gens()[k]);
            }
            assert!(g.contains(&w));
        }
        let odd = Perm::from_cycles(5, &[vec![0, 1]]).unwrap();
        assert!(!g.contains(&odd));
    }

    #[test]
    fn products_and_wreaths() {
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        let p = direct_product(&c2, &c3);
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());

        let w = wreath_with_top(&alternating(5), &symmetric(2));
        assert_eq!(w.order(), 7200);
        assert_eq!(w.degree(), 10);
    }

    #[test]
    fn quotient_of_sl25_by_center() {
        let g = sl2(5).unwrap();
        // The center is generated by -I, the unique central involution.
        let minus_i: Vec<Perm> = {
            let p = 5u64;
            let mut images = vec![0u32; 24];
            for a in 0..p {
                for b in 0..p {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let idx = (a * p + b - 1) as usize;
                    let na = (p - a) % p;
                    let nb = (p - b) % p;
                    images[idx] = (na * p + nb - 1) as u32;
                }
            }
            vec![Perm::from_images(images).unwrap()]
        };
        let (q, _) = quotient_by_normal(&g, &minus_i).unwrap();
        assert_eq!(q.order(), 60);
        assert!(quotient_by_normal(&g, &[g.gens()[0].clone()]).is_err());
    }

    #[test]
    fn normal_closure_in_sym4() {
        let s4 = symmetric(4);
        let double = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let v4 = normal_closure(&s4, &[double]).unwrap();
        assert_eq!(v4.order(), 4);
        let three = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let a4 = normal_closure(&s4, &[three]).unwrap();
        assert_eq!(a4.order(), 12);
    }

    #[test]
    fn uniform_sampling_c2() {
        let g = cyclic(2);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut id_count = 0usize;
        let n = 10_000;
        for _ in 0..n {
            if g.random_element(&mut rng).is_identity() {
                id_count += 1;
            }
        }
        let freq = id_count as f64 / n as f64;
        assert!((0.47..=0.53).contains(&freq), "freq = {freq}");
    }

    #[test]
    fn uniform_sampling_alt5_chi_square() {
        let g = alternating(5);
        let bounds = Bounds::default();
        let table = g.table(&bounds).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let draws = 100_000usize;
        let mut counts = vec![0u64; table.len()];
        for _ in 0..draws {
            let x = g.random_element(&mut rng);
            counts[table.id_of(&x).unwrap() as usize] += 1;
        }
        let expected = draws as f64 / table.len() as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        // Critical value of chi-square with 59 degrees of freedom at
        // significance 1e-3.
        assert!(chi2 < 98.32, "chi2 = {chi2}");
    }

    #[test]
    fn element_orders_in_psl2() {
        for p in [5u64, 7, 11, 13] {
            let g = psl2(p).unwrap();
            let bounds = Bounds::default();
            let table = g.table(&bounds).unwrap();
            for i in 0..table.len() {
                let ord = table.order_of(i as u32);
                assert!(
                    ord == 1 || p % ord == 0 || ((p - 1) / 2) % ord == 0 || ((p + 1) / 2) % ord == 0,
                    "order {ord} unexpected in PSL(2,{p})"
                );
            }
        }
    }
}
