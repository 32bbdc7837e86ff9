//! Dense element tables and bitsets over interned element ids.
//!
//! Lattice machinery works on subgroups represented as bitsets over the
//! interned elements of an enumerated group, trading memory for speed at the
//! desk-scale orders this engine targets. Interning order is the
//! deterministic stabilizer-chain enumeration order, so every downstream
//! structure is reproducible.

use crate::group::StabChain;
use crate::perm::Perm;
use std::collections::HashMap;

/// Fixed-capacity bitset over element ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitset {
    capacity: u32,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(capacity: usize) -> Bitset {
        Bitset {
            capacity: capacity as u32,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    pub fn insert(&mut self, i: u32) -> bool {
        let w = (i / 64) as usize;
        let b = 1u64 << (i % 64);
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.capacity, other.capacity);
        Bitset {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros();
                    rest &= rest - 1;
                    Some(wi as u32 * 64 + bit)
                }
            })
        })
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }
}

/// Interned elements of an enumerated group, with multiplication through a
/// hash index and per-generator conjugation tables.
#[derive(Debug)]
pub struct ElementTable {
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inv: Vec<u32>,
    orders: Vec<u64>,
    gen_ids: Vec<u32>,
    conj_by_gen: Vec<Vec<u32>>,
}

impl ElementTable {
    pub fn build(chain: &StabChain, gens: &[Perm]) -> ElementTable {
        let perms = chain.enumerate();
        debug_assert!(perms[0].is_identity());
        let mut index = HashMap::with_capacity(perms.len());
        for (i, p) in perms.iter().enumerate() {
            index.insert(p.clone(), i as u32);
        }
        let inv: Vec<u32> = perms.iter().map(|p| index[&p.inverse()]).collect();
        let orders: Vec<u64> = perms.iter().map(|p| p.order()).collect();
        let gen_ids: Vec<u32> = gens.iter().map(|g| index[g]).collect();
        let conj_by_gen: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let g_inv = g.inverse();
                perms
                    .iter()
                    .map(|x| index[&g_inv.compose(x).compose(g)])
                    .collect()
            })
            .collect();
        ElementTable {
            perms,
            index,
            inv,
            orders,
            gen_ids,
            conj_by_gen,
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn perm(&self, id: u32) -> &Perm {
        &self.perms[id as usize]
    }

    pub fn id_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.perms[a as usize].compose(&self.perms[b as usize])]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn order_of(&self, a: u32) -> u64 {
        self.orders[a as usize]
    }

    pub fn gen_ids(&self) -> &[u32] {
        &self.gen_ids
    }

    pub fn num_gens(&self) -> usize {
        self.gen_ids.len()
    }

    /// `g^-1 x g` for the `k`-th group generator `g`.
    pub fn conj_by_gen(&self, k: usize, x: u32) -> u32 {
        self.conj_by_gen[k][x as usize]
    }

    /// `g^-1 x g` for an arbitrary element `g`.
    pub fn conj_by(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Subgroup generated by `seeds`, as a bitset.
    pub fn closure(&self, seeds: &[u32]) -> Bitset {
        let mut bits = Bitset::new(self.len());
        bits.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.mul(x, s);
                if bits.insert(y) {
                    frontier.push(y);
                }
            }
        }
        bits
    }

    /// Image of a subgroup bitset under conjugation by the `k`-th generator.
    pub fn conjugate_set_gen(&self, set: &Bitset, k: usize) -> Bitset {
        let mut out = Bitset::new(self.len());
        for x in set.iter() {
            out.insert(self.conj_by_gen(k, x));
        }
        out
    }

    /// Image of a subgroup bitset under conjugation by an arbitrary element.
    pub fn conjugate_set_by(&self, set: &Bitset, g: u32) -> Bitset {
        let g_inv = self.inv(g);
        let mut out = Bitset::new(self.len());
        for x in set.iter() {
            out.insert(self.mul(self.mul(g_inv, x), g));
        }
        out
    }

    /// Small generating set for a subgroup given as a bitset, chosen
    /// greedily over ascending ids.
    pub fn reduce_subgroup_gens(&self, bits: &Bitset) -> Vec<u32> {
        let target = bits.len();
        let mut gens: Vec<u32> = Vec::new();
        let mut sub = Bitset::new(self.len());
        sub.insert(self.identity());
        for x in bits.iter() {
            if sub.len() == target {
                break;
            }
            if !sub.contains(x) {
                gens.push(x);
                sub = self.closure(&gens);
            }
        }
        gens
    }

    /// Conjugacy classes of elements, each sorted ascending, ordered by their
    /// smallest member.
    pub fn element_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = Bitset::new(self.len());
        let mut classes = Vec::new();
        for start in 0..self.len() as u32 {
            if seen.contains(start) {
                continue;
            }
            let mut class = vec![start];
            seen.insert(start);
            let mut i = 0;
            while i < class.len() {
                let x = class[i];
                i += 1;
                for k in 0..self.num_gens() {
                    let y = self.conj_by_gen(k, x);
                    if !seen.contains(y) {
                        seen.insert(y);
                        class.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// All distinct cyclic subgroups, each with its smallest generator id,
    /// ordered by discovery over ascending element ids.
    pub fn cyclic_subgroups(&self) -> Vec<(Bitset, u32)> {
        let mut seen: HashMap<Bitset, ()> = HashMap::new();
        let mut out = Vec::new();
        for x in 1..self.len() as u32 {
            let bits = self.closure(&[x]);
            if seen.insert(bits.clone(), ()).is_none() {
                out.push((bits, x));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use crate::Bounds;

    #[test]
    fn bitset_basics() {
        let mut a = Bitset::new(100);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        assert!(a.insert(99));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 99]);
        let mut b = Bitset::new(100);
        b.insert(3);
        assert!(b.is_subset_of(&a));
        assert_eq!(a.intersect(&b).len(), 1);
    }

    #[test]
    fn table_of_sym4() {
        let g = symmetric(4);
        let bounds = Bounds::default();
        let t = g.table(&bounds).unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.perm(0).is_identity());
        // mul consistency against perms
        let a = 5u32;
        let b = 17u32;
        let prod = t.perm(a).compose(t.perm(b));
        assert_eq!(t.mul(a, b), t.id_of(&prod).unwrap());
        assert_eq!(t.mul(a, t.inv(a)), 0);
    }

    #[test]
    fn closures_and_cyclics() {
        let g = alternating(4);
        let bounds = Bounds::default();
        let t = g.table(&bounds).unwrap();
        // V4 = closure of the two double transpositions
        let dts: Vec<u32> = (0..t.len() as u32)
            .filter(|&i| t.order_of(i) == 2)
            .collect();
        assert_eq!(dts.len(), 3);
        let v4 = t.closure(&dts);
        assert_eq!(v4.len(), 4);
        // A4: 1 trivial-ish cyclic of order 2 x3, order 3 x4
        let cyclics = t.cyclic_subgroups();
        assert_eq!(cyclics.len(), 7);
        let classes = t.element_classes();
        // 1, (3 double transpositions), (4+4 three-cycles)
        assert_eq!(classes.len(), 4);
    }
}
