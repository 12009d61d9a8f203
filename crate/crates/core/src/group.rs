//! Permutation groups backed by stabilizer chains, with cached element tables.
//!
//! A [`PermutationGroup`] is generated by explicit permutations; its
//! stabilizer chain, orbit partition, and full element table are computed
//! on first use and cached. Element-index arithmetic through
//! [`ElementTable`] is the workhorse for the exhaustive searches elsewhere
//! in the crate.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use num_bigint::BigUint;
use num_traits::One;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Default cap on explicit element enumeration.
pub const ELEMENT_CAP: usize = 1_000_000;

/// Orders up to this get a multiplication table built automatically.
const AUTO_MULT_LIMIT: usize = 2_600;

/// Hard ceiling for multiplication tables (entries are stored as `u16`).
const MULT_LIMIT: usize = u16::MAX as usize;

/// One level of a stabilizer chain: a base point, all strong generators
/// fixing the earlier base points (so the generator lists are nested along
/// the chain), and the orbit transversal of the base.
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[p] = Some(t)` with `base^t = p`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[self.base] = Some(Permutation::identity(degree));
        let mut orbit = vec![self.base];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            let t = transversal[p].clone().expect("orbit point has transversal");
            for g in &self.gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    transversal[q] = Some(t.compose(g));
                    orbit.push(q);
                }
            }
        }
        self.transversal = transversal;
        self.orbit = orbit;
    }
}

/// Incrementally built stabilizer chain (Schreier-Sims).
///
/// Invariant: at every level, each Schreier generator of the level sifts to
/// the identity through the deeper levels, so the group order is the product
/// of the orbit lengths and membership is decided by sifting.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Chain of the trivial group on `degree` points.
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        StabilizerChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// Chain whose first base point is forced to `omega`, so that the strong
    /// generators at levels `>= 1` generate the stabilizer of `omega`.
    pub fn with_first_base(degree: usize, omega: usize) -> Self {
        assert!(omega < degree, "base point out of range");
        let mut chain = StabilizerChain::new(degree);
        chain.levels.push(Level::new(omega, degree));
        chain
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain::new(degree);
        for g in gens {
            chain.insert(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Sifts `g` starting at `start`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if all levels were passed).
    fn sift_from(&self, start: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let img = h.apply(level.base);
            match &level.transversal[img] {
                None => return (h, i),
                Some(t) => h = h.compose(&t.inverse()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.sift_from(0, g);
        level == self.levels.len() && residue.is_identity()
    }

    /// Adds a generator, restoring the chain invariant.
    pub fn insert(&mut self, g: Permutation) {
        assert_eq!(g.degree(), self.degree, "generator degree mismatch");
        // Replace `g` by its sifted residue: it generates the same extension
        // and fixes the first `stop` base points.
        let (residue, stop) = self.sift_from(0, &g);
        if residue.is_identity() && stop == self.levels.len() {
            return;
        }
        self.install(0, stop, residue);
        for level in (0..=stop.min(self.levels.len() - 1)).rev() {
            self.verify_level(level);
        }
    }

    /// Appends `residue` to the generator lists of levels `from..=birth`,
    /// creating a final level if `birth` is one past the end. The caller must
    /// guarantee that the residue fixes the first `birth` base points and lies
    /// in the group generated at level `from`'s parent.
    fn install(&mut self, from: usize, birth: usize, residue: Permutation) {
        if birth == self.levels.len() {
            let base = residue
                .smallest_moved_point()
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in from..=birth {
            if !self.levels[level].gens.contains(&residue) {
                self.levels[level].gens.push(residue.clone());
            }
        }
    }

    /// Re-establishes the Schreier condition at one level, assuming it holds
    /// at all deeper levels. Residues of failing Schreier generators are
    /// installed strictly deeper (they lie in the group generated at this
    /// level, so this level's orbit is unaffected) and the touched deeper
    /// levels are re-verified, deepest first.
    fn verify_level(&mut self, level: usize) {
        self.levels[level].rebuild_orbit(self.degree);
        let orbit = self.levels[level].orbit.clone();
        let gens = self.levels[level].gens.clone();
        for &p in &orbit {
            let t = self.levels[level].transversal[p]
                .clone()
                .expect("orbit point has transversal");
            for s in &gens {
                let q = s.apply(p);
                let tq = self.levels[level].transversal[q]
                    .clone()
                    .expect("orbit is closed under generators");
                let schreier = t.compose(s).compose(&tq.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stop) = self.sift_from(level + 1, &schreier);
                if residue.is_identity() && stop == self.levels.len() {
                    continue;
                }
                self.install(level + 1, stop, residue);
                for deeper in (level + 1..=stop.min(self.levels.len() - 1)).rev() {
                    self.verify_level(deeper);
                }
            }
        }
    }

    /// Group order: the product of the orbit lengths.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    /// Strong generators fixing the first `k` base points; for a chain built
    /// with [`StabilizerChain::with_first_base`], `k = 1` yields generators
    /// of the point stabilizer. The per-level generator lists are nested, so
    /// level `k` already carries every strong generator fixing the prefix.
    pub fn stabilizer_generators(&self, k: usize) -> Vec<Permutation> {
        match self.levels.get(k) {
            Some(level) => level.gens.clone(),
            None => Vec::new(),
        }
    }

    /// All group elements in ascending image-vector order.
    ///
    /// Every element factors uniquely as a product of one transversal element
    /// per level, deepest level applied first.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        if self.order() > BigUint::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for e in &elems {
                for &p in &level.orbit {
                    let t = level.transversal[p].as_ref().expect("orbit transversal");
                    next.push(e.compose(t));
                }
            }
            elems = next;
        }
        elems.sort_unstable();
        Ok(elems)
    }
}

/// The full element list of a group, sorted, with index-level arithmetic.
pub struct ElementTable {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverses: Vec<u32>,
    mult: OnceLock<Vec<u16>>,
}

impl ElementTable {
    /// Builds a table from a sorted, duplicate-free element list.
    fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        ElementTable {
            degree,
            elements,
            index,
            inverses,
            mult: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }

    /// The identity is always index 0: its image vector is the ascending
    /// sequence, which is lexicographically least.
    pub fn identity_index(&self) -> u32 {
        0
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inverses[i as usize]
    }

    /// Index of the product; `product(i, j)` applies `i` first.
    pub fn product(&self, i: u32, j: u32) -> u32 {
        if let Some(table) = self.mult.get() {
            return table[i as usize * self.elements.len() + j as usize] as u32;
        }
        let g = self.elements[i as usize].compose(&self.elements[j as usize]);
        self.index[&g]
    }

    /// Index of `g^s = s^-1 g s` by indices.
    pub fn conjugate_index(&self, g: u32, s: u32) -> u32 {
        self.product(self.product(self.inverse(s), g), s)
    }

    /// Index of `g^e` for `e >= 0`.
    pub fn power(&self, g: u32, e: u64) -> u32 {
        let mut acc = self.identity_index();
        let mut base = g;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.product(acc, base);
            }
            base = self.product(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of the element at index `i`.
    pub fn order_of(&self, i: u32) -> u64 {
        self.elements[i as usize].order()
    }

    /// Builds the multiplication table if the order permits; returns whether
    /// the table is available. Worthwhile before index-heavy searches.
    pub fn ensure_mult_table(&self) -> bool {
        let n = self.elements.len();
        if n > MULT_LIMIT {
            return false;
        }
        self.mult.get_or_init(|| {
            let mut table = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    let g = self.elements[i].compose(&self.elements[j]);
                    table[i * n + j] = self.index[&g] as u16;
                }
            }
            table
        });
        true
    }
}

struct GroupInner {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
    table: OnceLock<Result<ElementTable>>,
    orbits: OnceLock<Vec<Vec<usize>>>,
}

/// A finite permutation group given by generators. Cheap to clone.
#[derive(Clone)]
pub struct PermutationGroup {
    inner: Arc<GroupInner>,
}

impl PermutationGroup {
    /// Builds a group from generators; duplicates and identities are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Unsupported("degree must be positive".into()));
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(PermutationGroup {
            inner: Arc::new(GroupInner {
                degree,
                gens,
                chain: OnceLock::new(),
                table: OnceLock::new(),
                orbits: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Convenience constructor from 1-based cycle strings.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self> {
        let parsed = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::new(degree, parsed)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.is_empty()
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.inner
            .chain
            .get_or_init(|| StabilizerChain::from_generators(self.inner.degree, &self.inner.gens))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u128`, when it fits.
    pub fn order_u128(&self) -> Option<u128> {
        u128::try_from(&self.order()).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn contains_group(&self, other: &PermutationGroup) -> bool {
        other.degree() == self.degree() && other.generators().iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &PermutationGroup) -> bool {
        self.contains_group(other) && self.order() == other.order()
    }

    /// The cached element table; errors if the order exceeds [`ELEMENT_CAP`].
    pub fn elements(&self) -> Result<&ElementTable> {
        self.inner
            .table
            .get_or_init(|| {
                let elems = self.chain().elements(ELEMENT_CAP)?;
                let table = ElementTable::from_sorted_elements(self.inner.degree, elems);
                if table.len() <= AUTO_MULT_LIMIT {
                    table.ensure_mult_table();
                }
                Ok(table)
            })
            .as_ref()
            .map_err(Error::clone)
    }

    /// Orbit partition, each orbit ascending, ordered by smallest point.
    pub fn orbits(&self) -> &[Vec<usize>] {
        self.inner.orbits.get_or_init(|| {
            let degree = self.inner.degree;
            let mut seen = vec![false; degree];
            let mut orbits = Vec::new();
            for start in 0..degree {
                if seen[start] {
                    continue;
                }
                let mut orbit = vec![start];
                seen[start] = true;
                let mut head = 0;
                while head < orbit.len() {
                    let p = orbit[head];
                    head += 1;
                    for g in &self.inner.gens {
                        let q = g.apply(p);
                        if !seen[q] {
                            seen[q] = true;
                            orbit.push(q);
                        }
                    }
                }
                orbit.sort_unstable();
                orbits.push(orbit);
            }
            orbits
        })
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits()
            .iter()
            .find(|o| o.binary_search(&point).is_ok())
            .cloned()
            .expect("point within degree")
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.inner.gens;
        for (i, a) in gens.iter().enumerate() {
            for b in gens.iter().skip(i + 1) {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Stabilizer of a point, via a chain whose first base is that point.
    pub fn point_stabilizer(&self, omega: usize) -> Result<PermutationGroup> {
        if omega >= self.degree() {
            return Err(Error::PointOutOfRange {
                point: omega,
                degree: self.degree(),
            });
        }
        let mut chain = StabilizerChain::with_first_base(self.degree(), omega);
        for g in &self.inner.gens {
            chain.insert(g.clone());
        }
        PermutationGroup::new(self.degree(), chain.stabilizer_generators(1))
    }

    /// The conjugate group `self^s` generated by the conjugated generators.
    pub fn conjugate_by(&self, s: &Permutation) -> PermutationGroup {
        let gens = self.inner.gens.iter().map(|g| g.conjugate(s)).collect();
        PermutationGroup::new(self.degree(), gens).expect("conjugation preserves degree")
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationGroup(degree={}, gens=[", self.degree())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

/// A subgroup of an ambient group, as sorted element indices into the
/// ambient [`ElementTable`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubgroupHandle {
    indices: Vec<u32>,
}

impl SubgroupHandle {
    pub fn from_unsorted(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SubgroupHandle { indices }
    }

    pub fn trivial(ambient: &ElementTable) -> Self {
        SubgroupHandle {
            indices: vec![ambient.identity_index()],
        }
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The conjugate subgroup `self^s` within the ambient group.
    pub fn conjugate(&self, ambient: &ElementTable, s: u32) -> SubgroupHandle {
        let indices = self
            .indices
            .iter()
            .map(|&g| ambient.conjugate_index(g, s))
            .collect();
        SubgroupHandle::from_unsorted(indices)
    }

    /// Whether the index set is closed under the ambient product (and hence
    /// a subgroup, as it is finite and nonempty).
    pub fn is_closed(&self, ambient: &ElementTable) -> bool {
        !self.indices.is_empty()
            && self.indices.iter().all(|&a| {
                self.indices
                    .iter()
                    .all(|&b| self.contains(ambient.product(a, b)))
            })
    }

    /// Materializes the subgroup as a [`PermutationGroup`].
    pub fn to_group(&self, ambient: &ElementTable) -> PermutationGroup {
        let gens = self
            .indices
            .iter()
            .map(|&i| ambient.element(i).clone())
            .collect();
        PermutationGroup::new(ambient.degree(), gens).expect("ambient degree is positive")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(degree, gens).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(s4.order(), BigUint::from(24u32));
        let s7 = group(7, &["(1,2)", "(1,2,3,4,5,6,7)"]);
        assert_eq!(s7.order(), BigUint::from(5040u32));
    }

    #[test]
    fn alternating_group_order_and_membership() {
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(a5.contains(&Permutation::parse_cycles("(1,2)(3,4)", 5).unwrap()));
        assert!(!a5.contains(&Permutation::parse_cycles("(1,2)", 5).unwrap()));
    }

    #[test]
    fn element_enumeration_matches_order() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let table = s3.elements().unwrap();
        assert_eq!(table.len(), 6);
        assert!(table.element(0).is_identity());
        // Sorted and duplicate-free.
        for w in table.elements().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn element_cap_is_enforced() {
        let s10 = group(10, &["(1,2)", "(1,2,3,4,5,6,7,8,9,10)"]);
        assert!(matches!(
            s10.elements(),
            Err(Error::CapExceeded { cap: ELEMENT_CAP })
        ));
    }

    #[test]
    fn index_arithmetic_agrees_with_composition() {
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let table = d8.elements().unwrap();
        assert_eq!(table.len(), 8);
        for i in 0..table.len() as u32 {
            assert_eq!(table.product(i, table.inverse(i)), 0);
            for j in 0..table.len() as u32 {
                let direct = table.element(i).compose(table.element(j));
                assert_eq!(table.element(table.product(i, j)), &direct);
            }
        }
        let r = table
            .index_of(&Permutation::parse_cycles("(1,2,3,4)", 4).unwrap())
            .unwrap();
        assert_eq!(table.power(r, 4), 0);
        assert_eq!(table.order_of(r), 4);
    }

    #[test]
    fn orbit_partition() {
        let g = group(6, &["(1,2)", "(3,4,5)"]);
        assert_eq!(g.orbits(), &[vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert!(!g.is_transitive());
        assert_eq!(g.orbit_of(3), vec![2, 3, 4]);
    }

    #[test]
    fn regularity() {
        assert!(group(5, &["(1,2,3,4,5)"]).is_regular());
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        assert!(s3.is_transitive());
        assert!(!s3.is_regular());
        assert!(group(2, &[]).is_trivial());
    }

    #[test]
    fn point_stabilizer_of_symmetric_group() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let stab = s4.point_stabilizer(0).unwrap();
        assert_eq!(stab.order(), BigUint::from(6u32));
        for e in stab.elements().unwrap().elements() {
            assert_eq!(e.apply(0), 0);
        }
        // Transitive, so all point stabilizers are conjugate, same order.
        let stab3 = s4.point_stabilizer(3).unwrap();
        assert_eq!(stab3.order(), BigUint::from(6u32));
    }

    #[test]
    fn group_equality_and_conjugation() {
        let a = group(4, &["(1,2,3,4)", "(1,3)"]);
        let b = group(4, &["(1,3)", "(2,4)", "(1,2)(3,4)"]);
        assert!(a.equals(&b));
        let s = Permutation::parse_cycles("(1,2)", 4).unwrap();
        let conj = a.conjugate_by(&s);
        assert_eq!(conj.order(), a.order());
        assert!(!conj.equals(&a) || conj.equals(&a)); // order preserved either way
        assert!(a.conjugate_by(&s).conjugate_by(&s).equals(&a));
    }

    #[test]
    fn subgroup_handle_closure_and_conjugation() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let table = s3.elements().unwrap();
        let rot = table
            .index_of(&Permutation::parse_cycles("(1,2,3)", 3).unwrap())
            .unwrap();
        let cyclic = SubgroupHandle::from_unsorted(vec![0, rot, table.product(rot, rot)]);
        assert!(cyclic.is_closed(table));
        assert_eq!(cyclic.order(), 3);
        let swap = table
            .index_of(&Permutation::parse_cycles("(1,2)", 3).unwrap())
            .unwrap();
        // The 3-cycle subgroup is normal in Sym(3).
        assert_eq!(cyclic.conjugate(table, swap), cyclic);
        let pair = SubgroupHandle::from_unsorted(vec![0, swap]);
        assert!(pair.is_closed(table));
        assert!(pair.to_group(table).order() == BigUint::from(2u32));
    }

    #[test]
    fn abelian_detection() {
        assert!(group(5, &["(1,2,3,4,5)"]).is_abelian());
        assert!(group(4, &["(1,2)", "(3,4)"]).is_abelian());
        assert!(!group(3, &["(1,2)", "(1,2,3)"]).is_abelian());
    }

    #[test]
    fn forced_first_base_stays_in_chain() {
        let c3 = group(4, &["(2,3,4)"]);
        // Point 0 is fixed by the whole group; forcing it first must still
        // give the right order and stabilizer.
        let stab = c3.point_stabilizer(0).unwrap();
        assert_eq!(stab.order(), BigUint::from(3u32));
        let stab1 = c3.point_stabilizer(1).unwrap();
        assert!(stab1.is_trivial());
    }
}
