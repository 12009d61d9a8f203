//! Subgroup censuses of small symmetric groups and the classification
//! checks built on them: every subgroup class of `Sym(n)` for `n <= 7`,
//! the transitive entries with their orbit invariants, and verification
//! reports for the small-orbit classification, the solubility threshold,
//! and the fixed catalogue of product constructions.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;

use crate::autos;
use crate::construct;
use crate::error::{Error, Result};
use crate::group::{ElementTable, PermutationGroup, StabilizerChain, SubgroupHandle};
use crate::perm::Permutation;
use crate::report::VerificationReport;
use crate::structure;

/// Hard degree cap for census enumeration.
pub const CENSUS_DEGREE_CAP: usize = 7;
/// Degree cap for the classification verifiers.
pub const CLASSIFY_DEGREE_CAP: usize = 6;

const EXTENSION_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// One `Sym(n)`-conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Sorted element indices of the lexicographically least conjugate.
    pub members: Vec<u32>,
    /// Number of distinct `Sym(n)`-conjugates.
    pub class_size: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn handle(&self) -> SubgroupHandle {
        SubgroupHandle::from_unsorted(self.members.clone())
    }
}

/// A transitive census entry with its classification invariants.
#[derive(Clone)]
pub struct CensusEntry {
    pub degree: usize,
    pub group: PermutationGroup,
    pub order: u64,
    /// Largest orbit length on the group of the automorphisms induced by
    /// its normaliser in the ambient symmetric group.
    pub maol_perm: u64,
    pub soluble: bool,
    /// Label when the entry is conjugate to one of the named small groups.
    pub matched_name: Option<String>,
}

/// Every subgroup of `Sym(degree)` up to conjugacy.
pub struct SubgroupCensus {
    degree: usize,
    sym: PermutationGroup,
    classes: Vec<SubgroupClass>,
}

impl SubgroupCensus {
    /// Enumerates the subgroup classes of `Sym(degree)`.
    ///
    /// Lattice walk: seed with the trivial group, the cyclic groups of
    /// prime order, and the subgroups admitting no normal subgroup of
    /// prime index; then extend each known class `H` by every normalising
    /// element `g` with `g^p` in `H` for a prime `p`, which yields every
    /// `K` in which `H` is normal of prime index. Any subgroup sits atop
    /// such a chain over one of the seeds (refine a composition series
    /// over the last term of the derived series), so the walk is
    /// exhaustive; the small-degree integration suite cross-checks it
    /// against a closure-based enumeration of all subgroups.
    pub fn new(degree: usize) -> Result<SubgroupCensus> {
        if degree == 0 || degree > CENSUS_DEGREE_CAP {
            return Err(Error::DegreeTooLarge {
                degree,
                limit: CENSUS_DEGREE_CAP,
            });
        }
        let sym = construct::symmetric_natural(degree)?;
        let mut classes = {
            let table = sym.elements()?;
            table.ensure_mult_table();
            let mut walk = LatticeWalk {
                table,
                registry: HashMap::new(),
                classes: Vec::new(),
                pending: Vec::new(),
            };
            walk.seed(degree)?;
            while let Some(id) = walk.pending.pop() {
                walk.extend_class(id);
            }
            walk.classes
        };
        classes.sort_by(|a, b| {
            a.members
                .len()
                .cmp(&b.members.len())
                .then_with(|| a.members.cmp(&b.members))
        });
        Ok(SubgroupCensus {
            degree,
            sym,
            classes,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn symmetric_group(&self) -> &PermutationGroup {
        &self.sym
    }

    pub fn table(&self) -> &ElementTable {
        self.sym
            .elements()
            .expect("census degrees are within the element cap")
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Total number of subgroups, summed over the classes.
    pub fn total_subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// Materializes a class representative with a small generating set.
    pub fn class_group(&self, class: &SubgroupClass) -> PermutationGroup {
        group_from_members(self.table(), &class.members, self.degree)
    }

    /// The transitive classes, with orbit and solubility invariants.
    pub fn transitive_entries(&self) -> Result<Vec<CensusEntry>> {
        let table = self.table();
        let named = named_small_groups(self.degree)?;
        let mut entries = Vec::new();
        for class in &self.classes {
            if !is_transitive_members(table, &class.members, self.degree) {
                continue;
            }
            let group = self.class_group(class);
            let (orbit_lengths, _) = normaliser_orbit_lengths(table, &class.members);
            let maol_perm = *orbit_lengths.last().expect("subgroup is nonempty") as u64;
            let soluble = structure::is_soluble(&group);
            let mut matched_name = None;
            for (name, candidate) in &named {
                if candidate.order() == group.order()
                    && structure::subgroup_transporter(&self.sym, &group, candidate)?.is_some()
                {
                    matched_name = Some(name.clone());
                    break;
                }
            }
            entries.push(CensusEntry {
                degree: self.degree,
                group,
                order: class.members.len() as u64,
                maol_perm,
                soluble,
                matched_name,
            });
        }
        Ok(entries)
    }
}

/// Every subgroup of `Sym(degree)` up to conjugacy, as sorted index sets
/// into the symmetric group's element table, ordered by (order, members).
pub fn all_subgroups_up_to_conjugacy(degree: usize) -> Result<Vec<SubgroupHandle>> {
    Ok(SubgroupCensus::new(degree)?
        .classes
        .iter()
        .map(|c| c.handle())
        .collect())
}

/// The transitive census entries of one degree.
pub fn transitive_groups(degree: usize) -> Result<Vec<CensusEntry>> {
    SubgroupCensus::new(degree)?.transitive_entries()
}

struct LatticeWalk<'t> {
    table: &'t ElementTable,
    /// Every conjugate of every registered class, so candidate lookups in
    /// the extension step always hit.
    registry: HashMap<Vec<u32>, usize>,
    classes: Vec<SubgroupClass>,
    pending: Vec<usize>,
}

impl LatticeWalk<'_> {
    fn seed(&mut self, degree: usize) -> Result<()> {
        self.register(vec![self.table.identity_index()]);
        for g in 1..self.table.len() as u32 {
            if EXTENSION_PRIMES.contains(&self.table.order_of(g)) {
                let mut members: Vec<u32> = (0..self.table.order_of(g))
                    .map(|k| self.table.power(g, k))
                    .collect();
                members.sort_unstable();
                self.register(members);
            }
        }
        for gens in perfect_seed_generators(degree)? {
            let indices: Vec<u32> = gens
                .iter()
                .map(|p| {
                    self.table
                        .index_of(p)
                        .expect("seed generators live in the ambient symmetric group")
                })
                .collect();
            self.register(autos::close_indices(self.table, &indices));
        }
        Ok(())
    }

    /// Registers the class of the subgroup with the given sorted member
    /// indices, conjugating by one representative per right coset (the
    /// conjugate set is constant on cosets `H*s`).
    fn register(&mut self, members: Vec<u32>) -> usize {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        if let Some(&id) = self.registry.get(&members) {
            return id;
        }
        let n = self.table.len();
        let mut covered = vec![false; n];
        let mut conjugates: Vec<Vec<u32>> = Vec::new();
        for s in 0..n as u32 {
            if covered[s as usize] {
                continue;
            }
            for &h in &members {
                covered[self.table.product(h, s) as usize] = true;
            }
            let mut image: Vec<u32> = members
                .iter()
                .map(|&h| self.table.conjugate_index(h, s))
                .collect();
            image.sort_unstable();
            conjugates.push(image);
        }
        conjugates.sort_unstable();
        conjugates.dedup();
        let id = self.classes.len();
        self.classes.push(SubgroupClass {
            members: conjugates[0].clone(),
            class_size: conjugates.len(),
        });
        self.pending.push(id);
        for conjugate in conjugates {
            self.registry.insert(conjugate, id);
        }
        id
    }

    /// Registers every subgroup in which the class representative is
    /// normal of prime index.
    fn extend_class(&mut self, id: usize) {
        let members = self.classes[id].members.clone();
        let n = self.table.len();
        if members.len() == n {
            return;
        }
        let mut in_h = vec![false; n];
        for &h in &members {
            in_h[h as usize] = true;
        }
        // Normaliser members, gathered coset by coset.
        let mut covered = vec![false; n];
        let mut normaliser: Vec<u32> = Vec::new();
        let mut coset = vec![0u32; members.len()];
        for s in 0..n as u32 {
            if covered[s as usize] {
                continue;
            }
            for (slot, &h) in coset.iter_mut().zip(&members) {
                *slot = self.table.product(h, s);
            }
            for &c in &coset {
                covered[c as usize] = true;
            }
            if members
                .iter()
                .all(|&h| in_h[self.table.conjugate_index(h, s) as usize])
            {
                normaliser.extend_from_slice(&coset);
            }
        }
        // K = H + Hg + ... + Hg^{p-1} for normalising g with g^p in H is a
        // subgroup of order p|H|, and every prime-index overgroup in which
        // H is normal arises this way. Distinct candidates are separated
        // before construction by their sets of least coset members.
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for &g in &normaliser {
            if in_h[g as usize] {
                continue;
            }
            let Some(&prime) = EXTENSION_PRIMES
                .iter()
                .find(|&&p| in_h[self.table.power(g, p) as usize])
            else {
                continue;
            };
            let prime = prime as usize;
            let mut signature = Vec::with_capacity(prime - 1);
            let mut power = g;
            for _ in 1..prime {
                signature.push(
                    members
                        .iter()
                        .map(|&h| self.table.product(h, power))
                        .min()
                        .expect("subgroup is nonempty"),
                );
                power = self.table.product(power, g);
            }
            signature.sort_unstable();
            if !seen.insert(signature) {
                continue;
            }
            let mut extension = members.clone();
            let mut power = g;
            for _ in 1..prime {
                extension.extend(members.iter().map(|&h| self.table.product(h, power)));
                power = self.table.product(power, g);
            }
            extension.sort_unstable();
            debug_assert_eq!(extension.len(), members.len() * prime);
            self.register(extension);
        }
    }
}

/// Generating sets for the subgroups that admit no normal subgroup of
/// prime index (beyond the trivial group), one per conjugacy class at
/// this degree: the lattice walk cannot descend into them, so they are
/// seeded directly.
fn perfect_seed_generators(degree: usize) -> Result<Vec<Vec<Permutation>>> {
    let mut seeds: Vec<Vec<Permutation>> = Vec::new();
    let extend_all = |group: PermutationGroup| -> Vec<Permutation> {
        group
            .generators()
            .iter()
            .map(|g| g.extend_to(degree))
            .collect()
    };
    if degree >= 5 {
        seeds.push(extend_all(construct::alternating_natural(5)?));
    }
    if degree >= 6 {
        // The order-60 simple group acting transitively on six points: the
        // projective line over the five-element field under x -> x + 1 and
        // x -> -1/x, with the sixth point as infinity.
        seeds.push(vec![
            Permutation::parse_cycles("(1,2,3,4,5)", degree)?,
            Permutation::parse_cycles("(1,6)(2,5)", degree)?,
        ]);
        seeds.push(extend_all(construct::alternating_natural(6)?));
    }
    if degree >= 7 {
        seeds.push(extend_all(construct::alternating_natural(7)?));
        seeds.push(fano_plane_generators());
    }
    Ok(seeds)
}

/// The automorphisms of the seven-point projective plane over the
/// two-element field: point `k` is the nonzero vector with bitmask
/// `k + 1`, and the elementary transvections generate the full linear
/// group of order 168.
fn fano_plane_generators() -> Vec<Permutation> {
    let mut gens = Vec::new();
    for i in 0..3usize {
        for j in 0..3usize {
            if i == j {
                continue;
            }
            let mut rows: [u32; 3] = [1, 2, 4];
            rows[i] ^= 1 << j;
            let images: Vec<usize> = (1..8u32)
                .map(|v| {
                    let mut w = 0u32;
                    for (r, &row) in rows.iter().enumerate() {
                        if v >> r & 1 == 1 {
                            w ^= row;
                        }
                    }
                    (w - 1) as usize
                })
                .collect();
            gens.push(
                Permutation::from_images(&images)
                    .expect("an invertible linear map permutes the nonzero vectors"),
            );
        }
    }
    gens
}

/// Builds a group from a full sorted member list, greedily picking a
/// small generating set via a stabilizer chain.
fn group_from_members(table: &ElementTable, members: &[u32], degree: usize) -> PermutationGroup {
    let mut chain = StabilizerChain::new(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    let target = BigUint::from(members.len());
    for &i in members.iter().skip(1) {
        let p = table.element(i);
        if !chain.contains(p) {
            chain.insert(p.clone());
            gens.push(p.clone());
            if chain.order() == target {
                break;
            }
        }
    }
    PermutationGroup::new(degree, gens).expect("members share the ambient degree")
}

fn is_transitive_members(table: &ElementTable, members: &[u32], degree: usize) -> bool {
    let mut seen = vec![false; degree];
    let mut count = 0;
    for &i in members {
        let image = table.element(i).apply(0);
        if !seen[image] {
            seen[image] = true;
            count += 1;
        }
    }
    count == degree
}

/// Orbit lengths on the subgroup of the conjugation action of its full
/// normaliser in the ambient symmetric group, as a sorted multiset, plus
/// the normaliser order. The action is generated by the inner
/// conjugations together with one representative per normaliser coset.
pub fn normaliser_orbit_lengths(table: &ElementTable, members: &[u32]) -> (Vec<usize>, u64) {
    let n = table.len();
    let m = members.len();
    let mut pos = vec![u32::MAX; n];
    for (k, &h) in members.iter().enumerate() {
        pos[h as usize] = k as u32;
    }
    let mut parent: Vec<u32> = (0..m as u32).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut root = x;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = x;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    let union_conjugation = |parent: &mut Vec<u32>, s: u32| {
        for (k, &h) in members.iter().enumerate() {
            let image = pos[table.conjugate_index(h, s) as usize];
            debug_assert_ne!(image, u32::MAX);
            let (a, b) = (find(parent, k as u32), find(parent, image));
            if a != b {
                parent[a as usize] = b;
            }
        }
    };
    for &s in members {
        union_conjugation(&mut parent, s);
    }
    let mut covered = vec![false; n];
    let mut normalising_cosets = 0u64;
    for s in 0..n as u32 {
        if covered[s as usize] {
            continue;
        }
        for &h in members {
            covered[table.product(h, s) as usize] = true;
        }
        if members
            .iter()
            .all(|&h| pos[table.conjugate_index(h, s) as usize] != u32::MAX)
        {
            normalising_cosets += 1;
            union_conjugation(&mut parent, s);
        }
    }
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for k in 0..m as u32 {
        *counts.entry(find(&mut parent, k)).or_insert(0) += 1;
    }
    let mut lengths: Vec<usize> = counts.into_values().collect();
    lengths.sort_unstable();
    (lengths, normalising_cosets * m as u64)
}

/// The named groups of the small-orbit classification, per degree: the
/// regular cyclic groups of orders 1, 2, 3, 4 and 6, the regular Klein
/// four-group, the regular Sym(3), and the natural dihedral groups on 3,
/// 4 and 6 points.
pub fn named_small_groups(degree: usize) -> Result<Vec<(String, PermutationGroup)>> {
    let mut out: Vec<(String, PermutationGroup)> = Vec::new();
    match degree {
        1 => out.push(("C1 regular".into(), construct::cyclic_regular(1)?)),
        2 => out.push(("C2 regular".into(), construct::cyclic_regular(2)?)),
        3 => {
            out.push(("C3 regular".into(), construct::cyclic_regular(3)?));
            out.push(("D6 natural".into(), construct::dihedral_natural(3)?));
        }
        4 => {
            out.push(("C4 regular".into(), construct::cyclic_regular(4)?));
            out.push(("C2xC2 regular".into(), construct::abelian_regular(&[2, 2])?));
            out.push(("D8 natural".into(), construct::dihedral_natural(4)?));
        }
        6 => {
            out.push(("C6 regular".into(), construct::cyclic_regular(6)?));
            out.push((
                "Sym(3) regular".into(),
                construct::regular_representation(&construct::symmetric_natural(3)?)?,
            ));
            out.push(("D12 natural".into(), construct::dihedral_natural(6)?));
        }
        _ => {}
    }
    Ok(out)
}

/// Expected survivors of the small-orbit classification per degree, with
/// the largest induced orbit length each attains.
fn expected_small_threshold(degree: usize) -> Vec<(&'static str, u64)> {
    match degree {
        1 => vec![("C1 regular", 1)],
        2 => vec![("C2 regular", 1)],
        3 => vec![("C3 regular", 2), ("D6 natural", 3)],
        4 => vec![
            ("C4 regular", 2),
            ("C2xC2 regular", 3),
            ("D8 natural", 2),
        ],
        6 => vec![
            ("C6 regular", 2),
            ("Sym(3) regular", 3),
            ("D12 natural", 3),
        ],
        _ => vec![],
    }
}

/// Checks that the transitive groups whose induced orbits all have length
/// at most 3 are exactly the named small groups, degree by degree.
pub fn verify_small_threshold_classification(max_degree: usize) -> Result<VerificationReport> {
    if max_degree == 0 || max_degree > CLASSIFY_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree: max_degree,
            limit: CLASSIFY_DEGREE_CAP,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(format!(
        "transitive groups of degree at most {max_degree} with induced orbits of length at most 3"
    ));
    let mut computed_by_bound: [Vec<String>; 3] = Default::default();
    let mut expected_by_bound: [Vec<String>; 3] = Default::default();
    for degree in 1..=max_degree {
        let entries = transitive_groups(degree)?;
        let expected = expected_small_threshold(degree);
        for (name, bound) in &expected {
            expected_by_bound[*bound as usize - 1].push(format!("degree {degree} {name}"));
        }
        let survivors: Vec<&CensusEntry> =
            entries.iter().filter(|e| e.maol_perm <= 3).collect();
        report.push_eq(
            format!("degree {degree} survivor count"),
            expected.len(),
            survivors.len(),
        );
        for (name, bound) in &expected {
            match survivors
                .iter()
                .find(|e| e.matched_name.as_deref() == Some(name))
            {
                Some(entry) => {
                    report.push_eq(
                        format!("degree {degree} {name} orbit bound"),
                        bound,
                        entry.maol_perm,
                    );
                    computed_by_bound[entry.maol_perm as usize - 1]
                        .push(format!("degree {degree} {name}"));
                }
                None => report.push_fail(
                    format!("degree {degree} {name} orbit bound"),
                    bound,
                    "absent",
                    "expected survivor missing from the census",
                ),
            }
        }
        for entry in &survivors {
            let recognised = entry
                .matched_name
                .as_deref()
                .is_some_and(|name| expected.iter().any(|(n, _)| *n == name));
            if !recognised {
                report.push_fail(
                    format!("degree {degree} unexpected survivor"),
                    "none",
                    format!("order {} group with orbit bound {}", entry.order, entry.maol_perm),
                    "survivor matches none of the named groups",
                );
            }
        }
    }
    for (bound, (mut computed, mut expected)) in computed_by_bound
        .into_iter()
        .zip(expected_by_bound)
        .enumerate()
    {
        computed.sort();
        expected.sort();
        report.push_eq(
            format!("survivors attaining orbit bound {}", bound + 1),
            expected.join(", "),
            computed.join(", "),
        );
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks that every transitive entry whose induced orbits are all of
/// length at most 23 is soluble, and that the bound is sharp: the natural
/// alternating group on five points is insoluble with largest orbit 24.
pub fn verify_soluble_threshold(max_degree: usize) -> Result<VerificationReport> {
    if max_degree == 0 || max_degree > CLASSIFY_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree: max_degree,
            limit: CLASSIFY_DEGREE_CAP,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(format!(
        "solubility of transitive groups of degree at most {max_degree} with induced orbits of length at most 23"
    ));
    let mut checked = 0usize;
    let mut violations: Vec<String> = Vec::new();
    for degree in 1..=max_degree {
        for entry in transitive_groups(degree)? {
            if entry.maol_perm <= 23 {
                checked += 1;
                if !entry.soluble {
                    violations.push(format!("degree {degree} order {} entry", entry.order));
                }
            }
        }
    }
    report.push_claim(
        "every entry within the orbit bound is soluble",
        violations.is_empty(),
        "0 insoluble",
        format!("{} insoluble among {checked} entries", violations.len()),
        violations.join("; "),
    );
    let alt5 = construct::alternating_natural(5)?;
    report.push_eq("Alt(5) largest induced orbit", 24, autos::maol_perm(&alt5)?);
    report.push_claim(
        "Alt(5) is insoluble",
        !structure::is_soluble(&alt5),
        "insoluble",
        if structure::is_soluble(&alt5) { "soluble" } else { "insoluble" },
        "derived series reached the trivial group",
    );
    let sym5 = construct::symmetric_natural(5)?;
    let sym5_orbit = autos::maol_perm(&sym5)?;
    report.push_claim(
        "Sym(5) largest induced orbit exceeds 23",
        sym5_orbit > 23,
        "> 23",
        sym5_orbit,
        "orbit within the soluble bound",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks the fixed catalogue rows: each coset action has the stated
/// degree and largest induced orbit, the stabilizer is core-free, and its
/// projection to the abelian block is a nontrivial quotient of the
/// stabilizer's abelianization.
pub fn verify_table1() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("catalogue of products with alternating groups");
    for row in construct::catalogue() {
        let action = construct::coset_action(&row.group, &row.stabilizer)?;
        let image = &action.image;
        report.push_eq(
            format!("row {} degree", row.index),
            row.expected_degree,
            image.degree(),
        );
        report.push_claim(
            format!("row {} image transitive", row.index),
            image.is_transitive(),
            "transitive",
            if image.is_transitive() { "transitive" } else { "intransitive" },
            "coset action image must be transitive",
        );
        report.push_eq(
            format!("row {}", row.index),
            row.expected_max_orbit,
            autos::maol_perm(image)?,
        );
        let core_free = structure::core_is_trivial(&row.group, &row.stabilizer)?;
        report.push_claim(
            format!("row {} stabilizer core-free", row.index),
            core_free,
            "trivial core",
            if core_free { "trivial core" } else { "nontrivial core" },
            "stabilizer contains a nontrivial normal subgroup of the product",
        );
        let projection = block_projection(&row.stabilizer, row.abelian_block)?;
        report.push_claim(
            format!("row {} abelian projection nontrivial", row.index),
            projection.order() > BigUint::one(),
            "> 1",
            projection.order(),
            "stabilizer projects trivially to the abelian block",
        );
        let derived = structure::derived_subgroup(&row.stabilizer);
        let abelianization = construct::coset_action(&row.stabilizer, &derived)?.image;
        let is_quotient = abelian_quotient_exists(&projection, &abelianization)?;
        report.push_claim(
            format!("row {} projection is an abelianization quotient", row.index),
            is_quotient,
            "quotient",
            if is_quotient { "quotient" } else { "not a quotient" },
            "projection does not embed in the stabilizer abelianization",
        );
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Restriction to the first `block` points of a group preserving the
/// split `[0, block) + [block, n)`.
fn block_projection(group: &PermutationGroup, block: usize) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    for g in group.generators() {
        let images: Vec<usize> = (0..block).map(|i| g.apply(i)).collect();
        gens.push(Permutation::from_images(&images)?);
    }
    PermutationGroup::new(block, gens)
}

/// Whether the abelian group `p` is a quotient of the abelian group `q`.
/// Finite abelian groups are self-dual, so this holds exactly when `p`
/// embeds in `q`: for every prime power, `q` must have at least as many
/// cyclic invariants of at least that order, read off from the counts of
/// elements of order dividing each power.
fn abelian_quotient_exists(p: &PermutationGroup, q: &PermutationGroup) -> Result<bool> {
    if !p.is_abelian() || !q.is_abelian() {
        return Ok(false);
    }
    let p_orders = element_orders(p)?;
    let q_orders = element_orders(q)?;
    let mut primes: Vec<u64> = Vec::new();
    for &o in &p_orders {
        let mut rest = o;
        for prime in EXTENSION_PRIMES {
            while rest % prime == 0 {
                rest /= prime;
                if !primes.contains(&prime) {
                    primes.push(prime);
                }
            }
        }
        let mut d = 11;
        while rest > 1 {
            while rest % d == 0 {
                rest /= d;
                if !primes.contains(&d) {
                    primes.push(d);
                }
            }
            d += 2;
        }
    }
    for prime in primes {
        for k in 1.. {
            let rank_p = invariant_rank(&p_orders, prime, k);
            if rank_p == 0 {
                break;
            }
            if invariant_rank(&q_orders, prime, k) < rank_p {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of cyclic invariants of order at least `prime^k` in an abelian
/// group with the given element orders: the base-`prime` logarithm of the
/// ratio of counts of elements whose order divides `prime^k` versus
/// `prime^(k-1)`.
fn invariant_rank(orders: &[u64], prime: u64, k: u32) -> u32 {
    let dividing = |modulus: u64| orders.iter().filter(|&&o| modulus % o == 0).count() as u64;
    let mut ratio = dividing(prime.pow(k)) / dividing(prime.pow(k - 1));
    let mut rank = 0;
    while ratio > 1 {
        ratio /= prime;
        rank += 1;
    }
    rank
}

fn element_orders(group: &PermutationGroup) -> Result<Vec<u64>> {
    let table = group.elements()?;
    Ok((0..table.len() as u32).map(|i| table.order_of(i)).collect())
}
