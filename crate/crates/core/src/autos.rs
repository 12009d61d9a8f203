//! Automorphism machinery: full automorphism groups by generator-image
//! backtracking, permutation automorphisms (those respecting the point
//! stabilizer class), normaliser-induced maps, central and power-map
//! automorphisms, orbit statistics, and standard-tuple invariants.
//!
//! Everything acts on element indices of a group's [`ElementTable`]; an
//! automorphism is a `Vec<u32>` sending index `i` to the index of its image.

use crate::error::{Error, Result};
use crate::group::{ElementTable, PermutationGroup};
use crate::perm::Permutation;
use crate::structure;
use std::collections::{BTreeSet, HashMap, HashSet};

/// Largest group order for automorphism-group computations.
pub const AUT_ORDER_CAP: u64 = 2000;

/// Largest automorphism set stored explicitly.
pub const AUT_SET_CAP: usize = 10_000;

/// A homomorphism between two groups with cached element tables, stored as
/// the full index-to-index image vector.
#[derive(Clone)]
pub struct GroupMap {
    pub source: PermutationGroup,
    pub target: PermutationGroup,
    /// `images[i]` is the target element index of the image of source
    /// element `i`.
    pub images: Vec<u32>,
}

impl GroupMap {
    /// Image of a source element index.
    pub fn apply_index(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    /// Verifies the homomorphism law on every pair (quadratic; test use).
    pub fn is_homomorphism(&self) -> Result<bool> {
        let s = self.source.elements()?;
        let t = self.target.elements()?;
        if self.images.len() != s.len() {
            return Ok(false);
        }
        for i in 0..s.len() as u32 {
            for j in 0..s.len() as u32 {
                let lhs = self.images[s.product(i, j) as usize];
                let rhs = t.product(self.images[i as usize], self.images[j as usize]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_surjective(&self) -> Result<bool> {
        let t = self.target.elements()?;
        let mut hit = vec![false; t.len()];
        for &i in &self.images {
            hit[i as usize] = true;
        }
        Ok(hit.iter().all(|&b| b))
    }

    /// Source element indices mapping to the target identity.
    pub fn kernel_indices(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(_, &img)| img == 0)
            .map(|(i, _)| i as u32)
            .collect()
    }

    /// The kernel as a permutation group on the source domain.
    pub fn kernel(&self) -> Result<PermutationGroup> {
        let s = self.source.elements()?;
        let gens = self
            .kernel_indices()
            .into_iter()
            .map(|i| s.element(i).clone())
            .collect();
        PermutationGroup::new(self.source.degree(), gens)
    }
}

/// A finite set of automorphisms of one group, as sorted index maps.
///
/// Construction asserts that the identity map and all inverses are present;
/// closure under composition is a mathematical property of every set built
/// here and is re-verified by [`AutSet::verify_closed`] in the test suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutSet {
    maps: Vec<Vec<u32>>,
}

impl AutSet {
    pub fn from_maps(mut maps: Vec<Vec<u32>>) -> Result<AutSet> {
        maps.sort_unstable();
        maps.dedup();
        if maps.len() > AUT_SET_CAP {
            return Err(Error::OrderTooLarge {
                order: maps.len() as u128,
                limit: AUT_SET_CAP as u128,
            });
        }
        let n = maps.first().map_or(0, Vec::len);
        let identity: Vec<u32> = (0..n as u32).collect();
        assert!(
            maps.binary_search(&identity).is_ok(),
            "automorphism set must contain the identity"
        );
        for map in &maps {
            let mut inverse = vec![0u32; n];
            for (i, &img) in map.iter().enumerate() {
                inverse[img as usize] = i as u32;
            }
            assert!(
                maps.binary_search(&inverse).is_ok(),
                "automorphism set must contain inverses"
            );
        }
        Ok(AutSet { maps })
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    pub fn contains_map(&self, map: &[u32]) -> bool {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).is_ok()
    }

    /// Whether every member's set is contained in `other`'s.
    pub fn is_subset_of(&self, other: &AutSet) -> bool {
        self.maps.iter().all(|m| other.contains_map(m))
    }

    /// Exhaustive closure check under composition (quadratic; test use).
    pub fn verify_closed(&self) -> bool {
        let n = self.maps.first().map_or(0, Vec::len);
        let mut buf = vec![0u32; n];
        for a in &self.maps {
            for b in &self.maps {
                for i in 0..n {
                    buf[i] = b[a[i] as usize];
                }
                if !self.contains_map(&buf) {
                    return false;
                }
            }
        }
        true
    }

    /// Converts the maps into [`GroupMap`] endomorphism records.
    pub fn to_group_maps(&self, group: &PermutationGroup) -> Vec<GroupMap> {
        self.maps
            .iter()
            .map(|m| GroupMap {
                source: group.clone(),
                target: group.clone(),
                images: m.clone(),
            })
            .collect()
    }
}

/// Sorted indices of the elements of `sub` within `parent`'s element table.
pub fn member_indices(parent: &PermutationGroup, sub: &PermutationGroup) -> Result<Vec<u32>> {
    let table = parent.elements()?;
    let mut out = Vec::new();
    for e in sub.elements()?.elements() {
        out.push(table.index_of(e).ok_or(Error::NotInParent)?);
    }
    out.sort_unstable();
    Ok(out)
}

/// Subgroup closure of a set of element indices (BFS over right products).
pub fn close_indices(table: &ElementTable, gens: &[u32]) -> Vec<u32> {
    let mut seen = HashSet::from([table.identity_index()]);
    let mut queue = vec![table.identity_index()];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = table.product(x, g);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Extends `gens[k] -> images[k]` to a homomorphism if one exists.
///
/// Breadth-first closure from the identity: each source element is reached
/// once as `x * gens[k]` with the image of `x` known, and every such edge is
/// checked, which forces the homomorphism law on all of `<gens>`. Returns
/// `None` when the assignment is inconsistent (or `gens` does not span).
pub fn extend_generator_images(
    source: &ElementTable,
    gens: &[u32],
    target: &ElementTable,
    images: &[u32],
) -> Option<Vec<u32>> {
    debug_assert_eq!(gens.len(), images.len());
    const UNSET: u32 = u32::MAX;
    let n = source.len();
    let mut map = vec![UNSET; n];
    map[0] = 0;
    let mut queue = Vec::with_capacity(n);
    queue.push(0u32);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &h) in gens.iter().zip(images.iter()) {
            let y = source.product(x, g);
            let img = target.product(map[x as usize], h);
            if map[y as usize] == UNSET {
                map[y as usize] = img;
                queue.push(y);
            } else if map[y as usize] != img {
                return None;
            }
        }
    }
    if map.iter().any(|&m| m == UNSET) {
        return None;
    }
    Some(map)
}

fn is_index_bijection(map: &[u32]) -> bool {
    let mut hit = vec![false; map.len()];
    for &i in map {
        if hit[i as usize] {
            return false;
        }
        hit[i as usize] = true;
    }
    true
}

/// Per-element invariants preserved by every automorphism.
struct Fingerprints {
    keys: Vec<(u64, u32, u64)>,
}

impl Fingerprints {
    /// (element order, conjugacy class size, order of the image in G/G').
    fn new(group: &PermutationGroup) -> Result<Fingerprints> {
        let table = group.elements()?;
        let n = table.len();
        let classes = structure::conjugacy_classes(group)?;
        let mut class_size = vec![0u32; n];
        for class in &classes {
            for &i in class {
                class_size[i as usize] = class.len() as u32;
            }
        }
        let derived: HashSet<u32> = member_indices(group, &structure::derived_subgroup(group))?
            .into_iter()
            .collect();
        let mut keys = Vec::with_capacity(n);
        for i in 0..n as u32 {
            let ord = table.order_of(i);
            let mut abel = 1;
            for k in 1..=ord {
                if ord % k == 0 && derived.contains(&table.power(i, k)) {
                    abel = k;
                    break;
                }
            }
            keys.push((ord, class_size[i as usize], abel));
        }
        Ok(Fingerprints { keys })
    }
}

fn check_order_cap(group: &PermutationGroup) -> Result<()> {
    if group.order() > AUT_ORDER_CAP.into() {
        return Err(Error::OrderTooLarge {
            order: group.order_u128().unwrap_or(u128::MAX),
            limit: AUT_ORDER_CAP as u128,
        });
    }
    Ok(())
}

/// Smallest `d` with a generating `d`-tuple, and the lexicographically first
/// such tuple of element indices. Exhausts all `(d-1)`-subsets to certify
/// minimality; subsets containing redundant elements are skipped, which is
/// harmless because a generating subset with a redundant member yields a
/// smaller generating subset.
pub fn min_generating_tuple(group: &PermutationGroup) -> Result<(usize, Vec<u32>)> {
    check_order_cap(group)?;
    let table = group.elements()?;
    let n = table.len();
    if n == 1 {
        return Ok((0, Vec::new()));
    }
    for d in 1.. {
        let mut found: Option<Vec<u32>> = None;
        search_tuples(table, n, d, &mut Vec::new(), &vec![0], &mut found);
        if let Some(tuple) = found {
            return Ok((d, tuple));
        }
    }
    unreachable!("a finite group is generated by its element list");
}

/// Depth-first scan over index combinations `i_1 < i_2 < ... < i_d`,
/// maintaining the closure of the chosen prefix; stops at the first
/// generating tuple in lexicographic order.
fn search_tuples(
    table: &ElementTable,
    n: usize,
    remaining: usize,
    chosen: &mut Vec<u32>,
    closure: &Vec<u32>,
    found: &mut Option<Vec<u32>>,
) {
    if found.is_some() {
        return;
    }
    if remaining == 0 {
        if closure.len() == n {
            *found = Some(chosen.clone());
        }
        return;
    }
    let start = chosen.last().map_or(1, |&last| last + 1);
    for i in start..n as u32 {
        if closure.binary_search(&i).is_ok() {
            continue; // redundant element cannot be needed in a minimal tuple
        }
        chosen.push(i);
        let bigger = close_indices(table, chosen);
        search_tuples(table, n, remaining - 1, chosen, &bigger, found);
        chosen.pop();
        if found.is_some() {
            return;
        }
    }
}

/// The full automorphism group as an [`AutSet`].
///
/// Backtracks over candidate images of a minimal generating tuple, pruning
/// by fingerprints and pairwise product orders, then extends each leaf by
/// generator closure and keeps the consistent bijections.
pub fn automorphism_group(group: &PermutationGroup) -> Result<AutSet> {
    check_order_cap(group)?;
    let table = group.elements()?;
    table.ensure_mult_table();
    let n = table.len();
    let (_, tuple) = min_generating_tuple(group)?;
    if tuple.is_empty() {
        return AutSet::from_maps(vec![vec![0]]);
    }
    let fp = Fingerprints::new(group)?;
    let candidates: Vec<Vec<u32>> = tuple
        .iter()
        .map(|&t| {
            (0..n as u32)
                .filter(|&j| fp.keys[j as usize] == fp.keys[t as usize])
                .collect()
        })
        .collect();
    let d = tuple.len();
    let mut pair_orders = vec![vec![0u64; d]; d];
    for a in 0..d {
        for b in 0..d {
            pair_orders[a][b] = table.order_of(table.product(tuple[a], tuple[b]));
        }
    }
    let mut maps = Vec::new();
    let mut images: Vec<u32> = Vec::with_capacity(d);
    backtrack_images(
        table,
        &tuple,
        &candidates,
        &pair_orders,
        &mut images,
        &mut maps,
    );
    AutSet::from_maps(maps)
}

fn backtrack_images(
    table: &ElementTable,
    tuple: &[u32],
    candidates: &[Vec<u32>],
    pair_orders: &[Vec<u64>],
    images: &mut Vec<u32>,
    maps: &mut Vec<Vec<u32>>,
) {
    let k = images.len();
    if k == tuple.len() {
        if let Some(map) = extend_generator_images(table, tuple, table, images) {
            if is_index_bijection(&map) {
                maps.push(map);
            }
        }
        return;
    }
    'next: for &cand in &candidates[k] {
        for m in 0..k {
            if table.order_of(table.product(images[m], cand)) != pair_orders[m][k]
                || table.order_of(table.product(cand, images[m])) != pair_orders[k][m]
            {
                continue 'next;
            }
        }
        images.push(cand);
        backtrack_images(table, tuple, candidates, pair_orders, images, maps);
        images.pop();
    }
}

/// Inner automorphisms; their number is the index of the centre.
pub fn inner_automorphisms(group: &PermutationGroup) -> Result<AutSet> {
    check_order_cap(group)?;
    let table = group.elements()?;
    let n = table.len();
    let mut maps: Vec<Vec<u32>> = Vec::new();
    for s in 0..n as u32 {
        maps.push((0..n as u32).map(|x| table.conjugate_index(x, s)).collect());
    }
    AutSet::from_maps(maps)
}

/// All homomorphisms `f: G -> centre(G)` that kill the derived subgroup,
/// as image vectors on `G`'s element indices. Every homomorphism into an
/// abelian group kills `G'`, so these are exactly `Hom(G, centre(G))`.
pub fn central_homomorphisms(group: &PermutationGroup) -> Result<Vec<Vec<u32>>> {
    check_order_cap(group)?;
    let table = group.elements()?;
    let derived = structure::derived_subgroup(group);
    let quotient_action = crate::construct::coset_action(group, &derived)?;
    let q_group = &quotient_action.image;
    let q_table = q_group.elements()?;
    let centre = structure::centre(group)?;
    let z_table = centre.elements()?;
    // Centre elements double as group elements; align the two index spaces.
    let z_in_g: Vec<u32> = z_table
        .elements()
        .iter()
        .map(|e| table.index_of(e).expect("centre elements lie in the group"))
        .collect();

    // Generators of the quotient: images of the group's generators.
    let q_gens: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| {
            quotient_action.map.images[table.index_of(g).expect("generator is a member") as usize]
        })
        .collect();

    let mut q_maps: Vec<Vec<u32>> = Vec::new();
    let mut images: Vec<u32> = Vec::with_capacity(q_gens.len());
    enumerate_homs(q_table, &q_gens, z_table, &mut images, &mut q_maps);

    let mut out: Vec<Vec<u32>> = q_maps
        .into_iter()
        .map(|qm| {
            (0..table.len())
                .map(|i| z_in_g[qm[quotient_action.map.images[i] as usize] as usize])
                .collect()
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Depth-first enumeration of all homomorphisms `<gens> -> target` by
/// generator images, pruned by element orders.
fn enumerate_homs(
    source: &ElementTable,
    gens: &[u32],
    target: &ElementTable,
    images: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let k = images.len();
    if k == gens.len() {
        if let Some(map) = extend_generator_images(source, gens, target, images) {
            out.push(map);
        }
        return;
    }
    let ord = source.order_of(gens[k]);
    for z in 0..target.len() as u32 {
        if ord % target.order_of(z) == 0 {
            images.push(z);
            enumerate_homs(source, gens, target, images, out);
            images.pop();
        }
    }
}

/// Central automorphisms `g -> g * f(g)`: those central endomorphisms whose
/// `f` inverts no nontrivial central element.
pub fn central_automorphisms(group: &PermutationGroup) -> Result<AutSet> {
    let table = group.elements()?;
    let centre_ids = structure::centre_indices(group)?;
    let mut maps = Vec::new();
    for f in central_homomorphisms(group)? {
        let injective = centre_ids
            .iter()
            .all(|&z| z == 0 || f[z as usize] != table.inverse(z));
        if !injective {
            continue;
        }
        let map: Vec<u32> = (0..table.len() as u32)
            .map(|i| table.product(i, f[i as usize]))
            .collect();
        debug_assert!(is_index_bijection(&map));
        maps.push(map);
    }
    AutSet::from_maps(maps)
}

/// Power maps `g -> g^e` that are automorphisms, for `e` modulo the exponent.
pub fn power_map_automorphisms(group: &PermutationGroup) -> Result<AutSet> {
    check_order_cap(group)?;
    let table = group.elements()?;
    let n = table.len();
    let exponent = structure::exponent(group)?;
    let gen_indices: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator is a member"))
        .collect();
    let mut maps = Vec::new();
    for e in 1..=exponent {
        let map: Vec<u32> = (0..n as u32).map(|i| table.power(i, e)).collect();
        if !is_index_bijection(&map) {
            continue;
        }
        // Homomorphism test on (x, generator) pairs spans all pairs.
        let hom = (0..n as u32).all(|x| {
            gen_indices
                .iter()
                .all(|&g| map[table.product(x, g) as usize] == table.product(map[x as usize], map[g as usize]))
        });
        if hom {
            maps.push(map);
        }
    }
    AutSet::from_maps(maps)
}

/// Element-index sets of all point stabilizers.
fn point_stabilizer_sets(group: &PermutationGroup) -> Result<Vec<Vec<u32>>> {
    (0..group.degree())
        .map(|omega| member_indices(group, &group.point_stabilizer(omega)?))
        .collect()
}

/// Automorphisms sending the point stabilizer to a point stabilizer.
///
/// For a transitive group the point stabilizers form a single conjugacy
/// class of subgroups, so this set is exactly the automorphisms that map
/// the stabilizer class to itself; it is a subgroup containing the inner
/// automorphisms.
pub fn aut_perm(group: &PermutationGroup) -> Result<AutSet> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let auts = automorphism_group(group)?;
    let stab_sets: HashSet<Vec<u32>> = point_stabilizer_sets(group)?.into_iter().collect();
    let stab0 = member_indices(group, &group.point_stabilizer(0)?)?;
    let maps: Vec<Vec<u32>> = auts
        .maps()
        .iter()
        .filter(|map| {
            let mut image: Vec<u32> = stab0.iter().map(|&x| map[x as usize]).collect();
            image.sort_unstable();
            stab_sets.contains(&image)
        })
        .cloned()
        .collect();
    AutSet::from_maps(maps)
}

/// Automorphisms induced by conjugation with normalising elements of the
/// full symmetric group on the domain, plus the normaliser order.
/// Scans all of `Sym(n)`; the degree is capped accordingly.
pub fn aut_perm_via_normaliser(group: &PermutationGroup) -> Result<(AutSet, u64)> {
    const DEGREE_CAP: usize = 7;
    let n = group.degree();
    if n > DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree: n,
            limit: DEGREE_CAP,
        });
    }
    let table = group.elements()?;
    let mut maps: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut normaliser_order = 0u64;
    let mut points: Vec<usize> = (0..n).collect();
    permute_all(&mut points, 0, &mut |images| {
        let s = Permutation::from_images(images).expect("permutation of the domain");
        if !group
            .generators()
            .iter()
            .all(|g| group.contains(&g.conjugate(&s)))
        {
            return;
        }
        normaliser_order += 1;
        let map: Vec<u32> = (0..table.len() as u32)
            .map(|i| {
                table
                    .index_of(&table.element(i).conjugate(&s))
                    .expect("conjugation by a normalising element stays in the group")
            })
            .collect();
        maps.insert(map);
    });
    Ok((AutSet::from_maps(maps.into_iter().collect())?, normaliser_order))
}

/// Heap's algorithm over the point list, invoking `visit` on each order.
fn permute_all(points: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == points.len() {
        visit(points);
        return;
    }
    for i in k..points.len() {
        points.swap(k, i);
        permute_all(points, k + 1, visit);
        points.swap(k, i);
    }
}

/// Orbit lengths of an automorphism set acting on the group's elements,
/// as a sorted multiset (union-find over all element/map edges).
pub fn orbit_length_multiset(auts: &AutSet, group: &PermutationGroup) -> Result<Vec<usize>> {
    let n = group.elements()?.len();
    let mut parent: Vec<u32> = (0..n as u32).collect();
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
    for map in auts.maps() {
        for i in 0..n as u32 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, map[i as usize]));
            if a != b {
                parent[a as usize] = b;
            }
        }
    }
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for i in 0..n as u32 {
        *counts.entry(find(&mut parent, i)).or_insert(0) += 1;
    }
    let mut lengths: Vec<usize> = counts.into_values().collect();
    lengths.sort_unstable();
    Ok(lengths)
}

/// Maximum `Aut(G)`-orbit length on the elements of `G`.
pub fn maol(group: &PermutationGroup) -> Result<u64> {
    let auts = automorphism_group(group)?;
    Ok(*orbit_length_multiset(&auts, group)?
        .last()
        .expect("group is nonempty") as u64)
}

/// Maximum orbit length on `G` of the permutation automorphisms.
pub fn maol_perm(group: &PermutationGroup) -> Result<u64> {
    let auts = aut_perm(group)?;
    Ok(*orbit_length_multiset(&auts, group)?
        .last()
        .expect("group is nonempty") as u64)
}

/// A standard generating tuple of an abelian group: entrywise products of
/// bases of the Sylow subgroups, the shorter bases padded by the identity.
/// Entries are element indices; the length is the minimal generator count.
pub fn standard_generating_tuple(group: &PermutationGroup) -> Result<Vec<u32>> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    check_order_cap(group)?;
    let table = group.elements()?;
    let order = group.order_u128().expect("capped order fits") as u64;
    let mut rank = 0;
    let mut bases: Vec<Vec<u32>> = Vec::new();
    for p in prime_divisors(order) {
        let basis = sylow_basis(table, p);
        rank = rank.max(basis.len());
        bases.push(basis);
    }
    let mut tuple = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut entry = table.identity_index();
        for basis in &bases {
            if let Some(&b) = basis.get(i) {
                entry = table.product(entry, b);
            }
        }
        tuple.push(entry);
    }
    Ok(tuple)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Basis of the Sylow `p`-subgroup of an abelian group: repeatedly append
/// the first element of maximal order whose span stays direct. Each partial
/// direct sum built this way is a direct summand, so the greedy scan always
/// completes and the orders come out in the canonical decreasing pattern.
fn sylow_basis(table: &ElementTable, p: u64) -> Vec<u32> {
    let members: Vec<u32> = (0..table.len() as u32)
        .filter(|&i| {
            let mut ord = table.order_of(i);
            while ord % p == 0 {
                ord /= p;
            }
            ord == 1
        })
        .collect();
    let sylow_order = members.len();
    let mut basis: Vec<u32> = Vec::new();
    let mut span: Vec<u32> = vec![table.identity_index()];
    while span.len() < sylow_order {
        let mut chosen = None;
        let mut best_order = 0;
        for &x in &members {
            let ord = table.order_of(x);
            if ord <= best_order || span.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = basis.clone();
            gens.push(x);
            let bigger = close_indices(table, &gens);
            if bigger.len() as u64 == span.len() as u64 * ord {
                chosen = Some((x, bigger));
                best_order = ord;
            }
        }
        let (x, bigger) = chosen.expect("an abelian p-group always extends to a basis");
        basis.push(x);
        span = bigger;
    }
    basis
}

/// Whether the tuple's entrywise image in `G/G'` is a standard generating
/// tuple of the abelianization.
pub fn is_standard_tuple(group: &PermutationGroup, tuple: &[u32]) -> Result<bool> {
    let derived = structure::derived_subgroup(group);
    let action = crate::construct::coset_action(group, &derived)?;
    let q_group = &action.image;
    let q_table = q_group.elements()?;
    let reference = standard_generating_tuple(q_group)?;
    if tuple.len() != reference.len() {
        return Ok(false);
    }
    let q_order = q_table.len() as u64;
    for p in prime_divisors(q_order) {
        // Exponent projecting the abelian quotient onto its Sylow p-part.
        let mut p_part = 1u64;
        while q_order % (p_part * p) == 0 {
            p_part *= p;
        }
        let co_part = q_order / p_part;
        let exponent = (1..).find(|k| (k * co_part) % p_part == 1 % p_part).unwrap() * co_part;
        let project = |x: u32| q_table.power(x, exponent);
        let expected: Vec<u64> = reference
            .iter()
            .map(|&t| q_table.order_of(project(t)))
            .collect();
        let projected: Vec<u32> = tuple
            .iter()
            .map(|&g| project(action.map.images[g as usize]))
            .collect();
        for (x, &ord) in projected.iter().zip(expected.iter()) {
            if q_table.order_of(*x) != ord {
                return Ok(false);
            }
        }
        // Directness of the nontrivial projections.
        let nontrivial: Vec<u32> = projected.iter().copied().filter(|&x| x != 0).collect();
        let span = close_indices(q_table, &nontrivial);
        let product: u64 = nontrivial.iter().map(|&x| q_table.order_of(x)).product();
        if span.len() as u64 != product {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The invariants attached to a standard tuple: quotient-order powers, the
/// conjugation actions on the derived subgroup, and pairwise commutators.
/// Equality of these records defines equivalence of standard tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacTuple {
    /// `g_i` raised to the order of its image in `G/G'`; lies in `G'`.
    /// Entries are positions in the sorted member list of `G'`.
    pub powers: Vec<u32>,
    /// Conjugation by `g_i` restricted to `G'`, as a map on positions in
    /// the sorted member list of `G'`.
    pub conjugations: Vec<Vec<u32>>,
    /// Commutators `[g_i, g_j]` for `i < j`, row-major, as positions in the
    /// sorted member list of `G'`.
    pub commutators: Vec<u32>,
}

/// Computes the power-automorphism-commutator record of a standard tuple.
pub fn pac_tuple(group: &PermutationGroup, tuple: &[u32]) -> Result<PacTuple> {
    if !is_standard_tuple(group, tuple)? {
        return Err(Error::Unsupported("not a standard tuple".into()));
    }
    let table = group.elements()?;
    let derived = structure::derived_subgroup(group);
    let derived_ids = member_indices(group, &derived)?;
    let action = crate::construct::coset_action(group, &derived)?;
    let q_table = action.image.elements()?;
    let position = |x: u32| -> Result<u32> {
        derived_ids
            .binary_search(&x)
            .map(|p| p as u32)
            .map_err(|_| Error::NotAMember)
    };
    let mut powers = Vec::with_capacity(tuple.len());
    let mut conjugations = Vec::with_capacity(tuple.len());
    for &g in tuple {
        let q_ord = q_table.order_of(action.map.images[g as usize]);
        powers.push(position(table.power(g, q_ord))?);
        conjugations.push(
            derived_ids
                .iter()
                .map(|&x| position(table.conjugate_index(x, g)))
                .collect::<Result<Vec<u32>>>()?,
        );
    }
    let mut commutators = Vec::new();
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            commutators.push(position(structure::commutator_index(
                table, tuple[i], tuple[j],
            ))?);
        }
    }
    Ok(PacTuple {
        powers,
        conjugations,
        commutators,
    })
}

/// Whether two standard tuples have identical invariant records.
pub fn pac_equivalent(group: &PermutationGroup, a: &[u32], b: &[u32]) -> Result<bool> {
    Ok(pac_tuple(group, a)? == pac_tuple(group, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::perm::lcm;

    fn cyclic(m: usize) -> PermutationGroup {
        construct::cyclic_regular(m).unwrap()
    }

    #[test]
    fn minimal_generating_tuples() {
        assert_eq!(min_generating_tuple(&cyclic(6)).unwrap().0, 1);
        assert_eq!(
            min_generating_tuple(&construct::abelian_regular(&[2, 2]).unwrap())
                .unwrap()
                .0,
            2
        );
        let z3_a5 = construct::direct_product(
            &cyclic(3),
            &construct::alternating_natural(5).unwrap(),
        );
        assert_eq!(min_generating_tuple(&z3_a5).unwrap().0, 2);
        let (d, tuple) = min_generating_tuple(&construct::symmetric_natural(4).unwrap()).unwrap();
        assert_eq!(d, 2);
        let table = construct::symmetric_natural(4).unwrap();
        let table = table.elements().unwrap();
        assert_eq!(close_indices(table, &tuple).len(), 24);
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphism_group(&cyclic(8)).unwrap().len(), 4);
        let s3 = construct::symmetric_natural(3).unwrap();
        let auts = automorphism_group(&s3).unwrap();
        assert_eq!(auts.len(), 6);
        assert_eq!(inner_automorphisms(&s3).unwrap(), auts);
        assert_eq!(
            automorphism_group(&construct::abelian_regular(&[2, 2]).unwrap())
                .unwrap()
                .len(),
            6
        );
        assert_eq!(automorphism_group(&PermutationGroup::trivial(1)).unwrap().len(), 1);
    }

    #[test]
    fn automorphism_sets_are_closed() {
        for g in [
            construct::symmetric_natural(4).unwrap(),
            construct::dihedral_natural(4).unwrap(),
            construct::abelian_regular(&[4, 2]).unwrap(),
        ] {
            let auts = automorphism_group(&g).unwrap();
            assert!(auts.verify_closed());
            for map in auts.to_group_maps(&g) {
                assert!(map.is_homomorphism().unwrap());
                assert!(map.is_surjective().unwrap());
            }
        }
    }

    #[test]
    fn inner_automorphism_count_is_centre_index() {
        let d8 = construct::dihedral_natural(4).unwrap();
        assert_eq!(inner_automorphisms(&d8).unwrap().len(), 4);
        assert_eq!(inner_automorphisms(&cyclic(12)).unwrap().len(), 1);
        let s4 = construct::symmetric_natural(4).unwrap();
        let inn = inner_automorphisms(&s4).unwrap();
        assert_eq!(inn.len(), 24);
        assert!(inn.is_subset_of(&automorphism_group(&s4).unwrap()));
    }

    #[test]
    fn central_automorphisms_of_small_groups() {
        let d8 = construct::dihedral_natural(4).unwrap();
        assert_eq!(central_homomorphisms(&d8).unwrap().len(), 4);
        let cent = central_automorphisms(&d8).unwrap();
        assert_eq!(cent.len(), 4);
        assert!(cent.is_subset_of(&automorphism_group(&d8).unwrap()));
        // Trivial centre: only the identity.
        let s3 = construct::symmetric_natural(3).unwrap();
        assert_eq!(central_automorphisms(&s3).unwrap().len(), 1);
    }

    #[test]
    fn power_map_counts() {
        assert_eq!(power_map_automorphisms(&cyclic(5)).unwrap().len(), 4);
        assert_eq!(
            power_map_automorphisms(&construct::abelian_regular(&[4, 2]).unwrap())
                .unwrap()
                .len(),
            2
        );
        let s3 = construct::symmetric_natural(3).unwrap();
        assert_eq!(power_map_automorphisms(&s3).unwrap().len(), 1);
    }

    #[test]
    fn aut_perm_of_alternating_five() {
        let a5 = construct::alternating_natural(5).unwrap();
        let auts = automorphism_group(&a5).unwrap();
        assert_eq!(auts.len(), 120);
        let perm_auts = aut_perm(&a5).unwrap();
        assert_eq!(perm_auts.len(), 120);
        assert_eq!(maol_perm(&a5).unwrap(), 24);
        let lengths = orbit_length_multiset(&perm_auts, &a5).unwrap();
        assert_eq!(lengths.iter().sum::<usize>(), 60);
        assert_eq!(*lengths.last().unwrap(), 24);
    }

    #[test]
    fn aut_perm_requires_transitivity() {
        let g = PermutationGroup::from_cycle_strings(4, &["(1,2)"]).unwrap();
        assert!(matches!(aut_perm(&g), Err(Error::NotTransitive)));
    }

    #[test]
    fn dihedral_normaliser_scan() {
        let d8 = construct::dihedral_natural(4).unwrap();
        let (maps, norm_order) = aut_perm_via_normaliser(&d8).unwrap();
        // D8 is a Sylow 2-subgroup of Sym(4), hence self-normalising.
        assert_eq!(norm_order, 8);
        assert_eq!(maps.len(), 4);
        assert_eq!(maps, aut_perm(&d8).unwrap());
        assert_eq!(maol_perm(&d8).unwrap(), 2);
    }

    #[test]
    fn cyclic_normaliser_scan_realizes_full_automorphism_group() {
        let c3 = cyclic(3);
        let (maps, norm_order) = aut_perm_via_normaliser(&c3).unwrap();
        assert_eq!(norm_order, 6);
        assert_eq!(maps.len(), 2);
        assert_eq!(maps, automorphism_group(&c3).unwrap());
    }

    #[test]
    fn symmetric_natural_normaliser_induces_inner_maps() {
        for n in [3, 4, 5] {
            let s = construct::symmetric_natural(n).unwrap();
            let (maps, norm_order) = aut_perm_via_normaliser(&s).unwrap();
            assert_eq!(norm_order, s.order_u128().unwrap() as u64);
            assert_eq!(maps, inner_automorphisms(&s).unwrap());
        }
    }

    #[test]
    fn maol_of_small_cyclic_groups() {
        assert_eq!(maol(&cyclic(1)).unwrap(), 1);
        assert_eq!(maol(&cyclic(2)).unwrap(), 1);
        assert_eq!(maol_perm(&cyclic(2)).unwrap(), 1);
        assert_eq!(maol(&cyclic(3)).unwrap(), 2);
        assert_eq!(maol_perm(&cyclic(3)).unwrap(), 2);
    }

    #[test]
    fn semiregularity_on_generating_tuples() {
        for g in [
            construct::symmetric_natural(4).unwrap(),
            construct::dihedral_natural(4).unwrap(),
            construct::abelian_regular(&[2, 2]).unwrap(),
        ] {
            let (_, tuple) = min_generating_tuple(&g).unwrap();
            let auts = automorphism_group(&g).unwrap();
            let mut seen = HashSet::new();
            for map in auts.maps() {
                let key: Vec<u32> = tuple.iter().map(|&t| map[t as usize]).collect();
                assert!(seen.insert(key), "two automorphisms agreed on the tuple");
            }
        }
    }

    #[test]
    fn standard_tuples_of_abelian_groups() {
        let g = construct::abelian_regular(&[4, 2, 3]).unwrap();
        let table = g.elements().unwrap();
        let tuple = standard_generating_tuple(&g).unwrap();
        assert_eq!(tuple.len(), 2);
        // Entrywise orders are lcms of the per-prime basis orders: 12 and 2.
        assert_eq!(table.order_of(tuple[0]), 12);
        assert_eq!(table.order_of(tuple[1]), 2);
        assert_eq!(close_indices(table, &tuple).len(), 24);
        assert!(is_standard_tuple(&g, &tuple).unwrap());
        // Abelian group: trivial derived subgroup, trivial pac entries.
        let pac = pac_tuple(&g, &tuple).unwrap();
        assert!(pac.powers.iter().all(|&p| p == 0));
        assert!(pac.commutators.iter().all(|&c| c == 0));
        assert!(pac.conjugations.iter().all(|c| c == &vec![0]));
    }

    #[test]
    fn pac_tuples_of_dihedral_group() {
        let d8 = construct::dihedral_natural(4).unwrap();
        let tuple = standard_generating_tuple_of_nonabelian(&d8);
        assert!(is_standard_tuple(&d8, &tuple).unwrap());
        let pac = pac_tuple(&d8, &tuple).unwrap();
        assert_eq!(pac.powers.len(), 2);
        assert_eq!(pac.commutators.len(), 1);
        // The generators do not commute, so the commutator is the
        // nontrivial element of the derived subgroup.
        assert_ne!(pac.commutators[0], 0);
        assert!(pac_equivalent(&d8, &tuple, &tuple).unwrap());
    }

    /// First standard tuple of a nonabelian group by scanning index pairs.
    fn standard_tuple_of(group: &PermutationGroup, len: usize) -> Option<Vec<u32>> {
        let n = group.elements().unwrap().len() as u32;
        let mut tuple = vec![0u32; len];
        fn rec(group: &PermutationGroup, n: u32, tuple: &mut Vec<u32>, k: usize) -> bool {
            if k == tuple.len() {
                return is_standard_tuple(group, tuple).unwrap();
            }
            for i in 0..n {
                tuple[k] = i;
                if rec(group, n, tuple, k + 1) {
                    return true;
                }
            }
            false
        }
        if rec(group, n, &mut tuple, 0) {
            Some(tuple)
        } else {
            None
        }
    }

    fn standard_generating_tuple_of_nonabelian(group: &PermutationGroup) -> Vec<u32> {
        standard_tuple_of(group, 2).expect("a standard tuple exists")
    }

    #[test]
    fn equivalent_standard_tuples_are_aut_related() {
        let d8 = construct::dihedral_natural(4).unwrap();
        let table = d8.elements().unwrap();
        let auts = automorphism_group(&d8).unwrap();
        let derived_ids = member_indices(&d8, &structure::derived_subgroup(&d8)).unwrap();
        // Collect all standard 2-tuples and bucket them by pac record.
        let mut by_record: HashMap<Vec<u8>, Vec<Vec<u32>>> = HashMap::new();
        for a in 0..table.len() as u32 {
            for b in 0..table.len() as u32 {
                let t = vec![a, b];
                if is_standard_tuple(&d8, &t).unwrap() {
                    let pac = pac_tuple(&d8, &t).unwrap();
                    let key = format!("{pac:?}").into_bytes();
                    by_record.entry(key).or_default().push(t);
                }
            }
        }
        // Automorphisms centralising the derived subgroup.
        let centralizing: Vec<&Vec<u32>> = auts
            .maps()
            .iter()
            .filter(|m| derived_ids.iter().all(|&x| m[x as usize] == x))
            .collect();
        for bucket in by_record.values() {
            let first = &bucket[0];
            for other in bucket {
                assert!(
                    centralizing.iter().any(|m| {
                        first.iter().zip(other.iter()).all(|(&x, &y)| m[x as usize] == y)
                    }),
                    "equivalent tuples must be related by a derived-centralizing automorphism"
                );
            }
        }
        assert!(by_record.len() > 1);
    }

    #[test]
    fn exponent_projection_helper_is_consistent() {
        // lcm sanity for the power machinery used above.
        assert_eq!(lcm(4, 6), 12);
        let g = construct::abelian_regular(&[2, 3]).unwrap();
        let tuple = standard_generating_tuple(&g).unwrap();
        assert_eq!(tuple.len(), 1);
        assert_eq!(g.elements().unwrap().order_of(tuple[0]), 6);
    }
}
