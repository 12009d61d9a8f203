//! Structural computations on permutation groups: conjugacy classes,
//! centres, derived series, solubility, cores, and subgroup transporters.

use crate::error::Result;
use crate::group::{ElementTable, PermutationGroup, StabilizerChain};
use crate::perm::{lcm, Permutation};
use num_bigint::BigUint;
use std::collections::HashSet;

/// Commutator `[a, b] = a^-1 b^-1 a b` by table indices.
pub fn commutator_index(table: &ElementTable, a: u32, b: u32) -> u32 {
    let left = table.product(table.inverse(a), table.inverse(b));
    table.product(left, table.product(a, b))
}

/// Conjugacy classes as sorted element-index lists, ordered by least member.
pub fn conjugacy_classes(group: &PermutationGroup) -> Result<Vec<Vec<u32>>> {
    let table = group.elements()?;
    let gen_indices: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator is a member"))
        .collect();
    let n = table.len();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut class = vec![start];
        seen[start as usize] = true;
        let mut head = 0;
        while head < class.len() {
            let x = class[head];
            head += 1;
            for &s in &gen_indices {
                let y = table.conjugate_index(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    class.push(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}

/// Element indices of the centre.
pub fn centre_indices(group: &PermutationGroup) -> Result<Vec<u32>> {
    let table = group.elements()?;
    let gen_indices: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator is a member"))
        .collect();
    Ok((0..table.len() as u32)
        .filter(|&z| {
            gen_indices
                .iter()
                .all(|&g| table.product(z, g) == table.product(g, z))
        })
        .collect())
}

/// The centre as a permutation group.
pub fn centre(group: &PermutationGroup) -> Result<PermutationGroup> {
    let table = group.elements()?;
    let gens = centre_indices(group)?
        .into_iter()
        .map(|i| table.element(i).clone())
        .collect();
    PermutationGroup::new(group.degree(), gens)
}

/// Centralizer of one element, as indices.
pub fn element_centralizer_indices(table: &ElementTable, x: u32) -> Vec<u32> {
    (0..table.len() as u32)
        .filter(|&z| table.product(z, x) == table.product(x, z))
        .collect()
}

/// Smallest normal subgroup of `group` containing `seeds`.
///
/// Worklist closure: each installed generator is conjugated by every group
/// generator; conjugation being an automorphism, checking generators suffices.
pub fn normal_closure(group: &PermutationGroup, seeds: &[Permutation]) -> PermutationGroup {
    let degree = group.degree();
    let mut chain = StabilizerChain::new(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut queue: Vec<Permutation> = seeds.to_vec();
    while let Some(x) = queue.pop() {
        if x.is_identity() || chain.contains(&x) {
            continue;
        }
        chain.insert(x.clone());
        for s in group.generators() {
            queue.push(x.conjugate(s));
        }
        gens.push(x);
    }
    PermutationGroup::new(degree, gens).expect("seed degrees match")
}

/// Derived subgroup: the normal closure of the generator commutators.
pub fn derived_subgroup(group: &PermutationGroup) -> PermutationGroup {
    let gens = group.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in gens.iter().skip(i + 1) {
            let comm = a
                .inverse()
                .compose(&b.inverse())
                .compose(a)
                .compose(b);
            if !comm.is_identity() {
                seeds.push(comm);
            }
        }
    }
    normal_closure(group, &seeds)
}

/// Derived series, starting at the group, until it stabilizes.
pub fn derived_series(group: &PermutationGroup) -> Vec<PermutationGroup> {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            break;
        }
        series.push(next);
        if series.last().expect("just pushed").is_trivial() {
            break;
        }
    }
    series
}

pub fn is_soluble(group: &PermutationGroup) -> bool {
    derived_series(group)
        .last()
        .expect("series is nonempty")
        .is_trivial()
}

/// Whether the group is perfect (equal to its derived subgroup).
pub fn is_perfect(group: &PermutationGroup) -> bool {
    derived_subgroup(group).order() == group.order()
}

/// Exponent: least common multiple of the element orders.
pub fn exponent(group: &PermutationGroup) -> Result<u64> {
    let table = group.elements()?;
    Ok((0..table.len() as u32).fold(1u64, |acc, i| lcm(acc, table.order_of(i))))
}

/// Core of `subgroup` in `group`: the largest normal subgroup of `group`
/// contained in `subgroup`, i.e. the elements whose whole conjugacy orbit
/// under `group` stays inside `subgroup`.
pub fn core(group: &PermutationGroup, subgroup: &PermutationGroup) -> Result<PermutationGroup> {
    let table = group.elements()?;
    let gen_indices: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator is a member"))
        .collect();
    let sub_indices: HashSet<u32> = subgroup
        .elements()?
        .elements()
        .iter()
        .map(|e| {
            table
                .index_of(e)
                .expect("subgroup elements lie in the group")
        })
        .collect();
    let mut core_gens = Vec::new();
    'candidates: for &x in &sub_indices {
        let mut seen = HashSet::from([x]);
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            if !sub_indices.contains(&y) {
                continue 'candidates;
            }
            for &s in &gen_indices {
                let z = table.conjugate_index(y, s);
                if seen.insert(z) {
                    queue.push(z);
                }
            }
        }
        core_gens.push(table.element(x).clone());
    }
    PermutationGroup::new(group.degree(), core_gens)
}

pub fn core_is_trivial(group: &PermutationGroup, subgroup: &PermutationGroup) -> Result<bool> {
    Ok(core(group, subgroup)?.is_trivial())
}

/// Searches `ambient` for `s` with `a^s = b`; `None` if the subgroups are
/// not conjugate in `ambient`. Exhaustive over the ambient element table.
pub fn subgroup_transporter(
    ambient: &PermutationGroup,
    a: &PermutationGroup,
    b: &PermutationGroup,
) -> Result<Option<Permutation>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let table = ambient.elements()?;
    let index_set = |g: &PermutationGroup| -> Result<Option<Vec<u32>>> {
        let mut out = Vec::new();
        for e in g.elements()?.elements() {
            match table.index_of(e) {
                Some(i) => out.push(i),
                None => return Ok(None),
            }
        }
        out.sort_unstable();
        Ok(Some(out))
    };
    let (a_set, b_set) = match (index_set(a)?, index_set(b)?) {
        (Some(x), Some(y)) => (x, y),
        _ => return Ok(None),
    };
    for s in 0..table.len() as u32 {
        let mut image: Vec<u32> = a_set
            .iter()
            .map(|&g| table.conjugate_index(g, s))
            .collect();
        image.sort_unstable();
        if image == b_set {
            return Ok(Some(table.element(s).clone()));
        }
    }
    Ok(None)
}

/// Abelianization order `|G| / |G'|`.
pub fn abelianization_order(group: &PermutationGroup) -> BigUint {
    group.order() / derived_subgroup(group).order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(degree, gens).unwrap()
    }

    #[test]
    fn conjugacy_class_sizes() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let mut sizes: Vec<usize> = conjugacy_classes(&s3).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let mut sizes: Vec<usize> = conjugacy_classes(&s4).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);

        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let mut sizes: Vec<usize> = conjugacy_classes(&a5).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn centre_of_dihedral_group() {
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let z = centre(&d8).unwrap();
        assert_eq!(z.order(), BigUint::from(2u32));
        assert!(z.contains(&Permutation::parse_cycles("(1,3)(2,4)", 4).unwrap()));
        let a4 = group(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert!(centre(&a4).unwrap().is_trivial());
    }

    #[test]
    fn derived_series_of_symmetric_group() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let series = derived_series(&s4);
        let orders: Vec<u32> = series
            .iter()
            .map(|g| g.order_u128().unwrap() as u32)
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_soluble(&s4));
    }

    #[test]
    fn alternating_five_is_perfect_and_insoluble() {
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        assert!(is_perfect(&a5));
        assert!(!is_soluble(&a5));
        assert_eq!(abelianization_order(&a5), BigUint::from(1u32));
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(abelianization_order(&s3), BigUint::from(2u32));
    }

    #[test]
    fn normal_closure_of_a_transposition() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let t = Permutation::parse_cycles("(1,2)", 4).unwrap();
        assert_eq!(normal_closure(&s4, &[t]).order(), BigUint::from(24u32));
        let double = Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap();
        assert_eq!(
            normal_closure(&s4, &[double]).order(),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn exponent_values() {
        assert_eq!(exponent(&group(3, &["(1,2)", "(1,2,3)"])).unwrap(), 6);
        assert_eq!(exponent(&group(4, &["(1,2,3,4)", "(1,3)"])).unwrap(), 4);
        assert_eq!(
            exponent(&group(5, &["(1,2,3,4,5)", "(1,2,3)"])).unwrap(),
            30
        );
    }

    #[test]
    fn core_of_point_stabilizer() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let stab = s4.point_stabilizer(0).unwrap();
        assert!(core_is_trivial(&s4, &stab).unwrap());
        // A normal subgroup is its own core.
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(core(&s4, &v4).unwrap().order(), BigUint::from(4u32));
    }

    #[test]
    fn transporter_between_conjugate_subgroups() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a = group(4, &["(1,2)"]);
        let b = group(4, &["(3,4)"]);
        let s = subgroup_transporter(&s4, &a, &b).unwrap().unwrap();
        assert!(a.conjugate_by(&s).equals(&b));
        // Non-conjugate subgroups of the same order.
        let c = group(4, &["(1,2)(3,4)"]);
        assert!(subgroup_transporter(&s4, &a, &c).unwrap().is_none());
    }
}
