//! Constructors for standard permutation groups, product and coset actions,
//! and a fixed catalogue of transitive actions of products with Alt(5).

use crate::autos::GroupMap;
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Cyclic group of order `m` in its regular action; `m = 1` is the trivial
/// group on one point.
pub fn cyclic_regular(m: usize) -> Result<PermutationGroup> {
    if m == 0 {
        return Err(Error::Unsupported("cyclic order must be positive".into()));
    }
    let cycle: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    PermutationGroup::new(m, vec![Permutation::from_images(&cycle)?])
}

/// Generators of a direct product of cyclic groups in its regular action:
/// `gens[t]` adds 1 to the `t`-th coordinate. Points are mixed-radix tuples,
/// first factor most significant.
pub fn abelian_coordinate_generators(factors: &[usize]) -> Result<(usize, Vec<Permutation>)> {
    if factors.iter().any(|&f| f < 2) {
        return Err(Error::Unsupported(
            "abelian factors must all be at least 2".into(),
        ));
    }
    let degree: usize = factors.iter().product::<usize>().max(1);
    let mut gens = Vec::with_capacity(factors.len());
    let mut block: usize = degree; // size of the sub-block a coordinate spans
    for &f in factors {
        block /= f;
        let images: Vec<usize> = (0..degree)
            .map(|p| {
                let digit = (p / block) % f;
                p + block * (((digit + 1) % f) + f - digit) - block * f
            })
            .collect();
        gens.push(Permutation::from_images(&images)?);
    }
    Ok((degree, gens))
}

/// Direct product of cyclic groups `Z/f1 x Z/f2 x ...` acting regularly.
pub fn abelian_regular(factors: &[usize]) -> Result<PermutationGroup> {
    let (degree, gens) = abelian_coordinate_generators(factors)?;
    PermutationGroup::new(degree, gens)
}

/// Symmetric group in its natural action.
pub fn symmetric_natural(n: usize) -> Result<PermutationGroup> {
    match n {
        0 => Err(Error::Unsupported("degree must be positive".into())),
        1 => PermutationGroup::new(1, vec![]),
        _ => {
            let swap = Permutation::parse_cycles("(1,2)", n)?;
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            PermutationGroup::new(n, vec![swap, Permutation::from_images(&cycle)?])
        }
    }
}

/// Alternating group in its natural action, generated by 3-cycles.
pub fn alternating_natural(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::Unsupported("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for k in 2..n {
        gens.push(Permutation::from_cycles(&[vec![0, 1, k]], n)?);
    }
    PermutationGroup::new(n, gens)
}

/// Dihedral group of order `2n` acting naturally on `n >= 3` points.
pub fn dihedral_natural(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::Unsupported(
            "natural dihedral action needs at least 3 points".into(),
        ));
    }
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    PermutationGroup::new(
        n,
        vec![
            Permutation::from_images(&rotation)?,
            Permutation::from_images(&reflection)?,
        ],
    )
}

/// The permutation acting as `p` on the first block and `q` on the second,
/// on the disjoint union of their domains.
pub fn pair_on_disjoint_union(p: &Permutation, q: &Permutation) -> Permutation {
    let dp = p.degree();
    let degree = dp + q.degree();
    let mut images: Vec<usize> = (0..degree).collect();
    for i in 0..dp {
        images[i] = p.apply(i);
    }
    for i in 0..q.degree() {
        images[dp + i] = q.apply(i) + dp;
    }
    Permutation::from_images(&images).expect("blockwise images form a permutation")
}

/// Direct product `A x B` on the disjoint union of the two domains;
/// `A` occupies the first block.
pub fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| g.extend_to(degree))
        .collect();
    gens.extend(b.generators().iter().map(|g| g.shift(a.degree(), degree)));
    PermutationGroup::new(degree, gens).expect("positive degree")
}

/// Right regular representation; point `i` is element index `i` of the
/// group's element table.
pub fn regular_representation(g: &PermutationGroup) -> Result<PermutationGroup> {
    let table = g.elements()?;
    let n = table.len();
    let mut gens = Vec::with_capacity(g.generators().len());
    for gen in g.generators() {
        let j = table.index_of(gen).expect("generator is a member");
        let images: Vec<usize> = (0..n as u32).map(|i| table.product(i, j) as usize).collect();
        gens.push(Permutation::from_images(&images)?);
    }
    PermutationGroup::new(n, gens)
}

/// The transitive action of a group on the right cosets of a subgroup.
pub struct CosetAction {
    /// Image of the action, a transitive group on the cosets.
    pub image: PermutationGroup,
    /// Epimorphism from the source onto the image, on element indices.
    pub map: GroupMap,
    /// Position of the coset of the subgroup itself; its stabilizer in the
    /// image is the image of the subgroup. Always 0.
    pub point: usize,
    /// Source element index -> position of its coset.
    pub coset_of: Vec<u32>,
}

/// Enumerates the right cosets of `h` in `g` and returns the action of `g`
/// on them by right multiplication. The kernel of the map is the core of `h`.
pub fn coset_action(g: &PermutationGroup, h: &PermutationGroup) -> Result<CosetAction> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.degree()));
    }
    let table = g.elements()?;
    let mut h_indices = Vec::new();
    for e in h.elements()?.elements() {
        h_indices.push(table.index_of(e).ok_or(Error::NotInParent)?);
    }
    h_indices.sort_unstable();

    let gen_indices: Vec<u32> = g
        .generators()
        .iter()
        .map(|x| table.index_of(x).expect("generator is a member"))
        .collect();

    // Breadth-first coset enumeration; the subgroup's own coset is coset 0.
    let unassigned = u32::MAX;
    let mut coset_of = vec![unassigned; table.len()];
    let mut reps: Vec<u32> = Vec::new();
    let install = |elems: &[u32], coset_of: &mut Vec<u32>, reps: &mut Vec<u32>| -> u32 {
        let pos = reps.len() as u32;
        reps.push(elems[0]);
        for &e in elems {
            coset_of[e as usize] = pos;
        }
        pos
    };
    install(&h_indices, &mut coset_of, &mut reps);
    let mut frontier: Vec<Vec<u32>> = vec![h_indices];
    let mut head = 0;
    while head < frontier.len() {
        let current = frontier[head].clone();
        head += 1;
        for &j in &gen_indices {
            let first = table.product(current[0], j);
            if coset_of[first as usize] != unassigned {
                continue;
            }
            let mut next: Vec<u32> = current.iter().map(|&x| table.product(x, j)).collect();
            next.sort_unstable();
            install(&next, &mut coset_of, &mut reps);
            frontier.push(next);
        }
    }
    let n_cosets = reps.len();
    debug_assert_eq!(n_cosets * h_indices_len(&frontier), table.len());

    let perm_of = |e: u32| -> Result<Permutation> {
        let images: Vec<usize> = reps
            .iter()
            .map(|&r| coset_of[table.product(r, e) as usize] as usize)
            .collect();
        Permutation::from_images(&images)
    };

    let mut image_gens = Vec::with_capacity(gen_indices.len());
    for &j in &gen_indices {
        image_gens.push(perm_of(j)?);
    }
    let image = PermutationGroup::new(n_cosets, image_gens)?;
    let image_table = image.elements()?;
    let mut images = Vec::with_capacity(table.len());
    for e in 0..table.len() as u32 {
        let p = perm_of(e)?;
        images.push(
            image_table
                .index_of(&p)
                .expect("coset permutations lie in the image group"),
        );
    }
    Ok(CosetAction {
        map: GroupMap {
            source: g.clone(),
            target: image.clone(),
            images,
        },
        image,
        point: 0,
        coset_of,
    })
}

fn h_indices_len(frontier: &[Vec<u32>]) -> usize {
    frontier.first().map_or(0, Vec::len)
}

/// One row of the fixed catalogue: a product of an abelian group with
/// Alt(5), a core-free point stabilizer, and the expected invariants of the
/// induced transitive action.
pub struct CatalogueRow {
    pub index: usize,
    pub label: &'static str,
    /// The product group on the disjoint union; the abelian factor occupies
    /// the first `abelian_block` points.
    pub group: PermutationGroup,
    pub stabilizer: PermutationGroup,
    pub abelian_block: usize,
    pub expected_degree: usize,
    pub expected_max_orbit: u64,
}

struct RowData {
    label: &'static str,
    factors: &'static [usize],
    stabilizer_gens: &'static [(&'static [u64], &'static str)],
    expected_max_orbit: u64,
    expected_degree: usize,
}

const CATALOGUE_DATA: [RowData; 11] = [
    RowData {
        label: "Z/3 x Alt(5)",
        factors: &[3],
        stabilizer_gens: &[(&[1], "(1,2,3)")],
        expected_max_orbit: 48,
        expected_degree: 60,
    },
    RowData {
        label: "Z/6 x Alt(5)",
        factors: &[6],
        stabilizer_gens: &[(&[2], "(1,2,3)")],
        expected_max_orbit: 48,
        expected_degree: 120,
    },
    RowData {
        label: "Z/3 x Alt(5)",
        factors: &[3],
        stabilizer_gens: &[(&[0], "(1,2)(3,4)"), (&[1], "(1,2,3)")],
        expected_max_orbit: 40,
        expected_degree: 15,
    },
    RowData {
        label: "Z/6 x Alt(5)",
        factors: &[6],
        stabilizer_gens: &[(&[0], "(1,2)(3,4)"), (&[2], "(1,2,3)")],
        expected_max_orbit: 40,
        expected_degree: 30,
    },
    RowData {
        label: "Z/5 x Alt(5)",
        factors: &[5],
        stabilizer_gens: &[(&[1], "(1,2,3,4,5)")],
        expected_max_orbit: 80,
        expected_degree: 60,
    },
    RowData {
        label: "Z/10 x Alt(5)",
        factors: &[10],
        stabilizer_gens: &[(&[2], "(1,2,3,4,5)")],
        expected_max_orbit: 80,
        expected_degree: 120,
    },
    RowData {
        label: "Z/2 x Alt(5)",
        factors: &[2],
        stabilizer_gens: &[(&[1], "(1,2)(3,4)")],
        expected_max_orbit: 24,
        expected_degree: 60,
    },
    RowData {
        label: "Z/2 x Alt(5)",
        factors: &[2],
        stabilizer_gens: &[(&[0], "(1,2,3)"), (&[1], "(2,3)(4,5)")],
        expected_max_orbit: 24,
        expected_degree: 20,
    },
    RowData {
        label: "Z/2 x Alt(5)",
        factors: &[2],
        stabilizer_gens: &[(&[0], "(1,2,3,4,5)"), (&[1], "(2,5)(3,4)")],
        expected_max_orbit: 24,
        expected_degree: 12,
    },
    RowData {
        label: "Z/2 x Alt(5)",
        factors: &[2],
        stabilizer_gens: &[(&[0], "(1,2)(3,4)"), (&[1], "(1,3)(2,4)")],
        expected_max_orbit: 24,
        expected_degree: 30,
    },
    RowData {
        label: "(Z/2)^2 x Alt(5)",
        factors: &[2, 2],
        stabilizer_gens: &[(&[1, 0], "(1,2)(3,4)"), (&[0, 1], "(1,3)(2,4)")],
        expected_max_orbit: 72,
        expected_degree: 60,
    },
];

/// Builds the full 11-row catalogue.
pub fn catalogue() -> Vec<CatalogueRow> {
    CATALOGUE_DATA
        .iter()
        .enumerate()
        .map(|(i, row)| build_row(i + 1, row))
        .collect()
}

fn build_row(index: usize, data: &RowData) -> CatalogueRow {
    let (block, coord_gens) =
        abelian_coordinate_generators(data.factors).expect("catalogue factors are valid");
    let abelian = PermutationGroup::new(block, coord_gens.clone()).expect("positive degree");
    let alt5 = alternating_natural(5).expect("valid degree");
    let group = direct_product(&abelian, &alt5);
    let stab_gens: Vec<Permutation> = data
        .stabilizer_gens
        .iter()
        .map(|(coords, cycles)| {
            let mut z = Permutation::identity(block);
            for (gen, &c) in coord_gens.iter().zip(coords.iter()) {
                z = z.compose(&gen.pow(c));
            }
            let sigma = Permutation::parse_cycles(cycles, 5).expect("catalogue cycles are valid");
            pair_on_disjoint_union(&z, &sigma)
        })
        .collect();
    let stabilizer =
        PermutationGroup::new(group.degree(), stab_gens).expect("degrees match by construction");
    CatalogueRow {
        index,
        label: data.label,
        group,
        stabilizer,
        abelian_block: block,
        expected_degree: data.expected_degree,
        expected_max_orbit: data.expected_max_orbit,
    }
}

/// Parses `degree=<n>; gens=<cycle-perm>{,<cycle-perm>}` with 1-based cycles.
pub fn parse_group_spec(text: &str) -> Result<PermutationGroup> {
    let mut degree: Option<usize> = None;
    let mut gens_text: Option<&str> = None;
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Some(v) = part.strip_prefix("degree=") {
            let v = v.trim();
            degree = Some(
                v.parse()
                    .map_err(|_| Error::Parse(format!("bad degree `{v}`")))?,
            );
        } else if let Some(v) = part.strip_prefix("gens=") {
            gens_text = Some(v.trim());
        } else {
            return Err(Error::Parse(format!("unrecognised field `{part}`")));
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("missing `degree=`".into()))?;
    let gens_text = gens_text.ok_or_else(|| Error::Parse("missing `gens=`".into()))?;
    if degree == 0 {
        return Err(Error::Parse("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for piece in split_outside_parens(gens_text) {
        gens.push(Permutation::parse_cycles(&piece, degree)?);
    }
    PermutationGroup::new(degree, gens)
}

/// Splits on commas at parenthesis depth zero.
fn split_outside_parens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
