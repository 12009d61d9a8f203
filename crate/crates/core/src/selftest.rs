//! A built-in battery of recorded example values, runnable as one report:
//! constructor shapes, catalogue rows, abelian lemma instances, orbit
//! lengths of the named small groups, the two-generator-commutator family
//! facts, and the full classification and catalogue verifications.

use crate::abelian::{self, AbelianGroup};
use crate::autos;
use crate::census;
use crate::construct;
use crate::error::Result;
use crate::gn;
use crate::report::VerificationReport;
use crate::structure;
use std::collections::BTreeSet;
use std::time::Instant;

/// Runs every recorded example and merges the outcomes into one report.
/// The heavy sections (catalogue rows, full classification through degree
/// six) reuse the dedicated verifiers and contribute their per-item lines.
pub fn run_selftest() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("recorded example values");
    construction_examples(&mut report)?;
    catalogue_examples(&mut report)?;
    abelian_examples(&mut report)?;
    automorphism_examples(&mut report)?;
    family_examples(&mut report)?;
    merge(&mut report, "catalogue", census::verify_table1()?);
    merge(
        &mut report,
        "classification",
        census::verify_small_threshold_classification(census::CLASSIFY_DEGREE_CAP)?,
    );
    merge(
        &mut report,
        "solubility",
        census::verify_soluble_threshold(census::CLASSIFY_DEGREE_CAP)?,
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn merge(report: &mut VerificationReport, prefix: &str, sub: VerificationReport) {
    for mut check in sub.checks {
        check.name = format!("{prefix}: {}", check.name);
        report.checks.push(check);
    }
}

fn construction_examples(report: &mut VerificationReport) -> Result<()> {
    let d8 = construct::dihedral_natural(4)?;
    report.push_eq("dihedral group on 4 points has order 8", 8u32, d8.order());
    report.push_claim(
        "dihedral group on 4 points is transitive but not regular",
        d8.is_transitive() && !d8.is_regular(),
        "transitive and not regular",
        format!(
            "transitive = {}, regular = {}",
            d8.is_transitive(),
            d8.is_regular()
        ),
        "shape differs",
    );
    report.push_claim(
        "dihedral group on 3 points is the full symmetric group",
        construct::dihedral_natural(3)?.equals(&construct::symmetric_natural(3)?),
        "equal groups",
        "computed comparison",
        "groups differ",
    );

    let z6 = construct::cyclic_regular(6)?;
    report.push_claim(
        "regular cyclic group of order 6 is transitive and regular",
        z6.is_transitive() && z6.is_regular() && z6.order() == 6u32.into(),
        "transitive regular of order 6",
        format!(
            "transitive = {}, regular = {}, order = {}",
            z6.is_transitive(),
            z6.is_regular(),
            z6.order()
        ),
        "shape differs",
    );
    let v4 = construct::abelian_regular(&[2, 2])?;
    report.push_claim(
        "regular rank-two elementary abelian group has degree 4",
        v4.degree() == 4 && v4.is_regular() && v4.order() == 4u32.into(),
        "regular of degree 4",
        format!("degree = {}, order = {}", v4.degree(), v4.order()),
        "shape differs",
    );

    for group in [&construct::symmetric_natural(4)?, &d8] {
        let stab = group.point_stabilizer(0)?;
        report.push_claim(
            format!(
                "point stabilizer is core-free in a transitive group of order {}",
                group.order()
            ),
            structure::core_is_trivial(group, &stab)?,
            "trivial core",
            "computed core",
            "stabilizer has nontrivial core",
        );
    }
    let s4 = construct::symmetric_natural(4)?;
    let transporter = structure::subgroup_transporter(
        &s4,
        &s4.point_stabilizer(0)?,
        &s4.point_stabilizer(1)?,
    )?;
    report.push_claim(
        "point stabilizers of a transitive group are conjugate",
        transporter.is_some(),
        "conjugating element exists",
        format!("found = {}", transporter.is_some()),
        "no conjugating element",
    );
    Ok(())
}

fn catalogue_examples(report: &mut VerificationReport) -> Result<()> {
    let rows = construct::catalogue();
    report.push_eq("catalogue row 1 group order", 180u32, rows[0].group.order());
    report.push_eq(
        "catalogue row 11 group order",
        240u32,
        rows[10].group.order(),
    );
    report.push_eq(
        "catalogue row 1 stabilizer order",
        3u32,
        rows[0].stabilizer.order(),
    );
    report.push_eq("catalogue row 1 degree", 60usize, rows[0].expected_degree);
    let row9 = &rows[8];
    report.push_claim(
        "catalogue row 9 stabilizer is dihedral of order 10",
        row9.group.order() == 120u32.into()
            && row9.stabilizer.order() == 10u32.into()
            && !row9.stabilizer.is_abelian()
            && row9.expected_degree == 12,
        "order 120, stabilizer order 10 non-abelian, degree 12",
        format!(
            "order = {}, stabilizer order = {}, abelian = {}, degree = {}",
            row9.group.order(),
            row9.stabilizer.order(),
            row9.stabilizer.is_abelian(),
            row9.expected_degree
        ),
        "row shape differs",
    );
    report.push_eq(
        "catalogue row 11 stabilizer order",
        4u32,
        rows[10].stabilizer.order(),
    );
    report.push_eq("catalogue row 11 degree", 60usize, rows[10].expected_degree);
    Ok(())
}

fn abelian_examples(report: &mut VerificationReport) -> Result<()> {
    report.push_eq("totient of 9", 6u64, abelian::euler_phi(9)?);

    let z6 = AbelianGroup::new(vec![
        abelian::PrimaryComponent {
            prime: 2,
            exponents: vec![1],
        },
        abelian::PrimaryComponent {
            prime: 3,
            exponents: vec![1],
        },
    ])?;
    // Z/3 inside Z/6 = Z/2 x Z/3, generated by the second unit vector.
    let (trivial, witness) = abelian::aut_centralizer_is_trivial(&z6, &[vec![0, 1]])?;
    report.push_claim(
        "automorphism centralizer of the odd half of Z/6 is trivial",
        trivial && witness.is_none(),
        "trivial centralizer",
        format!("trivial = {trivial}"),
        "centralizer is nontrivial",
    );

    // In Z/p^3 x Z/p the subgroup generated by (p, 1) is not elementary
    // abelian, and no power of a basis entry generates it: powers of
    // order-p^3 entries land in the p-multiples, which miss (p, 1).
    for p in [2u64, 3] {
        let a = AbelianGroup::p_group(p, &[3, 1])?;
        let generator = vec![p, 1];
        let rejected = abelian::adapted_basis(&a, &[generator.clone()]).is_err();
        let target = a.span(&[generator])?;
        let no_root = a
            .elements()?
            .iter()
            .filter(|x| a.order_of(x) == p.pow(3))
            .all(|x| {
                let powered = a.scalar_mul(p, x);
                a.span(&[powered]).map(|s| s != target).unwrap_or(false)
            });
        report.push_claim(
            format!("no power-of-basis generator for the twisted subgroup at p = {p}"),
            rejected && no_root,
            "rejected and rootless",
            format!("rejected = {rejected}, rootless = {no_root}"),
            "a root-adapted basis exists after all",
        );
    }
    Ok(())
}

fn automorphism_examples(report: &mut VerificationReport) -> Result<()> {
    for (label, group) in [
        ("cyclic of order 6", construct::cyclic_regular(6)?),
        ("elementary abelian of order 4", construct::abelian_regular(&[2, 2])?),
        (
            "symmetric of degree 3",
            construct::regular_representation(&construct::symmetric_natural(3)?)?,
        ),
    ] {
        let full = autos::automorphism_group(&group)?;
        let filtered = autos::aut_perm(&group)?;
        report.push_claim(
            format!("regular action realizes every automorphism: {label}"),
            full.maps().len() == filtered.maps().len() && filtered.is_subset_of(&full),
            format!("{} induced maps", full.maps().len()),
            format!("{} induced maps", filtered.maps().len()),
            "induced maps differ from the full automorphism group",
        );
    }

    report.push_eq(
        "largest induced orbit of the dihedral group on 4 points",
        2u64,
        autos::maol_perm(&construct::dihedral_natural(4)?)?,
    );
    report.push_eq(
        "largest induced orbit of the regular group of order 2",
        1u64,
        autos::maol_perm(&construct::cyclic_regular(2)?)?,
    );
    report.push_eq(
        "largest induced orbit of the trivial group",
        1u64,
        autos::maol_perm(&construct::cyclic_regular(1)?)?,
    );
    report.push_eq(
        "largest induced orbit of the alternating group on 5 points",
        24u64,
        autos::maol_perm(&construct::alternating_natural(5)?)?,
    );
    report.push_eq(
        "largest induced orbit of the group parsed from its generator string",
        2u64,
        autos::maol_perm(&construct::parse_group_spec(
            "degree=4; gens=(1,2,3,4),(1,3)",
        )?)?,
    );
    Ok(())
}

fn family_examples(report: &mut VerificationReport) -> Result<()> {
    let g1 = gn::gn_group(1)?;
    let x1 = g1.x(1)?;
    let x2 = g1.x(2)?;
    report.push_claim(
        "family relation: first generator squares to the second central element",
        g1.multiply(x1, x1)? == g1.b(),
        "x1^2 = b",
        g1.word(g1.multiply(x1, x1)?)?,
        "square differs",
    );
    report.push_claim(
        "family relation: adjacent generators commute up to the first central element",
        g1.commutator(x1, x2)? == g1.a(),
        "[x1, x2] = a",
        g1.word(g1.commutator(x1, x2)?)?,
        "commutator differs",
    );

    for (n, order) in [(1u32, 32u64), (2, 128), (3, 2048)] {
        let g = gn::gn_group(n)?;
        report.push_eq(
            format!("family member {n} order"),
            order,
            g.order(),
        );
        report.push_eq(format!("family member {n} centre order"), 4usize, g.centre().len());
        let alpha = g.alpha_n();
        report.push_claim(
            format!("family member {n} twist fixes both central generators"),
            alpha.apply(g.a())? == g.a() && alpha.apply(g.b())? == g.b(),
            "a and b fixed",
            "computed images",
            "twist moves a central generator",
        );
    }

    let class = g1.stabilizer_class();
    let expected: BTreeSet<Vec<u32>> = [0u32, g1.a().bits(), g1.b().bits()]
        .iter()
        .chain([&(g1.a().bits() | g1.b().bits())])
        .map(|&z| {
            let mut sub = vec![0, x2.bits() ^ z];
            sub.sort_unstable();
            sub
        })
        .collect();
    let computed: BTreeSet<Vec<u32>> = class
        .iter()
        .map(|sub| sub.iter().map(|e| e.bits()).collect())
        .collect();
    report.push_claim(
        "smallest family member: stabilizer conjugates are its four central translates",
        computed == expected && class.len() == 4,
        "4 translates",
        format!("{} subgroups", class.len()),
        "conjugate class differs",
    );

    // Central maps reach the whole centre-coset of every non-central
    // element.
    let centre_bits: Vec<u32> = g1.centre().iter().map(|z| z.bits()).collect();
    let count = gn::central_map_count(&g1);
    let mut coset_transitive = true;
    for u in g1.elements() {
        if centre_bits.contains(&u.bits()) {
            continue;
        }
        let coset: BTreeSet<u32> = g1
            .centre()
            .iter()
            .map(|&z| g1.multiply(u, z).map(|e| e.bits()))
            .collect::<Result<_>>()?;
        let orbit: BTreeSet<u32> = (0..count as u32)
            .map(|code| gn::central_map(&g1, code).apply(&g1, u).map(|e| e.bits()))
            .collect::<Result<_>>()?;
        if orbit != coset {
            coset_transitive = false;
            break;
        }
    }
    report.push_claim(
        "central maps sweep each nontrivial centre coset",
        coset_transitive,
        "orbit equals coset for all non-central elements",
        format!("checked {} elements", g1.elements().len() - 4),
        "some coset is not swept",
    );

    report.push_eq("family member 1 largest preserved orbit", 4u64, gn::gn_maol_perm(1)?);
    report.push_eq("family member 2 largest preserved orbit", 4u64, gn::gn_maol_perm(2)?);
    Ok(())
}
