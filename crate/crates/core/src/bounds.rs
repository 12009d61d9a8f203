//! Explicit order-bound functions, evaluated exactly when the result fits
//! a sane bit budget and otherwise as certified base-2 logarithm brackets
//! with directed rounding, plus inequality checks that run the bounds
//! against a standard corpus of transitive groups.
//!
//! A passing check is sound: it compares a certified upper bracket of the
//! left side against a certified lower bracket of the bound, so rounding
//! can only turn a true inequality into a failure, never the reverse.

use crate::autos;
use crate::census;
use crate::construct;
use crate::error::{Error, Result};
use crate::gn;
use crate::group::PermutationGroup;
use crate::report::VerificationReport;
use crate::structure;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::time::Instant;

/// Fixed-point denominator exponent: a stored logarithm value `v` stands
/// for `v / 2^LOG_SCALE`.
const LOG_SCALE: u32 = 32;

/// Squarings used to refine a logarithm bracket; the refined bracket has
/// width `2^-LOG_PRECISION`.
const LOG_PRECISION: u32 = 16;

/// Largest exact integer materialized, in bits.
pub const EXACT_BIT_LIMIT: u64 = 1_000_000;

/// Inputs longer than this fall back to the one-bit bracket from the bit
/// length; refining them by squaring would be needlessly expensive.
const PRECISE_INPUT_BITS: u64 = 24;

/// Renders a fixed-point scaled logarithm as a decimal string with six
/// fractional digits (truncated).
fn decimal(scaled: &BigUint) -> String {
    let int = scaled >> LOG_SCALE;
    let rem = scaled - (&int << LOG_SCALE);
    let frac = ((rem * BigUint::from(1_000_000u32)) >> LOG_SCALE)
        .to_u64()
        .expect("six decimal digits fit in a machine word");
    format!("{int}.{frac:06}")
}

/// A certified fixed-point interval around the base-2 logarithm of a
/// positive quantity: `lo/2^LOG_SCALE <= log2(x) <= hi/2^LOG_SCALE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogBracket {
    lo: BigUint,
    hi: BigUint,
}

impl LogBracket {
    /// The exact logarithm of `2^bits`.
    fn exact_bits(bits: &BigUint) -> LogBracket {
        let v = bits << LOG_SCALE;
        LogBracket { hi: v.clone(), lo: v }
    }

    /// A certified bracket of `log2(n)` for `n >= 1`. Powers of two are
    /// exact; inputs of moderate size are refined by repeated squaring;
    /// longer inputs get the one-bit bracket from their bit length.
    pub fn of_integer(n: &BigUint) -> Result<LogBracket> {
        if n.is_zero() {
            return Err(Error::Unsupported("logarithm of zero".into()));
        }
        let bits = n.bits();
        if n.count_ones() == 1 {
            return Ok(LogBracket::exact_bits(&BigUint::from(bits - 1)));
        }
        if bits > PRECISE_INPUT_BITS {
            return Ok(LogBracket {
                lo: BigUint::from(bits - 1) << LOG_SCALE,
                hi: BigUint::from(bits) << LOG_SCALE,
            });
        }
        // After k squarings, p = n^(2^k) and 2^q <= p < 2^(q+1) pins
        // log2(n) into [q/2^k, (q+1)/2^k].
        let mut p = n.clone();
        for _ in 0..LOG_PRECISION {
            p = &p * &p;
        }
        let q = p.bits() - 1;
        Ok(LogBracket {
            lo: BigUint::from(q) << (LOG_SCALE - LOG_PRECISION),
            hi: BigUint::from(q + 1) << (LOG_SCALE - LOG_PRECISION),
        })
    }

    pub fn lower(&self) -> &BigUint {
        &self.lo
    }

    pub fn upper(&self) -> &BigUint {
        &self.hi
    }

    pub fn lower_decimal(&self) -> String {
        decimal(&self.lo)
    }

    pub fn upper_decimal(&self) -> String {
        decimal(&self.hi)
    }

    fn add(&self, other: &LogBracket) -> LogBracket {
        LogBracket {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Scales by a nonnegative integer (exact in fixed point).
    fn scale_int(&self, k: &BigUint) -> LogBracket {
        LogBracket {
            lo: &self.lo * k,
            hi: &self.hi * k,
        }
    }

    /// Interval product of two nonnegative brackets, rounding the lower
    /// end down and the upper end up.
    fn mul(&self, other: &LogBracket) -> LogBracket {
        let round_up = (BigUint::one() << LOG_SCALE) - BigUint::one();
        LogBracket {
            lo: (&self.lo * &other.lo) >> LOG_SCALE,
            hi: (&self.hi * &other.hi + round_up) >> LOG_SCALE,
        }
    }

    /// Certified comparison: true only when every value in `self` is at
    /// most every value in `other`.
    pub fn le(&self, other: &LogBracket) -> bool {
        self.hi <= other.lo
    }
}

/// A bound's value: the exact integer when it fits [`EXACT_BIT_LIMIT`]
/// bits and the bound is an integer at all, plus an unconditional
/// certified `log2` bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub exact: Option<BigUint>,
    pub log2: LogBracket,
}

impl BoundValue {
    /// Decimal rendering: always the bracket, plus the exact value when
    /// present.
    pub fn render(&self) -> String {
        let bracket = format!(
            "log2 in [{}, {}]",
            self.log2.lower_decimal(),
            self.log2.upper_decimal()
        );
        match &self.exact {
            Some(v) => format!("{bracket}, exact {v}"),
            None => bracket,
        }
    }

    /// Certified `value <= bound`: exact comparison when the bound is
    /// materialized, otherwise bracket comparison in log space.
    pub fn admits(&self, value: &BigUint) -> Result<bool> {
        if let Some(exact) = &self.exact {
            return Ok(value <= exact);
        }
        Ok(LogBracket::of_integer(value)?.le(&self.log2))
    }
}

/// Materializes `base^exp` when the result stays within the bit budget.
fn exact_power(base: &BigUint, exp: &BigUint) -> Option<BigUint> {
    if base.is_zero() {
        return None;
    }
    if exp * base.bits() > BigUint::from(EXACT_BIT_LIMIT) {
        return None;
    }
    let exp = exp.to_u32().expect("budgeted exponents fit in 32 bits");
    Some(base.pow(exp))
}

/// The order bound `16^(n+1)d * n^(2n³d²(5+d) + 2n³ + 4nd + 4d + 8n⁶d²·log2(n))`
/// for a group with `d` generators and `n` induced automorphisms. In log
/// space this is the polynomial `A + B·log2(n) + C·log2(n)²` with
/// `A = 4(n+1)d`, `B = 2n³d²(5+d) + 2n³ + 4nd + 4d`, `C = 8n⁶d²`.
///
/// The value is an integer exactly when the exponent of `n` is: for `n` a
/// power of two or for `d = 0` (where the logarithm term vanishes and the
/// value is `n^2n³`). In those cases `exact` is set whenever the result
/// fits the bit budget; the bracket is exact too when `n` is a power of
/// two.
pub fn frak_f(d: u64, n: u64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Unsupported("bound requires n >= 1".into()));
    }
    let nb = BigUint::from(n);
    let db = BigUint::from(d);
    let n3 = nb.pow(3);
    let d2 = db.pow(2);
    let a = BigUint::from(4u32) * (&nb + BigUint::one()) * &db;
    let b = BigUint::from(2u32) * &n3 * &d2 * (BigUint::from(5u32) + &db)
        + BigUint::from(2u32) * &n3
        + BigUint::from(4u32) * &nb * &db
        + BigUint::from(4u32) * &db;
    let c = BigUint::from(8u32) * &n3 * &n3 * &d2;

    let l = LogBracket::of_integer(&nb)?;
    let log2 = LogBracket::exact_bits(&a)
        .add(&l.scale_int(&b))
        .add(&l.mul(&l).scale_int(&c));

    let exact = if n.count_ones() == 1 {
        let k = BigUint::from(n.trailing_zeros() as u64);
        let bits = a + &k * b + &k * &k * c;
        exact_power(&BigUint::from(2u32), &bits)
    } else if d == 0 {
        exact_power(&nb, &b)
    } else {
        None
    };
    Ok(BoundValue { exact, log2 })
}

/// The order bound `n^(n(1 + floor(log2 n))) + 1` for a group with `n`
/// automorphisms. Exact for every input whose result fits the bit budget,
/// which covers all practical `n`.
pub fn ledermann_neumann_bound(n: u64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Unsupported("bound requires n >= 1".into()));
    }
    let nb = BigUint::from(n);
    let e = &nb * BigUint::from(nb.bits());
    if let Some(power) = exact_power(&nb, &e) {
        let value = power + BigUint::one();
        let log2 = LogBracket::of_integer(&value)?;
        return Ok(BoundValue {
            exact: Some(value),
            log2,
        });
    }
    // log2(n^e + 1) differs from e·log2(n) by less than one bit.
    let base = LogBracket::of_integer(&nb)?.scale_int(&e);
    Ok(BoundValue {
        exact: None,
        log2: LogBracket {
            lo: base.lo,
            hi: base.hi + (BigUint::one() << LOG_SCALE),
        },
    })
}

/// The order bound `c^(d·c^d·(1 + floor(d·log2 c))) + 1` for a group with
/// `d` generators whose automorphism orbits have length at most `c`.
pub fn improved_bound(d: u64, c: u64) -> Result<BoundValue> {
    if c == 0 {
        return Err(Error::Unsupported("bound requires c >= 1".into()));
    }
    if c == 1 {
        return Ok(BoundValue {
            exact: Some(BigUint::from(2u32)),
            log2: LogBracket::exact_bits(&BigUint::one()),
        });
    }
    let cb = BigUint::from(c);
    if (d as u128) * (cb.bits() as u128) > 10_000_000 {
        return Err(Error::Unsupported(
            "exponent too large to certify".into(),
        ));
    }
    let cd = cb.pow(d as u32);
    // floor(d·log2 c) read off the bit length of c^d.
    let t = cd.bits() - 1;
    let e = BigUint::from(d) * cd * BigUint::from(t + 1);
    if let Some(power) = exact_power(&cb, &e) {
        let value = power + BigUint::one();
        let log2 = LogBracket::of_integer(&value)?;
        return Ok(BoundValue {
            exact: Some(value),
            log2,
        });
    }
    let base = LogBracket::of_integer(&cb)?.scale_int(&e);
    Ok(BoundValue {
        exact: None,
        log2: LogBracket {
            lo: base.lo,
            hi: base.hi + (BigUint::one() << LOG_SCALE),
        },
    })
}

/// Checks that a transitive group's order respects [`frak_f`] evaluated
/// at its minimal generating number and its count of induced
/// automorphisms (the ones preserving the point-stabilizer class). The
/// comparison pits the certified upper bracket of `log2|G|` against the
/// certified lower bracket of the bound.
pub fn check_ledneu_permutation(group: &PermutationGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut report = VerificationReport::new("transitive order bound");
    let d = autos::min_generating_tuple(group)?.0 as u64;
    let n = autos::aut_perm(group)?.maps().len() as u64;
    let order = group.order();
    let bound = frak_f(d, n)?;
    let order_log = LogBracket::of_integer(&order)?;
    report.push_claim(
        "order within generating-count bound",
        order_log.le(&bound.log2),
        format!("log2 of order <= {}", bound.log2.lower_decimal()),
        format!(
            "order {order} (log2 in [{}, {}]) with d = {d}, induced automorphisms = {n}",
            order_log.lower_decimal(),
            order_log.upper_decimal()
        ),
        "order exceeds the certified bound",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks the abstract bounds driven by the maximum automorphism orbit
/// length `c` and the minimal generating number `d`: the automorphism
/// count is at most `c^d`, and the group order is at most
/// [`improved_bound`]`(d, c)`.
pub fn check_improved_abstract(group: &PermutationGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("abstract order bounds");
    let auts = autos::automorphism_group(group)?;
    let aut_count = BigUint::from(auts.maps().len());
    let c = *autos::orbit_length_multiset(&auts, group)?
        .last()
        .expect("orbit multiset of a nonempty group is nonempty") as u64;
    let d = autos::min_generating_tuple(group)?.0 as u64;

    let orbit_power = BigUint::from(c).pow(d as u32);
    report.push_claim(
        "automorphism count within orbit-length power",
        aut_count <= orbit_power,
        format!("at most {c}^{d} = {orbit_power} automorphisms"),
        format!("{aut_count} automorphisms"),
        "automorphism count exceeds the orbit-length power",
    );

    let order = group.order();
    let bound = improved_bound(d, c)?;
    report.push_claim(
        "order within iterated orbit-length bound",
        bound.admits(&order)?,
        format!("order <= bound with {}", bound.render()),
        format!("order {order} with d = {d}, c = {c}"),
        "order exceeds the certified bound",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks that a transitive group has at most `c^d` induced
/// automorphisms, where `c` is the caller's maximum induced orbit length
/// and `d` the minimal generating number.
pub fn check_semiregular_count(group: &PermutationGroup, c: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut report = VerificationReport::new("induced automorphism count bound");
    let filtered = BigUint::from(autos::aut_perm(group)?.maps().len());
    let d = autos::min_generating_tuple(group)?.0 as u64;
    let orbit_power = BigUint::from(c).pow(d as u32);
    report.push_claim(
        "induced count within orbit-length power",
        filtered <= orbit_power,
        format!("at most {c}^{d} = {orbit_power} induced automorphisms"),
        format!("{filtered} induced automorphisms"),
        "induced automorphism count exceeds the orbit-length power",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks, in log space, that the derived subgroup order of a transitive
/// group is at most `n^2n³` where `n` counts the induced automorphisms.
pub fn check_derived_order(group: &PermutationGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut report = VerificationReport::new("derived subgroup order bound");
    let n = autos::aut_perm(group)?.maps().len() as u64;
    let derived_order = structure::derived_subgroup(group).order();
    let bound = frak_f(0, n)?;
    let derived_log = LogBracket::of_integer(&derived_order)?;
    report.push_claim(
        "derived order within automorphism-count power",
        derived_log.le(&bound.log2),
        format!("log2 of derived order <= {}", bound.log2.lower_decimal()),
        format!(
            "derived order {derived_order} (log2 in [{}, {}]) with n = {n}",
            derived_log.lower_decimal(),
            derived_log.upper_decimal()
        ),
        "derived order exceeds the certified bound",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// A labelled corpus member: a transitive group together with its
/// maximum induced-automorphism orbit length.
pub struct CorpusEntry {
    pub label: String,
    pub group: PermutationGroup,
    pub maol_perm: u64,
}

/// The standard corpus: every transitive subgroup class of degree at most
/// six, the eleven catalogue coset images, and the smallest member of the
/// two-generator-commutator family acting on sixteen points.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let mut corpus = Vec::new();
    for degree in 1..=census::CLASSIFY_DEGREE_CAP {
        for (i, entry) in census::transitive_groups(degree)?.into_iter().enumerate() {
            let label = match &entry.matched_name {
                Some(name) => format!("degree {degree} #{i} ({name})"),
                None => format!("degree {degree} #{i} (order {})", entry.order),
            };
            corpus.push(CorpusEntry {
                label,
                group: entry.group,
                maol_perm: entry.maol_perm,
            });
        }
    }
    for row in construct::catalogue() {
        let image = construct::coset_action(&row.group, &row.stabilizer)?.image;
        let maol_perm = autos::maol_perm(&image)?;
        corpus.push(CorpusEntry {
            label: format!("catalogue row {} ({})", row.index, row.label),
            group: image,
            maol_perm,
        });
    }
    let family = gn::transitive_representation(1)?;
    let maol_perm = autos::maol_perm(&family)?;
    corpus.push(CorpusEntry {
        label: "family member n=1 on 16 points".into(),
        group: family,
        maol_perm,
    });
    Ok(corpus)
}

/// Runs all four bound checks on every member of the standard corpus and
/// aggregates the outcomes, prefixing each check with the member's label.
pub fn corpus_bounds_report() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("order bounds over the standard corpus");
    for entry in standard_corpus()? {
        let subreports = [
            check_ledneu_permutation(&entry.group)?,
            check_semiregular_count(&entry.group, entry.maol_perm)?,
            check_improved_abstract(&entry.group)?,
            check_derived_order(&entry.group)?,
        ];
        for sub in subreports {
            for mut check in sub.checks {
                check.name = format!("{}: {}", entry.label, check.name);
                report.checks.push(check);
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
