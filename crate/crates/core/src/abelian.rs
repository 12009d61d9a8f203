//! Finite abelian groups in primary-decomposition coordinates: bases of
//! abelian p-groups, the adapted-basis construction for elementary abelian
//! subgroups, and the criterion for a subgroup to have trivial centraliser
//! in the full automorphism group.
//!
//! Elements are coordinate vectors, one entry per cyclic factor of the
//! stored decomposition, each taken modulo its prime-power modulus. The
//! internal machinery packs elements into mixed-radix indices so that set
//! operations run on flat arrays.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Largest order accepted by the element-enumerating operations.
pub const ABELIAN_ORDER_CAP: u64 = 1 << 16;

/// Largest order for which a dense addition table is cached.
const ADD_TABLE_CAP: u64 = 1 << 10;

/// Largest order for which element orders are cached.
const ORD_TABLE_CAP: u64 = 1 << 12;

/// Coordinate vector of a group element.
pub type AbElement = Vec<u64>;

/// One primary component: exponents of the cyclic factors for a fixed prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: u64,
    /// Sorted descending; factor `i` is cyclic of order `prime^exponents[i]`.
    pub exponents: Vec<u32>,
}

/// A finite abelian group given by its primary decomposition.
#[derive(Clone, Debug)]
pub struct AbelianGroup {
    components: Vec<PrimaryComponent>,
    moduli: Vec<u64>,
    /// Mixed-radix strides: index = sum of coordinate * stride.
    strides: Vec<u64>,
    add_cache: OnceLock<Vec<u32>>,
    ord_cache: OnceLock<Vec<u64>>,
}

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for AbelianGroup {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl AbelianGroup {
    pub fn new(mut components: Vec<PrimaryComponent>) -> Result<AbelianGroup> {
        components.sort_by_key(|c| c.prime);
        let mut order: u64 = 1;
        for c in &mut components {
            if !is_prime(c.prime) {
                return Err(Error::Unsupported(format!("{} is not prime", c.prime)));
            }
            if c.exponents.is_empty() || c.exponents.iter().any(|&e| e == 0) {
                return Err(Error::Unsupported(
                    "exponents must be positive and nonempty".into(),
                ));
            }
            c.exponents.sort_unstable_by(|a, b| b.cmp(a));
            for &e in &c.exponents {
                let factor = c.prime.checked_pow(e).ok_or(Error::OrderTooLarge {
                    order: u128::MAX,
                    limit: ABELIAN_ORDER_CAP as u128,
                })?;
                order = order.checked_mul(factor).ok_or(Error::OrderTooLarge {
                    order: u128::MAX,
                    limit: ABELIAN_ORDER_CAP as u128,
                })?;
            }
        }
        if components.windows(2).any(|w| w[0].prime == w[1].prime) {
            return Err(Error::Unsupported("duplicate prime component".into()));
        }
        let moduli: Vec<u64> = components
            .iter()
            .flat_map(|c| c.exponents.iter().map(|&e| c.prime.pow(e)))
            .collect();
        let mut strides = Vec::with_capacity(moduli.len());
        let mut stride = 1;
        for &m in &moduli {
            strides.push(stride);
            stride *= m;
        }
        Ok(AbelianGroup {
            components,
            moduli,
            strides,
            add_cache: OnceLock::new(),
            ord_cache: OnceLock::new(),
        })
    }

    /// The abelian p-group with the given exponent pattern.
    pub fn p_group(prime: u64, exponents: &[u32]) -> Result<AbelianGroup> {
        AbelianGroup::new(vec![PrimaryComponent {
            prime,
            exponents: exponents.to_vec(),
        }])
    }

    /// The cyclic group of order `n` in primary coordinates.
    pub fn cyclic(n: u64) -> Result<AbelianGroup> {
        if n == 0 {
            return Err(Error::Unsupported("order must be positive".into()));
        }
        let mut components = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                components.push(PrimaryComponent {
                    prime: p,
                    exponents: vec![e],
                });
            }
            p += 1;
        }
        if rest > 1 {
            components.push(PrimaryComponent {
                prime: rest,
                exponents: vec![1],
            });
        }
        AbelianGroup::new(components)
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    /// Orders of the cyclic factors, in component order.
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// The prime when the group is a nontrivial p-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        match self.components.as_slice() {
            [c] => Some(c.prime),
            _ => None,
        }
    }

    pub fn zero(&self) -> AbElement {
        vec![0; self.moduli.len()]
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    /// Reduces a coordinate vector; errors on a length mismatch.
    pub fn normalize(&self, x: &[u64]) -> Result<AbElement> {
        if x.len() != self.moduli.len() {
            return Err(Error::Unsupported(format!(
                "expected {} coordinates, got {}",
                self.moduli.len(),
                x.len()
            )));
        }
        Ok(x.iter().zip(&self.moduli).map(|(&c, &m)| c % m).collect())
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> AbElement {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect()
    }

    pub fn neg(&self, x: &[u64]) -> AbElement {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| (m - a) % m)
            .collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> AbElement {
        self.add(x, &self.neg(y))
    }

    pub fn scalar_mul(&self, k: u64, x: &[u64]) -> AbElement {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| (k % m) * a % m)
            .collect()
    }

    pub fn order_of(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| m / gcd(a, m))
            .fold(1, lcm)
    }

    pub fn exponent(&self) -> u64 {
        self.moduli.iter().copied().fold(1, lcm)
    }

    /// Mixed-radix index of a normalized coordinate vector.
    pub fn index_of(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum()
    }

    /// Coordinate vector of a mixed-radix index.
    pub fn element_at(&self, i: u64) -> AbElement {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| i / s % m)
            .collect()
    }

    fn add_idx_raw(&self, i: u64, j: u64) -> u64 {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (i / s % m + j / s % m) % m * s)
            .sum()
    }

    fn add_idx(&self, i: u64, j: u64) -> u64 {
        let n = self.order();
        if n <= ADD_TABLE_CAP {
            let tbl = self.add_cache.get_or_init(|| {
                let n = n as usize;
                let mut tbl = vec![0u32; n * n];
                for x in 0..n {
                    for y in x..n {
                        let s = self.add_idx_raw(x as u64, y as u64) as u32;
                        tbl[x * n + y] = s;
                        tbl[y * n + x] = s;
                    }
                }
                tbl
            });
            tbl[i as usize * n as usize + j as usize] as u64
        } else {
            self.add_idx_raw(i, j)
        }
    }

    fn sub_idx(&self, i: u64, j: u64) -> u64 {
        let neg_j: u64 = self
            .moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (m - j / s % m) % m * s)
            .sum();
        self.add_idx(i, neg_j)
    }

    fn scalar_mul_idx(&self, k: u64, i: u64) -> u64 {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (k % m) * (i / s % m) % m * s)
            .sum()
    }

    fn order_of_idx(&self, i: u64) -> u64 {
        let n = self.order();
        if n <= ORD_TABLE_CAP {
            let tbl = self.ord_cache.get_or_init(|| {
                (0..n)
                    .map(|x| {
                        self.moduli
                            .iter()
                            .zip(&self.strides)
                            .map(|(&m, &s)| m / gcd(x / s % m, m))
                            .fold(1, lcm)
                    })
                    .collect()
            });
            tbl[i as usize]
        } else {
            self.moduli
                .iter()
                .zip(&self.strides)
                .map(|(&m, &s)| m / gcd(i / s % m, m))
                .fold(1, lcm)
        }
    }

    /// Unit coordinate vectors; they form the defining basis.
    pub fn unit_generators(&self) -> Vec<AbElement> {
        (0..self.moduli.len())
            .map(|t| {
                let mut u = self.zero();
                u[t] = 1;
                u
            })
            .collect()
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<AbElement>> {
        check_order_cap(self)?;
        let mut out: Vec<AbElement> = (0..self.order()).map(|i| self.element_at(i)).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Subgroup generated by the given element indices, as sorted indices.
    fn span_idx(&self, gens: &[u64]) -> Vec<u64> {
        let order = self.order() as usize;
        let mut seen = vec![false; order];
        seen[0] = true;
        let mut members = vec![0u64];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.add_idx(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Sorted subgroup generated by the given elements.
    pub fn span(&self, gens: &[AbElement]) -> Result<Vec<AbElement>> {
        check_order_cap(self)?;
        let gens: Vec<u64> = gens
            .iter()
            .map(|g| self.normalize(g).map(|n| self.index_of(&n)))
            .collect::<Result<_>>()?;
        let mut out: Vec<AbElement> = self
            .span_idx(&gens)
            .into_iter()
            .map(|i| self.element_at(i))
            .collect();
        out.sort_unstable();
        Ok(out)
    }
}

fn check_order_cap(a: &AbelianGroup) -> Result<()> {
    if a.order() > ABELIAN_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: a.order() as u128,
            limit: ABELIAN_ORDER_CAP as u128,
        });
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Euler's totient function.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Unsupported("totient requires n >= 1".into()));
    }
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            result -= result / p;
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    Ok(result)
}

/// Whether the tuple is a basis of the abelian p-group: entry orders match
/// the exponent pattern and the combination count reaches the group order.
pub fn basis_check(a: &AbelianGroup, tuple: &[AbElement]) -> Result<bool> {
    check_order_cap(a)?;
    let p = a
        .p_group_prime()
        .ok_or_else(|| Error::Unsupported("basis_check requires a p-group".into()))?;
    let exponents = &a.components()[0].exponents;
    if tuple.len() != exponents.len() {
        return Ok(false);
    }
    let tuple: Vec<u64> = tuple
        .iter()
        .map(|t| a.normalize(t).map(|n| a.index_of(&n)))
        .collect::<Result<_>>()?;
    for (&t, &e) in tuple.iter().zip(exponents.iter()) {
        if a.order_of_idx(t) != p.pow(e) {
            return Ok(false);
        }
    }
    // Count distinct combinations; the tuple spans a direct product exactly
    // when all of them are distinct.
    let mut hit = vec![false; a.order() as usize];
    hit[0] = true;
    let mut partial = vec![0u64];
    for &t in &tuple {
        let ord = a.order_of_idx(t);
        let mut next = Vec::with_capacity(partial.len() * ord as usize);
        for &x in &partial {
            let mut y = x;
            for step in 0..ord {
                if step > 0 {
                    if hit[y as usize] {
                        return Ok(false);
                    }
                    hit[y as usize] = true;
                }
                next.push(y);
                y = a.add_idx(y, t);
            }
        }
        partial = next;
    }
    Ok(partial.len() as u64 == a.order())
}

/// All combinations of an internally direct tuple of indices, sorted.
fn span_of_independent_idx(a: &AbelianGroup, basis: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &b in basis {
        let ord = a.order_of_idx(b);
        let mut next = Vec::with_capacity(out.len() * ord as usize);
        for &x in &out {
            let mut y = x;
            for _ in 0..ord {
                next.push(y);
                y = a.add_idx(y, b);
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

/// A basis of an abelian p-group adapted to an elementary abelian subgroup.
///
/// Returns a basis `(a_1, ..., a_r)` of `A` (orders matching the exponent
/// pattern) together with indices `i_1 < ... < i_s` such that the elements
/// `p^(e_i - 1) * a_i` at those indices form a basis of `B`. Follows the
/// inductive splitting proof: pick the least nontrivial `b` in `B`, take a
/// maximal-order root `a` of `b` (so that `<a>` is a direct summand), lift
/// a basis of the quotient to an order-preserving complement, push a
/// complement of `<b>` in `B` into that complement, and recurse.
pub fn adapted_basis(
    a: &AbelianGroup,
    b_gens: &[AbElement],
) -> Result<(Vec<AbElement>, Vec<usize>)> {
    check_order_cap(a)?;
    let p = a
        .p_group_prime()
        .ok_or_else(|| Error::Unsupported("adapted_basis requires a p-group".into()))?;
    let b_idx: Vec<u64> = b_gens
        .iter()
        .map(|g| a.normalize(g).map(|n| a.index_of(&n)))
        .collect::<Result<_>>()?;
    let b_span = a.span_idx(&b_idx);
    for &x in &b_span {
        if a.scalar_mul_idx(p, x) != 0 {
            return Err(Error::Unsupported(
                "subgroup is not elementary abelian".into(),
            ));
        }
    }
    let units: Vec<u64> = a
        .unit_generators()
        .iter()
        .map(|u| a.index_of(u))
        .collect();
    let layers = adapt_layer(a, p, units, &b_span);
    // Stable-sort by descending order so entry orders match the exponent
    // pattern; record where the marked entries land.
    let mut order_keyed: Vec<(u64, u64, bool)> = layers
        .into_iter()
        .map(|(x, marked)| (a.order_of_idx(x), x, marked))
        .collect();
    order_keyed.sort_by(|l, r| r.0.cmp(&l.0));
    let basis: Vec<AbElement> = order_keyed
        .iter()
        .map(|&(_, x, _)| a.element_at(x))
        .collect();
    let indices: Vec<usize> = order_keyed
        .iter()
        .enumerate()
        .filter(|(_, (_, _, marked))| *marked)
        .map(|(i, _)| i)
        .collect();
    debug_assert_eq!(basis_check(a, &basis), Ok(true));
    Ok((basis, indices))
}

/// One layer of the adapted-basis recursion over element indices.
/// `s_basis` is an internally direct basis of the current summand `S`;
/// `b_span` is the sorted span of the current elementary abelian subgroup,
/// contained in `S`. Returns the entries of an adapted basis of `S`,
/// marked where they carry `B`.
fn adapt_layer(a: &AbelianGroup, p: u64, s_basis: Vec<u64>, b_span: &[u64]) -> Vec<(u64, bool)> {
    if b_span.len() <= 1 {
        return s_basis.into_iter().map(|x| (x, false)).collect();
    }
    let s_elems = span_of_independent_idx(a, &s_basis);
    let b = *b_span.iter().find(|&&x| x != 0).expect("nontrivial span");

    // Maximal-order root of b within S; ties broken by the enumeration
    // order. Maximality makes <root> pure, hence a direct summand.
    let mut root: Option<(u64, u64)> = None;
    for &x in &s_elems {
        let ord = a.order_of_idx(x);
        if ord > 1
            && a.scalar_mul_idx(ord / p, x) == b
            && root.map_or(true, |(best, _)| ord > best)
        {
            root = Some((ord, x));
        }
    }
    let (root_ord, root) = root.expect("b itself is a root of b");

    // Quotient S/<root>: canonical representative = least coset member,
    // tabulated over the whole index range for O(1) lookups.
    let order = a.order() as usize;
    let mut canonical_tbl: Vec<u64> = vec![u64::MAX; order];
    let mut in_root_span = vec![false; order];
    {
        let mut y = 0u64;
        for _ in 0..root_ord {
            in_root_span[y as usize] = true;
            y = a.add_idx(y, root);
        }
    }
    for &x in &s_elems {
        if canonical_tbl[x as usize] != u64::MAX {
            continue;
        }
        let mut best = x;
        let mut y = a.add_idx(x, root);
        while y != x {
            if y < best {
                best = y;
            }
            y = a.add_idx(y, root);
        }
        let mut y = x;
        loop {
            canonical_tbl[y as usize] = best;
            y = a.add_idx(y, root);
            if y == x {
                break;
            }
        }
    }
    let mut q_elems: Vec<u64> = s_elems
        .iter()
        .map(|&x| canonical_tbl[x as usize])
        .collect();
    q_elems.sort_unstable();
    q_elems.dedup();
    let q_order_of = |x: u64| -> u64 {
        let mut m = 1;
        let mut y = x;
        while !in_root_span[y as usize] {
            y = a.scalar_mul_idx(p, y);
            m *= p;
        }
        m
    };

    // Greedy basis of the quotient, each entry lifted order-preservingly;
    // the lifts generate a direct complement of <root> in S.
    let mut lifts: Vec<u64> = Vec::new();
    let mut q_span: Vec<u64> = vec![0];
    while q_span.len() < q_elems.len() {
        let mut chosen: Option<(u64, u64)> = None;
        for &x in &q_elems {
            let ord = q_order_of(x);
            if ord <= chosen.map_or(1, |(best, _)| best) || q_span.binary_search(&x).is_ok() {
                continue;
            }
            // Directness in the quotient by counting combinations.
            let mut bigger = vec![false; order];
            let mut count = 0usize;
            for &s in &q_span {
                let mut y = s;
                for _ in 0..ord {
                    let c = canonical_tbl[y as usize] as usize;
                    if !bigger[c] {
                        bigger[c] = true;
                        count += 1;
                    }
                    y = a.add_idx(y, x);
                }
            }
            if count as u64 == q_span.len() as u64 * ord {
                chosen = Some((ord, x));
            }
        }
        let (ord, q) = chosen.expect("quotient of an abelian p-group has a basis");
        // Order-preserving lift: least coset member of matching order.
        let lift = {
            let mut candidate = None;
            let mut y = q;
            for _ in 0..root_ord {
                if a.order_of_idx(y) == ord && candidate.map_or(true, |c| y < c) {
                    candidate = Some(y);
                }
                y = a.add_idx(y, root);
            }
            candidate.expect("a pure cyclic summand admits order-preserving lifts")
        };
        let mut bigger: Vec<u64> = Vec::with_capacity(q_span.len() * ord as usize);
        for &s in &q_span {
            let mut y = s;
            for _ in 0..ord {
                bigger.push(canonical_tbl[y as usize]);
                y = a.add_idx(y, q);
            }
        }
        bigger.sort_unstable();
        bigger.dedup();
        q_span = bigger;
        lifts.push(lift);
    }
    let complement = span_of_independent_idx(a, &lifts);

    // Complement of <b> in B: extend b to a basis of the F_p-space B, then
    // push the other basis vectors into the complement by subtracting their
    // <root>-components (which lie in <b>, so the span is preserved).
    let mut b_basis: Vec<u64> = vec![b];
    let mut b_partial = a.span_idx(&[b]);
    for &x in b_span {
        if b_partial.binary_search(&x).is_err() {
            b_basis.push(x);
            b_partial = a.span_idx(&b_basis);
        }
    }
    let mut pushed: Vec<u64> = Vec::new();
    for &c in &b_basis[1..] {
        let mut adjusted = None;
        let mut y = c;
        for _ in 0..root_ord {
            if complement.binary_search(&y).is_ok() {
                adjusted = Some(y);
                break;
            }
            y = a.sub_idx(y, root);
        }
        pushed.push(adjusted.expect("order-p elements project into the complement"));
    }
    let b2_span = a.span_idx(&pushed);

    let mut out = vec![(root, true)];
    out.extend(adapt_layer(a, p, lifts, &b2_span));
    out
}

/// Applies the endomorphism defined by images of the unit generators.
pub fn apply_unit_images(a: &AbelianGroup, images: &[AbElement], x: &[u64]) -> AbElement {
    let mut out = a.zero();
    for (t, &c) in x.iter().enumerate() {
        out = a.add(&out, &a.scalar_mul(c, &images[t]));
    }
    out
}

/// Whether the unit-generator images define an automorphism fixing the
/// given subgroup pointwise and differing from the identity (full check).
pub fn verify_centralizing_witness(
    a: &AbelianGroup,
    images: &[AbElement],
    b_span: &[AbElement],
) -> Result<bool> {
    check_order_cap(a)?;
    // Well-defined endomorphism: the image of each unit generator must die
    // under the generator's modulus.
    for (img, &m) in images.iter().zip(a.moduli()) {
        if !a.is_zero(&a.scalar_mul(m, img)) {
            return Ok(false);
        }
    }
    let image_idx: Vec<u64> = images
        .iter()
        .map(|img| a.normalize(img).map(|n| a.index_of(&n)))
        .collect::<Result<_>>()?;
    let order = a.order();
    let apply = |x: u64| -> u64 {
        let coords = a.element_at(x);
        let mut out = 0u64;
        for (t, &c) in coords.iter().enumerate() {
            out = a.add_idx(out, a.scalar_mul_idx(c, image_idx[t]));
        }
        out
    };
    let mut hit = vec![false; order as usize];
    let mut nontrivial = false;
    for x in 0..order {
        let y = apply(x);
        if hit[y as usize] {
            return Ok(false);
        }
        hit[y as usize] = true;
        if y != x {
            nontrivial = true;
        }
    }
    if !nontrivial {
        return Ok(false);
    }
    for x in b_span {
        let i = a.index_of(&a.normalize(x)?);
        if apply(i) != i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether the centraliser of `B` in `Aut(A)` is trivial.
///
/// The centraliser is trivial exactly when `|B|` is odd and `|A| = 2|B|`.
/// When it is nontrivial, a witness automorphism fixing `B` pointwise is
/// returned as images of the unit generators, built from the splitting in
/// the proof: `ig + h` maps to `ig + i*h0 + h` over a suitable index-p
/// overgroup `h` ranges in.
pub fn aut_centralizer_is_trivial(
    a: &AbelianGroup,
    b_gens: &[AbElement],
) -> Result<(bool, Option<Vec<AbElement>>)> {
    check_order_cap(a)?;
    let b_span = a.span(b_gens)?;
    let b_order = b_span.len() as u64;
    if b_order == a.order() {
        return Err(Error::Unsupported("subgroup must be proper".into()));
    }
    if b_order % 2 == 1 && a.order() == 2 * b_order {
        return Ok((true, None));
    }

    // Pick a prime whose Sylow parts differ: prefer odd primes, where the
    // splitting always yields a witness; otherwise fall back to p = 2,
    // where the excluded (|A_2|, |B_2|) = (2, 1) case cannot occur here.
    let exponent = a.exponent();
    let mut choice: Option<u64> = None;
    for c in a.components() {
        let p = c.prime;
        let sylow_a: u64 = c.exponents.iter().map(|&e| p.pow(e)).product();
        let mut p_part = 1;
        while exponent % (p_part * p) == 0 {
            p_part *= p;
        }
        let co_part = exponent / p_part;
        // CRT scalar projecting onto the Sylow p-part.
        let proj_scalar = (1..)
            .map(|k| k * co_part)
            .find(|&m| m % p_part == 1)
            .unwrap();
        let sylow_b = a
            .span(
                &b_span
                    .iter()
                    .map(|x| a.scalar_mul(proj_scalar, x))
                    .collect::<Vec<_>>(),
            )?
            .len() as u64;
        if sylow_b < sylow_a && (p > 2 || choice.is_none()) {
            choice = Some(p);
            if p > 2 {
                break;
            }
        }
    }
    let p = choice.expect("a proper subgroup misses some Sylow part");

    // Coordinate range of the chosen prime.
    let mut start = 0;
    for c in a.components() {
        if c.prime == p {
            break;
        }
        start += c.exponents.len();
    }
    let comp = a
        .components()
        .iter()
        .find(|c| c.prime == p)
        .expect("chosen prime is a component");
    let width = comp.exponents.len();

    // Projection of B to the p-part, reduced mod p coordinatewise: these
    // span the image of B_p modulo the Frattini subgroup of A_p.
    let mut p_part = 1;
    while exponent % (p_part * p) == 0 {
        p_part *= p;
    }
    let co_part = exponent / p_part;
    let proj_scalar = (1..)
        .map(|k| k * co_part)
        .find(|&m| m % p_part == 1)
        .unwrap();
    let rows: Vec<Vec<u64>> = b_span
        .iter()
        .map(|x| {
            let xp = a.scalar_mul(proj_scalar, x);
            (start..start + width).map(|t| xp[t] % p).collect()
        })
        .collect();
    // Nonzero functional lambda over F_p vanishing on all rows; it exists
    // because B_p stays under a maximal subgroup of A_p.
    let lambda = null_functional(&rows, width, p).expect("proper Sylow part admits a functional");
    let phi = |x: &AbElement| -> u64 {
        (start..start + width)
            .map(|t| lambda[t - start] * (x[t] % p) % p)
            .sum::<u64>()
            % p
    };

    // Kernel of phi within the p-part; find an order-p element for the
    // shift. A trivial kernel forces A_p cyclic of order p with B_p
    // trivial, where multiplication by 2 on the p-coordinates serves
    // instead (p > 2 there, since (2, 1) at p = 2 is excluded).
    let units = a.unit_generators();
    let sylow_members: Vec<AbElement> = {
        let gens: Vec<u64> = (start..start + width)
            .map(|t| a.index_of(&units[t]))
            .collect();
        span_of_independent_idx(a, &gens)
            .into_iter()
            .map(|i| a.element_at(i))
            .collect()
    };
    let h0 = sylow_members
        .iter()
        .find(|x| phi(x) == 0 && a.order_of(x) == p)
        .cloned();
    let images: Vec<AbElement> = match h0 {
        Some(h0) => {
            let g = sylow_members
                .iter()
                .find(|x| phi(x) != 0)
                .expect("phi is onto");
            let g_val = phi(g);
            let inv = (1..p).find(|&k| k * g_val % p == 1).expect("units mod p");
            units
                .iter()
                .map(|u| {
                    let i = phi(u) * inv % p;
                    a.add(u, &a.scalar_mul(i, &h0))
                })
                .collect()
        }
        None => units
            .iter()
            .enumerate()
            .map(|(t, u)| {
                if (start..start + width).contains(&t) {
                    a.scalar_mul(2, u)
                } else {
                    u.clone()
                }
            })
            .collect(),
    };
    debug_assert_eq!(verify_centralizing_witness(a, &images, &b_span), Ok(true));
    Ok((false, Some(images)))
}

/// A nonzero vector over F_p orthogonal to all rows, by Gaussian
/// elimination; `None` when the rows span the full space.
fn null_functional(rows: &[Vec<u64>], width: usize, p: u64) -> Option<Vec<u64>> {
    let mut reduced: Vec<Vec<u64>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (rr, &col) in reduced.iter().zip(&pivot_cols) {
            let factor = r[col] % p;
            if factor != 0 {
                for t in 0..width {
                    r[t] = (r[t] + (p - factor) * rr[t]) % p;
                }
            }
        }
        if let Some(col) = (0..width).find(|&t| r[t] % p != 0) {
            let inv = (1..p).find(|&k| k * r[col] % p == 1).unwrap();
            for t in 0..width {
                r[t] = r[t] * inv % p;
            }
            reduced.push(r);
            pivot_cols.push(col);
        }
    }
    let free_col = (0..width).find(|c| !pivot_cols.contains(c))?;
    // Back-substitute the free column into a functional; each reduced row
    // has zero entries at the pivot columns of earlier rows.
    let mut lambda = vec![0u64; width];
    lambda[free_col] = 1;
    for (rr, &col) in reduced.iter().zip(&pivot_cols).rev() {
        let val: u64 = (0..width)
            .filter(|&t| t != col)
            .map(|t| rr[t] * lambda[t] % p)
            .sum::<u64>()
            % p;
        lambda[col] = (p - val) % p;
    }
    Some(lambda)
}

/// Every nonempty weakly decreasing exponent pattern with sum at most
/// `max_total`.
fn small_partitions(max_total: u32) -> Vec<Vec<u32>> {
    fn grow(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for part in 1..=max_part.min(remaining) {
            prefix.push(part);
            grow(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(max_total, max_total, &mut Vec::new(), &mut out);
    out
}

/// One reduced-echelon basis per subspace of F_p^r, the zero subspace
/// appearing as the empty basis.
fn subspace_bases(p: u64, r: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = vec![Vec::new()];
    for mask in 1u32..1 << r {
        let pivots: Vec<usize> = (0..r).filter(|&c| mask >> c & 1 == 1).collect();
        // Free entries sit to the right of their row's pivot, outside the
        // pivot columns.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..r {
                if !pivots.contains(&c) {
                    free.push((i, c));
                }
            }
        }
        let mut counters = vec![0u64; free.len()];
        loop {
            let mut basis = vec![vec![0u64; r]; pivots.len()];
            for (i, &pc) in pivots.iter().enumerate() {
                basis[i][pc] = 1;
            }
            for (&(i, c), &v) in free.iter().zip(&counters) {
                basis[i][c] = v;
            }
            out.push(basis);
            let mut slot = 0;
            while slot < counters.len() {
                counters[slot] += 1;
                if counters[slot] < p {
                    break;
                }
                counters[slot] = 0;
                slot += 1;
            }
            if slot == counters.len() {
                break;
            }
        }
    }
    out
}

/// Every nontrivial abelian group type of order at most `cap`, built by
/// choosing an exponent pattern per prime in increasing prime order.
fn small_abelian_types(cap: u64) -> Vec<AbelianGroup> {
    fn grow(
        budget: u64,
        min_prime: u64,
        stack: &mut Vec<PrimaryComponent>,
        out: &mut Vec<AbelianGroup>,
    ) {
        if !stack.is_empty() {
            let a = AbelianGroup::new(stack.clone()).expect("components are valid by construction");
            out.push(a);
        }
        for p in min_prime..=budget {
            if !is_prime(p) {
                continue;
            }
            let mut max_total = 0u32;
            let mut power = 1u64;
            while power <= budget / p {
                power *= p;
                max_total += 1;
            }
            for pattern in small_partitions(max_total) {
                let total: u32 = pattern.iter().sum();
                stack.push(PrimaryComponent {
                    prime: p,
                    exponents: pattern,
                });
                grow(budget / p.pow(total), p + 1, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(cap, 2, &mut Vec::new(), &mut out);
    out
}

/// Every subgroup of `a` as a sorted list of element indices, found by
/// closing each subgroup under one extra generator until nothing new
/// appears. Since the group is abelian, adjoining x to a subgroup S yields
/// exactly the translates S + kx.
fn all_subgroup_index_sets(a: &AbelianGroup) -> Vec<Vec<u64>> {
    let order = a.order();
    let mut seen: std::collections::BTreeSet<Vec<u64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<u64>> = vec![vec![0]];
    seen.insert(vec![0]);
    while let Some(current) = queue.pop() {
        for x in 1..order {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut extended: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
            let mut shift = 0u64;
            loop {
                for &s in &current {
                    extended.insert(a.add_idx(s, shift));
                }
                shift = a.add_idx(shift, x);
                if shift == 0 {
                    break;
                }
            }
            let sub: Vec<u64> = extended.into_iter().collect();
            if seen.insert(sub.clone()) {
                queue.push(sub);
            }
        }
    }
    seen.into_iter().collect()
}

/// Exhaustive verification of the two structural facts this module rests
/// on, packaged as a report.
///
/// The first suite sweeps every elementary abelian subgroup of every
/// abelian p-group with exponent sum at most six, for p = 2 and p = 3, and
/// checks that the adapted basis returned for it satisfies all of its
/// postconditions: it is a basis, its marked positions are strictly
/// increasing, one position per subgroup generator, and the marked basis
/// elements raised to their maximal p-power span exactly the subgroup. A
/// non-elementary subgroup is also fed in to confirm rejection.
///
/// The second suite visits every abelian group of order at most 64 and
/// every proper subgroup of each, and checks that the centraliser test
/// reports "trivial" exactly on the known shape (|B| odd and |A| = 2|B|)
/// and otherwise produces a witness automorphism that verifiably
/// centralises the subgroup.
pub fn verify_lemma_suites() -> Result<crate::report::VerificationReport> {
    let start = std::time::Instant::now();
    let mut report = crate::report::VerificationReport::new("abelian structure suites");

    let mut cases = 0u64;
    let mut bad = 0u64;
    let mut sample = String::new();
    for p in [2u64, 3] {
        for pattern in small_partitions(6) {
            let a = AbelianGroup::p_group(p, &pattern)?;
            let rank = pattern.len();
            let socle: Vec<AbElement> = (0..rank)
                .map(|t| {
                    let mut u = a.zero();
                    u[t] = p.pow(pattern[t] - 1);
                    u
                })
                .collect();
            for rows in subspace_bases(p, rank) {
                cases += 1;
                let b_gens: Vec<AbElement> = rows
                    .iter()
                    .map(|row| {
                        let mut acc = a.zero();
                        for (t, &c) in row.iter().enumerate() {
                            acc = a.add(&acc, &a.scalar_mul(c, &socle[t]));
                        }
                        acc
                    })
                    .collect();
                let b_span = a.span(&b_gens)?;
                let (basis, idx) = adapted_basis(&a, &b_gens)?;
                let powered: Vec<AbElement> = idx
                    .iter()
                    .map(|&i| a.scalar_mul(p.pow(pattern[i] - 1), &basis[i]))
                    .collect();
                let good = basis_check(&a, &basis)?
                    && idx.windows(2).all(|w| w[0] < w[1])
                    && idx.len() == rows.len()
                    && a.span(&powered)? == b_span;
                if !good {
                    bad += 1;
                    if sample.is_empty() {
                        sample = format!("p = {p}, pattern {pattern:?}, subgroup rank {}", rows.len());
                    }
                }
            }
        }
    }
    report.push_eq("adapted-basis cases swept", 67_080u64, cases);
    report.push_claim(
        "adapted bases satisfy their postconditions",
        bad == 0,
        "no violations",
        if bad == 0 {
            "no violations".to_string()
        } else {
            format!("{bad} violations, first at {sample}")
        },
        "a swept case violated a postcondition",
    );
    for p in [2u64, 3] {
        let a = AbelianGroup::p_group(p, &[3, 1])?;
        let rejected = adapted_basis(&a, &[vec![p, 1]]).is_err();
        report.push_claim(
            format!("non-elementary subgroup rejected at p = {p}"),
            rejected,
            "rejected",
            if rejected { "rejected" } else { "accepted" },
            "an adapted basis was produced for a non-elementary subgroup",
        );
    }

    let types = small_abelian_types(64);
    report.push_eq("abelian types of order at most 64", 116usize, types.len());
    let mut pairs = 0u64;
    let mut trivial_pairs = 0u64;
    let mut mismatches = 0u64;
    let mut mismatch_sample = String::new();
    for a in &types {
        for sub in all_subgroup_index_sets(a) {
            if sub.len() as u64 == a.order() {
                continue;
            }
            let b_gens: Vec<AbElement> = sub.iter().map(|&i| a.element_at(i)).collect();
            let (trivial, witness) = aut_centralizer_is_trivial(a, &b_gens)?;
            pairs += 1;
            let b_order = sub.len() as u64;
            let good = if trivial {
                trivial_pairs += 1;
                witness.is_none() && b_order % 2 == 1 && a.order() == 2 * b_order
            } else {
                match witness {
                    Some(images) => {
                        let b_span = a.span(&b_gens)?;
                        verify_centralizing_witness(a, &images, &b_span)?
                    }
                    None => false,
                }
            };
            if !good {
                mismatches += 1;
                if mismatch_sample.is_empty() {
                    mismatch_sample =
                        format!("order {} group, subgroup order {b_order}", a.order());
                }
            }
        }
    }
    report.push_eq("proper subgroup pairs checked", 5_905u64, pairs);
    report.push_eq("pairs with trivial centraliser", 20u64, trivial_pairs);
    report.push_claim(
        "trivial cases match the index-two odd-subgroup shape and every other case carries a verified witness",
        mismatches == 0,
        "no mismatches",
        if mismatches == 0 {
            "no mismatches".to_string()
        } else {
            format!("{mismatches} mismatches, first at {mismatch_sample}")
        },
        "a centraliser verdict disagreed with direct verification",
    );

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_z2() -> AbelianGroup {
        AbelianGroup::p_group(2, &[2, 1]).unwrap()
    }

    #[test]
    fn construction_and_arithmetic() {
        let a = AbelianGroup::cyclic(12).unwrap();
        assert_eq!(a.moduli(), &[4, 3]);
        assert_eq!(a.order(), 12);
        assert_eq!(a.order_of(&[1, 1]), 12);
        assert_eq!(a.order_of(&[2, 0]), 2);
        assert_eq!(a.exponent(), 12);
        assert!(AbelianGroup::p_group(4, &[1]).is_err());
        assert!(AbelianGroup::p_group(2, &[0]).is_err());
        let b = z4_z2();
        assert_eq!(b.add(&[3, 1], &[2, 1]), vec![1, 0]);
        assert_eq!(b.sub(&[0, 0], &[1, 1]), vec![3, 1]);
        assert_eq!(b.span(&[vec![2, 1]]).unwrap().len(), 2);
        assert!(b.normalize(&[1]).is_err());
        // Index round-trips.
        for i in 0..b.order() {
            assert_eq!(b.index_of(&b.element_at(i)), i);
        }
        assert_eq!(b.elements().unwrap().len(), 8);
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(euler_phi(720).unwrap(), 192);
        assert!(euler_phi(0).is_err());
        // Brute-force cross-check by counting coprime residues.
        let brute = (1..=720).filter(|&k| {
            let (mut a, mut b) = (k, 720u64);
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a == 1
        });
        assert_eq!(brute.count() as u64, 192);
    }

    #[test]
    fn basis_check_examples() {
        let a = z4_z2();
        assert!(basis_check(&a, &[vec![1, 0], vec![0, 1]]).unwrap());
        assert!(basis_check(&a, &[vec![1, 1], vec![0, 1]]).unwrap());
        // Order mismatch in the swapped tuple.
        assert!(!basis_check(&a, &[vec![0, 1], vec![1, 0]]).unwrap());
        // Not internally direct: second entry inside the first cyclic part.
        assert!(!basis_check(&a, &[vec![1, 0], vec![2, 0]]).unwrap());
        assert!(basis_check(&AbelianGroup::cyclic(12).unwrap(), &[]).is_err());
    }

    #[test]
    fn adapted_basis_examples() {
        // Trivial subgroup: any basis, no indices.
        let a = z4_z2();
        let (basis, idx) = adapted_basis(&a, &[]).unwrap();
        assert!(basis_check(&a, &basis).unwrap());
        assert!(idx.is_empty());

        // Z/p^3 x Z/p with B generated by p^2 * a_1.
        for p in [2u64, 3] {
            let a = AbelianGroup::p_group(p, &[3, 1]).unwrap();
            let b = vec![p * p, 0];
            let (basis, idx) = adapted_basis(&a, &[b.clone()]).unwrap();
            assert!(basis_check(&a, &basis).unwrap());
            assert_eq!(idx, vec![0]);
            let powered = a.scalar_mul(p * p, &basis[0]);
            assert_eq!(a.span(&[powered]).unwrap(), a.span(&[b]).unwrap());
        }

        // Z/4 x Z/2 with B = <(2, 1)>.
        let b = vec![2, 1];
        let (basis, idx) = adapted_basis(&a, &[b.clone()]).unwrap();
        assert!(basis_check(&a, &basis).unwrap());
        assert_eq!(idx.len(), 1);
        let i = idx[0];
        let e = a.components()[0].exponents[i];
        let powered = a.scalar_mul(2u64.pow(e - 1), &basis[i]);
        assert_eq!(a.span(&[powered]).unwrap(), a.span(&[b]).unwrap());
    }

    #[test]
    fn adapted_basis_rejects_bad_subgroups() {
        let a = z4_z2();
        // <(1,0)> has order 4: not elementary abelian.
        assert!(adapted_basis(&a, &[vec![1, 0]]).is_err());
        assert!(adapted_basis(&AbelianGroup::cyclic(6).unwrap(), &[]).is_err());
    }

    #[test]
    fn centralizer_criterion_examples() {
        // Z/6 with B = Z/3: the unique odd-index-2 case.
        let a = AbelianGroup::cyclic(6).unwrap();
        let b3 = vec![0, 1];
        let (trivial, witness) = aut_centralizer_is_trivial(&a, &[b3]).unwrap();
        assert!(trivial);
        assert!(witness.is_none());

        // Z/4 with B = Z/2: inversion fixes B.
        let a = AbelianGroup::cyclic(4).unwrap();
        let (trivial, witness) = aut_centralizer_is_trivial(&a, &[vec![2]]).unwrap();
        assert!(!trivial);
        let witness = witness.unwrap();
        let b_span = a.span(&[vec![2]]).unwrap();
        assert!(verify_centralizing_witness(&a, &witness, &b_span).unwrap());

        // Improper subgroup input.
        assert!(aut_centralizer_is_trivial(&a, &[vec![1]]).is_err());
    }

    #[test]
    fn centralizer_witness_spans_odd_and_even_cases() {
        // Odd prime part differs: p = 3 branch.
        let a = AbelianGroup::cyclic(18).unwrap();
        let b = vec![1, 0]; // Z/2 inside Z/2 x Z/9
        let (trivial, witness) = aut_centralizer_is_trivial(&a, &[b.clone()]).unwrap();
        assert!(!trivial);
        let b_span = a.span(&[b]).unwrap();
        assert!(verify_centralizing_witness(&a, &witness.unwrap(), &b_span).unwrap());

        // Trivial B in Z/p: multiplication witness.
        let a = AbelianGroup::cyclic(5).unwrap();
        let (trivial, witness) = aut_centralizer_is_trivial(&a, &[]).unwrap();
        assert!(!trivial);
        assert!(verify_centralizing_witness(&a, &witness.unwrap(), &[a.zero()]).unwrap());

        // Trivial B in Z/2: the lone trivial-criterion case.
        let a = AbelianGroup::cyclic(2).unwrap();
        let (trivial, witness) = aut_centralizer_is_trivial(&a, &[]).unwrap();
        assert!(trivial);
        assert!(witness.is_none());
    }
}
