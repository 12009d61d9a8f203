//! A family of finite 2-groups defined by a power-commutator presentation
//! on generators `x_1, ..., x_m, a, b` with `m = 2^n + 1`: `a` and `b` are
//! central involutions, adjacent generators satisfy `[x_{2i-1}, x_{2i}] = a`
//! and `[x_{2i}, x_{2i+1}] = b`, non-adjacent generators commute, and
//! `x_1^2 = x_m^2 = b` while the inner `x_i` are involutions.
//!
//! Elements are stored in normal form `x_1^e1 ... x_m^em a^s b^t` as a
//! bitmask, so multiplication reduces to XOR plus two bilinear commutator
//! corrections and a square correction over GF(2). The group has order
//! `2^(m+2)`, centre and derived subgroup both `{1, a, b, ab}`.
//!
//! The interest of the family: acting on the cosets of `H = <x_{2^n}>`,
//! the conjugates of `H` are exactly the four subgroups `<x_{2^n} z>` for
//! central `z`, every central automorphism permutes them, and the
//! remaining automorphisms move `H` off that class. The maximum orbit
//! length of stabilizer-class-preserving automorphisms is therefore 4,
//! for every supported `n`.

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::report::VerificationReport;

/// Largest supported family parameter; n = 3 already has 2048 elements.
pub const GN_MAX_N: u32 = 3;

/// Group element in normal form: bits `0..m-1` are the exponents of
/// `x_1..x_m`, bit `m` is the exponent of `a`, bit `m+1` that of `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GnElement {
    bits: u32,
    /// Total bit width `m + 2`; doubles as the family tag for mismatch
    /// detection.
    width: u8,
}

impl GnElement {
    pub fn bits(&self) -> u32 {
        self.bits
    }
}

/// The group of parameter `n`, with `m = 2^n + 1` non-central generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnGroup {
    n: u32,
    m: usize,
}

/// An element-indexed map of a [`GnGroup`] into itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnMap {
    width: u8,
    images: Vec<u32>,
}

/// Builds the group of parameter `n`, for `1 <= n <= GN_MAX_N`.
pub fn gn_group(n: u32) -> Result<GnGroup> {
    if n < 1 || n > GN_MAX_N {
        return Err(Error::Unsupported(format!(
            "family parameter {n} outside 1..={GN_MAX_N}"
        )));
    }
    Ok(GnGroup {
        n,
        m: (1usize << n) + 1,
    })
}

impl GnGroup {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of non-central generators, `2^n + 1`.
    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u64 {
        1 << (self.m + 2)
    }

    fn width(&self) -> u8 {
        (self.m + 2) as u8
    }

    fn element(&self, bits: u32) -> GnElement {
        GnElement {
            bits,
            width: self.width(),
        }
    }

    pub fn identity(&self) -> GnElement {
        self.element(0)
    }

    /// The generator `x_i`, 1-based.
    pub fn x(&self, i: usize) -> Result<GnElement> {
        if i < 1 || i > self.m {
            return Err(Error::Unsupported(format!(
                "generator index {i} outside 1..={}",
                self.m
            )));
        }
        Ok(self.element(1 << (i - 1)))
    }

    pub fn a(&self) -> GnElement {
        self.element(1 << self.m)
    }

    pub fn b(&self) -> GnElement {
        self.element(1 << (self.m + 1))
    }

    /// All `x_i`, then `a`, then `b`.
    pub fn generators(&self) -> Vec<GnElement> {
        let mut gens: Vec<GnElement> = (1..=self.m).map(|i| self.x(i).unwrap()).collect();
        gens.push(self.a());
        gens.push(self.b());
        gens
    }

    pub fn elements(&self) -> Vec<GnElement> {
        (0..self.order() as u32).map(|bits| self.element(bits)).collect()
    }

    fn check(&self, u: GnElement) -> Result<u32> {
        if u.width != self.width() {
            return Err(Error::Unsupported(format!(
                "element of width {} used in a group of width {}",
                u.width,
                self.width()
            )));
        }
        Ok(u.bits)
    }

    /// Collects `u * v` to normal form. Moving the x-letters of `v` left
    /// through those of `u` only crosses adjacent pairs (everything else
    /// commutes), each crossing depositing the central letter of that
    /// pair; merging doubled letters deposits `b` at the two ends.
    pub fn multiply(&self, u: GnElement, v: GnElement) -> Result<GnElement> {
        let ub = self.check(u)?;
        let vb = self.check(v)?;
        let mut bits = ub ^ vb;
        // Crossing x_{j+1} (from u) with x_j (from v): a for odd j, b for
        // even j, 1-based.
        for j in 1..self.m {
            let crossing = (ub >> j) & (vb >> (j - 1)) & 1;
            if crossing == 1 {
                if j % 2 == 1 {
                    bits ^= 1 << self.m; // a
                } else {
                    bits ^= 1 << (self.m + 1); // b
                }
            }
        }
        // Squares at the ends: x_1^2 = x_m^2 = b.
        let ends = (ub & vb & 1) ^ ((ub >> (self.m - 1)) & (vb >> (self.m - 1)) & 1);
        bits ^= ends << (self.m + 1);
        Ok(self.element(bits))
    }

    /// Every square is central, so the inverse is `u * u^2`.
    pub fn inverse(&self, u: GnElement) -> Result<GnElement> {
        let square = self.multiply(u, u)?;
        self.multiply(u, square)
    }

    pub fn order_of(&self, u: GnElement) -> Result<u64> {
        let mut power = u;
        let mut k = 1;
        while power.bits != 0 {
            power = self.multiply(power, u)?;
            k += 1;
        }
        Ok(k)
    }

    pub fn commutator(&self, u: GnElement, v: GnElement) -> Result<GnElement> {
        let ui = self.inverse(u)?;
        let vi = self.inverse(v)?;
        let left = self.multiply(ui, vi)?;
        let right = self.multiply(u, v)?;
        self.multiply(left, right)
    }

    pub fn conjugate(&self, u: GnElement, s: GnElement) -> Result<GnElement> {
        let si = self.inverse(s)?;
        let left = self.multiply(si, u)?;
        self.multiply(left, s)
    }

    /// Centre, computed by testing commutation against all generators.
    pub fn centre(&self) -> Vec<GnElement> {
        let gens = self.generators();
        self.elements()
            .into_iter()
            .filter(|&u| {
                gens.iter()
                    .all(|&g| self.multiply(u, g).unwrap() == self.multiply(g, u).unwrap())
            })
            .collect()
    }

    /// Derived subgroup: closure of the generator-pair commutators (their
    /// normal closure, since all commutators here are central).
    pub fn derived(&self) -> Vec<GnElement> {
        let gens = self.generators();
        let mut seeds = Vec::new();
        for (k, &g) in gens.iter().enumerate() {
            for &h in &gens[k + 1..] {
                seeds.push(self.commutator(g, h).unwrap());
            }
        }
        self.closure(&seeds)
    }

    fn closure(&self, seeds: &[GnElement]) -> Vec<GnElement> {
        let mut seen = vec![false; self.order() as usize];
        seen[0] = true;
        let mut members = vec![self.identity()];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in seeds {
                let y = self.multiply(x, s).unwrap();
                if !seen[y.bits as usize] {
                    seen[y.bits as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// The distinguished subgroup `H = <x_{2^n}>` of order 2.
    pub fn stabilizer_subgroup(&self) -> Vec<GnElement> {
        let h = self.x(1 << self.n).unwrap();
        let mut sub = vec![self.identity(), h];
        sub.sort_unstable();
        sub
    }

    /// All conjugates of `H`, each an order-2 subgroup, sorted by their
    /// involution.
    pub fn stabilizer_class(&self) -> Vec<Vec<GnElement>> {
        let h = self.x(1 << self.n).unwrap();
        let mut involutions: Vec<GnElement> = self
            .elements()
            .into_iter()
            .map(|g| self.conjugate(h, g).unwrap())
            .collect();
        involutions.sort_unstable();
        involutions.dedup();
        involutions
            .into_iter()
            .map(|w| {
                let mut sub = vec![self.identity(), w];
                sub.sort_unstable();
                sub
            })
            .collect()
    }

    /// The outer representative: fixes `a`, `b`, and every `x_i` except
    /// `x_{2^n}`, which it sends to `x_{2^n} x_{2^n+1}`.
    pub fn alpha_n(&self) -> GnMap {
        let moved = 1 << self.n;
        let images: Vec<u32> = (0..self.order() as u32)
            .map(|bits| {
                let mut img = self.identity();
                for i in 1..=self.m {
                    if bits >> (i - 1) & 1 == 1 {
                        img = self.multiply(img, self.x(i).unwrap()).unwrap();
                        if i == moved {
                            img = self.multiply(img, self.x(moved + 1).unwrap()).unwrap();
                        }
                    }
                }
                img.bits ^ (bits & (0b11 << self.m))
            })
            .collect();
        GnMap {
            width: self.width(),
            images,
        }
    }

    /// Renders the normal form as a word, `1` for the identity.
    pub fn word(&self, u: GnElement) -> Result<String> {
        let bits = self.check(u)?;
        let mut parts = Vec::new();
        for i in 1..=self.m {
            if bits >> (i - 1) & 1 == 1 {
                parts.push(format!("x{i}"));
            }
        }
        if bits >> self.m & 1 == 1 {
            parts.push("a".into());
        }
        if bits >> (self.m + 1) & 1 == 1 {
            parts.push("b".into());
        }
        if parts.is_empty() {
            Ok("1".into())
        } else {
            Ok(parts.join("*"))
        }
    }
}

impl GnMap {
    pub fn apply(&self, u: GnElement) -> Result<GnElement> {
        if u.width != self.width {
            return Err(Error::Unsupported(format!(
                "element of width {} used with a map of width {}",
                u.width, self.width
            )));
        }
        Ok(GnElement {
            bits: self.images[u.bits as usize],
            width: self.width,
        })
    }

    /// Full check: multiplicative on all pairs and bijective.
    pub fn is_automorphism(&self, g: &GnGroup) -> Result<bool> {
        if self.width != g.width() {
            return Err(Error::Unsupported("map belongs to another group".into()));
        }
        let order = g.order() as usize;
        let mut hit = vec![false; order];
        for &img in &self.images {
            if hit[img as usize] {
                return Ok(false);
            }
            hit[img as usize] = true;
        }
        for u in 0..order as u32 {
            for v in 0..order as u32 {
                let uv = g.multiply(g.element(u), g.element(v))?;
                let lhs = self.images[uv.bits as usize];
                let rhs = g.multiply(g.element(self.images[u as usize]), g.element(self.images[v as usize]))?;
                if lhs != rhs.bits {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Image of a subgroup given as an element list.
    pub fn image_subgroup(&self, sub: &[GnElement]) -> Result<Vec<GnElement>> {
        let mut out = sub
            .iter()
            .map(|&u| self.apply(u))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }
}

/// A central endomorphism `g -> g * f(g)`, where `f` reads the x-bits of
/// `g` and XORs together per-generator central values. The code packs one
/// 2-bit central value (1, a, b, or ab) per non-central generator. Every
/// such map is an involution, hence an automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralMap {
    code: u32,
    m: usize,
}

/// Number of central maps, `4^(2^n + 1)`.
pub fn central_map_count(g: &GnGroup) -> u64 {
    1 << (2 * g.m)
}

/// The central map of the given code, `0 <= code < central_map_count`.
pub fn central_map(g: &GnGroup, code: u32) -> CentralMap {
    CentralMap { code, m: g.m }
}

impl CentralMap {
    /// The central value `f(u)`, as bits in the `a`/`b` positions.
    fn shift(&self, xbits: u32) -> u32 {
        let mut val = 0u32;
        for i in 0..self.m {
            if xbits >> i & 1 == 1 {
                val ^= self.code >> (2 * i) & 0b11;
            }
        }
        val << self.m
    }

    pub fn apply(&self, g: &GnGroup, u: GnElement) -> Result<GnElement> {
        let bits = g.check(u)?;
        let xmask = (1 << self.m) - 1;
        Ok(g.element(bits ^ self.shift(bits & xmask)))
    }

    /// Materialized element-indexed form.
    pub fn to_map(&self, g: &GnGroup) -> GnMap {
        let xmask = (1u32 << self.m) - 1;
        GnMap {
            width: g.width(),
            images: (0..g.order() as u32)
                .map(|bits| bits ^ self.shift(bits & xmask))
                .collect(),
        }
    }
}

/// Maximum orbit length on the group of the automorphisms preserving the
/// stabilizer class, i.e. exactly the maps that remain point-stabilizer
/// automorphisms in the coset action on `H`.
///
/// The full automorphism group is the union of the central maps and their
/// composites with `alpha_n`; both cosets are filtered against the
/// computed class. Central maps act on each element by XORing a central
/// value that depends only on the x-bits, so the orbit of `u` under the
/// surviving set is `u` XOR the group generated by the reachable values.
pub fn gn_maol_perm(n: u32) -> Result<u64> {
    let g = gn_group(n)?;
    let class = g.stabilizer_class();
    let class_involutions: Vec<u32> = class.iter().map(|sub| sub[1].bits).collect();
    let h = g.x(1 << n)?;
    let alpha = g.alpha_n();
    let count = central_map_count(&g);

    let mut passing: Vec<u32> = Vec::new();
    let mut coset_passing: Vec<u32> = Vec::new();
    for code in 0..count as u32 {
        let f = central_map(&g, code);
        if class_involutions.contains(&f.apply(&g, h)?.bits) {
            passing.push(code);
        }
        if class_involutions.contains(&f.apply(&g, alpha.apply(h)?)?.bits) {
            coset_passing.push(code);
        }
    }

    if !coset_passing.is_empty() {
        // Maps outside the central family survived; fall back to a plain
        // orbit computation over all surviving maps.
        let order = g.order() as usize;
        let mut representative: Vec<usize> = (0..order).collect();
        fn find(representative: &mut [usize], mut x: usize) -> usize {
            while representative[x] != x {
                representative[x] = representative[representative[x]];
                x = representative[x];
            }
            x
        }
        let mut maps: Vec<GnMap> = passing.iter().map(|&c| central_map(&g, c).to_map(&g)).collect();
        for &c in &coset_passing {
            let f = central_map(&g, c).to_map(&g);
            let composed: Vec<u32> = (0..order as u32)
                .map(|bits| f.images[alpha.images[bits as usize] as usize])
                .collect();
            maps.push(GnMap {
                width: g.width(),
                images: composed,
            });
        }
        for map in &maps {
            for x in 0..order {
                let (rx, ry) = (
                    find(&mut representative, x),
                    find(&mut representative, map.images[x] as usize),
                );
                if rx != ry {
                    representative[rx] = ry;
                }
            }
        }
        let mut sizes = vec![0u64; order];
        for x in 0..order {
            sizes[find(&mut representative, x)] += 1;
        }
        return Ok(sizes.into_iter().max().unwrap());
    }

    // Orbit of u under the surviving central maps: u XOR the closure of
    // the values f(u) over passing codes. The value depends only on the
    // x-bits, so sweep those.
    let xcount = 1u32 << g.m;
    let mut best = 0u64;
    for xbits in 0..xcount {
        let mut values = vec![false; 4];
        values[0] = true;
        let mut found = 1;
        for &code in &passing {
            let v = (central_map(&g, code).shift(xbits) >> g.m) as usize;
            if !values[v] {
                values[v] = true;
                found += 1;
                if found == 4 {
                    break;
                }
            }
        }
        // XOR-closure of the reached values.
        let mut closed = values.clone();
        loop {
            let mut grew = false;
            for i in 0..4 {
                for j in 0..4 {
                    if closed[i] && closed[j] && !closed[i ^ j] {
                        closed[i ^ j] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let orbit = closed.iter().filter(|&&v| v).count() as u64;
        best = best.max(orbit);
    }
    Ok(best)
}

/// Verifies the advertised facts about the family member of parameter
/// `n`: the maximum preserved orbit length, the group order, the centre,
/// the four-element stabilizer conjugacy class, the twist automorphism
/// moving the stabilizer off its class, and (for `n = 1`) agreement with
/// the generic permutation pipeline on sixteen points.
pub fn verify_family_member(n: u32) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let g = gn_group(n)?;
    let mut report = VerificationReport::new(format!("family member {n}"));

    report.push_eq(format!("maol_perm(G_{n}) = 4"), 4u64, gn_maol_perm(n)?);
    report.push_eq(
        format!("order of G_{n} is 2^(2^{n}+3)"),
        1u64 << ((1u64 << n) + 3),
        g.order(),
    );
    report.push_eq(format!("centre of G_{n} has order 4"), 4usize, g.centre().len());

    let class = g.stabilizer_class();
    let display = class
        .iter()
        .map(|sub| Ok(format!("<{}>", g.word(sub[1])?)))
        .collect::<Result<Vec<_>>>()?
        .join(", ");
    report.push_claim(
        "stabilizer class is its four central translates",
        class.len() == 4,
        "4 conjugate subgroups",
        display,
        "conjugacy class size differs",
    );

    let alpha = g.alpha_n();
    let image = alpha.image_subgroup(&g.stabilizer_subgroup())?;
    report.push_claim(
        "twist is an automorphism moving the stabilizer off its class",
        alpha.is_automorphism(&g)? && !class.contains(&image),
        "automorphism, image outside the class",
        format!("image <{}>", g.word(image[1])?),
        "twist preserves the stabilizer class",
    );

    if n == 1 {
        report.push_eq(
            "agreement with the permutation pipeline on 16 points",
            gn_maol_perm(1)?,
            crate::autos::maol_perm(&transitive_representation(1)?)?,
        );
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The regular permutation representation: each group element acts by
/// right multiplication on the element list, with element `bits` sitting
/// at point `bits`.
pub fn regular_permutation_group(g: &GnGroup) -> Result<PermutationGroup> {
    let order = g.order() as usize;
    let gens = g
        .generators()
        .into_iter()
        .map(|t| right_multiplication(g, t))
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(order, gens)
}

/// The transitive action of the group of parameter `n` on the cosets of
/// its distinguished two-element subgroup. The action is faithful, so the
/// image has degree `2^(m+1)` and full order `2^(m+2)`.
pub fn transitive_representation(n: u32) -> Result<PermutationGroup> {
    let g = gn_group(n)?;
    let regular = regular_permutation_group(&g)?;
    let stabilizer_gens = g
        .stabilizer_subgroup()
        .into_iter()
        .filter(|e| e.bits != 0)
        .map(|e| right_multiplication(&g, e))
        .collect::<Result<Vec<_>>>()?;
    let stabilizer = PermutationGroup::new(g.order() as usize, stabilizer_gens)?;
    Ok(crate::construct::coset_action(&regular, &stabilizer)?.image)
}

fn right_multiplication(g: &GnGroup, t: GnElement) -> Result<Permutation> {
    let images = (0..g.order() as u32)
        .map(|bits| Ok(g.multiply(g.element(bits), t)?.bits as usize))
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(&images)
}
