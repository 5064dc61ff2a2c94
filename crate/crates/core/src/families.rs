//! Parameterized polymer families: generators, exact closed forms for
//! their Sombor indices, and predicted degree-pair censuses.
//!
//! Families and their text syntax (used by the CLI and in reports):
//!
//! - `q:m=5,n=4` — a complete graph `K_m` with a private copy of `K_n`
//!   point-attached at every vertex.
//! - `spiro:q=6,h=2,k=8` — `k` cycles `C_q` chained through shared
//!   (cut) vertices, consecutive contacts at cycle distance `h`.
//! - `poly:q=6,h=1,k=4` — `k` cycles joined by bridge edges instead of
//!   shared vertices.
//! - `cactus:name=Q,n=5` — six classical cactus chains (`T`, `Q`, `O`,
//!   `Oh`, `L`, `M`), each an alias for a spiro chain; a trailing `n` in
//!   the name (`Qn`) is accepted.
//! - `triangulane:k=3` — the recursive triangulane: three generation-`k`
//!   branches closed into a triangle, where a branch is two smaller
//!   branches and a fresh vertex closed into a triangle.
//! - `d3:n=2` — a cubic dendrimer: three generation-`n+1` branches glued
//!   at a hub, where a branch doubles itself through a hexagon-with-two-
//!   pendants connector.
//!
//! For `spiro`/`poly` with `h = 1` the two contacts of an interior cycle
//! are adjacent, which changes the census; those closed forms need
//! `k ≥ 2`, and at `k = 1` (the bare cycle) the general branch is used.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::construct::{bouquet, chain, circuit, link, Assembly, ConstructError, RootedUnit};
use crate::graph::{Census, Graph, GraphError};
use crate::radical::RadicalSum;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{family}: {msg}")]
    InvalidParameter { family: &'static str, msg: String },
    #[error("cannot parse family spec: {0}")]
    Parse(String),
    #[error("census counts overflow u64 for these parameters")]
    TooLarge,
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> Self {
        FamilyError::Construct(ConstructError::Graph(e))
    }
}

/// The six classical cactus chains, each a spiro chain in disguise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CactusName {
    /// Triangular chain: cycles of length 3, adjacent contacts.
    T,
    /// Para square chain: cycles of length 4, opposite contacts.
    Q,
    /// Ortho square chain: cycles of length 4, adjacent contacts.
    O,
    /// Ortho hexagonal chain: cycles of length 6, adjacent contacts.
    Oh,
    /// Para hexagonal chain: cycles of length 6, opposite contacts.
    L,
    /// Meta hexagonal chain: cycles of length 6, contacts at distance 2.
    M,
}

impl CactusName {
    pub const ALL: [CactusName; 6] = [
        CactusName::T,
        CactusName::Q,
        CactusName::O,
        CactusName::Oh,
        CactusName::L,
        CactusName::M,
    ];

    /// The `(q, h)` of the spiro chain this name abbreviates.
    pub fn spiro_params(self) -> (u32, u32) {
        match self {
            CactusName::T => (3, 1),
            CactusName::Q => (4, 2),
            CactusName::O => (4, 1),
            CactusName::Oh => (6, 1),
            CactusName::L => (6, 3),
            CactusName::M => (6, 2),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CactusName::T => "T",
            CactusName::Q => "Q",
            CactusName::O => "O",
            CactusName::Oh => "Oh",
            CactusName::L => "L",
            CactusName::M => "M",
        }
    }
}

impl fmt::Display for CactusName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CactusName {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "t" | "tn" => Ok(CactusName::T),
            "q" | "qn" => Ok(CactusName::Q),
            "o" | "on" => Ok(CactusName::O),
            "oh" | "ohn" => Ok(CactusName::Oh),
            "l" | "ln" => Ok(CactusName::L),
            "m" | "mn" => Ok(CactusName::M),
            other => Err(FamilyError::Parse(format!(
                "unknown cactus name `{other}` (expected T, Q, O, Oh, L or M)"
            ))),
        }
    }
}

/// A parameterized family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Q { m: u32, n: u32 },
    Spiro { q: u32, h: u32, k: u32 },
    Poly { q: u32, h: u32, k: u32 },
    Cactus { name: CactusName, n: u32 },
    Triangulane { k: u32 },
    DendrimerD3 { n: u32 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let err = |family, msg: String| Err(FamilyError::InvalidParameter { family, msg });
        match *self {
            FamilySpec::Q { m, n } => {
                if m < 1 {
                    return err("q", "m must be at least 1".into());
                }
                if n < 1 {
                    return err("q", "n must be at least 1".into());
                }
            }
            FamilySpec::Spiro { q, h, k } | FamilySpec::Poly { q, h, k } => {
                let family = if matches!(self, FamilySpec::Spiro { .. }) {
                    "spiro"
                } else {
                    "poly"
                };
                if q < 3 {
                    return err(family, format!("q must be at least 3, got {q}"));
                }
                if k < 1 {
                    return err(family, format!("k must be at least 1, got {k}"));
                }
                if h < 1 || h > q / 2 {
                    return err(family, format!("h must satisfy 1 ≤ h ≤ ⌊q/2⌋ = {}", q / 2));
                }
            }
            FamilySpec::Cactus { n, .. } => {
                if n < 1 {
                    return err("cactus", "n must be at least 1".into());
                }
            }
            FamilySpec::Triangulane { k } => {
                if k < 1 {
                    return err("triangulane", "k must be at least 1".into());
                }
            }
            FamilySpec::DendrimerD3 { .. } => {}
        }
        Ok(())
    }

    /// True on the single-cycle corner (`h = 1`, `k = 1`) where the
    /// adjacent-contact closed form does not apply and the general branch
    /// supplies the (bare-cycle) value instead.
    pub fn uses_degenerate_formula(&self) -> bool {
        match *self {
            FamilySpec::Spiro { h, k, .. } | FamilySpec::Poly { h, k, .. } => h == 1 && k == 1,
            FamilySpec::Cactus { name, n } => name.spiro_params().1 == 1 && n == 1,
            _ => false,
        }
    }

    /// Builds the family member as an operator assembly.
    pub fn generate(&self) -> Result<Assembly, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::Q { m, n } => generate_q(m as usize, n as usize),
            FamilySpec::Spiro { q, h, k } => generate_spiro(q, h, k),
            FamilySpec::Poly { q, h, k } => {
                let units = cycle_units(q, h, k)?;
                Ok(link(&units)?)
            }
            FamilySpec::Cactus { name, n } => {
                let (q, h) = name.spiro_params();
                generate_spiro(q, h, n)
            }
            FamilySpec::Triangulane { k } => {
                let branch = triangulane_branch(k)?;
                Ok(circuit(&[branch.clone(), branch.clone(), branch])?)
            }
            FamilySpec::DendrimerD3 { n } => {
                let branch = dendrimer_branch(n + 1)?;
                Ok(bouquet(&[branch.clone(), branch.clone(), branch])?)
            }
        }
    }

    /// Exact closed form for the Sombor index.
    pub fn closed_form(&self) -> Result<RadicalSum, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::Q { m, n } => closed_q(m, n),
            FamilySpec::Spiro { q, h, k } => closed_spiro(q, h, k),
            FamilySpec::Poly { q, h, k } => closed_poly(q, h, k),
            FamilySpec::Cactus { name, n } => closed_cactus(name, n),
            FamilySpec::Triangulane { k } => {
                // (42·2^{k−1} − 24)√2 + 6·2^k√5
                let p = BigInt::from(2).pow(k - 1);
                let c2 = BigInt::from(42) * &p - BigInt::from(24);
                let c5 = BigInt::from(12) * &p;
                radical_combination(&[(c2, 2), (c5, 5)])
            }
            FamilySpec::DendrimerD3 { n } => {
                // (63·2^n − 30)√2 + (18·2^n − 12)√13
                let p = BigInt::from(2).pow(n);
                let c2 = BigInt::from(63) * &p - BigInt::from(30);
                let c13 = BigInt::from(18) * &p - BigInt::from(12);
                radical_combination(&[(c2, 2), (c13, 13)])
            }
        }
    }

    /// Predicted degree-pair census; zero-count buckets are omitted and
    /// coinciding buckets merge.
    pub fn census_prediction(&self) -> Result<Census, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::Q { m, n } => census_q(m as u64, n as u64),
            FamilySpec::Spiro { q, h, k } => census_spiro(q as u64, h, k as u64),
            FamilySpec::Poly { q, h, k } => census_poly(q as u64, h, k as u64),
            FamilySpec::Cactus { name, n } => {
                let (q, h) = name.spiro_params();
                census_spiro(q as u64, h, n as u64)
            }
            FamilySpec::Triangulane { k } => {
                let p = pow2(k - 1)?;
                let mut census = Census::new();
                census.add_count(4, 4, checked_sub(checked_mul(9, p)?, 6)?);
                census.add_count(4, 2, checked_mul(6, p)?);
                census.add_count(2, 2, checked_mul(3, p)?);
                Ok(census)
            }
            FamilySpec::DendrimerD3 { n } => {
                let p = pow2(n)?;
                let mut census = Census::new();
                census.add_count(3, 3, checked_sub(checked_mul(9, p)?, 6)?);
                census.add_count(3, 2, checked_sub(checked_mul(18, p)?, 12)?);
                census.add_count(2, 2, checked_sub(checked_mul(18, p)?, 6)?);
                Ok(census)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Generators

fn generate_q(m: usize, n: usize) -> Result<Assembly, FamilyError> {
    let mut graphs = vec![Graph::complete(m)?];
    graphs.extend(std::iter::repeat_with(|| Graph::complete(n)).take(m).collect::<Result<Vec<_>, _>>()?);
    let (mut g, mut maps) = crate::graph::disjoint_union(&graphs);
    for i in 0..m {
        let hub = maps[0].apply(i);
        let attach = maps[i + 1].apply(0);
        let (next, delta) = g.identify(hub, attach)?;
        g = next;
        for map in &mut maps {
            *map = map.compose(&delta);
        }
    }
    let contact_ids = (0..m).map(|i| maps[0].apply(i)).collect();
    Ok(Assembly {
        graph: g,
        unit_maps: maps,
        contact_ids,
    })
}

fn cycle_units(q: u32, h: u32, k: u32) -> Result<Vec<RootedUnit>, FamilyError> {
    (0..k)
        .map(|_| {
            RootedUnit::new(Graph::cycle(q as usize)?, 0, Some(h as usize))
                .map_err(FamilyError::from)
        })
        .collect()
}

fn generate_spiro(q: u32, h: u32, k: u32) -> Result<Assembly, FamilyError> {
    let units = cycle_units(q, h, k)?;
    Ok(chain(&units)?)
}

/// Generation-`k` triangulane branch, rooted at its attachment vertex.
fn triangulane_branch(k: u32) -> Result<RootedUnit, FamilyError> {
    if k == 1 {
        return Ok(RootedUnit::new(Graph::cycle(3)?, 0, None)?);
    }
    let sub = triangulane_branch(k - 1)?;
    let tip = RootedUnit::new(Graph::empty(1), 0, None)?;
    let asm = circuit(&[sub.clone(), sub, tip])?;
    // The fresh vertex of the closing triangle is the next root.
    Ok(RootedUnit::new(asm.graph, asm.contact_ids[2], None)?)
}

/// Hexagon with two antipodal pendant edges; the pendant tips are the
/// in- and out-attachment points of the dendrimer connector.
fn dendrimer_connector() -> (Graph, usize, usize) {
    let g = Graph::from_edges(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (3, 7)],
    )
    .expect("fixed edge list is valid");
    (g, 6, 7)
}

/// Generation-`k` dendrimer branch, rooted at its unique leaf.
fn dendrimer_branch(k: u32) -> Result<RootedUnit, FamilyError> {
    if k == 1 {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)])?;
        return Ok(RootedUnit::new(g, 6, None)?);
    }
    let sub = dendrimer_branch(k - 1)?;
    let (connector, inlet, outlet) = dendrimer_connector();
    let conn = RootedUnit::new(connector, inlet, None)?;
    let asm = bouquet(&[sub.clone(), sub, conn])?;
    let root = asm.unit_maps[2].apply(outlet);
    Ok(RootedUnit::new(asm.graph, root, None)?)
}

// ---------------------------------------------------------------------------
// Closed forms

fn radical_combination(terms: &[(BigInt, u64)]) -> Result<RadicalSum, FamilyError> {
    let mut sum = RadicalSum::zero();
    for (coeff, radicand) in terms {
        if coeff == &BigInt::from(0) {
            continue;
        }
        sum += &RadicalSum::multiple_of_sqrt(
            BigRational::from_integer(coeff.clone()),
            *radicand,
        )
        .expect("radicands here are positive");
    }
    Ok(sum)
}

fn closed_q(m: u32, n: u32) -> Result<RadicalSum, FamilyError> {
    let (mb, nb) = (BigInt::from(m), BigInt::from(n));
    // m·[(m+n−2)(m−1) + (n−1)²(n−2)]/2 multiplies √2; the bracketed
    // half-integer split mirrors the hub-hub and interior edge classes.
    let bracket = (&mb + &nb - 2) * (&mb - 1) + (&nb - 1) * (&nb - 1) * (&nb - 2);
    let c2 = BigRational::new(mb.clone() * bracket, BigInt::from(2));
    let mut sum = RadicalSum::zero();
    if c2 != BigRational::from_integer(BigInt::from(0)) {
        sum += &RadicalSum::multiple_of_sqrt(c2, 2).expect("radicand 2 is valid");
    }
    // m(n−1) hub-to-interior edges of weight √((m+n−2)² + (n−1)²).
    let cross_coeff = mb * (&nb - 1);
    if cross_coeff != BigInt::from(0) {
        let a = m as u128 + n as u128 - 2;
        let b = n as u128 - 1;
        let radicand = u64::try_from(a * a + b * b).map_err(|_| FamilyError::TooLarge)?;
        sum += &RadicalSum::multiple_of_sqrt(
            BigRational::from_integer(cross_coeff),
            radicand,
        )
        .expect("radicand is positive");
    }
    Ok(sum)
}

fn closed_spiro(q: u32, h: u32, k: u32) -> Result<RadicalSum, FamilyError> {
    let (qi, ki) = (i128::from(q), i128::from(k));
    let (c2, c5) = if h == 1 && k >= 2 {
        (2 * qi * ki - 2 * ki - 4, 4 * ki)
    } else {
        (2 * qi * ki - 8 * ki + 8, 8 * ki - 8)
    };
    radical_combination(&[(BigInt::from(c2), 2), (BigInt::from(c5), 5)])
}

fn closed_poly(q: u32, h: u32, k: u32) -> Result<RadicalSum, FamilyError> {
    let (qi, ki) = (i128::from(q), i128::from(k));
    let (c2, c13) = if h == 1 && k >= 2 {
        (2 * qi * ki - 5, 2 * ki)
    } else {
        (2 * qi * ki - 5 * ki + 5, 4 * ki - 4)
    };
    radical_combination(&[(BigInt::from(c2), 2), (BigInt::from(c13), 13)])
}

fn closed_cactus(name: CactusName, n: u32) -> Result<RadicalSum, FamilyError> {
    let (q, h) = name.spiro_params();
    if n == 1 {
        return closed_spiro(q, h, 1);
    }
    let ni = i128::from(n);
    let (c2, c5) = match name {
        CactusName::T => (4 * ni - 4, 4 * ni),
        CactusName::Q => (8, 8 * ni - 8),
        CactusName::O => (6 * ni - 4, 4 * ni),
        CactusName::Oh => (10 * ni - 4, 4 * ni),
        CactusName::L | CactusName::M => (4 * ni + 8, 8 * ni - 8),
    };
    radical_combination(&[(BigInt::from(c2), 2), (BigInt::from(c5), 5)])
}

// ---------------------------------------------------------------------------
// Census predictions

fn pow2(e: u32) -> Result<u64, FamilyError> {
    if e >= 63 {
        Err(FamilyError::TooLarge)
    } else {
        Ok(1u64 << e)
    }
}

fn checked_mul(a: u64, b: u64) -> Result<u64, FamilyError> {
    a.checked_mul(b).ok_or(FamilyError::TooLarge)
}

fn checked_sub(a: u64, b: u64) -> Result<u64, FamilyError> {
    a.checked_sub(b).ok_or(FamilyError::TooLarge)
}

fn checked_add(a: u64, b: u64) -> Result<u64, FamilyError> {
    a.checked_add(b).ok_or(FamilyError::TooLarge)
}

fn census_q(m: u64, n: u64) -> Result<Census, FamilyError> {
    let hub = (m + n - 2) as usize;
    let interior = (n - 1) as usize;
    let mut census = Census::new();
    census.add_count(hub, hub, checked_mul(m, m - 1)? / 2);
    census.add_count(hub, interior, checked_mul(m, n - 1)?);
    census.add_count(
        interior,
        interior,
        checked_mul(checked_mul(m, n - 1)?, n.saturating_sub(2))? / 2,
    );
    Ok(census)
}

fn census_spiro(q: u64, h: u32, k: u64) -> Result<Census, FamilyError> {
    let qk = checked_mul(q, k)?;
    let mut census = Census::new();
    if h == 1 && k >= 2 {
        census.add_count(4, 4, k - 2);
        census.add_count(4, 2, checked_mul(2, k)?);
        census.add_count(2, 2, checked_sub(checked_add(qk, 2)?, 3 * k)?);
    } else {
        census.add_count(2, 4, checked_mul(4, k - 1)?);
        census.add_count(2, 2, checked_sub(checked_add(qk, 4)?, 4 * k)?);
    }
    Ok(census)
}

fn census_poly(q: u64, h: u32, k: u64) -> Result<Census, FamilyError> {
    let qk = checked_mul(q, k)?;
    let mut census = Census::new();
    if h == 1 && k >= 2 {
        census.add_count(3, 3, checked_sub(checked_mul(2, k)?, 3)?);
        census.add_count(3, 2, checked_mul(2, k)?);
        census.add_count(2, 2, checked_sub(checked_add(qk, 2)?, 3 * k)?);
    } else {
        census.add_count(3, 3, k - 1);
        census.add_count(3, 2, checked_mul(4, k - 1)?);
        census.add_count(2, 2, checked_sub(checked_add(qk, 4)?, 4 * k)?);
    }
    Ok(census)
}

// ---------------------------------------------------------------------------
// Text syntax

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Q { m, n } => write!(f, "q:m={m},n={n}"),
            FamilySpec::Spiro { q, h, k } => write!(f, "spiro:q={q},h={h},k={k}"),
            FamilySpec::Poly { q, h, k } => write!(f, "poly:q={q},h={h},k={k}"),
            FamilySpec::Cactus { name, n } => write!(f, "cactus:name={name},n={n}"),
            FamilySpec::Triangulane { k } => write!(f, "triangulane:k={k}"),
            FamilySpec::DendrimerD3 { n } => write!(f, "d3:n={n}"),
        }
    }
}

/// `key=value` parameter list with exhaustive consumption.
struct Params<'a> {
    family: &'static str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Params<'a> {
    fn parse(family: &'static str, rest: &'a str) -> Result<Self, FamilyError> {
        let mut map = BTreeMap::new();
        for part in rest.split(',') {
            let part = part.trim();
            let Some((key, value)) = part.split_once('=') else {
                return Err(FamilyError::Parse(format!(
                    "expected key=value, got `{part}`"
                )));
            };
            if map.insert(key.trim(), value.trim()).is_some() {
                return Err(FamilyError::Parse(format!("duplicate key `{}`", key.trim())));
            }
        }
        Ok(Self { family, map })
    }

    fn u32(&mut self, key: &str) -> Result<u32, FamilyError> {
        let raw = self.raw(key)?;
        raw.parse().map_err(|_| {
            FamilyError::Parse(format!(
                "{}: `{key}` must be a non-negative integer, got `{raw}`",
                self.family
            ))
        })
    }

    fn raw(&mut self, key: &str) -> Result<&'a str, FamilyError> {
        self.map.remove(key).ok_or_else(|| {
            FamilyError::Parse(format!("{}: missing parameter `{key}`", self.family))
        })
    }

    fn finish(self) -> Result<(), FamilyError> {
        if let Some(key) = self.map.keys().next() {
            return Err(FamilyError::Parse(format!(
                "{}: unknown parameter `{key}`",
                self.family
            )));
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some((kind, rest)) = s.trim().split_once(':') else {
            return Err(FamilyError::Parse(format!(
                "expected `family:key=value,...`, got `{s}`"
            )));
        };
        let spec = match kind.trim().to_ascii_lowercase().as_str() {
            "q" => {
                let mut p = Params::parse("q", rest)?;
                let spec = FamilySpec::Q {
                    m: p.u32("m")?,
                    n: p.u32("n")?,
                };
                p.finish()?;
                spec
            }
            "spiro" => {
                let mut p = Params::parse("spiro", rest)?;
                let spec = FamilySpec::Spiro {
                    q: p.u32("q")?,
                    h: p.u32("h")?,
                    k: p.u32("k")?,
                };
                p.finish()?;
                spec
            }
            "poly" => {
                let mut p = Params::parse("poly", rest)?;
                let spec = FamilySpec::Poly {
                    q: p.u32("q")?,
                    h: p.u32("h")?,
                    k: p.u32("k")?,
                };
                p.finish()?;
                spec
            }
            "cactus" => {
                let mut p = Params::parse("cactus", rest)?;
                let spec = FamilySpec::Cactus {
                    name: p.raw("name")?.parse()?,
                    n: p.u32("n")?,
                };
                p.finish()?;
                spec
            }
            "triangulane" => {
                let mut p = Params::parse("triangulane", rest)?;
                let spec = FamilySpec::Triangulane { k: p.u32("k")? };
                p.finish()?;
                spec
            }
            "d3" => {
                let mut p = Params::parse("d3", rest)?;
                let spec = FamilySpec::DendrimerD3 { n: p.u32("n")? };
                p.finish()?;
                spec
            }
            other => {
                return Err(FamilyError::Parse(format!("unknown family `{other}`")));
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::sombor_index;

    fn sqrt(n: u64) -> RadicalSum {
        RadicalSum::sqrt_of(n).unwrap()
    }

    fn check_spec(spec: FamilySpec) {
        let asm = spec.generate().unwrap();
        assert!(asm.graph.is_connected(), "{spec} should be connected");
        assert_eq!(
            sombor_index(&asm.graph),
            spec.closed_form().unwrap(),
            "closed form mismatch for {spec}"
        );
        assert_eq!(
            asm.graph.edge_census(),
            spec.census_prediction().unwrap(),
            "census mismatch for {spec}"
        );
    }

    #[test]
    fn q_family_matches_hand_counts() {
        let spec = FamilySpec::Q { m: 5, n: 4 };
        let asm = spec.generate().unwrap();
        assert_eq!(asm.graph.vertex_count(), 20);
        assert_eq!(asm.graph.edge_count(), 40);
        let census = asm.graph.edge_census();
        assert_eq!(census.get(7, 7), 10);
        assert_eq!(census.get(7, 3), 15);
        assert_eq!(census.get(3, 3), 15);
        assert_eq!(
            spec.closed_form().unwrap(),
            sqrt(2).scale_int(115) + sqrt(58).scale_int(15)
        );
        check_spec(spec);
    }

    #[test]
    fn q_family_degenerate_corners() {
        // Q(2,2) is the path P_4 (up to labels).
        let asm = FamilySpec::Q { m: 2, n: 2 }.generate().unwrap();
        let p4 = Graph::path(4).unwrap();
        assert_eq!(asm.graph.edge_census(), p4.edge_census());
        assert_eq!(sombor_index(&asm.graph), sombor_index(&p4));
        check_spec(FamilySpec::Q { m: 2, n: 2 });
        // Q(m,1) degenerates to K_m, Q(1,n) to K_n.
        let asm = FamilySpec::Q { m: 4, n: 1 }.generate().unwrap();
        assert_eq!(asm.graph, Graph::complete(4).unwrap());
        check_spec(FamilySpec::Q { m: 4, n: 1 });
        let asm = FamilySpec::Q { m: 1, n: 5 }.generate().unwrap();
        assert_eq!(sombor_index(&asm.graph), sombor_index(&Graph::complete(5).unwrap()));
        check_spec(FamilySpec::Q { m: 1, n: 5 });
        // Q(2,4) exercises a perfect-square radicand: 6 edges of weight
        // √25 contribute the rational part 30.
        let spec = FamilySpec::Q { m: 2, n: 4 };
        assert_eq!(
            spec.closed_form().unwrap(),
            RadicalSum::from_integer(30) + sqrt(2).scale_int(22)
        );
        check_spec(spec);
    }

    #[test]
    fn spiro_chains() {
        let spec = FamilySpec::Spiro { q: 6, h: 2, k: 8 };
        assert_eq!(
            spec.closed_form().unwrap(),
            sqrt(2).scale_int(40) + sqrt(5).scale_int(56)
        );
        check_spec(spec);
        // Adjacent contacts change the census.
        check_spec(FamilySpec::Spiro { q: 6, h: 1, k: 4 });
        check_spec(FamilySpec::Spiro { q: 3, h: 1, k: 5 });
        // k = 1 is the bare cycle regardless of h.
        for h in 1..=3 {
            let spec = FamilySpec::Spiro { q: 6, h, k: 1 };
            assert_eq!(spec.closed_form().unwrap(), sqrt(2).scale_int(12));
            check_spec(spec);
        }
    }

    #[test]
    fn poly_chains() {
        let spec = FamilySpec::Poly { q: 6, h: 1, k: 2 };
        let census = spec.census_prediction().unwrap();
        assert_eq!(census.get(3, 3), 1);
        assert_eq!(census.get(3, 2), 4);
        assert_eq!(census.get(2, 2), 8);
        check_spec(spec);
        let spec = FamilySpec::Poly { q: 6, h: 2, k: 4 };
        assert_eq!(
            spec.closed_form().unwrap(),
            sqrt(2).scale_int(33) + sqrt(13).scale_int(12)
        );
        check_spec(spec);
        check_spec(FamilySpec::Poly { q: 5, h: 1, k: 6 });
        check_spec(FamilySpec::Poly { q: 4, h: 1, k: 1 });
    }

    #[test]
    fn cactus_aliases_match_their_spiro_chains() {
        for name in CactusName::ALL {
            let (q, h) = name.spiro_params();
            for n in 1..=8 {
                let alias = FamilySpec::Cactus { name, n };
                let spiro = FamilySpec::Spiro { q, h, k: n };
                assert_eq!(
                    alias.closed_form().unwrap(),
                    spiro.closed_form().unwrap(),
                    "{name} at n={n}"
                );
                assert_eq!(
                    alias.census_prediction().unwrap(),
                    spiro.census_prediction().unwrap()
                );
            }
            check_spec(FamilySpec::Cactus { name, n: 4 });
        }
        // Spot value: the para square chain.
        assert_eq!(
            FamilySpec::Cactus {
                name: CactusName::Q,
                n: 5
            }
            .closed_form()
            .unwrap(),
            sqrt(2).scale_int(8) + sqrt(5).scale_int(32)
        );
    }

    #[test]
    fn triangulane_generations() {
        let t1 = FamilySpec::Triangulane { k: 1 };
        let asm = t1.generate().unwrap();
        assert_eq!(asm.graph.vertex_count(), 9);
        assert_eq!(asm.graph.edge_count(), 12);
        check_spec(t1);
        let t3 = FamilySpec::Triangulane { k: 3 };
        let asm = t3.generate().unwrap();
        assert_eq!(asm.graph.edge_count(), 66);
        assert_eq!(
            t3.closed_form().unwrap(),
            sqrt(2).scale_int(144) + sqrt(5).scale_int(48)
        );
        check_spec(t3);
        check_spec(FamilySpec::Triangulane { k: 2 });
        check_spec(FamilySpec::Triangulane { k: 4 });
    }

    #[test]
    fn dendrimer_generations() {
        let d0 = FamilySpec::DendrimerD3 { n: 0 };
        let asm = d0.generate().unwrap();
        assert_eq!(asm.graph.vertex_count(), 19);
        assert_eq!(asm.graph.edge_count(), 21);
        let census = asm.graph.edge_census();
        assert_eq!(census.get(3, 3), 3);
        assert_eq!(census.get(3, 2), 6);
        assert_eq!(census.get(2, 2), 12);
        check_spec(d0);
        let d2 = FamilySpec::DendrimerD3 { n: 2 };
        assert_eq!(d2.generate().unwrap().graph.edge_count(), 156);
        assert_eq!(
            d2.closed_form().unwrap(),
            sqrt(2).scale_int(222) + sqrt(13).scale_int(60)
        );
        check_spec(d2);
        check_spec(FamilySpec::DendrimerD3 { n: 1 });
        check_spec(FamilySpec::DendrimerD3 { n: 3 });
    }

    #[test]
    fn degenerate_corner_flags() {
        assert!(FamilySpec::Spiro { q: 5, h: 1, k: 1 }.uses_degenerate_formula());
        assert!(!FamilySpec::Spiro { q: 5, h: 2, k: 1 }.uses_degenerate_formula());
        assert!(!FamilySpec::Spiro { q: 5, h: 1, k: 2 }.uses_degenerate_formula());
        assert!(FamilySpec::Cactus {
            name: CactusName::T,
            n: 1
        }
        .uses_degenerate_formula());
        assert!(!FamilySpec::Cactus {
            name: CactusName::Q,
            n: 1
        }
        .uses_degenerate_formula());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let cases = [
            "q:m=5,n=4",
            "spiro:q=6,h=2,k=8",
            "poly:q=6,h=1,k=4",
            "cactus:name=Q,n=5",
            "triangulane:k=3",
            "d3:n=2",
        ];
        for text in cases {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            let again: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(spec, again);
        }
        // Accepted spellings and whitespace.
        assert_eq!(
            "cactus:name=Qn,n=5".parse::<FamilySpec>().unwrap(),
            FamilySpec::Cactus {
                name: CactusName::Q,
                n: 5
            }
        );
        assert_eq!(
            " SPIRO: q=6, h=2, k=8 ".parse::<FamilySpec>().unwrap(),
            FamilySpec::Spiro { q: 6, h: 2, k: 8 }
        );
    }

    #[test]
    fn parse_rejects_bad_specs() {
        for bad in [
            "spiro",
            "spiro:q=6,h=2",
            "spiro:q=6,h=2,k=8,z=1",
            "spiro:q=6,h=9,k=8",
            "spiro:q=2,h=1,k=8",
            "q:m=0,n=4",
            "cactus:name=Z,n=5",
            "triangulane:k=0",
            "nope:a=1",
            "spiro:q=six,h=2,k=8",
            "spiro:q=6,h=2,k=8,q=6",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad} should fail");
        }
    }
}
