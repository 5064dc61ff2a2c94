//! Point-attaching operators.
//!
//! A polymer graph is assembled from connected monomer units, each rooted
//! at one or two contact vertices. Four operators attach units together:
//!
//! - [`link`]: a new edge from each unit's out-contact to the next unit's
//!   in-contact (a bridge; no vertices merge).
//! - [`chain`]: consecutive out/in contacts are identified.
//! - [`circuit`]: the contacts are arranged on a new cycle.
//! - [`bouquet`]: all contacts are identified into a single hub.
//!
//! Each operator has one or more Sombor-index lower bounds expressed in
//! the units' indices and contact degrees. Contact degrees can be read
//! either inside the isolated unit or in the finished assembly (the
//! sources differ once attachments pile up), so every bound takes a
//! [`DegreeConvention`] and callers can compare both readings.

use thiserror::Error;

use crate::graph::{disjoint_union, Graph, GraphError, VertexMap};
use crate::index::{abs_diff_over_sqrt2, sombor_index};
use crate::radical::RadicalSum;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("unit graph must be connected")]
    DisconnectedUnit,
    #[error("contact vertex {0} out of range")]
    InvalidContact(usize),
    #[error("in- and out-contacts must be distinct vertices")]
    EqualContacts,
    #[error("unit {0} needs both contacts for this operator")]
    MissingOutContact(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("assembly does not correspond to the given units: {0}")]
    AssemblyMismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A connected monomer with an in-contact `x` and an optional out-contact
/// `y`. Operators that only touch one vertex per unit ignore `y`.
#[derive(Clone, Debug)]
pub struct RootedUnit {
    graph: Graph,
    x: usize,
    y: Option<usize>,
}

impl RootedUnit {
    pub fn new(graph: Graph, x: usize, y: Option<usize>) -> Result<Self, ConstructError> {
        if !graph.is_connected() {
            return Err(ConstructError::DisconnectedUnit);
        }
        if !graph.has_vertex(x) {
            return Err(ConstructError::InvalidContact(x));
        }
        if let Some(y) = y {
            if !graph.has_vertex(y) {
                return Err(ConstructError::InvalidContact(y));
            }
            if y == x {
                return Err(ConstructError::EqualContacts);
            }
        }
        Ok(Self { graph, x, y })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> Option<usize> {
        self.y
    }

    fn y_required(&self, index: usize) -> Result<usize, ConstructError> {
        self.y.ok_or(ConstructError::MissingOutContact(index))
    }
}

/// An assembled polymer graph plus the bookkeeping needed to find the
/// units inside it: one vertex map per unit, and the images of the
/// contact vertices (deduplicated when contacts were identified).
#[derive(Clone, Debug)]
pub struct Assembly {
    pub graph: Graph,
    pub unit_maps: Vec<VertexMap>,
    pub contact_ids: Vec<usize>,
}

fn require_units(units: &[RootedUnit], min: usize, op: &str) -> Result<(), ConstructError> {
    if units.len() < min {
        return Err(ConstructError::InvalidParameter(format!(
            "{op} needs at least {min} unit(s), got {}",
            units.len()
        )));
    }
    Ok(())
}

fn require_out_contacts(units: &[RootedUnit]) -> Result<(), ConstructError> {
    for (i, u) in units.iter().enumerate() {
        u.y_required(i)?;
    }
    Ok(())
}

fn union_of(units: &[RootedUnit]) -> (Graph, Vec<VertexMap>) {
    let graphs: Vec<Graph> = units.iter().map(|u| u.graph.clone()).collect();
    disjoint_union(&graphs)
}

/// Joins the units in order with a new bridge edge `yᵢ — x_{i+1}`.
pub fn link(units: &[RootedUnit]) -> Result<Assembly, ConstructError> {
    require_units(units, 1, "link")?;
    require_out_contacts(units)?;
    let (mut g, maps) = union_of(units);
    for i in 0..units.len() - 1 {
        let from = maps[i].apply(units[i].y_required(i)?);
        let to = maps[i + 1].apply(units[i + 1].x);
        g = g.with_edge(from, to)?;
    }
    let mut contacts = Vec::with_capacity(2 * units.len());
    for (i, u) in units.iter().enumerate() {
        contacts.push(maps[i].apply(u.x));
        contacts.push(maps[i].apply(u.y_required(i)?));
    }
    Ok(Assembly {
        graph: g,
        unit_maps: maps,
        contact_ids: contacts,
    })
}

/// Identifies each out-contact with the next unit's in-contact, so
/// consecutive units share one joint vertex.
pub fn chain(units: &[RootedUnit]) -> Result<Assembly, ConstructError> {
    require_units(units, 1, "chain")?;
    require_out_contacts(units)?;
    let (mut g, mut maps) = union_of(units);
    for i in 0..units.len() - 1 {
        let a = maps[i].apply(units[i].y_required(i)?);
        let b = maps[i + 1].apply(units[i + 1].x);
        let (next, delta) = g.identify(a, b)?;
        g = next;
        for m in &mut maps {
            *m = m.compose(&delta);
        }
    }
    // Contacts after deduplication: x₁, the joints, then y_n.
    let last = units.len() - 1;
    let mut contacts = vec![maps[0].apply(units[0].x)];
    for i in 0..last {
        contacts.push(maps[i].apply(units[i].y_required(i)?));
    }
    contacts.push(maps[last].apply(units[last].y_required(last)?));
    Ok(Assembly {
        graph: g,
        unit_maps: maps,
        contact_ids: contacts,
    })
}

/// Arranges the units' in-contacts on a new cycle: contact `i` becomes
/// adjacent to contacts `i−1` and `i+1` (mod `k`). Needs `k ≥ 3`.
pub fn circuit(units: &[RootedUnit]) -> Result<Assembly, ConstructError> {
    require_units(units, 3, "circuit")?;
    let (mut g, maps) = union_of(units);
    let contacts: Vec<usize> = units
        .iter()
        .zip(&maps)
        .map(|(u, m)| m.apply(u.x))
        .collect();
    let k = contacts.len();
    for i in 0..k {
        g = g.with_edge(contacts[i], contacts[(i + 1) % k])?;
    }
    Ok(Assembly {
        graph: g,
        unit_maps: maps,
        contact_ids: contacts,
    })
}

/// Identifies all in-contacts into one hub vertex.
pub fn bouquet(units: &[RootedUnit]) -> Result<Assembly, ConstructError> {
    require_units(units, 1, "bouquet")?;
    let (mut g, mut maps) = union_of(units);
    let mut hub = maps[0].apply(units[0].x);
    for i in 1..units.len() {
        let xi = maps[i].apply(units[i].x);
        let (next, delta) = g.identify(hub, xi)?;
        g = next;
        hub = delta.apply(hub);
        for m in &mut maps {
            *m = m.compose(&delta);
        }
    }
    Ok(Assembly {
        graph: g,
        unit_maps: maps,
        contact_ids: vec![hub],
    })
}

/// Which graph contact degrees are read from when evaluating a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeConvention {
    /// Degrees inside each isolated monomer, before any attachment.
    UnitLocal,
    /// Degrees in the finished assembly.
    Assembly,
}

impl DegreeConvention {
    pub const BOTH: [DegreeConvention; 2] = [DegreeConvention::UnitLocal, DegreeConvention::Assembly];

    pub fn label(self) -> &'static str {
        match self {
            DegreeConvention::UnitLocal => "unit",
            DegreeConvention::Assembly => "assembly",
        }
    }
}

/// Cheap consistency check that `assembly` really contains the given
/// units: map lengths agree and every unit edge maps onto an assembly
/// edge.
fn check_assembly(assembly: &Assembly, units: &[RootedUnit]) -> Result<(), ConstructError> {
    if assembly.unit_maps.len() != units.len() {
        return Err(ConstructError::AssemblyMismatch(format!(
            "{} unit maps for {} units",
            assembly.unit_maps.len(),
            units.len()
        )));
    }
    for (i, (unit, map)) in units.iter().zip(&assembly.unit_maps).enumerate() {
        if map.input_len() != unit.graph.vertex_count() {
            return Err(ConstructError::AssemblyMismatch(format!(
                "unit {i} has {} vertices but its map covers {}",
                unit.graph.vertex_count(),
                map.input_len()
            )));
        }
        for (u, v) in unit.graph.edges() {
            let (Some(mu), Some(mv)) = (map.image(u), map.image(v)) else {
                return Err(ConstructError::AssemblyMismatch(format!(
                    "unit {i} vertex lost by its map"
                )));
            };
            if !assembly.graph.has_edge(mu, mv) {
                return Err(ConstructError::AssemblyMismatch(format!(
                    "unit {i} edge {u}-{v} missing from the assembly"
                )));
            }
        }
    }
    Ok(())
}

fn degree_at(
    assembly: &Assembly,
    units: &[RootedUnit],
    unit_idx: usize,
    vertex: usize,
    conv: DegreeConvention,
) -> usize {
    match conv {
        DegreeConvention::UnitLocal => units[unit_idx].graph.degree(vertex),
        DegreeConvention::Assembly => assembly
            .graph
            .degree(assembly.unit_maps[unit_idx].apply(vertex)),
    }
}

fn sum_of_unit_indices(units: &[RootedUnit]) -> RadicalSum {
    let mut sum = RadicalSum::zero();
    for u in units {
        sum += &sombor_index(&u.graph);
    }
    sum
}

/// Lower bound for a link assembly:
/// `Σᵢ SO(Gᵢ) + Σᵢ |d(x_{i+1}) − d(yᵢ)| / √2`.
pub fn link_lower_bound(
    assembly: &Assembly,
    units: &[RootedUnit],
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    check_assembly(assembly, units)?;
    require_out_contacts(units)?;
    let mut bound = sum_of_unit_indices(units);
    for i in 0..units.len() - 1 {
        let dy = degree_at(assembly, units, i, units[i].y_required(i)?, conv);
        let dx = degree_at(assembly, units, i + 1, units[i + 1].x, conv);
        bound += &abs_diff_over_sqrt2(dx, dy);
    }
    Ok(bound)
}

/// Degree-difference lower bound for a circuit assembly:
/// `Σᵢ SO(Gᵢ) + Σ_cyclic |d(xᵢ) − d(x_{i+1})| / √2`, wrap-around term
/// included.
pub fn circuit_lower_bound_deg(
    assembly: &Assembly,
    units: &[RootedUnit],
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    check_assembly(assembly, units)?;
    require_units(units, 3, "circuit")?;
    let k = units.len();
    let mut bound = sum_of_unit_indices(units);
    for i in 0..k {
        let j = (i + 1) % k;
        let di = degree_at(assembly, units, i, units[i].x, conv);
        let dj = degree_at(assembly, units, j, units[j].x, conv);
        bound += &abs_diff_over_sqrt2(di, dj);
    }
    Ok(bound)
}

/// Cycle-edge lower bound for a circuit of `k` units:
/// `2k√2 + Σᵢ SO(Gᵢ)`, attained exactly when every unit is a single
/// vertex (the assembly is then the bare cycle `C_k`).
pub fn circuit_lower_bound_2k(units: &[RootedUnit]) -> Result<RadicalSum, ConstructError> {
    require_units(units, 3, "circuit")?;
    let mut bound = sum_of_unit_indices(units);
    bound += &RadicalSum::sqrt_of(2)
        .expect("radicand 2 is valid")
        .scale_int(2 * units.len() as i64);
    Ok(bound)
}

/// Shared inner sum of the chain/bouquet bounds for unit `i ≥ 1`:
/// `SO(Gᵢ − xᵢ) + Σ_{u ∼ xᵢ in Gᵢ} |d(u) − d_joint| / √2` where `d_joint`
/// is the attachment vertex's degree under the chosen convention.
fn peeled_unit_terms(
    assembly: &Assembly,
    units: &[RootedUnit],
    i: usize,
    joint_degree_unit_local: usize,
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    let unit = &units[i];
    let (without_contact, _) = unit.graph.delete_vertex(unit.x)?;
    let mut sum = sombor_index(&without_contact);
    let d_joint = match conv {
        DegreeConvention::UnitLocal => joint_degree_unit_local,
        DegreeConvention::Assembly => assembly
            .graph
            .degree(assembly.unit_maps[i].apply(unit.x)),
    };
    for u in unit.graph.neighbors(unit.x) {
        let du = degree_at(assembly, units, i, u, conv);
        sum += &abs_diff_over_sqrt2(du, d_joint);
    }
    Ok(sum)
}

/// Chain lower bound that peels only the last unit:
/// `SO(chain(G₁..G_{n−1})) + SO(G_n − x_n) + Σ_{u ∼ x_n in G_n} |d(u) −
/// d_joint| / √2`. Needs `n ≥ 2`.
pub fn chain_lower_bound_i(
    assembly: &Assembly,
    units: &[RootedUnit],
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    check_assembly(assembly, units)?;
    let n = units.len();
    if n < 2 {
        return Err(ConstructError::InvalidParameter(
            "peeling the last unit needs at least 2 units".into(),
        ));
    }
    let sub = chain(&units[..n - 1])?;
    let mut bound = sombor_index(&sub.graph);
    let upstream_y = units[n - 2].y_required(n - 2)?;
    bound += &peeled_unit_terms(
        assembly,
        units,
        n - 1,
        units[n - 2].graph.degree(upstream_y),
        conv,
    )?;
    Ok(bound)
}

/// Chain lower bound that peels every unit after the first:
/// `SO(G₁) + Σ_{i≥2} [SO(Gᵢ − xᵢ) + Σ_{u ∼ xᵢ in Gᵢ} |d(u) − d_joint| / √2]`.
pub fn chain_lower_bound_ii(
    assembly: &Assembly,
    units: &[RootedUnit],
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    check_assembly(assembly, units)?;
    require_units(units, 1, "chain")?;
    let mut bound = sombor_index(&units[0].graph);
    for i in 1..units.len() {
        let upstream_y = units[i - 1].y_required(i - 1)?;
        bound += &peeled_unit_terms(
            assembly,
            units,
            i,
            units[i - 1].graph.degree(upstream_y),
            conv,
        )?;
    }
    Ok(bound)
}

/// Bouquet lower bound:
/// `SO(G₁) + Σ_{i≥2} [SO(Gᵢ − xᵢ) + Σ_{u ∼ xᵢ in Gᵢ} |d(u) − d_hub| / √2]`,
/// where under the assembly convention `d_hub` is the merged hub degree.
pub fn bouquet_lower_bound(
    assembly: &Assembly,
    units: &[RootedUnit],
    conv: DegreeConvention,
) -> Result<RadicalSum, ConstructError> {
    check_assembly(assembly, units)?;
    require_units(units, 1, "bouquet")?;
    let mut bound = sombor_index(&units[0].graph);
    for i in 1..units.len() {
        let local = units[i].graph.degree(units[i].x);
        bound += &peeled_unit_terms(assembly, units, i, local, conv)?;
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{cmp_numeric, default_margin, NumericOrdering};

    fn sqrt(n: u64) -> RadicalSum {
        RadicalSum::sqrt_of(n).unwrap()
    }

    fn k2_unit() -> RootedUnit {
        RootedUnit::new(Graph::complete(2).unwrap(), 0, Some(1)).unwrap()
    }

    fn c3_unit(y: Option<usize>) -> RootedUnit {
        RootedUnit::new(Graph::cycle(3).unwrap(), 0, y).unwrap()
    }

    fn k1_unit() -> RootedUnit {
        RootedUnit::new(Graph::empty(1), 0, None).unwrap()
    }

    #[test]
    fn rooted_unit_validation() {
        assert!(matches!(
            RootedUnit::new(Graph::empty(2), 0, None),
            Err(ConstructError::DisconnectedUnit)
        ));
        assert!(matches!(
            RootedUnit::new(Graph::complete(2).unwrap(), 2, None),
            Err(ConstructError::InvalidContact(2))
        ));
        assert!(matches!(
            RootedUnit::new(Graph::complete(2).unwrap(), 1, Some(1)),
            Err(ConstructError::EqualContacts)
        ));
        // A single vertex is connected and can carry its one contact.
        assert!(RootedUnit::new(Graph::empty(1), 0, None).is_ok());
    }

    #[test]
    fn link_of_two_edges_is_p4() {
        let asm = link(&[k2_unit(), k2_unit()]).unwrap();
        assert_eq!(asm.graph.vertex_count(), 4);
        assert_eq!(asm.graph.edge_count(), 3);
        assert_eq!(asm.graph.edge_census().get(1, 2), 2);
        assert_eq!(asm.graph.edge_census().get(2, 2), 1);
        assert_eq!(
            sombor_index(&asm.graph),
            sqrt(5).scale_int(2) + sqrt(2).scale_int(2)
        );
        // Both degree conventions agree here: the bridge adds one to each
        // contact, which cancels in the difference.
        for conv in DegreeConvention::BOTH {
            let bound = link_lower_bound(&asm, &[k2_unit(), k2_unit()], conv).unwrap();
            assert_eq!(bound, sqrt(2).scale_int(2));
        }
    }

    #[test]
    fn chain_of_two_edges_is_p3() {
        let units = [k2_unit(), k2_unit()];
        let asm = chain(&units).unwrap();
        assert_eq!(asm.graph.vertex_count(), 3);
        assert_eq!(asm.graph.edge_count(), 2);
        assert_eq!(sombor_index(&asm.graph), sqrt(5).scale_int(2));
        assert_eq!(asm.contact_ids.len(), 3);
        let joint = asm.contact_ids[1];
        assert_eq!(asm.graph.degree(joint), 2);

        // Assembly-degree reading: √2 + 0 + |1−2|/√2 = (3/2)√2.
        let ii_asm = chain_lower_bound_ii(&asm, &units, DegreeConvention::Assembly).unwrap();
        let three_halves_sqrt2 = RadicalSum::multiple_of_sqrt(
            num_rational::BigRational::new(3.into(), 2.into()),
            2,
        )
        .unwrap();
        assert_eq!(ii_asm, three_halves_sqrt2);
        // Unit-local reading: √2 + 0 + |1−1|/√2 = √2.
        let ii_unit = chain_lower_bound_ii(&asm, &units, DegreeConvention::UnitLocal).unwrap();
        assert_eq!(ii_unit, sqrt(2));
        // Both stay strictly below SO(P_3) = 2√5.
        let so = sombor_index(&asm.graph);
        assert_eq!(
            cmp_numeric(&ii_asm, &so, default_margin(&ii_asm, &so)),
            NumericOrdering::Less
        );
    }

    #[test]
    fn chain_of_two_triangles_is_bowtie() {
        let units = [c3_unit(Some(1)), c3_unit(Some(1))];
        let asm = chain(&units).unwrap();
        assert_eq!(asm.graph.vertex_count(), 5);
        assert_eq!(asm.graph.edge_count(), 6);
        assert_eq!(
            sombor_index(&asm.graph),
            sqrt(5).scale_int(8) + sqrt(2).scale_int(4)
        );
    }

    #[test]
    fn circuit_of_single_vertices_is_bare_cycle() {
        for k in 3..=6 {
            let units: Vec<RootedUnit> = (0..k).map(|_| k1_unit()).collect();
            let asm = circuit(&units).unwrap();
            assert_eq!(asm.graph, Graph::cycle(k).unwrap());
            // The cycle-edge bound is attained exactly.
            let bound = circuit_lower_bound_2k(&units).unwrap();
            assert_eq!(sombor_index(&asm.graph), bound);
            // The degree-difference bound collapses to 0 and stays strict.
            let deg = circuit_lower_bound_deg(&asm, &units, DegreeConvention::UnitLocal).unwrap();
            assert!(deg.is_zero());
        }
    }

    #[test]
    fn circuit_of_three_triangles() {
        let units = vec![c3_unit(None), c3_unit(None), c3_unit(None)];
        let asm = circuit(&units).unwrap();
        assert_eq!(asm.graph.vertex_count(), 9);
        assert_eq!(asm.graph.edge_count(), 12);
        let census = asm.graph.edge_census();
        assert_eq!(census.get(4, 4), 3);
        assert_eq!(census.get(4, 2), 6);
        assert_eq!(census.get(2, 2), 3);
        let so = sombor_index(&asm.graph);
        assert_eq!(so, sqrt(2).scale_int(18) + sqrt(5).scale_int(12));
        // 2k√2 + ΣSO = 6√2 + 18√2 = 24√2, strictly below SO.
        let bound = circuit_lower_bound_2k(&units).unwrap();
        assert_eq!(bound, sqrt(2).scale_int(24));
        assert_eq!(
            cmp_numeric(&so, &bound, default_margin(&so, &bound)),
            NumericOrdering::Greater
        );
    }

    #[test]
    fn bouquet_of_three_edges_is_star() {
        let units = vec![k2_unit(), k2_unit(), k2_unit()];
        let asm = bouquet(&units).unwrap();
        assert_eq!(asm.graph.vertex_count(), 4);
        let hub = asm.contact_ids[0];
        assert_eq!(asm.graph.degree(hub), 3);
        assert_eq!(sombor_index(&asm.graph), sqrt(10).scale_int(3));

        // Assembly reading: √2 + 2·(0 + |1−3|/√2) = √2 + 2√2 = 3√2.
        let asm_bound = bouquet_lower_bound(&asm, &units, DegreeConvention::Assembly).unwrap();
        assert_eq!(asm_bound, sqrt(2).scale_int(3));
        // Unit-local reading: √2 + 2·(0 + |1−1|/√2) = √2.
        let unit_bound = bouquet_lower_bound(&asm, &units, DegreeConvention::UnitLocal).unwrap();
        assert_eq!(unit_bound, sqrt(2));
    }

    #[test]
    fn bouquet_of_two_triangles_is_bowtie() {
        let units = vec![c3_unit(None), c3_unit(None)];
        let asm = bouquet(&units).unwrap();
        assert_eq!(asm.graph.vertex_count(), 5);
        assert_eq!(asm.graph.edge_count(), 6);
        assert_eq!(asm.graph.degree(asm.contact_ids[0]), 4);
    }

    #[test]
    fn operator_validation_errors() {
        assert!(matches!(
            link(&[c3_unit(None)]),
            Err(ConstructError::MissingOutContact(0))
        ));
        assert!(matches!(
            circuit(&[k1_unit(), k1_unit()]),
            Err(ConstructError::InvalidParameter(_))
        ));
        assert!(matches!(
            chain(&[]),
            Err(ConstructError::InvalidParameter(_))
        ));
        // Bound functions reject assemblies that do not match the units.
        let asm = bouquet(&[k2_unit(), k2_unit()]).unwrap();
        assert!(matches!(
            bouquet_lower_bound(&asm, &[k2_unit()], DegreeConvention::Assembly),
            Err(ConstructError::AssemblyMismatch(_))
        ));
        let wrong_units = vec![c3_unit(None), c3_unit(None)];
        assert!(matches!(
            bouquet_lower_bound(&asm, &wrong_units, DegreeConvention::Assembly),
            Err(ConstructError::AssemblyMismatch(_))
        ));
    }

    #[test]
    fn chain_peel_bounds_agree_for_two_units() {
        // With two units the one-step and full peels coincide.
        let units = [c3_unit(Some(1)), c3_unit(Some(2))];
        let asm = chain(&units).unwrap();
        for conv in DegreeConvention::BOTH {
            let i = chain_lower_bound_i(&asm, &units, conv).unwrap();
            let ii = chain_lower_bound_ii(&asm, &units, conv).unwrap();
            assert_eq!(i, ii);
        }
        assert!(matches!(
            chain_lower_bound_i(&asm, &units[..1], DegreeConvention::Assembly),
            Err(ConstructError::AssemblyMismatch(_))
        ));
    }
}
