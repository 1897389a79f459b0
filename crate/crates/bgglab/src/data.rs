//! Block vertex data and the multiplicity rows of Euler characters in
//! simples.

use crate::Error;
use std::collections::BTreeMap;
use weightlab::{block_vertices, descriptor_class, BlockClass, BlockDescriptor, Weight};

/// A block cut at an index bound: its vertices in ascending chain order,
/// their display labels, and which of them are regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockData {
    pub descriptor: BlockDescriptor,
    pub class: BlockClass,
    pub vertices: Vec<Weight>,
    pub labels: Vec<String>,
    pub regular: Vec<bool>,
}

impl BlockData {
    /// Display name of the projective cover at vertex `idx`, matching the
    /// chain indexing of the labels (P(0) over C, P(a) over La, plain P on a
    /// one-vertex block).
    pub fn projective_name(&self, idx: usize) -> String {
        match self.class {
            BlockClass::Principal => format!("P({idx})"),
            BlockClass::Standard | BlockClass::HalfStandard => format!("P({})", idx + 1),
            _ => "P".to_string(),
        }
    }

    /// Display name of the Euler character at vertex `idx`.
    pub fn euler_name(&self, idx: usize) -> String {
        match self.class {
            BlockClass::Principal => format!("E({idx})"),
            BlockClass::Standard | BlockClass::HalfStandard => format!("E({})", idx + 1),
            _ => "E".to_string(),
        }
    }
}

/// Builds the vertex data of the block of `desc`, cut at `bound`.
pub fn block_data(desc: &BlockDescriptor, bound: u32) -> Result<BlockData, Error> {
    let class = descriptor_class(desc)?;
    let vertices = block_vertices(desc, bound)?;
    let labels: Vec<String> = match class {
        BlockClass::Principal => {
            (0..vertices.len()).map(|i| if i == 0 { "C".into() } else { format!("L{i}") }).collect()
        }
        BlockClass::Standard | BlockClass::HalfStandard => {
            (0..vertices.len()).map(|i| format!("L{}", i + 1)).collect()
        }
        _ => vec!["L".to_string()],
    };
    let regular = vertices.iter().map(Weight::is_regular_dominant).collect();
    Ok(BlockData { descriptor: desc.clone(), class, vertices, labels, regular })
}

/// Rows of the multiplicity matrix b: for each regular vertex index, the
/// total multiplicities of the simples inside its Euler character, as
/// (vertex index, multiplicity) pairs. Rows include the diagonal entry 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMatrix {
    pub rows: BTreeMap<usize, Vec<(usize, u64)>>,
}

impl BMatrix {
    pub fn entry(&self, mu: usize, nu: usize) -> u64 {
        self.rows
            .get(&mu)
            .map(|row| row.iter().find(|(j, _)| *j == nu).map_or(0, |(_, m)| *m))
            .unwrap_or(0)
    }
}

/// The multiplicity rows of the block: the chain blocks carry two-term rows
/// with a heavier base row, one-vertex blocks a single 1.
pub fn b_matrix(data: &BlockData) -> Result<BMatrix, Error> {
    let n = data.vertices.len();
    let mut rows = BTreeMap::new();
    let is_q = data.descriptor.algebra == weightlab::Algebra::Q;
    match data.class {
        BlockClass::Principal => {
            // Vertex 0 is the trivial weight; regular rows start at index 1.
            for i in 1..n {
                let row = match i {
                    1 => vec![(1, 1)],
                    2 => vec![(2, 1), (1, 1), (0, 2)],
                    _ => vec![(i, 1), (i - 1, 1)],
                };
                rows.insert(i, row);
            }
        }
        BlockClass::Standard => {
            // Vertex 0 is (1,0,0); the base regular row differs by algebra.
            for i in 1..n {
                let row = match i {
                    1 if is_q => vec![(1, 1), (0, 2)],
                    1 => vec![(1, 1), (0, 1)],
                    _ => vec![(i, 1), (i - 1, 1)],
                };
                rows.insert(i, row);
            }
        }
        BlockClass::HalfStandard => {
            for i in 0..n {
                let row = if i == 0 { vec![(0, 1)] } else { vec![(i, 1), (i - 1, 1)] };
                rows.insert(i, row);
            }
        }
        BlockClass::Typical | BlockClass::StronglyTypical | BlockClass::SqTypicalLoop => {
            rows.insert(0, vec![(0, 1)]);
        }
    }
    // Sanity: rows sit exactly at the regular vertices.
    for (i, reg) in data.regular.iter().enumerate() {
        if *reg != rows.contains_key(&i) {
            return Err(Error::Inversion(format!(
                "vertex {} regularity does not match the multiplicity rows",
                data.vertices[i]
            )));
        }
    }
    Ok(BMatrix { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use weightlab::{block_descriptor, Algebra};

    fn data(alg: Algebra, coords: &[i64], bound: u32) -> BlockData {
        let lam = Weight::from_integers(coords);
        let desc = block_descriptor(alg, &lam).unwrap();
        block_data(&desc, bound).unwrap()
    }

    #[test]
    fn principal_labels_and_rows() {
        let d = data(Algebra::Sq, &[0, 0, 0], 4);
        assert_eq!(d.labels, vec!["C", "L1", "L2", "L3", "L4"]);
        assert_eq!(d.regular, vec![false, true, true, true, true]);
        let b = b_matrix(&d).unwrap();
        assert_eq!(b.rows[&1], vec![(1, 1)]);
        assert_eq!(b.rows[&2], vec![(2, 1), (1, 1), (0, 2)]);
        assert_eq!(b.rows[&3], vec![(3, 1), (2, 1)]);
        assert_eq!(b.entry(2, 0), 2);
        assert_eq!(b.entry(1, 0), 0);
        assert_eq!(d.projective_name(0), "P(0)");
        assert_eq!(d.euler_name(2), "E(2)");
    }

    #[test]
    fn standard_rows_differ_by_algebra() {
        let q = b_matrix(&data(Algebra::Q, &[1, 0, 0], 4)).unwrap();
        assert_eq!(q.rows[&1], vec![(1, 1), (0, 2)]);
        let sq = b_matrix(&data(Algebra::Sq, &[1, 0, 0], 4)).unwrap();
        assert_eq!(sq.rows[&1], vec![(1, 1), (0, 1)]);
        assert_eq!(sq.rows[&2], vec![(2, 1), (1, 1)]);
        let d = data(Algebra::Sq, &[1, 0, 0], 4);
        assert_eq!(d.labels, vec!["L1", "L2", "L3", "L4"]);
        assert_eq!(d.projective_name(0), "P(1)");
    }

    #[test]
    fn half_standard_rows_are_all_regular() {
        let d = data(Algebra::Q, &[0, 0, 0], 3);
        assert_eq!(d.class, weightlab::BlockClass::Principal);
        let half = {
            let lam = Weight::from_doubled(vec![3, 1, -1]).unwrap();
            let desc = block_descriptor(Algebra::Q, &lam).unwrap();
            block_data(&desc, 3).unwrap()
        };
        assert_eq!(half.regular, vec![true, true, true]);
        let b = b_matrix(&half).unwrap();
        assert_eq!(b.rows[&0], vec![(0, 1)]);
        assert_eq!(b.rows[&2], vec![(2, 1), (1, 1)]);
    }

    #[test]
    fn typical_is_a_single_row() {
        let d = data(Algebra::Q, &[3, 2, -1], 8);
        assert_eq!(d.vertices.len(), 1);
        assert_eq!(d.labels, vec!["L"]);
        let b = b_matrix(&d).unwrap();
        assert_eq!(b.rows.len(), 1);
        assert_eq!(b.rows[&0], vec![(0, 1)]);
        assert_eq!(d.projective_name(0), "P");
    }
}
