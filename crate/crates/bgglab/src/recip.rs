//! Reciprocity coefficients and projective multiplicity tables.

use crate::data::{b_matrix, block_data, BMatrix, BlockData};
use crate::Error;
use std::collections::BTreeMap;
use weightlab::{gamma, t_exponent, BlockDescriptor};

/// Rows of reciprocity coefficients: for each vertex index lambda, the pairs
/// (regular vertex index mu, a_{lambda,mu}) with nonzero coefficient. The
/// projective cover satisfies [P(lambda)] = sum_mu a_{lambda,mu} E(mu).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMatrix {
    pub rows: Vec<Vec<(usize, u64)>>,
}

/// Computes a_{lambda,mu} = 2^(t(mu) - t(lambda)) gamma(mu) b_{mu,lambda}.
pub fn a_coefficients(data: &BlockData, b: &BMatrix) -> Result<AMatrix, Error> {
    let alg = data.descriptor.algebra;
    let mut rows = Vec::with_capacity(data.vertices.len());
    for (l, lam) in data.vertices.iter().enumerate() {
        let t_l = t_exponent(alg, lam)?;
        let mut row = Vec::new();
        for &m in b.rows.keys() {
            let bml = b.entry(m, l);
            if bml == 0 {
                continue;
            }
            let mu = &data.vertices[m];
            let g = gamma(alg, mu)? as u64;
            let base = bml.checked_mul(g).ok_or(Error::BadCoefficient("overflow".into()))?;
            let a = match t_exponent(alg, mu)? - t_l {
                e if e >= 0 => base
                    .checked_shl(e as u32)
                    .ok_or(Error::BadCoefficient("overflow".into()))?,
                -1 if base % 2 == 0 => base / 2,
                _ => {
                    return Err(Error::BadCoefficient(format!(
                        "a_({lam},{mu}) = {base} / 2^{} is not an integer",
                        t_l - t_exponent(alg, mu)?
                    )))
                }
            };
            row.push((m, a));
        }
        rows.push(row);
    }
    Ok(AMatrix { rows })
}

/// The block's multiplicity tables: each regular Euler character and each
/// projective cover decomposed into simples (total multiplicities, by label).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveTable {
    /// Vertex data extended one step past the display bound, so boundary
    /// rows are complete.
    pub data: BlockData,
    /// Number of displayed vertices (the first `display` of `data`).
    pub display: usize,
    pub b: BMatrix,
    pub a: AMatrix,
    /// (vertex index, label -> multiplicity) for each displayed regular
    /// vertex.
    pub e_rows: Vec<(usize, BTreeMap<String, u64>)>,
    /// (vertex index, label -> multiplicity) for each displayed vertex.
    pub p_rows: Vec<(usize, BTreeMap<String, u64>)>,
}

/// Builds the multiplicity tables of the block of `desc` for vertices up to
/// `bound`. Internally the chain is extended one vertex further so that the
/// row of the last displayed projective is still complete.
pub fn projective_table(desc: &BlockDescriptor, bound: u32) -> Result<ProjectiveTable, Error> {
    let display = block_data(desc, bound)?.vertices.len();
    let data = block_data(desc, bound + 1)?;
    let b = b_matrix(&data)?;
    let a = a_coefficients(&data, &b)?;

    let mut e_rows = Vec::new();
    for (&m, row) in &b.rows {
        if m >= display {
            continue;
        }
        let mut labels: BTreeMap<String, u64> = BTreeMap::new();
        for &(j, mult) in row {
            *labels.entry(data.labels[j].clone()).or_insert(0) += mult;
        }
        e_rows.push((m, labels));
    }

    let mut p_rows = Vec::new();
    for l in 0..display {
        let mut labels: BTreeMap<String, u64> = BTreeMap::new();
        for &(m, av) in &a.rows[l] {
            for &(j, mult) in &b.rows[&m] {
                let add = av
                    .checked_mul(mult)
                    .ok_or(Error::BadCoefficient("overflow".into()))?;
                let entry = labels.entry(data.labels[j].clone()).or_insert(0);
                *entry = entry
                    .checked_add(add)
                    .ok_or(Error::BadCoefficient("overflow".into()))?;
            }
        }
        p_rows.push((l, labels));
    }

    Ok(ProjectiveTable { data, display, b, a, e_rows, p_rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use weightlab::{block_descriptor, Algebra, Weight};

    fn table(alg: Algebra, doubled: &[i64], bound: u32) -> ProjectiveTable {
        let lam = Weight::from_doubled(doubled.to_vec()).unwrap();
        let desc = block_descriptor(alg, &lam).unwrap();
        projective_table(&desc, bound).unwrap()
    }

    fn row(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn principal_sq_table() {
        let t = table(Algebra::Sq, &[0, 0, 0], 3);
        assert_eq!(t.p_rows[0].1, row(&[("C", 4), ("L1", 2), ("L2", 2)]));
        assert_eq!(t.p_rows[1].1, row(&[("C", 2), ("L1", 2), ("L2", 1)]));
        assert_eq!(t.p_rows[2].1, row(&[("C", 2), ("L1", 1), ("L2", 2), ("L3", 1)]));
        assert_eq!(t.p_rows[3].1, row(&[("L2", 1), ("L3", 2), ("L4", 1)]));
        assert_eq!(t.e_rows[0].1, row(&[("L1", 1)]));
        assert_eq!(t.e_rows[1].1, row(&[("C", 2), ("L1", 1), ("L2", 1)]));
        assert_eq!(t.e_rows[2].1, row(&[("L2", 1), ("L3", 1)]));
    }

    #[test]
    fn principal_q_doubles_sq() {
        let q = table(Algebra::Q, &[0, 0, 0], 3);
        let sq = table(Algebra::Sq, &[0, 0, 0], 3);
        for (qr, sr) in q.p_rows.iter().zip(&sq.p_rows) {
            assert_eq!(qr.0, sr.0);
            let doubled: BTreeMap<String, u64> =
                sr.1.iter().map(|(k, v)| (k.clone(), 2 * v)).collect();
            assert_eq!(qr.1, doubled);
        }
        assert_eq!(q.p_rows[0].1, row(&[("C", 8), ("L1", 4), ("L2", 4)]));
    }

    #[test]
    fn standard_tables() {
        let q = table(Algebra::Q, &[2, 0, 0], 3);
        assert_eq!(q.p_rows[0].1, row(&[("L1", 4), ("L2", 2)]));
        assert_eq!(q.p_rows[1].1, row(&[("L1", 2), ("L2", 2), ("L3", 1)]));
        assert_eq!(q.p_rows[2].1, row(&[("L2", 1), ("L3", 2), ("L4", 1)]));
        let sq = table(Algebra::Sq, &[2, 0, 0], 3);
        assert_eq!(sq.p_rows[0].1, row(&[("L1", 2), ("L2", 2)]));
        assert_eq!(sq.p_rows[1].1, row(&[("L1", 1), ("L2", 2), ("L3", 1)]));
        assert_eq!(sq.p_rows[2].1, row(&[("L2", 1), ("L3", 2), ("L4", 1)]));
    }

    #[test]
    fn half_standard_tables_match_for_both_algebras() {
        for alg in [Algebra::Q, Algebra::Sq] {
            let t = table(alg, &[3, 1, -1], 3);
            assert_eq!(t.p_rows[0].1, row(&[("L1", 2), ("L2", 1)]));
            assert_eq!(t.p_rows[1].1, row(&[("L1", 1), ("L2", 2), ("L3", 1)]));
            assert_eq!(t.p_rows[2].1, row(&[("L2", 1), ("L3", 2), ("L4", 1)]));
        }
    }

    #[test]
    fn typical_tables_follow_gamma() {
        // One vanishing coordinate: q has a two-step projective, sq is
        // semisimple.
        assert_eq!(table(Algebra::Q, &[4, 2, 0], 8).p_rows[0].1, row(&[("L", 2)]));
        assert_eq!(table(Algebra::Sq, &[4, 2, 0], 8).p_rows[0].1, row(&[("L", 1)]));
        // Strongly typical: semisimple for both.
        assert_eq!(table(Algebra::Q, &[6, 4, -2], 8).p_rows[0].1, row(&[("L", 1)]));
        assert_eq!(table(Algebra::Sq, &[6, 4, -2], 8).p_rows[0].1, row(&[("L", 1)]));
        // The sq loop block: a self-extension.
        assert_eq!(table(Algebra::Sq, &[12, 6, -4], 8).p_rows[0].1, row(&[("L", 2)]));
        assert_eq!(table(Algebra::Q, &[12, 6, -4], 8).p_rows[0].1, row(&[("L", 1)]));
    }

    #[test]
    fn reciprocity_coefficients() {
        let t = table(Algebra::Sq, &[0, 0, 0], 3);
        // [P(0)] = 2 E(2).
        assert_eq!(t.a.rows[0], vec![(2, 2)]);
        // [P(1)] = E(1) + E(2).
        assert_eq!(t.a.rows[1], vec![(1, 1), (2, 1)]);
        let tq = table(Algebra::Q, &[0, 0, 0], 3);
        assert_eq!(tq.a.rows[0], vec![(2, 4)]);
        assert_eq!(tq.a.rows[1], vec![(1, 2), (2, 2)]);
        // Standard blocks: [P(1,0,0)] = 2 E(2,1,-2) for both algebras.
        for alg in [Algebra::Q, Algebra::Sq] {
            let ts = table(alg, &[2, 0, 0], 3);
            assert_eq!(ts.a.rows[0], vec![(1, 2)]);
        }
    }
}
