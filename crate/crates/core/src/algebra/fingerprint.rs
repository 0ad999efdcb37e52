use std::fmt;

use serde::Serialize;

use super::{annihilator, power_filtration, Algebra};
use crate::cohomology::cohomology_basis;
use crate::exact::{Subspace, Vector};

/// Basis-independent invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub power_dims: Vec<usize>,
    pub ann_dim: usize,
    pub left_ann_dim: usize,
    pub right_ann_dim: usize,
    pub square_dim: usize,
    pub comm_rank: usize,
    pub cohom_dims: (usize, usize, usize),
}

pub fn fingerprint(a: &Algebra) -> Fingerprint {
    let n = a.dim();
    let ann = annihilator(a);
    let mut comm: Vec<Vector> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            comm.push(crate::exact::vec_sub(a.basis_product(i, j), a.basis_product(j, i)));
        }
    }
    Fingerprint {
        power_dims: power_filtration(a).iter().map(Subspace::dim).collect(),
        ann_dim: ann.two_sided.dim(),
        left_ann_dim: ann.left.dim(),
        right_ann_dim: ann.right.dim(),
        square_dim: a.square().dim(),
        comm_rank: Subspace::span(n, &comm).dim(),
        cohom_dims: cohomology_basis(a).dims(),
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd: Vec<String> = self.power_dims.iter().map(usize::to_string).collect();
        writeln!(f, "power_dims: {}", pd.join(" "))?;
        writeln!(f, "ann_dim: {}", self.ann_dim)?;
        writeln!(f, "left_ann_dim: {}", self.left_ann_dim)?;
        writeln!(f, "right_ann_dim: {}", self.right_ann_dim)?;
        writeln!(f, "square_dim: {}", self.square_dim)?;
        writeln!(f, "comm_rank: {}", self.comm_rank)?;
        write!(
            f,
            "cohom_dims: {} {} {}",
            self.cohom_dims.0, self.cohom_dims.1, self.cohom_dims.2
        )
    }
}
