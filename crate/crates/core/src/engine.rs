//! End-to-end pipeline: partition → triplet → centralizer → complement →
//! dual basis → transverse structure.

use crate::complement::{
    conormal_complement, custom_complement, dual_basis, im_ad_f, Complement, DualData,
};
use crate::dirac::{assemble, transverse_tensor, TransverseStructure};
use crate::error::Result;
use crate::fixtures::ComplementSpec;
use crate::lie::{Form, LieElement};
use crate::orbit::{centralizer, triplet_from_partition, GradedCentralizer, Partition, Sl2Triplet};

#[derive(Clone, Debug)]
pub struct Run {
    pub triplet: Sl2Triplet,
    pub centralizer: GradedCentralizer,
    pub complement: Complement,
    pub dual: DualData,
    pub structure: TransverseStructure,
}

pub fn build_complement(
    t: &Sl2Triplet,
    z: &GradedCentralizer,
    spec: &ComplementSpec,
) -> Result<Complement> {
    match spec {
        ComplementSpec::ImAdF => im_ad_f(t, z),
        ComplementSpec::Conormal => conormal_complement(t, z),
        ComplementSpec::Vectors(v) => custom_complement(t, z, v.clone()),
    }
}

pub fn run(
    partition: &Partition,
    spec: &ComplementSpec,
    z_basis: Option<Vec<LieElement>>,
    form: Form,
) -> Result<Run> {
    let triplet = triplet_from_partition(partition)?;
    let centralizer = match z_basis {
        Some(b) => GradedCentralizer::from_basis(&triplet, b)?,
        None => centralizer(&triplet),
    };
    let complement = build_complement(&triplet, &centralizer, spec)?;
    let dual = dual_basis(&centralizer, &complement, form)?;
    let structure = transverse_tensor(assemble(&triplet.e, &centralizer, &complement, &dual)?)?;
    Ok(Run {
        triplet,
        centralizer,
        complement,
        dual,
        structure,
    })
}
