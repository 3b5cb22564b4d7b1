//! Nilpotent orbits of sl_n from partitions: the dominant sl2-triplet,
//! characteristic, height, graded centralizer and classification flags.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{full_basis, weight_decompose, LieElement};
use crate::linalg;
use crate::rational::{q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts are sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition { parts };
        if p.n() < 2 {
            return Err(Error::InvalidPartition(format!("{p} has size < 2")));
        }
        Ok(p)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `Σ (2i - 1) p_i - 1`.
    pub fn centralizer_dimension(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, p)| (2 * i + 1) * p)
            .sum::<usize>()
            - 1
    }

    pub fn height(&self) -> usize {
        2 * (self.parts[0] - 1)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.into_iter().map(|parts| Partition { parts }).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triplet {
    pub partition: Partition,
    pub h: LieElement,
    pub e: LieElement,
    pub f: LieElement,
}

impl Sl2Triplet {
    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn h_diagonal(&self) -> Vec<Q> {
        self.h
            .diagonal_entries()
            .expect("h is diagonal by construction")
    }

    /// Checks `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn relations_hold(&self) -> bool {
        let he = self.h.bracket(&self.e).expect("same n");
        let hf = self.h.bracket(&self.f).expect("same n");
        let ef = self.e.bracket(&self.f).expect("same n");
        he == self.e.scale(&q(2)) && hf == self.f.scale(&q(-2)) && ef == self.h
    }
}

/// Jordan-form triplet conjugated so that h is dominant.
///
/// Each part `p` contributes a block with weights `p-1, p-3, …, 1-p`; the
/// diagonal of h is then stably sorted into decreasing order, earlier blocks
/// first on ties. Inside a block, e raises the weight by 2 with coefficient 1
/// and f lowers it with coefficient `(k+1)(p-1-k)`.
pub fn triplet_from_partition(p: &Partition) -> Result<Sl2Triplet> {
    if p.is_zero_orbit() {
        return Err(Error::ZeroOrbit(p.to_string()));
    }
    let n = p.n();
    // (weight, block, step)
    let mut slots: Vec<(i64, usize, usize)> = Vec::with_capacity(n);
    for (b, &len) in p.parts.iter().enumerate() {
        for k in 0..len {
            slots.push((len as i64 - 1 - 2 * k as i64, b, k));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| slots[b].0.cmp(&slots[a].0));
    let mut position = BTreeMap::new();
    for (pos, &idx) in order.iter().enumerate() {
        position.insert((slots[idx].1, slots[idx].2), pos);
    }

    let mut hm = vec![vec![Q::zero(); n]; n];
    let mut em = hm.clone();
    let mut fm = hm.clone();
    for (pos, &idx) in order.iter().enumerate() {
        hm[pos][pos] = q(slots[idx].0);
    }
    for (b, &len) in p.parts.iter().enumerate() {
        for k in 0..len.saturating_sub(1) {
            let hi = position[&(b, k)];
            let lo = position[&(b, k + 1)];
            em[hi][lo] = q(1);
            fm[lo][hi] = q(((k + 1) * (len - 1 - k)) as i64);
        }
    }
    Ok(Sl2Triplet {
        partition: p.clone(),
        h: LieElement::from_matrix(&hm)?,
        e: LieElement::from_matrix(&em)?,
        f: LieElement::from_matrix(&fm)?,
    })
}

/// `α_i(h)` for the simple roots, and the height computed from the grading.
pub fn characteristic_and_height(t: &Sl2Triplet) -> (Vec<i64>, i64) {
    let d = t.h_diagonal();
    let ch = d.windows(2).map(|w| to_i64(&(&w[0] - &w[1]))).collect();
    let grading = weight_decompose(&t.h, &full_basis(t.n())).expect("h is integral");
    let height = grading.keys().copied().max().unwrap_or(0);
    (ch, height)
}

fn to_i64(x: &Q) -> i64 {
    assert!(x.is_integer());
    i64::try_from(x.to_integer()).expect("small weight")
}

/// Graded basis of 𝔤^e: each vector is an ad h weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCentralizer {
    pub basis: Vec<LieElement>,
    pub weights: Vec<i64>,
}

impl GradedCentralizer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of each weight block.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &w in &self.weights {
            *out.entry(w).or_insert(0) += 1;
        }
        out
    }

    /// Takes a user-chosen basis (for instance one copied from a worked
    /// example), checks that it is a basis of 𝔤^e made of weight vectors.
    pub fn from_basis(t: &Sl2Triplet, basis: Vec<LieElement>) -> Result<Self> {
        let expected = t.partition.centralizer_dimension();
        if basis.len() != expected {
            return Err(Error::Inconsistent(format!(
                "centralizer basis has {} vectors, expected {expected}",
                basis.len()
            )));
        }
        let diag = t.h_diagonal();
        let mut weights = Vec::with_capacity(basis.len());
        for z in &basis {
            if z.n() != t.n() {
                return Err(Error::DimensionMismatch {
                    left: z.n(),
                    right: t.n(),
                });
            }
            if !t.e.bracket(z)?.is_zero() {
                return Err(Error::Inconsistent(format!("{z} does not commute with e")));
            }
            let w = z.weight(&diag).ok_or_else(|| Error::NotGraded {
                vector: z.to_string(),
            })?;
            weights.push(to_i64(&w));
        }
        let coords: Vec<Vec<Q>> = basis.iter().map(LieElement::coords).collect();
        if let Some(i) = linalg::first_dependent(&coords) {
            return Err(Error::RankDefect(format!(
                "centralizer vector {} is dependent",
                i + 1
            )));
        }
        Ok(GradedCentralizer { basis, weights })
    }
}

fn ad_matrix(x: &LieElement) -> linalg::DenseMatrix {
    // Column c is the image of the c-th basis vector.
    let images: Vec<Vec<Q>> = full_basis(x.n())
        .iter()
        .map(|b| x.bracket(b).expect("same n").coords())
        .collect();
    linalg::transpose(&images)
}

/// Kernel of ad e by exact elimination, regraded by ad h and ordered by
/// increasing weight.
pub fn centralizer(t: &Sl2Triplet) -> GradedCentralizer {
    let n = t.n();
    let kernel = linalg::kernel(&ad_matrix(&t.e), n * n - 1);
    let vectors: Vec<LieElement> = kernel
        .iter()
        .map(|c| LieElement::from_coords(n, c))
        .collect();
    let graded = weight_decompose(&t.h, &vectors).expect("𝔤^e is ad h-stable");
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    for (w, block) in graded {
        for z in block {
            basis.push(z);
            weights.push(w);
        }
    }
    GradedCentralizer { basis, weights }
}

/// Image of ad f, which is ad h-stable; used for rank-nullity checks.
pub fn image_ad(x: &LieElement) -> Vec<LieElement> {
    let n = x.n();
    let images: Vec<Vec<Q>> = full_basis(n)
        .iter()
        .map(|b| x.bracket(b).expect("same n").coords())
        .collect();
    linalg::span_basis(&images)
        .iter()
        .map(|c| LieElement::from_coords(n, c))
        .collect()
}

/// Dimensions of the ad h weight spaces of 𝔤.
pub fn grading_dims(t: &Sl2Triplet) -> BTreeMap<i64, usize> {
    weight_decompose(&t.h, &full_basis(t.n()))
        .expect("h is integral")
        .into_iter()
        .map(|(m, b)| (m, b.len()))
        .collect()
}

/// `2 Σ_{i=0}^{h(e)} dim 𝔤^e(i) (dim 𝔤(i) - dim 𝔤^e(i))`, evaluated from the
/// computed gradings.
pub fn moduli_dimension(t: &Sl2Triplet) -> usize {
    2 * graded_complement_chart_dimension(t)
}

/// `Σ_i dim 𝔤^e(i) (dim 𝔤(i) - dim 𝔤^e(i))`: the dimension of the product of
/// the per-weight spaces of complements of 𝔤^e(i) in 𝔤(i).
pub fn graded_complement_chart_dimension(t: &Sl2Triplet) -> usize {
    let g = grading_dims(t);
    let ge = centralizer(t).graded_dims();
    ge.iter()
        .map(|(m, &d)| d * (g.get(m).copied().unwrap_or(0) - d))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConormalType {
    /// All parts equal: `(p^r)`.
    I,
    /// Two consecutive part sizes: `(p^r, (p-1)^s)`.
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub spherical: bool,
    pub conormal_family: bool,
    pub family_type: Option<ConormalType>,
}

pub fn classify(p: &Partition) -> Classification {
    let max = p.parts[0];
    let min = *p.parts.last().expect("nonempty");
    let conormal_family = max - min <= 1;
    Classification {
        spherical: max <= 2,
        conormal_family,
        family_type: conormal_family.then_some(if max == min {
            ConormalType::I
        } else {
            ConormalType::II
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(part("1,3").parts(), &[3, 1]);
        assert!("3,0".parse::<Partition>().is_err());
        assert!("1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(part("2,2").centralizer_dimension(), 7);
    }

    #[test]
    fn subregular_sl4() {
        let t = triplet_from_partition(&part("3,1")).unwrap();
        assert!(t.relations_hold());
        let e = &LieElement::elementary(4, 1, 2) + &LieElement::elementary(4, 2, 4);
        assert_eq!(t.e, e);
        let (ch, height) = characteristic_and_height(&t);
        assert_eq!(ch, vec![2, 0, 2]);
        assert_eq!(height, 4);
        let z = centralizer(&t);
        assert_eq!(z.weights, vec![0, 2, 2, 2, 4]);
        let z1 = &(&LieElement::cartan(4, 1) + &LieElement::cartan(4, 2).scale(&q(2)))
            - &LieElement::cartan(4, 3);
        assert_eq!(z.basis[0], z1);
        assert_eq!(moduli_dimension(&t), 14);
    }

    #[test]
    fn sl5_32() {
        let t = triplet_from_partition(&part("3,2")).unwrap();
        let e: LieElement = [(1, 3), (2, 4), (3, 5)]
            .iter()
            .map(|&(i, j)| LieElement::elementary(5, i, j))
            .fold(LieElement::zero(5), |a, b| &a + &b);
        assert_eq!(t.e, e);
        assert_eq!(characteristic_and_height(&t).0, vec![1, 1, 1, 1]);
        assert_eq!(centralizer(&t).dim(), 8);
        let dims = grading_dims(&t);
        assert!(dims.contains_key(&1) && dims.contains_key(&3) && dims.contains_key(&-3));
    }

    #[test]
    fn regular_orbit() {
        for n in 2..=6 {
            let t = triplet_from_partition(&Partition::new(vec![n]).unwrap()).unwrap();
            assert!(t.relations_hold());
            let expected: Vec<Q> = (0..n).map(|k| q(n as i64 - 1 - 2 * k as i64)).collect();
            assert_eq!(t.h_diagonal(), expected);
            assert_eq!(characteristic_and_height(&t).0, vec![2; n - 1]);
            // e^(n-1) != 0 and e^n = 0: a single Jordan block.
            let em = t.e.to_matrix();
            let mut pow = em.clone();
            for _ in 1..n - 1 {
                pow = linalg::mat_mul(&pow, &em);
            }
            assert_eq!(linalg::rank(&pow), 1);
        }
    }

    #[test]
    fn minimal_orbit_height() {
        for n in 2..=6 {
            let mut parts = vec![1; n - 1];
            parts[0] = 2;
            let t = triplet_from_partition(&Partition::new(parts).unwrap()).unwrap();
            assert_eq!(characteristic_and_height(&t).1, 2);
        }
    }

    #[test]
    fn zero_orbit_rejected() {
        assert_eq!(
            triplet_from_partition(&part("1,1,1,1")),
            Err(Error::ZeroOrbit("(1,1,1,1)".into()))
        );
    }

    #[test]
    fn regular_sl2_moduli() {
        let t = triplet_from_partition(&part("2")).unwrap();
        assert_eq!(moduli_dimension(&t), 0);
    }

    #[test]
    fn sl3_minimal_moduli() {
        // 𝔤(0) = 2, 𝔤^e(0) = 1; 𝔤(1) = 𝔤^e(1) = 2; 𝔤(2) = 𝔤^e(2) = 1.
        let t = triplet_from_partition(&part("2,1")).unwrap();
        assert_eq!(
            centralizer(&t).graded_dims(),
            BTreeMap::from([(0, 1), (1, 2), (2, 1)])
        );
        assert_eq!(graded_complement_chart_dimension(&t), 1);
        assert_eq!(moduli_dimension(&t), 2);
    }

    #[test]
    fn classification() {
        let c = classify(&part("2,2,1"));
        assert!(c.spherical && c.conormal_family);
        assert_eq!(c.family_type, Some(ConormalType::II));
        let c = classify(&part("3,1"));
        assert!(!c.spherical && !c.conormal_family);
        assert_eq!(c.family_type, None);
        let c = classify(&part("3,2"));
        assert!(!c.spherical && c.conormal_family);
        assert_eq!(c.family_type, Some(ConormalType::II));
        assert_eq!(classify(&part("2,2")).family_type, Some(ConormalType::I));
    }

    #[test]
    fn custom_centralizer_basis() {
        let t = triplet_from_partition(&part("3,1")).unwrap();
        let mut basis = centralizer(&t).basis;
        assert!(GradedCentralizer::from_basis(&t, basis.clone()).is_ok());
        basis[1] = LieElement::elementary(4, 2, 1);
        assert!(GradedCentralizer::from_basis(&t, basis).is_err());
    }
}
