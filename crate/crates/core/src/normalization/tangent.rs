use std::collections::BTreeMap;

use serde::Serialize;

use super::{normalize, normalized_map, NormalizationVariant, NormalizedComplex};
use crate::error::{Error, Result};
use crate::simplicial::{ChainMap, FaceMaps, SimplicialMorphism, TruncatedSVS};

/// Tangent simplicial vector spaces over a finite set of base points, all
/// truncated at the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedFamily {
    points: Vec<String>,
    fibers: BTreeMap<String, TruncatedSVS>,
}

impl PointedFamily {
    pub fn new(points: Vec<String>, fibers: BTreeMap<String, TruncatedSVS>) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::Invalid("base point labels repeat".into()));
        }
        if !sorted.iter().eq(fibers.keys()) {
            return Err(Error::Invalid("every base point needs exactly one fiber".into()));
        }
        let mut levels = fibers.values().map(FaceMaps::level);
        if let Some(first) = levels.next() {
            if levels.any(|l| l != first) {
                return Err(Error::Invalid("fibers are truncated at different levels".into()));
            }
        }
        Ok(Self { points, fibers })
    }

    pub fn single(label: &str, fiber: TruncatedSVS) -> Self {
        Self::new(vec![label.to_string()], [(label.to_string(), fiber)].into()).expect("one point")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn fiber(&self, point: &str) -> Option<&TruncatedSVS> {
        self.fibers.get(point)
    }

    pub fn fibers(&self) -> impl Iterator<Item = (&String, &TruncatedSVS)> {
        self.points.iter().map(|p| (p, &self.fibers[p]))
    }

    pub fn level(&self) -> usize {
        self.fibers.values().next().map_or(0, FaceMaps::level)
    }
}

/// Ranks of one level of the tangent complex across the base points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRanks {
    pub level: usize,
    /// In base point order.
    pub dims: Vec<usize>,
    pub constant: bool,
}

/// Rank constancy of the normalized fibers, level by level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleReport {
    pub levels: Vec<LevelRanks>,
}

impl BundleReport {
    pub fn is_bundle(&self) -> bool {
        self.levels.iter().all(|l| l.constant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentComplex {
    pub variant: NormalizationVariant,
    /// In base point order.
    pub fibers: Vec<(String, NormalizedComplex)>,
    pub report: BundleReport,
}

pub fn tangent_complex(f: &PointedFamily, v: NormalizationVariant) -> Result<TangentComplex> {
    let fibers = f.fibers().map(|(p, x)| Ok((p.clone(), normalize(x, v)?))).collect::<Result<Vec<_>>>()?;
    let levels = (0..=f.level())
        .map(|level| {
            let dims: Vec<usize> = fibers.iter().map(|(_, c)| c.dims()[level]).collect();
            let constant = dims.windows(2).all(|w| w[0] == w[1]);
            LevelRanks { level, dims, constant }
        })
        .collect();
    Ok(TangentComplex { variant: v, fibers, report: BundleReport { levels } })
}

/// Normalizes a pointwise morphism between two families over the same base.
pub fn tangent_map(
    source: &PointedFamily,
    target: &PointedFamily,
    maps: &BTreeMap<String, SimplicialMorphism>,
    v: NormalizationVariant,
) -> Result<Vec<(String, ChainMap)>> {
    if source.points() != target.points() {
        return Err(Error::Invalid("families live over different base points".into()));
    }
    source
        .points()
        .iter()
        .map(|p| {
            let f = maps.get(p).ok_or_else(|| Error::Invalid(format!("no morphism given at base point {p:?}")))?;
            if f.source() != &source.fibers[p] || f.target() != &target.fibers[p] {
                return Err(Error::Invalid(format!("morphism at {p:?} does not match the fibers")));
            }
            Ok((p.clone(), normalized_map(f, v)?))
        })
        .collect()
}
