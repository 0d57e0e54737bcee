//! Eigenvalue classes built from the `l ↔ n - l` pairing.
//!
//! Classes start from the structural orbits `{0}`, `{l, n-l}` and (for even
//! `n`) `{n/2}`. Orbits whose values numerically coincide are merged
//! afterwards, and every such merge is flagged instead of silently applied.

use serde::Serialize;

use crate::closed_form::Spectrum;
use crate::TOL_CLUSTER;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityClass {
    pub value: f64,
    /// Sorted residues `l` with `x_l` in this class.
    pub members: Vec<usize>,
    pub multiplicity: usize,
    /// Set when this class was formed by merging distinct structural orbits.
    pub accidental_coincidence: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityTable {
    /// Ordered by smallest member index, so index 0 is always in class 0.
    pub classes: Vec<MultiplicityClass>,
}

impl MultiplicityTable {
    pub fn distinct_count(&self) -> usize {
        self.classes.len()
    }

    pub fn accidental_coincidences(&self) -> usize {
        self.classes.iter().filter(|c| c.accidental_coincidence).count()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    /// Class id of each index `l`.
    pub fn class_ids(&self) -> Vec<usize> {
        let n = self.total_multiplicity();
        let mut ids = vec![0; n];
        for (id, class) in self.classes.iter().enumerate() {
            for &l in &class.members {
                ids[l] = id;
            }
        }
        ids
    }

    pub fn class_containing(&self, index: usize) -> Option<&MultiplicityClass> {
        self.classes.iter().find(|c| c.members.binary_search(&index).is_ok())
    }
}

/// Groups with the default `TOL_CLUSTER`.
pub fn pair_multiplicities(spectrum: &Spectrum) -> MultiplicityTable {
    pair_multiplicities_with(spectrum, TOL_CLUSTER)
}

pub fn pair_multiplicities_with(spectrum: &Spectrum, tol_cluster: f64) -> MultiplicityTable {
    let n = spectrum.values.len();
    let x = &spectrum.values;

    // Structural orbits of l ↦ -l. A pair whose two values disagree is not a
    // real orbit of the spectrum and is split.
    let mut orbits: Vec<Vec<usize>> = Vec::with_capacity(n / 2 + 2);
    for l in 0..n {
        let partner = (n - l) % n;
        if partner < l {
            continue;
        }
        if partner == l || (x[l] - x[partner]).abs() > tol_cluster {
            orbits.push(vec![l]);
            if partner != l {
                orbits.push(vec![partner]);
            }
        } else {
            orbits.push(vec![l, partner]);
        }
    }

    let mean = |members: &[usize]| members.iter().map(|&l| x[l]).sum::<f64>() / members.len() as f64;
    let mut by_value: Vec<(f64, Vec<usize>)> = orbits.into_iter().map(|m| (mean(&m), m)).collect();
    by_value.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1[0].cmp(&b.1[0])));

    let mut classes: Vec<MultiplicityClass> = Vec::new();
    let mut anchor = f64::NAN;
    for (value, members) in by_value {
        match classes.last_mut() {
            Some(last) if (value - anchor).abs() <= tol_cluster => {
                last.members.extend(members);
                last.accidental_coincidence = true;
            }
            _ => {
                anchor = value;
                classes.push(MultiplicityClass { value, members, multiplicity: 0, accidental_coincidence: false });
            }
        }
    }
    for class in &mut classes {
        class.members.sort_unstable();
        class.multiplicity = class.members.len();
        class.value = mean(&class.members);
    }
    classes.sort_by_key(|c| c.members[0]);
    MultiplicityTable { classes }
}
