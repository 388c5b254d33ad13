//! The doubling construction `NC(n) → NCP(2n)` and meandric systems.
//!
//! A pair `(π, ρ)` of non-crossing partitions of `{1..n}` gives two arch
//! diagrams on `2n` points: `A(π)` above the line and `A(ρ)` below it. The
//! meandric permutation `M` follows `A(π)` from odd points and `A(ρ)` from
//! even points, so its cycles are the closed curves of the picture.

use std::fmt;

use thiserror::Error;

use crate::nc_lattice::{orbits, trace_permutation, PartitionError, Permutation, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeanderError {
    #[error("{0} is not a non-crossing partition")]
    NotNoncrossing(String),
    #[error("{0} is not a non-crossing pairing")]
    NotNoncrossingPairing(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// `A(π)`: each point `i` becomes the interval `[2i-1, 2i]`.
///
/// The pairing's trace permutation sends `2i ↦ 2P_π(i) - 1` and
/// `2i-1 ↦ 2P_π⁻¹(i)`.
pub fn doubling(p: &SetPartition) -> Result<SetPartition, MeanderError> {
    if !p.is_noncrossing() {
        return Err(MeanderError::NotNoncrossing(p.to_string()));
    }
    let succ = trace_permutation(p);
    let pred = succ.inverse();
    let n = p.n();
    let mut images = vec![0; 2 * n];
    for i in 1..=n {
        images[2 * i - 1] = 2 * succ.apply(i) - 1;
        images[2 * i - 2] = 2 * pred.apply(i);
    }
    Ok(orbits(&Permutation::new(images)?))
}

/// Inverse of [`doubling`]: recovers `π` from `P_π(i) = (P_A(2i) + 1) / 2`.
pub fn doubling_inverse(a: &SetPartition) -> Result<SetPartition, MeanderError> {
    if a.n() % 2 == 1 || !a.is_pairing() || !a.is_noncrossing() {
        return Err(MeanderError::NotNoncrossingPairing(a.to_string()));
    }
    let pairing = trace_permutation(a);
    let n = a.n() / 2;
    let images: Vec<usize> = (1..=n).map(|i| pairing.apply(2 * i).div_ceil(2)).collect();
    Ok(orbits(&Permutation::new(images)?))
}

/// The meandric system `M_{π,ρ}` with its cycle partition cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeandricSystem {
    top: SetPartition,
    bottom: SetPartition,
    perm: Permutation,
    orbit_partition: SetPartition,
}

impl MeandricSystem {
    /// `M(2i-1) = 2P_π⁻¹(i)`, `M(2i) = 2P_ρ(i) - 1`.
    pub fn new(top: &SetPartition, bottom: &SetPartition) -> Result<Self, MeanderError> {
        if top.n() != bottom.n() {
            return Err(PartitionError::SizeMismatch(top.n(), bottom.n()).into());
        }
        for p in [top, bottom] {
            if !p.is_noncrossing() {
                return Err(MeanderError::NotNoncrossing(p.to_string()));
            }
        }
        let n = top.n();
        if 2 * n > crate::nc_lattice::MAX_GROUND_SET {
            return Err(PartitionError::GroundSetSize(2 * n).into());
        }
        let top_pred = trace_permutation(top).inverse();
        let bottom_succ = trace_permutation(bottom);
        let mut images = vec![0; 2 * n];
        for i in 1..=n {
            images[2 * i - 2] = 2 * top_pred.apply(i);
            images[2 * i - 1] = 2 * bottom_succ.apply(i) - 1;
        }
        let perm = Permutation::new(images)?;
        let orbit_partition = orbits(&perm);
        Ok(MeandricSystem {
            top: top.clone(),
            bottom: bottom.clone(),
            perm,
            orbit_partition,
        })
    }

    /// Number of bridge pairs; the system lives on `2n` points.
    pub fn n(&self) -> usize {
        self.top.n()
    }

    pub fn top(&self) -> &SetPartition {
        &self.top
    }

    pub fn bottom(&self) -> &SetPartition {
        &self.bottom
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn orbit_partition(&self) -> &SetPartition {
        &self.orbit_partition
    }

    pub fn component_count(&self) -> usize {
        self.orbit_partition.block_count()
    }

    pub fn is_meander(&self) -> bool {
        self.component_count() == 1
    }

    /// No proper subinterval of `{1..2n}` is invariant under `M`.
    ///
    /// Invariant sets are unions of arches, hence of even size, so only
    /// intervals `[a, b]` with `b - a` odd are scanned.
    pub fn is_irreducible_direct(&self) -> bool {
        let len = 2 * self.n();
        for a in 1..=len {
            for b in (a + 1..=len).step_by(2) {
                if b - a >= len - 1 {
                    continue;
                }
                if (a..=b).all(|x| (a..=b).contains(&self.perm.apply(x))) {
                    return false;
                }
            }
        }
        true
    }

    /// The cycle partition is itself non-crossing.
    pub fn is_strictly_noncrossing(&self) -> bool {
        self.orbit_partition.is_noncrossing()
    }

    /// Two pairing lines plus a cycle summary.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MeandricSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upper = doubling(&self.top).map_err(|_| fmt::Error)?;
        let lower = doubling(&self.bottom).map_err(|_| fmt::Error)?;
        writeln!(f, "top:        {}  <- {}", upper, self.top)?;
        writeln!(f, "bottom:     {}  <- {}", lower, self.bottom)?;
        writeln!(f, "orbits:     {}", self.orbit_partition)?;
        writeln!(f, "components: {}", self.component_count())?;
        writeln!(f, "meander:    {}", yes_no(self.is_meander()))?;
        writeln!(f, "irreducible: {}", yes_no(self.is_irreducible_direct()))?;
        write!(
            f,
            "strictly non-crossing: {}",
            yes_no(self.is_strictly_noncrossing())
        )
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn build_meandric(
    top: &SetPartition,
    bottom: &SetPartition,
) -> Result<MeandricSystem, MeanderError> {
    MeandricSystem::new(top, bottom)
}

/// Irreducibility through the lattice: `π ∨ ρ = 1_n` and `π ∧ ρ = 0_n`.
pub fn is_irreducible_lattice(
    top: &SetPartition,
    bottom: &SetPartition,
) -> Result<bool, MeanderError> {
    let meet = top.meet(bottom)?;
    if !meet.is_singletons() {
        return Ok(false);
    }
    Ok(top.join_nc(bottom)?.is_full())
}

/// Irreducibility through the doubled pairings: `A(π) ∨ A(ρ) = 1_{2n}` in `NC(2n)`.
pub fn is_irreducible_doubled(
    top: &SetPartition,
    bottom: &SetPartition,
) -> Result<bool, MeanderError> {
    Ok(doubling(top)?.join_nc(&doubling(bottom)?)?.is_full())
}

/// Meander test through the full partition lattice: `A(π) ∨̃ A(ρ) = 1_{2n}`.
pub fn meander_criterion_fulljoin(
    top: &SetPartition,
    bottom: &SetPartition,
) -> Result<bool, MeanderError> {
    Ok(doubling(top)?.join_full(&doubling(bottom)?)?.is_full())
}
