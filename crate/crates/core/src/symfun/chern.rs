use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{partitions_of, Partition, Rat};

use super::{tables, Basis};

/// Whether numbers are taken on the tangent or the stable normal bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frame {
    Tangent,
    Normal,
}

/// Which classes the numbers evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChernBasis {
    /// `c_lambda`: the monomial symmetric function `m_lambda` in the roots.
    Monomial,
    /// `c_{i1} ... c_{ik}`: products of Chern classes.
    ChernProduct,
}

impl ChernBasis {
    fn symfun(self) -> Basis {
        match self {
            ChernBasis::Monomial => Basis::Monomial,
            ChernBasis::ChernProduct => Basis::Elementary,
        }
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Frame::Tangent => "tangent",
            Frame::Normal => "normal",
        })
    }
}

impl fmt::Display for ChernBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChernBasis::Monomial => "monomial",
            ChernBasis::ChernProduct => "chern-product",
        })
    }
}

/// Chern numbers of weight `n`, one value per partition of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    weight: u32,
    frame: Frame,
    basis: ChernBasis,
    values: BTreeMap<Partition, Rat>,
}

impl ChernVector {
    /// Fails unless the keys are exactly the partitions of `weight`.
    pub fn new(weight: u32, frame: Frame, basis: ChernBasis, values: BTreeMap<Partition, Rat>) -> Result<Self> {
        if let Some(bad) = values.keys().find(|k| k.weight() != weight) {
            return Err(Error::WeightMismatch { expected: weight, found: bad.weight() });
        }
        if let Some(missing) = partitions_of(weight).into_iter().find(|p| !values.contains_key(p)) {
            return Err(Error::IncompleteVector { weight, missing: missing.to_string() });
        }
        Ok(ChernVector { weight, frame, basis, values })
    }

    /// Every number equal to `value`.
    pub fn constant(weight: u32, frame: Frame, basis: ChernBasis, value: Rat) -> Self {
        let values = partitions_of(weight).into_iter().map(|p| (p, value.clone())).collect();
        ChernVector { weight, frame, basis, values }
    }

    /// Values listed in the order of [`partitions_of`].
    pub fn from_list(weight: u32, frame: Frame, basis: ChernBasis, list: Vec<Rat>) -> Result<Self> {
        let parts = partitions_of(weight);
        if list.len() != parts.len() {
            return Err(Error::InvalidParameter(format!(
                "weight {weight} needs {} values, got {}",
                parts.len(),
                list.len()
            )));
        }
        Ok(ChernVector { weight, frame, basis, values: parts.into_iter().zip(list).collect() })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn basis(&self) -> ChernBasis {
        self.basis
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rat> {
        &self.values
    }

    pub fn get(&self, lam: &Partition) -> Rat {
        self.values.get(lam).cloned().unwrap_or_else(Rat::zero)
    }

    /// Values in the order of [`partitions_of`].
    pub fn to_list(&self) -> Vec<Rat> {
        partitions_of(self.weight).iter().map(|p| self.get(p)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }

    fn power_sum_values(&self) -> Vec<Rat> {
        let t = tables::table(self.weight);
        tables::mat_mul_vec(t.from_p(self.basis.symfun()), &self.to_list())
    }

    fn from_power_sum_values(weight: u32, frame: Frame, basis: ChernBasis, vp: &[Rat]) -> Self {
        let t = tables::table(weight);
        let v = tables::mat_mul_vec(t.to_p(basis.symfun()), vp);
        ChernVector { weight, frame, basis, values: t.parts.iter().cloned().zip(v).collect() }
    }

    /// The same numbers evaluated on another family of classes.
    pub fn to_basis(&self, basis: ChernBasis) -> ChernVector {
        if basis == self.basis {
            return self.clone();
        }
        Self::from_power_sum_values(self.weight, self.frame, basis, &self.power_sum_values())
    }

    pub fn chern_product_to_monomial(&self) -> Result<ChernVector> {
        if self.basis != ChernBasis::ChernProduct {
            return Err(Error::InvalidParameter("vector is already in the monomial basis".into()));
        }
        Ok(self.to_basis(ChernBasis::Monomial))
    }

    fn flip(&self, to: Frame) -> ChernVector {
        let t = tables::table(self.weight);
        let mut vp = self.power_sum_values();
        for (c, mu) in vp.iter_mut().zip(&t.parts) {
            if mu.len() % 2 == 1 {
                *c = -c.clone();
            }
        }
        Self::from_power_sum_values(self.weight, to, ChernBasis::Monomial, &vp)
    }

    /// Normal numbers `c^nu(m_lambda) = c(iota m_lambda)`, in the monomial basis.
    pub fn tangent_to_normal(&self) -> Result<ChernVector> {
        if self.frame != Frame::Tangent {
            return Err(Error::InvalidParameter("expected a tangent vector".into()));
        }
        Ok(self.flip(Frame::Normal))
    }

    /// Inverse of [`ChernVector::tangent_to_normal`], in the monomial basis.
    pub fn normal_to_tangent(&self) -> Result<ChernVector> {
        if self.frame != Frame::Normal {
            return Err(Error::InvalidParameter("expected a normal vector".into()));
        }
        Ok(self.flip(Frame::Tangent))
    }

    /// Normal numbers in the monomial basis, whatever the input frame and basis.
    pub fn normal_monomial(&self) -> ChernVector {
        match self.frame {
            Frame::Tangent => self.flip(Frame::Normal),
            Frame::Normal => self.to_basis(ChernBasis::Monomial),
        }
    }

    /// Tangent numbers in the monomial basis.
    pub fn tangent_monomial(&self) -> ChernVector {
        match self.frame {
            Frame::Normal => self.flip(Frame::Tangent),
            Frame::Tangent => self.to_basis(ChernBasis::Monomial),
        }
    }
}
