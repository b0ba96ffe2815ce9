//! Matrix builders for every transform family.

mod classic_dct;
mod dwt;
mod gen_dct;
mod new_trig;

pub use classic_dct::{build_classic_dct, DctVariant};
pub use dwt::{build_dwt_cas, build_dwt_classic, build_dwt_unified, build_gen_dwt4, cas, DwtVariant};
pub use gen_dct::{build_gen_dct, GenDctVariant};
pub use new_trig::{build_new_dct, build_new_dst, build_new_sct};

use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::matrix::TransformMatrix;
use crate::params::FamilyParams;

/// Build a matrix for any family tag. Classic and fixed-kernel families
/// must be called with `None`; supplying parameters to them is an error,
/// as is omitting parameters (or passing the wrong kind) for a
/// parameterized family.
pub fn build(
    family: TransformFamily,
    n: u64,
    params: Option<&FamilyParams>,
) -> Result<TransformMatrix> {
    use TransformFamily::*;
    if !(family.takes_pqr() || family.takes_dwt_params()) && params.is_some() {
        return Err(Error::NotParameterized(family));
    }
    match family {
        Dct1 => build_classic_dct(DctVariant::I, n),
        Dct2 => build_classic_dct(DctVariant::II, n),
        Dct3 => build_classic_dct(DctVariant::III, n),
        Dct4 => build_classic_dct(DctVariant::IV, n),
        GenDct2 => build_gen_dct(GenDctVariant::II, n, pqr_of(family, params)?),
        GenDct3 => build_gen_dct(GenDctVariant::III, n, pqr_of(family, params)?),
        GenDct4 => build_gen_dct(GenDctVariant::IV, n, pqr_of(family, params)?),
        NewDct => build_new_dct(n),
        NewDst => build_new_dst(n),
        NewSct => build_new_sct(n),
        DwtUnified => {
            let dwt = params
                .and_then(|p| p.as_dwt())
                .copied()
                .ok_or(Error::MissingParams(family))?;
            build_dwt_unified(n, dwt)
        }
        Dwt1 => build_dwt_classic(DwtVariant::I, n),
        Dwt2 => build_dwt_classic(DwtVariant::II, n),
        Dwt3 => build_dwt_classic(DwtVariant::III, n),
        Dwt4 => build_dwt_classic(DwtVariant::IV, n),
        GenDwtCas => build_dwt_cas(n, pqr_of(family, params)?),
        GenDwt4 => build_gen_dwt4(n, pqr_of(family, params)?),
    }
}

fn pqr_of(
    family: TransformFamily,
    params: Option<&FamilyParams>,
) -> Result<crate::params::ParamsPqr> {
    params
        .and_then(|p| p.as_pqr())
        .copied()
        .ok_or(Error::MissingParams(family))
}
