//! Construction of the instance a scenario describes.

use std::sync::Arc;

use quadstruct::clifford::{matched_biquaternion, Biquaternion};
use quadstruct::quadrangular::{pq_decompose, pseudo_quadratic_quadrangular, PqStructurable, Quadrangular, QuadraticPair};
use quadstruct::zoo::{cayley_dickson, e_type_algebra, jordan_plus, matrix_structurable, split_cubic_jordan, CayleyDickson, ETypeAlgebra, MatrixAlgebra};
use quadstruct::{Field, InvolutiveAlgebra, SkewDimOneContext};

use crate::config::{KindParams, ScenarioConfig};
use crate::CliError;

/// Norm-axiom samples taken while building a Cayley-Dickson double.
const CD_BUILD_SAMPLES: usize = 20;

pub enum Instance<F: Field> {
    EType(ETypeAlgebra<F>),
    /// A pseudo-quadratic quadrangular algebra with its structurable algebra at `s₀ = e`.
    Pq { omega: Quadrangular<F>, structurable: PqStructurable<F> },
    Matrix(MatrixAlgebra<F>),
    Cd { bq: Biquaternion<F>, cd: CayleyDickson<F> },
}

impl<F: Field> Instance<F> {
    pub fn build(f: &F, cfg: &ScenarioConfig) -> Result<Self, CliError> {
        Ok(match cfg.parse_params(f)? {
            KindParams::EType { kind, gamma_sq, s } => Instance::EType(e_type_algebra(f.clone(), kind, gamma_sq, &s)?),
            KindParams::PqQuadratic { d, coeffs } => {
                let pair = QuadraticPair::extension(f.clone(), d)?;
                let coeffs = coeffs.into_iter().map(|c| vec![f.zero(), c]).collect();
                Self::pq(pseudo_quadratic_quadrangular(pair, coeffs)?)?
            }
            KindParams::PqQuaternion { a, b, coeffs } => {
                let pair = QuadraticPair::quaternion(f.clone(), a, b)?;
                let coeffs = coeffs
                    .into_iter()
                    .map(|[i, j, ij]| vec![f.zero(), i, j, ij])
                    .collect();
                Self::pq(pseudo_quadratic_quadrangular(pair, coeffs)?)?
            }
            KindParams::MatrixSplit { eta } => Instance::Matrix(matrix_structurable(split_cubic_jordan(f.clone()), eta)?),
            KindParams::CdBiquaternion { q1, q2, mu } => {
                let [a1, b1] = q1;
                let [a2, b2] = q2;
                let bq = Biquaternion::new(f, a1, b1, a2, b2)?;
                let plus = Arc::new(jordan_plus(bq.algebra())?);
                let nrd = |z: &[F::Elem]| bq.nrd(z).expect("16 coordinates");
                let trace = |z: &[F::Elem], w: &[F::Elem]| bq.trace_form(z, w);
                let cd = cayley_dickson(plus, &nrd, &trace, mu, CD_BUILD_SAMPLES, cfg.seed)?;
                Instance::Cd { bq, cd }
            }
        })
    }

    fn pq(omega: Quadrangular<F>) -> Result<Self, CliError> {
        let structurable = pq_decompose(&omega)?.structurable(&omega.field().one())?;
        Ok(Instance::Pq { omega, structurable })
    }

    pub fn context(&self) -> &SkewDimOneContext<F> {
        match self {
            Instance::EType(x) => x.context(),
            Instance::Pq { structurable, .. } => structurable.context(),
            Instance::Matrix(m) => m.context(),
            Instance::Cd { cd, .. } => cd.context(),
        }
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        self.context().algebra()
    }

    /// The biquaternion algebra carried by the instance, if any.
    pub fn biquaternion(&self) -> Result<Option<Biquaternion<F>>, CliError> {
        Ok(match self {
            Instance::EType(x) if x.kind() == quadstruct::clifford::EKind::E8 => Some(matched_biquaternion(x.clifford())?),
            Instance::Cd { bq, .. } => Some(bq.clone()),
            _ => None,
        })
    }
}
