//! Conjugate inverses of a user-supplied element.

use std::fmt::Write as _;

use quadstruct::Field;

use crate::config::ScenarioConfig;
use crate::instance::Instance;
use crate::{with_field, CliError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inversion {
    pub element: String,
    pub inverse: String,
    /// Nonzero residual count of `V_{x,x̂}y − y` and `V_{x̂,x}y − y` over basis `y`.
    pub nonzero_residuals: usize,
    pub text: String,
}

/// `element` is `"1"` for the unit or a comma-separated coordinate list.
pub fn invert(cfg: &ScenarioConfig, element: &str) -> Result<Inversion, CliError> {
    cfg.validate()?;
    with_field!(cfg.field, f => invert_in(&f, cfg, element))
}

fn invert_in<F: Field>(f: &F, cfg: &ScenarioConfig, element: &str) -> Result<Inversion, CliError> {
    let inst = Instance::build(f, cfg)?;
    let ctx = inst.context();
    let a = ctx.algebra();
    let x = if element.trim() == "1" {
        a.unit().to_vec()
    } else {
        let v = f.parse_vector(element).map_err(|e| CliError::Config(format!("element: {e}")))?;
        a.check_len(&v).map_err(|e| CliError::Config(format!("element: {e}")))?;
        v
    };
    let xh = ctx.conjugate_inverse(&x)?;
    let mut text = String::new();
    let _ = writeln!(text, "x    = {}", a.format_element(&x));
    let _ = writeln!(text, "nu   = {}", f.format(&ctx.conjugate_norm(&x)));
    let _ = writeln!(text, "xhat = {}", a.format_element(&xh));
    let _ = writeln!(text, "xhat coordinates: {}", f.format_vector(&xh));
    let mut nonzero = 0;
    for k in 0..a.dim() {
        let y = a.basis(k);
        let r1 = f.vsub(&a.v_op(&x, &xh, &y), &y);
        let r2 = f.vsub(&a.v_op(&xh, &x, &y), &y);
        nonzero += usize::from(!f.vis_zero(&r1)) + usize::from(!f.vis_zero(&r2));
        let _ = writeln!(
            text,
            "residual y = {:6}  V_(x,xhat)y - y = {}  V_(xhat,x)y - y = {}",
            a.names()[k],
            f.format_vector(&r1),
            f.format_vector(&r2)
        );
    }
    let _ = writeln!(text, "nonzero residuals: {nonzero}");
    Ok(Inversion { element: f.format_vector(&x), inverse: f.format_vector(&xh), nonzero_residuals: nonzero, text })
}
