//! CSV export of basis products, with the ψ and χ matrices for E8.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use quadstruct::clifford::EKind;
use quadstruct::{Field, Matrix};

use crate::config::ScenarioConfig;
use crate::instance::Instance;
use crate::{with_field, CliError};

/// Writes the multiplication table to `out`; with `with_maps`, E8 scenarios
/// also get `<stem>_psi.csv` and `<stem>_chi.csv` next to it. Returns the
/// paths written.
pub fn dump_table(cfg: &ScenarioConfig, out: &Path, with_maps: bool) -> Result<Vec<PathBuf>, CliError> {
    cfg.validate()?;
    with_field!(cfg.field, f => dump_in(&f, cfg, out, with_maps))
}

fn dump_in<F: Field>(f: &F, cfg: &ScenarioConfig, out: &Path, with_maps: bool) -> Result<Vec<PathBuf>, CliError> {
    let inst = Instance::build(f, cfg)?;
    std::fs::write(out, inst.algebra().to_csv())?;
    let mut written = vec![out.to_path_buf()];
    if !with_maps {
        return Ok(written);
    }
    let Instance::EType(x) = &inst else {
        return Err(CliError::Config(format!("maps are only available for e8, not {}", cfg.kind.name())));
    };
    if x.kind() != EKind::E8 {
        return Err(CliError::Config(format!("maps are only available for e8, not {}", cfg.kind.name())));
    }
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("table");
    let sibling = |suffix: &str| out.with_file_name(format!("{stem}_{suffix}.csv"));
    let bq = quadstruct::clifford::matched_biquaternion(x.clifford())?;
    let q = x.clifford().quotient_algebra()?;
    let psi = sibling("psi");
    std::fs::write(&psi, matrix_csv(f, &x.clifford().psi_matrix(), bq.algebra().names(), q.names()))?;
    written.push(psi);
    let cd = x.biquaternion_cd(20, cfg.seed)?;
    let chi = sibling("chi");
    std::fs::write(&chi, matrix_csv(f, &x.chi_matrix(&cd)?, x.algebra().names(), cd.algebra().names()))?;
    written.push(chi);
    Ok(written)
}

/// One row per source basis element: its image coordinates.
fn matrix_csv<F: Field>(f: &F, m: &Matrix<F::Elem>, src: &[String], dst: &[String]) -> String {
    let mut s = String::from("source");
    for name in dst {
        let _ = write!(s, ",{name}");
    }
    s.push('\n');
    for (i, name) in src.iter().enumerate() {
        s.push_str(name);
        for c in m.column(i) {
            let _ = write!(s, ",{}", f.format(&c));
        }
        s.push('\n');
    }
    s
}
