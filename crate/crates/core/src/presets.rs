//! Built-in algebras besides quantum matrices, shipped as spec files.

use crate::error::{Error, Result};
use crate::ncalg::OreAlgebraSpec;
use crate::qmat;

pub const QUANTUM_PLANE_JSON: &str = include_str!("../presets/qplane.json");
pub const UQ_SL3_PLUS_JSON: &str = include_str!("../presets/uq-sl3-plus.json");

/// Names accepted by [`by_name`] besides `qmat:m,n`.
pub const NAMES: &[&str] = &["qplane", "uq-sl3-plus"];

/// `y x = q x y`.
pub fn quantum_plane() -> OreAlgebraSpec {
    OreAlgebraSpec::from_json(QUANTUM_PLANE_JSON).expect("bundled preset is valid")
}

/// Positive part of `U_q(sl_3)` in the order `e1, e3, e2`.
pub fn uq_sl3_plus() -> OreAlgebraSpec {
    OreAlgebraSpec::from_json(UQ_SL3_PLUS_JSON).expect("bundled preset is valid")
}

/// Resolve `qmat:m,n`, `qplane` or `uq-sl3-plus`.
pub fn by_name(name: &str) -> Result<OreAlgebraSpec> {
    match name {
        "qplane" => Ok(quantum_plane()),
        "uq-sl3-plus" => Ok(uq_sl3_plus()),
        _ => {
            let dims = name
                .strip_prefix("qmat:")
                .ok_or_else(|| Error::InvalidSpec(format!("unknown algebra `{name}`")))?;
            let (m, n) = parse_size(dims)?;
            qmat::oqm(m, n)
        }
    }
}

/// `m,n` with both positive.
pub fn parse_size(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("expected `m,n`, got `{text}`"),
    };
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let m: usize = a.trim().parse().map_err(|_| bad())?;
    let n: usize = b.trim().parse().map_err(|_| bad())?;
    if m == 0 || n == 0 {
        return Err(bad());
    }
    Ok((m, n))
}
