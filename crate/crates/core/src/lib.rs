//! Exact computation in iterated Ore extensions of CGL type over `Q(q)`,
//! with quantum matrices `O_q(M_{m,n})` as the main family.
//!
//! Elements are kept in PBW normal form: linear combinations of sorted words
//! in the ordered generators, with coefficients in [`RatFunc`].
//!
//! ```
//! use qcgl::{expr, qmat};
//!
//! let spec = qmat::oqm(2, 2).unwrap();
//! let det = qmat::quantum_det(&spec).unwrap();
//! assert_eq!(spec.render(&det), "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]");
//! assert_eq!(expr::eval_str(&spec, "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]").unwrap(), det);
//! ```

pub mod cauchon;
pub mod coef;
pub mod delderiv;
pub mod error;
pub mod expr;
pub mod grassmann;
pub mod ncalg;
pub mod presets;
pub mod qmat;
pub mod sample;
pub mod verify;

pub use coef::{IntPoly, RatFunc};
pub use delderiv::LaurentElem;
pub use error::{Error, Result};
pub use ncalg::{Monomial, NcPoly, OreAlgebraSpec, SpecBuilder, Strategy, TorusWeight};
