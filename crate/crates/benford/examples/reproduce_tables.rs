//! Recomputing every bundled published table and diffing against the
//! printed values.
//!
//! ```bash
//! cargo run -p benford --example reproduce_tables
//! ```

use benford::{render_reproduction, reproduce, TableId};

fn main() -> Result<(), benford::Error> {
    for id in TableId::ALL {
        let reproduction = reproduce(id)?;
        println!("{}", render_reproduction(&reproduction));
    }
    Ok(())
}
