use pyo3::prelude::*;

#[pymodule]
fn prlc_lab(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
