use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A model or scenario parameter violates its invariant.
    #[error("invalid parameter `{name}` = {value}: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// The radius tail has zero width, so it has no density.
    #[error("degenerate radius model (r_in = r_out = {0}): the tail is a point mass")]
    DegenerateRadius(f64),

    #[error("time grid must be sorted and non-negative (offending value {0})")]
    InvalidTimeGrid(f64),
}

pub(crate) fn check(
    ok: bool,
    name: &'static str,
    value: f64,
    constraint: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            constraint,
        })
    }
}
