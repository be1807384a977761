//! Exact computations in the braids-and-ties algebra E_n(u).

pub mod algebra;
pub mod combinatorics;
pub mod exactmath;
pub mod tensor;
pub mod specht;
