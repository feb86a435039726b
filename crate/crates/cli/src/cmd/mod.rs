pub mod errors;
pub mod frontier;
pub mod react;
pub mod scenario;
