pub mod field;
pub mod linalg;
pub mod novikov;
pub mod poly;
pub mod rat;
pub mod roots;
