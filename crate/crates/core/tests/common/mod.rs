pub mod brute;
pub mod families;
