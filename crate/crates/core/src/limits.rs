/// Resource guards for the enumerations whose cost grows quickly with rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest matrix accepted by [`crate::exactalg::charpoly`].
    pub max_charpoly_dim: usize,
    /// Largest Weyl group that will be enumerated.
    pub max_weyl_order: usize,
    /// Largest number of positive roots for the brute-force subset enumeration.
    pub max_subset_pairs: usize,
    /// Largest algebra dimension for matrix realizations.
    pub max_realize_dim: usize,
    /// Operator expansion guard for the Euler power identity: (variables, power).
    pub max_euler_vars: usize,
    pub max_euler_power: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_charpoly_dim: 16,
            max_weyl_order: 100_000,
            max_subset_pairs: 12,
            max_realize_dim: 80,
            max_euler_vars: 3,
            max_euler_power: 5,
        }
    }
}

impl Limits {
    pub const MAX_DIM_ENV: &'static str = "LIETAME_MAX_DIM";

    /// Defaults, with the charpoly guard overridden by `LIETAME_MAX_DIM` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(Self::MAX_DIM_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            limits.max_charpoly_dim = v;
        }
        limits
    }
}
