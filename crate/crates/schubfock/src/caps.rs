/// Enumeration caps.
///
/// All word and ribbon enumerations in this crate are finite but can grow
/// quickly with length, so the operations that walk reduced words take an
/// explicit cap. The defaults keep everything at desk scale; push them up
/// when you have a reason to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest Coxeter length accepted by word enumerations.
    pub max_len: usize,
    /// Widest permutation window accepted.
    pub max_window: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_len: 10,
            max_window: 12,
        }
    }
}

impl Caps {
    pub fn with_max_len(max_len: usize) -> Self {
        Caps {
            max_len,
            ..Caps::default()
        }
    }
}
