//! File formats and subcommands of the `lpcert` tool.
//!
//! Exit codes are part of the interface:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | valid certificate, consistent distribution, or exact search result |
//! | 1 | mathematically invalid or inconsistent; infeasible or failed search |
//! | 2 | usage, parse or I/O error |
//! | 3 | search produced only a floating-point result |

pub mod commands;
pub mod files;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FLOAT_ONLY: i32 = 3;

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn with(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}
