//! Command-line surface: mirror generation, I-series, period checks and the
//! worked-example corpus.

pub mod commands;
pub mod corpus;

pub use commands::{
    cmd_compare_methods, cmd_examples, cmd_generate, cmd_iseries, cmd_newton, cmd_period_check,
    construct, model_spec, AmbientArg, CliError, Format, Global, Outcome,
};
pub use corpus::{
    check_example, check_examples, find, regenerate, same_polynomial, Construction,
    ExampleRecord, ExampleResult, CORPUS,
};
