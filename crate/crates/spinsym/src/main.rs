// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

fn main() -> ExitCode {
    spinsym::cli::main_with_args(std::env::args_os())
}
