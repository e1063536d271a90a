// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotensor::cli {

/// Runs the command line (arguments without the program name) against the
/// given streams. Exit-code contract: 0 success or all checks passed,
/// 1 verification failure (a residual that should be zero is not, or a
/// strict-mode incompressibility violation), 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isotensor::cli
