// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isotensor::cli::run(std::move(args), std::cout, std::cerr);
}
