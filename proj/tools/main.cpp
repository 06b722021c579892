// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "polydist/cli.hpp"

int main(int argc, char** argv) {
  return polydist::cli::main(argc, argv, std::cout, std::cerr);
}
