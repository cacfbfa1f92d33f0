// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "brownlab/cli/commands.hpp"

int main(int argc, char** argv) { return brownlab::cli::run_cli(argc, argv, std::cout, std::cerr); }
