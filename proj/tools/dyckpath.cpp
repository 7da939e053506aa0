// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "dyckpath/cli.hpp"

int main(int argc, char** argv) { return dyckpath::cli::run(argc, argv, std::cout, std::cerr); }
