// SPDX-License-Identifier: Apache-2.0
#include "coqam/cli.hpp"

int main(int argc, char** argv) { return coqam::run_cli(argc, argv); }
