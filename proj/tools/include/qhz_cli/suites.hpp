#pragma once

// Identity-verification suites behind `qzeta verify`. Each suite returns one
// report per identity instance; failures are collected, never thrown.

#include <cstdint>
#include <string>
#include <vector>

#include "qhz/report.hpp"

namespace qhz::cli {

const std::vector<std::string>& suite_names();

/// Runs one named suite. The seed drives the random grid of the
/// "functional" suite and is ignored elsewhere. Throws DomainError for an
/// unknown name.
std::vector<EvalReport> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace qhz::cli
