#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maw/lawcheck.hpp"

namespace maw {

struct SuiteOptions {
  std::size_t max_atoms = 3;  // exhaustive caps; hom counts grow as n^m
  std::uint64_t seed = 0;     // randomized parts are deterministic given this
  std::size_t jobs = 1;
};

std::vector<std::string> suite_names();  // stone-duality, prob-duality, disint, monoidal

/// Runs one named suite ("all" runs every suite) and returns its reports in
/// a deterministic order.
std::vector<LawReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace maw
