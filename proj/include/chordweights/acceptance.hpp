#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chordweights::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t checked = 0;
  std::vector<std::string> failures; // first few offending cases
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

// The twelve exit criteria, in order. All comparisons are exact.
const std::vector<Criterion> &criteria();

CriterionResult run_criterion(const Criterion &c);
std::vector<CriterionResult> run_all();

// Seed for the randomized criteria (7 and 10).
inline constexpr std::uint64_t kSeed = 0x5eed2024c0ffeeULL;

} // namespace chordweights::acceptance
