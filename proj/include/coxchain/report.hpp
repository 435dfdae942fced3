#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coxchain {

// Outcome of one exhaustive check. Experiments never fail a run.
struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool experiment = false;
  std::vector<std::string> notes;

  bool ok() const { return experiment || failures.empty(); }
  void fail(std::string witness) { failures.push_back(std::move(witness)); }
  void expect(bool condition, const std::string& witness) {
    ++checked;
    if (!condition) failures.push_back(witness);
  }
};

}  // namespace coxchain
