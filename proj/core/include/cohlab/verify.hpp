// Copyright 2026 The coherence-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHLAB_VERIFY_HPP
#define COHLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cohlab {

/// Outcome of one property suite: the largest deviation observed over all
/// trials against the suite's tolerance.
struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// Runs every property suite at the given size. Deterministic for a fixed
/// seed: each suite and trial derives its own sub-seed from (seed, suite,
/// trial), so results are independent of execution order or worker count.
/// trials = 0 is a vacuous pass.
std::vector<SuiteResult> run_verification(int dim, int trials, std::uint64_t seed);

}  // namespace cohlab

#endif  // COHLAB_VERIFY_HPP
