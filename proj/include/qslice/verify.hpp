// Copyright 2026 The qslice Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qslice/blaschke.hpp"
#include "qslice/kernels.hpp"
#include "qslice/series.hpp"
#include "qslice/sspec.hpp"

namespace qslice {

/// Settings shared by every verification suite. A fixed seed gives a
/// bit-identical report.
struct VerifyConfig {
  int degree = kBlaschkeDegree;     // Blaschke suite series degree
  int nodes = kDefaultNodes;        // contour quadrature nodes
  int mu_max = kDefaultMuMax;
  std::optional<double> tol;        // replaces every per-check tolerance when set
  std::uint64_t seed = 42;
  std::optional<UnitImaginary> slice;  // slice used by the contour suites; random when absent
};

/// One invariant: the worst observed value against its tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

/// Suites: quat, qmat, resolvent, projector, split, sre, star, blaschke, negsq,
/// realize, klfactor. Throws UnknownSuite.
Report run_suite(const std::string& name, const VerifyConfig& config);
/// Runs every suite in order.
std::vector<Report> run_all(const VerifyConfig& config);
const std::vector<std::string>& suite_names();

}  // namespace qslice
