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

// Acceptance runner: one PASS/FAIL line per criterion. Tolerances are the
// defaults pinned in the verification suites; the seed is fixed.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
};

constexpr double kResolventSeconds = 5.0;

const std::vector<Criterion> kCriteria = {
    {1, "resolvent equations", "resolvent"},
    {2, "Riesz projectors", "projector"},
    {3, "spectral split", "split"},
    {4, "S-spectrum equals right spectrum", "sre"},
    {5, "star algebra", "star"},
    {6, "Blaschke products", "blaschke"},
    {7, "negative squares", "negsq"},
    {8, "realization", "realize"},
    {9, "Krein-Langer roundtrip", "klfactor"},
};

}  // namespace

int main() {
  const qslice::VerifyConfig config;
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    bool pass = false;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      const qslice::Report report = qslice::run_suite(c.suite, config);
      pass = report.passed();
      for (const auto& check : report.checks) {
        if (!check.pass) detail += " [" + check.name + "]";
      }
    } catch (const qslice::Error& e) {
      detail = std::string(" error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.id == 1 && seconds >= kResolventSeconds) {
      pass = false;
      detail += " [runtime]";
    }
    std::printf("criterion %d %-34s %s (%.2fs)%s\n", c.id, c.title, pass ? "PASS" : "FAIL", seconds, detail.c_str());
    if (!pass) ++failures;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
