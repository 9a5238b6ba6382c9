/*
 * Copyright 2026 The princ Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "princ/construction.hpp"
#include "princ/io.hpp"

namespace princ
{
struct FuzzOptions {
  std::size_t max_size = 7;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct FuzzSample {
  std::size_t index = 0;
  PosetDocument poset;
  bool passed = false;
  std::string failure;
  std::size_t k_size = 0;
  std::size_t congruences = 0;
  std::size_t down_sets = 0;
  std::size_t principal = 0;
  double seconds = 0.0;
};

/// A bounded order on 1..max_size elements: a random cover DAG over a random
/// linear order of the interior (edge probability 1/2) plus bounds "0", "1".
Poset
RandomBoundedPoset(std::mt19937_64 &rng, std::size_t max_size);

/// The generator stream for one sample; depends only on (seed, index).
std::mt19937_64
SampleRng(std::uint64_t seed, std::size_t index);

/// Verifies one poset: Princ K = P, every gating check, and
/// |Con K| = number of nonempty down sets.
FuzzSample
RunSample(std::size_t index, PosetDocument poset, const TemplateSet &templates);

/// Runs the samples on `jobs` worker threads. Results are in index order.
std::vector<FuzzSample>
RunFuzz(const FuzzOptions &options, const TemplateSet &templates);

/// Byte-stable report ending in "RESULT pass=<n> fail=<n>\n". Timings are
/// left out so that equal seeds give equal reports.
std::string
FormatFuzzReport(const std::vector<FuzzSample> &samples);

}  // namespace princ
