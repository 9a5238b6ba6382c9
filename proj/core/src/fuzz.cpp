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

#include "princ/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "princ/error.hpp"

namespace princ
{
Poset
RandomBoundedPoset(std::mt19937_64 &rng, std::size_t max_size)
{
  if (max_size == 0) throw Error(ErrorCode::kInvalidInput, "max size must be at least 1");
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  const std::size_t size = size_dist(rng);
  if (size == 1) return Poset::FromCovers({"0"}, {});

  const std::size_t m = size - 2;
  std::vector<std::string> names{"0"};
  for (std::size_t k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
  names.push_back("1");

  std::vector<Element> line(m);
  std::iota(line.begin(), line.end(), 1);
  std::shuffle(line.begin(), line.end(), rng);

  std::bernoulli_distribution edge(0.5);
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (edge(rng)) rel.emplace_back(line[a], line[b]);
    }
  }
  const Element one = size - 1;
  for (Element x = 1; x <= m; ++x) {
    rel.emplace_back(0, x);
    rel.emplace_back(x, one);
  }
  if (m == 0) rel.emplace_back(0, one);
  return Poset::FromCoverIndices(std::move(names), rel);
}

std::mt19937_64
SampleRng(std::uint64_t seed, std::size_t index)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

FuzzSample
RunSample(std::size_t index, PosetDocument poset, const TemplateSet &templates)
{
  const auto start = std::chrono::steady_clock::now();
  FuzzSample s;
  s.index = index;
  s.poset = std::move(poset);
  try {
    const auto bounded = ToBounded(s.poset.poset);
    const auto report = VerifyTheorem(bounded, templates);
    s.down_sets = DownSets(bounded.poset, true).size();
    s.congruences = report.congruence_count;
    s.principal = report.principal_count;
    if (report.construction) s.k_size = report.construction->k.size();
    if (const auto *bad = report.FirstFailure()) {
      s.failure = bad->id + ": " + bad->detail;
    } else if (s.congruences != s.down_sets) {
      s.failure = "|Con K| = " + std::to_string(s.congruences) + " but P has " +
                  std::to_string(s.down_sets) + " nonempty down sets";
    }
  } catch (const Error &e) {
    s.failure = e.what();
  }
  s.passed = s.failure.empty();
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

std::vector<FuzzSample>
RunFuzz(const FuzzOptions &options, const TemplateSet &templates)
{
  if (options.samples == 0) throw Error(ErrorCode::kInvalidInput, "samples must be at least 1");
  std::vector<FuzzSample> out(options.samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < options.samples; k = next++) {
      auto rng = SampleRng(options.seed, k);
      PosetDocument doc;
      doc.name = "fuzz-" + std::to_string(k);
      doc.poset = RandomBoundedPoset(rng, options.max_size);
      out[k] = RunSample(k, std::move(doc), templates);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, options.samples);
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  return out;
}

std::string
FormatFuzzReport(const std::vector<FuzzSample> &samples)
{
  std::ostringstream os;
  os << "sample   |P|   |K|  |Con K|  |Down P|  |Princ K|  result\n";
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_size;
  std::size_t pass = 0;
  for (const auto &s : samples) {
    const std::size_t n = s.poset.poset.size();
    os << std::setw(6) << s.index << std::setw(6) << n << std::setw(6) << s.k_size
       << std::setw(9) << s.congruences << std::setw(10) << s.down_sets << std::setw(11)
       << s.principal << "  " << (s.passed ? "pass" : "FAIL") << '\n';
    auto &slot = by_size[n];
    if (s.passed) {
      ++pass;
      ++slot.first;
    } else {
      ++slot.second;
    }
  }
  os << "\n|P|  pass  fail\n";
  for (const auto &[n, counts] : by_size) {
    os << std::setw(3) << n << std::setw(6) << counts.first << std::setw(6) << counts.second << '\n';
  }
  for (const auto &s : samples) {
    if (s.passed) continue;
    os << "\ncounterexample " << s.index << ": " << s.failure << '\n'
       << WritePosetDocument(s.poset);
  }
  os << "RESULT pass=" << pass << " fail=" << samples.size() - pass << '\n';
  return os.str();
}

}  // namespace princ
