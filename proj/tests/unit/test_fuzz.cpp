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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "princ/construction.hpp"
#include "princ/fuzz.hpp"

using namespace princ;

namespace
{
const TemplateSet &
Templates()
{
  static const TemplateSet t = LoadTemplates(PRINC_TEST_TEMPLATES);
  return t;
}

}  // namespace

TEST_CASE("random orders are bounded and within size")
{
  for (std::size_t k = 0; k < 200; ++k) {
    auto rng = SampleRng(1, k);
    const auto p = RandomBoundedPoset(rng, 6);
    CHECK(p.size() >= 1);
    CHECK(p.size() <= 6);
    CHECK_NOTHROW(ToBounded(p));
  }
  auto a = SampleRng(8, 3);
  auto b = SampleRng(8, 3);
  CHECK(RandomBoundedPoset(a, 8) == RandomBoundedPoset(b, 8));
}

TEST_CASE("small sizes pass trivially")
{
  const auto samples = RunFuzz({2, 20, 4, 1}, Templates());
  for (const auto &s : samples) {
    CHECK(s.passed);
    CHECK(s.poset.poset.size() <= 2);
  }
  CHECK(FormatFuzzReport(samples).find("RESULT pass=20 fail=0\n") != std::string::npos);
}

TEST_CASE("reports do not depend on the worker count")
{
  const auto one = FormatFuzzReport(RunFuzz({7, 40, 123, 1}, Templates()));
  const auto three = FormatFuzzReport(RunFuzz({7, 40, 123, 3}, Templates()));
  CHECK(one == three);
  CHECK(one.find("RESULT pass=40 fail=0") != std::string::npos);
  CHECK(FormatFuzzReport(RunFuzz({7, 40, 124, 1}, Templates())) != one);
}

TEST_CASE("failures print the offending order")
{
  FuzzSample bad;
  bad.index = 4;
  bad.poset.name = "bad";
  bad.poset.poset = Poset::FromCovers({"0"}, {});
  bad.failure = "princ-iso: mismatch";
  const auto text = FormatFuzzReport({bad});
  CHECK(text.find("counterexample 4: princ-iso: mismatch") != std::string::npos);
  CHECK(text.find("\"elements\"") != std::string::npos);
  CHECK(text.find("RESULT pass=0 fail=1") != std::string::npos);
}
