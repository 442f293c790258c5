/*
 * Copyright 2026 The permscan authors
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

// End-to-end acceptance gate. Each criterion prints one [PASS]/[FAIL] line;
// the exit code is the number of failed criteria. `--only N` runs one.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/estimate.hpp"
#include "core/filters.hpp"
#include "core/natural.hpp"
#include "core/powercheck.hpp"
#include "core/search.hpp"
#include "core/sequences.hpp"

using namespace permscan;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// The 42 squares among the blocks up to m = 10, as value/root pairs.
const std::pair<const char*, const char*> kSquares[] = {
    {"13527684", "3678"},       {"34857216", "5904"},
    {"65318724", "8082"},       {"73256481", "8559"},
    {"81432576", "9024"},       {"139854276", "11826"},
    {"152843769", "12363"},     {"157326849", "12543"},
    {"215384976", "14676"},     {"245893761", "15681"},
    {"254817369", "15963"},     {"326597184", "18072"},
    {"361874529", "19023"},     {"375468129", "19377"},
    {"382945761", "19569"},     {"385297641", "19629"},
    {"412739856", "20316"},     {"523814769", "22887"},
    {"529874361", "23019"},     {"537219684", "23178"},
    {"549386721", "23439"},     {"587432169", "24237"},
    {"589324176", "24276"},     {"597362481", "24441"},
    {"615387249", "24807"},     {"627953481", "25059"},
    {"653927184", "25572"},     {"672935481", "25941"},
    {"697435281", "26409"},     {"714653289", "26733"},
    {"735982641", "27129"},     {"743816529", "27273"},
    {"842973156", "29034"},     {"847159236", "29106"},
    {"923187456", "30384"},     {"14102987536", "118756"},
    {"24891057361", "157769"},  {"27911048356", "167066"},
    {"28710591364", "169442"},  {"57926381041", "240679"},
    {"59710832164", "244358"},  {"75910168324", "275518"},
};

// Every perfect square drawn from the blocks up to m = 10 matches the
// published table of 42.
Outcome c1() {
  ScanReport rep = conjecture1_scan(10, 2);
  if (rep.hits.size() != 42)
    return {false, "expected 42 squares, found " +
                       std::to_string(rep.hits.size())};
  for (size_t i = 0; i < 42; ++i) {
    if (rep.hits[i].value.to_decimal() != kSquares[i].first ||
        rep.hits[i].base.to_decimal() != kSquares[i].second ||
        rep.hits[i].exponent != 2)
      return {false, "square " + std::to_string(i + 1) + " is " +
                         rep.hits[i].value.to_decimal() + ", expected " +
                         kSquares[i].first};
  }
  return {true, "42 squares in blocks up to m=10 match the table"};
}

// The smallest square member above 10^16. Its 17 digits place it in the
// 13-token block, whose full root range is scanned.
Outcome c2() {
  ScanOptions opts;
  opts.budget = 0;
  opts.workers = 0;
  ScanReport rep = power_scan_block(13, 2, opts);
  if (rep.hits.empty()) return {false, "block 13 scan found no squares"};
  const Hit& first = rep.hits.front();
  if (first.value.to_decimal() != "10135681742311129")
    return {false, "smallest square is " + first.value.to_decimal()};
  if (first.base.to_decimal() != "100676123")
    return {false, "root is " + first.base.to_decimal()};
  auto seq = membership(first.value);
  if (!seq || seq->m != 13)
    return {false, "membership does not place the value in block 13"};
  if (first.value <= Natural::pow10(16))
    return {false, "value does not exceed 10^16"};
  return {true,
          "next square above 10^16 is 10135681742311129 = 100676123^2"};
}

// No rotation of 1..m is a perfect power through m = 100.
Outcome c3() {
  ScanReport rep = kashihara_scan(100);
  if (!rep.hits.empty())
    return {false, "found " + rep.hits[0].value.to_decimal()};
  if (!rep.holds()) return {false, "verdict flag disagrees"};
  std::ostringstream os;
  os << "no perfect powers among " << rep.candidates_tested
     << " rotations through m=100";
  return {true, os.str()};
}

// No cubes in any surviving block through m = 14.
Outcome c4() {
  ScanOptions opts;
  opts.budget = 0;
  uint64_t cells = 0;
  for (uint64_t m = 2; m <= 14; ++m) {
    if (theorem1_excludes(m)) continue;
    ScanReport rep = power_scan_block(m, 3, opts);
    ++cells;
    if (!rep.hits.empty())
      return {false, "cube found in block " + std::to_string(m) + ": " +
                         rep.hits[0].value.to_decimal()};
  }
  return {true, "no cubes in the " + std::to_string(cells) +
                    " surviving blocks through m=14"};
}

// Sieve agreement between the exclusion test and the residue table, and
// residues 0/1 for every surviving block, m up to 10^6.
Outcome c5() {
  for (uint64_t m = 2; m <= 1000000; ++m) {
    unsigned r = triangular_residue(m);
    bool bad = (r == 3 || r == 6);
    if (theorem1_excludes(m) != bad)
      return {false, "exclusion mismatch at m=" + std::to_string(m)};
    if (!bad && r != 0 && r != 1)
      return {false, "survivor with residue " + std::to_string(r) +
                         " at m=" + std::to_string(m)};
  }
  return {true, "sieve routes agree for all m up to 10^6"};
}

// Root-range scanning equals whole-block enumeration with per-term square
// tests on the small blocks.
Outcome c6() {
  for (uint64_t m : {4ull, 7ull, 8ull, 9ull}) {
    std::set<std::string> brute;
    BlockEnumerator e(m);
    while (auto v = e.next()) {
      if (is_perfect_square(*v)) brute.insert(v->to_decimal());
    }
    ScanReport rep = power_scan_block(m, 2);
    std::set<std::string> scanned;
    for (const Hit& h : rep.hits) scanned.insert(h.value.to_decimal());
    if (brute != scanned)
      return {false, "square sets differ on block " + std::to_string(m) +
                         " (" + std::to_string(brute.size()) + " vs " +
                         std::to_string(scanned.size()) + ")"};
  }
  return {true, "scan equals exhaustive enumeration on blocks 4, 7, 8, 9"};
}

// Floor roots against a running oracle, then sandwich round trips on
// random inputs up to 1300 digits.
Outcome c7() {
  for (uint32_t k = 2; k <= 20; ++k) {
    uint64_t r = 0;
    Natural next(1);  // (r+1)^k
    for (uint64_t x = 0; x <= 1000000; ++x) {
      if (Natural(x) >= next) {
        ++r;
        next = Natural::pow(Natural(r + 1), k);
      }
      RootResult got = integer_nth_root(Natural(x), k);
      if (got.root != Natural(r))
        return {false, "floor root of " + std::to_string(x) + " at k=" +
                           std::to_string(k) + " is " +
                           got.root.to_decimal() + ", expected " +
                           std::to_string(r)};
    }
  }

  std::mt19937_64 rng(73);
  std::uniform_int_distribution<uint32_t> dpick(1, 1300);
  std::uniform_int_distribution<uint32_t> kpick(2, 64);
  std::uniform_int_distribution<int> digit(0, 9), lead(1, 9);
  for (int i = 0; i < 10000; ++i) {
    uint32_t digits = dpick(rng);
    std::string s(1, static_cast<char>('0' + lead(rng)));
    for (uint32_t d = 1; d < digits; ++d)
      s.push_back(static_cast<char>('0' + digit(rng)));
    Natural x = Natural::from_decimal(s);
    uint32_t k = kpick(rng);
    RootResult res = integer_nth_root(x, k);
    if (Natural::pow(res.root, k) > x ||
        Natural::pow(res.root + Natural(1), k) <= x)
      return {false, "sandwich violated on a " + std::to_string(digits) +
                         "-digit input at k=" + std::to_string(k)};
  }
  return {true, "roots match the oracle to 10^6 and round-trip on 10^4 "
                "random big inputs"};
}

// Empirical trailing-digit distribution against the (11-c)/55 law.
Outcome c8() {
  uint64_t num55 = 0;
  for (unsigned d = 0; d <= 9; ++d) {
    Rational p = trailing_digit_law(d);
    num55 += p.num * (55 / p.den);
  }
  if (num55 != 55) return {false, "law does not sum to 1"};

  TailDistribution dist = trailing_digit_empirical(10000);
  double maxdev = 0;
  for (unsigned d = 0; d <= 9; ++d)
    maxdev = std::max(maxdev, std::fabs(dist.frequency(d) -
                                        trailing_digit_law(d).value()));
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << "law sums to 1; max deviation at m_max=10^4 is "
     << maxdev << (maxdev <= 0.01 ? " (within 0.01)" : ", not within 0.01");
  return {maxdev <= 0.01, os.str()};
}

// The truncated double sum of the expected-count bound.
Outcome c9() {
  BoundResult r = kashihara_bound_log10(1000, 64);
  if (!(r.log10_total < -600.0))
    return {false, "log10 total is " + std::to_string(r.log10_total)};
  if (!(r.k2_fraction >= 0.99))
    return {false, "k=2 fraction is " + std::to_string(r.k2_fraction)};
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "log10 bound " << r.log10_total << ", k=2 share "
     << r.k2_fraction;
  return {true, os.str()};
}

// Tokenizer verdicts on the worked examples, plus acceptance of every
// member of every block up to m = 8.
Outcome c10() {
  auto yes = membership(std::string_view("12345671089"));
  if (!yes || yes->m != 10) return {false, "12345671089 not accepted"};
  if (membership(std::string_view("12345670189")))
    return {false, "12345670189 accepted"};
  for (uint64_t m = 1; m <= 8; ++m) {
    BlockEnumerator e(m);
    while (auto v = e.next_string()) {
      auto seq = membership(std::string_view(*v));
      if (!seq || seq->m != m)
        return {false, "member " + *v + " of block " + std::to_string(m) +
                           " not accepted"};
    }
  }
  return {true, "tokenizer accepts the worked example and every member "
                "of blocks up to m=8"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "usage: acceptance [--only N] with N in 1..10\n");
    return 1;
  }

  Outcome (*criteria[])() = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int failures = 0;
  for (int n = 1; n <= 10; ++n) {
    if (only != 0 && only != n) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("[%s] C%d %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", n,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  return failures;
}
