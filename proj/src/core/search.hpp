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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/natural.hpp"

namespace permscan {

// Perfect-power searches over the permutation blocks.
//
// Rotation scans walk the cyclic rotations of 1..m and decompose each
// surviving candidate. Root-range scans go the other way around: they
// enumerate bases x with 10^(L-1) <= x^k < 10^L and test x^k against the
// block's digit multiset, confirming survivors by exact tokenization.
// Both directions apply the mod 9 sieve first.

enum class ScanKind {
  kashihara,    // rotation scan
  power_block,  // root-range scan
};

struct Hit {
  Natural value;
  Natural base;
  uint32_t exponent = 0;
};

struct ScanReport {
  ScanKind kind = ScanKind::power_block;
  uint64_t m_from = 0;
  uint64_t m_to = 0;
  // Counters cover only work performed by this call; a resumed run does not
  // re-count blocks finished before its checkpoint.
  uint64_t candidates_tested = 0;
  uint64_t filtered_by_mod9 = 0;
  std::vector<Hit> hits;  // ascending by value, then exponent
  double elapsed_seconds = 0;

  // Rotation scans: no perfect power seen. Root-range scans: no hit with
  // exponent >= 3 among the exponents actually scanned.
  bool holds() const;
};

// Resumable scan position. For rotation scans, block m is next and starts
// at next_rotation; for root-range scans, cell (m, exponent) is next and
// starts at next_root. m beyond the scan's m_max marks a finished scan.
struct SearchCheckpoint {
  ScanKind kind = ScanKind::power_block;
  uint64_t m = 0;
  uint32_t exponent = 0;
  Natural next_root;
  uint64_t next_rotation = 0;
  std::vector<Hit> hits;
};

struct ScanOptions {
  // Bases per (m, k) cell before power_scan_block refuses and drivers
  // switch to sub-range stripes; 0 means unlimited.
  uint64_t budget = 100'000'000;
  // Worker threads for root-range scans; 0 picks hardware concurrency.
  uint32_t workers = 1;
  // When set, drivers persist progress here and finish with a completion
  // checkpoint (atomic replace via a .tmp sibling).
  std::string checkpoint_path;
};

// Bases whose k-th power has exactly as many digits as block m.
struct RootRange {
  Natural lo;
  Natural hi;
  Natural size() const;  // 0 when empty
};

// Throws std::domain_error if m == 0 or k < 2.
RootRange root_range(uint64_t m, uint32_t k);

struct RangeScanStats {
  uint64_t tested = 0;    // bases whose power was digit-tested
  uint64_t filtered = 0;  // bases rejected by the mod 9 residue stride
};

// Scans bases in [lo, hi], ascending. Hits come back ordered by base.
// Ranges whose powers stay below 39 digits run on unsigned 128-bit
// arithmetic; force_generic routes even those through the big-integer
// path (the two must agree, which the tests exercise).
std::vector<Hit> scan_root_range(uint64_t m, uint32_t k, const Natural& lo,
                                 const Natural& hi, uint32_t workers,
                                 RangeScanStats* stats = nullptr,
                                 bool force_generic = false);

// Single-cell scan. Throws std::domain_error when block m is sieved out
// (the sieve makes the scan pointless) and BudgetExceeded when the root
// range is larger than the budget. Ignores opts.checkpoint_path.
ScanReport power_scan_block(uint64_t m, uint32_t k,
                            const ScanOptions& opts = {});

// Rotation scan over blocks 2..m_max. Sieved blocks are skipped whole;
// surviving rotations pass the trailing-digit rules before an exact
// decomposition. The digit-sum route and the residue-table route to the
// sieve verdict are compared on every block.
ScanReport kashihara_scan(uint64_t m_max, const ScanOptions& opts = {},
                          const SearchCheckpoint* resume = nullptr);

// Root-range scan over blocks 2..m_max and prime exponents <= k_max.
// Cells larger than the budget are striped into consecutive sub-ranges,
// checkpointing between stripes. Squares show up as exponent-2 hits; the
// verdict only fails on higher powers.
ScanReport conjecture1_scan(uint64_t m_max, uint32_t k_max,
                            const ScanOptions& opts = {},
                            const SearchCheckpoint* resume = nullptr);

// Plain-text checkpoint files, written atomically (tmp + rename).
void checkpoint_save(const SearchCheckpoint& cp, const std::string& path);
SearchCheckpoint checkpoint_load(const std::string& path);

}  // namespace permscan
