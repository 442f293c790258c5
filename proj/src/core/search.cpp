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
#include "core/search.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <thread>

#include "core/filters.hpp"
#include "core/powercheck.hpp"
#include "core/sequences.hpp"

namespace permscan {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kTen19 = 10'000'000'000'000'000'000ull;

// Largest digit count the 128-bit path can hold (10^38 < 2^127).
constexpr uint64_t kFastPathDigits = 38;

u128 pow_u128(uint64_t base, uint32_t k) {
  u128 r = 1;
  u128 b = base;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string u128_to_string(u128 y) {
  char buf[40];
  char* p = buf + sizeof(buf);
  do {
    *--p = static_cast<char>('0' + static_cast<unsigned>(y % 10));
    y /= 10;
  } while (y);
  return std::string(p, buf + sizeof(buf));
}

// Subtracts the digits of y from a copy of target; true when they use it
// up exactly. Sum(target) == digits required, so tracking the digit count
// plus non-negativity is enough.
bool digits_match_u128(u128 y, const int8_t* target, uint32_t digits) {
  int8_t c[10];
  std::memcpy(c, target, sizeof(c));
  uint32_t seen = 0;
  uint64_t hi = static_cast<uint64_t>(y / kTen19);
  uint64_t lo = static_cast<uint64_t>(y % kTen19);
  if (hi) {
    for (int i = 0; i < 19; ++i) {
      if (--c[lo % 10] < 0) return false;
      lo /= 10;
    }
    seen = 19;
    while (hi) {
      if (--c[hi % 10] < 0) return false;
      hi /= 10;
      ++seen;
    }
  } else {
    do {
      if (--c[lo % 10] < 0) return false;
      lo /= 10;
      ++seen;
    } while (lo);
  }
  return seen == digits;
}

struct ScanContext {
  uint64_t m = 0;
  uint32_t k = 0;
  uint32_t digits = 0;
  int8_t target8[10] = {};
  int32_t target32[10] = {};
  bool adm9[9] = {};
};

ScanContext make_context(uint64_t m, uint32_t k) {
  ScanContext ctx;
  ctx.m = m;
  ctx.k = k;
  uint64_t len = block_digit_length(m);
  ctx.digits = static_cast<uint32_t>(len);
  DigitMultiset ms = block_digit_multiset(m);
  for (int d = 0; d < 10; ++d) {
    ctx.target32[d] = static_cast<int32_t>(ms.counts[d]);
    ctx.target8[d] = len <= kFastPathDigits
                         ? static_cast<int8_t>(ms.counts[d])
                         : int8_t{0};
  }
  unsigned want = triangular_residue(m);
  for (unsigned a = 0; a < 9; ++a) {
    unsigned pw = 1 % 9;
    for (uint32_t i = 0; i < k; ++i) pw = (pw * a) % 9;
    ctx.adm9[a] = (pw == want);
  }
  return ctx;
}

void confirm_and_record(const ScanContext& ctx, const std::string& digits,
                        const Natural& base, std::vector<Hit>& hits) {
  auto seq = membership(std::string_view(digits));
  if (seq && seq->m == ctx.m)
    hits.push_back({Natural::from_decimal(digits), base, ctx.k});
}

void scan_chunk_fast(const ScanContext& ctx, uint64_t a, uint64_t b,
                     std::vector<Hit>& hits, RangeScanStats& st) {
  for (uint64_t x = a; x <= b; ++x) {
    if (!ctx.adm9[x % 9]) {
      ++st.filtered;
      continue;
    }
    ++st.tested;
    u128 y = pow_u128(x, ctx.k);
    if (!digits_match_u128(y, ctx.target8, ctx.digits)) continue;
    confirm_and_record(ctx, u128_to_string(y), Natural(x), hits);
  }
}

void scan_chunk_generic(const ScanContext& ctx, const Natural& a,
                        const Natural& b, std::vector<Hit>& hits,
                        RangeScanStats& st) {
  Natural x = a;
  unsigned a9 = static_cast<unsigned>(x.mod_u64(9));
  Natural y;
  Natural ymax = Natural::pow(b, ctx.k);
  std::vector<char> buf(mpz_sizeinbase(ymax.raw(), 10) + 2);
  int32_t c[10];
  while (x <= b) {
    if (!ctx.adm9[a9]) {
      ++st.filtered;
    } else {
      ++st.tested;
      mpz_pow_ui(y.raw(), x.raw(), ctx.k);
      size_t approx = mpz_sizeinbase(y.raw(), 10);
      // sizeinbase is exact or one high, so other values cannot be L digits.
      if (approx == ctx.digits || approx == ctx.digits + 1) {
        mpz_get_str(buf.data(), 10, y.raw());
        const char* s = buf.data();
        size_t len = std::strlen(s);
        if (len == ctx.digits) {
          std::memcpy(c, ctx.target32, sizeof(c));
          bool ok = true;
          for (size_t i = 0; i < len; ++i) {
            if (--c[s[i] - '0'] < 0) {
              ok = false;
              break;
            }
          }
          if (ok) confirm_and_record(ctx, std::string(s, len), x, hits);
        }
      }
    }
    ++x;
    a9 = (a9 + 1) % 9;
  }
}

uint32_t effective_workers(uint32_t requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

template <typename Body>
void run_workers(uint32_t n, Body&& body) {
  if (n <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(n);
  threads.reserve(n);
  for (uint32_t t = 0; t < n; ++t) {
    threads.emplace_back([&, t] {
      try {
        body(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void sort_hits(std::vector<Hit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.exponent < b.exponent;
  });
}

void save_if_enabled(const ScanOptions& opts, const SearchCheckpoint& cp) {
  if (!opts.checkpoint_path.empty()) checkpoint_save(cp, opts.checkpoint_path);
}

}  // namespace

Natural RootRange::size() const {
  if (hi < lo) return Natural(0);
  Natural n = hi;
  n -= lo;
  n += 1;
  return n;
}

RootRange root_range(uint64_t m, uint32_t k) {
  if (m == 0) throw std::domain_error("block index must be positive");
  if (k < 2) throw std::domain_error("exponent must be at least 2");
  uint64_t len = block_digit_length(m);
  Natural first = Natural::pow10(len - 1);
  Natural last = Natural::pow10(len);
  last -= 1;
  RootResult lo = integer_nth_root(first, k);
  RootRange r;
  r.lo = lo.exact ? std::move(lo.root) : std::move(lo.root += 1);
  r.hi = integer_nth_root(last, k).root;
  return r;
}

std::vector<Hit> scan_root_range(uint64_t m, uint32_t k, const Natural& lo,
                                 const Natural& hi, uint32_t workers,
                                 RangeScanStats* stats, bool force_generic) {
  if (m == 0) throw std::domain_error("block index must be positive");
  if (k < 2) throw std::domain_error("exponent must be at least 2");
  std::vector<Hit> hits;
  if (hi < lo) {
    if (stats) *stats = {};
    return hits;
  }

  ScanContext ctx = make_context(m, k);
  uint32_t w = effective_workers(workers);
  Natural span = hi;
  span -= lo;
  span += 1;
  if (span.fits_u64() && span.to_u64() < uint64_t{4} * w) w = 1;

  std::vector<std::vector<Hit>> hit_parts(w);
  std::vector<RangeScanStats> stat_parts(w);

  // The 128-bit path needs hi^k to stay clear of wraparound.
  bool fast = !force_generic && ctx.digits <= kFastPathDigits &&
              hi.fits_u64() && k * std::bit_width(hi.to_u64()) <= 126;
  if (fast) {
    uint64_t a = lo.to_u64();
    uint64_t b = hi.to_u64();
    uint64_t n = b - a + 1;
    run_workers(w, [&](uint32_t t) {
      uint64_t from = a + n / w * t + std::min<uint64_t>(t, n % w);
      uint64_t count = n / w + (t < n % w ? 1 : 0);
      if (count)
        scan_chunk_fast(ctx, from, from + count - 1, hit_parts[t],
                        stat_parts[t]);
    });
  } else {
    // Same splitting, on big integers.
    Natural q = span;
    q /= Natural(w);
    Natural r = span % Natural(w);
    uint64_t rem = r.to_u64();
    std::vector<Natural> starts(w + 1);
    starts[0] = lo;
    for (uint32_t t = 0; t < w; ++t) {
      Natural next = starts[t] + q;
      if (t < rem) next += 1;
      starts[t + 1] = std::move(next);
    }
    run_workers(w, [&](uint32_t t) {
      if (starts[t] < starts[t + 1]) {
        Natural last = starts[t + 1];
        last -= 1;
        scan_chunk_generic(ctx, starts[t], last, hit_parts[t], stat_parts[t]);
      }
    });
  }

  RangeScanStats total;
  for (uint32_t t = 0; t < w; ++t) {
    total.tested += stat_parts[t].tested;
    total.filtered += stat_parts[t].filtered;
    hits.insert(hits.end(), std::make_move_iterator(hit_parts[t].begin()),
                std::make_move_iterator(hit_parts[t].end()));
  }
  if (stats) *stats = total;
  return hits;
}

bool ScanReport::holds() const {
  if (kind == ScanKind::kashihara) return hits.empty();
  for (const Hit& h : hits)
    if (h.exponent >= 3) return false;
  return true;
}

ScanReport power_scan_block(uint64_t m, uint32_t k, const ScanOptions& opts) {
  if (m < 2) throw std::domain_error("block index must be at least 2");
  if (k < 2) throw std::domain_error("exponent must be at least 2");
  if (theorem1_excludes(m))
    throw std::domain_error("block is excluded by the mod 9 sieve");

  RootRange rng = root_range(m, k);
  Natural sz = rng.size();
  if (opts.budget && sz > Natural(opts.budget)) {
    uint64_t required = sz.fits_u64() ? sz.to_u64() : UINT64_MAX;
    throw BudgetExceeded(required, opts.budget);
  }

  auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.kind = ScanKind::power_block;
  rep.m_from = rep.m_to = m;
  RangeScanStats st;
  rep.hits = scan_root_range(m, k, rng.lo, rng.hi, opts.workers, &st);
  rep.candidates_tested = st.tested;
  rep.filtered_by_mod9 = st.filtered;
  sort_hits(rep.hits);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ScanReport kashihara_scan(uint64_t m_max, const ScanOptions& opts,
                          const SearchCheckpoint* resume) {
  if (m_max < 2) throw std::domain_error("m_max must be at least 2");
  uint64_t start_m = 2;
  uint64_t start_rot = 0;
  ScanReport rep;
  rep.kind = ScanKind::kashihara;
  rep.m_from = 2;
  rep.m_to = m_max;
  if (resume) {
    if (resume->kind != ScanKind::kashihara)
      throw std::domain_error("checkpoint was written by a different scan");
    if (resume->m > m_max + 1)
      throw std::domain_error("checkpoint lies beyond m_max");
    start_m = std::max<uint64_t>(2, resume->m);
    start_rot = resume->next_rotation;
    rep.hits = resume->hits;
  }

  auto t0 = std::chrono::steady_clock::now();
  for (uint64_t m = start_m; m <= m_max; ++m) {
    uint64_t rot0 = (m == start_m) ? start_rot : 0;
    bool excluded = theorem1_excludes(m);
    // Cross-check the residue table against the actual digit sum.
    unsigned dr = static_cast<unsigned>(concat_range(m).mod_u64(9));
    if (((dr == 3) || (dr == 6)) != excluded)
      throw std::logic_error("sieve routes disagree");
    if (excluded) {
      rep.filtered_by_mod9 += m - rot0;
      save_if_enabled(opts, {ScanKind::kashihara, m + 1, 0, Natural(), 0,
                             rep.hits});
      continue;
    }
    for (uint64_t rot = rot0; rot < m; ++rot) {
      Natural v = rotation(m, rot);
      ++rep.candidates_tested;
      if (remark1_passes(v)) {
        auto w = perfect_power_decompose(v);
        if (w) rep.hits.push_back({std::move(v), std::move(w->base),
                                   w->exponent});
      }
      if ((rot + 1) % 100 == 0 && rot + 1 < m)
        save_if_enabled(opts, {ScanKind::kashihara, m, 0, Natural(), rot + 1,
                               rep.hits});
    }
    save_if_enabled(opts,
                    {ScanKind::kashihara, m + 1, 0, Natural(), 0, rep.hits});
  }
  save_if_enabled(opts, {ScanKind::kashihara, m_max + 1, 0, Natural(), 0,
                         rep.hits});
  sort_hits(rep.hits);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ScanReport conjecture1_scan(uint64_t m_max, uint32_t k_max,
                            const ScanOptions& opts,
                            const SearchCheckpoint* resume) {
  if (m_max < 2) throw std::domain_error("m_max must be at least 2");
  if (k_max < 2) throw std::domain_error("k_max must be at least 2");
  std::vector<uint32_t> exps = detail::primes_upto(k_max);

  ScanReport rep;
  rep.kind = ScanKind::power_block;
  rep.m_from = 2;
  rep.m_to = m_max;
  if (resume) {
    if (resume->kind != ScanKind::power_block)
      throw std::domain_error("checkpoint was written by a different scan");
    if (resume->m > m_max + 1)
      throw std::domain_error("checkpoint lies beyond m_max");
    if (resume->m <= m_max &&
        std::find(exps.begin(), exps.end(), resume->exponent) == exps.end())
      throw std::domain_error("checkpoint exponent is not scanned");
    rep.hits = resume->hits;
  }

  auto t0 = std::chrono::steady_clock::now();
  uint64_t stripe = opts.budget ? opts.budget : (uint64_t{1} << 26);
  for (uint64_t m = 2; m <= m_max; ++m) {
    if (resume && m < resume->m) continue;
    if (theorem1_excludes(m)) continue;
    for (uint32_t k : exps) {
      if (resume && m == resume->m && k < resume->exponent) continue;
      RootRange rng = root_range(m, k);
      Natural from = rng.lo;
      if (resume && m == resume->m && k == resume->exponent &&
          resume->next_root > from)
        from = resume->next_root;
      while (from <= rng.hi) {
        Natural to = from;
        to += stripe - 1;
        if (rng.hi < to) to = rng.hi;
        RangeScanStats st;
        std::vector<Hit> part =
            scan_root_range(m, k, from, to, opts.workers, &st);
        rep.candidates_tested += st.tested;
        rep.filtered_by_mod9 += st.filtered;
        rep.hits.insert(rep.hits.end(),
                        std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
        from = to;
        from += 1;
        if (from <= rng.hi)
          save_if_enabled(opts, {ScanKind::power_block, m, k, from, 0,
                                 rep.hits});
      }
      save_if_enabled(opts, {ScanKind::power_block, m, k, from, 0, rep.hits});
    }
  }
  save_if_enabled(opts, {ScanKind::power_block, m_max + 1, exps.front(),
                         Natural(1), 0, rep.hits});
  sort_hits(rep.hits);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

namespace {

const char* kHeader = "permscan-checkpoint v1";

uint64_t parse_u64_field(const std::string& text, int line,
                         const char* what) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw CheckpointParseError(line, std::string("bad ") + what + " value");
  return v;
}

std::string expect_field(const std::string& line_text, const char* key,
                         int line) {
  std::string prefix = std::string(key) + "=";
  if (line_text.rfind(prefix, 0) != 0)
    throw CheckpointParseError(line, std::string("expected ") + key + "=...");
  return line_text.substr(prefix.size());
}

}  // namespace

void checkpoint_save(const SearchCheckpoint& cp, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << kHeader << "\n";
    out << "kind="
        << (cp.kind == ScanKind::kashihara ? "kashihara" : "power-block")
        << "\n";
    out << "m=" << cp.m << "\n";
    if (cp.kind == ScanKind::power_block) {
      out << "exponent=" << cp.exponent << "\n";
      out << "next_root=" << cp.next_root.to_decimal() << "\n";
    } else {
      out << "next_rotation=" << cp.next_rotation << "\n";
    }
    for (const Hit& h : cp.hits)
      out << "hit=" << h.value.to_decimal() << "," << h.base.to_decimal()
          << "," << h.exponent << "\n";
    out.flush();
    if (!out) throw IoError("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot replace " + path);
}

SearchCheckpoint checkpoint_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  SearchCheckpoint cp;
  std::string line;
  int no = 1;
  if (!std::getline(in, line) || line != kHeader)
    throw CheckpointParseError(1, "bad header");

  ++no;
  if (!std::getline(in, line))
    throw CheckpointParseError(no, "missing kind");
  std::string kind = expect_field(line, "kind", no);
  if (kind == "kashihara")
    cp.kind = ScanKind::kashihara;
  else if (kind == "power-block")
    cp.kind = ScanKind::power_block;
  else
    throw CheckpointParseError(no, "unknown kind '" + kind + "'");

  ++no;
  if (!std::getline(in, line)) throw CheckpointParseError(no, "missing m");
  cp.m = parse_u64_field(expect_field(line, "m", no), no, "m");

  if (cp.kind == ScanKind::power_block) {
    ++no;
    if (!std::getline(in, line))
      throw CheckpointParseError(no, "missing exponent");
    cp.exponent = static_cast<uint32_t>(
        parse_u64_field(expect_field(line, "exponent", no), no, "exponent"));
    ++no;
    if (!std::getline(in, line))
      throw CheckpointParseError(no, "missing next_root");
    try {
      cp.next_root = Natural::from_decimal(expect_field(line, "next_root", no));
    } catch (const std::invalid_argument&) {
      throw CheckpointParseError(no, "bad next_root value");
    }
  } else {
    ++no;
    if (!std::getline(in, line))
      throw CheckpointParseError(no, "missing next_rotation");
    cp.next_rotation = parse_u64_field(
        expect_field(line, "next_rotation", no), no, "next_rotation");
  }

  while (++no, std::getline(in, line)) {
    if (line.empty()) continue;
    std::string body = expect_field(line, "hit", no);
    size_t c1 = body.find(',');
    size_t c2 = (c1 == std::string::npos) ? std::string::npos
                                          : body.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw CheckpointParseError(no, "hit needs value,base,exponent");
    Hit h;
    try {
      h.value = Natural::from_decimal(body.substr(0, c1));
      h.base = Natural::from_decimal(body.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::invalid_argument&) {
      throw CheckpointParseError(no, "bad hit number");
    }
    h.exponent = static_cast<uint32_t>(
        parse_u64_field(body.substr(c2 + 1), no, "hit exponent"));
    cp.hits.push_back(std::move(h));
  }
  return cp;
}

}  // namespace permscan
