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

// Command line front end. Everything goes through the shared library's C
// interface; exit code 0 means "completed, conjecture holds / answer given",
// 2 means "counterexample or mismatch found", 1 means usage or I/O trouble.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permscan/permscan.h"

namespace {

struct Settings {
  std::string format = "text";
  bool tabular() const { return format == "tabular"; }
};

int fail(ps_status st) {
  std::fprintf(stderr, "error: %s (%s)\n", ps_last_error(), ps_status_str(st));
  return 1;
}

uint32_t default_workers() {
  const char* env = std::getenv("PERMSCAN_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end && *end == '\0') return static_cast<uint32_t>(v);
  return 1;
}

ps_seq_kind parse_seq(const std::string& name, bool* ok) {
  *ok = true;
  if (name == "a007908" || name == "A007908") return PS_SEQ_A007908;
  if (name == "a001292" || name == "A001292") return PS_SEQ_A001292;
  if (name == "a352991" || name == "A352991") return PS_SEQ_A352991;
  if (name == "a353025" || name == "A353025") return PS_SEQ_A353025;
  *ok = false;
  return PS_SEQ_A007908;
}

// ---- gen ----

int run_gen(const Settings&, const std::string& seq_name, uint64_t m,
            uint64_t limit) {
  bool ok = false;
  ps_seq_kind kind = parse_seq(seq_name, &ok);
  if (!ok) {
    std::fprintf(stderr, "error: unknown sequence '%s'\n", seq_name.c_str());
    return 1;
  }
  uint64_t max_len = 0;
  ps_status st = ps_block_digit_length(m, &max_len);
  if (st != PS_OK) return fail(st);

  ps_seq_iter* it = nullptr;
  st = ps_seq_iter_new(kind, &it);
  if (st != PS_OK) return fail(st);
  uint64_t emitted = 0;
  while (limit == 0 || emitted < limit) {
    char* value = nullptr;
    st = ps_seq_iter_next(it, &value);
    if (st != PS_OK) {
      ps_seq_iter_free(it);
      return fail(st);
    }
    bool past_block = std::strlen(value) > max_len;
    if (!past_block) {
      std::fputs(value, stdout);
      std::fputc('\n', stdout);
      ++emitted;
    }
    ps_string_free(value);
    if (past_block) break;
  }
  ps_seq_iter_free(it);
  return 0;
}

// ---- member ----

int run_member(const Settings& s, const std::string& value) {
  int member = 0;
  uint64_t m = 0;
  uint64_t* witness = nullptr;
  uint64_t wlen = 0;
  ps_status st = ps_membership(value.c_str(), &member, &m, &witness, &wlen);
  if (st != PS_OK) return fail(st);
  std::string tokens;
  for (uint64_t i = 0; i < wlen; ++i) {
    if (i) tokens += ',';
    tokens += std::to_string(witness[i]);
  }
  ps_u64_array_free(witness);
  if (s.tabular()) {
    if (member)
      std::printf("%s\tmember\t%" PRIu64 "\t%s\n", value.c_str(), m,
                  tokens.c_str());
    else
      std::printf("%s\tnon-member\n", value.c_str());
  } else {
    if (member)
      std::printf("member m=%" PRIu64 "\ntokens: %s\n", m, tokens.c_str());
    else
      std::printf("non-member\n");
  }
  return 0;
}

// ---- check ----

int run_check(const Settings& s, const std::string& value) {
  ps_natural* x = nullptr;
  ps_status st = ps_natural_from_decimal(value.c_str(), &x);
  if (st != PS_OK) return fail(st);

  unsigned dr = 0;
  st = ps_digital_root(x, &dr);
  if (st != PS_OK) {
    ps_natural_free(x);
    return fail(st);
  }
  unsigned mod9 = dr % 9;

  int remark = 0;
  st = ps_remark1_passes(x, &remark);
  if (st != PS_OK) {
    ps_natural_free(x);
    return fail(st);
  }

  std::string power = "none";
  ps_natural* base = nullptr;
  uint32_t exponent = 0;
  int is_power = 0;
  st = ps_perfect_power_decompose(x, &base, &exponent, &is_power);
  if (st == PS_OK && is_power) {
    char* bs = nullptr;
    if (ps_natural_to_decimal(base, &bs) == PS_OK) {
      power = std::string(bs) + "^" + std::to_string(exponent);
      ps_string_free(bs);
    }
  } else if (st != PS_OK && st != PS_ERR_DOMAIN) {
    // x < 2 is simply "none"; anything else is a real failure.
    ps_natural_free(base);
    ps_natural_free(x);
    return fail(st);
  }
  ps_natural_free(base);
  ps_natural_free(x);

  if (s.tabular()) {
    std::printf("%s\t%u\t%s\t%s\n", value.c_str(), mod9,
                remark ? "pass" : "fail", power.c_str());
  } else {
    std::printf("mod 9: %u (digital root %u)\n", mod9, dr);
    std::printf("remark 1: %s\n", remark ? "pass" : "fail");
    std::printf("perfect power: %s\n", power.c_str());
  }
  return 0;
}

// ---- scans ----

int print_report(const Settings& s, ps_report* rep, bool rotation_scan,
                 uint64_t m_max) {
  uint64_t hits = ps_report_hit_count(rep);
  uint64_t squares = 0;
  for (uint64_t i = 0; i < hits; ++i) {
    char* value = nullptr;
    char* base = nullptr;
    uint32_t k = 0;
    if (ps_report_hit(rep, i, &value, &base, &k) != PS_OK) continue;
    if (k == 2) ++squares;
    if (s.tabular())
      std::printf("hit\t%s\t%s\t%u\n", value, base, k);
    else
      std::printf("hit: %s = %s^%u\n", value, base, k);
    ps_string_free(value);
    ps_string_free(base);
  }
  int holds = ps_report_holds(rep);
  if (s.tabular()) {
    std::printf("summary\t%" PRIu64 "\t%" PRIu64 "\t%" PRIu64 "\t%d\n",
                ps_report_candidates(rep), ps_report_filtered(rep), hits,
                holds);
  } else {
    std::printf("blocks 2..%" PRIu64
                ": candidates=%" PRIu64 " filtered=%" PRIu64
                " hits=%" PRIu64 " elapsed=%.2fs\n",
                m_max, ps_report_candidates(rep), ps_report_filtered(rep),
                hits, ps_report_elapsed(rep));
    if (rotation_scan)
      std::printf(holds ? "no perfect powers among the rotations\n"
                        : "counterexample found\n");
    else
      std::printf("squares: %" PRIu64 ", higher powers: %" PRIu64 "; %s\n",
                  squares, hits - squares,
                  holds ? "conjecture holds" : "conjecture fails");
  }
  return holds ? 0 : 2;
}

int run_scan_kashihara(const Settings& s, uint64_t m_max,
                       const ps_scan_options& opts) {
  ps_report* rep = nullptr;
  ps_status st = ps_kashihara_scan(m_max, &opts, &rep);
  if (st != PS_OK) return fail(st);
  int rc = print_report(s, rep, true, m_max);
  ps_report_free(rep);
  return rc;
}

int run_scan_powers(const Settings& s, uint64_t m_max, uint32_t k_max,
                    const ps_scan_options& opts) {
  ps_report* rep = nullptr;
  ps_status st = ps_conjecture1_scan(m_max, k_max, &opts, &rep);
  if (st != PS_OK) return fail(st);
  int rc = print_report(s, rep, false, m_max);
  ps_report_free(rep);
  return rc;
}

// ---- squares ----

// Numbered list in the table shape "index value"; block order is value
// order because digit counts grow with the block.
int run_squares(const Settings& s, uint64_t m_max,
                const ps_scan_options& opts) {
  uint64_t index = 0;
  for (uint64_t m = 2; m <= m_max; ++m) {
    int excluded = 0;
    ps_status st = ps_theorem1_excludes(m, &excluded);
    if (st != PS_OK) return fail(st);
    if (excluded) continue;

    ps_report* rep = nullptr;
    st = ps_power_scan_block(m, 2, &opts, &rep);
    if (st != PS_OK) return fail(st);
    uint64_t hits = ps_report_hit_count(rep);
    for (uint64_t i = 0; i < hits; ++i) {
      char* value = nullptr;
      char* base = nullptr;
      uint32_t k = 0;
      if (ps_report_hit(rep, i, &value, &base, &k) != PS_OK) continue;
      ++index;
      if (s.tabular())
        std::printf("%" PRIu64 "\t%s\t%s\t%" PRIu64 "\n", index, value, base,
                    m);
      else
        std::printf("%" PRIu64 " %s\n", index, value);
      ps_string_free(value);
      ps_string_free(base);
    }
    ps_report_free(rep);
  }
  return 0;
}

// ---- estimate ----

int run_estimate_bound(const Settings& s, uint32_t j_max, uint32_t k_max) {
  double total = 0, k2 = 0, jtail = 0;
  ps_status st = ps_kashihara_bound(j_max, k_max, &total, &k2, &jtail);
  if (st != PS_OK) return fail(st);
  if (s.tabular())
    std::printf("bound\t%.6f\t%.6f\t%.6f\n", total, k2, jtail);
  else {
    std::printf("log10 bound: %.6f\n", total);
    std::printf("k=2 share: %.6f\n", k2);
    std::printf("log10 j-tail: %.6f\n", jtail);
  }
  return 0;
}

int run_estimate_tails(const Settings& s, uint64_t m_max) {
  uint64_t counts[10] = {0};
  uint64_t total = 0;
  ps_status st = ps_trailing_digit_empirical(m_max, counts, &total);
  if (st != PS_OK) return fail(st);
  double maxdev = 0;
  for (unsigned d = 0; d < 10; ++d) {
    uint64_t num = 0, den = 1;
    if (ps_trailing_digit_law(d, &num, &den) != PS_OK) return fail(PS_ERR_INTERNAL);
    double law = static_cast<double>(num) / static_cast<double>(den);
    double freq = total ? static_cast<double>(counts[d]) /
                              static_cast<double>(total)
                        : 0.0;
    double dev = freq > law ? freq - law : law - freq;
    if (dev > maxdev) maxdev = dev;
    if (s.tabular())
      std::printf("tail\t%u\t%" PRIu64 "\t%.6f\t%.6f\t%.6f\n", d, counts[d],
                  freq, law, dev);
    else
      std::printf("digit %u: count=%" PRIu64 " freq=%.6f law=%.6f dev=%.6f\n",
                  d, counts[d], freq, law, dev);
  }
  if (s.tabular())
    std::printf("tailsummary\t%" PRIu64 "\t%.6f\n", total, maxdev);
  else
    std::printf("total=%" PRIu64 " maxdev=%.6f\n", total, maxdev);
  return 0;
}

// ---- bfile ----

int run_bfile(const Settings&, const std::string& seq_name,
              const std::string& path, uint64_t count) {
  bool ok_name = false;
  ps_seq_kind kind = parse_seq(seq_name, &ok_name);
  if (!ok_name) {
    std::fprintf(stderr, "error: unknown sequence '%s'\n", seq_name.c_str());
    return 1;
  }
  int ok = 0;
  uint64_t index = 0;
  char* detail = nullptr;
  ps_status st = ps_bfile_compare(kind, path.c_str(), count, &ok, &index,
                                  &detail);
  if (st != PS_OK) return fail(st);
  if (ok)
    std::printf("ok: %s\n", detail);
  else
    std::printf("%s\n", detail);
  ps_string_free(detail);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concatenated-permutation sequences and perfect-power scans"};
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--output-format", settings.format,
                 "Output style: text or tabular")
      ->check(CLI::IsMember({"text", "tabular"}))
      ->capture_default_str();

  uint64_t budget = 100000000ull;
  uint32_t workers = default_workers();
  std::string checkpoint;

  // gen
  auto* gen = app.add_subcommand("gen", "Stream a sequence, blocks 1..m");
  std::string gen_seq;
  uint64_t gen_m = 1;
  uint64_t gen_limit = 1000;
  gen->add_option("--seq", gen_seq,
                  "Sequence: a007908, a001292, a352991, a353025")
      ->required();
  gen->add_option("--m", gen_m, "Last block to stream")->required();
  gen->add_option("--limit", gen_limit, "Maximum terms to print; 0 = all")
      ->capture_default_str();

  // member
  auto* member = app.add_subcommand("member",
                                    "Test block membership of a value");
  std::string member_value;
  member->add_option("value", member_value, "Decimal value")->required();

  // check
  auto* check = app.add_subcommand(
      "check", "Congruence classes and perfect-power decomposition");
  std::string check_value;
  check->add_option("value", check_value, "Decimal value")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Perfect-power searches");
  scan->require_subcommand(1);
  auto* kash = scan->add_subcommand(
      "kashihara", "Decompose every cyclic rotation up to m-max");
  uint64_t kash_m_max = 0;
  kash->add_option("--m-max", kash_m_max, "Largest block")->required();
  kash->add_option("--checkpoint", checkpoint,
                   "Progress file; an existing one is resumed");
  kash->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* powers = scan->add_subcommand(
      "powers", "Root-range scan over prime exponents up to k-max");
  uint64_t powers_m_max = 0;
  uint32_t powers_k_max = 3;
  powers->add_option("--m-max", powers_m_max, "Largest block")->required();
  powers->add_option("--k-max", powers_k_max, "Largest exponent")
      ->capture_default_str();
  powers->add_option("--checkpoint", checkpoint,
                     "Progress file; an existing one is resumed");
  powers->add_option("--workers", workers, "Worker threads (0 = all cores)");
  powers->add_option("--budget", budget, "Bases per stripe; 0 = unlimited")
      ->capture_default_str();

  // squares
  auto* squares = app.add_subcommand(
      "squares", "List every perfect square in blocks 2..m-max");
  uint64_t squares_m_max = 10;
  squares->add_option("--m-max", squares_m_max, "Largest block")
      ->capture_default_str();
  squares->add_option("--workers", workers, "Worker threads (0 = all cores)");
  squares->add_option("--budget", budget,
                      "Bases per block before refusing; 0 = unlimited")
      ->capture_default_str();

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Density heuristics");
  estimate->require_subcommand(1);
  auto* bound = estimate->add_subcommand(
      "bound", "log10 of the expected count of unseen perfect powers");
  uint32_t j_max = 1000;
  uint32_t k_max = 64;
  bound->add_option("--j-max", j_max, "Last block-length index")
      ->capture_default_str();
  bound->add_option("--k-max", k_max, "Last exponent")->capture_default_str();
  auto* tails = estimate->add_subcommand(
      "tails", "Trailing-digit census against the 1/55 law");
  uint64_t tails_m_max = 10000;
  tails->add_option("--m-max", tails_m_max, "Largest block in the census")
      ->capture_default_str();

  // bfile-compare
  auto* bfile = app.add_subcommand("bfile-compare",
                                   "Check a b-file prefix against the "
                                   "generated sequence");
  std::string bfile_seq;
  std::string bfile_path;
  uint64_t bfile_count = 0;
  bfile->add_option("--seq", bfile_seq, "Sequence name")->required();
  bfile->add_option("--file", bfile_path, "b-file path")->required();
  bfile->add_option("--count", bfile_count, "Terms to compare")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ps_scan_options opts{};
  opts.budget = budget;
  opts.workers = workers;
  opts.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
  opts.resume = checkpoint.empty() ? 0 : 1;

  if (gen->parsed()) return run_gen(settings, gen_seq, gen_m, gen_limit);
  if (member->parsed()) return run_member(settings, member_value);
  if (check->parsed()) return run_check(settings, check_value);
  if (kash->parsed()) return run_scan_kashihara(settings, kash_m_max, opts);
  if (powers->parsed())
    return run_scan_powers(settings, powers_m_max, powers_k_max, opts);
  if (squares->parsed()) return run_squares(settings, squares_m_max, opts);
  if (bound->parsed()) return run_estimate_bound(settings, j_max, k_max);
  if (tails->parsed()) return run_estimate_tails(settings, tails_m_max);
  if (bfile->parsed())
    return run_bfile(settings, bfile_seq, bfile_path, bfile_count);
  return 1;
}
