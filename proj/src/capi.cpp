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
#include "permscan/permscan.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "core/bfile.hpp"
#include "core/errors.hpp"
#include "core/estimate.hpp"
#include "core/filters.hpp"
#include "core/natural.hpp"
#include "core/powercheck.hpp"
#include "core/search.hpp"
#include "core/sequences.hpp"

using namespace permscan;

struct ps_natural {
  Natural v;
};
struct ps_seq_iter {
  SequenceStream stream;
};
struct ps_report {
  ScanReport rep;
};
struct ps_checkpoint {
  SearchCheckpoint cp;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename F>
ps_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return PS_OK;
  } catch (const BudgetExceeded& e) {
    set_error(e.what());
    return PS_ERR_BUDGET;
  } catch (const ParseError& e) {
    set_error(e.what());
    return PS_ERR_PARSE;
  } catch (const IoError& e) {
    set_error(e.what());
    return PS_ERR_IO;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return PS_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return PS_ERR_INVALID;
  } catch (const std::overflow_error& e) {
    set_error(e.what());
    return PS_ERR_OVERFLOW;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return PS_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PS_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return PS_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SeqKind to_seq_kind(ps_seq_kind kind) {
  switch (kind) {
    case PS_SEQ_A007908:
      return SeqKind::a007908;
    case PS_SEQ_A001292:
      return SeqKind::a001292;
    case PS_SEQ_A352991:
      return SeqKind::a352991;
    case PS_SEQ_A353025:
      return SeqKind::a353025;
  }
  throw std::domain_error("unknown sequence kind");
}

ScanOptions to_options(const ps_scan_options* opts) {
  ScanOptions o;
  if (!opts) return o;
  o.budget = opts->budget;
  o.workers = opts->workers;
  if (opts->checkpoint_path) o.checkpoint_path = opts->checkpoint_path;
  return o;
}

// Loads the resume point when the options ask for one and the file exists.
bool maybe_resume(const ps_scan_options* opts, SearchCheckpoint* cp) {
  if (!opts || !opts->resume) return false;
  if (!opts->checkpoint_path)
    throw std::invalid_argument("resume needs a checkpoint path");
  if (!std::filesystem::exists(opts->checkpoint_path)) return false;
  *cp = checkpoint_load(opts->checkpoint_path);
  return true;
}

}  // namespace

extern "C" {

const char* ps_status_str(ps_status status) {
  switch (status) {
    case PS_OK:
      return "ok";
    case PS_ERR_INVALID:
      return "invalid argument";
    case PS_ERR_DOMAIN:
      return "domain error";
    case PS_ERR_OVERFLOW:
      return "overflow";
    case PS_ERR_BUDGET:
      return "budget exceeded";
    case PS_ERR_PARSE:
      return "parse error";
    case PS_ERR_IO:
      return "io error";
    case PS_ERR_NOMEM:
      return "out of memory";
    case PS_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ps_last_error(void) { return g_last_error.c_str(); }

const char* ps_version(void) { return "1.0.0"; }

void ps_string_free(char* s) { std::free(s); }

ps_status ps_natural_from_decimal(const char* decimal, ps_natural** out) {
  return guarded([&] {
    require(decimal && out, "null argument");
    *out = new ps_natural{Natural::from_decimal(decimal)};
  });
}

ps_status ps_natural_to_decimal(const ps_natural* x, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = dup_string(x->v.to_decimal());
  });
}

void ps_natural_free(ps_natural* x) { delete x; }

ps_status ps_concat_range(uint64_t m, ps_natural** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ps_natural{concat_range(m)};
  });
}

ps_status ps_block_digit_length(uint64_t m, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = block_digit_length(m);
  });
}

ps_status ps_rotation(uint64_t m, uint64_t offset, ps_natural** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ps_natural{rotation(m, offset)};
  });
}

ps_status ps_enumerate_block(uint64_t m, uint64_t limit, char*** out_values,
                             uint64_t* out_count) {
  return guarded([&] {
    require(out_values && out_count, "null argument");
    BlockEnumerator e(m);
    std::vector<std::string> values;
    while (values.size() < limit) {
      auto v = e.next_string();
      if (!v) break;
      values.push_back(std::move(*v));
    }
    char** arr = static_cast<char**>(std::malloc(sizeof(char*) * values.size()));
    if (!arr && !values.empty()) throw std::bad_alloc();
    uint64_t done = 0;
    try {
      for (; done < values.size(); ++done) arr[done] = dup_string(values[done]);
    } catch (...) {
      for (uint64_t i = 0; i < done; ++i) std::free(arr[i]);
      std::free(arr);
      throw;
    }
    *out_values = arr;
    *out_count = values.size();
  });
}

void ps_string_array_free(char** values, uint64_t count) {
  if (!values) return;
  for (uint64_t i = 0; i < count; ++i) std::free(values[i]);
  std::free(values);
}

ps_status ps_seq_iter_new(ps_seq_kind kind, ps_seq_iter** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ps_seq_iter{SequenceStream(to_seq_kind(kind))};
  });
}

ps_status ps_seq_iter_next(ps_seq_iter* it, char** out_value) {
  return guarded([&] {
    require(it && out_value, "null argument");
    *out_value = dup_string(it->stream.next());
  });
}

void ps_seq_iter_free(ps_seq_iter* it) { delete it; }

ps_status ps_membership(const char* decimal, int* out_member, uint64_t* out_m,
                        uint64_t** out_witness, uint64_t* out_witness_len) {
  return guarded([&] {
    require(decimal && out_member && out_m && out_witness && out_witness_len,
            "null argument");
    auto seq = membership(std::string_view(decimal));
    if (!seq) {
      *out_member = 0;
      *out_m = 0;
      *out_witness = nullptr;
      *out_witness_len = 0;
      return;
    }
    uint64_t* arr = static_cast<uint64_t*>(
        std::malloc(sizeof(uint64_t) * seq->order.size()));
    if (!arr) throw std::bad_alloc();
    for (size_t i = 0; i < seq->order.size(); ++i) arr[i] = seq->order[i];
    *out_member = 1;
    *out_m = seq->m;
    *out_witness = arr;
    *out_witness_len = seq->order.size();
  });
}

void ps_u64_array_free(uint64_t* values) { std::free(values); }

ps_status ps_triangular_residue(uint64_t m, unsigned* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = triangular_residue(m);
  });
}

ps_status ps_theorem1_excludes(uint64_t m, int* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = theorem1_excludes(m) ? 1 : 0;
  });
}

ps_status ps_digital_root(const ps_natural* x, unsigned* out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = digital_root(x->v);
  });
}

ps_status ps_remark1_passes(const ps_natural* x, int* out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = remark1_passes(x->v) ? 1 : 0;
  });
}

ps_status ps_integer_nth_root(const ps_natural* x, uint32_t k,
                              ps_natural** out_root, int* out_exact) {
  return guarded([&] {
    require(x && out_root && out_exact, "null argument");
    RootResult r = integer_nth_root(x->v, k);
    *out_root = new ps_natural{std::move(r.root)};
    *out_exact = r.exact ? 1 : 0;
  });
}

ps_status ps_perfect_square_root(const ps_natural* x, ps_natural** out_root,
                                 int* out_is_square) {
  return guarded([&] {
    require(x && out_root && out_is_square, "null argument");
    auto r = perfect_square_root(x->v);
    if (r) {
      *out_root = new ps_natural{std::move(*r)};
      *out_is_square = 1;
    } else {
      *out_root = nullptr;
      *out_is_square = 0;
    }
  });
}

ps_status ps_perfect_power_decompose(const ps_natural* x,
                                     ps_natural** out_base,
                                     uint32_t* out_exponent,
                                     int* out_is_power) {
  return guarded([&] {
    require(x && out_base && out_exponent && out_is_power, "null argument");
    auto w = perfect_power_decompose(x->v);
    if (w) {
      *out_base = new ps_natural{std::move(w->base)};
      *out_exponent = w->exponent;
      *out_is_power = 1;
    } else {
      *out_base = nullptr;
      *out_exponent = 0;
      *out_is_power = 0;
    }
  });
}

ps_status ps_power_scan_block(uint64_t m, uint32_t k,
                              const ps_scan_options* opts, ps_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ps_report{power_scan_block(m, k, to_options(opts))};
  });
}

ps_status ps_kashihara_scan(uint64_t m_max, const ps_scan_options* opts,
                            ps_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    SearchCheckpoint cp;
    bool resume = maybe_resume(opts, &cp);
    *out = new ps_report{
        kashihara_scan(m_max, to_options(opts), resume ? &cp : nullptr)};
  });
}

ps_status ps_conjecture1_scan(uint64_t m_max, uint32_t k_max,
                              const ps_scan_options* opts, ps_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    SearchCheckpoint cp;
    bool resume = maybe_resume(opts, &cp);
    *out = new ps_report{conjecture1_scan(m_max, k_max, to_options(opts),
                                          resume ? &cp : nullptr)};
  });
}

uint64_t ps_report_candidates(const ps_report* rep) {
  return rep ? rep->rep.candidates_tested : 0;
}

uint64_t ps_report_filtered(const ps_report* rep) {
  return rep ? rep->rep.filtered_by_mod9 : 0;
}

double ps_report_elapsed(const ps_report* rep) {
  return rep ? rep->rep.elapsed_seconds : 0.0;
}

uint64_t ps_report_hit_count(const ps_report* rep) {
  return rep ? rep->rep.hits.size() : 0;
}

ps_status ps_report_hit(const ps_report* rep, uint64_t i, char** out_value,
                        char** out_base, uint32_t* out_exponent) {
  return guarded([&] {
    require(rep && out_value && out_base && out_exponent, "null argument");
    if (i >= rep->rep.hits.size())
      throw std::domain_error("hit index out of range");
    const Hit& h = rep->rep.hits[i];
    char* value = dup_string(h.value.to_decimal());
    try {
      *out_base = dup_string(h.base.to_decimal());
    } catch (...) {
      std::free(value);
      throw;
    }
    *out_value = value;
    *out_exponent = h.exponent;
  });
}

int ps_report_holds(const ps_report* rep) {
  return (rep && rep->rep.holds()) ? 1 : 0;
}

void ps_report_free(ps_report* rep) { delete rep; }

ps_status ps_checkpoint_load(const char* path, ps_checkpoint** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new ps_checkpoint{checkpoint_load(path)};
  });
}

int ps_checkpoint_kind(const ps_checkpoint* cp) {
  return (cp && cp->cp.kind == ScanKind::power_block) ? 1 : 0;
}

uint64_t ps_checkpoint_m(const ps_checkpoint* cp) { return cp ? cp->cp.m : 0; }

uint32_t ps_checkpoint_exponent(const ps_checkpoint* cp) {
  return cp ? cp->cp.exponent : 0;
}

ps_status ps_checkpoint_next_root(const ps_checkpoint* cp, char** out) {
  return guarded([&] {
    require(cp && out, "null argument");
    *out = dup_string(cp->cp.next_root.to_decimal());
  });
}

uint64_t ps_checkpoint_next_rotation(const ps_checkpoint* cp) {
  return cp ? cp->cp.next_rotation : 0;
}

uint64_t ps_checkpoint_hit_count(const ps_checkpoint* cp) {
  return cp ? cp->cp.hits.size() : 0;
}

void ps_checkpoint_free(ps_checkpoint* cp) { delete cp; }

ps_status ps_trailing_digit_law(unsigned digit, uint64_t* num,
                                uint64_t* den) {
  return guarded([&] {
    require(num && den, "null argument");
    Rational r = trailing_digit_law(digit);
    *num = r.num;
    *den = r.den;
  });
}

ps_status ps_trailing_digit_empirical(uint64_t m_max, uint64_t counts[10],
                                      uint64_t* total) {
  return guarded([&] {
    require(counts && total, "null argument");
    TailDistribution d = trailing_digit_empirical(m_max);
    for (unsigned i = 0; i < 10; ++i) counts[i] = d.counts[i];
    *total = d.total;
  });
}

ps_status ps_kashihara_bound(uint32_t j_max, uint32_t k_max,
                             double* log10_total, double* k2_fraction,
                             double* log10_j_tail) {
  return guarded([&] {
    require(log10_total && k2_fraction && log10_j_tail, "null argument");
    BoundResult r = kashihara_bound_log10(j_max, k_max);
    *log10_total = r.log10_total;
    *k2_fraction = r.k2_fraction;
    *log10_j_tail = r.log10_j_tail;
  });
}

ps_status ps_bfile_compare(ps_seq_kind kind, const char* path, uint64_t count,
                           int* out_ok, uint64_t* out_index,
                           char** out_detail) {
  return guarded([&] {
    require(path && out_ok && out_index && out_detail, "null argument");
    CompareResult r = compare_bfile(to_seq_kind(kind), path, count);
    *out_ok = r.ok ? 1 : 0;
    if (r.ok) {
      *out_index = 0;
      *out_detail = dup_string(std::to_string(r.compared) + " terms match");
    } else {
      *out_index = r.mismatch_index;
      *out_detail = dup_string(
          "mismatch at index " + std::to_string(r.mismatch_index) +
          ": file has " + r.file_value + ", generated " + r.generated_value);
    }
  });
}

} /* extern "C" */
