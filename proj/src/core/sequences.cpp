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
#include "core/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "core/filters.hpp"

namespace permscan {

namespace {

uint64_t decimal_digits(uint64_t v) {
  uint64_t d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

void require_positive_m(uint64_t m) {
  if (m == 0) throw std::domain_error("block index must be positive");
}

}  // namespace

uint64_t DigitMultiset::total() const {
  uint64_t t = 0;
  for (uint64_t c : counts) t += c;
  return t;
}

DigitMultiset digit_multiset(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty digit string");
  DigitMultiset ms;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("non-digit in digit string");
    ++ms.counts[static_cast<size_t>(c - '0')];
  }
  return ms;
}

DigitMultiset digit_multiset(const Natural& x) {
  return digit_multiset(x.to_decimal());
}

std::string TokenSeq::concat() const {
  std::string s;
  for (uint64_t t : order) s += std::to_string(t);
  return s;
}

bool TokenSeq::valid() const {
  if (order.size() != m) return false;
  std::vector<uint8_t> seen(m + 1, 0);
  for (uint64_t t : order) {
    if (t < 1 || t > m || seen[t]) return false;
    seen[t] = 1;
  }
  return true;
}

std::string concat_range_string(uint64_t m) {
  require_positive_m(m);
  std::string s;
  s.reserve(block_digit_length(m));
  for (uint64_t t = 1; t <= m; ++t) s += std::to_string(t);
  return s;
}

Natural concat_range(uint64_t m) {
  return Natural::from_decimal(concat_range_string(m));
}

uint64_t block_digit_length(uint64_t m) {
  require_positive_m(m);
  // Sum digit counts decade by decade.
  unsigned __int128 total = 0;
  uint64_t lo = 1;
  uint64_t width = 1;
  while (lo <= m) {
    uint64_t hi = (width >= 20) ? m : std::min(m, lo * 10 - 1);
    total += static_cast<unsigned __int128>(hi - lo + 1) * width;
    if (hi == m) break;
    lo = hi + 1;
    ++width;
  }
  if (total > UINT64_MAX)
    throw std::overflow_error("block digit length exceeds 64 bits");
  return static_cast<uint64_t>(total);
}

DigitMultiset block_digit_multiset(uint64_t m) {
  require_positive_m(m);
  DigitMultiset ms;
  for (uint64_t t = 1; t <= m; ++t) {
    uint64_t v = t;
    while (v) {
      ++ms.counts[v % 10];
      v /= 10;
    }
  }
  return ms;
}

std::optional<uint64_t> block_for_length(uint64_t digits) {
  if (digits == 0) return std::nullopt;
  uint64_t m = 0;
  uint64_t len = 0;
  while (len < digits) {
    ++m;
    len += decimal_digits(m);
  }
  if (len != digits) return std::nullopt;
  return m;
}

std::string rotation_string(uint64_t m, uint64_t offset) {
  require_positive_m(m);
  if (offset >= m) throw std::domain_error("rotation offset out of range");
  std::string s;
  s.reserve(block_digit_length(m));
  for (uint64_t t = offset + 1; t <= m; ++t) s += std::to_string(t);
  for (uint64_t t = 1; t <= offset; ++t) s += std::to_string(t);
  return s;
}

Natural rotation(uint64_t m, uint64_t offset) {
  return Natural::from_decimal(rotation_string(m, offset));
}

std::vector<Natural> cyclic_rotations(uint64_t m) {
  require_positive_m(m);
  std::vector<Natural> out;
  out.reserve(m);
  for (uint64_t off = 0; off < m; ++off) out.push_back(rotation(m, off));
  return out;
}

BlockEnumerator::BlockEnumerator(uint64_t m) : m_(m), small_(m <= 9) {
  require_positive_m(m);
  if (m > 64) throw std::domain_error("block enumeration supports m <= 64");
  if (small_) {
    for (uint64_t t = 1; t <= m; ++t) current_ += static_cast<char>('0' + t);
  } else {
    tokens_sorted_.reserve(m);
    token_vals_.reserve(m);
    for (uint64_t t = 1; t <= m; ++t) tokens_sorted_.push_back(std::to_string(t));
    std::sort(tokens_sorted_.begin(), tokens_sorted_.end(),
              [](const std::string& a, const std::string& b) {
                return a + b < b + a;
              });
    for (const std::string& s : tokens_sorted_)
      token_vals_.push_back(std::stoull(s));
    Node root{completion(0), 0, 0, 0};
    heap_.push(std::move(root));
  }
}

std::string BlockEnumerator::completion(uint64_t mask) const {
  std::string s;
  for (size_t i = 0; i < tokens_sorted_.size(); ++i) {
    if (!(mask & (uint64_t{1} << (token_vals_[i] - 1)))) s += tokens_sorted_[i];
  }
  return s;
}

void BlockEnumerator::push_children(const Node& n) {
  for (size_t i = 0; i < tokens_sorted_.size(); ++i) {
    uint64_t bit = uint64_t{1} << (token_vals_[i] - 1);
    if (n.mask & bit) continue;
    Node child;
    child.mask = n.mask | bit;
    child.depth = n.depth + 1;
    child.prefix_len =
        n.prefix_len + static_cast<uint32_t>(tokens_sorted_[i].size());
    child.key = n.key.substr(0, n.prefix_len) + tokens_sorted_[i] +
                completion(child.mask);
    heap_.push(std::move(child));
  }
}

std::optional<std::string> BlockEnumerator::next_string() {
  if (small_) {
    if (done_) return std::nullopt;
    std::string out = current_;
    if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
    return out;
  }
  while (!heap_.empty()) {
    Node top = heap_.top();
    heap_.pop();
    if (top.depth == m_) {
      if (emitted_any_ && top.key == last_emitted_) continue;
      emitted_any_ = true;
      last_emitted_ = top.key;
      return last_emitted_;
    }
    push_children(top);
  }
  return std::nullopt;
}

std::optional<Natural> BlockEnumerator::next() {
  auto s = next_string();
  if (!s) return std::nullopt;
  return Natural::from_decimal(*s);
}

std::vector<Natural> enumerate_block(uint64_t m, uint64_t limit) {
  BlockEnumerator e(m);
  std::vector<Natural> out;
  while (out.size() < limit) {
    auto v = e.next();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

std::optional<TokenSeq> membership(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty value");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit in value");
  if (digits.size() > 1 && digits[0] == '0')
    throw std::invalid_argument("leading zero in value");

  auto mb = block_for_length(digits.size());
  if (!mb) return std::nullopt;
  uint64_t m = *mb;
  if (digit_multiset(digits) != block_digit_multiset(m)) return std::nullopt;

  // Split the digits into the tokens 1..m, longest token first.
  uint32_t max_len = static_cast<uint32_t>(decimal_digits(m));
  std::vector<uint8_t> used(m + 1, 0);
  struct Frame {
    uint64_t pos;
    uint32_t len;
    uint64_t tok;
  };
  std::vector<Frame> stack;
  stack.reserve(m);
  uint64_t pos = 0;
  uint32_t try_len = max_len;

  while (true) {
    bool descended = false;
    if (digits[pos] != '0') {
      for (uint32_t len = try_len; len >= 1; --len) {
        if (pos + len > digits.size()) continue;
        uint64_t tok = 0;
        for (uint32_t i = 0; i < len; ++i)
          tok = tok * 10 + static_cast<uint64_t>(digits[pos + i] - '0');
        if (tok > m || used[tok]) continue;
        used[tok] = 1;
        stack.push_back({pos, len, tok});
        pos += len;
        try_len = max_len;
        descended = true;
        break;
      }
    }
    if (descended) {
      if (pos == digits.size()) {
        TokenSeq seq;
        seq.m = m;
        seq.order.reserve(stack.size());
        for (const Frame& f : stack) seq.order.push_back(f.tok);
        return seq;
      }
      continue;
    }
    // Dead end. Resume the parent frame with the next shorter length.
    if (stack.empty()) return std::nullopt;
    Frame f = stack.back();
    stack.pop_back();
    used[f.tok] = 0;
    pos = f.pos;
    if (f.len == 1) {
      // Parent exhausted as well; keep unwinding on the next loop turn.
      try_len = 0;
      continue;
    }
    try_len = f.len - 1;
  }
}

std::optional<TokenSeq> membership(const Natural& x) {
  return membership(std::string_view(x.to_decimal()));
}

std::optional<SeqKind> seq_kind_from_name(std::string_view name) {
  std::string low;
  low.reserve(name.size());
  for (char c : name) low += static_cast<char>(std::tolower(c));
  if (low == "a007908") return SeqKind::a007908;
  if (low == "a001292") return SeqKind::a001292;
  if (low == "a352991") return SeqKind::a352991;
  if (low == "a353025") return SeqKind::a353025;
  return std::nullopt;
}

std::string_view seq_kind_name(SeqKind kind) {
  switch (kind) {
    case SeqKind::a007908:
      return "a007908";
    case SeqKind::a001292:
      return "a001292";
    case SeqKind::a352991:
      return "a352991";
    case SeqKind::a353025:
      return "a353025";
  }
  return "unknown";
}

SequenceStream::SequenceStream(SeqKind kind) : kind_(kind) {}
SequenceStream::~SequenceStream() = default;
SequenceStream::SequenceStream(SequenceStream&&) noexcept = default;
SequenceStream& SequenceStream::operator=(SequenceStream&&) noexcept = default;

void SequenceStream::open_block() {
  ++m_;
  if (kind_ == SeqKind::a001292) {
    block_.clear();
    for (uint64_t off = 0; off < m_; ++off)
      block_.push_back(rotation_string(m_, off));
    // Same length, so string order is numeric order.
    std::sort(block_.begin(), block_.end());
    pos_ = 0;
    return;
  }
  if (kind_ == SeqKind::a353025) {
    while (triangular_residue(m_) == 3 || triangular_residue(m_) == 6) ++m_;
  }
  enum_ = std::make_unique<BlockEnumerator>(m_);
}

std::string SequenceStream::next() {
  ++index_;
  switch (kind_) {
    case SeqKind::a007908:
      return concat_range_string(++m_);
    case SeqKind::a001292:
      if (pos_ >= block_.size()) open_block();
      return block_[pos_++];
    case SeqKind::a352991:
    case SeqKind::a353025:
      while (true) {
        if (!enum_) open_block();
        auto v = enum_->next_string();
        if (v) return *v;
        enum_.reset();
      }
  }
  throw std::logic_error("unreachable sequence kind");
}

}  // namespace permscan
