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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "core/natural.hpp"

namespace permscan {

// Concatenation sequences over the tokens 1..m.
//
// The block of index m is the set of integers obtained by concatenating the
// decimal tokens 1, 2, ..., m in some order. Every member of block m has the
// same digit count and the same digit multiset, and block digit counts are
// strictly increasing in m, so a value's length determines its block.

// Decimal digit counts, indexed 0..9.
struct DigitMultiset {
  std::array<uint64_t, 10> counts{};

  uint64_t total() const;
  bool operator==(const DigitMultiset&) const = default;
};

DigitMultiset digit_multiset(std::string_view digits);
DigitMultiset digit_multiset(const Natural& x);

// A member of block m spelled as the token order that produces it.
struct TokenSeq {
  uint64_t m = 0;
  std::vector<uint64_t> order;

  std::string concat() const;
  bool valid() const;  // order is a permutation of 1..m
};

// "123...m" as a string / Natural. Throws std::domain_error if m == 0.
std::string concat_range_string(uint64_t m);
Natural concat_range(uint64_t m);

// Number of digits shared by all members of block m.
// Throws std::domain_error if m == 0, std::overflow_error if the count
// cannot be represented.
uint64_t block_digit_length(uint64_t m);

// Digit multiset shared by all members of block m.
DigitMultiset block_digit_multiset(uint64_t m);

// The block whose members have exactly `digits` digits, if any.
std::optional<uint64_t> block_for_length(uint64_t digits);

// Token sequence rotated left by `offset`: offset+1, ..., m, 1, ..., offset.
// Throws std::domain_error unless 0 <= offset < m.
std::string rotation_string(uint64_t m, uint64_t offset);
Natural rotation(uint64_t m, uint64_t offset);

// All m rotations, in rotation order (offset 0 first).
std::vector<Natural> cyclic_rotations(uint64_t m);

// Streams block m in ascending numeric order, without materializing the
// block. Blocks m <= 9 walk digit permutations directly. Larger blocks run
// best-first search over token prefixes, keyed by the prefix followed by the
// cheapest completion of the remaining tokens (sorted by the concatenation
// comparator a+b < b+a), which emits leaves in ascending order; distinct
// token orders can concatenate to the same value, so equal neighbors are
// deduplicated as they stream out.
//
// Tokens in use are tracked in a 64-bit mask, so m <= 64. That bound is far
// beyond the point where even streaming a block's head stops being useful.
class BlockEnumerator {
 public:
  explicit BlockEnumerator(uint64_t m);

  // Next value, ascending; nullopt once the block is exhausted.
  std::optional<std::string> next_string();
  std::optional<Natural> next();

  uint64_t m() const { return m_; }

 private:
  struct Node {
    std::string key;     // prefix digits + cheapest completion
    uint64_t mask;       // tokens already in the prefix
    uint32_t prefix_len; // digits of the prefix inside key
    uint32_t depth;      // tokens in the prefix
    bool operator>(const Node& o) const { return key > o.key; }
  };

  std::string completion(uint64_t mask) const;
  void push_children(const Node& n);

  uint64_t m_;
  bool small_;             // digit-permutation path for m <= 9
  bool done_ = false;
  std::string current_;    // small path: current permutation
  std::vector<std::string> tokens_sorted_;  // heap path: a+b < b+a order
  std::vector<uint64_t> token_vals_;        // values matching tokens_sorted_
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap_;
  std::string last_emitted_;
  bool emitted_any_ = false;
};

// First min(limit, block size) members of block m, ascending.
std::vector<Natural> enumerate_block(uint64_t m, uint64_t limit);

// Decides whether x belongs to some block, and if so recovers a witness
// token order. The block index is fixed by the digit count; the digit
// multiset is compared before attempting to split the digits into the
// tokens 1..m (longest token first, backtracking).
std::optional<TokenSeq> membership(const Natural& x);
std::optional<TokenSeq> membership(std::string_view digits);

// The four OEIS-style streams built from the blocks.
enum class SeqKind {
  a007908,  // concatenations 1..m, one term per block
  a001292,  // each block's cyclic rotations, sorted within the block
  a352991,  // every block member, ascending within the block
  a353025,  // a352991 restricted to blocks passing the mod 9 sieve
};

std::optional<SeqKind> seq_kind_from_name(std::string_view name);
std::string_view seq_kind_name(SeqKind kind);

// Infinite forward iterator over a sequence, term by term.
class SequenceStream {
 public:
  explicit SequenceStream(SeqKind kind);
  ~SequenceStream();
  SequenceStream(SequenceStream&&) noexcept;
  SequenceStream& operator=(SequenceStream&&) noexcept;

  // 1-based index of the term about to be produced.
  uint64_t index() const { return index_ + 1; }
  std::string next();

 private:
  void open_block();

  SeqKind kind_;
  uint64_t index_ = 0;
  uint64_t m_ = 0;
  uint64_t pos_ = 0;                      // position inside the current block
  std::vector<std::string> block_;        // a001292: sorted rotations
  std::unique_ptr<BlockEnumerator> enum_; // a352991 / a353025
};

}  // namespace permscan
