// Jordan types: partitions stored as (block size, multiplicity) pairs.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chartwo {

using count_t = std::uint64_t;

namespace detail {

inline count_t checked_add(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow");
  return r;
}

inline count_t checked_mul(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow");
  return r;
}

}  // namespace detail

struct Block {
  count_t size = 0;
  count_t multiplicity = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A multiset of Jordan block sizes. Blocks are kept sorted by size in
/// strictly decreasing order with positive multiplicities; blocks of size
/// zero (the zero module) and zero multiplicities are dropped on insertion.
class JordanType {
 public:
  JordanType() = default;

  JordanType(std::initializer_list<Block> blocks) {
    for (const auto& b : blocks) add(b.size, b.multiplicity);
  }

  static JordanType from_blocks(const std::vector<Block>& blocks) {
    JordanType t;
    for (const auto& b : blocks) t.add(b.size, b.multiplicity);
    return t;
  }

  /// Builds from a flat list of parts, e.g. {4, 2, 2}.
  static JordanType from_parts(const std::vector<count_t>& parts) {
    JordanType t;
    for (count_t p : parts) t.add(p, 1);
    return t;
  }

  JordanType& add(count_t size, count_t multiplicity) {
    if (size == 0 || multiplicity == 0) return *this;
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), size,
                               [](const Block& b, count_t s) { return b.size > s; });
    if (it != blocks_.end() && it->size == size)
      it->multiplicity = detail::checked_add(it->multiplicity, multiplicity);
    else
      blocks_.insert(it, Block{size, multiplicity});
    return *this;
  }

  /// Direct sum with `other` taken `times` times.
  JordanType& add(const JordanType& other, count_t times = 1) {
    if (times == 0) return *this;
    for (const auto& b : other.blocks_) add(b.size, detail::checked_mul(b.multiplicity, times));
    return *this;
  }

  JordanType scaled(count_t times) const {
    JordanType t;
    t.add(*this, times);
    return t;
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  count_t total_dim() const {
    count_t d = 0;
    for (const auto& b : blocks_) d = detail::checked_add(d, detail::checked_mul(b.size, b.multiplicity));
    return d;
  }

  /// Number of Jordan blocks (dimension of the fixed space).
  count_t block_count() const {
    count_t c = 0;
    for (const auto& b : blocks_) c = detail::checked_add(c, b.multiplicity);
    return c;
  }

  count_t largest() const { return blocks_.empty() ? 0 : blocks_.front().size; }

  count_t multiplicity_of(count_t size) const {
    for (const auto& b : blocks_)
      if (b.size == size) return b.multiplicity;
    return 0;
  }

  /// Flattened parts in decreasing order. Only sensible for small types.
  std::vector<count_t> parts() const {
    std::vector<count_t> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.multiplicity, b.size);
    return out;
  }

  /// Every block shrunk by one, blocks of size one discarded. This is the
  /// type of V / V^e when V has this type.
  JordanType decremented() const {
    JordanType t;
    for (const auto& b : blocks_) t.add(b.size - 1, b.multiplicity);
    return t;
  }

  friend bool operator==(const JordanType&, const JordanType&) = default;

 private:
  std::vector<Block> blocks_;
};

inline JordanType operator+(JordanType a, const JordanType& b) {
  a.add(b);
  return a;
}

/// Canonical text form: "8^2 5 1^3", "^1" omitted, "0" for the empty type.
inline std::string format_jordan_type(const JordanType& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& b : t.blocks()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(b.size);
    if (b.multiplicity != 1) {
      out += '^';
      out += std::to_string(b.multiplicity);
    }
  }
  return out;
}

namespace detail {

inline count_t parse_count(std::string_view text, std::string_view what) {
  if (text.empty()) throw std::invalid_argument("missing " + std::string(what));
  count_t v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(text) + "'");
    v = checked_add(checked_mul(v, 10), static_cast<count_t>(c - '0'));
  }
  return v;
}

}  // namespace detail

/// Parses the canonical form. Tokens may appear in any order; repeated
/// sizes are merged.
inline JordanType parse_jordan_type(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw std::invalid_argument("empty Jordan type");
  if (tokens.size() == 1 && tokens[0] == "0") return {};

  JordanType t;
  for (auto tok : tokens) {
    auto caret = tok.find('^');
    count_t size = detail::parse_count(tok.substr(0, caret), "block size");
    count_t mult = 1;
    if (caret != std::string_view::npos) mult = detail::parse_count(tok.substr(caret + 1), "multiplicity");
    if (size == 0) throw std::invalid_argument("block sizes must be positive");
    if (mult == 0) throw std::invalid_argument("multiplicities must be positive");
    t.add(size, mult);
  }
  return t;
}

}  // namespace chartwo
