// Dense bit-packed linear algebra over GF(2).
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "jordan_type.hpp"

namespace chartwo {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// A vector over GF(2). Bits past size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_(words_for(n), 0) {}

  std::size_t size() const { return size_; }
  std::span<word_t> words() { return words_; }
  std::span<const word_t> words() const { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v = true) {
    word_t m = word_t{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= m;
    else
      words_[i / kWordBits] &= ~m;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](word_t w) { return w == 0; });
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (word_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitVec& operator^=(const BitVec& o) {
    if (o.size_ != size_) throw std::invalid_argument("BitVec: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  /// Calls f(i) for every set index i in increasing order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_t x = words_[w];
      while (x) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<word_t> words_;
};

inline BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

/// Row-major bit-packed matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  /// Builds from 0/1 rows; every row must have the same length.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Gf2Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Gf2Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j)
        if (rows[i][j] & 1) m.set(i, j);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true) {
    word_t m = word_t{1} << (j % kWordBits);
    word_t& w = data_[i * stride_ + j / kWordBits];
    w = v ? (w | m) : (w & ~m);
  }
  void flip(std::size_t i, std::size_t j) { data_[i * stride_ + j / kWordBits] ^= word_t{1} << (j % kWordBits); }

  std::span<word_t> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  std::span<const word_t> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

  BitVec row_vec(std::size_t i) const {
    BitVec v(cols_);
    std::copy(row(i).begin(), row(i).end(), v.words().begin());
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](word_t w) { return w == 0; });
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (word_t w : data_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Gf2Matrix& operator+=(const Gf2Matrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= o.data_[i];
    return *this;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_t> data_;
};

inline Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }

inline Gf2Matrix identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

inline Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      word_t x = r[w];
      while (x) {
        t.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)), i);
        x &= x - 1;
      }
    }
  }
  return t;
}

/// Product over GF(2). Row i of the result is the XOR of the rows of `b`
/// selected by the set bits of row i of `a`, so sparse `a` is cheap.
inline Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Gf2Matrix: dimension mismatch in mul");
  Gf2Matrix c(a.rows(), b.cols());
  const std::size_t sw = b.stride();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    auto ar = a.row(i);
    for (std::size_t w = 0; w < ar.size(); ++w) {
      word_t x = ar[w];
      while (x) {
        auto src = b.row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
        for (std::size_t k = 0; k < sw; ++k) out[k] ^= src[k];
        x &= x - 1;
      }
    }
  }
  return c;
}

/// y = a * x.
inline BitVec apply(const Gf2Matrix& a, const BitVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("Gf2Matrix: dimension mismatch in apply");
  BitVec y(a.rows());
  auto xw = x.words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    unsigned parity = 0;
    for (std::size_t k = 0; k < r.size(); ++k) parity ^= static_cast<unsigned>(std::popcount(r[k] & xw[k]));
    if (parity & 1u) y.set(i);
  }
  return y;
}

/// Kronecker product: entry ((i,k),(j,l)) = a(i,j) b(k,l).
inline Gf2Matrix kronecker(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b.get(k, l)) c.set(i * b.rows() + k, j * b.cols() + l);
    }
  return c;
}

/// Block-diagonal sum.
inline Gf2Matrix direct_sum(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) c.set(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b.get(i, j)) c.set(a.rows() + i, a.cols() + j);
  return c;
}

/// Rank by row reduction on a copy. Pivot is the lowest column index.
inline std::size_t rank(Gf2Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t stride = m.stride();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows; ++col) {
    const std::size_t w = col / kWordBits;
    const word_t bit = word_t{1} << (col % kWordBits);
    std::size_t p = r;
    while (p < rows && !(m.row(p)[w] & bit)) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    auto pr = m.row(r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto ri = m.row(i);
      if (ri[w] & bit)
        for (std::size_t k = w; k < stride; ++k) ri[k] ^= pr[k];
    }
    ++r;
  }
  return r;
}

/// Incrementally maintained echelon basis of a subspace of GF(2)^n. Each
/// stored vector has a distinct lowest set bit (its pivot).
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t n) : n_(n), stride_(words_for(n)), pivot_slot_(n, kNone) {}

  std::size_t dim() const { return n_; }
  std::size_t rank() const { return count_; }

  /// Reduces `v` in place against the basis. Returns true and keeps the
  /// residue if it was independent.
  bool insert(std::span<word_t> v) {
    if (v.size() != stride_) throw std::invalid_argument("Gf2Echelon: size mismatch");
    for (std::size_t w = 0; w < stride_; ++w) {
      while (v[w]) {
        const std::size_t col = w * kWordBits + static_cast<std::size_t>(std::countr_zero(v[w]));
        const std::size_t slot = pivot_slot_[col];
        if (slot == kNone) {
          pivot_slot_[col] = count_;
          store_.insert(store_.end(), v.begin(), v.end());
          ++count_;
          return true;
        }
        const word_t* src = store_.data() + slot * stride_;
        for (std::size_t k = w; k < stride_; ++k) v[k] ^= src[k];
      }
    }
    return false;
  }

  bool insert(BitVec v) { return insert(v.words()); }

  bool is_pivot(std::size_t col) const { return pivot_slot_[col] != kNone; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<std::size_t> pivot_slot_;
  std::vector<word_t> store_;
};

namespace detail {

// Column supports of a matrix, for repeated products with dense vectors.
struct ColumnLists {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> entries;

  explicit ColumnLists(const Gf2Matrix& a) : offsets(a.cols() + 1, 0) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t w = 0; w < a.stride(); ++w) {
        word_t x = a.row(i)[w];
        while (x) {
          ++offsets[w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)) + 1];
          x &= x - 1;
        }
      }
    for (std::size_t j = 0; j < a.cols(); ++j) offsets[j + 1] += offsets[j];
    entries.resize(offsets.back());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t w = 0; w < a.stride(); ++w) {
        word_t x = a.row(i)[w];
        while (x) {
          entries[fill[w * kWordBits + static_cast<std::size_t>(std::countr_zero(x))]++] = i;
          x &= x - 1;
        }
      }
  }

  void apply(std::span<const word_t> x, std::span<word_t> y) const {
    std::fill(y.begin(), y.end(), 0);
    for (std::size_t w = 0; w < x.size(); ++w) {
      word_t bits = x[w];
      while (bits) {
        const std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t e = offsets[j]; e < offsets[j + 1]; ++e)
          y[entries[e] / kWordBits] ^= word_t{1} << (entries[e] % kWordBits);
        bits &= bits - 1;
      }
    }
  }
};

}  // namespace detail

/// Rank sequence r_k = rank(m^k), k = 0, 1, ..., ending with the first zero.
///
/// Let T be vectors completing an echelon basis of im(m) to the whole space.
/// Then the space is spanned by the Krylov vectors m^j t (t in T), and
/// im(m^k) is spanned by those with j >= k. Inserting the Krylov vectors
/// level by level from the deepest one down yields every rank(m^k) from a
/// single elimination pass. The full rank at level 0 together with every
/// Krylov chain dying within n steps is equivalent to nilpotency.
inline std::vector<std::size_t> nilpotent_rank_sequence(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan type: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {0};
  const std::size_t stride = m.stride();
  const detail::ColumnLists cols(m);

  // Echelon basis of im(m) from the columns of m.
  Gf2Echelon image(n);
  {
    std::vector<word_t> v(stride);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t e = cols.offsets[j]; e < cols.offsets[j + 1]; ++e)
        v[cols.entries[e] / kWordBits] ^= word_t{1} << (cols.entries[e] % kWordBits);
      image.insert(v);
    }
  }

  // Krylov chains from unit vectors at non-pivot positions.
  std::vector<std::vector<word_t>> chains;  // chain c holds len_c vectors back to back
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (image.is_pivot(i)) continue;
    std::vector<word_t> chain(stride, 0);
    chain[i / kWordBits] = word_t{1} << (i % kWordBits);
    std::size_t len = 1;
    for (;;) {
      if (len > n) throw std::domain_error("jordan type: matrix is not nilpotent");
      chain.resize((len + 1) * stride);
      std::span<const word_t> last(chain.data() + (len - 1) * stride, stride);
      std::span<word_t> next(chain.data() + len * stride, stride);
      cols.apply(last, next);
      if (std::all_of(next.begin(), next.end(), [](word_t w) { return w == 0; })) break;
      ++len;
    }
    chain.resize(len * stride);
    deepest = std::max(deepest, len);
    chains.push_back(std::move(chain));
  }

  std::vector<std::size_t> ranks(deepest + 1, 0);
  Gf2Echelon span(n);
  for (std::size_t level = deepest; level-- > 0;) {
    for (auto& chain : chains) {
      if (chain.size() <= level * stride) continue;
      span.insert(std::span<word_t>(chain.data() + level * stride, stride));
    }
    ranks[level] = span.rank();
  }
  if (ranks[0] != n) throw std::domain_error("jordan type: matrix is not nilpotent");
  return ranks;
}

/// Jordan type of a nilpotent matrix: the number of blocks of size >= k is
/// rank(m^(k-1)) - rank(m^k).
inline JordanType jordan_type_of_nilpotent(const Gf2Matrix& m) {
  const auto ranks = nilpotent_rank_sequence(m);
  JordanType t;
  const std::size_t top = ranks.size() - 1;
  for (std::size_t k = 1; k <= top; ++k) {
    const count_t at_least_k = ranks[k - 1] - ranks[k];
    const count_t at_least_next = k < top ? ranks[k] - ranks[k + 1] : 0;
    t.add(k, at_least_k - at_least_next);
  }
  return t;
}

}  // namespace chartwo
