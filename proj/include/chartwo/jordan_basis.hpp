// Explicit Jordan bases for the nilpotent action on W_n (x) W_n and S^2(W_n).
//
// Basis of W_n: v_1, ..., v_n with e v_1 = 0 and e v_i = v_(i-1); v_j = 0
// outside 1..n. For 1 <= s <= n:
//   z_s = sum_{i=1..s} v_i (x) v_(s+1-i)          (fixed by e)
//   w_s = sum_{|j| <= j0} v_(floor(s/2) + 2^(b-1) + j 2^b) (x) v_(ceil(s/2) + 2^(b-1) - j 2^b)
// where b = beta_k for the band k of s (n_k > n - s >= n_(k+1)), j0 is the
// smallest admissible shift, and w_s = z_s when b = 0. Then
// e^(2^b - 1) w_s = z_s and the chains {e^j w_s} form a Jordan basis.
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "gf2.hpp"
#include "kinds.hpp"
#include "rep_oracle.hpp"

namespace chartwo {

/// Where basis vectors live: W_n (x) W_n (ordered pairs) or S^2(W_n)
/// (unordered pairs, stored with i <= j).
enum class BasisSpace { tensor, sym2 };

/// Monomial v_i (x) v_j or v_i v_j, 1-based.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse GF(2) vector: a sorted set of monomials with coefficient one.
class SparseVec {
 public:
  SparseVec() = default;

  /// Sums the given monomials mod 2. Out-of-range indices (< 1 or > n)
  /// denote zero and are dropped; sym2 pairs are normalised to i <= j.
  static SparseVec from_terms(std::vector<Monomial> terms, std::uint32_t n, BasisSpace space) {
    std::erase_if(terms, [n](const Monomial& m) { return m.i < 1 || m.j < 1 || m.i > n || m.j > n; });
    if (space == BasisSpace::sym2)
      for (auto& m : terms)
        if (m.i > m.j) std::swap(m.i, m.j);
    std::sort(terms.begin(), terms.end());
    SparseVec v;
    for (std::size_t a = 0; a < terms.size();) {
      std::size_t b = a;
      while (b < terms.size() && terms[b] == terms[a]) ++b;
      if ((b - a) % 2 == 1) v.terms_.push_back(terms[a]);
      a = b;
    }
    return v;
  }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const SparseVec&, const SparseVec&) = default;
  friend auto operator<=>(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Monomial> terms_;
};

/// e acting by derivation: e(v_i v_j) = v_(i-1) v_j + v_i v_(j-1).
inline SparseVec derive(const SparseVec& x, std::uint32_t n, BasisSpace space) {
  std::vector<Monomial> out;
  out.reserve(2 * x.size());
  for (const auto& m : x.terms()) {
    out.push_back({m.i - 1, m.j});
    out.push_back({m.i, m.j - 1});
  }
  return SparseVec::from_terms(std::move(out), n, space);
}

/// The quotient map W_n (x) W_n -> S^2(W_n), v (x) w -> vw.
inline SparseVec symmetrize(const SparseVec& x, std::uint32_t n) {
  return SparseVec::from_terms(x.terms(), n, BasisSpace::sym2);
}

/// "v1*v3 + v2*v2", or "0".
inline std::string format_vec(const SparseVec& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& m : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "v" + std::to_string(m.i) + "*v" + std::to_string(m.j);
  }
  return out;
}

struct JordanChain {
  std::uint32_t s = 0;  // index of the generating w_s
  std::vector<SparseVec> vectors;  // top, e*top, ..., e^(len-1)*top

  std::size_t length() const { return vectors.size(); }
  const SparseVec& top() const { return vectors.front(); }
};

namespace detail {

inline void check_basis_n(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("jordan basis: n must be positive");
  if (n > (std::uint64_t{1} << 20)) throw std::out_of_range("jordan basis: n too large");
}

inline void check_s(std::uint64_t s, std::uint64_t n) {
  check_basis_n(n);
  if (s < 1 || s > n) throw std::out_of_range("s must satisfy 1 <= s <= n");
}

}  // namespace detail

inline SparseVec build_z(std::uint32_t s, std::uint32_t n) {
  detail::check_s(s, n);
  std::vector<Monomial> t;
  for (std::uint32_t i = 1; i <= s; ++i) t.push_back({i, s + 1 - i});
  return SparseVec::from_terms(std::move(t), n, BasisSpace::tensor);
}

/// Smallest j0 >= 0 with s <= floor(s/2) + 2^(b-1) + j0 2^b <= n and
/// s <= ceil(s/2) + 2^(b-1) + j0 2^b <= n.
inline std::uint32_t find_j0(std::uint32_t s, std::uint32_t n, unsigned beta) {
  detail::check_s(s, n);
  if (beta == 0) throw std::invalid_argument("find_j0: beta must be positive");
  const std::int64_t lo = s / 2, hi = (s + 1) / 2;
  const std::int64_t half = std::int64_t{1} << (beta - 1), step = std::int64_t{1} << beta;
  for (std::int64_t j0 = 0; j0 <= n; ++j0) {
    const std::int64_t a = lo + half + j0 * step, b = hi + half + j0 * step;
    if (a > n && b > n) break;
    if (s <= a && a <= n && s <= b && b <= n) return static_cast<std::uint32_t>(j0);
  }
  throw std::logic_error("find_j0: no admissible shift for s=" + std::to_string(s) + ", n=" + std::to_string(n) +
                         ", beta=" + std::to_string(beta));
}

/// w_s for a precomputed expansion of n.
inline SparseVec build_w(std::uint32_t s, const ConesExpansion& e) {
  const auto n = static_cast<std::uint32_t>(e.n);
  detail::check_s(s, n);
  const unsigned beta = e.betas[e.band_of(s)];
  if (beta == 0) return build_z(s, n);
  const std::int64_t j0 = find_j0(s, n, beta);
  const std::int64_t lo = s / 2, hi = (s + 1) / 2;
  const std::int64_t half = std::int64_t{1} << (beta - 1), step = std::int64_t{1} << beta;
  std::vector<Monomial> t;
  for (std::int64_t j = -j0; j <= j0; ++j) {
    const std::int64_t a = lo + half + j * step, b = hi + half - j * step;
    if (a < 1 || b < 1 || a > n || b > n) continue;
    t.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  }
  return SparseVec::from_terms(std::move(t), n, BasisSpace::tensor);
}

inline SparseVec build_w(std::uint32_t s, std::uint32_t n) { return build_w(s, cones_expansion(n)); }

/// Chains {e^j w_s : 0 <= j < 2^b}, one per s = 1..n in increasing s.
inline std::vector<JordanChain> build_tensor_basis(std::uint32_t n) {
  detail::check_basis_n(n);
  const auto e = cones_expansion(n);
  std::vector<JordanChain> chains;
  chains.reserve(n);
  std::uint64_t total = 0;
  for (std::uint32_t s = 1; s <= n; ++s) {
    const std::uint64_t len = std::uint64_t{1} << e.betas[e.band_of(s)];
    JordanChain c{s, {build_w(s, e)}};
    while (c.vectors.size() < len) c.vectors.push_back(derive(c.vectors.back(), n, BasisSpace::tensor));
    total += len;
    chains.push_back(std::move(c));
  }
  if (total != std::uint64_t{n} * n) throw std::logic_error("tensor basis: wrong vector count");
  return chains;
}

/// Images of the tensor chains in S^2(W_n): for even s the single fixed
/// vector pi(w_s); for odd s the chain {e^j pi(w_s) : 0 <= j < 2^b}.
inline std::vector<JordanChain> build_sym_basis(std::uint32_t n) {
  detail::check_basis_n(n);
  const auto e = cones_expansion(n);
  std::vector<JordanChain> chains;
  chains.reserve(n);
  std::uint64_t total = 0;
  for (std::uint32_t s = 1; s <= n; ++s) {
    const std::uint64_t len = (s % 2 == 0) ? 1 : std::uint64_t{1} << e.betas[e.band_of(s)];
    JordanChain c{s, {symmetrize(build_w(s, e), n)}};
    while (c.vectors.size() < len) c.vectors.push_back(derive(c.vectors.back(), n, BasisSpace::sym2));
    total += len;
    chains.push_back(std::move(c));
  }
  if (total != std::uint64_t{n} * (n + 1) / 2) throw std::logic_error("sym2 basis: wrong vector count");
  return chains;
}

/// Chain lengths as a Jordan type.
inline JordanType chain_type(const std::vector<JordanChain>& chains) {
  JordanType t;
  for (const auto& c : chains) t.add(c.length(), 1);
  return t;
}

/// Dense coordinates of a sparse vector in the oracle's basis ordering.
inline BitVec to_dense(const SparseVec& x, std::uint32_t n, BasisSpace space) {
  const SquareIndex idx{space == BasisSpace::tensor ? SquareFunctor::tensor : SquareFunctor::sym2, n};
  BitVec v(idx.dim());
  for (const auto& m : x.terms()) v.flip(*idx(m.i - 1, m.j - 1));
  return v;
}

struct BasisReport {
  bool links_ok = true;      // e*vector_t == vector_(t+1) and e kills the last
  bool nonzero_ok = true;    // no zero vectors
  bool terminal_ok = true;   // terminal vectors equal z_s (pi(z_s) for odd s in sym2)
  bool rank_ok = true;       // vectors independent and spanning
  std::size_t vectors = 0;
  std::size_t rank = 0;
  std::vector<std::string> failures;

  bool ok() const { return links_ok && nonzero_ok && terminal_ok && rank_ok; }
};

/// Checks a candidate Jordan basis against a dense action matrix.
inline BasisReport verify_basis(const std::vector<JordanChain>& chains, const Gf2Matrix& action, std::uint32_t n,
                                BasisSpace space) {
  BasisReport rep;
  const std::size_t dim = action.rows();
  if (action.cols() != dim) throw std::invalid_argument("verify_basis: action is not square");
  const SquareIndex idx{space == BasisSpace::tensor ? SquareFunctor::tensor : SquareFunctor::sym2, n};
  if (idx.dim() != dim) throw std::invalid_argument("verify_basis: action does not match the space");

  const Gf2Matrix cols = transpose(action);  // row j = action applied to basis vector j
  auto act = [&](const BitVec& x) {
    BitVec y(dim);
    x.for_each_set([&](std::size_t j) {
      auto src = cols.row(j);
      auto dst = y.words();
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
    });
    return y;
  };
  auto fail = [&rep](bool& flag, const JordanChain& c, std::size_t pos, const std::string& what) {
    flag = false;
    if (rep.failures.size() < 32)
      rep.failures.push_back("chain s=" + std::to_string(c.s) + " position " + std::to_string(pos) + ": " + what);
  };

  Gf2Echelon span(dim);
  for (const auto& c : chains) {
    std::vector<BitVec> dense;
    dense.reserve(c.length());
    for (const auto& v : c.vectors) dense.push_back(to_dense(v, n, space));
    for (std::size_t t = 0; t < dense.size(); ++t) {
      if (dense[t].is_zero()) fail(rep.nonzero_ok, c, t, "zero vector");
      const BitVec image = act(dense[t]);
      if (t + 1 < dense.size()) {
        if (image != dense[t + 1]) fail(rep.links_ok, c, t, "e maps it to something other than the next vector");
      } else if (!image.is_zero()) {
        fail(rep.links_ok, c, t, "terminal vector not killed by e");
      }
    }
    if (!c.vectors.empty() && c.s >= 1 && c.s <= n) {
      if (space == BasisSpace::tensor) {
        if (c.vectors.back() != build_z(c.s, n)) fail(rep.terminal_ok, c, c.length() - 1, "terminal vector is not z_s");
      } else if (c.s % 2 == 1) {
        if (c.vectors.back() != symmetrize(build_z(c.s, n), n))
          fail(rep.terminal_ok, c, c.length() - 1, "terminal vector is not pi(z_s)");
      }
    }
    for (auto& d : dense) span.insert(std::move(d));
    rep.vectors += c.length();
  }
  rep.rank = span.rank();
  if (rep.rank != rep.vectors || rep.vectors != dim) {
    rep.rank_ok = false;
    rep.failures.push_back("rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.vectors) +
                           " vectors in dimension " + std::to_string(dim));
  }
  return rep;
}

/// One line per chain: "s=<s> len=<L>: <vec> ; <vec> ; ...".
inline std::string dump_basis(const std::vector<JordanChain>& chains) {
  std::ostringstream os;
  for (const auto& c : chains) {
    os << "s=" << c.s << " len=" << c.length() << ":";
    for (std::size_t t = 0; t < c.vectors.size(); ++t) os << (t ? " ; " : " ") << format_vec(c.vectors[t]);
    os << '\n';
  }
  return os.str();
}

}  // namespace chartwo
