// Brute-force ground truth: explicit GF(2) matrices of u or e on tensor,
// exterior and symmetric squares, and their Jordan types.
//
// Basis orderings (1-based indices i, j of the underlying space):
//   tensor: v_i (x) v_j, lexicographic in (i, j)
//   ext2:   v_i ^ v_j with i < j, lexicographic
//   sym2:   v_i v_j with i <= j, lexicographic
#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gf2.hpp"
#include "kinds.hpp"
#include "module_expr.hpp"

namespace chartwo {

inline constexpr std::size_t kDefaultOracleCap = 20000;

/// Dimension of F(K^n).
inline std::size_t square_dim(SquareFunctor f, std::size_t n) {
  switch (f) {
    case SquareFunctor::tensor: return n * n;
    case SquareFunctor::ext2: return n * (n - (n > 0 ? 1 : 0)) / 2;
    case SquareFunctor::sym2: return n * (n + 1) / 2;
  }
  return 0;
}

/// Coordinates of basis monomials, 0-based i, j < n.
struct SquareIndex {
  SquareFunctor functor;
  std::size_t n;

  std::size_t dim() const { return square_dim(functor, n); }

  /// Index of the monomial (i, j). For ext2/sym2 the pair is unordered;
  /// ext2 with i == j has no index (the monomial is zero).
  std::optional<std::size_t> operator()(std::size_t i, std::size_t j) const {
    switch (functor) {
      case SquareFunctor::tensor: return i * n + j;
      case SquareFunctor::ext2: {
        if (i == j) return std::nullopt;
        if (i > j) std::swap(i, j);
        // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i)
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
      }
      case SquareFunctor::sym2: {
        if (i > j) std::swap(i, j);
        return i * (2 * n - i + 1) / 2 + (j - i);
      }
    }
    return std::nullopt;
  }

  /// All basis monomials in index order.
  std::vector<std::pair<std::size_t, std::size_t>> monomials() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j0 = functor == SquareFunctor::tensor ? 0 : (functor == SquareFunctor::ext2 ? i + 1 : i);
      for (std::size_t j = j0; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
  }
};

namespace detail {

inline void check_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap)
    throw resource_limit_error("oracle dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

inline std::vector<std::vector<std::size_t>> column_supports(const Gf2Matrix& a) {
  std::vector<std::vector<std::size_t>> cols(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) cols[j].push_back(i);
  return cols;
}

}  // namespace detail

/// J_n(1) or J_n(0) in the upper-shift convention: column i has a one in
/// row i-1, i.e. e v_i = v_(i-1).
inline Gf2Matrix block_matrix(OperatorKind kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("block_matrix: n must be positive");
  Gf2Matrix m = kind == OperatorKind::unipotent ? identity(n) : Gf2Matrix(n, n);
  for (std::size_t i = 1; i < n; ++i) m.set(i - 1, i);
  return m;
}

/// Action on F(V) induced by the action `a` on V: the derivation
/// a(x)1 + 1(x)a for nilpotent, the diagonal a(x)a for unipotent.
inline Gf2Matrix induced_action(OperatorKind kind, SquareFunctor functor, const Gf2Matrix& a,
                                std::size_t cap = kDefaultOracleCap) {
  if (a.rows() != a.cols()) throw std::invalid_argument("induced_action: matrix is not square");
  const std::size_t n = a.rows();
  const SquareIndex idx{functor, n};
  detail::check_cap(idx.dim(), cap);
  const auto cols = detail::column_supports(a);
  Gf2Matrix out(idx.dim(), idx.dim());
  for (const auto& [i, j] : idx.monomials()) {
    const std::size_t col = *idx(i, j);
    auto hit = [&](std::size_t p, std::size_t r) {
      if (auto row = idx(p, r)) out.flip(*row, col);
    };
    if (kind == OperatorKind::nilpotent) {
      for (std::size_t p : cols[i]) hit(p, j);
      for (std::size_t r : cols[j]) hit(i, r);
    } else {
      for (std::size_t p : cols[i])
        for (std::size_t r : cols[j]) hit(p, r);
    }
  }
  return out;
}

/// Action on A (x) B for actions a on A and b on B.
inline Gf2Matrix tensor_action(OperatorKind kind, const Gf2Matrix& a, const Gf2Matrix& b,
                               std::size_t cap = kDefaultOracleCap) {
  detail::check_cap(a.rows() * b.rows(), cap);
  if (kind == OperatorKind::unipotent) return kronecker(a, b);
  return kronecker(a, identity(b.rows())) + kronecker(identity(a.rows()), b);
}

inline Gf2Matrix square_action(OperatorKind kind, SquareFunctor functor, std::size_t n,
                               std::size_t cap = kDefaultOracleCap) {
  detail::check_cap(square_dim(functor, n), cap);
  return induced_action(kind, functor, block_matrix(kind, n), cap);
}

inline Gf2Matrix tensor_action(OperatorKind kind, std::size_t m, std::size_t n, std::size_t cap = kDefaultOracleCap) {
  detail::check_cap(m * n, cap);
  return tensor_action(kind, block_matrix(kind, m), block_matrix(kind, n), cap);
}

/// Jordan type of an operator of the given kind (u - 1 for unipotent).
inline JordanType jordan_type_of_action(OperatorKind kind, Gf2Matrix action) {
  if (kind == OperatorKind::unipotent) action += identity(action.rows());
  return jordan_type_of_nilpotent(action);
}

inline JordanType oracle_jordan_type(OperatorKind kind, SquareFunctor functor, std::size_t n,
                                     std::size_t cap = kDefaultOracleCap) {
  return jordan_type_of_action(kind, square_action(kind, functor, n, cap));
}

inline JordanType oracle_tensor_jordan_type(OperatorKind kind, std::size_t m, std::size_t n,
                                            std::size_t cap = kDefaultOracleCap) {
  return jordan_type_of_action(kind, tensor_action(kind, m, n, cap));
}

/// Dimension of the module an expression denotes, or nullopt past `limit`.
inline std::optional<std::size_t> expr_dim(const ModuleExpr& e, std::size_t limit) {
  auto clamp = [limit](unsigned __int128 d) -> std::optional<std::size_t> {
    if (d > limit) return std::nullopt;
    return static_cast<std::size_t>(d);
  };
  return std::visit(
      [&](const auto& n) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Atom>) {
          return clamp(static_cast<unsigned __int128>(n.dim) * n.multiplicity);
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          unsigned __int128 d = 0;
          for (const auto& t : n.terms) {
            auto td = expr_dim(t, limit);
            if (!td) return std::nullopt;
            d += *td;
          }
          return clamp(d);
        } else if constexpr (std::is_same_v<T, expr::Multiple>) {
          auto d = expr_dim(*n.inner, limit);
          if (!d) return std::nullopt;
          return clamp(static_cast<unsigned __int128>(*d) * n.times);
        } else if constexpr (std::is_same_v<T, expr::Tensor>) {
          auto a = expr_dim(*n.left, limit), b = expr_dim(*n.right, limit);
          if (!a || !b) return std::nullopt;
          return clamp(static_cast<unsigned __int128>(*a) * *b);
        } else {
          auto a = expr_dim(*n.inner, limit);
          if (!a) return std::nullopt;
          const unsigned __int128 m = *a;
          return clamp(std::is_same_v<T, expr::Ext2> ? m * (m - (m > 0)) / 2 : m * (m + 1) / 2);
        }
      },
      e.node());
}

/// Explicit matrix of the operator on the module an expression denotes.
inline Gf2Matrix expr_action(const ModuleExpr& e, std::size_t cap = kDefaultOracleCap) {
  if (!expr_dim(e, cap)) throw resource_limit_error("expression dimension exceeds oracle cap " + std::to_string(cap));
  const OperatorKind kind = e.kind();
  return std::visit(
      [&](const auto& n) -> Gf2Matrix {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Atom>) {
          const Gf2Matrix b = block_matrix(n.kind, n.dim);
          Gf2Matrix out = b;
          for (count_t c = 1; c < n.multiplicity; ++c) out = direct_sum(out, b);
          return out;
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          Gf2Matrix out;
          for (const auto& t : n.terms) out = direct_sum(out, expr_action(t, cap));
          return out;
        } else if constexpr (std::is_same_v<T, expr::Multiple>) {
          const Gf2Matrix b = expr_action(*n.inner, cap);
          Gf2Matrix out;
          for (count_t c = 0; c < n.times; ++c) out = direct_sum(out, b);
          return out;
        } else if constexpr (std::is_same_v<T, expr::Tensor>) {
          return tensor_action(kind, expr_action(*n.left, cap), expr_action(*n.right, cap), cap);
        } else if constexpr (std::is_same_v<T, expr::Ext2>) {
          return induced_action(kind, SquareFunctor::ext2, expr_action(*n.inner, cap), cap);
        } else {
          return induced_action(kind, SquareFunctor::sym2, expr_action(*n.inner, cap), cap);
        }
      },
      e.node());
}

inline JordanType oracle_expr_jordan_type(const ModuleExpr& e, std::size_t cap = kDefaultOracleCap) {
  return jordan_type_of_action(e.kind(), expr_action(e, cap));
}

/// Oracle cap from CHARTWO_ORACLE_CAP, else the default.
inline std::size_t oracle_cap_from_env() {
  if (const char* v = std::getenv("CHARTWO_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long c = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && end != v) return static_cast<std::size_t>(c);
  }
  return kDefaultOracleCap;
}

}  // namespace chartwo
