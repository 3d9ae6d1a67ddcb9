// Decompositions of V_m (x) V_n, ext^2 and sym^2 of a single Jordan block in
// characteristic two, and their extension to arbitrary module expressions.
//
// V_i: unipotent i x i block, W_i: nilpotent i x i block. All routines take
// the block dimensions as counts and return Jordan types.
#pragma once

#include <stdexcept>
#include <variant>

#include "cones.hpp"
#include "jordan_type.hpp"
#include "kinds.hpp"
#include "module_expr.hpp"

namespace chartwo {

/// Largest block dimension accepted by the formula engine.
inline constexpr count_t kFormulaLimit = count_t{1} << 31;

/// The power of two q with q/2 < n <= q.
struct QChoice {
  count_t n;
  count_t q;
  unsigned alpha;

  explicit QChoice(count_t n_) : n(n_), q(0), alpha(0) {
    if (n == 0) throw std::invalid_argument("QChoice: n must be positive");
    alpha = ceil_log2(n);
    q = count_t{1} << alpha;
  }
};

namespace detail {

inline void check_dim(count_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
  if (n > kFormulaLimit) throw std::out_of_range(std::string(what) + ": dimension exceeds 2^31");
}

}  // namespace detail

/// V_m (x) V_n, by the characteristic-two recursion:
///   (i)   n = q:      V_q^m
///   (ii)  m + n > q:  V_q^(m+n-q) + V_(q-n) (x) V_(q-m)
///   (iii) m + n <= q: complement every block d of V_m (x) V_(q-n) to q - d
/// with m <= n and q/2 < n <= q re-chosen at each step. The same type holds
/// for W_m (x) W_n.
///
/// Implemented as a loop carrying the affine block map d -> offset + sign*d
/// that accumulated complements from case (iii) induce.
inline JordanType tensor_decompose(count_t m, count_t n) {
  detail::check_dim(m, "tensor_decompose");
  detail::check_dim(n, "tensor_decompose");
  JordanType out;
  std::int64_t offset = 0;
  std::int64_t sign = 1;
  auto emit = [&](count_t size, count_t mult) {
    out.add(static_cast<count_t>(offset + sign * static_cast<std::int64_t>(size)), mult);
  };
  while (m > 0 && n > 0) {
    if (m > n) std::swap(m, n);
    const count_t q = QChoice(n).q;
    if (n == q) {
      emit(q, m);
      break;
    }
    if (m + n > q) {
      emit(q, m + n - q);
      const count_t a = q - n, b = q - m;
      m = a;
      n = b;
    } else {
      offset += sign * static_cast<std::int64_t>(q);
      sign = -sign;
      n = q - n;
    }
  }
  return out;
}

/// ext^2(V_n) = ext^2(V_(q-n)) + V_q^(n-q/2-1) + V_(3q/2-n).
inline JordanType ext2_unipotent(count_t n) {
  detail::check_dim(n, "ext2_unipotent");
  JordanType out;
  while (n >= 2) {
    const count_t q = QChoice(n).q;
    out.add(q, n - q / 2 - 1);
    out.add(3 * q / 2 - n, 1);
    n = q - n;
  }
  return out;
}

/// S^2(V_n) = ext^2(V_(q-n)) + V_q^(n-q/2) + V_(q/2); S^2(V_1) = V_1.
inline JordanType sym2_unipotent(count_t n) {
  detail::check_dim(n, "sym2_unipotent");
  if (n == 1) return JordanType{{1, 1}};
  const count_t q = QChoice(n).q;
  JordanType out = q - n > 0 ? ext2_unipotent(q - n) : JordanType{};
  out.add(q, n - q / 2);
  out.add(q / 2, 1);
  return out;
}

namespace detail {

// d_k = 2^(b_k - 1) + sum_{i > k} (-1)^(k+i) 2^(b_i), for b_k > 0.
inline count_t cones_multiplicity(const ConesExpansion& e, std::size_t k) {
  std::int64_t d = std::int64_t{1} << (e.betas[k] - 1);
  for (std::size_t i = k + 1; i < e.betas.size(); ++i) {
    const std::int64_t term = std::int64_t{1} << e.betas[i];
    d += ((i - k) % 2 == 0) ? term : -term;
  }
  if (d < 0) throw std::logic_error("negative block multiplicity");
  return static_cast<count_t>(d);
}

}  // namespace detail

/// ext^2(W_n) = sum over k with b_k > 0 of W_(2^b_k - 1)^(d_k).
inline JordanType ext2_nilpotent(count_t n) {
  detail::check_dim(n, "ext2_nilpotent");
  const auto e = cones_expansion(n);
  JordanType out;
  for (std::size_t k = 0; k < e.terms(); ++k) {
    if (e.betas[k] == 0) continue;
    out.add((count_t{1} << e.betas[k]) - 1, detail::cones_multiplicity(e, k));
  }
  return out;
}

/// S^2(W_n) = W_1^ceil(n/2) + sum over k with b_k > 0 of W_(2^b_k)^(d_k).
inline JordanType sym2_nilpotent(count_t n) {
  detail::check_dim(n, "sym2_nilpotent");
  const auto e = cones_expansion(n);
  JordanType out;
  out.add(1, (n + 1) / 2);
  for (std::size_t k = 0; k < e.terms(); ++k) {
    if (e.betas[k] == 0) continue;
    out.add(count_t{1} << e.betas[k], detail::cones_multiplicity(e, k));
  }
  return out;
}

/// ext^2(W_n) = ext^2(W_(q-n)) + W_(q-1)^(n-q/2).
inline JordanType ext2_nilpotent_rec(count_t n) {
  detail::check_dim(n, "ext2_nilpotent_rec");
  JordanType out;
  while (n >= 2) {
    const count_t q = QChoice(n).q;
    out.add(q - 1, n - q / 2);
    n = q - n;
  }
  return out;
}

/// S^2(W_n) = S^2(W_(q-n)) + W_q^(n-q/2) + W_1^(n-q/2).
inline JordanType sym2_nilpotent_rec(count_t n) {
  detail::check_dim(n, "sym2_nilpotent_rec");
  JordanType out;
  while (n >= 2) {
    const count_t q = QChoice(n).q;
    out.add(q, n - q / 2);
    out.add(1, n - q / 2);
    n = q - n;
  }
  if (n == 1) out.add(1, 1);
  return out;
}

/// Formula-engine decomposition of F(X_n) for X = V (unipotent) or W
/// (nilpotent). For the tensor functor this is X_n (x) X_n.
inline JordanType square_decompose(OperatorKind kind, SquareFunctor functor, count_t n) {
  switch (functor) {
    case SquareFunctor::tensor: return tensor_decompose(n, n);
    case SquareFunctor::ext2: return kind == OperatorKind::unipotent ? ext2_unipotent(n) : ext2_nilpotent(n);
    case SquareFunctor::sym2: return kind == OperatorKind::unipotent ? sym2_unipotent(n) : sym2_nilpotent(n);
  }
  throw std::logic_error("bad functor");
}

/// X (x) Y for direct sums X, Y of indecomposables, by bilinearity.
inline JordanType tensor_types(const JordanType& x, const JordanType& y) {
  JordanType out;
  for (const auto& a : x.blocks())
    for (const auto& b : y.blocks())
      out.add(tensor_decompose(a.size, b.size), detail::checked_mul(a.multiplicity, b.multiplicity));
  return out;
}

/// ext^2 or S^2 of a direct sum, expanded with
///   F(X + Y) = F(X) + X (x) Y + F(Y),
///   F(X^c)   = F(X)^c + (X (x) X)^(c(c-1)/2).
inline JordanType square_of_type(OperatorKind kind, SquareFunctor functor, const JordanType& x) {
  if (functor == SquareFunctor::tensor) return tensor_types(x, x);
  JordanType out;
  const auto& bl = x.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    const count_t c = bl[i].multiplicity;
    out.add(square_decompose(kind, functor, bl[i].size), c);
    const count_t pairs = (c % 2 == 0) ? detail::checked_mul(c / 2, c - 1) : detail::checked_mul(c, (c - 1) / 2);
    out.add(tensor_decompose(bl[i].size, bl[i].size), pairs);
    for (std::size_t j = i + 1; j < bl.size(); ++j)
      out.add(tensor_decompose(bl[i].size, bl[j].size), detail::checked_mul(c, bl[j].multiplicity));
  }
  return out;
}

/// Fully reduced Jordan type of an expression. All atoms must share a kind.
inline JordanType decompose_expr(const ModuleExpr& e) {
  const OperatorKind kind = e.kind();
  return std::visit(
      [kind](const auto& n) -> JordanType {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Atom>) {
          detail::check_dim(n.dim, "decompose_expr");
          return JordanType{{n.dim, n.multiplicity}};
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          JordanType out;
          for (const auto& t : n.terms) out.add(decompose_expr(t));
          return out;
        } else if constexpr (std::is_same_v<T, expr::Multiple>) {
          return decompose_expr(*n.inner).scaled(n.times);
        } else if constexpr (std::is_same_v<T, expr::Tensor>) {
          return tensor_types(decompose_expr(*n.left), decompose_expr(*n.right));
        } else if constexpr (std::is_same_v<T, expr::Ext2>) {
          return square_of_type(kind, SquareFunctor::ext2, decompose_expr(*n.inner));
        } else {
          return square_of_type(kind, SquareFunctor::sym2, decompose_expr(*n.inner));
        }
      },
      e.node());
}

}  // namespace chartwo
