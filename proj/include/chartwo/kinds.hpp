#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chartwo {

/// Unipotent u (group element, blocks V_i) or nilpotent e (Lie algebra
/// element acting by derivations, blocks W_i).
enum class OperatorKind { unipotent, nilpotent };

enum class SquareFunctor { tensor, ext2, sym2 };

inline std::string_view to_string(OperatorKind k) { return k == OperatorKind::unipotent ? "unipotent" : "nilpotent"; }

inline std::string_view to_string(SquareFunctor f) {
  switch (f) {
    case SquareFunctor::tensor: return "tensor";
    case SquareFunctor::ext2: return "ext2";
    case SquareFunctor::sym2: return "sym2";
  }
  return "?";
}

inline OperatorKind parse_kind(std::string_view s) {
  if (s == "unipotent" || s == "V") return OperatorKind::unipotent;
  if (s == "nilpotent" || s == "W") return OperatorKind::nilpotent;
  throw std::invalid_argument("unknown operator kind '" + std::string(s) + "'");
}

inline SquareFunctor parse_functor(std::string_view s) {
  if (s == "tensor") return SquareFunctor::tensor;
  if (s == "ext2") return SquareFunctor::ext2;
  if (s == "sym2") return SquareFunctor::sym2;
  throw std::invalid_argument("unknown functor '" + std::string(s) + "'");
}

/// Raised when a computation would exceed a configured size cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chartwo
