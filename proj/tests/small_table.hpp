// Frozen decompositions for n = 1..9: ext^2(V_n), S^2(V_n), ext^2(W_n), S^2(W_n).
#pragma once

#include <array>

namespace chartwo::ref {

struct SquareRow {
  unsigned n;
  const char* ext2_unipotent;
  const char* sym2_unipotent;
  const char* ext2_nilpotent;
  const char* sym2_nilpotent;
};

inline constexpr std::array<SquareRow, 9> kSmallSquares{{
    {1, "0", "1", "0", "1"},
    {2, "1", "2 1", "1", "2 1"},
    {3, "3", "4 2", "3", "4 1^2"},
    {4, "4 2", "4^2 2", "3^2", "4^2 1^2"},
    {5, "7 3", "8 4 3", "7 3", "8 4 1^3"},
    {6, "8 6 1", "8^2 4 1", "7^2 1", "8^2 2 1^3"},
    {7, "8^2 5", "8^3 4", "7^3", "8^3 1^4"},
    {8, "8^3 4", "8^4 4", "7^4", "8^4 1^4"},
    {9, "15 8^2 5", "16 8^3 5", "15 7^3", "16 8^3 1^5"},
}};

}  // namespace chartwo::ref
