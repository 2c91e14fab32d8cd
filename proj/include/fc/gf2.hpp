#pragma once

#include <cstddef>
#include <vector>

#include "fc/bitvec.hpp"

namespace fc::gf2 {

struct Echelon {
  std::vector<BitVec> rows;          // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Reduced row echelon form. Columns are scanned left to right (index 0 first);
// among candidate rows the lowest-index one becomes the pivot row.
Echelon rref(std::vector<BitVec> rows, std::size_t ncols);

// Basis of { v : row . v = 0 for every row }.
std::vector<BitVec> kernel(const std::vector<BitVec>& rows, std::size_t ncols);

std::size_t rank(const std::vector<BitVec>& rows, std::size_t ncols);

}  // namespace fc::gf2
