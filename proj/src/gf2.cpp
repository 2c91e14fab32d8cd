#include "fc/gf2.hpp"

namespace fc::gf2 {

Echelon rref(std::vector<BitVec> rows, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !rows[piv].get(c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != r && rows[k].get(c)) rows[k] ^= rows[r];
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<BitVec> kernel(const std::vector<BitVec>& rows, std::size_t ncols) {
  Echelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<BitVec> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(ncols);
    v.set(f);
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (e.rows[k].get(f)) v.set(e.pivots[k]);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const std::vector<BitVec>& rows, std::size_t ncols) {
  return rref(rows, ncols).rows.size();
}

}  // namespace fc::gf2
