#include "hsseq/exterior.hpp"

#include <algorithm>

#include "hsseq/errors.hpp"

namespace hsseq {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(std::size_t n_dim, std::size_t degree) : n_(n_dim), q_(degree) {
  if (degree > n_dim)
    throw DimensionError("exterior degree " + std::to_string(degree) +
                         " out of range for dimension " + std::to_string(n_dim));
  std::vector<std::uint32_t> cur(q_);
  for (std::size_t i = 0; i < q_; ++i) cur[i] = static_cast<std::uint32_t>(i);
  monomials_.reserve(binomial(n_, q_));
  while (true) {
    monomials_.push_back(cur);
    if (q_ == 0) break;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(q_) - 1;
    while (i >= 0 && cur[i] == n_ - q_ + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::size_t j = i + 1; j < q_; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::size_t ExteriorBasis::index_of(const std::vector<std::uint32_t>& tuple) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), tuple);
  if (it == monomials_.end() || *it != tuple)
    throw DimensionError("tuple is not a basis monomial");
  return static_cast<std::size_t>(it - monomials_.begin());
}

ExteriorBasis::Sorted ExteriorBasis::sort_tuple(std::vector<std::uint32_t> tuple) const {
  Sorted out;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j] < tuple[j - 1]; --j) {
      std::swap(tuple[j], tuple[j - 1]);
      out.sign = -out.sign;
    }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1]) {
      out.zero = true;
      return out;
    }
  out.index = index_of(tuple);
  return out;
}

} // namespace hsseq
