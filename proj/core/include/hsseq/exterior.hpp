#ifndef HSSEQ_EXTERIOR_HPP
#define HSSEQ_EXTERIOR_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace hsseq {

std::size_t binomial(std::size_t n, std::size_t k);

/// The ordered monomial basis of the q-th exterior power of a space with
/// n_dim basis vectors: strictly increasing index tuples in lexicographic
/// order.
class ExteriorBasis {
public:
  ExteriorBasis(std::size_t n_dim, std::size_t degree);

  std::size_t space_dim() const { return n_; }
  std::size_t degree() const { return q_; }
  std::size_t count() const { return monomials_.size(); }
  const std::vector<std::vector<std::uint32_t>>& monomials() const { return monomials_; }
  const std::vector<std::uint32_t>& monomial(std::size_t i) const { return monomials_[i]; }

  /// Position of a strictly increasing tuple.
  std::size_t index_of(const std::vector<std::uint32_t>& tuple) const;

  struct Sorted {
    bool zero = false;     // repeated index
    std::size_t index = 0; // position of the sorted monomial
    int sign = 1;          // parity of the sorting permutation
  };
  /// Sorts an arbitrary tuple into the basis, tracking the sign.
  Sorted sort_tuple(std::vector<std::uint32_t> tuple) const;

private:
  std::size_t n_, q_;
  std::vector<std::vector<std::uint32_t>> monomials_;
};

} // namespace hsseq

#endif
