#ifndef HSSEQ_SPLIT_EXTENSION_HPP
#define HSSEQ_SPLIT_EXTENSION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsseq/free_algebra.hpp"
#include "hsseq/lie_algebra.hpp"

namespace hsseq {

// ---------------------------------------------------------------------------
// Kernel families
// ---------------------------------------------------------------------------

/// Finite-dimensional kernel given by structure constants.
struct FiniteDimKernel {
  LieAlgebra algebra;
};

/// Free Lie algebra on the listed generators.
struct FreeKernel {
  std::vector<std::string> generators;
  std::size_t rank() const { return generators.size(); }
};

/// Direct sum of a free Lie algebra with a second summand that is either
/// abelian or free. Coefficients must carry the trivial kernel action.
struct DirectSumKernel {
  std::vector<std::string> free_generators;     // first summand, free
  bool second_is_free = false;
  std::vector<std::string> second_labels;       // abelian basis or free generators
  std::size_t free_rank() const { return free_generators.size(); }
  std::size_t second_size() const { return second_labels.size(); }
};

/// Free product of factors, each abelian or free; the quotient action
/// must preserve every factor. Coefficients must carry the trivial
/// kernel action.
struct FreeProductKernel {
  struct Factor {
    bool is_free = false;
    std::vector<std::string> labels;  // abelian basis or free generators
    std::size_t size() const { return labels.size(); }
  };
  std::vector<Factor> factors;
};

using KernelSpec =
    std::variant<FiniteDimKernel, FreeKernel, DirectSumKernel, FreeProductKernel>;

std::string kernel_family_name(const KernelSpec& k);

// ---------------------------------------------------------------------------
// Action of the quotient on the kernel, per family
// ---------------------------------------------------------------------------

/// Finite-dimensional kernel: one derivation matrix per quotient basis
/// element.
struct FiniteDimAction {
  std::vector<Matrix> phi;
};

/// Free kernel: per quotient basis element, the images of the generators
/// as elements of the free Lie algebra (stored expanded).
struct FreeAction {
  std::vector<std::vector<NcPolynomial>> images;  // [h index][generator]
};

/// Direct sum kernel: per quotient basis element, images of the free
/// generators inside the first summand, a square action on the second
/// summand (a matrix when abelian, generator images when free), and for
/// an abelian second summand an optional cross map sending free
/// generators into it (columns indexed by free generators).
struct DirectSumAction {
  struct PerGenerator {
    std::vector<NcPolynomial> on_free;
    std::variant<Matrix, std::vector<NcPolynomial>> on_second;
    std::optional<Matrix> cross;  // second_size x free_rank, abelian second only
  };
  std::vector<PerGenerator> gens;
};

/// Free product kernel: per quotient basis element, one action per factor
/// (a matrix for abelian factors, generator images for free factors).
struct FreeProductAction {
  using FactorAction = std::variant<Matrix, std::vector<NcPolynomial>>;
  std::vector<std::vector<FactorAction>> gens;  // [h index][factor]
};

using KernelAction =
    std::variant<FiniteDimAction, FreeAction, DirectSumAction, FreeProductAction>;

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

/// The coefficient space: one underlying vector space with an action of
/// the kernel (shape depends on the family; empty means trivial) and an
/// action of the quotient.
struct CoefficientData {
  std::size_t dim = 1;
  std::vector<Matrix> kernel_action;   // per finite-dim basis element or free generator
  std::vector<Matrix> quotient_action; // per quotient basis element
};

// ---------------------------------------------------------------------------
// The split extension itself
// ---------------------------------------------------------------------------

/// A split extension of Lie algebras with coefficients: the kernel (one
/// of four families), the quotient h, the derivation action of h on the
/// kernel, and the coefficient module. Construction validates every
/// axiom the downstream machinery relies on and throws ValidationError.
class SplitExtension {
public:
  SplitExtension(KernelSpec kernel, LieAlgebra quotient, KernelAction action,
                 CoefficientData coefficients);

  const KernelSpec& kernel() const { return kernel_; }
  const LieAlgebra& quotient() const { return h_; }
  const KernelAction& action() const { return action_; }
  const CoefficientData& coefficients() const { return m_; }
  const Field& field() const { return h_.field(); }

  bool kernel_is_finite_dim() const {
    return std::holds_alternative<FiniteDimKernel>(kernel_);
  }
  const LieAlgebra& finite_kernel() const {
    return std::get<FiniteDimKernel>(kernel_).algebra;
  }

  /// True when the kernel acts trivially on the coefficients.
  bool kernel_acts_trivially() const;

  /// Dimension of the kernel when finite, otherwise nothing.
  std::optional<std::size_t> kernel_dim() const;

private:
  KernelSpec kernel_;
  LieAlgebra h_;
  KernelAction action_;
  CoefficientData m_;
};

/// Validation helpers, also used by the document layer for `check`.
ValidationReport validate_extension(const KernelSpec& kernel, const LieAlgebra& h,
                                    const KernelAction& action,
                                    const CoefficientData& coefficients);

// Oracle-side helpers, available for finite-dimensional kernels only.

/// The semidirect product algebra on the ordered basis (kernel, quotient).
LieAlgebra total_algebra(const SplitExtension& ext);
/// The coefficient space as a module over total_algebra(ext).
LieModule total_module(const SplitExtension& ext);
/// The coefficient space as a module over the kernel alone.
LieModule kernel_module(const SplitExtension& ext);
/// The coefficient space as a module over the quotient alone. Requires
/// the kernel action to be trivial (otherwise the quotient action alone
/// is not a module in any canonical way).
LieModule quotient_module(const SplitExtension& ext);

} // namespace hsseq

#endif
