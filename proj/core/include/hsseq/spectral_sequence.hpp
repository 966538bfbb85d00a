#ifndef HSSEQ_SPECTRAL_SEQUENCE_HPP
#define HSSEQ_SPECTRAL_SEQUENCE_HPP

#include <map>
#include <string>
#include <vector>

#include "hsseq/coefficient_rows.hpp"

namespace hsseq {

/// The first-quadrant double complex C^{p,q} = Hom(Lambda^p h, R^q) of a
/// split extension: horizontal differentials are the cochain differentials
/// of the quotient with coefficients in each row, vertical ones are the
/// row differentials lifted blockwise and twisted by (-1)^p. Totalized
/// per degree with blocks ordered by ascending column index p, which
/// makes the column filtration a span of trailing coordinates.
class DoubleComplex {
public:
  DoubleComplex(LieAlgebra h, CoefficientRows rows);

  const LieAlgebra& quotient() const { return h_; }
  const CoefficientRows& rows() const { return rows_; }
  std::size_t h_dim() const { return h_.dim(); }
  std::size_t max_q() const { return rows_.max_q; }
  /// Top nonzero total degree.
  std::size_t top_degree() const { return h_dim() + max_q(); }

  std::size_t cell_dim(std::size_t p, std::size_t q) const;
  const Matrix& horizontal(std::size_t p, std::size_t q) const { return d_h_[p][q]; }
  const Matrix& vertical(std::size_t p, std::size_t q) const { return d_v_[p][q]; }

  struct Layout {
    std::size_t ambient = 0;
    std::vector<std::size_t> block_p;    // ascending
    std::vector<std::size_t> offsets;    // parallel to block_p
  };
  const Layout& layout(std::size_t n) const;
  /// Total differential from degree n to degree n+1.
  const Matrix& total_differential(std::size_t n) const;

  /// Coordinate offset of block p inside degree n; the block must exist.
  std::size_t block_offset(std::size_t n, std::size_t p) const;

private:
  LieAlgebra h_;
  CoefficientRows rows_;
  std::vector<std::vector<Matrix>> d_h_;  // [p][q]
  std::vector<std::vector<Matrix>> d_v_;  // [p][q]
  std::vector<Layout> layouts_;           // n = 0 .. top+1
  std::vector<Matrix> total_d_;           // n = 0 .. top
};

DoubleComplex build_double_complex(const SplitExtension& ext);

/// d_h^2 = 0 rowwise, d_v^2 = 0 columnwise, anticommutation, and the
/// total differential squaring to zero. Throws InternalInvariantError.
void check_double_complex_invariants(const DoubleComplex& dc);

/// Betti numbers of the totalized complex, degrees 0 .. top.
std::vector<std::size_t> total_cohomology(const DoubleComplex& dc);
/// Same computation on the transposed double complex (row-major blocks);
/// the abutment cannot depend on the totalization order.
std::vector<std::size_t> transposed_total_cohomology(const DoubleComplex& dc);

struct PageEntry {
  std::size_t dim = 0;
  Subspace cycles;    // Z_r at this bidegree, inside the total-degree space
  Subspace divisor;   // Z_{r-1}(p+1, q-1) + B_{r-1}(p, q)
  Matrix d;           // E_r^{p,q} -> E_r^{p+r, q-r+1}
};

class SpectralPage {
public:
  SpectralPage(std::size_t r, std::size_t p_max, std::size_t q_max)
      : r_(r), p_max_(p_max), q_max_(q_max),
        entries_((p_max + 1) * (q_max + 1)) {}

  std::size_t r() const { return r_; }
  std::size_t p_max() const { return p_max_; }
  std::size_t q_max() const { return q_max_; }

  const PageEntry& at(std::size_t p, std::size_t q) const {
    return entries_[p * (q_max_ + 1) + q];
  }
  PageEntry& at(std::size_t p, std::size_t q) { return entries_[p * (q_max_ + 1) + q]; }

  /// dims[p][q].
  std::vector<std::vector<std::size_t>> dimension_table() const;
  bool same_dimensions(const SpectralPage& other) const;

private:
  std::size_t r_, p_max_, q_max_;
  std::vector<PageEntry> entries_;
};

/// Shared cache for the filtration subspace calculus; pages for several
/// r values reuse the Z and B subspaces.
class SpectralWorkspace {
public:
  explicit SpectralWorkspace(const DoubleComplex& dc) : dc_(dc) {}

  const DoubleComplex& complex() const { return dc_; }

  /// F^s of the total degree n space (full for s <= 0, zero past the top).
  Subspace filtration(long s, std::size_t n) const;
  /// Z_r at column p, total degree n: F^p intersected with the preimage
  /// of F^{p+r} under the total differential.
  const Subspace& cycles(long r, long p, std::size_t n);
  /// B_r at column p, total degree n: F^p intersected with the image of
  /// F^{p-r} from the previous total degree.
  const Subspace& boundaries(long r, long p, std::size_t n);
  /// The subspace E_r is taken modulo.
  Subspace divisor(long r, long p, std::size_t n);

  SpectralPage page(std::size_t r);

  /// Page index from which everything is guaranteed stable.
  std::size_t stabilization_page() const { return dc_.h_dim() + dc_.max_q() + 2; }

private:
  const DoubleComplex& dc_;
  std::map<std::tuple<long, long, std::size_t>, Subspace> z_cache_, b_cache_;
};

SpectralPage page(const DoubleComplex& dc, std::size_t r);

struct DifferentialRecord {
  std::size_t r, p, q, rank;
};

struct CollapseInfo {
  std::size_t length = 2;        // smallest t with d_r = 0 for all r >= t
  std::size_t collapse_page = 2; // equal to length; reported separately
  std::vector<DifferentialRecord> census;  // every nonzero d_r, r >= 2
  std::vector<SpectralPage> pages;         // r = 2 .. stabilization page
};

CollapseInfo length_and_collapse(const DoubleComplex& dc);

// ---------------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------------

struct TheoremCheck {
  std::string id;
  std::string statement;
  bool hypotheses_met = false;
  bool pass = false;         // meaningful only when hypotheses_met
  std::string details;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool any_violation() const;
};

/// Runs every verifiable statement against the extension: the E_2
/// identification, convergence to the cohomology of the total algebra
/// (finite kernels), collapse at the second page for the supported kernel
/// families, the zero-row vanishing pattern, and the length bound with
/// its edge containment. Inapplicable statements are reported with
/// hypotheses_met = false, never skipped silently.
TheoremReport verify_theorems(const SplitExtension& ext);

/// dim H^p(h, H^q(n, M)) for p = 0..dim h, q = 0..max_q, computed on the
/// module side (kernel cochain complex for finite kernels, row cohomology
/// otherwise) rather than through the filtration.
std::vector<std::vector<std::size_t>> e2_reference_grid(const SplitExtension& ext);

/// H^q(n, M) as modules over the quotient, via the kernel cochain complex
/// when the kernel is finite-dimensional and via the rows otherwise.
std::vector<LieModule> kernel_cohomology_modules(const SplitExtension& ext);

} // namespace hsseq

#endif
