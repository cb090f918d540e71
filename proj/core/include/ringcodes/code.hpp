#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ringcodes/bigint.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

/// A linear code: a submodule of R^n given by generators.
///
/// The code keeps its standard-form generator matrix in permuted coordinates
/// together with the column permutation; everything that hands out vectors
/// (generator_matrix(), parity_check(), codeword enumeration) reports them in
/// the original coordinates.
class LinearCode {
 public:
  using Value = ChainRing::Value;

  /// Rows must all have length n. An empty list gives the zero code.
  static LinearCode from_generators(ChainRing ring, std::size_t n,
                                    const std::vector<std::vector<std::uint64_t>>& rows);
  static LinearCode from_matrix(const RingMatrix& generators);

  const ChainRing& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return n_; }
  const StandardForm& standard_form() const noexcept { return std_; }
  const TypeProfile& profile() const noexcept { return std_.profile; }
  std::size_t rank() const noexcept { return std_.profile.rank(); }
  std::size_t free_rank() const noexcept { return std_.profile.free_rank(); }
  bool is_free() const noexcept { return rank() == free_rank(); }

  /// Standard-form rows mapped back to original coordinates.
  RingMatrix generator_matrix() const { return std_.permutation.unapply(std_.reduced); }

  /// (n - k0) x n parity-check matrix in original coordinates. Computed once
  /// and shared between copies; safe to call concurrently.
  const RingMatrix& parity_check() const;

  /// p^(sum (s-i) k_i).
  BigInt cardinality() const { return ringcodes::cardinality(ring_, std_.profile); }

  /// Membership test in original coordinates (H v^T == 0).
  bool contains(std::span<const Value> v) const;

 private:
  LinearCode(ChainRing ring, std::size_t n, StandardForm form);

  struct ParityCache {
    std::once_flag once;
    std::optional<RingMatrix> matrix;
  };

  ChainRing ring_;
  std::size_t n_;
  StandardForm std_;
  std::shared_ptr<ParityCache> parity_;
};

/// Systematic parity-check matrix of the standard form, columns restored to
/// original order. Throws InvariantViolation if G * H^T != 0.
RingMatrix build_parity_check(const LinearCode& code);

inline const RingMatrix& parity_check(const LinearCode& code) { return code.parity_check(); }
inline BigInt cardinality(const LinearCode& code) { return code.cardinality(); }

/// The code spanned by the rows of the parity-check matrix. Throws
/// InvariantViolation if its type is not (n - K, k_{s-1}, ..., k_1).
LinearCode dual(const LinearCode& code);

/// {v in R^n : H v^T = 0} for an r x n matrix H.
LinearCode kernel_code(const RingMatrix& h);

/// Same ambient space and same set of codewords.
bool same_codewords(const LinearCode& a, const LinearCode& b);

enum class CodeClass { MDS, MDR, NearMDS, NearMDR, AMDR, Other };

std::string_view class_name(CodeClass c);

struct CodeProfile {
  std::size_t d;
  std::size_t d_dual;
  std::size_t defect;
  std::size_t dual_defect;
  std::size_t sigma;  // defect + dual_defect
  CodeClass code_class;
};

/// Singleton defects and the resulting class. d and d_dual must be the true
/// minimum distances; by convention the zero code has distance n + 1.
/// Throws InconsistentInputs if d > n - K + 1 or d_dual > k0 + 1.
///
/// Classes are checked in the order MDS, MDR, NearMDS, NearMDR, AMDR: a free
/// code with both defects 1 is reported as NearMDS rather than NearMDR.
CodeProfile classify(const LinearCode& code, std::size_t d, std::size_t d_dual);

}  // namespace ringcodes
