#pragma once

// Linear identities satisfied by Hamming weight distributions of codes over
// chain rings, and the solvers and closed forms built on them.
//
// Notation: q = p^s is the ring size, n the length, K the rank, k0 the free
// rank, d and d' the minimum distances of C and of its dual.
//
// Subset-counting relation, valid for n - d' < nu <= n:
//
//   sum_{l=0}^{nu} binom(n-l, nu-l) A_l = binom(n, nu) |C| / q^(n-nu)
//
// The d' equations nu = n-d'+1..n form a truncated Pascal system whose
// maximal minors are nonzero, so any d' unknown A_l are determined by the
// rest.
//
// Binomial power moments, valid for 0 <= nu <= n:
//
//   sum_j binom(j, nu) A_j = |C| / q^nu sum_{j=0}^{nu} (-1)^j binom(n-j, n-nu) (q-1)^(nu-j) A'_j
//
// and for nu < d' the right side collapses to |C| / q^nu binom(n, nu) (q-1)^nu
// (the Pless form).
//
// All arithmetic is exact.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ringcodes/bigint.hpp"
#include "ringcodes/code.hpp"
#include "ringcodes/enumerate.hpp"
#include "ringcodes/matrix.hpp"

namespace ringcodes {

struct IdentityContext {
  std::size_t n = 0;
  unsigned p = 0;
  unsigned s = 0;
  BigInt cardinality;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> free_rank;
  std::optional<std::size_t> d;
  std::optional<std::size_t> d_dual;

  static IdentityContext of(const LinearCode& code, std::optional<std::size_t> d = {},
                            std::optional<std::size_t> d_dual = {});
  static IdentityContext of(const WeightDistribution& distribution, std::optional<std::size_t> d = {},
                            std::optional<std::size_t> d_dual = {});

  BigInt ring_size() const { return ipow(BigInt(p), s); }
  /// |C| / q^(n - nu).
  Rational ratio(std::size_t nu) const;
  DistributionContext distribution_context() const { return {p, s, cardinality, rank, free_rank}; }
};

/// Known entries of a weight distribution, index -> A_index.
using KnownWeights = std::map<std::size_t, BigInt>;

/// Dual distribution via W_{C'}(X, Y) = W_C(X + (q-1)Y, X - Y) / |C|.
/// Throws InconsistentInputs if a coefficient is non-integral or negative,
/// or if |C| does not divide q^n.
WeightDistribution macwilliams_transform(const WeightDistribution& distribution);

struct RelationCheck {
  std::size_t nu = 0;
  BigInt lhs;
  Rational rhs;
  bool holds = false;
  /// nu > n - d' with d' known: the relation is a theorem here.
  bool required = false;

  Rational difference() const { return Rational(lhs) - rhs; }
};

/// Evaluates the subset-counting relation at nu. With validate set, throws
/// InvalidArgument when d' is unknown and InconsistentInputs when the
/// relation fails although it is required.
RelationCheck check_new_relation(const WeightDistribution& distribution, std::size_t nu,
                                 std::optional<std::size_t> d_dual = {}, bool validate = false);

struct DoubleCount {
  std::size_t nu = 0;
  BigInt kernel_sum;    // sum over nu-subsets I of |ker H_I|
  BigInt weighted_sum;  // sum_{l <= nu} binom(n-l, nu-l) A_l
  bool holds() const { return kernel_sum == weighted_sum; }
};

/// Both sides of the double count behind the subset-counting relation. This
/// equality holds for every nu, with no distance hypothesis.
DoubleCount double_count_check(const LinearCode& code, std::size_t nu, const WeightDistribution& distribution,
                               const SubsetOptions& options = {});
DoubleCount double_count_check(const LinearCode& code, std::size_t nu, const SubsetOptions& subsets = {},
                               const EnumerationOptions& enumeration = {});

struct MomentCheck {
  std::size_t nu = 0;
  BigInt lhs;
  Rational rhs;
  bool holds = false;
};

/// Full binomial power moment; needs both distributions.
MomentCheck power_moment(const WeightDistribution& distribution, const WeightDistribution& dual_distribution,
                         std::size_t nu);

/// Pless form; throws InvalidArgument unless nu < d_dual.
MomentCheck pless_moment(const WeightDistribution& distribution, std::size_t nu, std::size_t d_dual);

/// The truncated Pascal system: rows nu = n-d'+1..n, columns l = 0..n.
struct PascalSystem {
  std::vector<std::size_t> nus;
  std::vector<std::vector<BigInt>> coefficients;  // binom(n-l, nu-l)
  std::vector<BigInt> rhs;                        // binom(n, nu) |C| / q^(n-nu)
};

/// Throws InvalidArgument without d'; InconsistentInputs if a right-hand
/// side is not an integer.
PascalSystem pascal_system(const IdentityContext& context);

/// Completes a distribution from the truncated Pascal system.
///
/// A_0 = 1 is always known; with d set, A_1..A_{d-1} = 0 are known too. The
/// remaining unknowns must number at most d'. Throws Underdetermined if more
/// are missing, InconsistentInputs if knowns contradict each other or the
/// unique solution is non-integral or negative.
WeightDistribution solve_distribution(const IdentityContext& context, const KnownWeights& known);

/// Same contract as solve_distribution, using the Pless equations
/// nu = 0..d'-1 instead.
WeightDistribution solve_distribution_pless(const IdentityContext& context, const KnownWeights& known);

/// Weight distribution of a free MDS code of length n and rank K over a ring
/// with q = p^s elements: d = n - K + 1 and
///
///   A_w = binom(n, w) sum_{j=0}^{w-d} (-1)^j binom(w, j) (q^(w-d+1-j) - 1),  w >= d.
///
/// The entries always total q^K; when no MDS code with these parameters
/// exists some of them are negative.
WeightDistribution mds_distribution(std::size_t n, std::size_t K, unsigned p, unsigned s);

enum class SmallDefectMode { SolverOnly, CrossCheck };

struct SmallDefectResult {
  WeightDistribution distribution;
  /// Closed-form inversion result (CrossCheck mode, when the knowns are
  /// exactly A_d..A_{n-d'}).
  std::optional<WeightDistribution> closed_form;
  /// Indices where the closed form disagrees with the solver.
  std::vector<std::size_t> discrepancies;
};

/// Distribution of an MDR (defect 0) or AMDR (defect 1) code.
///
/// The solver result is authoritative. In CrossCheck mode the closed form is
/// also evaluated: with m = n - d' and A_0..A_m known, the system for
/// A_{m+1}..A_n is lower unitriangular with entries binom(d'-1-j, i-j), whose
/// inverse is (-1)^(i-j) binom(d'-1-j, i-j), so
///
///   A_{m+1+i} = sum_{j=0}^{i} (-1)^(i-j) binom(d'-1-j, i-j) r_{m+1+j},
///   r_nu = binom(n, nu) |C| / q^(n-nu) - sum_{l=0}^{m} binom(n-l, nu-l) A_l.
///
/// For an MDR code d' = k0 - sigma + 1, so the matrix is the Pascal matrix
/// [binom(k0 - sigma - j, i - j)], i, j = 0..k0 - sigma, in which the MDR and
/// AMDR closed forms are usually stated. Those statements also carry a tail
/// sum over A_{n+K+1+h} whose indices run past n; it vanishes here and is
/// not evaluated.
///
/// Requires d, d' and the rank in the context; throws InvalidArgument when
/// the defect n + 1 - K - d is not 0 or 1.
SmallDefectResult small_defect_distribution(const IdentityContext& context, const KnownWeights& known,
                                            SmallDefectMode mode = SmallDefectMode::SolverOnly);

}  // namespace ringcodes
