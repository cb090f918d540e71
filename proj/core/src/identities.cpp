#include "ringcodes/identities.hpp"

#include "ringcodes/detail/parallel.hpp"
#include "ringcodes/error.hpp"

namespace ringcodes {

namespace {

using Poly = std::vector<BigInt>;  // coefficients, lowest degree first

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (c0 + c1 Y)^e
Poly linear_power(const BigInt& c0, const BigInt& c1, std::size_t e) {
  Poly out(e + 1);
  for (std::size_t k = 0; k <= e; ++k)
    out[k] = binom(static_cast<std::int64_t>(e), static_cast<std::int64_t>(k)) * ipow(c0, e - k) * ipow(c1, k);
  return out;
}

BigInt binom_u(std::size_t n, std::size_t k) {
  return binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
}

// sum_{l=0}^{nu} binom(n-l, nu-l) A_l
BigInt subset_weighted_sum(const WeightDistribution& a, std::size_t nu) {
  const std::size_t n = a.length();
  BigInt lhs = 0;
  for (std::size_t l = 0; l <= nu && l <= n; ++l) lhs += binom_u(n - l, nu - l) * a[l];
  return lhs;
}

// Exact Gauss-Jordan elimination on an augmented system with `unknowns`
// columns. Throws Underdetermined on rank deficiency and InconsistentInputs
// when a reduced row reads 0 = b with b != 0.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                  std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[rank]);
    std::swap(b[pr], b[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < unknowns; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) throw InconsistentInputs("the known weights contradict the linear system");
  if (rank < unknowns)
    throw Underdetermined("the linear system has rank " + std::to_string(rank) + " for " + std::to_string(unknowns) +
                          " unknowns");
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

// Fills A_0 = 1, A_1..A_{d-1} = 0 and the caller's knowns.
std::vector<std::optional<BigInt>> seed_values(const IdentityContext& ctx, const KnownWeights& known) {
  const std::size_t n = ctx.n;
  std::vector<std::optional<BigInt>> value(n + 1);
  auto set = [&](std::size_t i, const BigInt& v) {
    if (i > n) throw InvalidArgument("known index " + std::to_string(i) + " exceeds the length " + std::to_string(n));
    if (value[i] && *value[i] != v)
      throw InconsistentInputs("A_" + std::to_string(i) + " given as " + v.str() + " but must be " + value[i]->str());
    value[i] = v;
  };
  set(0, 1);
  if (ctx.d) {
    if (*ctx.d < 1 || *ctx.d > n + 1) throw InvalidArgument("minimum distance out of range");
    for (std::size_t i = 1; i < *ctx.d && i <= n; ++i) set(i, 0);
  }
  for (const auto& [i, v] : known) {
    if (v < 0) throw InconsistentInputs("A_" + std::to_string(i) + " is negative");
    set(i, v);
  }
  if (ctx.d && *ctx.d <= n && value[*ctx.d] && *value[*ctx.d] == 0)
    throw InconsistentInputs("A_d must be positive");
  return value;
}

struct Equations {
  std::vector<std::vector<BigInt>> coefficients;  // rows x (n+1)
  std::vector<Rational> rhs;
};

WeightDistribution complete_distribution(const IdentityContext& ctx, const KnownWeights& known,
                                         const Equations& eq, std::size_t max_unknowns) {
  const std::size_t n = ctx.n;
  const auto value = seed_values(ctx, known);
  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i <= n; ++i)
    if (!value[i]) unknown.push_back(i);
  if (unknown.size() > max_unknowns)
    throw Underdetermined(std::to_string(unknown.size()) + " unknown weights but only " + std::to_string(max_unknowns) +
                          " independent equations; supply " + std::to_string(unknown.size() - max_unknowns) +
                          " more known value(s)");

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t r = 0; r < eq.coefficients.size(); ++r) {
    Rational rhs = eq.rhs[r];
    std::vector<Rational> row;
    row.reserve(unknown.size());
    for (std::size_t l = 0; l <= n; ++l)
      if (value[l]) rhs -= Rational(eq.coefficients[r][l] * *value[l]);
    for (auto l : unknown) row.emplace_back(eq.coefficients[r][l]);
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  const auto x = solve_exact(std::move(a), std::move(b), unknown.size());

  std::vector<BigInt> counts(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    if (value[i]) counts[i] = *value[i];
  for (std::size_t u = 0; u < unknown.size(); ++u) {
    if (!is_integer(x[u]) || x[u] < 0)
      throw InconsistentInputs("no code has these parameters: A_" + std::to_string(unknown[u]) + " = " +
                               to_decimal(x[u]));
    counts[unknown[u]] = boost::multiprecision::numerator(x[u]);
  }
  return {ctx.distribution_context(), std::move(counts)};
}

std::size_t require_d_dual(const IdentityContext& ctx) {
  if (!ctx.d_dual) throw InvalidArgument("the dual minimum distance is required");
  if (*ctx.d_dual < 1 || *ctx.d_dual > ctx.n + 1) throw InvalidArgument("dual minimum distance out of range");
  return *ctx.d_dual;
}

}  // namespace

// ---------------------------------------------------------------------------

IdentityContext IdentityContext::of(const LinearCode& code, std::optional<std::size_t> d,
                                    std::optional<std::size_t> d_dual) {
  IdentityContext ctx;
  ctx.n = code.length();
  ctx.p = code.ring().p();
  ctx.s = code.ring().s();
  ctx.cardinality = code.cardinality();
  ctx.rank = code.rank();
  ctx.free_rank = code.free_rank();
  ctx.d = d;
  ctx.d_dual = d_dual;
  return ctx;
}

IdentityContext IdentityContext::of(const WeightDistribution& distribution, std::optional<std::size_t> d,
                                    std::optional<std::size_t> d_dual) {
  const auto& c = distribution.context();
  IdentityContext ctx;
  ctx.n = distribution.length();
  ctx.p = c.p;
  ctx.s = c.s;
  ctx.cardinality = c.cardinality;
  ctx.rank = c.rank;
  ctx.free_rank = c.free_rank;
  ctx.d = d;
  ctx.d_dual = d_dual;
  return ctx;
}

Rational IdentityContext::ratio(std::size_t nu) const {
  return Rational(cardinality, ipow(ring_size(), n - nu));
}

WeightDistribution macwilliams_transform(const WeightDistribution& distribution) {
  const auto& ctx = distribution.context();
  const std::size_t n = distribution.length();
  const BigInt q = ipow(BigInt(ctx.p), ctx.s);
  if (ctx.cardinality <= 0) throw InconsistentInputs("code size must be positive");

  // Dehomogenise at X = 1: sum_i A_i (1 + (q-1)Y)^(n-i) (1 - Y)^i.
  Poly total(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (distribution[i] == 0) continue;
    const Poly term = poly_mul(linear_power(1, q - 1, n - i), linear_power(1, -1, i));
    for (std::size_t j = 0; j <= n; ++j) total[j] += distribution[i] * term[j];
  }

  const BigInt q_n = ipow(q, n);
  if (q_n % ctx.cardinality != 0)
    throw InconsistentInputs("|C| = " + ctx.cardinality.str() + " does not divide q^n");
  DistributionContext dual_ctx{ctx.p, ctx.s, q_n / ctx.cardinality, std::nullopt, std::nullopt};
  if (ctx.free_rank) dual_ctx.rank = n - *ctx.free_rank;
  if (ctx.rank) dual_ctx.free_rank = n - *ctx.rank;

  std::vector<BigInt> counts(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (total[j] % ctx.cardinality != 0 || total[j] < 0)
      throw InconsistentInputs("MacWilliams transform gives a non-integral or negative A'_" + std::to_string(j) +
                               "; the input is not the distribution of a linear code");
    counts[j] = total[j] / ctx.cardinality;
  }
  return {std::move(dual_ctx), std::move(counts)};
}

RelationCheck check_new_relation(const WeightDistribution& distribution, std::size_t nu,
                                 std::optional<std::size_t> d_dual, bool validate) {
  const std::size_t n = distribution.length();
  if (nu > n) throw InvalidArgument("nu must lie in [0, n]");
  if (validate && !d_dual) throw InvalidArgument("threshold validation needs the dual minimum distance");
  const auto ctx = IdentityContext::of(distribution);

  RelationCheck out;
  out.nu = nu;
  out.lhs = subset_weighted_sum(distribution, nu);
  out.rhs = Rational(binom_u(n, nu)) * ctx.ratio(nu);
  out.holds = Rational(out.lhs) == out.rhs;
  out.required = d_dual.has_value() && nu + *d_dual > n;
  if (validate && out.required && !out.holds)
    throw InconsistentInputs("subset-counting relation fails at nu=" + std::to_string(nu) + ": " + out.lhs.str() +
                             " != " + to_decimal(out.rhs));
  return out;
}

DoubleCount double_count_check(const LinearCode& code, std::size_t nu, const WeightDistribution& distribution,
                               const SubsetOptions& options) {
  const std::size_t n = code.length();
  if (nu > n) throw InvalidArgument("nu must lie in [0, n]");
  if (distribution.length() != n) throw InvalidArgument("distribution length does not match the code");
  const BigInt subsets = binom_u(n, nu);
  if (subsets > options.cap)
    throw CapExceeded("binom(" + std::to_string(n) + "," + std::to_string(nu) + ") = " + subsets.str() +
                      " subsets exceeds the cap of " + std::to_string(options.cap));

  const auto& h = code.parity_check();
  DoubleCount out;
  out.nu = nu;
  out.kernel_sum = detail::parallel_subsets(
      n, nu, options.workers, BigInt(0),
      [&](const std::vector<std::size_t>& subset, BigInt& acc) {
        acc += kernel_code(submatrix(h, subset)).cardinality();
      },
      [](BigInt& into, const BigInt& from) { into += from; });
  out.weighted_sum = subset_weighted_sum(distribution, nu);
  return out;
}

DoubleCount double_count_check(const LinearCode& code, std::size_t nu, const SubsetOptions& subsets,
                               const EnumerationOptions& enumeration) {
  return double_count_check(code, nu, weight_distribution(code, enumeration), subsets);
}

MomentCheck power_moment(const WeightDistribution& distribution, const WeightDistribution& dual_distribution,
                         std::size_t nu) {
  const std::size_t n = distribution.length();
  if (nu > n) throw InvalidArgument("nu must lie in [0, n]");
  if (dual_distribution.length() != n) throw InvalidArgument("dual distribution has a different length");
  const auto ctx = IdentityContext::of(distribution);
  const BigInt q = ctx.ring_size();

  MomentCheck out;
  out.nu = nu;
  out.lhs = 0;
  for (std::size_t j = nu; j <= n; ++j) out.lhs += binom_u(j, nu) * distribution[j];
  BigInt sum = 0;
  for (std::size_t j = 0; j <= nu; ++j) {
    BigInt term = binom_u(n - j, n - nu) * ipow(q - 1, nu - j) * dual_distribution[j];
    sum += j % 2 == 0 ? term : BigInt(-term);
  }
  out.rhs = Rational(ctx.cardinality, ipow(q, nu)) * Rational(sum);
  out.holds = Rational(out.lhs) == out.rhs;
  return out;
}

MomentCheck pless_moment(const WeightDistribution& distribution, std::size_t nu, std::size_t d_dual) {
  const std::size_t n = distribution.length();
  if (nu >= d_dual)
    throw InvalidArgument("the Pless form needs nu < d_dual (nu=" + std::to_string(nu) +
                          ", d_dual=" + std::to_string(d_dual) + ")");
  if (nu > n) throw InvalidArgument("nu must lie in [0, n]");
  const auto ctx = IdentityContext::of(distribution);
  const BigInt q = ctx.ring_size();

  MomentCheck out;
  out.nu = nu;
  out.lhs = 0;
  for (std::size_t j = nu; j <= n; ++j) out.lhs += binom_u(j, nu) * distribution[j];
  out.rhs = Rational(ctx.cardinality, ipow(q, nu)) * Rational(binom_u(n, n - nu) * ipow(q - 1, nu));
  out.holds = Rational(out.lhs) == out.rhs;
  return out;
}

PascalSystem pascal_system(const IdentityContext& ctx) {
  const std::size_t n = ctx.n;
  const std::size_t dd = require_d_dual(ctx);
  PascalSystem sys;
  for (std::size_t nu = n + 1 - dd; nu <= n; ++nu) {
    std::vector<BigInt> row(n + 1);
    for (std::size_t l = 0; l <= n; ++l) row[l] = l <= nu ? binom_u(n - l, nu - l) : BigInt(0);
    const Rational rhs = Rational(binom_u(n, nu)) * ctx.ratio(nu);
    if (!is_integer(rhs))
      throw InconsistentInputs("binom(n,nu) |C| / q^(n-nu) is not an integer at nu=" + std::to_string(nu));
    sys.nus.push_back(nu);
    sys.coefficients.push_back(std::move(row));
    sys.rhs.push_back(boost::multiprecision::numerator(rhs));
  }
  return sys;
}

WeightDistribution solve_distribution(const IdentityContext& ctx, const KnownWeights& known) {
  const auto sys = pascal_system(ctx);
  Equations eq{sys.coefficients, {}};
  for (const auto& b : sys.rhs) eq.rhs.emplace_back(b);
  return complete_distribution(ctx, known, eq, *ctx.d_dual);
}

WeightDistribution solve_distribution_pless(const IdentityContext& ctx, const KnownWeights& known) {
  const std::size_t n = ctx.n;
  const std::size_t dd = require_d_dual(ctx);
  const BigInt q = ctx.ring_size();
  Equations eq;
  for (std::size_t nu = 0; nu < dd && nu <= n; ++nu) {
    std::vector<BigInt> row(n + 1);
    for (std::size_t j = 0; j <= n; ++j) row[j] = binom_u(j, nu);
    eq.coefficients.push_back(std::move(row));
    eq.rhs.push_back(Rational(ctx.cardinality, ipow(q, nu)) * Rational(binom_u(n, nu) * ipow(q - 1, nu)));
  }
  return complete_distribution(ctx, known, eq, dd);
}

WeightDistribution mds_distribution(std::size_t n, std::size_t K, unsigned p, unsigned s) {
  if (K < 1 || K > n) throw InvalidArgument("MDS distribution needs 1 <= K <= n");
  const BigInt q = ipow(BigInt(p), s);
  const std::size_t d = n - K + 1;
  std::vector<BigInt> counts(n + 1, 0);
  counts[0] = 1;
  for (std::size_t w = d; w <= n; ++w) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= w - d; ++j) {
      BigInt term = binom_u(w, j) * (ipow(q, w - d + 1 - j) - 1);
      sum += j % 2 == 0 ? term : BigInt(-term);
    }
    counts[w] = binom_u(n, w) * sum;
  }
  return {DistributionContext{p, s, ipow(q, K), K, K}, std::move(counts)};
}

SmallDefectResult small_defect_distribution(const IdentityContext& ctx, const KnownWeights& known,
                                            SmallDefectMode mode) {
  if (!ctx.d || !ctx.rank) throw InvalidArgument("small-defect completion needs d and the rank");
  const std::size_t n = ctx.n;
  const std::size_t d = *ctx.d;
  const std::size_t dd = require_d_dual(ctx);
  if (d + *ctx.rank > n + 1 || n + 1 - *ctx.rank - d > 1)
    throw InvalidArgument("Singleton defect must be 0 (MDR) or 1 (AMDR)");

  SmallDefectResult out{solve_distribution(ctx, known), std::nullopt, {}};
  if (mode == SmallDefectMode::SolverOnly) return out;

  // Closed form needs exactly A_0..A_m, m = n - d'.
  const std::size_t m = n - dd;
  std::vector<BigInt> counts(n + 1, 0);
  counts[0] = 1;
  for (std::size_t l = d; l <= m; ++l) {
    const auto it = known.find(l);
    if (it == known.end()) return out;
    counts[l] = it->second;
  }
  const std::size_t top = dd - 1;
  std::vector<Rational> r(dd);
  for (std::size_t i = 0; i < dd; ++i) {
    const std::size_t nu = m + 1 + i;
    Rational acc = Rational(binom_u(n, nu)) * ctx.ratio(nu);
    for (std::size_t l = 0; l <= m; ++l) acc -= Rational(binom_u(n - l, nu - l) * counts[l]);
    r[i] = acc;
  }
  bool integral = true;
  for (std::size_t i = 0; i < dd; ++i) {
    Rational a = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational term = Rational(binom_u(top - j, i - j)) * r[j];
      a += (i - j) % 2 == 0 ? term : Rational(-term);
    }
    if (!is_integer(a)) integral = false;
    counts[m + 1 + i] = boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a);
  }
  out.closed_form.emplace(ctx.distribution_context(), std::move(counts));
  for (std::size_t i = 0; i <= n; ++i)
    if (!integral || (*out.closed_form)[i] != out.distribution[i]) out.discrepancies.push_back(i);
  return out;
}

}  // namespace ringcodes
