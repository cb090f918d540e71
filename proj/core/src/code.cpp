#include "ringcodes/code.hpp"

#include "ringcodes/error.hpp"

namespace ringcodes {

LinearCode::LinearCode(ChainRing ring, std::size_t n, StandardForm form)
    : ring_(ring), n_(n), std_(std::move(form)), parity_(std::make_shared<ParityCache>()) {}

LinearCode LinearCode::from_generators(ChainRing ring, std::size_t n,
                                       const std::vector<std::vector<std::uint64_t>>& rows) {
  return from_matrix(RingMatrix(ring, n, rows));
}

LinearCode LinearCode::from_matrix(const RingMatrix& generators) {
  return LinearCode(generators.ring(), generators.cols(), ringcodes::standard_form(generators));
}

const RingMatrix& LinearCode::parity_check() const {
  std::call_once(parity_->once, [this] { parity_->matrix = build_parity_check(*this); });
  return *parity_->matrix;
}

bool LinearCode::contains(std::span<const Value> v) const {
  if (v.size() != n_) return false;
  const auto& h = parity_check();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Value acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc = ring_.add(acc, ring_.mul(h(r, c), v[c]));
    if (acc != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
//
// With column blocks of the standard form numbered 0..s (block m < s holds the
// level-m identity columns, block s the remaining n - K columns), level-a
// generator rows read gamma^a [0 | I | A_{a,a+1} | ... | A_{a,s}] and the
// parity check has row blocks i = 0..s-1,
//
//   H_i = gamma^i [B_{i,s} | B_{i,s-1} | ... | B_{i,i+1} | I | 0 ... 0]
//
// with B_{i,j} in column block s-j and the identity in column block s-i.
// Orthogonality of level s-j generator rows against H_i gives
//
//   B_{i,j} = - sum_{k=i+1}^{j-1} B_{i,k} A_{s-j,s-k}^T - A_{s-j,s-i}^T
//
// modulo gamma^(j-i); blocks are stored reduced modulo gamma^(s-i).

namespace {

using Value = ChainRing::Value;

struct Block {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Value> data;

  Block(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Value& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Value operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

}  // namespace

RingMatrix build_parity_check(const LinearCode& code) {
  const auto& R = code.ring();
  const unsigned s = R.s();
  const std::size_t n = code.length();
  const auto& sf = code.standard_form();
  const auto& g = sf.reduced;
  const auto& k = sf.profile.counts;

  // Offsets of the column blocks 0..s (also the row offsets of levels 0..s-1).
  std::vector<std::size_t> offset(s + 2, 0);
  for (unsigned m = 0; m < s; ++m) offset[m + 1] = offset[m] + k[m];
  offset[s + 1] = n;
  auto block_size = [&](unsigned m) { return offset[m + 1] - offset[m]; };

  // A_{a,m}: the level-a rows restricted to column block m, divided by gamma^a.
  auto A = [&](unsigned a, unsigned m) {
    Block out(k[a], block_size(m));
    for (std::size_t r = 0; r < out.rows; ++r)
      for (std::size_t c = 0; c < out.cols; ++c)
        out(r, c) = R.shift_down(g(offset[a] + r, offset[m] + c), a);
    return out;
  };

  RingMatrix h(R, n - sf.profile.free_rank(), n);
  std::size_t h_row = 0;
  for (unsigned i = 0; i < s; ++i) {
    const std::size_t rows = block_size(s - i);
    // B[j] for j = i+1..s, each rows x |column block s-j|.
    std::vector<Block> B;
    B.reserve(s + 1);
    for (unsigned j = 0; j <= s; ++j) B.emplace_back(j > i ? rows : 0, j > i ? block_size(s - j) : 0);

    for (unsigned j = i + 1; j <= s; ++j) {
      Block& out = B[j];
      const Block tail = A(s - j, s - i);  // k_{s-j} x rows
      for (std::size_t r = 0; r < out.rows; ++r)
        for (std::size_t c = 0; c < out.cols; ++c) out(r, c) = R.neg(tail(c, r));
      for (unsigned kk = i + 1; kk < j; ++kk) {
        const Block mid = A(s - j, s - kk);  // k_{s-j} x |block s-kk|
        const Block& left = B[kk];            // rows x |block s-kk|
        for (std::size_t r = 0; r < out.rows; ++r)
          for (std::size_t c = 0; c < out.cols; ++c) {
            Value acc = 0;
            for (std::size_t t = 0; t < left.cols; ++t) acc = R.add(acc, R.mul(left(r, t), mid(c, t)));
            out(r, c) = R.sub(out(r, c), acc);
          }
      }
      for (auto& v : out.data) v = R.reduce(v, s - i);
    }

    for (std::size_t r = 0; r < rows; ++r, ++h_row) {
      for (unsigned j = i + 1; j <= s; ++j) {
        const unsigned m = s - j;
        for (std::size_t c = 0; c < block_size(m); ++c) h(h_row, offset[m] + c) = R.shift_up(B[j](r, c), i);
      }
      h(h_row, offset[s - i] + r) = R.shift_up(1, i);
    }
  }

  if (!is_zero(multiply(g, h.transpose())))
    throw InvariantViolation("parity-check construction failed: G * H^T != 0");
  return sf.permutation.unapply(h);
}

LinearCode dual(const LinearCode& code) {
  auto d = LinearCode::from_matrix(code.parity_check());
  const auto expected = dual_type(code.profile(), code.length());
  if (d.profile() != expected)
    throw InvariantViolation("dual code has type " + d.profile().to_string() + ", expected " +
                             expected.to_string());
  return d;
}

LinearCode kernel_code(const RingMatrix& h) {
  // ker H is the dual of the row space of H.
  const auto rowspace = LinearCode::from_matrix(h);
  auto kernel = LinearCode::from_matrix(rowspace.parity_check());
  if (kernel.cardinality() * rowspace.cardinality() != ipow(BigInt(h.ring().size()), h.cols()))
    throw InvariantViolation("|ker H| * |rowspace H| != |R|^n");
  return kernel;
}

bool same_codewords(const LinearCode& a, const LinearCode& b) {
  if (a.ring() != b.ring() || a.length() != b.length()) return false;
  if (a.profile() != b.profile()) return false;
  const auto g = a.generator_matrix();
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (!b.contains(g.row(r))) return false;
  return true;
}

std::string_view class_name(CodeClass c) {
  switch (c) {
    case CodeClass::MDS: return "MDS";
    case CodeClass::MDR: return "MDR";
    case CodeClass::NearMDS: return "NearMDS";
    case CodeClass::NearMDR: return "NearMDR";
    case CodeClass::AMDR: return "AMDR";
    case CodeClass::Other: break;
  }
  return "other";
}

CodeProfile classify(const LinearCode& code, std::size_t d, std::size_t d_dual) {
  const std::size_t n = code.length();
  const std::size_t K = code.rank();
  const std::size_t dual_rank = n - code.free_rank();
  if (d + K > n + 1)
    throw InconsistentInputs("d=" + std::to_string(d) + " violates d <= n - K + 1 = " + std::to_string(n + 1 - K));
  if (d_dual + dual_rank > n + 1)
    throw InconsistentInputs("d_dual=" + std::to_string(d_dual) + " violates d_dual <= k0 + 1 = " +
                             std::to_string(n + 1 - dual_rank));
  CodeProfile out{};
  out.d = d;
  out.d_dual = d_dual;
  out.defect = n + 1 - K - d;
  out.dual_defect = n + 1 - dual_rank - d_dual;
  out.sigma = out.defect + out.dual_defect;
  if (out.defect == 0)
    out.code_class = code.is_free() ? CodeClass::MDS : CodeClass::MDR;
  else if (out.defect == 1 && out.dual_defect == 1)
    out.code_class = code.is_free() ? CodeClass::NearMDS : CodeClass::NearMDR;
  else if (out.defect == 1)
    out.code_class = CodeClass::AMDR;
  else
    out.code_class = CodeClass::Other;
  return out;
}

}  // namespace ringcodes
