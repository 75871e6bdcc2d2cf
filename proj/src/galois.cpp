#include "catalan/galois.hpp"

#include <sstream>

#include "catalan/errors.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

BlockSignedPerm::BlockSignedPerm(std::vector<int> targets, std::vector<Block> flags)
    : targets_(std::move(targets)), flags_(std::move(flags)) {
  if (targets_.size() != flags_.size())
    throw ValidationError("BlockSignedPerm: targets and flags differ in length");
  std::vector<bool> hit(targets_.size(), false);
  for (int t : targets_) {
    if (t < 1 || t > size() || hit[t - 1])
      throw ValidationError("BlockSignedPerm: targets are not a permutation");
    hit[t - 1] = true;
  }
}

BlockSignedPerm BlockSignedPerm::identity(int g) {
  std::vector<int> t(g);
  for (int i = 0; i < g; ++i) t[i] = i + 1;
  return {std::move(t), std::vector<Block>(g, Block::I)};
}

BlockSignedPerm BlockSignedPerm::fromAction(const BlockAction &action) {
  std::vector<int> t;
  std::vector<Block> f;
  for (const auto &img : action) {
    t.push_back(img.target);
    f.push_back(img.conjugate ? Block::J : Block::I);
  }
  return {std::move(t), std::move(f)};
}

BlockSignedPerm multiply(const BlockSignedPerm &lhs, const BlockSignedPerm &rhs) {
  if (lhs.size() != rhs.size()) throw ValidationError("multiply: size mismatch");
  const int g = lhs.size();
  std::vector<int> t(g);
  std::vector<Block> f(g);
  for (int i = 1; i <= g; ++i) {
    const int mid = lhs.target(i);
    t[i - 1] = rhs.target(mid);
    f[i - 1] = (lhs.flag(i) == rhs.flag(mid)) ? Block::I : Block::J;
  }
  return {std::move(t), std::move(f)};
}

BlockSignedPerm inverse(const BlockSignedPerm &b) {
  const int g = b.size();
  std::vector<int> t(g);
  std::vector<Block> f(g);
  for (int i = 1; i <= g; ++i) {
    t[b.target(i) - 1] = i;
    f[b.target(i) - 1] = b.flag(i); // J^-1 = -J
  }
  return {std::move(t), std::move(f)};
}

BlockSignedPerm power(const BlockSignedPerm &b, int n) {
  if (n < 0) return power(inverse(b), -n);
  BlockSignedPerm result = BlockSignedPerm::identity(b.size());
  BlockSignedPerm base = b;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return result;
}

std::vector<int> conjugateDiag(const BlockSignedPerm &b, const std::vector<int> &exps) {
  if (static_cast<int>(exps.size()) != b.size())
    throw ValidationError("conjugateDiag: exponent vector length differs from block count");
  std::vector<int> out(exps.size());
  for (int i = 1; i <= b.size(); ++i) {
    const int e = exps[b.target(i) - 1];
    out[i - 1] = b.flag(i) == Block::I ? e : -e;
  }
  return out;
}

namespace {

const BasisElement &basisAt(const std::vector<BasisElement> &basis, int i) {
  if (i < 1 || i > static_cast<int>(basis.size()))
    throw ValidationError("block index " + std::to_string(i) + " outside [1, g]");
  return basis[i - 1];
}

} // namespace

BlockImage actSigmaQ(const CatalanParams &params, int i) {
  const auto basis = buildBasis(params);
  const auto &el = basisAt(basis, i);
  const int p = params.p, q = params.q;
  const int t = static_cast<int>(modPos(static_cast<std::int64_t>(params.d) * el.b, q));
  if (el.a <= kOfB(p, q, t)) return {kappa(p, q, t - 1) + el.a + 1, false};
  const int tPrime = q - t;
  return {kappa(p, q, tPrime - 1) + p - (el.a + 1), true};
}

BlockImage actSigmaP(const CatalanParams &params, int i) {
  const auto basis = buildBasis(params);
  const auto &el = basisAt(basis, i);
  const int p = params.p, q = params.q;
  const int s = static_cast<int>(modPos(static_cast<std::int64_t>(params.c) * (el.a + 1), p)) - 1;
  if (s <= kOfB(p, q, el.b)) return {kappa(p, q, el.b - 1) + s + 1, false};
  const int bPrime = q - el.b;
  return {kappa(p, q, bPrime - 1) + p - (s + 1), true};
}

BlockAction sigmaQAction(const CatalanParams &params) {
  BlockAction action;
  for (int i = 1; i <= params.g; ++i) action.push_back(actSigmaQ(params, i));
  return action;
}

BlockAction sigmaPAction(const CatalanParams &params) {
  BlockAction action;
  for (int i = 1; i <= params.g; ++i) action.push_back(actSigmaP(params, i));
  return action;
}

BlockSignedPerm gammaQ(const CatalanParams &params) {
  return BlockSignedPerm::fromAction(sigmaQAction(params));
}

BlockSignedPerm gammaP(const CatalanParams &params) {
  return BlockSignedPerm::fromAction(sigmaPAction(params));
}

ComponentGroup::ComponentGroup(const CatalanParams &params) : params_(params) {
  const auto gp = gammaP(params);
  const auto gq = gammaQ(params);
  auto gpPow = BlockSignedPerm::identity(params.g);
  for (int m = 0; m < params.p - 1; ++m) {
    auto element = gpPow;
    for (int n = 0; n < params.q - 1; ++n) {
      elements_.push_back({m, n, element});
      element = multiply(element, gq);
    }
    gpPow = multiply(gpPow, gp);
  }
}

const GroupElement &ComponentGroup::at(int m, int n) const {
  const int mm = static_cast<int>(modPos(m, params_.p - 1));
  const int nn = static_cast<int>(modPos(n, params_.q - 1));
  return elements_.at(static_cast<std::size_t>(mm) * (params_.q - 1) + nn);
}

ComponentGroup componentGroup(const CatalanParams &params) { return ComponentGroup(params); }

int galoisExponent(const CatalanParams &params, int a, int b, int m, int n) {
  const std::int64_t pq = params.pq();
  const std::int64_t cm = static_cast<std::int64_t>(powMod(params.c, modPos(m, params.p - 1), params.p));
  const std::int64_t dn = static_cast<std::int64_t>(powMod(params.d, modPos(n, params.q - 1), params.q));
  return static_cast<int>(modPos(params.q * cm * (a + 1) - params.p * dn * b, pq));
}

std::string formatBlockMatrix(const BlockSignedPerm &b) {
  std::ostringstream out;
  for (int i = 1; i <= b.size(); ++i) {
    for (int j = 1; j <= b.size(); ++j) {
      if (j > 1) out << ' ';
      if (b.target(i) != j)
        out << '0';
      else
        out << (b.flag(i) == Block::I ? 'I' : 'J');
    }
    out << '\n';
  }
  return out.str();
}

BlockSignedPerm fromDense(const Eigen::MatrixXi &m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw ValidationError("fromDense: matrix is not square of even dimension");
  const int g = static_cast<int>(m.rows() / 2);
  std::vector<int> t(g, 0);
  std::vector<Block> f(g, Block::I);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const Eigen::Matrix2i blk = m.block<2, 2>(2 * i, 2 * j);
      if (blk.isZero()) continue;
      if (t[i] != 0) throw ValidationError("fromDense: two nonzero blocks in one row");
      const bool isI = blk(0, 1) == 0 && blk(1, 0) == 0 && blk(0, 0) == blk(1, 1) &&
                       std::abs(blk(0, 0)) == 1;
      const bool isJ = blk(0, 0) == 0 && blk(1, 1) == 0 && blk(0, 1) == -blk(1, 0) &&
                       std::abs(blk(0, 1)) == 1;
      if (!isI && !isJ) throw ValidationError("fromDense: block is not +-I or +-J");
      t[i] = j + 1;
      f[i] = isI ? Block::I : Block::J;
    }
    if (t[i] == 0) throw ValidationError("fromDense: zero block row");
  }
  return {std::move(t), std::move(f)};
}

} // namespace catalan
