#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "catalan/params.hpp"

namespace catalan {

/// 2x2 block type of a block signed permutation. Signs are not stored: -I and
/// -J differ from I and J by an element of the identity component U(1)^g.
enum class Block : std::uint8_t { I, J };

/// Image of one diagonal block under a Galois generator.
struct BlockImage {
  int target = 0;         ///< 1-based
  bool conjugate = false; ///< true when the image is the conjugate block

  friend bool operator==(const BlockImage &, const BlockImage &) = default;
};

/// Full action of a Galois element on the g diagonal blocks of alpha.
using BlockAction = std::vector<BlockImage>;

/// g-block signed permutation matrix in canonical (sign-free) form.
///
/// Row i has its only nonzero block in column target(i), equal to flag(i).
/// Accessors are 1-based.
class BlockSignedPerm {
public:
  BlockSignedPerm() = default;
  /// targets are 1-based; throws ValidationError unless they form a bijection.
  BlockSignedPerm(std::vector<int> targets, std::vector<Block> flags);

  static BlockSignedPerm identity(int g);
  static BlockSignedPerm fromAction(const BlockAction &action);

  int size() const { return static_cast<int>(targets_.size()); }
  int target(int i) const { return targets_.at(i - 1); }
  Block flag(int i) const { return flags_.at(i - 1); }

  const std::vector<int> &targets() const { return targets_; }
  const std::vector<Block> &flags() const { return flags_; }

  friend bool operator==(const BlockSignedPerm &, const BlockSignedPerm &) = default;
  friend auto operator<=>(const BlockSignedPerm &, const BlockSignedPerm &) = default;

private:
  std::vector<int> targets_;
  std::vector<Block> flags_;
};

/// Block product B1*B2, sign-canonicalized (J*J = -I is recorded as I).
BlockSignedPerm multiply(const BlockSignedPerm &lhs, const BlockSignedPerm &rhs);
BlockSignedPerm inverse(const BlockSignedPerm &b);
BlockSignedPerm power(const BlockSignedPerm &b, int n);

/// Exponents of B*diag(Z^e)*B^-1: result[i] = e[target(i)], negated when the
/// block is J (conjugation, since -J Z J = conj(Z)).
std::vector<int> conjugateDiag(const BlockSignedPerm &b, const std::vector<int> &exps);

/// Image of block i under sigma_q (zeta_q -> zeta_q^d).
BlockImage actSigmaQ(const CatalanParams &params, int i);
/// Image of block i under sigma_p (zeta_p -> zeta_p^c).
BlockImage actSigmaP(const CatalanParams &params, int i);

BlockAction sigmaQAction(const CatalanParams &params);
BlockAction sigmaPAction(const CatalanParams &params);

BlockSignedPerm gammaQ(const CatalanParams &params);
BlockSignedPerm gammaP(const CatalanParams &params);

/// Component A_{m,n} = gammaP^m * gammaQ^n.
struct GroupElement {
  int m = 0;
  int n = 0;
  BlockSignedPerm matrix;
};

/// All (p-1)(q-1) components, ordered lexicographically by (m, n).
class ComponentGroup {
public:
  explicit ComponentGroup(const CatalanParams &params);

  const CatalanParams &params() const { return params_; }
  const std::vector<GroupElement> &elements() const { return elements_; }
  /// m and n are reduced modulo p-1 and q-1.
  const GroupElement &at(int m, int n) const;
  std::size_t size() const { return elements_.size(); }

private:
  CatalanParams params_;
  std::vector<GroupElement> elements_;
};

ComponentGroup componentGroup(const CatalanParams &params);

/// Exponent of sigma_p^m sigma_q^n applied to zeta_pq^e for the basis
/// element (a, b): q c^m (a+1) - p d^n b, reduced mod pq.
int galoisExponent(const CatalanParams &params, int a, int b, int m, int n);

/// Rows of 0/I/J symbols, one line per block row.
std::string formatBlockMatrix(const BlockSignedPerm &b);

/// Literal 2g x 2g matrix with blocks I = [[1,0],[0,1]] and J = [[0,1],[-1,0]].
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> toDense(const BlockSignedPerm &b) {
  const int g = b.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(2 * g, 2 * g);
  for (int i = 1; i <= g; ++i) {
    const int r = 2 * (i - 1), c = 2 * (b.target(i) - 1);
    if (b.flag(i) == Block::I) {
      m(r, c) = Scalar(1);
      m(r + 1, c + 1) = Scalar(1);
    } else {
      m(r, c + 1) = Scalar(1);
      m(r + 1, c) = Scalar(-1);
    }
  }
  return m;
}

/// Reads a literal block signed permutation back into canonical form, dropping
/// block signs. Throws ValidationError on any other block pattern.
BlockSignedPerm fromDense(const Eigen::MatrixXi &m);

} // namespace catalan
