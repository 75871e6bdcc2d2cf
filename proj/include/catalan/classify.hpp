#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "catalan/moments.hpp"

namespace catalan {

/// Matrix algebra over R, H or C; the enumerator order is the report order.
enum class DivisionAlgebra { R, H, C };

/// One factor M_size(D) of a real endomorphism algebra.
struct AlgebraFactor {
  DivisionAlgebra base = DivisionAlgebra::R;
  int size = 1;

  int realDimension() const;
  friend bool operator==(const AlgebraFactor &, const AlgebraFactor &) = default;
  friend auto operator<=>(const AlgebraFactor &, const AlgebraFactor &) = default;
};

/// Factors sorted R, then H, then C, each by size.
using Algebra = std::vector<AlgebraFactor>;

int realDimension(const Algebra &algebra);
/// 2 * sum n_i - sum t_i over the M_{t_i}(R) and M_{n_i}(H) factors.
int frobeniusSchur(const Algebra &algebra);
/// e.g. "R", "C^3", "R^2 x H".
std::string formatAlgebra(const Algebra &algebra);

struct EndoReport {
  Subfield subfield = Subfield::Q;
  std::string label;
  int rankEnd = 0;
  int rankNS = 0;
  int fs = 0;
  Algebra algebra;
  /// Orbits of Gal(K/L) on the g diagonal blocks, 1-based, each ascending.
  std::vector<std::vector<int>> orbits;
};

/// M_2[a_1] over L, asserted integral.
int rankEndo(const CatalanParams &params, Subfield field);
/// M_1[a_2] over L, asserted integral.
int rankNS(const CatalanParams &params, Subfield field, const MomentOptions &options = {});

/// Orbits of the components over L acting on the diagonal blocks.
std::vector<std::vector<int>> blockOrbits(const ComponentGroup &group, Subfield field);

/// Fixed subalgebra of C^g under Gal(K/L): an orbit gives R when some
/// component fixing one of its blocks conjugates that block, C otherwise.
Algebra fixedAlgebra(const ComponentGroup &group, Subfield field);

EndoReport classifyAlgebra(const ComponentGroup &group, Subfield field,
                           const MomentOptions &options = {});
EndoReport classifyAlgebra(const CatalanParams &params, Subfield field,
                           const MomentOptions &options = {});

/// Gram matrix of Phi -> Re Tr(Phi H^T Phi^T H), H = diag(J, ..., J), on the
/// real basis {E_kk, i E_kk} of the diagonal 2g x 2g complex matrices.
Eigen::MatrixXi rosatiGram(int g);

/// Exact (positive, negative, zero) eigenvalue counts of a symmetric matrix by
/// congruence elimination over Scalar.
template <typename Scalar>
std::array<int, 3> inertia(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  const Eigen::Index n = a.rows();
  std::array<int, 3> counts{0, 0, 0};
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index swap = -1;
      for (Eigen::Index j = k + 1; j < n && swap < 0; ++j)
        if (a(j, j) != Scalar(0)) swap = j;
      if (swap >= 0) {
        a.row(k).swap(a.row(swap));
        a.col(k).swap(a.col(swap));
      } else {
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (a(k, j) != Scalar(0)) {
            // a_jj = 0, so row/column k + j has diagonal 2 a_kj.
            a.row(k) += a.row(j);
            a.col(k) += a.col(j);
            break;
          }
      }
    }
    const Scalar pivot = a(k, k);
    if (pivot == Scalar(0)) {
      ++counts[2];
      continue;
    }
    ++counts[pivot > Scalar(0) ? 0 : 1];
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == Scalar(0)) continue;
      const Scalar f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
  }
  return counts;
}

/// Number of positive eigenvalues of rosatiGram(g), computed exactly.
int rosatiPositivity(int g);

/// Moment-side cross-checks of one EndoReport.
struct ConsistencyEntry {
  Subfield subfield = Subfield::Q;
  std::string label;
  int rankEnd = 0;
  int rankNS = 0;
  int fsMoment = 0;
  int fsAlgebra = 0;
  bool dimensionMatches = false;
  bool fsMatches = false;
  bool noQuaternionFactors = false;
  bool nsHalfRank = false;
  /// Algebras of real dimension rankEnd with the moment fs; empty when
  /// rankEnd exceeds kCandidateRankLimit.
  std::vector<Algebra> candidates;
  bool candidatesEnumerated = false;
  /// The moments admit several algebras; only the orbit route decides.
  bool ambiguous = false;

  bool ok() const {
    return dimensionMatches && fsMatches && noQuaternionFactors && nsHalfRank;
  }
};

inline constexpr int kCandidateRankLimit = 24;

/// All products of M_t(R), M_n(H), M_m(C) of the given real dimension and
/// Frobenius-Schur value, each sorted.
std::vector<Algebra> momentCandidates(int realDim, std::optional<int> fs);

std::vector<ConsistencyEntry> consistencyChecks(const CatalanParams &params,
                                                const MomentOptions &options = {});

} // namespace catalan
