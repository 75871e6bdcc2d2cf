#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catalan/galois.hpp"
#include "catalan/laurent.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

/// Subfields of K = Q(zeta_pq) over which moments are taken.
enum class Subfield { Q, QZetaP, QZetaQ, K };

inline constexpr Subfield kAllSubfields[] = {Subfield::Q, Subfield::QZetaP, Subfield::QZetaQ,
                                             Subfield::K};

/// e.g. "Q", "Q(zeta_5)", "Q(zeta_15)".
std::string subfieldLabel(const CatalanParams &params, Subfield field);
/// Stable machine tag: "Q", "Q(zeta_p)", "Q(zeta_q)", "Q(zeta_pq)".
std::string subfieldTag(Subfield field);
/// Parses either the tag or the numeric label; throws ValidationError.
Subfield parseSubfield(const CatalanParams &params, const std::string &text);

/// (m, n) indices of the components in Gal(K/L), ordered lexicographically.
std::vector<std::pair<int, int>> subgroupIndices(const CatalanParams &params, Subfield field);
int subgroupOrder(const CatalanParams &params, Subfield field);

struct MomentOptions {
  std::size_t termBudget = kDefaultTermBudget;
  unsigned workers = 1;
};

/// M_0..M_nmax of mu_i for i = 1..rows.size(), over one subfield.
struct MomentTable {
  Subfield subfield = Subfield::Q;
  std::vector<std::vector<Rational>> rows; // rows[i-1][n]

  bool isIntegral() const;
};

/// Average over Gal(K/L) of the constant term of b_i^n.
Rational momentMuI(const ComponentGroup &group, Subfield field, int i, unsigned n,
                   const MomentOptions &options = {});
Rational momentMuI(const CatalanParams &params, Subfield field, int i, unsigned n,
                   const MomentOptions &options = {});

/// Table for mu_1..mu_maxIndex, orders 0..nmax. Each component's b_i is
/// expanded once; per-component work runs on options.workers threads and is
/// folded in (m, n) order.
MomentTable momentTable(const ComponentGroup &group, Subfield field, int maxIndex, unsigned nmax,
                        const MomentOptions &options = {});

/// n-th moment of the trace on U(1)^g: the g-fold binomial convolution of
/// (1, 0, 2, 0, 6, 0, 20, ...).
BigInt momentsU1g(unsigned n, unsigned g);

/// momentsU1g(n, g) / |Gal(K/L)| for n >= 1, since only the identity
/// component carries b_1; 1 for n = 0.
Rational momentMu1Fast(const CatalanParams &params, Subfield field, unsigned n);

/// M_1[a_2] = M_1[mu_2].
Rational m1A2Moment(const CatalanParams &params, Subfield field, const MomentOptions &options = {});

/// Frobenius-Schur indicator M_2[a_1] - 2 M_1[a_2]; throws ComputationError
/// unless the result lies in {-1, 0, 1}.
Rational s2Moment(const CatalanParams &params, Subfield field, const MomentOptions &options = {});

} // namespace catalan
