#pragma once

#include <cstdint>

namespace catalan {

/// Smallest generator of F_ell^x; ell must be prime.
std::uint64_t primitiveRootModPrime(std::uint64_t ell);

/// F_{ell^2} = F_ell[t] / (t^2 + c1 t + c0) for the first irreducible monic
/// quadratic in lexicographic (c1, c0) order. ell must be prime and < 2^31.
class QuadraticExtension {
public:
  struct Elem {
    std::uint64_t a = 0; ///< constant part
    std::uint64_t b = 0; ///< coefficient of t
    friend bool operator==(const Elem &, const Elem &) = default;
  };

  explicit QuadraticExtension(std::uint64_t ell);

  std::uint64_t characteristic() const { return ell_; }
  std::uint64_t size() const { return ell_ * ell_; }
  std::uint64_t c1() const { return c1_; }
  std::uint64_t c0() const { return c0_; }

  Elem one() const { return {1 % ell_, 0}; }
  Elem fromBase(std::uint64_t x) const { return {x % ell_, 0}; }
  /// Inverse of index(); idx in [0, ell^2).
  Elem fromIndex(std::uint64_t idx) const { return {idx % ell_, idx / ell_}; }
  std::uint64_t index(Elem x) const { return x.a + x.b * ell_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t e) const;

  /// A generator of the cyclic group F_{ell^2}^x.
  Elem primitiveElement() const;

private:
  std::uint64_t ell_;
  std::uint64_t c1_ = 0;
  std::uint64_t c0_ = 0;
};

} // namespace catalan
