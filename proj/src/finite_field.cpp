#include "catalan/finite_field.hpp"

#include "catalan/errors.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

std::uint64_t primitiveRootModPrime(std::uint64_t ell) { return smallestPrimitiveRoot(ell); }

QuadraticExtension::QuadraticExtension(std::uint64_t ell) : ell_(ell) {
  if (!isPrime(ell) || ell >= (1ULL << 31))
    throw ValidationError("QuadraticExtension: characteristic must be a prime below 2^31");
  // Irreducible iff no root in F_ell.
  for (std::uint64_t c1 = 0; c1 < ell; ++c1) {
    for (std::uint64_t c0 = 1; c0 < ell; ++c0) {
      bool hasRoot = false;
      for (std::uint64_t x = 0; x < ell && !hasRoot; ++x)
        hasRoot = (mulMod(x, x, ell) + mulMod(c1, x, ell) + c0) % ell == 0;
      if (!hasRoot) {
        c1_ = c1;
        c0_ = c0;
        return;
      }
    }
  }
  throw ComputationError("QuadraticExtension: no irreducible quadratic found");
}

QuadraticExtension::Elem QuadraticExtension::add(Elem x, Elem y) const {
  return {(x.a + y.a) % ell_, (x.b + y.b) % ell_};
}

QuadraticExtension::Elem QuadraticExtension::sub(Elem x, Elem y) const {
  return {(x.a + ell_ - y.a) % ell_, (x.b + ell_ - y.b) % ell_};
}

QuadraticExtension::Elem QuadraticExtension::mul(Elem x, Elem y) const {
  // t^2 = -c1 t - c0
  const std::uint64_t bd = mulMod(x.b, y.b, ell_);
  const std::uint64_t a = (mulMod(x.a, y.a, ell_) + ell_ - mulMod(bd, c0_, ell_)) % ell_;
  const std::uint64_t b =
      (mulMod(x.a, y.b, ell_) + mulMod(x.b, y.a, ell_) + ell_ - mulMod(bd, c1_, ell_)) % ell_;
  return {a, b};
}

QuadraticExtension::Elem QuadraticExtension::pow(Elem x, std::uint64_t e) const {
  Elem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

QuadraticExtension::Elem QuadraticExtension::primitiveElement() const {
  const std::uint64_t order = size() - 1;
  const auto factors = primeFactors(order);
  for (std::uint64_t idx = 1; idx < size(); ++idx) {
    const Elem x = fromIndex(idx);
    bool generator = true;
    for (auto f : factors)
      if (pow(x, order / f) == one()) {
        generator = false;
        break;
      }
    if (generator) return x;
  }
  throw ComputationError("QuadraticExtension: no primitive element found");
}

} // namespace catalan
