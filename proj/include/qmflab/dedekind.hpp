#pragma once

// Weight-w Dedekind symbols with polynomial reciprocity law.
//
// A symbol E: Z+ x Z -> Q satisfies
//   E(h, k + h) = E(h, k),  E(c h, c k) = c^w E(h, k),
//   E(h, k) - E(k, -h) = g(h, k)   for h, k > 0,
// and is pinned down by g together with the value E(1, 0).

#include <memory>
#include <optional>
#include <string>

#include "qmflab/exactnum.hpp"
#include "qmflab/polyspace.hpp"

namespace qmflab {

namespace detail {
class SymbolImpl;
}

class Symbol {
 public:
  enum class Kind { reconstructed, power_h, gcd_power, hecke_image };

  int weight() const;
  Kind kind() const;

  /// E(h, k); requires h >= 1.
  Rat operator()(const Int& h, const Int& k) const;
  Rat operator()(long h, long k) const { return (*this)(Int(h), Int(k)); }

  /// The reciprocity polynomial g. Hecke images compute it on first use.
  const HomPoly& reciprocity() const;
  /// E(1, 0)
  Rat c0() const;

  /// Reconstructed symbols only: evaluation bypassing and not filling the memo.
  Rat eval_uncached(const Int& h, const Int& k) const;
  std::size_t memo_size() const;

 private:
  explicit Symbol(std::shared_ptr<const detail::SymbolImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::SymbolImpl> impl_;

  friend Symbol reconstruct(const HomPoly& g, const Rat& c0);
  friend Symbol builtin_F(int w);
  friend Symbol builtin_G(int w);
  friend Symbol hecke_symbol(const Symbol& e, long n);
};

/// The U_w condition that g violates, if any.
std::optional<std::string> reciprocity_defect(const HomPoly& g);

/// Both U_w conditions hold as polynomial identities.
bool validate_reciprocity(const HomPoly& g);

/// The symbol with reciprocity g and E(1, 0) = c0. Throws std::invalid_argument
/// naming the failed condition when g is not in U_w.
Symbol reconstruct(const HomPoly& g, const Rat& c0 = Rat(0));

Rat eval(const Symbol& e, const Int& h, const Int& k);

/// F_w(h, k) = h^w
Symbol builtin_F(int w);
/// G_w(h, k) = gcd(h, k)^w
Symbol builtin_G(int w);

/// beta(E)(h, k) = E(h, k) - E(k, -h), recovered by exact interpolation on
/// (1, j), j = 1..w+2 and checked on (2, 2j+1), j = 0..w-1. Throws
/// std::domain_error when the difference is not a polynomial.
HomPoly beta(const Symbol& e);

/// (T_n E)(h, k) = sum_{ad = n, d > 0} sum_{b = 0}^{d-1} E(d h, a k + b h),
/// evaluated lazily.
Symbol hecke_symbol(const Symbol& e, long n);

}  // namespace qmflab
