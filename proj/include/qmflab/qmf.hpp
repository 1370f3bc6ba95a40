#pragma once

// Quantum modular forms of weight -w with polynomial period function, as exact
// functions Q -> Q.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qmflab/dedekind.hpp"
#include "qmflab/exactnum.hpp"
#include "qmflab/polyspace.hpp"

namespace qmflab {

class QForm {
 public:
  enum class Kind { symbol_backed, closed_form, hecke_image };

  /// w; the form itself has weight -w.
  int weight() const;
  Kind kind() const;

  Rat operator()(const Rat& x) const;

  struct Impl;

 private:
  explicit QForm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend QForm psi(const Symbol& e);
  friend QForm gcd_power_form(const Rat& c, int w);
  friend QForm hecke_qform(const QForm& f, long n);
};

/// x = k/h in lowest terms with h > 0  ->  h^-w E(h, k).
QForm psi(const Symbol& e);

/// x = k/h  ->  c (gcd(h, k)/h)^w.
QForm gcd_power_form(const Rat& c, int w);

/// sum_{ad = n, d > 0} d^w sum_{b = 0}^{d-1} f((a x + b)/d)
QForm hecke_qform(const QForm& f, long n);

/// H(h, k) = h^w f(k/h) - k^w f(-h/k), interpolated exactly on x = 1..w+2 and
/// checked on x = -1..-w. Throws std::domain_error if it is not a polynomial.
HomPoly hmap(const QForm& f);

/// One-variable reading of a period polynomial: g(x) = H(1, x) = f(x) - x^w f(-1/x).
struct PeriodFn {
  HomPoly poly;
  Rat operator()(const Rat& x) const { return poly(Rat(1), x); }
};

PeriodFn period_function(const QForm& f);

/// 200 (by default) seeded rationals with denominators <= max_den, preceded by
/// 0, +-1, +-1/2, +-1/3.
std::vector<Rat> sample_rationals(std::size_t count = 200, std::uint64_t seed = 0, long max_den = 10000);

/// Exact agreement at every point.
bool agree(const QForm& f, const QForm& g, const std::vector<Rat>& points);

struct DiagramCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DiagramReport {
  int weight = 0;
  std::vector<DiagramCheck> checks;
  bool pass() const;
};

/// Verifies H o Psi = beta on the basis symbols, parity compatibility of every
/// map, and injectivity of Psi on the basis.
DiagramReport check_diagram(int w, std::uint64_t seed = 0);

}  // namespace qmflab
