#include "qmflab/dedekind.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmflab {

namespace detail {

class SymbolImpl {
 public:
  explicit SymbolImpl(int w) : w_(w) {}
  virtual ~SymbolImpl() = default;

  int weight() const { return w_; }
  virtual Symbol::Kind kind() const = 0;
  virtual Rat eval(const Int& h, const Int& k) const = 0;
  virtual const HomPoly& reciprocity(const Symbol& self) const = 0;

 protected:
  int w_;
};

namespace {

void require_positive_h(const Int& h) {
  if (h <= 0) throw std::domain_error("Dedekind symbols are defined for h >= 1, got h = " + h.get_str());
}

// Splits (h, k) into scale d = gcd(h, k) and the coprime pair (h/d, (k/d) mod (h/d)).
struct Reduced {
  Int scale;
  Int h;
  Int k;
};

Reduced reduce(const Int& h, const Int& k) {
  Int d = k == 0 ? h : gcd(h, k);
  Reduced r{d, Int(h / d), Int()};
  r.k = mod_floor(Int(k / d), r.h);
  return r;
}

class Reconstructed final : public SymbolImpl {
 public:
  Reconstructed(HomPoly g, Rat c0) : SymbolImpl(g.weight()), g_(std::move(g)), c0_(std::move(c0)) {}

  Symbol::Kind kind() const override { return Symbol::Kind::reconstructed; }
  const HomPoly& reciprocity(const Symbol&) const override { return g_; }

  Rat eval(const Int& h, const Int& k) const override { return eval_impl(h, k, true); }
  Rat eval_uncached(const Int& h, const Int& k) const { return eval_impl(h, k, false); }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

 private:
  static constexpr std::size_t kMemoCap = 1u << 20;

  Rat eval_impl(const Int& h, const Int& k, bool use_memo) const {
    require_positive_h(h);
    const auto r = reduce(h, k);
    Rat v = use_memo ? coprime_cached(r.h, r.k) : coprime(r.h, r.k);
    if (r.scale != 1) v *= Rat(ipow(r.scale, static_cast<unsigned long>(w_)));
    return v;
  }

  Rat coprime_cached(const Int& h, const Int& k) const {
    auto key = std::make_pair(h, k);
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Rat v = coprime(h, k);
    std::unique_lock lock(mutex_);
    if (memo_.size() >= kMemoCap) memo_.clear();
    memo_.emplace(std::move(key), v);
    return v;
  }

  // Euclidean descent: for coprime 0 < k < h, E(h, k) = g(h, k) + E(k, -h) and
  // E(k, -h) = E(k, (-h) mod k). Ends at E(1, 0) = c0.
  Rat coprime(Int h, Int k) const {
    Rat acc;
    while (h > 1) {
      acc += g_(h, k);
      Int next_k = mod_floor(Int(-h), k);
      h = std::move(k);
      k = std::move(next_k);
    }
    return acc + c0_;
  }

  HomPoly g_;
  Rat c0_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Int, Int>, Rat> memo_;
};

class PowerH final : public SymbolImpl {
 public:
  explicit PowerH(int w) : SymbolImpl(w), g_(HomPoly::p0(w)) {}
  Symbol::Kind kind() const override { return Symbol::Kind::power_h; }
  const HomPoly& reciprocity(const Symbol&) const override { return g_; }
  Rat eval(const Int& h, const Int&) const override {
    require_positive_h(h);
    return Rat(ipow(h, static_cast<unsigned long>(w_)));
  }

 private:
  HomPoly g_;
};

class GcdPower final : public SymbolImpl {
 public:
  explicit GcdPower(int w) : SymbolImpl(w), g_(w) {}
  Symbol::Kind kind() const override { return Symbol::Kind::gcd_power; }
  const HomPoly& reciprocity(const Symbol&) const override { return g_; }
  Rat eval(const Int& h, const Int& k) const override {
    require_positive_h(h);
    return Rat(ipow(k == 0 ? h : gcd(h, k), static_cast<unsigned long>(w_)));
  }

 private:
  HomPoly g_;
};

class HeckeImage final : public SymbolImpl {
 public:
  HeckeImage(Symbol base, long n) : SymbolImpl(base.weight()), base_(std::move(base)), n_(n) {}

  Symbol::Kind kind() const override { return Symbol::Kind::hecke_image; }

  Rat eval(const Int& h, const Int& k) const override {
    require_positive_h(h);
    Rat acc;
    for (long a = 1; a <= n_; ++a) {
      if (n_ % a != 0) continue;
      const long d = n_ / a;
      const Int dh = d * h;
      const Int ak = a * k;
      for (long b = 0; b < d; ++b) acc += base_(dh, Int(ak + b * h));
    }
    return acc;
  }

  const HomPoly& reciprocity(const Symbol& self) const override {
    std::call_once(once_, [&] { g_ = beta(self); });
    return g_;
  }

 private:
  Symbol base_;
  long n_;
  mutable std::once_flag once_;
  mutable HomPoly g_;
};

}  // namespace
}  // namespace detail

int Symbol::weight() const { return impl_->weight(); }
Symbol::Kind Symbol::kind() const { return impl_->kind(); }
Rat Symbol::operator()(const Int& h, const Int& k) const { return impl_->eval(h, k); }
const HomPoly& Symbol::reciprocity() const { return impl_->reciprocity(*this); }
Rat Symbol::c0() const { return impl_->eval(Int(1), Int(0)); }

Rat Symbol::eval_uncached(const Int& h, const Int& k) const {
  if (const auto* r = dynamic_cast<const detail::Reconstructed*>(impl_.get())) return r->eval_uncached(h, k);
  return impl_->eval(h, k);
}

std::size_t Symbol::memo_size() const {
  if (const auto* r = dynamic_cast<const detail::Reconstructed*>(impl_.get())) return r->memo_size();
  return 0;
}

std::optional<std::string> reciprocity_defect(const HomPoly& g) {
  const int w = g.weight();
  if (w < 2 || w % 2 != 0) return "weight must be even and >= 2";
  const auto three_term = slash(g, mats::T()) + slash(g, Mat2Z(1, 0, 1, 1)) - g;
  if (!three_term.is_zero()) return "three-term relation g(h+k,k) + g(h,h+k) = g(h,k) fails";
  if (sgn(g(Rat(1), Rat(1))) != 0) return "normalization g(1,1) = 0 fails";
  return std::nullopt;
}

bool validate_reciprocity(const HomPoly& g) { return !reciprocity_defect(g).has_value(); }

Symbol reconstruct(const HomPoly& g, const Rat& c0) {
  if (auto defect = reciprocity_defect(g))
    throw std::invalid_argument("reciprocity polynomial not in U_" + std::to_string(g.weight()) + ": " + *defect);
  return Symbol(std::make_shared<detail::Reconstructed>(g, c0));
}

Rat eval(const Symbol& e, const Int& h, const Int& k) { return e(h, k); }

Symbol builtin_F(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  return Symbol(std::make_shared<detail::PowerH>(w));
}

Symbol builtin_G(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  return Symbol(std::make_shared<detail::GcdPower>(w));
}

HomPoly beta(const Symbol& e) {
  const int w = e.weight();
  std::vector<std::pair<Int, Int>> nodes;
  std::vector<Rat> values;
  for (long j = 1; j <= w + 2; ++j) {
    nodes.emplace_back(Int(1), Int(j));
    values.push_back(e(Int(1), Int(j)) - e(Int(j), Int(-1)));
  }
  for (long j = 0; j < w; ++j) {
    nodes.emplace_back(Int(2), Int(2 * j + 1));
    values.push_back(e(Int(2), Int(2 * j + 1)) - e(Int(2 * j + 1), Int(-2)));
  }
  try {
    return interpolate(w, nodes, values);
  } catch (const std::domain_error& ex) {
    throw std::domain_error(std::string("beta: reciprocity function is not polynomial: ") + ex.what());
  }
}

Symbol hecke_symbol(const Symbol& e, long n) {
  if (n < 1) throw std::invalid_argument("Hecke index must be >= 1");
  return Symbol(std::make_shared<detail::HeckeImage>(e, n));
}

}  // namespace qmflab
