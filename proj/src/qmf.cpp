#include "qmflab/qmf.hpp"

#include <random>
#include <stdexcept>
#include <variant>

#include "qmflab/linalg.hpp"

namespace qmflab {

struct HeckeOf {
  QForm base;
  long n;
};

struct QForm::Impl {
  int w;
  std::variant<Symbol, Rat, HeckeOf> backing;
};

int QForm::weight() const { return impl_->w; }

QForm::Kind QForm::kind() const {
  switch (impl_->backing.index()) {
    case 0: return Kind::symbol_backed;
    case 1: return Kind::closed_form;
    default: return Kind::hecke_image;
  }
}

Rat QForm::operator()(const Rat& x) const {
  const auto w = static_cast<unsigned long>(impl_->w);
  const Int& k = x.get_num();
  const Int& h = x.get_den();
  if (const auto* e = std::get_if<Symbol>(&impl_->backing)) return (*e)(h, k) / Rat(ipow(h, w));
  if (const auto* c = std::get_if<Rat>(&impl_->backing)) return *c / Rat(ipow(h, w));

  const auto& [base, n] = std::get<HeckeOf>(impl_->backing);
  Rat acc;
  for (long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const long d = n / a;
    Rat inner;
    for (long b = 0; b < d; ++b) inner += base((Rat(a) * x + b) / d);
    acc += inner * Rat(ipow(Int(d), w));
  }
  return acc;
}

QForm psi(const Symbol& e) { return QForm(std::make_shared<const QForm::Impl>(QForm::Impl{e.weight(), e})); }

QForm gcd_power_form(const Rat& c, int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  return QForm(std::make_shared<const QForm::Impl>(QForm::Impl{w, c}));
}

QForm hecke_qform(const QForm& f, long n) {
  if (n < 1) throw std::invalid_argument("Hecke index must be >= 1");
  return QForm(std::make_shared<const QForm::Impl>(QForm::Impl{f.weight(), HeckeOf{f, n}}));
}

HomPoly hmap(const QForm& f) {
  const int w = f.weight();
  const auto uw = static_cast<unsigned long>(w);
  std::vector<std::pair<Int, Int>> nodes;
  std::vector<Rat> values;
  // H(1, j) = f(j) - j^w f(-1/j)
  for (long j = 1; j <= w + 2; ++j) {
    nodes.emplace_back(Int(1), Int(j));
    values.push_back(f(Rat(j)) - Rat(ipow(Int(j), uw)) * f(Rat(-1, j)));
  }
  for (long j = 1; j <= w; ++j) {
    nodes.emplace_back(Int(1), Int(-j));
    values.push_back(f(Rat(-j)) - Rat(ipow(Int(j), uw)) * f(Rat(1, j)));
  }
  try {
    return interpolate(w, nodes, values);
  } catch (const std::domain_error& ex) {
    throw std::domain_error(std::string("hmap: period function is not polynomial: ") + ex.what());
  }
}

PeriodFn period_function(const QForm& f) { return PeriodFn{hmap(f)}; }

std::vector<Rat> sample_rationals(std::size_t count, std::uint64_t seed, long max_den) {
  std::vector<Rat> pts{Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(-1, 3)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(1, max_den);
  for (std::size_t i = 0; i < count; ++i) {
    const long h = den(rng);
    std::uniform_int_distribution<long> num(-3 * h, 3 * h);
    pts.push_back(rat_normalize(Int(num(rng)), Int(h)));
  }
  return pts;
}

bool agree(const QForm& f, const QForm& g, const std::vector<Rat>& points) {
  for (const auto& x : points)
    if (f(x) != g(x)) return false;
  return true;
}

bool DiagramReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

bool parity_on_points(const QForm& f, Parity sign, const std::vector<Rat>& pts) {
  for (const auto& x : pts) {
    const Rat v = f(x);
    const Rat m = f(-x);
    if (sign == Parity::even ? m != v : m != -v) return false;
  }
  return true;
}

}  // namespace

DiagramReport check_diagram(int w, std::uint64_t seed) {
  DiagramReport report;
  report.weight = w;
  const auto pts = sample_rationals(60, seed, 500);
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // (i) H o Psi = beta on every basis symbol.
  std::vector<std::pair<std::string, Symbol>> symbols;
  const auto ubasis = basis_U(w, Parity::both);
  for (std::size_t i = 0; i < ubasis.size(); ++i)
    symbols.emplace_back("reconstruct(U_basis[" + std::to_string(i) + "], 0)", reconstruct(ubasis[i], Rat(0)));
  symbols.emplace_back("F_" + std::to_string(w), builtin_F(w));
  symbols.emplace_back("G_" + std::to_string(w), builtin_G(w));
  for (const auto& [name, e] : symbols) {
    const auto h = hmap(psi(e));
    const auto b = beta(e);
    record("H(Psi(E)) = beta(E) for " + name, h == b && b == e.reciprocity(), to_string(h));
  }

  // (ii) parity compatibility.
  for (Parity sign : {Parity::even, Parity::odd}) {
    const auto basis = basis_U(w, sign);
    if (basis.empty()) {
      record("parity " + to_string(sign) + " branch", true, "U_w^" + to_string(sign) + " is empty");
      continue;
    }
    bool ok = true;
    for (const auto& g : basis) {
      const auto e = reconstruct(g, Rat(0));
      const auto f = psi(e);
      ok = ok && parity_on_points(f, sign, pts) && has_parity(hmap(f), sign);
    }
    record("Psi and H preserve parity " + to_string(sign), ok);
  }
  {
    HomPoly mixed(w);
    for (const auto& g : ubasis) mixed += g;
    const auto e_mixed = reconstruct(mixed, Rat(0));
    const auto e_even = reconstruct(parity_project(mixed, Parity::even), Rat(0));
    const auto e_odd = reconstruct(parity_project(mixed, Parity::odd), Rat(0));
    bool ok = true;
    for (long h = 1; h <= 24 && ok; ++h) {
      for (long k = -24; k <= 24 && ok; ++k) {
        const Rat plus = e_mixed(h, k);
        const Rat minus = e_mixed(h, -k);
        ok = (plus + minus) / 2 == e_even(h, k) && (plus - minus) / 2 == e_odd(h, k);
      }
    }
    const auto b = beta(e_mixed);
    ok = ok && hmap(psi(e_even)) == parity_project(b, Parity::even) &&
         hmap(psi(e_odd)) == parity_project(b, Parity::odd);
    record("parity projections commute with reconstruct, Psi, H and beta", ok);
  }

  // (iii) Psi is injective on the basis symbols (plus G_w).
  {
    std::vector<QForm> forms;
    for (const auto& g : ubasis) forms.push_back(psi(reconstruct(g, Rat(0))));
    forms.push_back(psi(builtin_G(w)));
    RatMatrix m;
    for (const auto& f : forms) {
      std::vector<Rat> row;
      for (const auto& x : pts) row.push_back(f(x));
      m.append_row(row);
    }
    const auto r = rank(m);
    record("Psi injective on basis", r == forms.size(),
           "rank " + std::to_string(r) + " of " + std::to_string(forms.size()));

    RatMatrix fg;
    for (const auto& f : {psi(builtin_F(w)), psi(builtin_G(w))}) {
      std::vector<Rat> row;
      for (const auto& x : pts) row.push_back(f(x));
      fg.append_row(row);
    }
    record("Psi(F_w), Psi(G_w) linearly independent", rank(fg) == 2);
  }
  return report;
}

}  // namespace qmflab
