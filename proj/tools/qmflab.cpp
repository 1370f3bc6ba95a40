#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmflab/dedekind.hpp"
#include "qmflab/eichler.hpp"
#include "qmflab/maninhecke.hpp"
#include "qmflab/modgroup.hpp"
#include "qmflab/polyspace.hpp"
#include "qmflab/qmf.hpp"
#include "qmflab/sigma.hpp"
#include "qmflab/suites.hpp"

using namespace qmflab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

std::string cplx_str(Cplx v) {
  std::ostringstream os;
  os.precision(15);
  os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
  return os.str();
}

json cplx_json(Cplx v) { return json::array({v.real(), v.imag()}); }

json poly_json(const HomPoly& p) { return coeff_strings(p); }

// Symbol selection shared by `symbol` and `qmf`.
struct SymbolArgs {
  int weight = 10;
  std::string builtin;
  std::string recip;
  std::string c0 = "0";

  void attach(CLI::App* app) {
    app->add_option("--weight,-w", weight, "even weight w >= 2");
    app->add_option("--builtin", builtin, "F or G")->check(CLI::IsMember({"F", "G"}));
    app->add_option("--recip", recip, "reciprocity coefficients c_0..c_w of X^i Y^(w-i), comma separated");
    app->add_option("--c0", c0, "value E(1, 0)");
  }

  Symbol build() const {
    if (builtin == "F") return builtin_F(weight);
    if (builtin == "G") return builtin_G(weight);
    const HomPoly g = recip.empty() ? HomPoly(weight) : parse_coeffs(weight, recip);
    return reconstruct(g, parse_rat(c0));
  }
};

void emit_report(const Report& r, const std::string& format) { std::cout << render(r, parse_format(format)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmflab: quantum modular forms, Dedekind symbols and period polynomials"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");
  app.set_help_all_flag("--help-all");

  std::string format = "text";
  SuiteConfig config;
  std::vector<int> weight_list;
  int exit_code = 0;

  auto add_suite_flags = [&](CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", config.seed, "seed for randomized checks");
  };
  auto run_named = [&](const std::string& name) {
    if (!weight_list.empty()) config.weights = weight_list;
    const Report r = run_suite(name, config);
    emit_report(r, format);
    exit_code = r.pass() ? 0 : 1;
  };

  // Suites.
  for (const auto& name : suite_names()) {
    if (name == "sigma") continue;  // doubles as a command group below
    auto* sub = app.add_subcommand(name, "run the " + name + " suite");
    add_suite_flags(sub);
    if (name == "diagram" || name == "hecke-compat" || name == "eichler" || name == "all")
      sub->add_option("--weight,-w", weight_list, "weights to check");
    if (name == "multiplier-compat" || name == "all") {
      sub->add_option("--pmin", config.pmin);
      sub->add_option("--pmax", config.pmax);
      sub->add_flag("--full-757", config.full757, "all primes 5 <= p <= 757");
    }
    sub->callback([&, name] { run_named(name); });
  }

  auto* diag = app.add_subcommand("diagram-check", "commutative-diagram identities for one weight");
  int diag_w = 10;
  diag->add_option("--weight,-w", diag_w)->required();
  add_suite_flags(diag);
  diag->callback([&] {
    weight_list = {diag_w};
    run_named("diagram");
  });

  auto* compat = app.add_subcommand("compat", "compatibility of chi and chi^p for a range of primes");
  compat->add_option("--pmin", config.pmin);
  compat->add_option("--pmax", config.pmax);
  compat->add_flag("--full-757", config.full757);
  add_suite_flags(compat);
  compat->callback([&] { run_named("multiplier-compat"); });

  // basis
  auto* basis = app.add_subcommand("basis", "exact bases of W_w and U_w");
  std::string space = "W", parity_text = "both";
  int basis_w = 10;
  basis->add_option("--space", space)->check(CLI::IsMember({"W", "U"}));
  basis->add_option("--weight,-w", basis_w)->required();
  basis->add_option("--parity", parity_text);
  basis->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  basis->callback([&] {
    const Parity par = parse_parity(parity_text);
    const auto b = space == "W" ? basis_W(basis_w, par) : basis_U(basis_w, par);
    if (format == "json") {
      json j{{"space", space}, {"weight", basis_w}, {"parity", to_string(par)}, {"dimension", b.size()}};
      j["basis"] = json::array();
      for (const auto& p : b) j["basis"].push_back(poly_json(p));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << space << "_" << basis_w << "^" << to_string(par) << ": dimension " << b.size() << "\n";
      for (const auto& p : b) std::cout << "  " << to_string(p) << "\n";
    }
  });

  // symbol
  auto* symbol = app.add_subcommand("symbol", "Dedekind symbols");
  symbol->require_subcommand(1);
  SymbolArgs sym;
  std::string h_text = "1", k_text = "0";
  long hecke_n = 2;
  auto* sym_eval = symbol->add_subcommand("eval", "E(h, k)");
  sym.attach(sym_eval);
  sym_eval->add_option("--h", h_text)->required();
  sym_eval->add_option("--k", k_text)->required();
  sym_eval->callback([&] {
    const auto e = sym.build();
    std::cout << to_string(e(Int(h_text), Int(k_text))) << "\n";
  });
  auto* sym_hecke = symbol->add_subcommand("hecke", "reciprocity function of T_n E, optionally a value");
  sym.attach(sym_hecke);
  sym_hecke->add_option("--n", hecke_n)->required();
  auto* sym_h = sym_hecke->add_option("--h", h_text);
  sym_hecke->add_option("--k", k_text);
  sym_hecke->callback([&] {
    const auto t = hecke_symbol(sym.build(), hecke_n);
    std::cout << "reciprocity: " << to_string(t.reciprocity()) << "\n";
    if (sym_h->count() > 0) std::cout << "value: " << to_string(t(Int(h_text), Int(k_text))) << "\n";
  });

  // qmf
  auto* qmf = app.add_subcommand("qmf", "quantum modular forms Psi(E)");
  qmf->require_subcommand(1);
  std::string x_text = "0";
  auto* q_eval = qmf->add_subcommand("eval", "Psi(E)(x)");
  sym.attach(q_eval);
  q_eval->add_option("--x", x_text)->required();
  q_eval->callback([&] { std::cout << to_string(psi(sym.build())(parse_rat(x_text))) << "\n"; });
  auto* q_period = qmf->add_subcommand("period", "period polynomial H(Psi(E))");
  sym.attach(q_period);
  q_period->callback([&] { std::cout << to_string(hmap(psi(sym.build()))) << "\n"; });
  auto* q_hecke = qmf->add_subcommand("hecke", "(T_n Psi(E))(x) and its period polynomial");
  sym.attach(q_hecke);
  q_hecke->add_option("--n", hecke_n)->required();
  q_hecke->add_option("--x", x_text);
  q_hecke->callback([&] {
    const auto f = hecke_qform(psi(sym.build()), hecke_n);
    std::cout << "value: " << to_string(f(parse_rat(x_text))) << "\n";
    std::cout << "period: " << to_string(hmap(f)) << "\n";
  });

  // manin
  auto* manin = app.add_subcommand("manin", "Manin sets and Hecke eigenvalues");
  manin->require_subcommand(1);
  long manin_n = 2;
  int manin_w = 10;
  std::string manin_parity = "-";
  auto* m_list = manin->add_subcommand("list", "elements of Man_n");
  m_list->add_option("--n", manin_n)->required();
  m_list->callback([&] {
    const auto s = manin_set(manin_n);
    std::cout << "|Man_" << manin_n << "| = " << s.mats.size() << "\n";
    for (const auto& m : s.mats) std::cout << "  " << to_string(m) << "\n";
  });
  auto* m_eigen = manin->add_subcommand("eigen", "eigenvalue of tilde_T(n) on a one-dimensional W_w^parity");
  m_eigen->add_option("--n", manin_n)->required();
  m_eigen->add_option("--weight,-w", manin_w);
  m_eigen->add_option("--parity", manin_parity);
  m_eigen->callback([&] { std::cout << to_string(eigenvalue_on_line(manin_n, manin_w, parse_parity(manin_parity))) << "\n"; });

  // gamma02
  auto* g02 = app.add_subcommand("gamma02", "words in T, R and the multiplier chi");
  g02->require_subcommand(1);
  std::string matrix_text;
  auto* g_chi = g02->add_subcommand("chi", "chi(gamma) with chi(T) = chi(R) = zeta24");
  g_chi->add_option("--matrix", matrix_text, "a,b,c,d")->required();
  g_chi->callback([&] {
    const auto m = parse_mat(matrix_text);
    const auto w = decompose_gamma02(m);
    std::cout << "word: " << to_string(w) << "\n" << "chi: " << to_string(chi_eval(w, MultSys::chi())) << "\n";
  });

  // sigma: the suite when no subcommand is given
  auto* sig = app.add_subcommand("sigma", "Ramanujan's sigma(q) and f(x) = q^(1/24) sigma(q); runs the suite by default");
  add_suite_flags(sig);
  long sig_p = 5;
  int order = 50;
  auto* s_eval = sig->add_subcommand("eval", "f(x) and sigma(e^(2 pi i x))");
  s_eval->add_option("--x", x_text)->required();
  s_eval->callback([&] {
    const Rat x = parse_rat(x_text);
    SigmaTrace trace;
    const Cplx s = sigma_at_root(x.get_num(), x.get_den(), {}, &trace);
    std::cout << "sigma: " << cplx_str(s) << "\n" << "f: " << cplx_str(f_eval(x)) << "\n";
    std::cout << "arithmetic: " << (trace.multiprecision ? std::to_string(trace.bits) + "-bit MPFR" : "double") << "\n";
  });
  auto* s_series = sig->add_subcommand("series-check", "both q-series as formal integer series");
  s_series->add_option("--order", order);
  s_series->callback([&] {
    const auto s = series_identity_check(order);
    std::cout << (s.pass() ? "agree" : "mismatch at q^" + std::to_string(*s.first_mismatch)) << " through q^" << order
              << "\n";
    for (int i = 0; i <= std::min(order, 15); ++i) std::cout << (i ? " " : "") << s.andrews[static_cast<std::size_t>(i)];
    std::cout << "\n";
    exit_code = s.pass() ? 0 : 1;
  });
  auto* s_hecke = sig->add_subcommand("hecke", "g(x) = (T_p f)(x)");
  s_hecke->add_option("--p", sig_p)->required();
  s_hecke->add_option("--x", x_text)->required();
  s_hecke->callback([&] {
    const Rat x = parse_rat(x_text);
    const auto g = hecke_sigma_detail(sig_p, x);
    std::cout << "g: " << cplx_str(g.value) << "\n" << "term scale: " << g.scale << "\n";
  });
  auto* s_probe = sig->add_subcommand("probe", "cocycle samples along x0 + 10^-m");
  long probe_p = 0;
  ProbeConfig probe_cfg;
  s_probe->add_option("--p", probe_p, "prime for g = T_p f; omit for f");
  s_probe->add_option("--mmin", probe_cfg.m_min);
  s_probe->add_option("--mmax", probe_cfg.m_max);
  s_probe->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
  s_probe->callback([&] {
    const auto r = cocycle_probe(probe_p > 0 ? std::optional<long>(probe_p) : std::nullopt, probe_cfg);
    if (format == "csv") {
      std::cout << "base,m,x,re,im,diff\n";
      for (const auto& c : r.chains)
        for (std::size_t i = 0; i < c.xs.size(); ++i)
          std::cout << to_string(c.base) << ',' << probe_cfg.m_min + static_cast<int>(i) << ',' << to_string(c.xs[i]) << ','
                    << c.values[i].real() << ',' << c.values[i].imag() << ',' << (i ? std::to_string(c.diffs[i - 1]) : "")
                    << "\n";
    } else {
      for (const auto& c : r.chains) {
        std::cout << to_string(c.base) << ": ";
        if (c.near_singular) std::cout << c.note;
        for (double d : c.diffs) std::cout << d << " ";
        std::cout << (c.near_singular ? "" : c.decreasing() ? "decreasing" : "NOT decreasing") << "\n";
      }
    }
    exit_code = r.pass() ? 0 : 1;
  });
  sig->callback([&] {
    if (sig->get_subcommands().empty()) run_named("sigma");
  });

  // delta
  auto* delta = app.add_subcommand("delta", "the discriminant form and its period polynomial");
  delta->require_subcommand(1);
  auto* d_periods = delta->add_subcommand("periods", "coefficients of r_Delta(X, Y)");
  d_periods->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  d_periods->callback([&] {
    const auto r = period_poly_delta();
    if (format == "json") {
      json j{{"weight", 10}, {"coefficients", json::array()}};
      for (const auto& c : r) j["coefficients"].push_back(cplx_json(c));
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << "X^" << i << " Y^" << 10 - i << ": " << cplx_str(r[i]) << "\n";
    }
  });
  int terms = 200;
  auto* d_eichler = delta->add_subcommand("eichler", "Eichler integral Q(x) and Q(x) - x^10 Q(-1/x)");
  d_eichler->add_option("--x", x_text)->required();
  d_eichler->add_option("--terms", terms);
  d_eichler->callback([&] {
    const Rat x = parse_rat(x_text);
    std::cout << "Q: " << cplx_str(eichler_integral(x, terms)) << "\n";
    if (sgn(x) != 0)
      std::cout << "period: " << cplx_str(eichler_period(x, terms)) << "\n"
                << "r(1,x): " << cplx_str(one_variable(period_poly_delta(), x)) << "\n";
  });
  long dn = 2;
  auto* d_hecke = delta->add_subcommand("hecke-check", "tilde_T(n) on r_Delta^- against tau(n)");
  d_hecke->add_option("--n", dn)->required();
  d_hecke->callback([&] {
    const auto h = hecke_period_crosscheck(dn);
    std::cout << "tau(" << dn << ") = " << h.tau.get_str() << ", lambda = " << h.lambda << ", residual = " << h.residual
              << (h.pass ? " pass" : " FAIL") << "\n";
    exit_code = h.pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
