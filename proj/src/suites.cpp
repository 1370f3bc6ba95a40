#include "qmflab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qmflab/dedekind.hpp"
#include "qmflab/eichler.hpp"
#include "qmflab/kernels.hpp"
#include "qmflab/maninhecke.hpp"
#include "qmflab/modgroup.hpp"
#include "qmflab/qmf.hpp"
#include "qmflab/sigma.hpp"

namespace qmflab {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string num(Cplx v) { return num(v.real()) + (v.imag() < 0 ? "" : "+") + num(v.imag()) + "i"; }

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

std::vector<int> weights_or(const SuiteConfig& c, std::vector<int> fallback) {
  return c.weights.empty() ? fallback : c.weights;
}

std::vector<Rat> first_n(std::vector<Rat> v, std::size_t n) {
  v.resize(std::min(v.size(), n));
  return v;
}

// Rational combinations of psi(E), E over the U_w basis, F_w and G_w, whose
// period function vanishes; each must be c (gcd(h,k)/h)^w with c its value at 0.
CheckRecord zero_period_combinations(int w) {
  return timed_check("zero-period combinations are c (gcd/h)^w, w=" + std::to_string(w), [&](CheckRecord& rec) {
    std::vector<QForm> forms;
    for (const auto& g : basis_U(w, Parity::both)) forms.push_back(psi(reconstruct(g, Rat(0))));
    forms.push_back(psi(builtin_F(w)));
    forms.push_back(psi(builtin_G(w)));
    RatMatrix a(static_cast<std::size_t>(w + 1), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto h = hmap(forms[j]);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(w); ++i) a(i, j) = h.coeffs()[i];
    }
    const auto kernel = nullspace(a);
    bool ok = !kernel.empty();
    std::size_t grid = 0;
    for (const auto& c : kernel) {
      auto combo = [&](const Rat& x) {
        Rat acc;
        for (std::size_t j = 0; j < forms.size(); ++j)
          if (sgn(c[j]) != 0) acc += c[j] * forms[j](x);
        return acc;
      };
      const Rat c0 = combo(Rat(0));
      const QForm closed = gcd_power_form(c0, w);
      for (long h = 1; h <= 50 && ok; ++h) {
        for (long k = -h; k <= h && ok; ++k) {
          const Rat x = rat_normalize(Int(k), Int(h));
          const Rat v = combo(x);
          ok = v == closed(x) && v == combo(-x);  // equal to the closed form, odd part zero
          ++grid;
        }
      }
    }
    rec.status = status_of(ok);
    rec.with("kernel_dim", std::to_string(kernel.size())).with("grid_points", std::to_string(grid));
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diagram", "hecke-compat", "manin-eigen", "multiplier-compat",
                                              "sigma",   "eichler",      "all"};
  return names;
}

Report run_diagram_suite(const SuiteConfig& config) {
  Report r{"diagram", {}};
  for (int w : weights_or(config, {2, 4, 6, 8, 10, 12})) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = check_diagram(w, config.seed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& c : d.checks) {
      CheckRecord rec{"w=" + std::to_string(w) + ": " + c.name, status_of(c.pass), {}, 0.0};
      if (!c.detail.empty()) rec.with("detail", c.detail);
      r.checks.push_back(std::move(rec));
    }
    r.checks.back().seconds = secs;

    r.checks.push_back(timed_check("hmap(psi(G_w)) = 0, w=" + std::to_string(w), [&](CheckRecord& rec) {
      const auto h = hmap(psi(builtin_G(w)));
      rec.status = status_of(h.is_zero());
      rec.with("hmap", to_string(h));
    }));
    r.checks.push_back(timed_check("Hecke images of G_w are c (gcd/h)^w, w=" + std::to_string(w), [&](CheckRecord& rec) {
      bool ok = true;
      for (long n : {2L, 3L}) {
        const auto f = psi(hecke_symbol(builtin_G(w), n));
        ok = ok && hmap(f).is_zero();
        const auto closed = gcd_power_form(f(Rat(0)), w);
        for (long h = 1; h <= 50 && ok; ++h)
          for (long k = -h; k <= h && ok; ++k) ok = f(Rat(k, h)) == closed(rat_normalize(Int(k), Int(h)));
      }
      rec.status = status_of(ok);
    }));
    r.checks.push_back(zero_period_combinations(w));
  }
  return r;
}

Report run_hecke_compat_suite(const SuiteConfig& config) {
  Report r{"hecke-compat", {}};
  const auto pts = sample_rationals(200, config.seed);
  for (int w : weights_or(config, {10, 12})) {
    const auto basis = basis_U(w, Parity::both);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto e = reconstruct(basis[i], Rat(0));
      const auto f = psi(e);
      const auto hf = hmap(f);
      for (long n = 2; n <= 6; ++n) {
        const std::string tag = "w=" + std::to_string(w) + " E=U_basis[" + std::to_string(i) + "] n=" + std::to_string(n);
        r.checks.push_back(timed_check("Psi(T_n E) = T_n Psi(E), " + tag, [&](CheckRecord& rec) {
          const auto lhs = kernels::qform_batch(psi(hecke_symbol(e, n)), pts);
          const auto rhs = kernels::qform_batch(hecke_qform(f, n), pts);
          std::size_t bad = 0;
          for (std::size_t j = 0; j < pts.size(); ++j)
            if (lhs[j] != rhs[j]) ++bad;
          rec.status = status_of(bad == 0);
          rec.with("points", std::to_string(pts.size())).with("mismatches", std::to_string(bad));
        }));
        r.checks.push_back(timed_check("period function of T_n f is tilde_T(n) of it, " + tag, [&](CheckRecord& rec) {
          const auto lhs = hmap(hecke_qform(f, n));
          const auto rhs = tilde_T(n, hf);
          rec.status = status_of(lhs == rhs);
          rec.with("period", to_string(lhs));
        }));
      }
    }
  }
  return r;
}

Report run_manin_eigen_suite(const SuiteConfig&) {
  Report r{"manin-eigen", {}};
  const auto tau = delta_coeffs(6);
  for (long n : {2L, 3L, 5L, 6L}) {
    r.checks.push_back(timed_check("tilde_T(" + std::to_string(n) + ") on W_10^- is tau(n)", [&](CheckRecord& rec) {
      const Rat lambda = eigenvalue_on_line(n, 10, Parity::odd);
      const Rat expected(tau[static_cast<std::size_t>(n)]);
      rec.status = status_of(lambda == expected);
      rec.with("eigenvalue", to_string(lambda))
          .with("tau", to_string(expected))
          .with("|Man_n|", std::to_string(manin_set(n).mats.size()));
    }));
  }
  r.checks.push_back(timed_check("dim W_w^- = dim S_(w+2), dim W_w^+ = dim S_(w+2) + 1, w = 2..24", [&](CheckRecord& rec) {
    bool ok = true;
    std::string table;
    for (int w = 2; w <= 24; w += 2) {
      const auto minus = basis_W(w, Parity::odd).size();
      const auto plus = basis_W(w, Parity::even).size();
      const auto s = static_cast<std::size_t>(dim_cuspforms(w + 2));
      ok = ok && minus == s && plus == s + 1;
      table += (table.empty() ? "" : " ") + std::to_string(w) + ":" + std::to_string(minus) + "/" + std::to_string(plus);
    }
    rec.status = status_of(ok);
    rec.with("w:minus/plus", table);
  }));
  r.checks.push_back(timed_check("U_w = W_w, w = 2..24", [&](CheckRecord& rec) {
    bool ok = true;
    for (int w = 2; w <= 24 && ok; w += 2) {
      auto u = basis_U(w, Parity::both);
      const auto wb = basis_W(w, Parity::both);
      const auto du = u.size();
      u.insert(u.end(), wb.begin(), wb.end());
      ok = du == wb.size() && poly_rank(u) == du;
    }
    rec.status = status_of(ok);
  }));
  return r;
}

Report run_multiplier_compat_suite(const SuiteConfig& config) {
  Report r{"multiplier-compat", {}};
  r.checks.push_back(timed_check("Gamma0(10) reference generators, p = 5", [&](CheckRecord& rec) {
    bool ok = true;
    for (const auto& [g, expected] : reference_gamma0_10_generators()) {
      const auto pair = compat_pair(g, 5);
      ok = ok && pair.lhs == expected && pair.rhs == expected;
      rec.with(to_string(g), to_string(pair.lhs) + " | " + to_string(pair.rhs));
    }
    rec.status = status_of(ok);
  }));
  const long hi = config.full757 ? 757 : config.pmax;
  const auto primes = kernels::primes_between(std::max(config.pmin, 5L), hi);
  std::vector<CompatReport> reports;
  r.checks.push_back(timed_check("parallel sweep over " + std::to_string(primes.size()) + " primes", [&](CheckRecord& rec) {
    reports = kernels::compat_sweep(primes, config.spot_checks, config.seed);
    rec.with("range", std::to_string(std::max(config.pmin, 5L)) + ".." + std::to_string(hi));
    rec.status = status_of(reports.size() == primes.size());
  }));
  for (const auto& rep : reports) {
    CheckRecord rec{"compatible at p=" + std::to_string(rep.p), status_of(rep.pass()), {}, 0.0};
    std::size_t bad = 0;
    for (const auto& g : rep.generators)
      if (!g.ok()) ++bad;
    rec.with("cosets", std::to_string(rep.cosets))
        .with("generators", std::to_string(rep.generators.size()))
        .with("generator_failures", std::to_string(bad))
        .with("spot_checks", std::to_string(rep.spot_checks))
        .with("spot_failures", std::to_string(rep.spot_failures));
    r.checks.push_back(std::move(rec));
  }
  r.checks.push_back(timed_check("c values: closed form = factorization", [&](CheckRecord& rec) {
    bool ok = true;
    for (long p : primes) {
      const auto a = c_values(p);
      const auto b = c_values_from_factorizations(p, MultSys::chi(), MultSys::chi().pow(p));
      for (std::size_t i = 0; i < a.size(); ++i) ok = ok && a[i].beta == b[i].beta && a[i].c == b[i].c;
    }
    rec.status = status_of(ok);
    rec.with("primes", std::to_string(primes.size()));
  }));
  return r;
}

Report run_sigma_suite(const SuiteConfig& config) {
  Report r{"sigma", {}};
  r.checks.push_back(timed_check("series identity to order 50", [&](CheckRecord& rec) {
    const auto s = series_identity_check(50);
    const std::vector<long> expected{1, 1, -1, 2, -2, 1, 0, 1};
    bool ok = s.pass();
    std::string head;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ok = ok && s.andrews[i] == expected[i] && s.hypergeometric[i] == expected[i];
      head += (i ? "," : "") + s.andrews[i].get_str();
    }
    rec.status = status_of(ok);
    rec.with("first_coefficients", head);
    if (s.first_mismatch) rec.with("first_mismatch", std::to_string(*s.first_mismatch));
  }));
  r.checks.push_back(timed_check("sigma(1) = 2, sigma(-1) = -2", [&](CheckRecord& rec) {
    const Cplx a = sigma_at_root(Int(0), Int(1));
    const Cplx b = sigma_at_root(Int(1), Int(2));
    rec.status = status_of(std::abs(a - 2.0) < 1e-12 && std::abs(b + 2.0) < 1e-12);
    rec.with("sigma(1)", num(a)).with("sigma(-1)", num(b));
  }));

  const auto pts = first_n(sample_rationals(50, config.seed, 300), 50);
  r.checks.push_back(timed_check("f(x+1) = zeta24 f(x), 1e-12 relative", [&](CheckRecord& rec) {
    std::vector<Rat> shifted;
    for (const auto& x : pts) shifted.push_back(x + 1);
    const auto fx = kernels::f_batch(pts);
    const auto fx1 = kernels::f_batch(shifted);
    const Cplx z = zeta_to_cplx(Zeta24(1));
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      worst = std::max(worst, std::abs(fx1[i] - z * fx[i]) / std::max(std::abs(fx[i]), 1e-300));
    rec.status = status_of(worst <= 1e-12);
    rec.with("max_rel_error", num(worst));
  }));

  // g = T_p f vanishes identically for these primes, so errors are measured
  // against the size of the terms that cancel.
  for (long p : {5L, 7L, 11L, 13L}) {
    r.checks.push_back(timed_check("g(x+1) = zeta24^p g(x), p=" + std::to_string(p), [&](CheckRecord& rec) {
      const Cplx z = zeta_to_cplx(Zeta24(p));
      double worst = 0.0, size = 0.0;
      for (const auto& x : pts) {
        const auto g0 = hecke_sigma_detail(p, x), g1 = hecke_sigma_detail(p, x + 1);
        const double scale = std::max(g0.scale, g1.scale);
        worst = std::max(worst, std::abs(g1.value - z * g0.value) / scale);
        size = std::max(size, std::abs(g0.value) / scale);
      }
      rec.status = status_of(worst <= 1e-10);
      rec.with("max_error_over_scale", num(worst)).with("max_|g|_over_scale", num(size));
    }));
    r.checks.push_back(timed_check("closed formula = general Hecke operator, p=" + std::to_string(p), [&](CheckRecord& rec) {
      const auto general = apply_general_hecke([](const Rat& y) { return f_eval(y); }, p, MultSys::chi(),
                                               MultSys::chi().pow(p));
      double worst = 0.0;
      for (std::size_t i = 0; i < 20; ++i) {
        const auto g = hecke_sigma_detail(p, pts[i]);
        worst = std::max(worst, std::abs(g.value - general(pts[i])) / g.scale);
      }
      rec.status = status_of(worst <= 1e-12);
      rec.with("max_error_over_scale", num(worst));
    }));
  }
  for (long p : {23L, 73L}) {
    r.checks.push_back(timed_check("g(x+1) = zeta24^p g(x) and two paths, relative, p=" + std::to_string(p), [&](CheckRecord& rec) {
      const Cplx z = zeta_to_cplx(Zeta24(p));
      const auto general = apply_general_hecke([](const Rat& y) { return f_eval(y); }, p, MultSys::chi(),
                                               MultSys::chi().pow(p));
      const auto sub = first_n(sample_rationals(20, config.seed, 40), 20);
      const auto g0 = kernels::hecke_sigma_batch(p, sub);
      std::vector<Rat> shifted;
      for (const auto& x : sub) shifted.push_back(x + 1);
      const auto g1 = kernels::hecke_sigma_batch(p, shifted);
      double per = 0.0, two = 0.0;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        per = std::max(per, std::abs(g1[i] - z * g0[i]) / std::abs(g0[i]));
        two = std::max(two, std::abs(g0[i] - general(sub[i])) / std::abs(g0[i]));
      }
      rec.status = status_of(per <= 1e-10 && two <= 1e-12);
      rec.with("periodicity_rel_error", num(per)).with("two_path_rel_error", num(two));
    }));
  }
  r.checks.push_back(timed_check("formal T_p image of q^(1/24) sigma(q)", [&](CheckRecord& rec) {
    bool ok = true;
    for (long p : {5L, 7L, 11L, 13L, 73L}) {
      const auto img = formal_hecke_sigma(p, 3000);
      const std::string ev = img.eigenvalue ? to_string(*img.eigenvalue) : "none";
      rec.with("p=" + std::to_string(p), "eigenvalue " + ev + " through M=" + std::to_string(img.max_M));
      ok = ok && (p == 73 ? img.eigenvalue == Rat(2) : img.vanishes());
    }
    rec.status = status_of(ok);
  }));
  r.checks.push_back(timed_check("eigenform probe p=73: g(x)/f(x) at 30 rationals (report only)", [&](CheckRecord& rec) {
    const auto sub = first_n(sample_rationals(30, config.seed + 1, 60), 30);
    const auto g = kernels::hecke_sigma_batch(73, sub);
    const auto f = kernels::f_batch(sub);
    Cplx lo = g[0] / f[0], hi = lo;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const Cplx q = g[i] / f[i];
      lo = {std::min(lo.real(), q.real()), std::min(lo.imag(), q.imag())};
      hi = {std::max(hi.real(), q.real()), std::max(hi.imag(), q.imag())};
    }
    rec.status = Status::skip;
    rec.with("ratio_min", num(lo)).with("ratio_max", num(hi)).with("note", "no assertion");
  }));

  auto probe_record = [&](std::optional<long> p, const ProbeConfig& cfg, bool asserted) {
    const std::string what = p ? "H for g = T_" + std::to_string(*p) + " f" : "h for f";
    return timed_check("cocycle probe: " + what + (asserted ? "" : " (report only)"), [&](CheckRecord& rec) {
      const auto probe = cocycle_probe(p, cfg);
      for (const auto& c : probe.chains) {
        std::string seq;
        for (double d : c.diffs) seq += (seq.empty() ? "" : " ") + num(d);
        rec.with("x0=" + to_string(c.base), c.near_singular ? c.note : seq);
      }
      rec.status = asserted ? status_of(probe.pass()) : Status::skip;
    });
  };
  r.checks.push_back(probe_record(std::nullopt, ProbeConfig{}, true));
  if (config.probe_p) {
    ProbeConfig cfg;
    cfg.m_min = 1;
    cfg.m_max = 3;
    cfg.bases = {Rat(-9, 10), Rat(-3, 10), Rat(1, 10), Rat(7, 10)};
    r.checks.push_back(probe_record(config.probe_p, cfg, false));
  }
  return r;
}

Report run_eichler_suite(const SuiteConfig& config) {
  Report r{"eichler", {}};
  const auto tau = delta_coeffs(200);
  r.checks.push_back(timed_check("tau(1), tau(2), tau(6) = tau(2) tau(3)", [&](CheckRecord& rec) {
    rec.status = status_of(tau[1] == 1 && tau[2] == -24 && tau[6] == tau[2] * tau[3]);
    rec.with("tau(6)", tau[6].get_str());
  }));
  r.checks.push_back(timed_check("L(Delta, s) stable under doubling the terms", [&](CheckRecord& rec) {
    double worst = 0.0;
    for (int s = 1; s <= 11; ++s) worst = std::max(worst, std::abs(L_delta(s, 400) / L_delta(s, 200) - 1.0));
    rec.status = status_of(worst < 1e-9);
    rec.with("max_rel_change", num(worst)).with("L(Delta,6)", num(L_delta(6)));
  }));
  const auto rd = period_poly_delta();
  for (Parity par : {Parity::odd, Parity::even}) {
    r.checks.push_back(timed_check("r_Delta^" + to_string(par) + " lies in W_10^" + to_string(par), [&](CheckRecord& rec) {
      const auto proj = project_onto_W(rd, par);
      rec.status = status_of(proj.residual < 1e-6);
      rec.with("residual", num(proj.residual));
      for (std::size_t i = 0; i < proj.coords.size(); ++i) rec.with("coord" + std::to_string(i), num(proj.coords[i]));
    }));
  }
  r.checks.push_back(timed_check("r_Delta satisfies the period relations", [&](CheckRecord& rec) {
    const double res = period_relation_residual(rd);
    rec.status = status_of(res < 1e-6);
    rec.with("residual", num(res));
  }));
  r.checks.push_back(timed_check("Q(x) - x^10 Q(-1/x) = r_Delta(1, x)", [&](CheckRecord& rec) {
    double worst = 0.0;
    for (const auto& x : {Rat(1, 3), Rat(2, 5), Rat(1, 7)}) {
      const Cplx lhs = eichler_period(x), rhs = one_variable(rd, x);
      worst = std::max(worst, std::abs(lhs - rhs));
      rec.with("x=" + to_string(x), num(lhs) + " vs " + num(rhs));
    }
    rec.status = status_of(worst < 1e-5);
    rec.with("max_abs_error", num(worst));
  }));
  r.checks.push_back(timed_check("Q(x+1) = Q(x)", [&](CheckRecord& rec) {
    double worst = 0.0;
    for (const auto& x : first_n(sample_rationals(20, config.seed, 100), 20))
      worst = std::max(worst, std::abs(eichler_integral(x + 1) - eichler_integral(x)));
    rec.status = status_of(worst < 1e-15);
    rec.with("max_abs_error", num(worst));
  }));
  for (long n = 2; n <= 6; ++n) {
    r.checks.push_back(timed_check("tilde_T(" + std::to_string(n) + ") r_Delta^- = tau(n) r_Delta^-", [&](CheckRecord& rec) {
      const auto h = hecke_period_crosscheck(n);
      rec.status = status_of(h.pass);
      rec.with("tau", h.tau.get_str()).with("lambda", num(h.lambda)).with("residual", num(h.residual));
    }));
  }
  r.checks.push_back(timed_check("Psi(F_w), Psi(G_w) linearly independent (substitute for the spanning claim)", [&](CheckRecord& rec) {
    bool ok = true;
    for (int w : weights_or(config, {2, 4, 6, 8, 10, 12})) {
      const auto f = psi(builtin_F(w)), g = psi(builtin_G(w));
      RatMatrix m;
      std::vector<Rat> rf, rg;
      for (const auto& x : sample_rationals(20, config.seed, 50)) {
        rf.push_back(f(x));
        rg.push_back(g(x));
      }
      m.append_row(rf);
      m.append_row(rg);
      ok = ok && rank(m) == 2;
    }
    rec.status = status_of(ok);
  }));
  return r;
}

Report run_suite(std::string_view name, const SuiteConfig& config) {
  if (name == "diagram") return run_diagram_suite(config);
  if (name == "hecke-compat") return run_hecke_compat_suite(config);
  if (name == "manin-eigen") return run_manin_eigen_suite(config);
  if (name == "multiplier-compat") return run_multiplier_compat_suite(config);
  if (name == "sigma") return run_sigma_suite(config);
  if (name == "eichler") return run_eichler_suite(config);
  if (name == "all") {
    Report all{"all", {}};
    for (const auto& n : suite_names())
      if (n != "all") all.append(run_suite(n, config));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace qmflab
