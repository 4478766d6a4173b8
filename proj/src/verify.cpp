#include "isojac/verify.hpp"

#include "isojac/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "json.hpp"

namespace isojac {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch(std::map<std::string, double>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(Clock::now()) {}
  ~Stopwatch() {
    sink_[name_] += std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  std::map<std::string, double>& sink_;
  std::string name_;
  Clock::time_point start_;
};

ordered_json group_json(const AbelianGroup& g) {
  ordered_json divisors = ordered_json::array();
  for (const auto& d : g.invariant_factors()) divisors.push_back(d.get_str());
  return {{"group", g.to_string()}, {"divisors", divisors}, {"free_rank", g.free_rank()}};
}

ordered_json report_json(const VerificationReport& r, bool include_timing) {
  ordered_json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["d"] = r.d;
  j["t"] = r.t;
  j["variant"] = r.variant;
  j["provenance"] = r.provenance;
  j["genus"] = r.genus;
  j["slices"] = r.slices;
  j["moduli"] = r.moduli.empty() ? ordered_json(nullptr) : ordered_json(r.moduli);
  j["m"] = r.m ? ordered_json(r.m->get_str()) : ordered_json(nullptr);
  j["kernel"] = r.kernel ? group_json(*r.kernel) : ordered_json(nullptr);
  j["expected_kernel"] = r.expected_kernel ? group_json(*r.expected_kernel) : ordered_json(nullptr);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"k", b.k}, {"G", group_json(b.group)}, {"det_norm", b.det_norm.get_str()}});
  j["gak"] = blocks;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["pass"] = r.pass();
  if (include_timing) j["timing"] = r.wall_ms;
  return j;
}

}  // namespace

bool VerificationReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_json(bool include_timing) const {
  ordered_json j;
  j["schema"] = "isojac-report/1";
  j["report"] = report_json(*this, include_timing);
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "family " << family << "  n = " << n << "  d = " << d << "  t = " << t << "\n";
  os << "  variant        " << variant << " (" << provenance << ")\n";
  os << "  genus          " << genus << "\n";
  os << "  slices         (";
  for (std::size_t i = 0; i < slices.size(); ++i) os << (i ? ", " : "") << slices[i];
  os << ")\n";
  if (!moduli.empty()) os << "  moduli         " << moduli << "\n";
  os << "  m              " << (m ? m->get_str() : "-") << "\n";
  os << "  kernel         " << (kernel ? kernel->to_string() : "-") << "\n";
  if (expected_kernel) os << "  expected       " << expected_kernel->to_string() << "\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

VerificationReport verify_family(const FamilySpec& input, int d, long t_value) {
  VerificationReport rep;
  rep.family = input.id;
  rep.n = input.n;
  rep.d = d;
  rep.t = t_value;
  rep.provenance = input.provenance;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  };

  FamilySpec spec = input;
  try {
    Stopwatch sw(rep.wall_ms, "resolve");
    if (spec.variant == "as-loaded") spec = resolved(std::move(spec));
    rep.variant = spec.variant;
    check("variant", true, spec.variant);
  } catch (const std::exception& e) {
    rep.variant = spec.variant;
    check("variant", false, e.what());
    return rep;
  }
  const CorrPoly& a = *spec.A;
  const int n = spec.n;

  guarded("geometry", [&] {
    const SliceProfile prof = slice_profile(d, n);
    rep.genus = prof.g;
    rep.slices = prof.p;
    check("geometry", static_cast<long>(interior_points(d, n).size()) == prof.g,
          "g = " + std::to_string(prof.g) + ", B = " + std::to_string(prof.B));
  });
  if (rep.genus < 1) return rep;

  guarded("shape", [&] { check("shape", true, "r = " + std::to_string(shape_check(a, n))); });

  if (spec.expected.tau_sign)
    guarded("tau_symmetry", [&] {
      const bool plus = *spec.expected.tau_sign > 0;
      check("tau_symmetry", tau(a) == (plus ? sigma(a) : -sigma(a)),
            plus ? "tau(A) = sigma(A)" : "tau(A) = -sigma(A)");
    });

  if (spec.expected.e)
    check("field_degree", spec.field->degree() == *spec.expected.e,
          "e = " + std::to_string(spec.field->degree()));

  std::optional<DiffBlock> block;
  guarded("split", [&] {
    Stopwatch sw(rep.wall_ms, "diffrep");
    block = differential_block(a, n);
    rep.m = check_split(a, n);
    if (spec.expected.m)
      check("split", rep.m && *rep.m == *spec.expected.m,
            rep.m ? "D(A) D(tau A) = " + rep.m->get_str() + " I" : "product is not a positive integer scalar");
  });

  if (spec.printed_block && block)
    guarded("printed_block", [&] {
      const BlockMatch match = compare_blocks(*block, *spec.printed_block);
      check("printed_block", match != BlockMatch::Mismatch, to_string(match));
    });

  if (auto diff = spec.difference())
    guarded("factorization", [&] {
      Stopwatch sw(rep.wall_ms, "factorization");
      const CorrPoly b = exact_divide(*diff, a);
      check("factorization", true, "deg_x1 B = " + std::to_string(b.degree_x1()));
    });

  if (spec.f && d >= 2 && genus(d, n) > 1)
    guarded("moduli", [&] {
      const ModuliReport mr = moduli_count(*spec.f, n, d);
      rep.moduli = to_string(mr.verdict);
      bool ok = mr.verdict != ModuliVerdict::HypothesesViolated;
      if (!spec.expected.nu.empty())
        ok = ok && ((spec.expected.nu == "d") == (mr.verdict == ModuliVerdict::DModuli));
      check("moduli", ok, rep.moduli + (mr.kappa ? ", kappa = " + mr.kappa->to_string() : ""));
    });

  const bool want_kernel = spec.expected.m || !spec.expected.kernel_template.empty();
  if (block && want_kernel) {
    std::optional<KernelReport> kr;
    guarded("kernel", [&] {
      Stopwatch sw(rep.wall_ms, "kernel");
      kr = kernel_from_block(*block, rep.m, d, t_value);
      rep.kernel = kr->kernel;
      rep.blocks = kr->blocks;
      if (!spec.expected.kernel_template.empty()) {
        rep.expected_kernel = instantiate_kernel(spec.expected.kernel_template, d, n);
        check("kernel", *rep.expected_kernel == kr->kernel,
              kr->kernel.to_string() + " vs " + rep.expected_kernel->to_string());
      }
    });
    if (kr) {
      if (kr->squarefree_kernel)
        check("squarefree_route", kr->routes_agree,
              "(Z/" + rep.m->get_str() + ")^g = " + kr->squarefree_kernel->to_string() + ", Smith route " +
                  kr->kernel.to_string());
      if (rep.m)
        check("kernel_order", kr->order_ok && kr->exponent_ok,
              "|ker| = " + (kr->kernel.is_finite() ? kr->kernel.order().get_str() : std::string("inf")) +
                  ", exponent " + (kr->kernel.is_finite() ? kr->kernel.exponent().get_str() : std::string("inf")));
      bool norm_ok = true;
      std::string detail;
      for (const auto& b : kr->blocks) {
        if (!b.group.is_finite()) {
          norm_ok = false;
          detail += " G(A," + std::to_string(b.k) + ") infinite;";
          continue;
        }
        const Rational sq = b.det_norm * b.det_norm;
        if (Rational(b.group.order()) != sq) {
          norm_ok = false;
          detail += " |G(A," + std::to_string(b.k) + ")| != N(det)^2;";
        }
        if (rep.m) {
          Integer pw;
          mpz_pow_ui(pw.get_mpz_t(), rep.m->get_mpz_t(), static_cast<unsigned long>(kr->e * b.k));
          if (b.group.order() != pw) {
            norm_ok = false;
            detail += " |G(A," + std::to_string(b.k) + ")| != m^(ek);";
          }
        }
      }
      check("norm_consistency", norm_ok,
            norm_ok ? std::to_string(kr->blocks.size()) + " blocks consistent" : detail.substr(1));

      if (spec.has_t())
        guarded("t_independence", [&] {
          Stopwatch sw(rep.wall_ms, "t_independence");
          bool same = true;
          std::string seen;
          for (long tv : {1L, 2L, 3L}) {
            const AbelianGroup g = tv == t_value ? kr->kernel : kernel_from_block(*block, rep.m, d, tv).kernel;
            same = same && g == kr->kernel;
            seen += (seen.empty() ? "" : ", ") + std::string("t=") + std::to_string(tv) + ": " + g.to_string();
          }
          check("t_independence", same, seen);
        });
    }
  }

  if (!spec.degeneration_images.empty())
    guarded("degeneration", [&] {
      Stopwatch sw(rep.wall_ms, "degeneration");
      const auto res = check_degeneration(spec, a);
      check("degeneration", res.matched, res.detail);
    });
  return rep;
}

std::vector<VerificationReport> run_table(const std::vector<FamilySpec>& specs, int d_max) {
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& s : specs) {
    // resolve once per family, not once per d
    auto spec = std::make_shared<FamilySpec>(s);
    try {
      if (spec->variant == "as-loaded") *spec = resolved(*spec);
    } catch (const std::exception&) {
      // verify_family records the failure
    }
    for (int d = 2; d <= d_max; ++d)
      jobs.push_back(std::async(std::launch::async, [spec, d] { return verify_family(*spec, d); }));
  }
  std::vector<VerificationReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.n, a.d) < std::tie(b.n, b.d);
  });
  return out;
}

std::vector<Check> dickson_checks(int n, bool check_rm) {
  if (n < 3 || n % 2 == 0) throw Error("dickson: n must be odd and at least 3");
  std::vector<Check> out;
  const TowerPtr field = real_cyclotomic_field(n);
  const FieldElement one = field->one();
  std::vector<CorrPoly> factors;
  for (int i = 1; i <= (n - 1) / 2; ++i) factors.push_back(dickson_factor(n, i));

  CorrPoly lhs = CorrPoly::x1(field) - CorrPoly::x2(field);
  for (const auto& a : factors) lhs = lhs * a;
  const CorrPoly dn = dickson(n, one);
  const CorrPoly rhs = dn - as_x2(dn);
  out.push_back({"dickson_product", lhs == rhs,
                 "(x1 - x2) prod A_{" + std::to_string(n) + ",i} = D_" + std::to_string(n) + "(x1) - D_" +
                     std::to_string(n) + "(x2)"});

  if (check_rm) {
    const FieldElement eta = field->generator(0);
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      const std::string name = "rm_annihilation[" + std::to_string(i) + "]";
      try {
        const FieldElement eta_i = dickson_value(i, eta, one);
        const std::vector<Rational> mp = minimal_polynomial(eta_i);
        const DiffBlock block = differential_block(factors[i - 1], n);
        const DiffBlock value = evaluate_at(mp, block);
        const bool zero = value == DiffBlock(field, value.size());
        out.push_back({name, zero, "deg m_i = " + std::to_string(mp.size() - 1)});
      } catch (const std::exception& e) {
        out.push_back({name, false, e.what()});
      }
    }
  }
  return out;
}

std::vector<Check> cyclotomic_checks(int n) {
  if (n < 3) throw Error("cyclotomic: n must be at least 3");
  std::vector<Check> out;
  for (int i = 1; i < n; ++i) {
    const std::string name = "cyclotomic_power[" + std::to_string(i) + "]";
    try {
      const DiffBlock block = differential_block(cyclotomic_corr(n, i), n);
      out.push_back({name, block.pow(n).is_identity(), "D(zeta^" + std::to_string(i) + " x1 - x2)^" +
                                                          std::to_string(n) + " = I"});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string checks_to_json(const std::string& subject, const std::vector<Check>& checks) {
  ordered_json j;
  j["schema"] = "isojac-report/1";
  j["subject"] = subject;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = arr;
  j["pass"] = all_pass(checks);
  return j.dump(2) + "\n";
}

std::string checks_to_text(const std::string& subject, const std::vector<Check>& checks) {
  std::ostringstream os;
  os << subject << "\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << (all_pass(checks) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing) {
  ordered_json j;
  j["schema"] = "isojac-report/1";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, include_timing));
  j["reports"] = arr;
  bool all = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass(); });
  j["pass"] = all;
  return j.dump(2) + "\n";
}

}  // namespace isojac
