// isojac: command-line front end for the verification pipeline.

#include "isojac/catalog.hpp"
#include "isojac/family_io.hpp"
#include "isojac/geometry.hpp"
#include "isojac/lattice.hpp"
#include "isojac/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

using namespace isojac;
using nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  bool timing = false;
  std::string out;
  std::string file;
  std::string family;
  int d = 0;
  int n = 0;
  long t = 1;
  bool t_given = false;
  int d_max = 0;
  bool check_rm = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json envelope() {
  ordered_json j;
  j["schema"] = "isojac-report/1";
  return j;
}

FamilySpec family(const Options& o) {
  std::optional<std::string> file;
  if (!o.file.empty()) file = o.file;
  return load_family(o.family, file);
}

int cmd_genus(const Options& o) {
  const long g = genus(o.d, o.n);
  if (o.json) {
    auto j = envelope();
    j["d"] = o.d;
    j["n"] = o.n;
    j["genus"] = g;
    emit(o, dump(j));
  } else {
    emit(o, std::to_string(g) + "\n");
  }
  return 0;
}

int cmd_profile(const Options& o) {
  const SliceProfile p = slice_profile(o.d, o.n);
  if (o.json) {
    auto j = envelope();
    j["d"] = p.d;
    j["n"] = p.n;
    j["genus"] = p.g;
    j["B"] = p.B;
    j["slices"] = p.p;
    emit(o, dump(j));
  } else {
    std::ostringstream os;
    os << "g = " << p.g << "\nB = " << p.B << "\np = (";
    for (std::size_t i = 0; i < p.p.size(); ++i) os << (i ? ", " : "") << p.p[i];
    os << ")\n";
    emit(o, os.str());
  }
  return 0;
}

int cmd_block(const Options& o) {
  const FamilySpec spec = resolved(family(o));
  const DiffBlock block = differential_block(*spec.A, spec.n);
  if (o.json) {
    auto j = envelope();
    j["family"] = spec.id;
    j["variant"] = spec.variant;
    ordered_json rows = ordered_json::array();
    if (o.t_given) {
      j["t"] = o.t;
      for (const auto& row : block.specialize(spec.field->from_rational(Rational(o.t)))) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        rows.push_back(r);
      }
    } else {
      for (std::size_t i = 0; i < block.size(); ++i) {
        ordered_json r = ordered_json::array();
        for (std::size_t k = 0; k < block.size(); ++k) r.push_back(block(i, k).to_string());
        rows.push_back(r);
      }
    }
    j["block"] = rows;
    emit(o, dump(j));
    return 0;
  }
  std::ostringstream os;
  os << "family " << spec.id << " (" << spec.variant << ")\n";
  if (o.t_given) {
    os << "t = " << o.t << "\n";
    for (const auto& row : block.specialize(spec.field->from_rational(Rational(o.t)))) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "  " : "") << row[k].to_string();
      os << "\n";
    }
  } else {
    os << block.to_string();
  }
  emit(o, os.str());
  return 0;
}

int cmd_split(const Options& o) {
  const FamilySpec spec = resolved(family(o));
  const auto m = check_split(*spec.A, spec.n);
  const bool ok = m && (!spec.expected.m || *m == *spec.expected.m);
  if (o.json) {
    auto j = envelope();
    j["family"] = spec.id;
    j["variant"] = spec.variant;
    j["m"] = m ? ordered_json(m->get_str()) : ordered_json(nullptr);
    j["expected_m"] = spec.expected.m ? ordered_json(spec.expected.m->get_str()) : ordered_json(nullptr);
    j["pass"] = ok;
    emit(o, dump(j));
  } else {
    emit(o, m ? "m = " + m->get_str() + "\n" + (ok ? "PASS\n" : "FAIL\n") : std::string("not split\nFAIL\n"));
  }
  return ok ? 0 : 1;
}

int cmd_kernel(const Options& o) {
  const FamilySpec spec = resolved(family(o));
  const auto m = check_split(*spec.A, spec.n);
  const KernelReport kr = kernel_from_block(differential_block(*spec.A, spec.n), m, o.d, o.t);
  const bool ok = (!kr.squarefree_kernel || kr.routes_agree) && (!m || (kr.order_ok && kr.exponent_ok));
  if (o.json) {
    auto j = envelope();
    j["family"] = spec.id;
    j["d"] = o.d;
    j["t"] = o.t;
    j["m"] = m ? ordered_json(m->get_str()) : ordered_json(nullptr);
    ordered_json blocks = ordered_json::array();
    for (const auto& b : kr.blocks)
      blocks.push_back({{"k", b.k}, {"G", b.group.to_string()}, {"det_norm", b.det_norm.get_str()}});
    j["gak"] = blocks;
    j["kernel"] = kr.kernel.to_string();
    j["pass"] = ok;
    emit(o, dump(j));
  } else {
    std::ostringstream os;
    for (const auto& b : kr.blocks) os << "G(A," << b.k << ") = " << b.group.to_string() << "\n";
    os << "kernel = " << kr.kernel.to_string() << "\n" << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, os.str());
  }
  return ok ? 0 : 1;
}

int report_out(const Options& o, const VerificationReport& r) {
  emit(o, o.json ? r.to_json(o.timing) : r.to_text());
  return r.pass() ? 0 : 1;
}

int cmd_verify(const Options& o) { return report_out(o, verify_family(family(o), o.d, o.t)); }

int cmd_load(const Options& o) { return report_out(o, verify_family(read_family_file(o.file), o.d, o.t)); }

int cmd_table(const Options& o) {
  std::vector<FamilySpec> specs;
  for (const auto& id : bundled_family_ids()) specs.push_back(load_family(id));
  if (!o.file.empty()) specs.push_back(read_family_file(o.file));
  const auto reports = run_table(specs, o.d_max);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  if (o.json) {
    emit(o, reports_to_json(reports, o.timing));
  } else {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-6s %3s %5s %3s  %-32s %-32s %s\n", "family", "d", "g", "m", "kernel",
                  "expected", "verdict");
    os << line;
    for (const auto& r : reports) {
      std::snprintf(line, sizeof line, "%-6s %3d %5ld %3s  %-32s %-32s %s\n", r.family.c_str(), r.d, r.genus,
                    r.m ? r.m->get_str().c_str() : "-", r.kernel ? r.kernel->to_string().c_str() : "-",
                    r.expected_kernel ? r.expected_kernel->to_string().c_str() : "-", r.pass() ? "PASS" : "FAIL");
      os << line;
    }
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        if (!c.pass) os << "  " << r.family << " d=" << r.d << " " << c.name << ": " << c.detail << "\n";
    emit(o, os.str());
  }
  return ok ? 0 : 1;
}

int cmd_dickson(const Options& o) {
  const auto checks = dickson_checks(o.n, o.check_rm);
  const std::string subject = "dickson n = " + std::to_string(o.n);
  emit(o, o.json ? checks_to_json(subject, checks) : checks_to_text(subject, checks));
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of isogeny splittings of Jacobians from correspondences"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_flag("--timing", o.timing, "Include wall-clock timings in JSON reports");
  app.add_option("--out", o.out, "Write the report to a file");
  app.add_option("--file", o.file, "Family data file (JSON)");

  auto* genus_cmd = app.add_subcommand("genus", "Geometric genus of P_d(y) = f(x), deg f = n");
  genus_cmd->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  genus_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* profile_cmd = app.add_subcommand("profile", "Slice sizes p(i) and the bound B");
  profile_cmd->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  profile_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* block_cmd = app.add_subcommand("block", "Print D(A)_{n-1} for a family");
  block_cmd->add_option("--family", o.family)->required();
  block_cmd->add_option("--t", o.t, "Specialize t");
  block_cmd->add_flag("--json", o.json);

  auto* split_cmd = app.add_subcommand("split", "Certify D(A) D(tau A) = m I");
  split_cmd->add_option("--family", o.family)->required();

  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel structure of the splitting");
  kernel_cmd->add_option("--family", o.family)->required();
  kernel_cmd->add_option("--d", o.d)->required()->check(CLI::Range(2, 1000));
  kernel_cmd->add_option("--t", o.t);

  auto* verify_cmd = app.add_subcommand("verify", "Run every check for one family and d");
  verify_cmd->add_option("--family", o.family)->required();
  verify_cmd->add_option("--d", o.d)->required()->check(CLI::Range(2, 1000));
  verify_cmd->add_option("--t", o.t);

  auto* table_cmd = app.add_subcommand("table", "Computed vs expected rows for the bundled families");
  table_cmd->add_option("--d-max", o.d_max)->required()->check(CLI::Range(2, 1000));

  auto* dickson_cmd = app.add_subcommand("dickson", "Dickson product identity");
  dickson_cmd->add_option("--n", o.n)->required()->check(CLI::Range(3, 1000));
  dickson_cmd->add_flag("--check-rm", o.check_rm, "Also check the minimal-polynomial annihilation");

  auto* load_cmd = app.add_subcommand("load", "Verify a family read from a data file");
  load_cmd->add_option("--file", o.file)->required()->check(CLI::ExistingFile);
  load_cmd->add_option("--d", o.d)->required()->check(CLI::Range(2, 1000));
  load_cmd->add_option("--t", o.t);

  CLI11_PARSE(app, argc, argv);
  o.t_given = block_cmd->count("--t") > 0;

  try {
    if (*genus_cmd) return cmd_genus(o);
    if (*profile_cmd) return cmd_profile(o);
    if (*block_cmd) return cmd_block(o);
    if (*split_cmd) return cmd_split(o);
    if (*kernel_cmd) return cmd_kernel(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*table_cmd) return cmd_table(o);
    if (*dickson_cmd) return cmd_dickson(o);
    if (*load_cmd) return cmd_load(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
