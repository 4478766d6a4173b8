#ifndef ISOJAC_VERIFY_HPP
#define ISOJAC_VERIFY_HPP

#include "isojac/catalog.hpp"
#include "isojac/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isojac {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string family;
  int n = 0;
  int d = 0;
  long t = 1;
  std::string variant;
  std::string provenance;
  long genus = 0;
  std::vector<int> slices;
  std::string moduli;  // empty when f is unavailable
  std::optional<Integer> m;
  std::optional<AbelianGroup> kernel;
  std::optional<AbelianGroup> expected_kernel;
  std::vector<GakEntry> blocks;
  std::vector<Check> checks;
  /// Wall-clock milliseconds per stage; kept out of the comparison payload.
  std::map<std::string, double> wall_ms;

  bool pass() const;
  /// Deterministic JSON; timings are added under "timing" only on request.
  std::string to_json(bool include_timing = false) const;
  std::string to_text() const;
};

/// Runs every applicable check for the family at genus parameter d. The family
/// is resolved first when it has not been. Failures are recorded in the
/// report, never thrown.
VerificationReport verify_family(const FamilySpec& spec, int d, long t_value = 1);

/// verify_family for every (family, d) with 2 <= d <= d_max, in parallel;
/// output sorted by (n, d).
std::vector<VerificationReport> run_table(const std::vector<FamilySpec>& specs, int d_max);

/// Dickson family of conductor n (odd, >= 3): the product identity
/// (x1 - x2) prod_i A_{n,i} = D_n(x1, 1) - D_n(x2, 1), and with check_rm the
/// annihilation of D(A_{n,i})_{n-1} by the minimal polynomial of eta_i.
std::vector<Check> dickson_checks(int n, bool check_rm);

/// Cyclotomic family of conductor n: D(zeta^i x1 - x2)_{n-1}^n = I for every
/// 1 <= i < n.
std::vector<Check> cyclotomic_checks(int n);

std::string checks_to_json(const std::string& subject, const std::vector<Check>& checks);
std::string checks_to_text(const std::string& subject, const std::vector<Check>& checks);
bool all_pass(const std::vector<Check>& checks);

/// JSON array of reports with the schema tag.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing = false);

}  // namespace isojac

#endif  // ISOJAC_VERIFY_HPP
