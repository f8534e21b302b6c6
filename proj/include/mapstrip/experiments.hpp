#pragma once

// Experiment pipelines: almost-periodicity verdicts for products and
// sums via the separation criterion, the zero/pole near-collision table
// for the sqrt2 lattice pair, and the config-driven report runner.

#include <optional>
#include <string>
#include <vector>

#include "mapstrip/almost_period.hpp"
#include "mapstrip/core.hpp"
#include "mapstrip/wedge.hpp"

namespace mapstrip {

enum class APClass { AP, NOT_AP, INCONCLUSIVE };

const char* ap_class_name(APClass v);

struct VerdictParams {
  Strip strip{-1.0, 1.0};
  std::vector<double> window_halfwidths{25.0, 100.0, 400.0};
  double threshold = 0.01;
  double locate_tol = 1e-9;
  // confirming almost-period scan, attached when separation holds
  double scan_epsilon = 0.25;
  Interval tau_window{0.0, 30.0};
  double tau_step = 0.25;
  Interval z_window{0.0, 10.0};
  GridSpec grid{0.1, 0.25, 0.0};
};

/// Separation-criterion verdict. NOT_AP only with measured decay across
/// at least three growing windows ending below the threshold; AP only
/// with stable separation plus a successful almost-period scan; anything
/// else stays INCONCLUSIVE.
struct APVerdict {
  APClass verdict = APClass::INCONCLUSIVE;
  bool separated = false;
  double min_separation = 0.0;
  double threshold = 0.0;
  std::vector<double> window_halfwidths;
  std::vector<double> separations;
  std::optional<ScanReport> ap_evidence;
};

APVerdict ap_verdict(const MeromorphicAP& f, const VerdictParams& params);
APVerdict product_verdict(const MeromorphicAP& f1, const MeromorphicAP& f2,
                          const VerdictParams& params);
APVerdict sum_verdict(const MeromorphicAP& f1, const MeromorphicAP& f2,
                      const VerdictParams& params);

/// One row of the near-collision table for zeros n/sqrt2 against poles m:
/// brute-force minimum of |n/sqrt2 - m| over the window |Re z| <= R, and
/// the bound (1 + 1/sqrt2) * delta(R) realized by the largest sqrt2
/// convergent with denominator <= R.
struct KroneckerRow {
  double R;
  double min_distance;
  long n;  // realizing zero index (zero at n/sqrt2)
  long m;  // realizing pole
  double delta;
  double bound;
};

/// Throws AssertionFailed if any row violates min_distance <= bound.
std::vector<KroneckerRow> kronecker_table(const std::vector<double>& R_values);

std::string kronecker_table_to_csv(const std::vector<KroneckerRow>& rows);
std::string ap_verdict_to_json(const APVerdict& verdict);
std::string realizability_to_json(const RealizabilityVerdict& verdict,
                                  const BasisPtr& basis);

struct ExperimentResult {
  bool ok = true;
  std::string report_json;
  std::vector<std::string> written_files;
};

/// Run one experiment described by a key=value config file; artifacts
/// land in out_dir. `ok` reflects the config's embedded assertions.
/// Throws ConfigError / ParseError / IoError for malformed inputs.
ExperimentResult run_experiment(const std::string& config_path,
                                const std::string& out_dir);

}  // namespace mapstrip
