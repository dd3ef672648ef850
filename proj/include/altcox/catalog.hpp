#pragma once

// The verification catalog behind `altcox verify`: every stated realization
// and isomorphism checked against the oracle or the enumerator.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "altcox/coxeter.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"

namespace altcox {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// images, carmichael, orders, spinor, vv, artin, paths, prop33, universal, example.
const std::vector<std::string>& catalog_groups();

struct CatalogOptions {
  /// Restrict to one group; empty runs everything.
  std::string only;
  EnumerationOptions enumeration;
  /// Run checks on the OpenMP worker pool.
  bool parallel = true;
};

/// Results in catalog order regardless of scheduling. Throws
/// std::invalid_argument for an unknown group name.
std::vector<CheckResult> run_catalog(const CatalogOptions& options = {});

/// Checks a user-supplied presentation against the realization of a triple.
CheckResult check_presentation_images(const Presentation& p, Family family, Variant variant,
                                      int rank);

/// One line per check: "PASS|FAIL  group  name  detail".
std::string render_results(const std::vector<CheckResult>& results);

/// The 5-vertex matrix of the disconnected example: components {0,1}
/// (label 4) and the triangle {2,3,4}.
CoxeterMatrix example_matrix();
/// Its extension anchored at 1 and 2, giving the virtual edge (1,2).
ConnectedExtension example_extension();

/// r'_i = r_i^(-1)^i; braid relator r'_i r'_{i+1} r'_i (r'_{i+1} r'_i r'_{i+1})^-1
/// evaluated under the type A edge images at rank n, for every i.
bool artin_relations_hold(int n);

/// The example's expected relators, in word syntax over r1_2 .. r4_5.
const std::vector<std::string>& example_expected_relators();

/// Faithful realization of the example group inside B2 x (affine A2): signed
/// permutations for the first component, integral reflection matrices for
/// the triangle. Words are over the example's edge generators.
class ExampleRealization {
 public:
  ExampleRealization();
  bool trivial(const Word& w) const;
  /// Evidence that the group is infinite: (s2 s3 s4)^2 has powers whose
  /// entries grow without repeating the identity up to `steps`.
  bool infinite_order_witness(int steps) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Random walks (start, ..., end) in the extension with m = m_start,end
/// finite; (path word)^m must be trivial. Returns the number of failures.
std::size_t path_relator_failures(const ConnectedExtension& e, std::size_t walks, unsigned seed,
                                  const std::function<bool(const Word&)>& trivial);

}  // namespace altcox
