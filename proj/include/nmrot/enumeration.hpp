#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nmrot/rotation.hpp"

namespace nmrot {

// Rooted forest; parents precede children, roots carry -1. The induced order
// puts roots at the bottom, so every principal downset is a chain.
struct Forest {
  int nodes = 0;
  std::vector<int> parent;

  int root_count() const;
  std::string encoding() const;  // canonical nested-parentheses form

  friend bool operator==(const Forest&, const Forest&) = default;
};

// One representative per isomorphism class, deterministic order.
std::vector<Forest> enumerate_forests(int n);

// Downset algebra: carrier is the downward-closed node sets ordered by
// inclusion, star = meet. Labels are the node sets.
ResiduatedAlgebra godel_from_forest(const Forest& f);

// Representation of a directly indecomposable NM algebra as the rotation of
// its own skeleton; for decomposable input the exhaustive search confirms no
// rotation of a d.i. Godel algebra is isomorphic to it.
struct RepresentationResult {
  bool di = false;
  RotationMode mode = RotationMode::Plus;
  AxiomReport evidence;       // iso record (d.i. case) or the candidate sweep
  std::string skeleton_name;  // carrier description of the produced base
};
RepresentationResult verify_thm_2_4(const ResiduatedAlgebra& b, int max_base_nodes = 8);

struct HarnessConfig {
  int max_forest_nodes = 6;
  std::vector<std::string> theorems;  // empty means all
  bool quotient_automorphisms = false;
  int enum_cap = 12;    // operator enumeration only below this carrier size
  int oracle_cap = 12;  // factorization oracle only below this carrier size
};

struct HarnessFailure {
  std::string theorem;
  std::string algebra;
  std::string pair_id;
  std::string detail;
  std::string witness;  // serialized algebra and tables
};

struct HarnessCounter {
  long checked = 0;
  long failed = 0;
  long skipped = 0;
};

struct HarnessReport {
  std::map<std::string, HarnessCounter> per_theorem;
  std::vector<HarnessFailure> failures;
  std::vector<std::string> notices;
  long algebras = 0;
  long modal_pairs = 0;
  double wall_seconds = 0;

  bool all_pass() const { return failures.empty(); }
};

const std::vector<std::string>& harness_theorem_ids();

HarnessReport run_harness(const HarnessConfig& cfg);

// Stable-field-order serialization; wall time is excluded so reruns are
// byte-identical.
std::string harness_report_text(const HarnessReport& report);
void print_harness_summary(const HarnessReport& report, std::ostream& out);

}  // namespace nmrot
