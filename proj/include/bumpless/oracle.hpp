#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bumpless/grid.hpp"
#include "bumpless/poly.hpp"

namespace bumpless {

// Largest n enumerated by default. Raising it is supported but slow beyond 6.
inline constexpr int kDefaultEnumerationBound = 5;

struct EnumerationReport {
  Permutation w;
  std::vector<Mbpd> diagrams;  // sorted by TileGrid::key()
  std::vector<Mbpd> maximal;   // those with the largest blank_count + mark_count
  int max_weight = 0;
};

// All marked bumpless pipedreams reading to w. Throws Errc::bound_exceeded
// when w.size() > bound.
EnumerationReport enumerate_mbpds(const Permutation& w, int bound = kDefaultEnumerationBound);

// Signed weighted sums over all diagrams: (G_w(x), G_w(x;y)).
std::pair<Polynomial, Polynomial> grothendieck_polys(const EnumerationReport& report);
std::pair<Polynomial, Polynomial> grothendieck_polys(const Permutation& w,
                                                     int bound = kDefaultEnumerationBound);

// Sums of x^rwt and x^rwt y^cwt over the maximal diagrams: (CM_w(x), CM_w(x;y)).
std::pair<Polynomial, Polynomial> cm_polys(const EnumerationReport& report);
std::pair<Polynomial, Polynomial> cm_polys(const Permutation& w,
                                           int bound = kDefaultEnumerationBound);

// Number of valid marked tilings of the n x n grid, counted by a row-profile
// recursion that never reads a permutation.
std::uint64_t count_marked_tilings(int n);

// Three-valued check result; `skipped` when the check needs enumeration above
// the bound.
enum class Check { pass, fail, skipped };

struct VerificationRecord {
  Permutation w;
  WeightVector rajcode;
  WeightVector rajcode_inv;
  std::optional<int> n_mbpd;
  std::optional<int> n_maximal;
  Check unique_weightpair = Check::skipped;
  Check dhat_match = Check::skipped;
  Check leading_ok = Check::skipped;
  Check topdeg_ok = Check::skipped;
  // Empty unless run_maximal or the oracle threw.
  std::string error;

  bool passed() const;
};

// With w.size() <= bound: the four oracle checks. Above it: run_maximal alone,
// whose own assertions cover validity, reading and weights.
VerificationRecord verify_permutation(const Permutation& w, int bound = kDefaultEnumerationBound);

struct VerificationReport {
  std::vector<VerificationRecord> records;  // sorted by one-line notation

  int failures() const;
  const VerificationRecord* first_failure() const;
};

VerificationReport verify_permutations(std::vector<Permutation> perms, int jobs,
                                       int bound = kDefaultEnumerationBound);
VerificationReport verify_symmetric_group(int n, int jobs, int bound = kDefaultEnumerationBound);

// Header plus one row per record.
std::string to_tsv(const VerificationReport& report);

}  // namespace bumpless
