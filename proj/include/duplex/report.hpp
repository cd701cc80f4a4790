#pragma once

// Verification driver: runs selected property families over every tiling of
// a region and aggregates the outcome into a printable report.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "duplex/lattice.hpp"
#include "duplex/region.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"

namespace duplex {

// The four independent readings of one tiling's twist: the pairwise sums
// along +x, +y, +z, and the derivative at 1 of the cycle polynomial. They
// agree (and are integral) on every valid duplex tiling; consistent() is the
// checked form of that claim.
struct TwistEvidence {
  Quarter along_x, along_y, along_z;
  std::int64_t p_prime_one = 0;

  bool consistent() const;
  std::int64_t value() const;  // throws TwistError when !consistent()
  std::string str() const;     // "T^i=0, T^j=0, T^k=0, P'(1)=0"
};

TwistEvidence twist_evidence(const Tiling& t);

// One evaluation of the jewel identity
//   ccol(v) * wind(c, v)  ==  2 * sum_d tau(d, d_v)  ==  2 * sum_d tau(d_v, d)
// where d_v is the vertical domino over the jewel v (it must belong to t)
// and d runs over the dominoes realizing the edges of cycle c.
struct JewelIdentityCheck {
  Quarter lhs, sum_fwd, sum_rev;
  bool pass() const { return lhs == sum_fwd && lhs == sum_rev; }
};

JewelIdentityCheck jewel_identity(const Tiling& t, const Cycle& c,
                                  const Cell& jewel, Direction u);

struct CheckCounts {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
};

struct CheckFailure {
  std::size_t tiling_index = 0;  // reproducer: position in enumeration order
  std::string check;
  std::string detail;
};

struct RunReport {
  std::string region_summary;
  std::uint64_t tiling_count = 0;
  // Twist value -> number of tilings; filled when "prop1.1" is selected.
  std::map<std::int64_t, std::uint64_t> twist_histogram;
  std::map<std::string, CheckCounts> checks;
  std::vector<CheckFailure> failures;  // first few, in enumeration order
  std::uint64_t failures_total = 0;
  double elapsed_ms = 0.0;

  bool all_pass() const;
  std::string str() const;
};

// Tokens accepted by --lemmas. "all" expands to every family below plus the
// turning and color side conditions of the cycle suite.
const std::vector<std::string>& known_selectors();

// Expands tokens into the set of check families to run; an empty token list
// means "all". Returns nullopt on an unknown token.
std::optional<std::set<std::string>> expand_selectors(
    const std::vector<std::string>& tokens);

// Enumerates the region's tilings and runs every selected family on each,
// distributing tilings over `jobs` threads. The report is deterministic:
// aggregation follows enumeration order regardless of scheduling.
RunReport run_checks(const DuplexRegion& region,
                     const std::set<std::string>& families, unsigned jobs);

// "{ -1: 1, 0: 227, 1: 1 }"
std::string histogram_str(const std::map<std::int64_t, std::uint64_t>& h);

}  // namespace duplex
