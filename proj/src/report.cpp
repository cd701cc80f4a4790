#include "duplex/report.hpp"

#include <chrono>
#include <sstream>

#include "duplex/charges.hpp"
#include "duplex/parallel.hpp"
#include "duplex/twist.hpp"

namespace duplex {

bool TwistEvidence::consistent() const {
  return along_x == along_y && along_x == along_z &&
         along_x == Quarter::from_whole(p_prime_one);
}

std::int64_t TwistEvidence::value() const {
  if (!consistent())
    throw TwistError(TwistFault::PretwistMismatch,
                     "inconsistent twist evidence: " + str());
  return along_x.whole();
}

std::string TwistEvidence::str() const {
  std::ostringstream os;
  os << "T^i=" << along_x.str() << ", T^j=" << along_y.str()
     << ", T^k=" << along_z.str() << ", P'(1)=" << p_prime_one;
  return os.str();
}

TwistEvidence twist_evidence(const Tiling& t) {
  TwistEvidence e;
  e.along_x = pretwist(t, Direction::PosX);
  e.along_y = pretwist(t, Direction::PosY);
  e.along_z = pretwist(t, Direction::PosZ);
  e.p_prime_one = p_derivative_at_one(p_polynomial(project_sock(t)));
  return e;
}

JewelIdentityCheck jewel_identity(const Tiling& t, const Cycle& c,
                                  const Cell& jewel, Direction u) {
  Domino d_v(Cube{jewel.x, jewel.y, 0}, Cube{jewel.x, jewel.y, 1});
  if (!t.contains(d_v))
    throw std::invalid_argument("jewel_identity: no vertical domino at (" +
                                std::to_string(jewel.x) + "," +
                                std::to_string(jewel.y) + ")");
  JewelIdentityCheck check;
  check.lhs = Quarter::from_whole(
      static_cast<std::int64_t>(vertex_color(jewel)) * winding_number(c, jewel));
  Quarter fwd, rev;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Domino d = cycle_edge_domino(c, i);
    fwd += tau(d, d_v, u);
    rev += tau(d_v, d, u);
  }
  check.sum_fwd = 2 * fwd;
  check.sum_rev = 2 * rev;
  return check;
}

bool RunReport::all_pass() const {
  if (failures_total != 0) return false;
  for (const auto& [name, counts] : checks)
    if (counts.fail != 0) return false;
  return true;
}

std::string histogram_str(const std::map<std::int64_t, std::uint64_t>& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [value, count] : h) {
    os << (first ? " " : ", ") << value << ": " << count;
    first = false;
  }
  os << (first ? "}" : " }");
  return os.str();
}

namespace {

// Fixed print order for check families (map order would interleave the side
// conditions with the numbered families).
const std::vector<std::string> kPrintOrder = {
    "2.1", "3.1", "3.2", "3.3", "3.4", "turning", "colors", "prop1.1"};

constexpr std::size_t kFailureCap = 20;

struct LocalVerdict {
  std::map<std::string, CheckCounts> checks;
  std::vector<CheckFailure> failures;
  std::optional<std::int64_t> twist;
};

void record(LocalVerdict& v, std::size_t index, const std::string& family,
            bool pass, const std::string& detail) {
  CheckCounts& c = v.checks[family];
  if (pass) {
    ++c.pass;
    return;
  }
  ++c.fail;
  v.failures.push_back(CheckFailure{index, family, detail});
}

std::string cycle_tag(const Cycle& c) {
  std::ostringstream os;
  os << "cycle at " << c.vertices.front();
  return os.str();
}

LocalVerdict check_one(const Tiling& t, std::size_t index,
                       const std::set<std::string>& fam) {
  LocalVerdict v;
  const bool want_cycles =
      fam.count("3.1") || fam.count("3.2") || fam.count("3.3") ||
      fam.count("3.4") || fam.count("turning") || fam.count("colors");
  const bool want_jewels = fam.count("2.1") != 0;
  const bool want_prop = fam.count("prop1.1") != 0;

  Sock s = project_sock(t);
  if (want_cycles) {
    for (const Cycle& c : s.cycles) {
      CycleLemmaReport r = verify_cycle_lemmas(c);
      for (const LemmaCheck& chk : r.checks)
        if (fam.count(chk.name))
          record(v, index, chk.name, chk.pass, cycle_tag(c) + ": " + chk.detail);
    }
  }
  if (want_jewels) {
    for (const Cycle& c : s.cycles)
      for (const Cell& jewel : s.jewels) {
        // Jewels coming from a normalized trivial pair have no vertical
        // domino in the tiling, so the identity's right-hand sides are not
        // defined for them.
        Domino d_v(Cube{jewel.x, jewel.y, 0}, Cube{jewel.x, jewel.y, 1});
        if (!t.contains(d_v)) continue;
        for (Direction u : {Direction::PosX, Direction::PosY}) {
          JewelIdentityCheck jc = jewel_identity(t, c, jewel, u);
          std::ostringstream detail;
          detail << cycle_tag(c) << ", jewel " << jewel << ", u="
                 << to_string(u) << ": lhs=" << jc.lhs.str()
                 << ", fwd=" << jc.sum_fwd.str()
                 << ", rev=" << jc.sum_rev.str();
          record(v, index, "2.1", jc.pass(), detail.str());
        }
      }
  }
  if (want_prop) {
    TwistEvidence e = twist_evidence(t);
    bool ok = e.consistent();
    record(v, index, "prop1.1", ok, e.str());
    if (ok) v.twist = e.value();
  }
  return v;
}

}  // namespace

const std::vector<std::string>& known_selectors() {
  static const std::vector<std::string> tokens = {
      "all", "2.1", "3.1", "3.2", "3.3", "3.4", "prop1.1"};
  return tokens;
}

std::optional<std::set<std::string>> expand_selectors(
    const std::vector<std::string>& tokens) {
  std::set<std::string> families;
  auto add_all = [&families] {
    families.insert(kPrintOrder.begin(), kPrintOrder.end());
  };
  if (tokens.empty()) {
    add_all();
    return families;
  }
  for (const std::string& token : tokens) {
    if (token == "all") {
      add_all();
    } else if (token == "2.1" || token == "3.1" || token == "3.2" ||
               token == "3.3" || token == "3.4" || token == "prop1.1") {
      families.insert(token);
    } else {
      return std::nullopt;
    }
  }
  return families;
}

RunReport run_checks(const DuplexRegion& region,
                     const std::set<std::string>& families, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.region_summary = region.summary();

  std::vector<Tiling> tilings = enumerate_tilings(region);
  rep.tiling_count = tilings.size();

  std::vector<LocalVerdict> verdicts(tilings.size());
  parallel_for(tilings.size(), jobs, [&](std::size_t i) {
    verdicts[i] = check_one(tilings[i], i, families);
  });

  for (const LocalVerdict& v : verdicts) {
    for (const auto& [name, counts] : v.checks) {
      rep.checks[name].pass += counts.pass;
      rep.checks[name].fail += counts.fail;
    }
    rep.failures_total += v.failures.size();
    for (const CheckFailure& f : v.failures)
      if (rep.failures.size() < kFailureCap) rep.failures.push_back(f);
    if (v.twist) ++rep.twist_histogram[*v.twist];
  }
  for (const std::string& f : families) rep.checks.try_emplace(f);

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::string RunReport::str() const {
  std::ostringstream os;
  os << "region: " << region_summary << "\n";
  os << "tilings: " << tiling_count << "\n";
  if (checks.count("prop1.1"))
    os << "twists: " << histogram_str(twist_histogram) << "\n";
  for (const std::string& name : kPrintOrder) {
    auto it = checks.find(name);
    if (it == checks.end()) continue;
    os << "check " << name << ": " << it->second.pass << " pass, "
       << it->second.fail << " fail\n";
  }
  for (const CheckFailure& f : failures)
    os << "failure: tiling " << f.tiling_index << ", check " << f.check
       << ", " << f.detail << "\n";
  if (failures_total > failures.size())
    os << "... and " << failures_total - failures.size()
       << " more failures\n";
  os << "elapsed: ";
  std::ostringstream ms;
  ms.setf(std::ios::fixed);
  ms.precision(1);
  ms << elapsed_ms;
  os << ms.str() << " ms\n";
  os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace duplex
