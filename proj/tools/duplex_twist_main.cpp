// duplex-twist: validate regions, enumerate tilings, compute twists, verify
// the cycle/jewel identities, and render tilings or socks.
//
// Exit codes: 0 success, 1 input or usage error, 2 property violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "duplex/charges.hpp"
#include "duplex/json_io.hpp"
#include "duplex/parallel.hpp"
#include "duplex/region.hpp"
#include "duplex/render.hpp"
#include "duplex/report.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"
#include "duplex/twist.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw duplex::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw duplex::InputError("cannot write " + out_path);
  out << content;
}

// Splits a file into JSON documents: JSON lines and concatenated
// pretty-printed documents both work.
std::vector<std::string> split_json_documents(const std::string& text) {
  std::vector<std::string> docs;
  std::istringstream is(text);
  while (true) {
    is >> std::ws;
    if (is.peek() == std::char_traits<char>::eof()) break;
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw duplex::InputError(std::string("bad JSON document: ") + e.what());
    }
    docs.push_back(j.dump());
  }
  return docs;
}

std::vector<duplex::Tiling> load_tilings(const std::string& path,
                                         const duplex::DuplexRegion& region) {
  std::vector<duplex::Tiling> out;
  const std::vector<std::string> docs = split_json_documents(read_file(path));
  if (docs.empty()) throw duplex::InputError("no tilings in " + path);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    duplex::RawTiling raw = duplex::raw_tiling_from_json(docs[i]);
    if (!(duplex::parse_base(raw.base_text) == region.base()))
      throw duplex::InputError("tiling " + std::to_string(i) +
                               " is over a different base than the region");
    duplex::Tiling t = duplex::tiling_from_raw(raw);
    duplex::TilingCheck check = duplex::validate_tiling(region, t);
    if (!check.ok)
      throw duplex::InputError("tiling " + std::to_string(i) + ": " +
                               to_string(*check.error) + ": " + check.detail);
    out.push_back(std::move(t));
  }
  return out;
}

int cmd_validate(const std::string& base_path) {
  try {
    duplex::DuplexRegion region =
        duplex::build_duplex(duplex::parse_base(read_file(base_path)));
    std::cout << "valid, " << region.base().size() << " cells, bounding box "
              << region.base().width() << "x" << region.base().height()
              << "\n";
    return 0;
  } catch (const duplex::InvalidBase& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int cmd_enumerate(const std::string& base_path, bool count_only,
                  const std::string& out_path) {
  duplex::DuplexRegion region =
      duplex::build_duplex(duplex::parse_base(read_file(base_path)));
  if (count_only) {
    std::cout << duplex::count_tilings(region) << "\n";
    return 0;
  }
  std::string buf;
  duplex::for_each_tiling(region, [&](const duplex::Tiling& t) {
    buf += duplex::tiling_to_json(region.base(), t);
    buf += '\n';
    return true;
  });
  write_output(out_path, buf);
  return 0;
}

int cmd_twist(const std::string& base_path, const std::string& tiling_path,
              bool all, unsigned jobs) {
  duplex::DuplexRegion region =
      duplex::build_duplex(duplex::parse_base(read_file(base_path)));
  if (all) {
    duplex::RunReport rep =
        duplex::run_checks(region, *duplex::expand_selectors({"prop1.1"}), jobs);
    std::cout << rep.str();
    return rep.all_pass() ? 0 : 2;
  }
  bool violation = false;
  const std::vector<duplex::Tiling> tilings = load_tilings(tiling_path, region);
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    duplex::TwistEvidence e = duplex::twist_evidence(tilings[i]);
    if (e.consistent()) {
      std::cout << i << ", Tw=" << e.value() << ", " << e.str() << "\n";
    } else {
      std::cout << i << ", Tw=?, " << e.str() << "\n";
      violation = true;
    }
  }
  return violation ? 2 : 0;
}

int cmd_verify(const std::string& base_path,
               const std::vector<std::string>& lemmas, unsigned jobs) {
  auto families = duplex::expand_selectors(lemmas);
  if (!families) throw duplex::InputError("unknown --lemmas token");
  duplex::DuplexRegion region =
      duplex::build_duplex(duplex::parse_base(read_file(base_path)));
  duplex::RunReport rep = duplex::run_checks(region, *families, jobs);
  std::cout << rep.str();
  return rep.all_pass() ? 0 : 2;
}

int cmd_render(const std::string& base_path, const std::string& tiling_path,
               std::size_t index, const std::string& format,
               const std::string& view, bool annotate,
               const std::string& out_path) {
  duplex::DuplexRegion region =
      duplex::build_duplex(duplex::parse_base(read_file(base_path)));
  const std::vector<duplex::Tiling> tilings = load_tilings(tiling_path, region);
  if (index >= tilings.size())
    throw duplex::InputError("tiling index " + std::to_string(index) +
                             " out of range (file has " +
                             std::to_string(tilings.size()) + ")");
  const duplex::Tiling& t = tilings[index];
  std::string doc;
  if (view == "tiling") {
    doc = format == "svg" ? duplex::render_tiling_svg(region.base(), t)
                          : duplex::render_tiling_ascii(region.base(), t);
  } else {
    duplex::Sock s = duplex::project_sock(t);
    doc = format == "svg" ? duplex::render_sock_svg(region.base(), s, annotate)
                          : duplex::render_sock_ascii(region.base(), s);
  }
  write_output(out_path, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"duplex regions: tilings, twists and their invariants"};
  app.require_subcommand(1);

  std::string base_path, tiling_path, out_path;
  std::string format = "svg", view = "tiling";
  std::vector<std::string> lemmas;
  bool count_only = false, all = false, annotate = false;
  unsigned jobs = 0;
  std::size_t index = 0;

  CLI::App* validate =
      app.add_subcommand("validate", "Check a region file and report its size");
  validate->add_option("base", base_path, "region file ('#'/'.' grid)")
      ->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List every tiling of a region");
  enumerate->add_option("base", base_path, "region file")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--out", out_path, "write JSON lines here");

  CLI::App* twist = app.add_subcommand(
      "twist", "Twist of given tilings, or the histogram over all tilings");
  twist->add_option("base", base_path, "region file")->required();
  CLI::Option* twist_tiling =
      twist->add_option("--tiling", tiling_path, "tiling file (JSON lines)");
  twist->add_flag("--all", all, "survey every tiling")->excludes(twist_tiling);
  twist->add_option("--jobs", jobs, "worker threads (0 = auto)");

  CLI::App* verify =
      app.add_subcommand("verify", "Check identities over every tiling");
  verify->add_option("base", base_path, "region file")->required();
  verify
      ->add_option("--lemmas", lemmas,
                   "which families to check (default: all)")
      ->check(CLI::IsMember(duplex::known_selectors()));
  verify->add_option("--jobs", jobs, "worker threads (0 = auto)");

  CLI::App* render =
      app.add_subcommand("render", "Draw a tiling or its sock");
  render->add_option("base", base_path, "region file")->required();
  render->add_option("--tiling", tiling_path, "tiling file (JSON lines)")
      ->required();
  render->add_option("--index", index, "which tiling in the file (default 0)");
  render->add_option("--format", format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--view", view, "tiling or sock")
      ->check(CLI::IsMember({"tiling", "sock"}));
  render->add_flag("--annotate", annotate, "overlay angles and exponents");
  render->add_option("--out", out_path, "write the document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(base_path);
    if (enumerate->parsed()) return cmd_enumerate(base_path, count_only, out_path);
    if (twist->parsed()) {
      if (!all && tiling_path.empty())
        throw duplex::InputError("twist needs --tiling FILE or --all");
      return cmd_twist(base_path, tiling_path, all,
                       jobs == 0 ? duplex::default_jobs() : jobs);
    }
    if (verify->parsed())
      return cmd_verify(base_path, lemmas,
                        jobs == 0 ? duplex::default_jobs() : jobs);
    if (render->parsed())
      return cmd_render(base_path, tiling_path, index, format, view, annotate,
                        out_path);
  } catch (const duplex::TwistError& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
