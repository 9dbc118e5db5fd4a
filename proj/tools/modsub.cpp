// modsub: enumerate and count finite-index subgroups of the modular group.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 I/O or internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modsub/census.hpp"
#include "modsub/counting.hpp"
#include "modsub/enumerator.hpp"
#include "modsub/trivalent_map.hpp"

namespace {

using namespace modsub;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CommonSearch {
  std::uint32_t index = 0;
  std::uint32_t genus = 0;
  bool torsion_free = true;
  int jobs = 0;
  std::uint32_t split_depth = 6;

  SearchFilter filter() const {
    SearchFilter f;
    f.torsion_free = torsion_free;
    f.genus = genus;
    return f;
  }
  SearchOptions options() const { return SearchOptions{jobs, split_depth}; }
};

void add_search_options(CLI::App* cmd, CommonSearch& s, bool need_index = true) {
  if (need_index) {
    cmd->add_option("--index", s.index, "Subgroup index mu")->required()->check(CLI::PositiveNumber);
  }
  cmd->add_option("--genus", s.genus, "Genus of the subgroups")->capture_default_str();
  cmd->add_flag("--torsion-free,!--no-torsion-free", s.torsion_free,
                "Restrict to torsion-free subgroups (default on)");
  cmd->add_option("--jobs", s.jobs, "Worker threads (0 = all available)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--split-depth", s.split_depth, "Search-tree depth at which work is partitioned")
      ->capture_default_str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

int run_count(const CommonSearch& s, const std::string& mode, const std::string& method) {
  if (method == "formula") {
    if (s.genus != 0 || !s.torsion_free) {
      throw UsageError("UnsupportedFormula: closed formulas exist only for torsion-free genus 0");
    }
    const BigCount value = mode == "rooted" ? n_rooted(s.index) : n_classes(s.index);
    std::cout << value << '\n';
    return 0;
  }
  if (mode == "rooted") {
    std::cout << count_rooted(s.index, s.filter(), s.options()) << '\n';
  } else {
    std::cout << count_classes(s.index, s.filter(), s.options()) << '\n';
  }
  return 0;
}

std::vector<CensusRecord> census_for(const CommonSearch& s, bool classes) {
  return classes ? class_census(s.index, s.filter(), s.options()) : rooted_census(s.index, s.filter(), s.options());
}

void write_dot_files(const std::vector<CensusRecord>& records, const std::string& out_path,
                     const std::string& kind) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const CosetPair pair = CosetPair::validate(Permutation(r.phi), Permutation(r.psi));
    const std::string name = "mu" + std::to_string(r.mu) + "_" + std::to_string(i);
    const std::string text = (kind == "map" && is_torsion_free(pair)) ? export_dot(to_map(pair), name)
                                                                      : export_dot(to_schreier(pair), name);
    const std::string path = out_path + "-" + std::to_string(i) + ".dot";
    auto out = open_out(path);
    out << text;
    finish_write(out, path);
  }
}

int run_enumerate(const CommonSearch& s, bool classes, const std::string& out_path, const std::string& format,
                  const std::string& dot_kind) {
  const auto records = census_for(s, classes);
  if (format == "jsonl") {
    auto out = open_out(out_path);
    write_jsonl(out, records);
    finish_write(out, out_path);
  } else {
    write_dot_files(records, out_path, dot_kind);
  }
  std::cerr << records.size() << (classes ? " class" : " rooted") << " record(s) written\n";
  return 0;
}

int run_verify(std::uint32_t max_index, bool genus1, const std::string& golden_path, const std::string& report_path,
               int jobs) {
  if (max_index < 6) throw UsageError("--max-index must be at least 6");
  GoldenTable golden = GoldenTable::builtin();
  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw IoError("cannot read " + golden_path);
    std::stringstream buf;
    buf << in.rdbuf();
    golden = GoldenTable::parse(buf.str());
  }
  VerifyConfig config;
  config.max_index = max_index;
  config.include_genus1 = genus1;
  config.search.jobs = jobs;
  const auto results = run_verification(config, golden);
  print_report(std::cout, results);
  if (!report_path.empty()) {
    auto out = open_out(report_path);
    out << report_json(results);
    finish_write(out, report_path);
  }
  for (const auto& r : results) {
    if (!r.pass) return kExitMismatch;
  }
  return 0;
}

int run_census18(const std::string& out_path, int jobs) {
  CommonSearch s;
  s.index = 18;
  s.jobs = jobs;
  const auto records = census_for(s, true);
  auto out = open_out(out_path);
  write_jsonl(out, records);
  finish_write(out, out_path);
  std::cout << "index 18, torsion-free, genus 0 -> " << out_path << '\n';
  print_class_summary(std::cout, records);
  return 0;
}

int run_signature(const std::string& phi_text, const std::string& psi_text, std::optional<std::size_t> degree,
                  const std::string& dot) {
  std::optional<std::size_t> n = degree;
  if (!n) {
    // Both permutations must share a degree; infer it from the larger one.
    n = std::max(parse_cycles(phi_text).degree(), parse_cycles(psi_text).degree());
  }
  const CosetPair pair = CosetPair::validate(parse_cycles(phi_text, n), parse_cycles(psi_text, n));
  const Signature sig = signature(pair);
  if (dot == "map") {
    std::cout << export_dot(to_map(pair));
    return 0;
  }
  if (dot == "schreier") {
    std::cout << export_dot(to_schreier(pair));
    return 0;
  }
  std::cout << "signature: (" << sig.mu << "; " << sig.g << ", " << sig.e2 << ", " << sig.e3 << ", " << sig.h
            << ")\n"
            << "cusp split: " << cusp_split(pair).to_string() << '\n'
            << "torsion-free: " << (is_torsion_free(pair) ? "yes" : "no") << '\n'
            << "phi*psi: " << to_cycle_string(compose(pair.phi(), pair.psi())) << '\n'
            << "rooted key: " << canonical_form(pair, 0).key.hex() << '\n';
  const MinimalKey mk = minimal_key(pair);
  std::cout << "class key: " << mk.key.hex() << '\n'
            << "automorphisms: " << mk.multiplicity << '\n'
            << "chiral: " << (minimal_key(mirror(pair)).key != mk.key ? "yes" : "no") << '\n';
  return 0;
}

int run_maps(std::uint64_t edges) {
  std::cout << "rooted planar maps with " << edges << " edges (Tutte): " << tutte_rooted_all(edges) << '\n';
  if (edges == 0) return 0;
  std::cout << "unrooted, general-map recursion [experimental, unverified]: ";
  try {
    std::cout << liskovets_unrooted_all(edges) << '\n';
  } catch (const NonIntegralResult& e) {
    std::cout << "non-integral (" << e.what() << ")\n";
  }
  if (edges == 2) {
    std::cout << "unrooted, by direct inspection of the two-edge maps: " << kUnrootedMapsWithTwoEdges << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-index subgroups of the modular group as permutation pairs"};
  app.require_subcommand(1);

  CommonSearch count_s;
  std::string count_mode = "rooted";
  std::string count_method = "search";
  auto* count = app.add_subcommand("count", "Count subgroups or conjugacy classes");
  add_search_options(count, count_s);
  count->add_option("--mode", count_mode, "rooted | classes")
      ->check(CLI::IsMember({"rooted", "classes"}))
      ->capture_default_str();
  count->add_option("--method", count_method, "formula | search")
      ->check(CLI::IsMember({"formula", "search"}))
      ->capture_default_str();

  CommonSearch enum_s;
  bool enum_classes = false;
  std::string enum_out;
  std::string enum_format = "jsonl";
  std::string enum_dot_kind = "map";
  auto* enumerate = app.add_subcommand("enumerate", "Write a census of subgroups or classes");
  add_search_options(enumerate, enum_s);
  enumerate->add_flag("--classes", enum_classes, "One record per conjugacy class");
  enumerate->add_option("--out", enum_out, "Output file (jsonl) or file prefix (dot)")->required();
  enumerate->add_option("--format", enum_format, "jsonl | dot")
      ->check(CLI::IsMember({"jsonl", "dot"}))
      ->capture_default_str();
  enumerate->add_option("--dot-kind", enum_dot_kind, "map | schreier")
      ->check(CLI::IsMember({"map", "schreier"}))
      ->capture_default_str();

  std::uint32_t verify_max = 24;
  bool verify_genus1 = false;
  std::string verify_golden;
  std::string verify_report;
  int verify_jobs = 0;
  auto* verify = app.add_subcommand("verify", "Check formulas and search against the published tables");
  verify->add_option("--max-index", verify_max, "Largest index to search")->capture_default_str();
  verify->add_flag("--genus1", verify_genus1, "Also check the genus-1 table by search");
  verify->add_option("--golden", verify_golden, "Alternative golden table file");
  verify->add_option("--report-json", verify_report, "Write a machine-readable report");
  verify->add_option("--jobs", verify_jobs, "Worker threads (0 = all available)")->check(CLI::NonNegativeNumber);

  std::string census_out = "census18.jsonl";
  int census_jobs = 0;
  auto* census18 = app.add_subcommand("census18", "Conjugacy classes at index 18 with a cusp-split summary");
  census18->add_option("--out", census_out, "Output file")->capture_default_str();
  census18->add_option("--jobs", census_jobs, "Worker threads (0 = all available)")->check(CLI::NonNegativeNumber);

  std::string sig_phi;
  std::string sig_psi;
  std::optional<std::size_t> sig_degree;
  std::string sig_dot;
  auto* sig = app.add_subcommand("signature", "Describe a pair given in cycle notation");
  sig->add_option("--phi", sig_phi, "Involution, e.g. \"(0 3)(1 5)(2 4)\"")->required();
  sig->add_option("--psi", sig_psi, "Order-three permutation, e.g. \"(0 1 2)(3 4 5)\"")->required();
  sig->add_option("--degree", sig_degree, "Degree when trailing fixed points are omitted");
  sig->add_option("--dot", sig_dot, "Print DOT instead: map | schreier")->check(CLI::IsMember({"map", "schreier"}));

  std::uint64_t maps_edges = 2;
  auto* maps = app.add_subcommand("maps", "Planar map counts for the general (non-trivalent) class");
  maps->add_option("--edges", maps_edges, "Number of edges")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(count_s, count_mode, count_method);
    if (*enumerate) return run_enumerate(enum_s, enum_classes, enum_out, enum_format, enum_dot_kind);
    if (*verify) return run_verify(verify_max, verify_genus1, verify_golden, verify_report, verify_jobs);
    if (*census18) return run_census18(census_out, census_jobs);
    if (*sig) return run_signature(sig_phi, sig_psi, sig_degree, sig_dot);
    if (*maps) return run_maps(maps_edges);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
