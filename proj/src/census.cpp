#include "modsub/census.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "modsub/canonical.hpp"

namespace modsub {

namespace detail {
extern const std::string_view kGoldenTablesText;
}

namespace {

using ordered_json = nlohmann::ordered_json;

CensusRecord base_record(const CosetPair& pair, std::string key_hex) {
  const Signature sig = signature(pair);
  CensusRecord r;
  r.mu = sig.mu;
  r.phi.assign(pair.phi().images().begin(), pair.phi().images().end());
  r.psi.assign(pair.psi().images().begin(), pair.psi().images().end());
  r.g = sig.g;
  r.e2 = sig.e2;
  r.e3 = sig.e3;
  r.h = sig.h;
  r.cusp_split = cusp_split(pair).widths();
  r.canonical_key = std::move(key_hex);
  return r;
}

template <class T>
T field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw CensusFormatError(std::string("census record: missing field \"") + name + "\"");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw CensusFormatError(std::string("census record: bad field \"") + name + "\": " + e.what());
  }
}

template <class T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

CensusRecord make_record(const RootedClass& rc) { return base_record(rc.pair, rc.key.hex()); }

CensusRecord make_record(const ConjClass& c) {
  CensusRecord r = base_record(c.representative, c.canonical_key.hex());
  r.class_fields = ClassFields{c.aut_order, class_size(c), c.chiral};
  return r;
}

std::string to_json_line(const CensusRecord& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["mu"] = r.mu;
  j["phi"] = r.phi;
  j["psi"] = r.psi;
  j["g"] = r.g;
  j["e2"] = r.e2;
  j["e3"] = r.e3;
  j["h"] = r.h;
  j["cusp_split"] = r.cusp_split;
  j["canonical_key"] = r.canonical_key;
  if (r.class_fields) {
    j["aut_order"] = r.class_fields->aut_order;
    j["class_size"] = r.class_fields->class_size;
    j["chiral"] = r.class_fields->chiral;
  }
  return j.dump();
}

CensusRecord from_json_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw CensusFormatError(std::string("census record: ") + e.what());
  }
  if (!j.is_object()) throw CensusFormatError("census record: not a JSON object");
  CensusRecord r;
  r.schema_version = field<int>(j, "schema_version");
  r.mu = field<std::uint32_t>(j, "mu");
  r.phi = field<std::vector<point_t>>(j, "phi");
  r.psi = field<std::vector<point_t>>(j, "psi");
  r.g = field<std::uint32_t>(j, "g");
  r.e2 = field<std::uint32_t>(j, "e2");
  r.e3 = field<std::uint32_t>(j, "e3");
  r.h = field<std::uint32_t>(j, "h");
  r.cusp_split = field<std::vector<std::uint32_t>>(j, "cusp_split");
  r.canonical_key = field<std::string>(j, "canonical_key");
  const bool has_class = j.contains("aut_order") || j.contains("class_size") || j.contains("chiral");
  if (has_class) {
    r.class_fields = ClassFields{field<std::uint32_t>(j, "aut_order"), field<std::uint64_t>(j, "class_size"),
                                 field<bool>(j, "chiral")};
  }
  return r;
}

std::optional<std::string> check_record(const CensusRecord& r) {
  if (r.schema_version != kCensusSchemaVersion) return "unsupported schema_version " + str(r.schema_version);
  if (r.phi.size() != r.mu || r.psi.size() != r.mu) return std::string("phi/psi length differs from mu");
  std::optional<CosetPair> pair;
  try {
    pair = CosetPair::validate(Permutation(r.phi), Permutation(r.psi));
  } catch (const std::invalid_argument& e) {
    return std::string(e.what());
  }
  const Signature sig = signature(*pair);
  if (sig.g != r.g || sig.e2 != r.e2 || sig.e3 != r.e3 || sig.h != r.h) return std::string("signature mismatch");
  if (cusp_split(*pair).widths() != r.cusp_split) return std::string("cusp split mismatch");

  if (!r.class_fields) {
    if (canonical_form(*pair, 0).key.hex() != r.canonical_key) return std::string("canonical key mismatch");
    return std::nullopt;
  }
  const MinimalKey mk = minimal_key(*pair);
  if (mk.key.hex() != r.canonical_key) return std::string("canonical key mismatch");
  if (mk.multiplicity != r.class_fields->aut_order) return std::string("aut_order mismatch");
  if (r.mu / mk.multiplicity != r.class_fields->class_size) return std::string("class_size mismatch");
  const bool chiral = minimal_key(mirror(*pair)).key != mk.key;
  if (chiral != r.class_fields->chiral) return std::string("chirality mismatch");
  return std::nullopt;
}

void write_jsonl(std::ostream& out, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<CensusRecord> read_jsonl(std::istream& in, bool recompute) {
  std::vector<CensusRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    CensusRecord r = from_json_line(line);
    if (recompute) {
      if (auto problem = check_record(r)) {
        throw CensusFormatError("line " + std::to_string(lineno) + ": " + *problem);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

GoldenTable GoldenTable::parse(std::string_view text) {
  GoldenTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string genus, mu, rooted, classes, flag;
    if (!(fields >> genus)) continue;
    auto fail = [&](const std::string& why) {
      return CensusFormatError("golden table line " + std::to_string(lineno) + ": " + why);
    };
    if (!(fields >> mu >> rooted >> classes)) throw fail("expected genus, index, subgroups, classes");
    GoldenRow row;
    try {
      row.genus = static_cast<std::uint32_t>(std::stoul(genus));
      row.mu = static_cast<std::uint32_t>(std::stoul(mu));
      row.rooted = BigCount(rooted);
      row.classes = BigCount(classes);
    } catch (const std::exception&) {
      throw fail("non-numeric field");
    }
    if (fields >> flag) {
      if (flag != "non-authoritative") throw fail("unknown flag \"" + flag + "\"");
      row.classes_authoritative = false;
    }
    table.rows_.push_back(std::move(row));
  }
  return table;
}

const GoldenTable& GoldenTable::builtin() {
  static const GoldenTable table = parse(detail::kGoldenTablesText);
  return table;
}

std::vector<GoldenRow> GoldenTable::rows_for_genus(std::uint32_t genus) const {
  std::vector<GoldenRow> out;
  for (const auto& row : rows_) {
    if (row.genus == genus) out.push_back(row);
  }
  return out;
}

std::vector<CheckResult> run_verification(const VerifyConfig& config, const GoldenTable& golden) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, const BigCount& expected, const BigCount& actual) {
    results.push_back(CheckResult{std::move(name), expected == actual, false, expected.str(), actual.str()});
  };

  for (const auto& row : golden.rows_for_genus(0)) {
    if (row.mu > 60) continue;
    const std::string tag = "formula genus=0 mu=" + std::to_string(row.mu);
    record(tag + " rooted", row.rooted, n_rooted(row.mu));
    record(tag + " classes", row.classes, n_classes(row.mu));
  }

  auto search = [&](std::uint32_t mu, std::uint32_t genus, const BigCount& rooted_expected,
                    const std::optional<BigCount>& classes_expected, const char* source) {
    SearchFilter filter;
    filter.genus = genus;
    const auto rooted = enumerate_rooted(mu, filter, config.search);
    const auto classes = conjugacy_reduce(rooted, config.search);
    std::uint64_t orbit_sum = 0;
    for (const auto& c : classes) orbit_sum += class_size(c);
    const std::string tag = "search genus=" + std::to_string(genus) + " mu=" + std::to_string(mu);
    record(tag + " rooted vs " + source, rooted_expected, BigCount(rooted.size()));
    if (classes_expected) {
      record(tag + " classes vs " + source, *classes_expected, BigCount(classes.size()));
    } else {
      results.push_back(CheckResult{tag + " classes vs " + source, true, true, "non-authoritative",
                                    std::to_string(classes.size())});
    }
    record(tag + " orbit sum", BigCount(rooted.size()), BigCount(orbit_sum));
  };

  const std::uint32_t g0_limit = std::min(config.max_index, config.genus0_search_limit);
  for (std::uint32_t mu = 6; mu <= g0_limit; mu += 6) {
    search(mu, 0, n_rooted(mu), n_classes(mu), "formula");
  }

  if (config.include_genus1) {
    const std::uint32_t g1_limit = std::min(config.max_index, config.genus1_search_limit);
    for (const auto& row : golden.rows_for_genus(1)) {
      if (row.mu > g1_limit) continue;
      search(row.mu, 1, row.rooted, row.classes_authoritative ? std::optional<BigCount>(row.classes) : std::nullopt,
             "table");
    }
  }
  return results;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.skipped) {
      out << "SKIP " << r.name << ": reference is " << r.expected << ", got " << r.actual << '\n';
    } else if (r.pass) {
      out << "PASS " << r.name << ": " << r.actual << '\n';
    } else {
      ++failed;
      out << "FAIL " << r.name << ": expected " << r.expected << ", got " << r.actual << '\n';
    }
  }
  out << (failed == 0 ? "OK" : "MISMATCH") << ": " << (results.size() - failed) << " passed, " << failed
      << " failed\n";
}

std::string report_json(const std::vector<CheckResult>& results) {
  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    checks.push_back(ordered_json{{"name", r.name},
                                  {"status", r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL")},
                                  {"expected", r.expected},
                                  {"actual", r.actual}});
  }
  ordered_json j;
  j["ok"] = failed == 0;
  j["passed"] = results.size() - failed;
  j["failed"] = failed;
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::vector<CensusRecord> rooted_census(std::size_t mu, const SearchFilter& filter, const SearchOptions& options) {
  std::vector<CensusRecord> out;
  for (const auto& rc : enumerate_rooted(mu, filter, options)) out.push_back(make_record(rc));
  return out;
}

std::vector<CensusRecord> class_census(std::size_t mu, const SearchFilter& filter, const SearchOptions& options) {
  const auto rooted = enumerate_rooted(mu, filter, options);
  std::vector<CensusRecord> out;
  for (const auto& c : conjugacy_reduce(rooted, options)) out.push_back(make_record(c));
  return out;
}

void print_class_summary(std::ostream& out, const std::vector<CensusRecord>& classes) {
  struct Tally {
    std::size_t count = 0;
    std::size_t chiral = 0;
  };
  // Descending splits first, matching the usual "14-1-1-1-1" listing order.
  std::map<std::vector<std::uint32_t>, Tally, std::greater<>> by_split;
  std::size_t chiral_total = 0;
  for (const auto& r : classes) {
    auto& t = by_split[r.cusp_split];
    ++t.count;
    if (r.class_fields && r.class_fields->chiral) {
      ++t.chiral;
      ++chiral_total;
    }
  }
  for (const auto& [split, t] : by_split) {
    out << "  " << CuspSplit(split).to_string() << "  x" << t.count;
    if (t.chiral) out << "  chiral=" << t.chiral;
    out << '\n';
  }
  out << "classes: " << classes.size() << ", distinct cusp splits: " << by_split.size()
      << ", chiral: " << chiral_total << '\n';
}

}  // namespace modsub
