#include "subcode/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "subcode/error.hpp"

namespace subcode::io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("key '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return get<T>(j, key);
}

void check_schema(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema)
    throw Error(ErrorKind::ParseError, "unsupported schema " + j.at("schema").dump());
}

json field_json(const Field& f) {
  json j = {{"p", f->p()}, {"m", f->m()}};
  if (!f->modulus().empty()) j["modulus"] = f->modulus();
  return j;
}

Field field_from(const json& j, int max_order) {
  const int p = get<int>(j, "p");
  const int m = get_or<int>(j, "m", 1);
  auto modulus = get_or<std::vector<int>>(j, "modulus", {});
  return make_field(p, m, modulus.empty() ? std::nullopt : std::optional(std::move(modulus)), max_order);
}

json basis_json(const Subspace& s) {
  json rows = json::array();
  for (const Vector& v : s.basis()) {
    json row = json::array();
    for (Elem e : v) row.push_back(static_cast<int>(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace subspace_from(const Field& field, int n, const json& basis, ParseMode mode) {
  if (!basis.is_array()) throw Error(ErrorKind::ParseError, "basis must be an array of rows");
  std::vector<Vector> rows;
  for (const json& row : basis) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "basis row of length " + std::to_string(row.size()) + ", expected " +
                                                    std::to_string(n));
    Vector v;
    for (const json& e : row) {
      if (!e.is_number_integer() || !field->valid(e.get<int>()))
        throw Error(ErrorKind::InvalidElement, "element " + e.dump() + " outside GF(" + std::to_string(field->q()) + ")");
      v.push_back(static_cast<Elem>(e.get<int>()));
    }
    rows.push_back(std::move(v));
  }
  return mode == ParseMode::Strict ? Subspace::from_rref(field, n, rows) : Subspace::span(field, n, rows);
}

json code_json(const SubspaceCode& code) {
  json words = json::array();
  for (const Subspace& w : code.words()) words.push_back({{"basis", basis_json(w)}});
  json j = {{"schema", kSchema}, {"field", field_json(code.field())}, {"n", code.ambient_dim()}, {"words", words}};
  if (code.has_table()) j["table"] = code.table().rows();
  return j;
}

SubspaceCode code_from(const json& j, ParseMode mode) {
  check_schema(j);
  const Field field = field_from(get<json>(j, "field"), kDefaultMaxFieldOrder);
  const int n = get<int>(j, "n");
  if (n < 1 || n > kMaxAmbientDim) throw Error(ErrorKind::ScaleCap, "n = " + std::to_string(n));
  std::vector<Subspace> words;
  for (const json& w : get<json>(j, "words")) {
    if (!w.is_object()) throw Error(ErrorKind::ParseError, "word must be an object with a basis");
    words.push_back(subspace_from(field, n, get<json>(w, "basis"), mode));
  }
  std::optional<AdditionTable> table;
  if (j.contains("table") && !j.at("table").is_null())
    table = AdditionTable(get<std::vector<std::vector<int>>>(j, "table"));
  return SubspaceCode(field, n, std::move(words), std::move(table));
}

std::string_view order_name(BranchOrder o) {
  switch (o) {
    case BranchOrder::MinRemaining: return "min_remaining";
    case BranchOrder::Lexicographic: return "lexicographic";
    case BranchOrder::Descending: return "descending";
  }
  return "min_remaining";
}

BranchOrder order_from(const std::string& s) {
  for (auto o : {BranchOrder::MinRemaining, BranchOrder::Lexicographic, BranchOrder::Descending})
    if (order_name(o) == s) return o;
  throw Error(ErrorKind::ParseError, "unknown branch order '" + s + "'");
}

json law_json(const LawResult& law, const std::vector<Subspace>& elements) {
  json j = {{"holds", law.holds}};
  if (law.witness) {
    j["witness"] = *law.witness;
    json labels = json::array();
    for (int i : *law.witness)
      labels.push_back(i < static_cast<int>(elements.size()) ? elements[i].to_string() : std::to_string(i));
    j["witness_words"] = labels;
  }
  return j;
}

json report_json(const CheckReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations()) {
    json item = {{"check", v.check}, {"witness", v.witness}, {"count", v.count}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  return {{"passed", r.passed()}, {"checks", r.checks()}, {"violations", violations}, {"notes", r.notes()}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json status_json(const CatalogStatus& s) {
  return {{"linear", s.linear}, {"lemmas", s.lemmas}, {"closed", s.closed}};
}

}  // namespace

std::string write_field(const Field& field) {
  json j = field_json(field);
  j["schema"] = kSchema;
  return j.dump();
}

Field read_field(std::string_view text, int max_order) {
  const json j = parse(text);
  check_schema(j);
  return field_from(j, max_order);
}

std::string write_subspace(const Subspace& s) {
  return json{{"schema", kSchema}, {"field", field_json(s.field())}, {"n", s.ambient_dim()}, {"basis", basis_json(s)}}
      .dump();
}

Subspace read_subspace(std::string_view text, ParseMode mode) {
  const json j = parse(text);
  check_schema(j);
  const Field field = field_from(get<json>(j, "field"), kDefaultMaxFieldOrder);
  const int n = get<int>(j, "n");
  if (n < 1 || n > kMaxAmbientDim) throw Error(ErrorKind::ScaleCap, "n = " + std::to_string(n));
  return subspace_from(field, n, get<json>(j, "basis"), mode);
}

std::string write_code(const SubspaceCode& code, int indent) { return code_json(code).dump(indent); }

SubspaceCode read_code(std::string_view text, ParseMode mode) { return code_from(parse(text), mode); }

std::string write_search_config(const SearchConfig& c) {
  json field = {{"p", c.p}, {"m", c.m}};
  if (!c.modulus.empty()) field["modulus"] = c.modulus;
  return json{{"schema", kSchema},
              {"field", field},
              {"n", c.n},
              {"max_words", c.max_words},
              {"time_budget_s", c.time_budget_s},
              {"node_budget", c.node_budget},
              {"parallel_width", c.parallel_width},
              {"order", order_name(c.order)},
              {"seed_direct_sums", c.seed_direct_sums}}
      .dump(2);
}

SearchConfig read_search_config(std::string_view text) {
  const json j = parse(text);
  check_schema(j);
  SearchConfig c;
  // The field may be nested or given as top-level p/m/modulus.
  const json field = j.contains("field") ? get<json>(j, "field") : j;
  c.p = get_or<int>(field, "p", c.p);
  c.m = get_or<int>(field, "m", 1);
  c.modulus = get_or<std::vector<int>>(field, "modulus", {});
  c.n = get<int>(j, "n");
  c.max_words = get_or<int>(j, "max_words", c.max_words);
  c.time_budget_s = get_or<double>(j, "time_budget_s", 60.0);
  c.node_budget = get_or<std::uint64_t>(j, "node_budget", c.node_budget);
  c.parallel_width = get_or<int>(j, "parallel_width", c.parallel_width);
  c.order = order_from(get_or<std::string>(j, "order", "min_remaining"));
  c.seed_direct_sums = get_or<bool>(j, "seed_direct_sums", c.seed_direct_sums);
  if (c.parallel_width < 1) throw Error(ErrorKind::ParseError, "parallel_width must be positive");
  if (c.time_budget_s < 0) throw Error(ErrorKind::ParseError, "time_budget_s must be non-negative");
  return c;
}

std::string write_run_config(const RunConfig& c) {
  json field = {{"p", c.p}, {"m", c.m}, {"modulus", c.modulus}};
  json j = {{"schema", kSchema},         {"command", c.command},       {"field", field},
            {"n", c.n},                  {"k", nullptr},               {"input", c.input},
            {"output", c.output},        {"strict", c.strict},         {"parallel_width", c.parallel_width},
            {"time_budget_s", c.time_budget_s}, {"seed", c.seed},      {"checks", c.checks}};
  if (c.k) j["k"] = *c.k;
  return j.dump(2);
}

RunConfig read_run_config(std::string_view text) {
  const json j = parse(text);
  check_schema(j);
  RunConfig c;
  c.command = get<std::string>(j, "command");
  const json field = get<json>(j, "field");
  c.p = get<int>(field, "p");
  c.m = get_or<int>(field, "m", 1);
  c.modulus = get_or<std::vector<int>>(field, "modulus", {});
  c.n = get_or<int>(j, "n", 0);
  if (j.contains("k") && !j.at("k").is_null()) c.k = get<int>(j, "k");
  c.input = get_or<std::string>(j, "input", "");
  c.output = get_or<std::string>(j, "output", "");
  c.strict = get_or<bool>(j, "strict", true);
  c.parallel_width = get_or<int>(j, "parallel_width", 1);
  c.time_budget_s = get_or<double>(j, "time_budget_s", 0.0);
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.checks = get_or<std::vector<std::string>>(j, "checks", {});
  return c;
}

std::string write_check_report(const CheckReport& report) {
  json j = report_json(report);
  j["schema"] = kSchema;
  return j.dump(2);
}

std::string write_lattice_profile(const LatticeProfile& p, const std::vector<Subspace>& elements) {
  json atoms = json::array();
  for (int a : p.atoms) atoms.push_back(a < static_cast<int>(elements.size()) ? elements[a].to_string() : std::to_string(a));
  return json{{"schema", kSchema},
              {"size", p.size},
              {"height", p.height},
              {"atoms", atoms},
              {"modular", law_json(p.modular, elements)},
              {"distributive", law_json(p.distributive, elements)},
              {"geometric", law_json(p.geometric, elements)}}
      .dump(2);
}

std::string describe_profile(const LatticeProfile& p) {
  std::ostringstream out;
  out << (p.distributive.holds ? "distributive" : "not distributive") << ", "
      << (p.geometric.holds ? "geometric" : "not geometric") << ", "
      << (p.modular.holds ? "modular" : "not modular") << ", height " << p.height << " (size " << p.size << ", "
      << p.atoms.size() << " atoms)";
  return out.str();
}

std::string write_decomposition(const SubspaceCode& code, const Decomposition& d) {
  json parts = json::array();
  for (int w : d.part_words) parts.push_back({{"index", w}, {"word", code.word(w).to_string()}});
  return json{{"schema", kSchema},
              {"word", {{"index", d.target}, {"word", code.word(d.target).to_string()}}},
              {"parts", parts}}
      .dump(2);
}

std::string write_bases(const SubspaceCode& code, const BasisReport& bases) {
  json list = json::array();
  for (const auto& basis : bases.bases) {
    json words = json::array();
    for (int w : basis) words.push_back(code.word(w).to_string());
    list.push_back({{"indices", basis}, {"words", words}});
  }
  return json{{"schema", kSchema}, {"unique", bases.unique}, {"count", bases.bases.size()}, {"bases", list}}.dump(2);
}

std::string_view family_name(CheckFamily family) noexcept {
  switch (family) {
    case CheckFamily::Linearity: return "linearity";
    case CheckFamily::Closure: return "closure";
    case CheckFamily::Lemmas: return "lemmas";
    case CheckFamily::Uit: return "uit";
    case CheckFamily::Lattice: return "lattice";
    case CheckFamily::Decomposition: return "decomposition";
  }
  return "unknown";
}

std::vector<CheckFamily> parse_check_selector(std::string_view selector) {
  static constexpr CheckFamily all[] = {CheckFamily::Linearity, CheckFamily::Closure, CheckFamily::Lemmas,
                                        CheckFamily::Uit,       CheckFamily::Lattice, CheckFamily::Decomposition};
  std::vector<CheckFamily> out;
  std::size_t start = 0;
  while (start <= selector.size()) {
    const std::size_t end = std::min(selector.find(',', start), selector.size());
    const std::string_view item = selector.substr(start, end - start);
    if (item == "all") {
      out.assign(std::begin(all), std::end(all));
    } else {
      const auto it = std::find_if(std::begin(all), std::end(all), [&](CheckFamily f) { return family_name(f) == item; });
      if (it == std::end(all)) throw Error(ErrorKind::ParseError, "unknown check family '" + std::string(item) + "'");
      if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    }
    start = end + 1;
  }
  return out;
}

namespace {

CheckReport lattice_family(const SubspaceCode& code, std::optional<LatticeProfile>& profile_out,
                           std::vector<Subspace>& elements) {
  CheckReport r;
  for (auto name : {"Lattice.closed", "Lattice.distributive", "Lattice.geometric", "Birkhoff.size_bound"}) r.ran(name);
  std::optional<SubspaceLattice> built;
  try {
    built = build_lattice_from_code(code);
  } catch (const Error& e) {
    std::vector<int> witness;
    if (auto pair = first_unclosed_pair(code)) witness = {pair->first, pair->second};
    r.fail("Lattice.closed", witness, std::string(e.what()));
    return r;
  }
  const SubspaceLattice& sl = *built;
  const LatticeProfile p = profile(sl.lattice);
  elements = sl.elements;
  profile_out = p;
  if (!p.distributive.holds)
    r.fail("Lattice.distributive", std::vector<int>(p.distributive.witness->begin(), p.distributive.witness->end()));
  if (!p.geometric.holds)
    r.fail("Lattice.geometric", std::vector<int>(p.geometric.witness->begin(), p.geometric.witness->end()));
  if (p.distributive.holds) r.merge(check_birkhoff_bound(sl.lattice));
  if (code.has_table() && is_linear(code).passed()) {
    r.ran("Lattice.atoms_are_indecomposables");
    if (indecomposable_codewords(code) != p.atoms) r.fail("Lattice.atoms_are_indecomposables", p.atoms);
  }
  return r;
}

CheckReport decomposition_family(const SubspaceCode& code) {
  CheckReport r;
  r.ran("Decomposition.unique");
  r.ran("Decomposition.count");
  try {
    const Decomposer d(code);
    for (int w = 1; w < code.size(); ++w) {
      try {
        d.decompose(w);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoDecomposition) throw;
        r.fail("Decomposition.unique", {w}, e.what());
      }
    }
    const int rank = exact_log2(static_cast<std::size_t>(code.size()));
    const int count = static_cast<int>(d.indecomposables().size());
    if (count != rank || rank > code.ambient_dim()) r.fail("Decomposition.count", {count, rank});
    r.note(std::to_string(count) + " indecomposables for " + std::to_string(code.size()) + " words");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotLinear && e.kind() != ErrorKind::NotClosedUnderIntersection &&
        e.kind() != ErrorKind::MissingTable)
      throw;
    r.fail("Decomposition.unique", {}, e.what());
  }
  return r;
}

std::string summary_line(CheckFamily f, const CheckReport& r) {
  std::ostringstream out;
  out << family_name(f) << ": ";
  if (r.passed()) {
    out << "pass (" << r.checks().size() << " checks)";
    return out.str();
  }
  out << "FAIL";
  for (const Violation& v : r.violations()) {
    out << " " << v.check << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? ", " : "") << v.witness[i];
    out << ")";
  }
  return out.str();
}

}  // namespace

VerifyResult verify_code(const SubspaceCode& code, const std::vector<CheckFamily>& families) {
  VerifyResult result;
  std::vector<Subspace> lattice_elements;
  json fams = json::array();
  for (CheckFamily f : families) {
    CheckReport r;
    const bool needs_table = f != CheckFamily::Closure && f != CheckFamily::Lattice;
    if (needs_table && !code.has_table()) {
      r.ran("Def1.table_present");
      r.fail("Def1.table_present", {}, "code has no addition table");
    } else {
      switch (f) {
        case CheckFamily::Linearity: r = is_linear(code); break;
        case CheckFamily::Closure: r = closure_report(code); break;
        case CheckFamily::Lemmas: r = verify_lemma_suite(code, Precondition::Report); break;
        case CheckFamily::Uit: r = verify_union_intersection(code, Precondition::Report); break;
        case CheckFamily::Lattice: r = lattice_family(code, result.lattice, lattice_elements); break;
        case CheckFamily::Decomposition: r = decomposition_family(code); break;
      }
    }
    result.passed = result.passed && r.passed();
    std::string line = summary_line(f, r);
    if (f == CheckFamily::Lattice && result.lattice) line += "; " + describe_profile(*result.lattice);
    result.summary.push_back(std::move(line));
    json entry = report_json(r);
    entry["family"] = family_name(f);
    fams.push_back(std::move(entry));
    result.reports.emplace_back(f, std::move(r));
  }
  json j = {{"schema", kSchema}, {"passed", result.passed}, {"families", fams}};
  if (result.lattice) j["lattice"] = json::parse(write_lattice_profile(*result.lattice, lattice_elements));
  result.json = j.dump(2);
  return result;
}

CatalogStatus compute_status(const SubspaceCode& code) {
  CatalogStatus s;
  s.closed = is_closed_under_intersection(code);
  if (code.has_table()) {
    s.linear = is_linear(code).passed();
    s.lemmas = verify_lemma_suite(code, Precondition::Report).passed();
  }
  return s;
}

std::string content_id(const SubspaceCode& code) {
  json j = code_json(code);
  const std::string text = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return hex64(h);
}

std::string catalog_line(const SubspaceCode& code) {
  return json{{"schema", kSchema}, {"id", content_id(code)}, {"status", status_json(compute_status(code))},
              {"code", code_json(code)}}
      .dump();
}

void append_catalog(const std::filesystem::path& path, const std::vector<SubspaceCode>& codes) {
  std::set<std::string> present;
  if (std::filesystem::exists(path)) {
    for (const CatalogEntry& e : load_catalog(path, ParseMode::Lenient)) present.insert(e.id);
  }
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot open catalog " + path.string());
  for (const SubspaceCode& code : codes) {
    if (!present.insert(content_id(code)).second) continue;
    out << catalog_line(code) << '\n';
  }
  if (!out) throw Error(ErrorKind::ParseError, "failed writing catalog " + path.string());
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path, ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open catalog " + path.string());
  std::vector<CatalogEntry> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const json j = parse(line);
    check_schema(j);
    SubspaceCode code = code_from(get<json>(j, "code"), ParseMode::Strict);
    const std::string id = get<std::string>(j, "id");
    const std::string where = path.string() + ":" + std::to_string(number);
    if (content_id(code) != id) throw Error(ErrorKind::CatalogMismatch, where + ": id does not match content");
    const json st = get<json>(j, "status");
    CatalogStatus status{get<bool>(st, "linear"), get<bool>(st, "lemmas"), get<bool>(st, "closed")};
    if (mode == ParseMode::Strict && compute_status(code) != status)
      throw Error(ErrorKind::CatalogMismatch, where + ": stored status differs from re-verification");
    entries.push_back({id, status, std::move(code)});
  }
  return entries;
}

std::string write_search_summary(const SearchOutcome& o) {
  return json{{"schema", kSchema},
              {"max_M", o.max_size},
              {"exhausted", o.exhausted},
              {"codes_found", o.codes.size()},
              {"word_sets", o.stats.word_sets},
              {"nodes", o.stats.nodes},
              {"prunes", o.stats.prunes},
              {"wall_ms", std::round(o.stats.wall_ms * 1000.0) / 1000.0}}
      .dump(2);
}

std::string write_conjecture_report(const ConjectureReport& r) {
  json codes = json::array();
  for (std::size_t i = 0; i < r.assessments.size(); ++i) {
    const CodeAssessment& a = r.assessments[i];
    codes.push_back({{"id", content_id(r.search.codes[i])},
                     {"size", a.size},
                     {"within_power_bound", a.within_power_bound},
                     {"closed", a.closed},
                     {"unique_basis", a.unique_basis},
                     {"basis_count", a.basis_count},
                     {"indecomposables", a.indecomposables}});
  }
  return json{{"schema", kSchema},
              {"coverage", r.coverage},
              {"exhausted", r.search.exhausted},
              {"size_bound_violations", r.size_bound_violations},
              {"closed_without_unique", r.closed_without_unique},
              {"unique_without_closed", r.unique_without_closed},
              {"codes", codes}}
      .dump(2);
}

}  // namespace subcode::io
