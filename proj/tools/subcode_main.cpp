// Command-line front end: enumerate, verify, lattice, decompose, search,
// counterexample. Exit codes: 0 pass, 1 usage or parse error, 2 scale cap,
// 3 a selected check failed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subcode/decomposition.hpp"
#include "subcode/error.hpp"
#include "subcode/io.hpp"
#include "subcode/lattice.hpp"
#include "subcode/search.hpp"

namespace fs = std::filesystem;
using namespace subcode;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitCheck = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
}

// Relative output paths land in $SUBCODE_CACHE_DIR when it is set.
fs::path output_path(const std::string& given) {
  fs::path p(given);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("SUBCODE_CACHE_DIR"); dir && *dir) return fs::path(dir) / p;
  return p;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ScaleCap:
    case ErrorKind::FieldTooLarge:
      return kExitCap;
    case ErrorKind::NotLinear:
    case ErrorKind::NotClosedUnderIntersection:
    case ErrorKind::NoDecomposition:
    case ErrorKind::NotMeetClosed:
    case ErrorKind::NotJoinClosed:
      return kExitCheck;
    default:
      return kExitUsage;
  }
}

struct Options {
  int q = 2;
  int n = 0;
  int k = -1;
  bool json = false;
  bool lenient = false;
  std::string input;
  std::string output;
  std::string checks = "all";
  std::string dot;
  int word = -1;
  bool conjecture = false;
  std::string run_config;
};

io::RunConfig run_config(const std::string& command, const Options& o, const Field& field) {
  io::RunConfig c;
  c.command = command;
  if (field) {
    c.p = field->p();
    c.m = field->m();
    c.modulus = field->modulus();
  }
  c.n = o.n;
  if (o.k >= 0) c.k = o.k;
  c.input = o.input;
  c.output = o.output;
  c.strict = !o.lenient;
  if (command == "verify") c.checks = {o.checks};
  return c;
}

void save_run_config(const std::string& command, const Options& o, const Field& field) {
  if (!o.run_config.empty()) write_file(output_path(o.run_config), io::write_run_config(run_config(command, o, field)));
}

int cmd_enumerate(const Options& o) {
  const Field field = field_of_order(o.q);
  std::vector<Subspace> listing;
  std::vector<std::size_t> counts;
  if (o.k >= 0) {
    listing = enumerate_grassmannian(field, o.n, o.k).elements;
    counts.push_back(listing.size());
  } else {
    listing = enumerate_projective_space(field, o.n);
    counts.assign(o.n + 1, 0);
    for (const Subspace& s : listing) ++counts[s.dim()];
  }
  std::ostringstream count_line;
  for (std::size_t i = 0; i < counts.size(); ++i) count_line << (i ? " " : "") << counts[i];

  std::ostringstream text;
  if (o.json) {
    text << "{\"schema\":\"v1\",\"q\":" << o.q << ",\"n\":" << o.n << ",\"total\":" << listing.size()
         << ",\"counts\":[";
    for (std::size_t i = 0; i < counts.size(); ++i) text << (i ? "," : "") << counts[i];
    text << "],\"subspaces\":[";
    for (std::size_t i = 0; i < listing.size(); ++i) text << (i ? "," : "") << io::write_subspace(listing[i]);
    text << "]}\n";
  } else {
    for (const Subspace& s : listing) text << s.dim() << " " << s.to_string() << "\n";
    text << "total " << listing.size() << "\n" << count_line.str() << "\n";
  }
  if (o.output.empty())
    std::cout << text.str();
  else
    write_file(output_path(o.output), text.str());
  save_run_config("enumerate", o, field);
  return kExitPass;
}

SubspaceCode load_code(const Options& o) {
  return io::read_code(read_file(o.input), o.lenient ? io::ParseMode::Lenient : io::ParseMode::Strict);
}

int cmd_verify(const Options& o) {
  const SubspaceCode code = load_code(o);
  const auto families = io::parse_check_selector(o.checks);
  const io::VerifyResult result = io::verify_code(code, families);
  for (const std::string& line : result.summary) std::cout << line << "\n";
  std::cout << (result.passed ? "PASS" : "FAIL") << "\n";
  if (!o.output.empty()) write_file(output_path(o.output), result.json);
  if (o.json) std::cout << result.json << "\n";
  save_run_config("verify", o, code.field());
  return result.passed ? kExitPass : kExitCheck;
}

int cmd_lattice(const Options& o) {
  SubspaceLattice sl = [&] {
    if (!o.input.empty()) return build_lattice_from_code(load_code(o));
    return build_projective_lattice(field_of_order(o.q), o.n);
  }();
  const LatticeProfile p = profile(sl.lattice);
  std::cout << "lattice: " << io::describe_profile(p) << "\n";
  if (p.distributive.holds) {
    const CheckReport bound = check_birkhoff_bound(sl.lattice);
    std::cout << "size bound: " << (bound.passed() ? "holds" : "violated") << "\n";
  }
  if (o.json) std::cout << io::write_lattice_profile(p, sl.elements) << "\n";
  if (!o.output.empty()) write_file(output_path(o.output), io::write_lattice_profile(p, sl.elements));
  if (!o.dot.empty()) {
    std::vector<std::string> labels;
    for (const Subspace& s : sl.elements) labels.push_back(s.to_string());
    write_file(output_path(o.dot), hasse_dot(sl.lattice, labels));
  }
  save_run_config("lattice", o, sl.elements.front().field());
  return kExitPass;
}

int cmd_decompose(const Options& o) {
  const SubspaceCode code = load_code(o);
  const Decomposer decomposer(code);
  std::cout << "indecomposables:";
  for (int w : decomposer.indecomposables()) std::cout << " " << code.word(w).to_string();
  std::cout << "\n";
  std::ostringstream json;
  json << "[";
  bool first = true;
  for (int w = 0; w < code.size(); ++w) {
    if (o.word >= 0 && w != o.word) continue;
    const Decomposition d = decomposer.decompose(w);
    std::cout << code.word(w).to_string() << " =";
    if (d.part_words.empty()) std::cout << " (empty sum)";
    for (std::size_t i = 0; i < d.part_words.size(); ++i)
      std::cout << (i ? " ⊞ " : " ") << code.word(d.part_words[i]).to_string();
    std::cout << "\n";
    json << (first ? "" : ",") << io::write_decomposition(code, d);
    first = false;
  }
  json << "]";
  const BasisReport bases = indecomposable_bases(code);
  std::cout << "indecomposable bases: " << bases.bases.size() << (bases.unique ? " (unique)" : "") << "\n";
  if (o.json) std::cout << json.str() << "\n" << io::write_bases(code, bases) << "\n";
  save_run_config("decompose", o, code.field());
  return kExitPass;
}

int cmd_search(const Options& o) {
  const SearchConfig config = io::read_search_config(read_file(o.input));
  const fs::path dir = output_path(o.output.empty() ? "." : o.output);
  fs::create_directories(dir);
  const Field field = config.make_field();
  std::string summary;
  if (o.conjecture) {
    const ConjectureReport report = conjecture_harness(config);
    io::append_catalog(dir / "catalog.jsonl", report.search.codes);
    summary = io::write_search_summary(report.search);
    write_file(dir / "conjecture.json", io::write_conjecture_report(report));
    std::cout << "coverage: " << report.coverage << "\n"
              << "closed without unique basis: " << report.closed_without_unique << "\n"
              << "unique basis without closure: " << report.unique_without_closed << "\n";
    std::cerr << "wall " << report.search.stats.wall_ms << " ms\n";
  } else {
    const SearchOutcome outcome = search_max_linear_code(config);
    io::append_catalog(dir / "catalog.jsonl", outcome.codes);
    summary = io::write_search_summary(outcome);
    std::cerr << "wall " << outcome.stats.wall_ms << " ms\n";
  }
  write_file(dir / "summary.json", summary);
  std::cout << summary << "\n";
  save_run_config("search", o, field);
  return kExitPass;
}

int cmd_counterexample(const Options& o) {
  const Field field = make_field(2);
  const SubspaceCode code = remark_counterexample(field, o.n);
  const std::string text = io::write_code(code);
  if (o.output.empty())
    std::cout << text << "\n";
  else
    write_file(output_path(o.output), text);
  save_run_config("counterexample", o, field);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear subspace codes over finite fields"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--run-config", o.run_config, "Write the parsed run configuration as JSON");

  auto* enumerate = app.add_subcommand("enumerate", "List the subspaces of F_q^n");
  enumerate->add_option("--q", o.q, "Field order (prime power)")->required();
  enumerate->add_option("--n", o.n, "Ambient dimension")->required();
  enumerate->add_option("--k", o.k, "Only subspaces of this dimension");
  enumerate->add_flag("--json", o.json, "Machine-readable output");
  enumerate->add_option("--out", o.output, "Write the listing to a file");

  auto* verify = app.add_subcommand("verify", "Run checks on a code file");
  verify->add_option("code", o.input, "Code JSON")->required();
  verify->add_option("--checks", o.checks, "linearity,closure,lemmas,uit,lattice,decomposition or all");
  verify->add_option("--report", o.output, "Write the JSON report here");
  verify->add_flag("--lenient", o.lenient, "Row-reduce word bases instead of rejecting them");
  verify->add_flag("--json", o.json, "Print the JSON report");

  auto* lattice = app.add_subcommand("lattice", "Profile the lattice of F_q^n or of a code");
  lattice->add_option("--q", o.q, "Field order (prime power)");
  lattice->add_option("--n", o.n, "Ambient dimension");
  lattice->add_option("--code", o.input, "Code JSON (closed under intersection and sum)");
  lattice->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format");
  lattice->add_option("--out", o.output, "Write the JSON profile here");
  lattice->add_flag("--lenient", o.lenient, "Row-reduce word bases instead of rejecting them");
  lattice->add_flag("--json", o.json, "Print the JSON profile");

  auto* decompose = app.add_subcommand("decompose", "Split words into indecomposables");
  decompose->add_option("code", o.input, "Code JSON")->required();
  decompose->add_option("--word", o.word, "Only this word index");
  decompose->add_flag("--lenient", o.lenient, "Row-reduce word bases instead of rejecting them");
  decompose->add_flag("--json", o.json, "Print JSON decompositions and bases");

  auto* search = app.add_subcommand("search", "Search for large linear codes");
  search->add_option("config", o.input, "Search configuration JSON")->required();
  search->add_option("--out", o.output, "Directory for catalog.jsonl and summary.json");
  search->add_flag("--conjecture", o.conjecture, "Also assess closure and basis uniqueness per code");

  auto* counter = app.add_subcommand("counterexample", "Linear code over GF(2) not closed under intersection");
  counter->add_option("--n", o.n, "Ambient dimension (at least 3)")->default_val(3);
  counter->add_option("--out", o.output, "Write the code JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
    if (*lattice) {
      if (o.input.empty() && (lattice->count("--n") == 0 || lattice->count("--q") == 0)) {
        std::cerr << "lattice: give --code or --q/--n\n";
        return kExitUsage;
      }
      return cmd_lattice(o);
    }
    if (*decompose) return cmd_decompose(o);
    if (*search) return cmd_search(o);
    if (*counter) return cmd_counterexample(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
