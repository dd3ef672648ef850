// altcox: presentations, coset enumeration, normal forms and verification
// for alternating subgroups of Coxeter groups.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altcox/catalog.hpp"
#include "altcox/chains.hpp"
#include "altcox/coxeter.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"
#include "json.hpp"

using namespace altcox;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string family;
  int rank = 0;
  std::string variant = "coxeter";
  std::string matrix_file;
  std::string presentation_file;
  std::vector<int> anchors;
  int vertex_base = 0;
};

void add_source_options(CLI::App* cmd, Source& s, bool allow_file) {
  cmd->add_option("--family", s.family, "Coxeter type: A, B or D");
  cmd->add_option("--rank", s.rank, "Rank n of the Coxeter group");
  cmd->add_option("--variant", s.variant,
                  "coxeter, carmichael, bourbaki, edge, vv, spinor, spinor-prime, "
                  "spinor-plus-bourbaki, spinor-plus-edge, spinor-prime-plus-bourbaki, "
                  "spinor-prime-plus-edge, universal-a5, universal-a6");
  cmd->add_option("--matrix", s.matrix_file, "Coxeter matrix JSON {\"n\", \"m\"}; 0 means infinity");
  cmd->add_option("--anchors", s.anchors, "One anchor vertex per component (edge variants)")
      ->delimiter(',');
  cmd->add_option("--vertex-base", s.vertex_base, "Offset added to vertex numbers in edge names");
  if (allow_file) cmd->add_option("--presentation", s.presentation_file, "Presentation JSON file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw UsageError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_atomic(path, text);
}

std::optional<SpinorVariant> spinor_of(const std::string& v) {
  if (v.rfind("spinor-prime", 0) == 0) return SpinorVariant::TildePrime;
  if (v.rfind("spinor", 0) == 0) return SpinorVariant::Tilde;
  return std::nullopt;
}

Presentation resolve(const Source& s) {
  const int sources = !s.presentation_file.empty() + !s.matrix_file.empty() + !s.family.empty();
  if (sources != 1)
    throw UsageError("give exactly one of --family/--rank, --matrix or --presentation");

  if (!s.presentation_file.empty()) return presentation_from_json(read_json(s.presentation_file));

  const std::string& v = s.variant;
  if (v == "universal-a5") return universal_extension(UniversalCover::A5);
  if (v == "universal-a6") return universal_extension(UniversalCover::A6);

  std::optional<Family> family;
  CoxeterMatrix m;
  if (!s.family.empty()) {
    family = family_from_string(s.family);
    if (v == "vv") {
      if (*family != Family::A) throw UsageError("the vv presentation exists for type A only");
      return vv_presentation(s.rank);
    }
    m = standard_matrix(*family, s.rank);
  } else {
    m = matrix_from_json(read_json(s.matrix_file));
  }

  std::optional<std::vector<int>> anchors;
  if (!s.anchors.empty()) anchors = s.anchors;
  auto extension = [&] { return connected_extension(graph_from_matrix(m), anchors); };

  if (auto sv = spinor_of(v)) {
    if (v == "spinor" || v == "spinor-prime") return spinor_presentation(m, *sv);
    if (v.ends_with("-plus-bourbaki")) return spinor_plus_presentation(m, SpinorStyle::Bourbaki, *sv);
    if (v.ends_with("-plus-edge")) return spinor_plus_presentation(m, SpinorStyle::Edge, *sv);
    throw UsageError("unknown variant: " + v);
  }
  const Variant variant = variant_from_string(v);
  if (family && !anchors && s.vertex_base == 0) return chain_presentation(*family, variant, s.rank);
  switch (variant) {
    case Variant::Coxeter: return coxeter_presentation(m);
    case Variant::Bourbaki: return bourbaki_presentation(m, 0);
    case Variant::Edge: return edge_presentation(extension(), {"r", s.vertex_base}).first;
    case Variant::Carmichael:
      throw UsageError("the carmichael variant needs --family and --rank");
  }
  throw UsageError("unknown variant: " + v);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// present ---------------------------------------------------------------------

struct PresentArgs {
  Source source;
  std::string format = "json";
  std::string output;
};

int cmd_present(const PresentArgs& a) {
  const Presentation p = resolve(a.source);
  std::string text;
  if (a.format == "json") {
    text = dump(to_json(p));
  } else if (a.format == "text") {
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : p.generators()) os << ' ' << g;
    os << '\n';
    for (const Word& r : p.relators()) os << render_word(r, p) << '\n';
    text = os.str();
  } else {
    throw UsageError("present supports --format json or text");
  }
  emit(a.output, text);
  return kExitOk;
}

// enumerate / order -------------------------------------------------------------

struct EnumerateArgs {
  Source source;
  std::vector<std::string> subgroup;
  int subgroup_prefix = -1;
  std::size_t max_cosets = EnumerationOptions{}.max_cosets;
  bool order_only = false;
  std::string format = "text";
  std::string output;
  std::string csv_path;
  std::string dot_path;
  std::string reps_path;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.max_cosets == 0) throw UsageError("--max-cosets must be positive");
  const Presentation p = resolve(a.source);
  std::vector<Word> h;
  if (a.subgroup_prefix >= 0) {
    if (static_cast<std::size_t>(a.subgroup_prefix) > p.rank())
      throw UsageError("--subgroup-prefix exceeds the number of generators");
    for (int k = 0; k < a.subgroup_prefix; ++k)
      h.push_back(Word::of({static_cast<std::uint32_t>(k)}));
  }
  for (const auto& w : a.subgroup) h.push_back(parse_word(w, p));
  if (a.order_only) h.clear();

  EnumerationOptions opt;
  opt.max_cosets = a.max_cosets;
  const EnumerationResult r = enumerate(p, h, opt);
  if (!r.completed()) {
    std::cerr << "altcox: coset enumeration exceeded " << a.max_cosets << " cosets\n";
    return kExitCap;
  }

  const SchreierGraph g = schreier(r);
  std::vector<std::string> reps;
  for (const Word& w : g.representatives) reps.push_back(render_word(w, p));

  std::string text;
  if (a.format == "text") {
    text = (a.order_only ? "order " : "index ") + std::to_string(r.index) + "\n";
  } else if (a.format == "json") {
    nlohmann::json j{{"index", r.index},
                     {"generators", p.generators()},
                     {"representatives", reps},
                     {"total_defined", r.total_defined},
                     {"max_live", r.max_live}};
    text = dump(j);
  } else if (a.format == "csv") {
    text = to_csv(r);
  } else if (a.format == "dot") {
    text = to_dot(g);
  } else {
    throw UsageError("unknown --format " + a.format);
  }

  std::string reps_text;
  for (const auto& s : reps) reps_text += s + "\n";

  emit(a.output, text);
  if (!a.csv_path.empty()) write_atomic(a.csv_path, to_csv(r));
  if (!a.dot_path.empty()) write_atomic(a.dot_path, to_dot(g));
  if (!a.reps_path.empty()) write_atomic(a.reps_path, reps_text);
  return kExitOk;
}

// nf ----------------------------------------------------------------------------

struct NfArgs {
  std::string family;
  std::string variant = "edge";
  int rank = 0;
  std::string word;
  bool enumerate_all = false;
  std::string output;
};

std::string render_factors(const ChainDecomposition& d, const Presentation& p) {
  std::string line;
  for (std::size_t k = 0; k < d.factors.size(); ++k)
    line += (k ? " | " : "") + render_word(d.factors[k], p);
  return line;
}

int cmd_nf(const NfArgs& a) {
  if (a.family.empty() || a.rank == 0) throw UsageError("nf needs --family and --rank");
  if (a.word.empty() == !a.enumerate_all) throw UsageError("nf needs exactly one of --word or --enumerate");
  const ChainSpec spec{family_from_string(a.family), variant_from_string(a.variant), a.rank};
  const Chain chain(spec);
  const Presentation& p = chain.presentation();
  std::string text;
  if (a.enumerate_all) {
    for (const auto& d : chain.enumerate_elements()) text += render_factors(d, p) + "\n";
  } else {
    text = render_factors(chain.decompose(parse_word(a.word, p)), p) + "\n";
  }
  emit(a.output, text);
  return kExitOk;
}

// verify --------------------------------------------------------------------------

struct VerifyArgs {
  std::string only;
  std::string presentation_file;
  std::string family;
  std::string variant;
  int rank = 0;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<CheckResult> results;
  if (!a.presentation_file.empty()) {
    if (a.family.empty() || a.variant.empty() || a.rank == 0)
      throw UsageError("--presentation needs --family, --variant and --rank");
    const Presentation p = presentation_from_json(read_json(a.presentation_file));
    results.push_back(check_presentation_images(p, family_from_string(a.family),
                                                variant_from_string(a.variant), a.rank));
  } else {
    CatalogOptions opt;
    opt.only = a.only;
    opt.parallel = !a.serial;
    results = run_catalog(opt);
  }
  std::cout << render_results(results);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations, coset enumeration and normal forms for alternating Coxeter groups"};
  app.require_subcommand(1);

  PresentArgs present;
  auto* c_present = app.add_subcommand("present", "Print a presentation as JSON or text");
  add_source_options(c_present, present.source, false);
  c_present->add_option("--format", present.format, "json or text");
  c_present->add_option("-o,--output", present.output, "Output file (default stdout)");

  EnumerateArgs en;
  auto* c_enum = app.add_subcommand("enumerate", "Todd-Coxeter enumeration of left cosets");
  add_source_options(c_enum, en.source, true);
  c_enum->add_option("--subgroup", en.subgroup, "Subgroup generator word (repeatable)");
  c_enum->add_option("--subgroup-prefix", en.subgroup_prefix, "Use the first k generators as subgroup");
  c_enum->add_option("--max-cosets", en.max_cosets, "Cap on cosets ever defined");
  c_enum->add_flag("--order", en.order_only, "Enumerate over the trivial subgroup and print the order");
  c_enum->add_option("--format", en.format, "text, json, csv or dot");
  c_enum->add_option("-o,--output", en.output, "Output file (default stdout)");
  c_enum->add_option("--csv", en.csv_path, "Also write the coset table as CSV");
  c_enum->add_option("--dot", en.dot_path, "Also write the Schreier graph as DOT");
  c_enum->add_option("--reps", en.reps_path, "Also write coset representatives, one per line");

  EnumerateArgs ord;
  ord.order_only = true;
  auto* c_order = app.add_subcommand("order", "Group order by enumeration over the trivial subgroup");
  add_source_options(c_order, ord.source, true);
  c_order->add_option("--max-cosets", ord.max_cosets, "Cap on cosets ever defined");

  NfArgs nf;
  auto* c_nf = app.add_subcommand("nf", "Chain normal forms");
  c_nf->add_option("--family", nf.family, "A, B or D")->required();
  c_nf->add_option("--variant", nf.variant, "carmichael, bourbaki or edge");
  c_nf->add_option("--rank", nf.rank, "Rank n")->required();
  c_nf->add_option("--word", nf.word, "Word to decompose");
  c_nf->add_flag("--enumerate", nf.enumerate_all, "List every normal form");
  c_nf->add_option("-o,--output", nf.output, "Output file (default stdout)");

  VerifyArgs ver;
  auto* c_verify = app.add_subcommand("verify", "Run the verification catalog");
  c_verify->add_option("--only", ver.only, "Run one check group");
  c_verify->add_option("--presentation", ver.presentation_file,
                       "Check this presentation against the realization of a triple");
  c_verify->add_option("--family", ver.family, "Triple for --presentation");
  c_verify->add_option("--variant", ver.variant, "Triple for --presentation");
  c_verify->add_option("--rank", ver.rank, "Triple for --presentation");
  c_verify->add_flag("--serial", ver.serial, "Run checks on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_present) return cmd_present(present);
    if (*c_enum) return cmd_enumerate(en);
    if (*c_order) return cmd_enumerate(ord);
    if (*c_nf) return cmd_nf(nf);
    if (*c_verify) return cmd_verify(ver);
  } catch (const CapExceededError& e) {
    std::cerr << "altcox: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "altcox: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "altcox: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "altcox: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "altcox: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
