// Acceptance gate: one line per criterion, plus detail lines for failures.
// Exit status is 0 when every failure is listed in kUnattainable below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "altcox/catalog.hpp"
#include "altcox/chains.hpp"
#include "altcox/oracle.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"

using namespace altcox;

namespace {

struct Row {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // applies to the whole criterion
  std::function<std::vector<Row>()> run;
};

// Rows that cannot pass as stated, with the reason.
const std::map<std::string, std::string> kUnattainable = {
    {"D+/carmichael/3", "H = <a1> has order 3, so D3+ (order 12) has index 4, not 6"},
    {"D+/edge/3", "H = <r1> has order 3, so D3+ (order 12) has index 4, not 6"},
    {"A5/extension", "the cover of A5+ (order 360) has order 6 * 360 = 2160"},
    {"A6/extension", "the cover of A6+ (order 2520) has order 6 * 2520 = 15120"},
    {"A5/quotient", "the quotient by z and zeta is A5+ itself, order 360"},
    {"A6/quotient", "the quotient by z and zeta is A6+ itself, order 2520"},
};

const std::vector<Variant> kPlus{Variant::Carmichael, Variant::Bourbaki, Variant::Edge};

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<Word> first_gens(int count) {
  std::vector<Word> h;
  for (int k = 0; k < count; ++k) h.push_back(Word::of({static_cast<std::uint32_t>(k)}));
  return h;
}

Row index_row(const std::string& name, const Presentation& p, int gens, std::size_t want) {
  const auto t0 = std::chrono::steady_clock::now();
  const EnumerationResult r = enumerate(p, first_gens(gens));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool fast = secs < 1.0;
  return {name, r.completed() && r.index == want && fast,
          "index " + str(r.index) + ", expected " + str(want) + (fast ? "" : ", over 1 s")};
}

std::vector<Row> coset_counts() {
  std::vector<Row> rows;
  const auto cox = [](Family f, int n) { return coxeter_presentation(standard_matrix(f, n)); };
  for (int n = 2; n <= 7; ++n) {
    rows.push_back(index_row("A/coxeter/" + std::to_string(n), cox(Family::A, n), n - 1, n + 1));
    for (Variant v : kPlus)
      rows.push_back(index_row("A+/" + to_string(v) + "/" + std::to_string(n),
                               chain_presentation(Family::A, v, n), n - 2, n + 1));
  }
  for (Family f : {Family::B, Family::D})
    for (int n = f == Family::B ? 2 : 3; n <= 5; ++n) {
      const std::string tag = to_string(f);
      rows.push_back(index_row(tag + "/coxeter/" + std::to_string(n), cox(f, n), n - 1, 2 * n));
      for (Variant v : kPlus)
        rows.push_back(index_row(tag + "+/" + to_string(v) + "/" + std::to_string(n),
                                 chain_presentation(f, v, n), n - 2, 2 * n));
    }
  return rows;
}

std::vector<Row> order_agreement() {
  std::vector<Row> rows;
  const std::map<Family, std::pair<int, int>> ranks{
      {Family::A, {2, 6}}, {Family::B, {2, 4}}, {Family::D, {3, 5}}};
  for (const auto& [f, range] : ranks)
    for (Variant v : kPlus)
      for (int n = range.first; n <= range.second; ++n) {
        const std::size_t engine = order(chain_presentation(f, v, n));
        const std::size_t oracle = generated_order(realization_images(f, v, n), oracle_degree(f, n));
        const std::size_t closed = closed_form_order(f, n);
        rows.push_back({to_string(f) + "/" + to_string(v) + "/" + std::to_string(n),
                        engine == oracle && oracle == closed,
                        str(engine) + " " + str(oracle) + " " + str(closed)});
      }
  return rows;
}

std::vector<Row> catalog_rows(const std::vector<std::string>& groups) {
  std::vector<Row> rows;
  for (const auto& g : groups) {
    CatalogOptions o;
    o.only = g;
    for (const auto& r : run_catalog(o)) rows.push_back({g + "/" + r.name, r.passed, r.detail});
  }
  return rows;
}

std::vector<Row> spinor_doubling() {
  std::vector<Row> rows;
  const std::vector<std::pair<Family, int>> cases{
      {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::D, 3}, {Family::D, 4}};
  for (const auto& [f, n] : cases) {
    const CoxeterMatrix m = standard_matrix(f, n);
    const std::size_t plain = order(chain_presentation(f, Variant::Edge, n));
    for (SpinorVariant s : {SpinorVariant::Tilde, SpinorVariant::TildePrime}) {
      const std::size_t doubled = order(spinor_plus_presentation(m, SpinorStyle::Edge, s));
      rows.push_back({to_string(f) + "/" + std::to_string(n) +
                          (s == SpinorVariant::Tilde ? "/tilde" : "/prime"),
                      doubled == 2 * plain, str(doubled) + " = 2 * " + str(plain) + "?"});
    }
  }
  return rows;
}

std::vector<Row> universal() {
  // Targets from the acceptance list.
  const std::map<UniversalCover, std::pair<std::size_t, std::size_t>> stated{
      {UniversalCover::A5, {360, 60}}, {UniversalCover::A6, {2160, 360}}};
  std::vector<Row> rows;
  for (const auto& [u, want] : stated) {
    const std::string tag = u == UniversalCover::A5 ? "A5" : "A6";
    const Presentation p = universal_extension(u);
    const std::size_t full = order(p);
    const std::size_t quotient = order(p.with_relators({p.gen("z"), p.gen("zeta")}));
    rows.push_back({tag + "/extension", full == want.first,
                    "order " + str(full) + ", stated " + str(want.first)});
    rows.push_back({tag + "/quotient", quotient == want.second,
                    "order " + str(quotient) + ", stated " + str(want.second)});
    const std::size_t plus = closed_form_order(Family::A, u == UniversalCover::A5 ? 5 : 6);
    rows.push_back({tag + "/schur", full == 6 * quotient && quotient == plus,
                    "kernel of order " + str(quotient ? full / quotient : 0)});
  }
  return rows;
}

std::vector<Row> normal_forms() {
  std::vector<Row> rows;
  std::vector<ChainSpec> specs;
  for (Variant v : kPlus)
    for (int n = 2; n <= 5; ++n) specs.push_back({Family::A, v, n});
  for (int n = 2; n <= 4; ++n) specs.push_back({Family::B, Variant::Edge, n});
  for (int n = 3; n <= 4; ++n) specs.push_back({Family::D, Variant::Edge, n});
  for (const ChainSpec& s : specs) {
    const Chain c(s);
    const auto elems = c.enumerate_elements();
    const std::size_t distinct = c.distinct_products(elems);
    const std::size_t want = closed_form_order(s.family, s.rank);
    rows.push_back({to_string(s.family) + "/" + to_string(s.variant) + "/" + std::to_string(s.rank),
                    elems.size() == want && distinct == want,
                    str(elems.size()) + " forms, " + str(distinct) + " distinct, order " + str(want)});
  }
  return rows;
}

std::vector<Row> equivalences() {
  std::vector<Row> rows;
  for (int n = 2; n <= 5; ++n) {
    const Presentation v = vv_presentation(n);
    const Presentation e = chain_presentation(Family::A, Variant::Edge, n);
    GroupHom there = identity_hom(v, e);
    GroupHom back = identity_hom(e, v);
    const std::size_t o = order(v);
    rows.push_back({"vv/" + std::to_string(n),
                    o == closed_form_order(Family::A, n) && verify_hom(there) && verify_hom(back),
                    "order " + str(o)});
  }
  for (int n = 2; n <= 7; ++n)
    rows.push_back({"artin/" + std::to_string(n), artin_relations_hold(n), ""});

  const ConnectedExtension a6 = connected_extension(graph_from_matrix(standard_matrix(Family::A, 6)));
  const auto images = realization_images(Family::A, Variant::Edge, 6);
  const std::size_t bad_a6 = path_relator_failures(
      a6, 50, 61u, [&](const Word& w) { return eval_word(images, w).is_identity(); });
  rows.push_back({"paths/A6", bad_a6 == 0, str(bad_a6) + " of 50 failed"});
  const ExampleRealization real;
  const std::size_t bad_ex = path_relator_failures(example_extension(), 50, 62u,
                                                   [&](const Word& w) { return real.trivial(w); });
  rows.push_back({"paths/example", bad_ex == 0, str(bad_ex) + " of 50 failed"});
  return rows;
}

std::vector<Row> example() {
  std::vector<Row> rows;
  const Presentation p = edge_presentation(example_extension(), {"r", 1}).first;
  const auto& want = example_expected_relators();
  std::size_t same = 0;
  for (std::size_t k = 0; k < want.size() && k < p.relators().size(); ++k)
    same += render_word(p.relators()[k], p) == want[k];
  rows.push_back({"relators", same == want.size() && p.relators().size() == want.size(),
                  str(same) + " of " + str(want.size()) + " verbatim"});

  const ExampleRealization real;
  bool faithful = true;
  for (const Word& r : p.relators()) faithful = faithful && real.trivial(r);
  rows.push_back({"realization", faithful, "relators trivial in the realization"});

  // Both orders are infinite: the engine never closes and the realization
  // contains an element of infinite order.
  EnumerationOptions capped;
  capped.max_cosets = 100'000;
  const bool engine_infinite = !enumerate(p, {}, capped).completed();
  const bool oracle_infinite = real.infinite_order_witness(200);
  rows.push_back({"order", engine_infinite && oracle_infinite,
                  std::string("engine ") + (engine_infinite ? "infinite" : "finite") +
                      ", realization " + (oracle_infinite ? "infinite" : "finite")});
  return rows;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "coset counts", 30, coset_counts},
      {2, "order agreement", 60, order_agreement},
      {3, "relator verification", 30,
       [] { return catalog_rows({"images", "carmichael", "bourbaki-edge"}); }},
      {4, "spinor doubling", 120, spinor_doubling},
      {5, "universal central extensions", 120, universal},
      {6, "spinor isomorphism", 10, [] { return catalog_rows({"prop33"}); }},
      {7, "normal-form uniqueness", 60, normal_forms},
      {8, "equivalences", 30, equivalences},
      {9, "example group", 5, example},
  };
  return all;
}

struct Outcome {
  bool passed = true;
  bool only_known = true;
  double seconds = 0;
  std::string body;  // deterministic part, compared across runs
};

Outcome evaluate(const Criterion& c) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Row> rows = c.run();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  for (const Row& r : rows) {
    os << (r.passed ? "ok   " : "FAIL ") << r.name << "  " << r.detail << '\n';
    if (!r.passed) {
      out.passed = false;
      if (!kUnattainable.contains(r.name)) out.only_known = false;
    }
  }
  if (out.seconds > c.limit_seconds) {
    out.passed = false;
    out.only_known = false;
  }
  out.body = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  bool gate = true;
  std::string first_pass;

  for (const Criterion& c : criteria()) {
    const Outcome o = evaluate(c);
    first_pass += o.body;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", o.seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  (" << time
              << ", limit " << c.limit_seconds << "s)" << '\n';
    if (!o.passed || verbose) {
      std::istringstream lines(o.body);
      for (std::string line; std::getline(lines, line);) {
        if (!verbose && line.starts_with("ok")) continue;
        std::cout << "      " << line;
        const std::string name = line.substr(5, line.find("  ") - 5);
        if (line.starts_with("FAIL") && kUnattainable.contains(name))
          std::cout << "  [unattainable: " << kUnattainable.at(name) << "]";
        std::cout << '\n';
      }
    }
    gate = gate && (o.passed || o.only_known);
  }

  std::string second_pass;
  for (const Criterion& c : criteria()) second_pass += evaluate(c).body;
  const bool same = first_pass == second_pass;
  std::cout << (same ? "PASS" : "FAIL") << "  10. determinism  (" << first_pass.size()
            << " bytes compared)" << '\n';
  gate = gate && same;

  std::cout << (gate ? "gate: all failures are listed as unattainable" : "gate: unexpected failure")
            << '\n';
  return gate ? 0 : 1;
}
