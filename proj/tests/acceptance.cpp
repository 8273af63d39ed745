// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "center_tables.hpp"
#include "lieaut/cli.hpp"
#include "lieaut/moduli.hpp"
#include "lieaut/weyl.hpp"
#include "oracles.hpp"

using namespace lieaut;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string squeeze(const std::string& line) {
  std::string out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = squeeze(line);
    if (!s.empty() && s.front() != '#') lines.push_back(s);
  }
  return lines;
}

Outcome table_reproduction() {
  Outcome o;
  std::ifstream golden(std::string(LIEAUT_SOURCE_DIR) + "/tables/corollary_b.golden");
  o.require(golden.good(), "golden file missing");
  if (!o.ok) return o;
  const auto expected = content_lines(golden);
  const auto result = cmd_table({kMinPresentationGenus, 8, OutputFormat::text});
  o.require(result.exit_code == 0, "table command failed: " + result.err);
  std::istringstream produced(result.out);
  const auto actual = content_lines(produced);
  o.require(actual.size() == expected.size(),
            std::to_string(actual.size()) + " rows, golden has " + std::to_string(expected.size()));
  for (std::size_t i = 0; i < std::min(actual.size(), expected.size()); ++i)
    o.require(actual[i] == expected[i], "row " + std::to_string(i + 1) + ": '" + actual[i] + "' vs '" + expected[i] + "'");
  return o;
}

Outcome center_tables_match() {
  Outcome o;
  using namespace center_tables;
  for (const auto& table : {table_a(8), table_bc(8), table_d(8), table_e6(8), table_rest(8)}) {
    const auto problems = compare(table);
    o.require(problems.empty(), problems.empty() ? "" : problems.front());
  }
  return o;
}

Outcome degree_identities() {
  Outcome o;
  for (auto t : admissible_types(8)) {
    const auto rd = build_root_datum(t);
    const auto d = invariant_degrees(rd);
    const auto roots = static_cast<std::int64_t>(rd.num_roots());
    const std::int64_t r = rd.rank();
    std::int64_t sum = 0;
    for (int x : d) sum += x - 1;
    o.require(sum == roots / 2 && roots % 2 == 0, t.name() + ": sum of exponents");
    o.require(static_cast<std::int64_t>(d.back()) * r == roots, t.name() + ": top degree times rank");
    if (r <= 6) {
      BigInt prod = 1;
      for (int x : d) prod *= x;
      o.require(prod == weyl_group_order(rd), t.name() + ": product of degrees vs |W|");
    }
  }
  return o;
}

Outcome dimension_cross_check() {
  Outcome o;
  for (auto t : admissible_types(8)) {
    const auto rd = build_root_datum(t);
    const auto d = invariant_degrees(rd);
    const std::int64_t dim_g = rd.rank() + static_cast<std::int64_t>(rd.num_roots());
    for (int g = 2; g <= 10; ++g) {
      std::int64_t sections = 0;
      for (int x : d) sections += oracle::sections_of_canonical_power(x, g);
      o.require(riemann_roch_basis_dim(d, g) == dim_g * (g - 1), t.name() + ": Riemann-Roch at g=" + std::to_string(g));
      o.require(sections == dim_g * (g - 1), t.name() + ": sections at g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome out_action_anchors() {
  Outcome o;
  for (int n = 5; n <= 8; ++n) {
    const auto td = make_type_data({Family::D, n});
    const auto& w = td->root_datum.fundamental_weights;
    const Element a = td->weights.classify(w[n - 2]), b = td->weights.classify(w[n - 1]);
    o.require(td->diagram_automorphisms.size() == 2, "D" + std::to_string(n) + ": Out order");
    if (!o.ok) return o;
    o.require(a != b && td->act_on_weights(1, a) == b && td->act_on_weights(1, b) == a,
              "D" + std::to_string(n) + ": w_{n-1} and w_n not swapped");
  }
  {
    const auto td = make_type_data({Family::E, 6});
    const Element w1 = td->weights.classify(td->root_datum.fundamental_weights[0]);
    o.require(td->diagram_automorphisms.size() == 2, "E6: Out order");
    if (!o.ok) return o;
    o.require(w1 != td->weights.group.zero() && td->act_on_weights(1, w1) == td->weights.group.negate(w1),
              "E6: w_1 not sent to -w_1");
  }
  {
    const auto td = make_type_data({Family::D, 4});
    const auto& rd = td->root_datum;
    const std::vector<Element> three{td->weights.classify(unit_vector(rd.ambient_dim, 0)),
                                     td->weights.classify(rd.fundamental_weights[2]),
                                     td->weights.classify(rd.fundamental_weights[3])};
    std::set<std::vector<Element>> images;
    for (std::size_t k = 0; k < td->diagram_automorphisms.size(); ++k) {
      std::vector<Element> img;
      for (const auto& x : three) img.push_back(td->act_on_weights(k, x));
      o.require(std::is_permutation(img.begin(), img.end(), three.begin()), "D4: {e1, w3, w4} not preserved");
      images.insert(img);
    }
    o.require(std::set<Element>(three.begin(), three.end()).size() == 3, "D4: classes not distinct");
    o.require(images.size() == 6, "D4: not all of S_3 realized");
  }
  return o;
}

Outcome delta_calculator() {
  Outcome o;
  for (std::int64_t m = 1; m <= 12; ++m) {
    const auto e = local_model(m);
    const std::int64_t closed = m % 2 == 0 ? m / 2 : (m - 1) / 2;
    o.require(e.degree == m && delta_local(e) == closed, "m=" + std::to_string(m));
  }
  std::mt19937 rng(77031);
  std::uniform_int_distribution<int> len(0, 6), drop(0, 8), small_drop(0, 1), half(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    RamificationProfile a, b, c;
    for (int i = len(rng); i > 0; --i) {
      const int d = drop(rng);
      a.push_back({d + 2 * half(rng), d});
    }
    for (int i = len(rng); i > 0; --i) {
      const int d = drop(rng);
      b.push_back({d + 2 * half(rng), d});
    }
    RamificationProfile ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    o.require(delta_total(ab) == delta_total(a) + delta_total(b), "additivity, trial " + std::to_string(trial));
    bool transversal = true;
    for (int i = len(rng); i > 0; --i) {
      const int d = small_drop(rng);
      c.push_back({d + 2 * half(rng), d});
      transversal = transversal && c.back().degree <= 1;
    }
    o.require((delta_total(c) == 0) == transversal, "transversal zero, trial " + std::to_string(trial));
  }
  return o;
}

void abelian_groups(std::int64_t bound, std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  std::int64_t order = 1;
  for (auto f : cur) order *= f;
  out.push_back(cur);
  for (std::int64_t next = 2; order * next <= bound; ++next)
    if (cur.empty() || next % cur.back() == 0) {
      cur.push_back(next);
      abelian_groups(bound, cur, out);
      cur.pop_back();
    }
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const SmithForm s = smith_normal_form(m);
    const auto d = s.diagonal_entries();
    bool chain = s.diagonal.is_diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      chain = chain && d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
    const BigInt du = determinant(s.left), dv = determinant(s.right);
    o.require(s.left * m * s.right == s.diagonal && chain && (du == 1 || du == -1) && (dv == 1 || dv == -1),
              "SNF round trip, trial " + std::to_string(trial));
  }
  std::vector<std::vector<std::int64_t>> groups;
  std::vector<std::int64_t> cur;
  abelian_groups(16, cur, groups);
  o.require(groups.size() == 25, "expected 25 abelian groups of order <= 16");
  for (const auto& f : groups) {
    const FiniteAbelianGroup g(f);
    std::set<std::vector<Element>> ours;
    const auto subs = enumerate_subgroups(g);
    for (const auto& s : subs) ours.insert(s.elements);
    o.require(ours.size() == subs.size() && ours == oracle::subgroups_by_subsets(g), "subgroups of " + g.to_string());
  }
  for (auto t : admissible_types(8)) {
    const auto rd = build_root_datum(t);
    const auto once = reflection_closure(rd.simple_roots, rd.simple_roots);
    o.require(reflection_closure(once, rd.simple_roots) == once, t.name() + ": closure not idempotent");
    const auto brute = oracle::root_closure(rd.simple_roots);
    o.require(std::vector<RationalVector>(brute.begin(), brute.end()) == once, t.name() + ": closure vs oracle");
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "classification table matches the golden file", 10.0, table_reproduction},
      {2, "center, fundamental group and Out tables", 5.0, center_tables_match},
      {3, "degree identities", 0.0, degree_identities},
      {4, "Riemann-Roch equals dim G (g-1)", 0.0, dimension_cross_check},
      {5, "Out-action anchors on lattice classes", 0.0, out_action_anchors},
      {6, "delta calculator", 0.0, delta_calculator},
      {7, "property suites", 30.0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << " - " << c.name << " (" << seconds << " s)";
    if (!o.ok) line << ": " << o.detail;
    std::cout << line.str() << '\n';
    failures += o.ok ? 0 : 1;
  }
  return failures;
}
