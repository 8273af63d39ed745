#include <doctest.h>

#include "lieaut/cli.hpp"
#include "lieaut/report.hpp"

using namespace lieaut;

TEST_CASE("report documents round-trip through JSON") {
  for (const char* spec : {"A1:sc", "A5:mu3", "D4:adjoint", "D6:semispin", "E6:adjoint", "G2", "E8"}) {
    CAPTURE(spec);
    const auto gf = parse_group_spec(spec);
    for (int genus : {2, 3, 4, 7}) {
      const auto doc = make_report(gf, fundamental_group(gf).zero(), genus);
      CHECK(parse_report_json(render_json(doc)) == doc);
      CHECK(doc.presentation.has_value() == (genus >= 4));
      CHECK(doc.warnings.empty() == (genus >= 4));
    }
  }
}

TEST_CASE("table and root data documents round-trip through JSON") {
  const auto table = make_table(4, 5);
  CHECK(parse_table_json(render_json(table)) == table);
  for (const char* t : {"A1", "B3", "D4", "E6", "G2"}) {
    const auto rd = make_rootdata(parse_dynkin_type(t));
    CHECK(parse_rootdata_json(render_json(rd)) == rd);
  }
}

TEST_CASE("report contents") {
  const auto doc = make_report(parse_group_spec("D4:adjoint"), {0, 0}, 5);
  CHECK(doc.group.name == "PSO_8");
  CHECK(doc.group.spec == "D4:adjoint");
  CHECK(doc.group.out_kind == "S_3");
  CHECK(doc.group.pi1 == std::vector<std::int64_t>{2, 2});
  CHECK(doc.group.out_elements.size() == 6);
  REQUIRE(doc.presentation);
  CHECK(doc.presentation->rendered == "S_3 × Aut(C)");
  CHECK(doc.hitchin.dim_basis == 28 * 4);

  const auto rd = make_rootdata(parse_dynkin_type("E6"));
  CHECK(rd.roots.size() == 72);
  CHECK(rd.degrees == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(rd.weyl_order == "51840");
  CHECK(rd.weight_quotient == "Z/3Z");
  CHECK(rd.diagram_automorphisms == 2);
  CHECK(make_rootdata(parse_dynkin_type("D5")).weight_quotient == "Z/4Z");
  CHECK(make_rootdata(parse_dynkin_type("A1")).hyperplane_pair_orbits == 0);
}

TEST_CASE("LaTeX rendering") {
  CHECK(latex_math("Pic(C)[4] ⋊ (Z/2Z × Aut(C))") ==
        "\\operatorname{Pic}(C)[4] \\rtimes (\\mathbb Z/2\\mathbb Z \\times \\operatorname{Aut}(C))");
  const auto tex = render_latex(make_table(4, 2));
  CHECK(tex.find("\\hline") != std::string::npos);
  CHECK(tex.find("\\mathbb{G}_2") != std::string::npos);
  CHECK(tex.find("A_{1} &") != std::string::npos);
  CHECK(tex.find("  ") == std::string::npos);
}
