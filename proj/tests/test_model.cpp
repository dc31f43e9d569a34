#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qcoh/gw_table.hpp"
#include "qcoh/model.hpp"

using namespace qcoh;

namespace {

ModelData p2_data() { return builtin_model("p2")->data(); }

std::string error_of(ModelData d) {
  try {
    FanoModel m(std::move(d));
  } catch (const ModelError& e) {
    return e.what();
  }
  return "";
}

const std::vector<std::string> kBuiltins{"p1", "p2", "p3", "p4", "q3", "p1xp1"};

}  // namespace

TEST_CASE("builtin models have the expected shape") {
  auto p3 = builtin_model("p3");
  CHECK(p3->dimension() == 3);
  CHECK(p3->m() == 3);
  CHECK(p3->divisor_count() == 1);
  CHECK(p3->c1_degrees() == std::vector<int>{4});
  CHECK(p3->insertion_weights() == std::vector<int>{1, 2});

  auto q3 = builtin_model("q3");
  CHECK(q3->c1_degrees() == std::vector<int>{3});
  CHECK(q3->triple(1, 1, 1) == 2);
  CHECK(q3->triple(1, 1, 2) == 0);
  CHECK(q3->triple(0, 1, 2) == 1);

  auto pp = builtin_model("p1xp1");
  CHECK(pp->divisor_count() == 2);
  CHECK(pp->nondivisor_count() == 1);
  CHECK(pp->triple(1, 2, 0) == 1);
  CHECK(pp->triple(1, 1, 0) == 0);

  CHECK(*builtin_model("pr", 4) == *builtin_model("p4"));
  CHECK_THROWS_AS(builtin_model("nope"), ModelError);
}

TEST_CASE("inverse pairing inverts the pairing") {
  for (const auto& name : kBuiltins) {
    auto m = builtin_model(name);
    for (int i = 0; i < m->rank(); ++i)
      for (int j = 0; j < m->rank(); ++j) {
        Rational s = 0;
        for (int k = 0; k < m->rank(); ++k) s += m->pairing(i, k) * m->inverse_pairing(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("classical products are associative and have unit T0") {
  // sum_{e,f} c_{ije} g^{ef} c_{fkl} is symmetric under j <-> k
  for (const auto& name : kBuiltins) {
    auto m = builtin_model(name);
    const int n = m->rank();
    auto F = [&](int i, int j, int k, int l) {
      Rational s = 0;
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) s += m->triple(i, j, e) * m->inverse_pairing(e, f) * m->triple(f, k, l);
      return s;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          CHECK(m->triple(0, j, k) == m->pairing(j, k));
          for (int l = 0; l < n; ++l) CHECK(F(i, j, k, l) == F(i, k, j, l));
        }
  }
}

TEST_CASE("effective classes are ordered by c1 then coordinates") {
  auto pp = builtin_model("p1xp1");
  auto cls = pp->effective_classes(4);
  std::vector<EffectiveClass> want{{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
  CHECK(cls == want);
  CHECK(builtin_model("p2")->effective_classes(8).size() == 2);
  CHECK(builtin_model("p2")->effective_classes(2).empty());
}

TEST_CASE("expected dimension") {
  auto p2 = builtin_model("p2");
  CHECK(expected_dimension(*p2, EffectiveClass{3}, 8) == 16);
  CHECK(expected_dimension(*p2, EffectiveClass{0}, 3) == 2);
}

TEST_CASE("model invariants are enforced and named") {
  {
    auto d = p2_data();
    d.dimension = 0;
    CHECK(error_of(d).find("[dimension]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.basis[0].codim = 1;
    CHECK(error_of(d).find("[basis]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.basis.push_back({"extra", 2});
    d.pairing.push_back({0, 0, 0, 0});
    CHECK(error_of(d).find("[poincare duality]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.pairing[0][2] = 2;
    CHECK(error_of(d).find("[pairing symmetric]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.pairing[1][2] = d.pairing[2][1] = 1;
    CHECK(error_of(d).find("[pairing degree]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.pairing[1][1] = 0;
    CHECK(error_of(d).find("[pairing invertible]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.triples.push_back({1, 1, 0, Int(1)});
    d.triples.push_back({0, 1, 1, Int(2)});
    CHECK(error_of(d).find("[triples symmetric]") != std::string::npos);
  }
  {
    auto d = p2_data();
    std::erase_if(d.triples, [](const ModelData::Triple& t) { return t.i == 0 || t.j == 0 || t.k == 0; });
    CHECK(error_of(d).empty());  // index-0 triples default to the pairing
    d.triples.push_back({0, 1, 1, Int(3)});
    CHECK(error_of(d).find("[unit law]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.triples.push_back({1, 1, 1, Int(1)});
    CHECK(error_of(d).find("[triples degree]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.effective.clear();
    CHECK(error_of(d).find("[effective]") != std::string::npos);
  }
  {
    auto d = p2_data();
    d.effective[0].c1_degree = 1;
    CHECK(error_of(d).find("[fano bound]") != std::string::npos);
  }
}

TEST_CASE("model files round-trip") {
  for (const auto& name : kBuiltins) {
    auto m = builtin_model(name);
    auto back = parse_model(serialize_model(*m));
    CHECK(*back == *m);
    CHECK(back->name() == m->name());
  }
}

TEST_CASE("model file errors") {
  CHECK_THROWS_AS(parse_model("{"), ModelError);
  CHECK_THROWS_AS(parse_model(R"({"name": "x"})"), ModelError);
  std::string text = serialize_model(*builtin_model("p2"));
  auto pos = text.find("\"dimension\": 2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 14, "\"dimension\": 2.5");
  CHECK_THROWS_AS(parse_model(text), ModelError);
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ModelError);
}

TEST_CASE("shipped model files load") {
  const std::filesystem::path dir = std::filesystem::path(QCOH_SOURCE_DIR) / "models";
  for (const char* name : {"p2", "q3", "p1xp1"}) {
    auto m = load_model(dir / (std::string(name) + ".json"));
    CHECK(*m == *builtin_model(name));
  }
}

TEST_CASE("tables admit only dimensionally valid keys") {
  auto p2 = builtin_model("p2");
  GWTable t(p2, 6);
  t.set(EffectiveClass{1}, MultiIndex{2}, Int(1));
  CHECK(t.at(EffectiveClass{1}, MultiIndex{2}) == 1);
  CHECK_THROWS_AS(t.set(EffectiveClass{1}, MultiIndex{3}, Int(1)), std::invalid_argument);
  CHECK_THROWS_AS(t.set(EffectiveClass{0}, MultiIndex{0}, Int(1)), std::invalid_argument);
  CHECK_THROWS_AS(t.set(EffectiveClass{2}, MultiIndex{5}, Int(-1)), std::invalid_argument);
  CHECK_THROWS_AS(t.at(EffectiveClass{2}, MultiIndex{5}), TableMiss);
  CHECK(t.valid_insertions(EffectiveClass{2}) == std::vector<MultiIndex>{MultiIndex{5}});
  auto q3 = builtin_model("q3");
  GWTable u(q3, 3);
  CHECK(u.valid_insertions(EffectiveClass{1}).size() == 2);  // (3,0) and (1,1)
}
