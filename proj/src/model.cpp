#include "qcoh/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qcoh/linear.hpp"

namespace qcoh {

namespace {

[[noreturn]] void violation(const std::string& invariant, const std::string& detail) {
  throw ModelError("model invariant violated [" + invariant + "]: " + detail);
}

std::string triple_str(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

FanoModel::FanoModel(ModelData data) : name_(std::move(data.name)), dimension_(data.dimension) {
  basis_ = std::move(data.basis);
  const int n = static_cast<int>(basis_.size());
  if (dimension_ < 1) violation("dimension", "dimension must be >= 1");
  if (n == 0) violation("basis", "basis is empty");
  if (basis_[0].codim != 0) violation("basis", "T_0 must have codimension 0");
  while (p_ + 1 < n && basis_[static_cast<std::size_t>(p_ + 1)].codim == 1) ++p_;
  for (int i = 1; i < n; ++i) {
    int c = basis_[static_cast<std::size_t>(i)].codim;
    if (c < 0 || c > dimension_) violation("basis", "codimension out of range for " + basis_[static_cast<std::size_t>(i)].name);
    if (c == 0) violation("basis", "only T_0 may have codimension 0");
    if (i > p_ && c < 2) violation("basis", "divisor classes must be T_1..T_p");
  }
  std::vector<int> per_codim(static_cast<std::size_t>(dimension_) + 1, 0);
  for (const auto& b : basis_) ++per_codim[static_cast<std::size_t>(b.codim)];
  for (int k = 0; k <= dimension_; ++k) {
    if (per_codim[static_cast<std::size_t>(k)] != per_codim[static_cast<std::size_t>(dimension_ - k)])
      violation("poincare duality", "codim " + std::to_string(k) + " and " +
                                        std::to_string(dimension_ - k) + " have different class counts");
  }

  // pairing
  if (data.pairing.size() != static_cast<std::size_t>(n)) violation("pairing", "pairing must be (m+1)x(m+1)");
  g_.assign(static_cast<std::size_t>(n * n), Int(0));
  for (int i = 0; i < n; ++i) {
    if (data.pairing[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
      violation("pairing", "pairing must be (m+1)x(m+1)");
    for (int j = 0; j < n; ++j) g_[idx(i, j)] = data.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g_[idx(i, j)] != g_[idx(j, i)])
        violation("pairing symmetric", "g[" + std::to_string(i) + "][" + std::to_string(j) + "] != g[" +
                                           std::to_string(j) + "][" + std::to_string(i) + "]");
      if (g_[idx(i, j)] != 0 && codim(i) + codim(j) != dimension_)
        violation("pairing degree", "g[" + std::to_string(i) + "][" + std::to_string(j) + "] nonzero but codims do not sum to dim");
    }
  }
  RationalMatrix gm(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g_[idx(i, j)];
  auto inv = invert(gm);
  if (!inv) violation("pairing invertible", "pairing matrix is singular");
  ginv_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ginv_[idx(i, j)] = (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  // triple products
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::optional<Int>> given(nn * nn * nn);
  auto at = [&](int i, int j, int k) -> std::optional<Int>& {
    return given[(static_cast<std::size_t>(i) * nn + j) * nn + k];
  };
  for (const auto& t : data.triples) {
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
      violation("triples", "index out of range in " + triple_str(t.i, t.j, t.k));
    int ids[3] = {t.i, t.j, t.k};
    std::sort(ids, ids + 3);
    do {
      auto& slot = at(ids[0], ids[1], ids[2]);
      if (slot && *slot != t.value) violation("triples symmetric", "conflicting values for " + triple_str(t.i, t.j, t.k));
      slot = t.value;
    } while (std::next_permutation(ids, ids + 3));
  }
  c_.assign(nn * nn * nn, Int(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto& slot = at(i, j, k);
        Int v = slot ? *slot : Int(0);
        if (i == 0 || j == 0 || k == 0) {
          // unit law: c_{0jk} = g_{jk}; missing entries are filled from the pairing
          const Int& expect = (i == 0) ? pairing(j, k) : (j == 0) ? pairing(i, k) : pairing(i, j);
          if (slot && v != expect) violation("unit law", "c" + triple_str(i, j, k) + " must equal the pairing");
          v = expect;
        }
        if (v != 0 && codim(i) + codim(j) + codim(k) != dimension_)
          violation("triples degree", "c" + triple_str(i, j, k) + " nonzero but codims do not sum to dim");
        c_[(static_cast<std::size_t>(i) * nn + j) * nn + k] = v;
      }
    }
  }

  // effective lattice
  if (data.effective.size() != static_cast<std::size_t>(p_))
    violation("effective", "need one effective generator per divisor class (p = " + std::to_string(p_) + ")");
  c1_.assign(static_cast<std::size_t>(p_), 0);
  std::vector<bool> seen(static_cast<std::size_t>(p_), false);
  for (const auto& e : data.effective) {
    if (e.dual_divisor_index < 1 || e.dual_divisor_index > p_)
      violation("effective", "dual_divisor_index " + std::to_string(e.dual_divisor_index) + " out of range");
    auto slot = static_cast<std::size_t>(e.dual_divisor_index - 1);
    if (seen[slot]) violation("effective", "duplicate dual_divisor_index " + std::to_string(e.dual_divisor_index));
    seen[slot] = true;
    if (e.c1_degree < 2)
      violation("fano bound", "c1 degree of effective generator " + std::to_string(e.dual_divisor_index) +
                                  " is " + std::to_string(e.c1_degree) + " < 2");
    c1_[slot] = e.c1_degree;
  }
}

std::vector<int> FanoModel::insertion_weights() const {
  std::vector<int> w;
  for (int i = p_ + 1; i <= m(); ++i) w.push_back(codim(i) - 1);
  return w;
}

std::vector<EffectiveClass> FanoModel::effective_classes(int max_c1) const {
  std::vector<EffectiveClass> out;
  for (long c = 1; c <= max_c1; ++c) {
    for_each_weighted(c1_, c, [&](const MultiIndex& d) { out.push_back(d); });
  }
  return out;
}

ModelData FanoModel::data() const {
  ModelData d;
  d.name = name_;
  d.dimension = dimension_;
  d.basis = basis_;
  const int n = rank();
  d.pairing.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pairing(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (triple(i, j, k) != 0) d.triples.push_back({i, j, k, triple(i, j, k)});
  for (int i = 0; i < p_; ++i) d.effective.push_back({i + 1, c1_[static_cast<std::size_t>(i)]});
  return d;
}

bool FanoModel::operator==(const FanoModel& o) const {
  return dimension_ == o.dimension_ && basis_ == o.basis_ && g_ == o.g_ && c_ == o.c_ && c1_ == o.c1_;
}

// ---------------------------------------------------------------------------
// builtins

ModelPtr projective_space(int r) {
  if (r < 1) throw ModelError("projective space needs r >= 1");
  ModelData d;
  d.name = "p" + std::to_string(r);
  d.dimension = r;
  for (int i = 0; i <= r; ++i) {
    d.basis.push_back({i == 0 ? "1" : (i == 1 ? "h" : "h^" + std::to_string(i)), i});
  }
  const auto n = static_cast<std::size_t>(r + 1);
  d.pairing.assign(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i <= r; ++i) d.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - i)] = 1;
  for (int i = 0; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      int k = r - i - j;
      if (k >= j) d.triples.push_back({i, j, k, Int(1)});
    }
  d.effective.push_back({1, r + 1});
  return std::make_shared<const FanoModel>(std::move(d));
}

namespace {

ModelPtr quadric3() {
  ModelData d;
  d.name = "q3";
  d.dimension = 3;
  d.basis = {{"1", 0}, {"h", 1}, {"line", 2}, {"pt", 3}};
  d.pairing = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  // h^2 = 2 line, so h^3 = 2
  d.triples = {{0, 0, 3, Int(1)}, {0, 1, 2, Int(1)}, {1, 1, 1, Int(2)}};
  d.effective = {{1, 3}};
  return std::make_shared<const FanoModel>(std::move(d));
}

ModelPtr p1xp1() {
  ModelData d;
  d.name = "p1xp1";
  d.dimension = 2;
  // h1 = [pt x P1], h2 = [P1 x pt]; beta_1 = [P1 x pt] is dual to h1
  d.basis = {{"1", 0}, {"h1", 1}, {"h2", 1}, {"pt", 2}};
  d.pairing = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  d.triples = {{0, 0, 3, Int(1)}, {0, 1, 2, Int(1)}};
  d.effective = {{1, 2}, {2, 2}};
  return std::make_shared<const FanoModel>(std::move(d));
}

}  // namespace

ModelPtr builtin_model(const std::string& name, int r) {
  if (name == "q3") return quadric3();
  if (name == "p1xp1") return p1xp1();
  if (name == "pr") return projective_space(r);
  if (name.size() >= 2 && name[0] == 'p' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return projective_space(std::stoi(name.substr(1)));
  }
  throw ModelError("unknown builtin model '" + name + "'");
}

long expected_dimension(const FanoModel& model, const EffectiveClass& beta, int n) {
  return model.dimension() + model.c1_degree(beta) + n - 3;
}

// ---------------------------------------------------------------------------
// model files

namespace {

Int json_int(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()), 10);
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ModelError("model file: field '" + field + "' must be an integer (no floats)");
}

int json_small(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ModelError("model file: field '" + field + "' must be an integer");
  return v.get<int>();
}

nlohmann::json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

ModelPtr parse_model(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("model file: parse error: ") + e.what());
  }
  try {
    ModelData d;
    d.name = j.value("name", std::string("custom"));
    d.dimension = json_small(j.at("dimension"), "dimension");
    for (const auto& b : j.at("basis")) d.basis.push_back({b.at("name").get<std::string>(), json_small(b.at("codim"), "codim")});
    for (const auto& row : j.at("pairing")) {
      std::vector<Int> r;
      for (const auto& v : row) r.push_back(json_int(v, "pairing"));
      d.pairing.push_back(std::move(r));
    }
    for (const auto& t : j.at("triples")) {
      d.triples.push_back({json_small(t.at("i"), "i"), json_small(t.at("j"), "j"), json_small(t.at("k"), "k"),
                           json_int(t.at("value"), "value")});
    }
    for (const auto& e : j.at("effective")) {
      d.effective.push_back({json_small(e.at("dual_divisor_index"), "dual_divisor_index"),
                             json_small(e.at("c1_degree"), "c1_degree")});
    }
    return std::make_shared<const FanoModel>(std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("model file: schema error: ") + e.what());
  }
}

ModelPtr load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize_model(const FanoModel& model) {
  ModelData d = model.data();
  nlohmann::json j;
  j["name"] = d.name;
  j["dimension"] = d.dimension;
  j["basis"] = nlohmann::json::array();
  for (const auto& b : d.basis) j["basis"].push_back({{"name", b.name}, {"codim", b.codim}});
  j["pairing"] = nlohmann::json::array();
  for (const auto& row : d.pairing) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(int_to_json(v));
    j["pairing"].push_back(r);
  }
  j["triples"] = nlohmann::json::array();
  for (const auto& t : d.triples) j["triples"].push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"value", int_to_json(t.value)}});
  j["effective"] = nlohmann::json::array();
  for (const auto& e : d.effective)
    j["effective"].push_back({{"dual_divisor_index", e.dual_divisor_index}, {"c1_degree", e.c1_degree}});
  return j.dump(2) + "\n";
}

}  // namespace qcoh
