#include "qcoh/qring.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcoh/gw_engine.hpp"

namespace qcoh {

// ---------------------------------------------------------------------------
// big ring

BigElement big_basis(const PotentialBundle& P, int i) {
  BigElement out(static_cast<std::size_t>(P.model().rank()), P.zero());
  out[static_cast<std::size_t>(i)] = P.constant(Rational(1));
  return out;
}

BigElement big_product(const PotentialBundle& P, int i, int j) {
  const auto& model = P.model();
  const int n = model.rank();
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("big_product: index out of range");
  BigElement out(static_cast<std::size_t>(n), P.zero());
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      const Rational& gef = model.inverse_pairing(e, f);
      if (gef == 0) continue;
      out[static_cast<std::size_t>(f)] += P.phi(i, j, e) * gef;
    }
  }
  return out;
}

BigElement big_multiply(const PotentialBundle& P, const BigElement& x, const BigElement& y) {
  const int n = P.model().rank();
  BigElement out(static_cast<std::size_t>(n), P.zero());
  for (int a = 0; a < n; ++a) {
    if (x[static_cast<std::size_t>(a)].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (y[static_cast<std::size_t>(b)].is_zero()) continue;
      GWSeries xy = series_mul(x[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
      BigElement ab = big_product(P, a, b);
      for (int f = 0; f < n; ++f) {
        if (ab[static_cast<std::size_t>(f)].is_zero()) continue;
        out[static_cast<std::size_t>(f)] += series_mul(xy, ab[static_cast<std::size_t>(f)]);
      }
    }
  }
  return out;
}

BigElement big_associator(const PotentialBundle& P, int i, int j, int k) {
  BigElement left = big_multiply(P, big_product(P, i, j), big_basis(P, k));
  BigElement right = big_multiply(P, big_basis(P, i), big_product(P, j, k));
  for (std::size_t f = 0; f < left.size(); ++f) left[f] -= right[f];
  return left;
}

bool is_zero(const BigElement& x) {
  return std::all_of(x.begin(), x.end(), [](const GWSeries& s) { return s.is_zero(); });
}

BigPresentation presentation_from_big(const PotentialBundle& P) {
  const auto& model = P.model();
  if (model.dimension() != 2 || model.m() != 2 || model.divisor_count() != 1)
    throw std::invalid_argument("presentation_from_big: needs a plane potential");
  BigPresentation out{P.gamma_partial(1, 1, 1), P.gamma_partial(1, 1, 2), P.gamma_partial(1, 2, 2), {}, {}};
  const BigElement square = big_product(P, 1, 1);
  out.cube = big_multiply(P, square, big_basis(P, 1));
  out.residual = out.cube;
  for (std::size_t f = 0; f < 3; ++f) out.residual[f] -= series_mul(out.gamma111, square[f]);
  out.residual[1] -= out.gamma112 * Rational(2);
  out.residual[0] -= out.gamma122;
  if (!is_zero(out.residual)) {
    for (std::size_t f = 0; f < 3; ++f)
      if (!out.residual[f].is_zero())
        throw InconsistencyError("presentation_from_big: cubic relation fails in the T" + std::to_string(f) +
                                 " coefficient: " + out.residual[f].str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// small ring

namespace {

std::shared_ptr<const VariableSet> make_q_vars(const FanoModel& model) {
  auto vars = std::make_shared<VariableSet>();
  const int p = model.divisor_count();
  for (int i = 0; i < p; ++i) {
    vars->names.push_back(p == 1 ? "q" : "q" + std::to_string(i + 1));
    vars->degrees.push_back(model.c1_degrees()[static_cast<std::size_t>(i)]);
  }
  return vars;
}

}  // namespace

std::vector<Int> cup_product(const FanoModel& model, int i, int j) {
  const int n = model.rank();
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) {
    Rational v = 0;
    for (int e = 0; e < n; ++e) v += model.triple(i, j, e) * model.inverse_pairing(e, f);
    out[static_cast<std::size_t>(f)] = to_int(v, "cup product");
  }
  return out;
}

SmallQuantumRing::SmallQuantumRing(const GWTable& table)
    : model_(table.model_ptr()), qvars_(make_q_vars(*model_)) {
  const int n = rank();
  const auto classes = model_->effective_classes(2 * model_->dimension());

  // Gbar_{ijk} as maps q-exponent -> value
  auto gbar = [&](int i, int j, int k) {
    std::map<MultiIndex, Int> out;
    out[MultiIndex(qvars_->size())] = model_->triple(i, j, k);
    for (const auto& beta : classes) {
      Int v = gw_invariant(*model_, table, beta, {i, j, k});
      if (v != 0) out[beta] += v;
    }
    return out;
  };

  products_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Element el = zero();
      for (int e = 0; e < n; ++e) {
        const auto g = gbar(i, j, e);
        for (int f = 0; f < n; ++f) {
          const Rational& gef = model_->inverse_pairing(e, f);
          if (gef == 0) continue;
          for (const auto& [exps, v] : g)
            el[static_cast<std::size_t>(f)].add(exps, to_int(gef * v, "small quantum product"));
        }
      }
      products_[static_cast<std::size_t>(i * n + j)] = std::move(el);
    }
  }
}

SmallQuantumRing::Element SmallQuantumRing::zero() const {
  return Element(static_cast<std::size_t>(rank()), GradedPoly(qvars_));
}

SmallQuantumRing::Element SmallQuantumRing::basis(int i) const {
  Element out = zero();
  out[static_cast<std::size_t>(i)] = GradedPoly::constant(qvars_, Int(1));
  return out;
}

SmallQuantumRing::Element SmallQuantumRing::multiply(const Element& x, const Element& y) const {
  const int n = rank();
  Element out = zero();
  for (int a = 0; a < n; ++a) {
    if (x[static_cast<std::size_t>(a)].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (y[static_cast<std::size_t>(b)].is_zero()) continue;
      const GradedPoly xy = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
      const Element& ab = product(a, b);
      for (int f = 0; f < n; ++f) out[static_cast<std::size_t>(f)] += xy * ab[static_cast<std::size_t>(f)];
    }
  }
  return out;
}

SmallQuantumRing::Element SmallQuantumRing::classical(const Element& x) const {
  std::vector<std::size_t> all(qvars_->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Element out;
  for (const auto& c : x) out.push_back(c.specialize_zero(all));
  return out;
}

std::optional<long> SmallQuantumRing::degree(const Element& x) const {
  std::optional<long> deg;
  for (int f = 0; f < rank(); ++f) {
    for (const auto& [exps, v] : x[static_cast<std::size_t>(f)].terms()) {
      const long d = exps.weighted(qvars_->degrees) + model_->codim(f);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

std::string SmallQuantumRing::str(const Element& x) const {
  std::string out;
  for (int f = rank() - 1; f >= 0; --f) {
    const auto& c = x[static_cast<std::size_t>(f)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string name = "T" + std::to_string(f);
    if (c == GradedPoly::constant(qvars_, Int(1)))
      out += name;
    else
      out += "(" + c.str() + ")*" + name;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// presentations

namespace {

/// In-place reduced row echelon form; columns are tried left to right.
std::vector<std::size_t> rref(RationalMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Rational factor = rows[o][c];
      for (std::size_t k = c; k < cols; ++k) rows[o][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

PresentationIdeal::PresentationIdeal(std::shared_ptr<const VariableSet> vars, std::vector<GradedPoly> relations,
                                     std::vector<std::size_t> q_indices, long max_degree)
    : vars_(std::move(vars)), relations_(std::move(relations)), q_(std::move(q_indices)), max_degree_(max_degree) {
  for (const auto& rel : relations_) {
    if (!(rel.vars() == *vars_)) throw std::invalid_argument("presentation: relation over different variables");
    if (!rel.is_homogeneous()) throw std::invalid_argument("presentation: relation " + rel.str() + " is not homogeneous");
  }
  for (long d = 0; d <= max_degree_; ++d) build_degree(d);
}

bool PresentationIdeal::monomial_greater(const MultiIndex& x, const MultiIndex& y) const {
  auto zdeg = [&](const MultiIndex& m) {
    long s = 0;
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (std::find(q_.begin(), q_.end(), i) == q_.end()) s += static_cast<long>(m[i]) * vars_->degrees[i];
    return s;
  };
  const long zx = zdeg(x), zy = zdeg(y);
  if (zx != zy) return zx > zy;
  const long tx = x.weighted(vars_->degrees), ty = y.weighted(vars_->degrees);
  if (tx != ty) return tx > ty;
  for (std::size_t i = x.arity(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

void PresentationIdeal::build_degree(long degree) {
  DegreeTable table;
  for_each_weighted(vars_->degrees, degree, [&](const MultiIndex& m) { table.monomials.push_back(m); });
  std::sort(table.monomials.begin(), table.monomials.end(),
            [&](const MultiIndex& x, const MultiIndex& y) { return monomial_greater(x, y); });
  std::map<MultiIndex, std::size_t> column;
  for (std::size_t c = 0; c < table.monomials.size(); ++c) column[table.monomials[c]] = c;

  for (const auto& rel : relations_) {
    const long rd = *rel.homogeneous_degree();
    if (rd > degree) continue;
    for_each_weighted(vars_->degrees, degree - rd, [&](const MultiIndex& m) {
      std::vector<Rational> row(table.monomials.size());
      for (const auto& [exps, v] : rel.terms()) row[column.at(exps + m)] = Rational(v);
      table.rref.push_back(std::move(row));
    });
  }
  table.pivots = rref(table.rref);
  tables_[degree] = std::move(table);
}

GradedPoly PresentationIdeal::variable(const std::string& name) const {
  auto i = vars_->find(name);
  if (!i) throw std::invalid_argument("presentation: unknown variable " + name);
  return variable(*i);
}

GradedPoly PresentationIdeal::normal_form(const GradedPoly& p) const {
  std::map<long, GradedPoly> parts;
  for (const auto& [exps, v] : p.terms()) {
    auto [it, fresh] = parts.try_emplace(exps.weighted(vars_->degrees), vars_);
    it->second.add(exps, v);
  }
  GradedPoly out(vars_);
  for (const auto& [deg, part] : parts) {
    auto t = tables_.find(deg);
    if (t == tables_.end())
      throw std::out_of_range("normal_form: degree " + std::to_string(deg) + " exceeds the reduction tables");
    const DegreeTable& table = t->second;
    std::vector<Rational> v(table.monomials.size());
    std::map<MultiIndex, std::size_t> column;
    for (std::size_t c = 0; c < table.monomials.size(); ++c) column[table.monomials[c]] = c;
    for (const auto& [exps, c] : part.terms()) v[column.at(exps)] = Rational(c);
    for (std::size_t r = 0; r < table.pivots.size(); ++r) {
      const Rational factor = v[table.pivots[r]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * table.rref[r][c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) out.add(table.monomials[c], to_int(v[c], "normal form coefficient"));
  }
  return out;
}

std::vector<MultiIndex> PresentationIdeal::standard_monomials(long degree) const {
  auto t = tables_.find(degree);
  if (t == tables_.end()) throw std::out_of_range("standard_monomials: degree out of range");
  std::vector<MultiIndex> out;
  const auto& table = t->second;
  for (std::size_t c = 0; c < table.monomials.size(); ++c)
    if (std::find(table.pivots.begin(), table.pivots.end(), c) == table.pivots.end())
      out.push_back(table.monomials[c]);
  return out;
}

std::vector<MultiIndex> PresentationIdeal::quotient_basis() const {
  std::vector<MultiIndex> out;
  for (long d = 0; d <= max_degree_; ++d) {
    for (const auto& m : standard_monomials(d)) {
      bool q_free = std::all_of(q_.begin(), q_.end(), [&](std::size_t i) { return m[i] == 0; });
      if (q_free) out.push_back(m);
    }
  }
  return out;
}

PresentationIdeal PresentationIdeal::classical() const {
  std::vector<GradedPoly> rels;
  for (const auto& r : relations_) {
    GradedPoly c = r.specialize_zero(q_);
    if (!c.is_zero()) rels.push_back(std::move(c));
  }
  for (std::size_t i : q_) rels.push_back(variable(i));
  return PresentationIdeal(vars_, std::move(rels), q_, max_degree_);
}

PresentationIdeal pr_presentation(int r) {
  if (r < 1) throw std::invalid_argument("pr_presentation: r must be >= 1");
  auto vars = std::make_shared<VariableSet>(VariableSet{{"T", "q"}, {1, r + 1}});
  GradedPoly T = GradedPoly::variable(vars, 0), q = GradedPoly::variable(vars, 1);
  return PresentationIdeal(vars, {T.pow(static_cast<unsigned>(r + 1)) - q}, {1}, 2L * r + 2);
}

std::vector<Check> verify_pr_presentation(int r) {
  if (r < 1) throw std::invalid_argument("verify_pr_presentation: r must be >= 1");
  std::vector<Check> checks;
  auto model = projective_space(r);
  const GWTable table = wdvv_solve(model, default_seeds(model), 2 * r);
  const SmallQuantumRing ring(table);
  const PresentationIdeal pres = pr_presentation(r);
  const auto& qv = ring.q_vars();
  const GradedPoly one = GradedPoly::constant(qv, Int(1));
  const GradedPoly q = GradedPoly::variable(qv, 0);
  const std::string tag = "P" + std::to_string(r) + " ";

  {
    std::string bad;
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= r; ++j) {
        auto expect = ring.zero();
        if (i + j <= r)
          expect[static_cast<std::size_t>(i + j)] = one;
        else
          expect[static_cast<std::size_t>(i + j - r - 1)] = q;
        if (ring.product(i, j) != expect && bad.empty())
          bad = "T" + std::to_string(i) + "*T" + std::to_string(j) + " = " + ring.str(ring.product(i, j));
      }
    }
    checks.push_back({tag + "product rules", bad.empty(), bad.empty() ? "all " + std::to_string((r + 1) * (r + 1)) + " products" : bad});
  }
  {
    auto power = ring.basis(0);
    for (int i = 0; i <= r; ++i) power = ring.multiply(power, ring.basis(1));
    auto expect = ring.zero();
    expect[0] = q;
    checks.push_back({tag + "T^{*" + std::to_string(r + 1) + "} = q T0", power == expect, ring.str(power)});
  }
  {
    // T^a q^b -> q^b T_a
    std::string bad;
    for (int i = 0; i <= r && bad.empty(); ++i) {
      for (int j = 0; j <= r && bad.empty(); ++j) {
        GradedPoly nf = pres.normal_form(pres.variable(0).pow(static_cast<unsigned>(i + j)));
        auto image = ring.zero();
        for (const auto& [exps, v] : nf.terms()) {
          if (exps[0] > r) {
            bad = "normal form " + nf.str() + " is not reduced";
            break;
          }
          image[static_cast<std::size_t>(exps[0])] += GradedPoly::monomial(qv, MultiIndex{exps[1]}, v);
        }
        if (bad.empty() && image != ring.product(i, j))
          bad = "T^" + std::to_string(i + j) + " -> " + nf.str() + " but T" + std::to_string(i) + "*T" +
                std::to_string(j) + " = " + ring.str(ring.product(i, j));
      }
    }
    checks.push_back({tag + "presentation matches small ring", bad.empty(), bad.empty() ? "normal forms of T^i T^j" : bad});
  }
  {
    GradedPoly nf = pres.normal_form(pres.variable(0).pow(static_cast<unsigned>(r + 2)));
    GradedPoly expect = pres.variable(0) * pres.variable(1);
    checks.push_back({tag + "normal_form(T^" + std::to_string(r + 2) + ") = q T", nf == expect, nf.str()});
  }
  {
    std::string bad;
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j) {
        auto cl = ring.classical(ring.product(i, j));
        auto cup = cup_product(*model, i, j);
        for (int f = 0; f <= r; ++f)
          if (cl[static_cast<std::size_t>(f)] != GradedPoly::constant(qv, cup[static_cast<std::size_t>(f)]) && bad.empty())
            bad = "T" + std::to_string(i) + "*T" + std::to_string(j) + " at q=0";
      }
    checks.push_back({tag + "q=0 gives cup product", bad.empty(), bad});
  }
  checks.push_back({tag + "quotient rank", pres.quotient_rank() == static_cast<std::size_t>(r + 1),
                    std::to_string(pres.quotient_rank())});
  return checks;
}

std::shared_ptr<const VariableSet> grassmannian_variables(int p, int n) {
  if (p < 1 || p >= n) throw std::invalid_argument("grassmannian: need 1 <= p < n");
  const int k = n - p;
  auto vars = std::make_shared<VariableSet>();
  for (int i = 1; i <= k; ++i) {
    vars->names.push_back("s" + std::to_string(i));
    vars->degrees.push_back(i);
  }
  vars->names.push_back("q");
  vars->degrees.push_back(n);
  return vars;
}

namespace {

GradedPoly sigma(const std::shared_ptr<const VariableSet>& vars, int k, int i) {
  if (i == 0) return GradedPoly::constant(vars, Int(1));
  if (i < 0 || i > k) return GradedPoly(vars);
  return GradedPoly::variable(vars, static_cast<std::size_t>(i - 1));
}

/// Laplace expansion along the first remaining row.
GradedPoly det_minor(const std::shared_ptr<const VariableSet>& vars, int k, int row, int r, std::vector<int>& cols) {
  if (row > r) return GradedPoly::constant(vars, Int(1));
  GradedPoly out(vars);
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const int col = cols[c];
    GradedPoly entry = sigma(vars, k, 1 + col - row);
    if (!entry.is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(c));
      GradedPoly minor = det_minor(vars, k, row + 1, r, cols);
      cols.insert(cols.begin() + static_cast<long>(c), col);
      out += entry * minor * Int(sign);
    }
    sign = -sign;
  }
  return out;
}

}  // namespace

GradedPoly s_r_determinant(int p, int n, int r) {
  auto vars = grassmannian_variables(p, n);
  if (r < 0) throw std::invalid_argument("s_r_determinant: r must be >= 0");
  std::vector<int> cols;
  for (int j = 1; j <= r; ++j) cols.push_back(j);
  return det_minor(vars, n - p, 1, r, cols);
}

PresentationIdeal grassmannian_presentation(int p, int n) {
  auto vars = grassmannian_variables(p, n);
  const int k = n - p;
  if (p * k > 6) throw std::invalid_argument("grassmannian_presentation: dimension p(n-p) above 6 is not supported");
  std::vector<GradedPoly> rels;
  for (int r = p + 1; r < n; ++r) rels.push_back(s_r_determinant(p, n, r));
  GradedPoly q = GradedPoly::variable(vars, static_cast<std::size_t>(k));
  rels.push_back(s_r_determinant(p, n, n) + q * Int(k % 2 == 0 ? 1 : -1));
  PresentationIdeal ideal(vars, std::move(rels), {static_cast<std::size_t>(k)}, std::max<long>(2L * p * k + 2, n + 1));
  const Int expected = binomial_z(n, p);
  if (Int(static_cast<unsigned long>(ideal.quotient_rank())) != expected)
    throw InconsistencyError("grassmannian_presentation: quotient rank " + std::to_string(ideal.quotient_rank()) +
                             " differs from C(" + std::to_string(n) + "," + std::to_string(p) + ")");
  return ideal;
}

std::vector<Check> verify_grassmannian(int p, int n) {
  std::vector<Check> checks;
  const std::string tag = "Gr(" + std::to_string(p) + "," + std::to_string(n) + ") ";
  const int k = n - p;
  const PresentationIdeal ideal = grassmannian_presentation(p, n);
  const PresentationIdeal classical = ideal.classical();
  const Int expected = binomial_z(n, p);
  checks.push_back({tag + "quotient rank", true, std::to_string(ideal.quotient_rank()) + " = C(n,p)"});
  checks.push_back({tag + "classical quotient rank",
                    Int(static_cast<unsigned long>(classical.quotient_rank())) == expected,
                    std::to_string(classical.quotient_rank())});
  for (int i = p + 1; i <= n; ++i) {
    GradedPoly s = s_r_determinant(p, n, i);
    GradedPoly nf = classical.normal_form(s);
    checks.push_back({tag + "S" + std::to_string(i) + " = 0 at q=0", nf.is_zero(), nf.str()});
  }
  {
    const auto& vars = ideal.vars_ptr();
    GradedPoly sum(vars);
    for (int i = 0; i <= k; ++i)
      sum += sigma(vars, k, i) * s_r_determinant(p, n, n - i) * Int(i % 2 == 0 ? 1 : -1);
    checks.push_back({tag + "formal identity sum (-1)^i s_i S_{n-i} = 0", sum.is_zero(), sum.str()});
  }
  {
    GradedPoly prod = ideal.multiply(ideal.variable(static_cast<std::size_t>(k - 1)), s_r_determinant(p, n, p));
    GradedPoly q = ideal.variable("q");
    checks.push_back({tag + "s" + std::to_string(k) + " * s_(1^" + std::to_string(p) + ") = q", prod == q, prod.str()});
  }
  return checks;
}

// ---------------------------------------------------------------------------
// n-point numbers

Rational fixed_points_number(const GWTable& table, const EffectiveClass& beta, const std::vector<int>& classes,
                             int split) {
  const FanoModel& model = table.model();
  const int n = static_cast<int>(classes.size());
  if (n < 3) throw std::invalid_argument("fixed_points_number: needs at least 3 classes");
  if (n == 3) return Rational(gw_invariant(model, table, beta, classes));
  if (split <= 1 || split >= n - 1) throw std::invalid_argument("fixed_points_number: split must satisfy 1 < k < n-1");

  std::vector<EffectiveClass> subs;
  EffectiveClass cur(beta.arity());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == beta.arity()) {
      subs.push_back(cur);
      return;
    }
    for (int v = 0; v <= beta[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  const auto mid = classes.begin() + split;
  Rational total = 0;
  for (const auto& beta1 : subs) {
    const EffectiveClass beta2 = beta - beta1;
    for (int e = 0; e <= model.m(); ++e) {
      std::vector<int> left(classes.begin(), mid);
      left.push_back(e);
      const Rational lv = fixed_points_number(table, beta1, left, 2);
      if (lv == 0) continue;
      for (int f = 0; f <= model.m(); ++f) {
        const Rational& gef = model.inverse_pairing(e, f);
        if (gef == 0) continue;
        std::vector<int> right{f};
        right.insert(right.end(), mid, classes.end());
        total += lv * gef * fixed_points_number(table, beta2, right, 2);
      }
    }
  }
  return total;
}

}  // namespace qcoh
