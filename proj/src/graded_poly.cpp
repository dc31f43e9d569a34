#include "qcoh/graded_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qcoh {

std::optional<std::size_t> VariableSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

GradedPoly GradedPoly::constant(std::shared_ptr<const VariableSet> vars, const Int& c) {
  MultiIndex zero(vars->size());
  return monomial(std::move(vars), std::move(zero), c);
}

GradedPoly GradedPoly::variable(std::shared_ptr<const VariableSet> vars, std::size_t i) {
  MultiIndex e = MultiIndex::unit(vars->size(), i);
  return monomial(std::move(vars), std::move(e), Int(1));
}

GradedPoly GradedPoly::monomial(std::shared_ptr<const VariableSet> vars, MultiIndex exps, const Int& c) {
  GradedPoly p(std::move(vars));
  p.add(exps, c);
  return p;
}

Int GradedPoly::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void GradedPoly::add(const MultiIndex& m, const Int& c) {
  if (m.arity() != vars_->size()) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<long> GradedPoly::homogeneous_degree() const {
  std::optional<long> deg;
  for (const auto& [m, c] : terms_) {
    long d = monomial_degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

GradedPoly GradedPoly::specialize_zero(const std::vector<std::size_t>& which) const {
  GradedPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    for (auto i : which) vanishes = vanishes || m[i] != 0;
    if (!vanishes) out.add(m, c);
  }
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (!vars_) vars_ = o.vars_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (!vars_) vars_ = o.vars_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Int& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out(a.vars_ ? a.vars_ : b.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma + mb, ca * cb);
  return out;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly out = constant(vars_, Int(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << vars_->names[i];
      if (m[i] > 1) mono << "^" << m[i];
    }
    if (!any) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace qcoh
