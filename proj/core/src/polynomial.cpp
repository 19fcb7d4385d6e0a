#include "exsym/polynomial.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "exsym/error.hpp"

namespace exsym {

Polynomial::Polynomial(std::size_t vars, std::vector<Monomial> terms) : vars_(vars) {
  // Merge equal exponent vectors and drop zero coefficients.
  std::map<std::vector<int>, double> merged;
  for (auto& t : terms) {
    require_dim(t.exponents.size(), vars, "Monomial exponents");
    for (int e : t.exponents)
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "Monomial: negative exponent");
    merged[t.exponents] += t.coeff;
  }
  for (auto& [e, c] : merged)
    if (c != 0.0) terms_.push_back(Monomial{c, e});
}

Polynomial Polynomial::constant(std::size_t vars, double c) {
  return Polynomial(vars, {Monomial{c, std::vector<int>(vars, 0)}});
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t i) {
  std::vector<int> e(vars, 0);
  e.at(i) = 1;
  return Polynomial(vars, {Monomial{1.0, e}});
}

double Polynomial::operator()(const Eigen::VectorXd& x) const {
  require_dim(static_cast<std::size_t>(x.size()), vars_, "Polynomial argument");
  double s = 0.0;
  for (const auto& t : terms_) {
    double m = t.coeff;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (int k = 0; k < t.exponents[i]; ++k) m *= x[static_cast<Eigen::Index>(i)];
    }
    s += m;
  }
  return s;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    const int e = t.exponents.at(var);
    if (e == 0) continue;
    Monomial m{t.coeff * e, t.exponents};
    m.exponents[var] = e - 1;
    out.push_back(std::move(m));
  }
  return Polynomial(vars_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    double c = t.coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = std::abs(c);
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (t.exponents[i] == 0) continue;
      if (any_var) vars << "*";
      vars << "x" << i;
      if (t.exponents[i] > 1) vars << "^" << t.exponents[i];
      any_var = true;
    }
    if (!any_var) {
      os << c;
    } else if (c == 1.0) {
      os << vars.str();
    } else if (c == -1.0) {
      os << "-" << vars.str();
    } else {
      os << c << "*" << vars.str();
    }
  }
  return os.str();
}

PolynomialMap::PolynomialMap(std::vector<Polynomial> components) : f_(std::move(components)) {
  n_ = f_.empty() ? 0 : f_.front().vars();
  for (const auto& p : f_)
    if (p.vars() != n_) throw Error(ErrorKind::DimensionMismatch, "PolynomialMap: components differ in variable count");
  d1_.resize(n_);
  d2_.resize(n_ * n_);
  d3_.resize(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& p : f_) d1_[i].push_back(p.derivative(i));
    for (std::size_t j = 0; j < n_; ++j) {
      for (const auto& p : d1_[i]) d2_[i * n_ + j].push_back(p.derivative(j));
      for (std::size_t k = 0; k < n_; ++k)
        for (const auto& p : d2_[i * n_ + j]) d3_[(i * n_ + j) * n_ + k].push_back(p.derivative(k));
    }
  }
}

Eigen::VectorXd PolynomialMap::eval(const std::vector<Polynomial>& p, const Eigen::VectorXd& x) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<Eigen::Index>(i)] = p[i](x);
  return v;
}

Eigen::VectorXd PolynomialMap::value(const Eigen::VectorXd& x) const { return eval(f_, x); }

Eigen::VectorXd PolynomialMap::d1(const Eigen::VectorXd& x, std::size_t i) const { return eval(d1_.at(i), x); }

Eigen::VectorXd PolynomialMap::d2(const Eigen::VectorXd& x, std::size_t i, std::size_t j) const {
  return eval(d2_.at(i * n_ + j), x);
}

Eigen::VectorXd PolynomialMap::d3(const Eigen::VectorXd& x, std::size_t i, std::size_t j, std::size_t k) const {
  return eval(d3_.at((i * n_ + j) * n_ + k), x);
}

}  // namespace exsym
