#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace exsym {

struct Monomial {
  double coeff = 0.0;
  /// One exponent per variable.
  std::vector<int> exponents;
};

/// Real polynomial in a fixed number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::size_t vars, std::vector<Monomial> terms);

  static Polynomial constant(std::size_t vars, double c);
  static Polynomial variable(std::size_t vars, std::size_t i);

  std::size_t vars() const noexcept { return vars_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }

  double operator()(const Eigen::VectorXd& x) const;
  Polynomial derivative(std::size_t var) const;

  /// e.g. "2*x0^2*x1 - 1"
  std::string to_string() const;

 private:
  std::size_t vars_ = 0;
  std::vector<Monomial> terms_;
};

/// A polynomial map R^n -> R^m with cached partial derivatives up to order 3.
class PolynomialMap {
 public:
  PolynomialMap() = default;
  explicit PolynomialMap(std::vector<Polynomial> components);

  std::size_t domain_dim() const noexcept { return n_; }
  std::size_t target_dim() const noexcept { return f_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return f_; }

  Eigen::VectorXd value(const Eigen::VectorXd& x) const;
  /// d f / dx_i
  Eigen::VectorXd d1(const Eigen::VectorXd& x, std::size_t i) const;
  Eigen::VectorXd d2(const Eigen::VectorXd& x, std::size_t i, std::size_t j) const;
  Eigen::VectorXd d3(const Eigen::VectorXd& x, std::size_t i, std::size_t j, std::size_t k) const;

 private:
  static Eigen::VectorXd eval(const std::vector<Polynomial>& p, const Eigen::VectorXd& x);

  std::size_t n_ = 0;
  std::vector<Polynomial> f_;
  std::vector<std::vector<Polynomial>> d1_;
  std::vector<std::vector<Polynomial>> d2_;
  std::vector<std::vector<Polynomial>> d3_;
};

}  // namespace exsym
