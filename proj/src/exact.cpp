#include "qsp/exact.hpp"

#include <cctype>

namespace qsp {

ExactScalar::ExactScalar(long num, long den) : v_(num, den) {
  if (den == 0) throw input_error("ExactScalar: zero denominator");
  v_.canonicalize();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw pole_error("ExactScalar: division by zero");
  v_ /= o.v_;
  return *this;
}

ExactScalar ExactScalar::inv() const {
  if (is_zero()) throw pole_error("ExactScalar: inverse of zero");
  return ExactScalar(mpq_class(1) / v_);
}

ExactScalar ExactScalar::parse(std::string_view text) {
  // "<sign>digits" or "<sign>digits/digits", nothing else
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto bad = [&]() -> input_error {
    return input_error("scalar_parse: malformed rational '" + std::string(text) + "'");
  };
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t dig0 = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == dig0) throw bad();
  bool has_den = false;
  if (i < n && text[i] == '/') {
    has_den = true;
    ++i;
    std::size_t dig1 = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == dig1) throw bad();
  }
  if (i != n) throw bad();
  std::string norm(text);
  if (!norm.empty() && norm.front() == '+') norm.erase(norm.begin());
  mpq_class v;
  if (v.set_str(norm, 10) != 0) throw bad();
  if (has_den && sgn(v.get_den()) == 0) throw input_error("scalar_parse: zero denominator");
  if (sgn(v.get_den()) == 0) throw input_error("scalar_parse: zero denominator");
  v.canonicalize();
  return ExactScalar(std::move(v));
}

std::string ExactScalar::str() const { return v_.get_str(); }

ExactScalar det_exact(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw input_error("det_exact: non-square matrix (" + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ")");
  const std::size_t n = m.rows();
  if (n == 0) return ExactScalar(1);

  // Clear denominators row by row, then run integer Bareiss.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class denscale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class d = m.at(i, j).raw().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m.at(i, j).raw();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    denscale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return ExactScalar(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpq_class det(sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]), denscale);
  det.canonicalize();
  return ExactScalar(std::move(det));
}

}  // namespace qsp
