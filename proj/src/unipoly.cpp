#include "qsp/unipoly.hpp"

namespace qsp {

namespace {
const ExactScalar kZero(0);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::variable() {
  return Poly(std::vector<ExactScalar>{ExactScalar(0), ExactScalar(1)});
}

const ExactScalar& Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const ExactScalar& Poly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

ExactScalar Poly::eval(const ExactScalar& p) const {
  ExactScalar acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * p + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<ExactScalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * ExactScalar(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inv());
}

Poly Poly::operator-() const {
  std::vector<ExactScalar> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<ExactScalar> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<ExactScalar> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<ExactScalar> d(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

Poly Poly::scaled(const ExactScalar& k) const {
  if (k.is_zero()) return Poly();
  std::vector<ExactScalar> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * k;
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw input_error("Poly::divrem: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<ExactScalar> rem = a.c_;
  std::vector<ExactScalar> quo(a.degree() - b.degree() + 1, ExactScalar(0));
  const ExactScalar lead_inv = b.leading().inv();
  for (int i = a.degree(); i >= b.degree(); --i) {
    ExactScalar k = rem[i] * lead_inv;
    if (k.is_zero()) continue;
    quo[i - b.degree()] = k;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= k * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  // Euclid with monic normalization each step to keep coefficients small.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = Poly::divrem(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_interpolate(const std::vector<std::pair<ExactScalar, ExactScalar>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw input_error("poly_interpolate: repeated abscissa " + points[i].first.str());
  if (n == 0) return Poly();

  // Newton divided differences.
  std::vector<ExactScalar> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);

  Poly result(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    Poly lin(std::vector<ExactScalar>{-points[i].first, ExactScalar(1)});
    result = result * lin + Poly(coef[i]);
  }
  return result;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw input_error("RatFun: zero denominator polynomial");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(ExactScalar(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divrem(num_, g).first;
    den_ = Poly::divrem(den_, g).first;
  }
  const ExactScalar lead_inv = den_.leading().inv();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw pole_error("RatFun: division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

ExactScalar ratfun_eval(const RatFun& f, const ExactScalar& p) {
  ExactScalar d = f.den().eval(p);
  if (d.is_zero()) throw pole_error("ratfun_eval: pole at " + p.str());
  return f.num().eval(p) / d;
}

ExactScalar ratfun_limit(const RatFun& f, const ExactScalar& p) {
  ExactScalar d = f.den().eval(p);
  if (d.is_zero()) throw pole_error("ratfun_limit: genuine pole at " + p.str());
  return f.num().eval(p) / d;
}

ExactScalar ratfun_residue(const RatFun& f, const ExactScalar& p) {
  ExactScalar d = f.den().eval(p);
  if (!d.is_zero()) return ExactScalar(0);
  ExactScalar dp = f.den().derivative().eval(p);
  if (dp.is_zero())
    throw pole_order_error("ratfun_residue: pole of order > 1 at " + p.str());
  return f.num().eval(p) / dp;
}

}  // namespace qsp
