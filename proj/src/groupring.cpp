#include "polytopal/groupring.hpp"

#include <cassert>
#include <sstream>

#include "polytopal/errors.hpp"

namespace polytopal {

GroupRingElement::GroupRingElement(long p, std::vector<Rational> coords)
    : p_(p), coords_(std::move(coords)) {
  require_prime(p, "GroupRingElement");
  if (coords_.size() != static_cast<std::size_t>(p))
    throw PreconditionError("GroupRingElement: coordinate list must have length p");
}

GroupRingElement GroupRingElement::zero(long p) {
  return GroupRingElement(p, std::vector<Rational>(p, Rational(0)));
}

GroupRingElement GroupRingElement::one(long p) { return generator_power(p, 0); }

GroupRingElement GroupRingElement::generator_power(long p, long k) {
  std::vector<Rational> c(p, Rational(0));
  long idx = ((k % p) + p) % p;
  c[idx] = 1;
  return GroupRingElement(p, std::move(c));
}

GroupRingElement GroupRingElement::scalar(long p, const Rational& c) {
  std::vector<Rational> v(p, Rational(0));
  v[0] = c;
  return GroupRingElement(p, std::move(v));
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  assert(p_ == rhs.p_);
  std::vector<Rational> c(p_);
  for (long i = 0; i < p_; ++i) c[i] = coords_[i] + rhs.coords_[i];
  return GroupRingElement(p_, std::move(c));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  assert(p_ == rhs.p_);
  std::vector<Rational> c(p_);
  for (long i = 0; i < p_; ++i) c[i] = coords_[i] - rhs.coords_[i];
  return GroupRingElement(p_, std::move(c));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  assert(p_ == rhs.p_);
  // Cyclic convolution: g^i * g^j = g^((i+j) mod p).
  std::vector<Rational> c(p_, Rational(0));
  for (long i = 0; i < p_; ++i) {
    if (coords_[i] == 0) continue;
    for (long j = 0; j < p_; ++j) {
      if (rhs.coords_[j] == 0) continue;
      c[(i + j) % p_] += coords_[i] * rhs.coords_[j];
    }
  }
  return GroupRingElement(p_, std::move(c));
}

GroupRingElement GroupRingElement::operator*(const Rational& c) const {
  std::vector<Rational> v(p_);
  for (long i = 0; i < p_; ++i) v[i] = coords_[i] * c;
  return GroupRingElement(p_, std::move(v));
}

std::string GroupRingElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (long i = 0; i < p_; ++i) {
    if (i) out << ", ";
    out << polytopal::to_string(coords_[i]);
  }
  out << ")";
  return out.str();
}

GroupRingElement groupring_mu(long p) {
  require_prime(p, "groupring_mu");
  return GroupRingElement(p, std::vector<Rational>(p, Rational(1, p)));
}

GroupRingPoly::GroupRingPoly(long p, std::vector<GroupRingElement> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  trim();
}

GroupRingPoly GroupRingPoly::constant(GroupRingElement c) {
  long p = c.p();
  return GroupRingPoly(p, {std::move(c)});
}

GroupRingElement GroupRingPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : GroupRingElement::zero(p_);
}

void GroupRingPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GroupRingPoly GroupRingPoly::operator+(const GroupRingPoly& rhs) const {
  assert(p_ == rhs.p_);
  std::size_t sz = std::max(coeffs_.size(), rhs.coeffs_.size());
  std::vector<GroupRingElement> c(sz, GroupRingElement::zero(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] = c[i] + rhs.coeffs_[i];
  return GroupRingPoly(p_, std::move(c));
}

GroupRingPoly GroupRingPoly::operator*(const GroupRingPoly& rhs) const {
  assert(p_ == rhs.p_);
  if (coeffs_.empty() || rhs.coeffs_.empty()) return GroupRingPoly(p_);
  std::vector<GroupRingElement> c(coeffs_.size() + rhs.coeffs_.size() - 1,
                                  GroupRingElement::zero(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * rhs.coeffs_[j];
  return GroupRingPoly(p_, std::move(c));
}

GroupRingPoly GroupRingPoly::scaled(const GroupRingElement& c) const {
  std::vector<GroupRingElement> r(coeffs_.size(), GroupRingElement::zero(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = c * coeffs_[i];
  return GroupRingPoly(p_, std::move(r));
}

GroupRingSeries::GroupRingSeries(long p, std::size_t truncation_order)
    : p_(p), trunc_(truncation_order),
      coeffs_(truncation_order + 1, GroupRingElement::zero(p)) {}

GroupRingSeries GroupRingSeries::from_poly(const GroupRingPoly& poly,
                                           std::size_t truncation_order) {
  GroupRingSeries s(poly.p(), truncation_order);
  for (std::size_t j = 0; j <= truncation_order && j < poly.coeffs().size(); ++j)
    s.coeffs_[j] = poly.coeffs()[j];
  return s;
}

GroupRingSeries GroupRingSeries::from_int_poly_t2(const IntPolynomial& q, long p,
                                                  std::size_t truncation_order) {
  GroupRingSeries s(p, truncation_order);
  for (std::size_t j = 0; j < q.coeffs().size() && 2 * j <= truncation_order; ++j)
    s.coeffs_[2 * j] = GroupRingElement::scalar(p, Rational(q.coeffs()[j]));
  return s;
}

GroupRingSeries GroupRingSeries::operator+(const GroupRingSeries& rhs) const {
  assert(p_ == rhs.p_ && trunc_ == rhs.trunc_);
  GroupRingSeries s(p_, trunc_);
  for (std::size_t j = 0; j <= trunc_; ++j) s.coeffs_[j] = coeffs_[j] + rhs.coeffs_[j];
  return s;
}

GroupRingSeries GroupRingSeries::operator-(const GroupRingSeries& rhs) const {
  assert(p_ == rhs.p_ && trunc_ == rhs.trunc_);
  GroupRingSeries s(p_, trunc_);
  for (std::size_t j = 0; j <= trunc_; ++j) s.coeffs_[j] = coeffs_[j] - rhs.coeffs_[j];
  return s;
}

GroupRingSeries GroupRingSeries::operator*(const GroupRingSeries& rhs) const {
  assert(p_ == rhs.p_ && trunc_ == rhs.trunc_);
  GroupRingSeries s(p_, trunc_);
  for (std::size_t i = 0; i <= trunc_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= trunc_; ++j)
      s.coeffs_[i + j] = s.coeffs_[i + j] + coeffs_[i] * rhs.coeffs_[j];
  }
  return s;
}

GroupRingSeries GroupRingSeries::scaled(const GroupRingElement& c) const {
  GroupRingSeries s(p_, trunc_);
  for (std::size_t j = 0; j <= trunc_; ++j) s.coeffs_[j] = c * coeffs_[j];
  return s;
}

GroupRingSeries GroupRingSeries::inverse() const {
  if (!(coeffs_[0] == GroupRingElement::one(p_)))
    throw PreconditionError("GroupRingSeries::inverse: constant term must be 1");
  GroupRingSeries inv(p_, trunc_);
  inv.coeffs_[0] = GroupRingElement::one(p_);
  for (std::size_t k = 1; k <= trunc_; ++k) {
    GroupRingElement s = GroupRingElement::zero(p_);
    for (std::size_t i = 1; i <= k; ++i) s = s + coeffs_[i] * inv.coeffs_[k - i];
    inv.coeffs_[k] = GroupRingElement::zero(p_) - s;
  }
  return inv;
}

namespace {

// prod_{k=1..p-1} (1 - g^k x)^r in Z[G][x].
GroupRingPoly character_product_poly(long p, long r) {
  GroupRingPoly prod = GroupRingPoly::constant(GroupRingElement::one(p));
  for (long k = 1; k < p; ++k) {
    GroupRingPoly factor(p, {GroupRingElement::one(p),
                             GroupRingElement::zero(p) - GroupRingElement::generator_power(p, k)});
    for (long i = 0; i < r; ++i) prod = prod * factor;
  }
  return prod;
}

// Scalar polynomial lifted into Z[G][x].
GroupRingPoly lift_int_poly(const IntPolynomial& q, long p) {
  std::vector<GroupRingElement> c;
  c.reserve(q.coeffs().size());
  for (const Int& a : q.coeffs()) c.push_back(GroupRingElement::scalar(p, Rational(a)));
  return GroupRingPoly(p, std::move(c));
}

}  // namespace

IdentityPairData lemma45_data(long p, long r) {
  require_prime(p, "lemma45_check");
  if (r < 1) throw PreconditionError("lemma45_check: r must be >= 1");
  const unsigned long n = static_cast<unsigned long>(r) * (p - 1);
  GroupRingElement mu = groupring_mu(p);
  GroupRingElement one_minus_mu = GroupRingElement::one(p) - mu;

  IntPolynomial one_minus_x_pow = IntPolynomial::constant(1);
  for (unsigned long i = 0; i < n; ++i) one_minus_x_pow = one_minus_x_pow * IntPolynomial{1, -1};

  GroupRingPoly prod = character_product_poly(p, r);
  return IdentityPairData{
      prod.scaled(mu), lift_int_poly(one_minus_x_pow, p).scaled(mu),
      prod.scaled(one_minus_mu),
      lift_int_poly(cyclotomic_power(p, static_cast<unsigned long>(r)), p).scaled(one_minus_mu)};
}

std::pair<bool, bool> lemma45_check(long p, long r) {
  IdentityPairData data = lemma45_data(p, r);
  return {data.holds_i(), data.holds_ii()};
}

SeriesCheckData series_identity_data(const IntPolynomial& htilde, long p, long r,
                                     std::size_t truncation_order) {
  require_prime(p, "series_identity_check");
  if (r < 1) throw PreconditionError("series_identity_check: r must be >= 1");
  const std::size_t n = static_cast<std::size_t>(r) * (p - 1);
  const std::size_t T = truncation_order;
  if (T < 2 * n) throw PreconditionError("truncation too small");

  GroupRingElement mu = groupring_mu(p);
  GroupRingElement one = GroupRingElement::one(p);

  // ip(t) = sum_j htilde_j t^(2j).
  GroupRingSeries ip = GroupRingSeries::from_int_poly_t2(htilde, p, T);

  // (1 - t^2)^(-n) = sum_j binom(n+j-1, j) t^(2j).
  GroupRingSeries inv_poincare(p, T);
  {
    Int binom = 1;
    for (std::size_t j = 0; 2 * j <= T; ++j) {
      if (j > 0) {
        binom *= Int(static_cast<unsigned long>(n + j - 1));
        binom /= Int(static_cast<unsigned long>(j));
      }
      inv_poincare.coeff(2 * j) = GroupRingElement::scalar(p, Rational(binom));
    }
  }

  // Equivariant series mu (1-t^2)^(-n) ip(t) + (1 - mu).
  GroupRingSeries equivariant = (inv_poincare * ip).scaled(mu);
  equivariant.coeff(0) = equivariant.coeff(0) + (one - mu);

  // prod_{1 != chi} (1 - chi t^2)^r as a polynomial in t, and its inverse
  // series (the classifying-space series).
  GroupRingPoly char_prod_x = character_product_poly(p, r);
  GroupRingPoly char_prod_t(p);
  {
    std::vector<GroupRingElement> c(2 * char_prod_x.coeffs().size() - 1,
                                    GroupRingElement::zero(p));
    for (std::size_t i = 0; i < char_prod_x.coeffs().size(); ++i)
      c[2 * i] = char_prod_x.coeffs()[i];
    char_prod_t = GroupRingPoly(p, std::move(c));
  }
  GroupRingSeries char_prod_series = GroupRingSeries::from_poly(char_prod_t, T);
  GroupRingSeries classifying = char_prod_series.inverse();

  // Refined series of the fixed-point data.
  GroupRingSeries refined = equivariant * char_prod_series;

  // Closed form: cyc(t) + mu (ip(t) - cyc(t)) with cyc the cyclotomic power
  // in t^2.
  GroupRingSeries cyc = GroupRingSeries::from_int_poly_t2(
      cyclotomic_power(p, static_cast<unsigned long>(r)), p, T);
  GroupRingSeries closed = cyc + (ip - cyc).scaled(mu);

  SeriesCheckData data{equivariant, classifying, refined, closed, true, refined == closed};
  for (std::size_t j = 2 * n + 1; j <= T; ++j)
    if (!data.refined.coeff(j).is_zero()) data.vanishes_above_2n = false;
  return data;
}

bool series_identity_check(const IntPolynomial& htilde, long p, long r,
                           std::size_t truncation_order) {
  SeriesCheckData data = series_identity_data(htilde, p, r, truncation_order);
  return data.vanishes_above_2n && data.matches_closed_form;
}

}  // namespace polytopal
