#include "polytopal/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "polytopal/errors.hpp"

namespace polytopal {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, Int(0));
    p.coeffs_[k] = c;
  }
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<Int> c(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
  if (c == 0) return IntPolynomial();
  std::vector<Int> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Int c = coeffs_[i];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (i == 0) {
      out << polytopal::to_string(a);
    } else {
      if (a != 1) out << polytopal::to_string(a) << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial binomial_power(long c, unsigned long k) {
  // Pascal-style expansion of (x + c)^k.
  std::vector<Int> coeffs{Int(1)};
  for (unsigned long step = 0; step < k; ++step) {
    std::vector<Int> next(coeffs.size() + 1, Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += coeffs[i] * c;
    }
    coeffs = std::move(next);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial truncate(const IntPolynomial& q, long r) {
  if (r < -1) throw PreconditionError("truncate: r must be >= -1");
  if (r < 0) return IntPolynomial();
  std::vector<Int> c(q.coeffs().begin(),
                     q.coeffs().begin() +
                         std::min<std::size_t>(q.coeffs().size(), static_cast<std::size_t>(r) + 1));
  return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic_power(long p, unsigned long r) {
  require_prime(p, "cyclotomic_power");
  IntPolynomial base(std::vector<Int>(static_cast<std::size_t>(p), Int(1)));
  IntPolynomial result = IntPolynomial::constant(1);
  for (unsigned long i = 0; i < r; ++i) result = result * base;
  return result;
}

bool is_symmetric(const IntPolynomial& q, int n) {
  if (n < q.degree()) throw PreconditionError("is_symmetric: bound below degree");
  for (int i = 0; 2 * i <= n; ++i)
    if (q.coeff(i) != q.coeff(n - i)) return false;
  return true;
}

bool is_unimodal(const IntPolynomial& q, int n) {
  if (n < q.degree()) throw PreconditionError("is_unimodal: bound below degree");
  bool descending = false;
  for (int i = 0; i < n; ++i) {
    Int cur = q.coeff(i), nxt = q.coeff(i + 1);
    if (nxt < cur) descending = true;
    if (nxt > cur && descending) return false;
  }
  return true;
}

bool divisible_by(const IntPolynomial& q, const Int& m) {
  if (m < 1) throw PreconditionError("divisible_by: modulus must be positive");
  for (const Int& c : q.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) return false;
  return true;
}

}  // namespace polytopal
