#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polytopal/intpoly.hpp"
#include "polytopal/rational.hpp"

namespace polytopal {

/// Element of the rational group algebra of the cyclic group of prime order
/// p. coords()[k] is the coefficient of g^k for a fixed generator g;
/// multiplication is cyclic convolution (exponents reduce mod p).
class GroupRingElement {
 public:
  GroupRingElement(long p, std::vector<Rational> coords);
  static GroupRingElement zero(long p);
  static GroupRingElement one(long p);
  static GroupRingElement generator_power(long p, long k);
  static GroupRingElement scalar(long p, const Rational& c);

  long p() const { return p_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  GroupRingElement operator*(const GroupRingElement& rhs) const;
  GroupRingElement operator*(const Rational& c) const;
  bool operator==(const GroupRingElement& rhs) const = default;

  std::string to_string() const;

 private:
  long p_;
  std::vector<Rational> coords_;  // length exactly p
};

/// The averaging idempotent (1/p) * sum of all group elements.
GroupRingElement groupring_mu(long p);

/// Polynomial with GroupRingElement coefficients; used for the exact
/// polynomial identities. No trailing zero coefficients are stored.
class GroupRingPoly {
 public:
  explicit GroupRingPoly(long p) : p_(p) {}
  GroupRingPoly(long p, std::vector<GroupRingElement> coeffs);
  static GroupRingPoly constant(GroupRingElement c);

  long p() const { return p_; }
  const std::vector<GroupRingElement>& coeffs() const { return coeffs_; }
  GroupRingElement coeff(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  GroupRingPoly operator+(const GroupRingPoly& rhs) const;
  GroupRingPoly operator*(const GroupRingPoly& rhs) const;
  GroupRingPoly scaled(const GroupRingElement& c) const;  // c * this
  bool operator==(const GroupRingPoly& rhs) const = default;

 private:
  void trim();
  long p_;
  std::vector<GroupRingElement> coeffs_;
};

/// Power series over the group algebra truncated at degree T: terms of
/// degree > T are discarded by every operation. Holds exactly T+1
/// coefficients.
class GroupRingSeries {
 public:
  GroupRingSeries(long p, std::size_t truncation_order);
  static GroupRingSeries from_poly(const GroupRingPoly& poly, std::size_t truncation_order);
  /// Scalar series sum_j c_j t^(2j) from an integer polynomial in x.
  static GroupRingSeries from_int_poly_t2(const IntPolynomial& q, long p,
                                          std::size_t truncation_order);

  long p() const { return p_; }
  std::size_t truncation_order() const { return trunc_; }
  const GroupRingElement& coeff(std::size_t j) const { return coeffs_[j]; }
  GroupRingElement& coeff(std::size_t j) { return coeffs_[j]; }

  GroupRingSeries operator+(const GroupRingSeries& rhs) const;
  GroupRingSeries operator-(const GroupRingSeries& rhs) const;
  GroupRingSeries operator*(const GroupRingSeries& rhs) const;
  GroupRingSeries scaled(const GroupRingElement& c) const;
  /// Multiplicative inverse; requires constant term 1.
  GroupRingSeries inverse() const;
  bool operator==(const GroupRingSeries& rhs) const = default;

 private:
  long p_;
  std::size_t trunc_;
  std::vector<GroupRingElement> coeffs_;
};

/// Both sides of the two group-ring polynomial identities behind the
/// eigenspace bookkeeping, evaluated exactly:
///   (i)  mu * prod_{k=1..p-1} (1 - g^k x)^r  ==  mu * (1-x)^n
///   (ii) (1-mu) * prod_{k=1..p-1} (1 - g^k x)^r  ==  (1-mu) * (1+x+...+x^(p-1))^r
/// with n = r(p-1).
struct IdentityPairData {
  GroupRingPoly lhs_i, rhs_i;
  GroupRingPoly lhs_ii, rhs_ii;
  bool holds_i() const { return lhs_i == rhs_i; }
  bool holds_ii() const { return lhs_ii == rhs_ii; }
};

IdentityPairData lemma45_data(long p, long r);

/// Verdict for identities (i) and (ii).
std::pair<bool, bool> lemma45_check(long p, long r);

/// Pieces of the truncated refined-series computation, exposed for report
/// printing.
struct SeriesCheckData {
  GroupRingSeries equivariant;    // mu (1-t^2)^(-n) IP(t) + (1 - mu), truncated
  GroupRingSeries classifying;    // prod_{k=1..p-1} (1 - g^k t^2)^(-r), truncated
  GroupRingSeries refined;        // equivariant * prod_{k=1..p-1} (1 - g^k t^2)^r
  GroupRingSeries closed_form;    // cyclotomic power in t^2 plus mu-correction
  bool vanishes_above_2n = false; // refined has no terms of degree > 2n
  bool matches_closed_form = false;
};

SeriesCheckData series_identity_data(const IntPolynomial& htilde, long p, long r,
                                     std::size_t truncation_order);

/// True iff the truncated refined series is a polynomial of degree <= 2n and
/// agrees with its closed form. Throws PreconditionError when
/// truncation_order < 2n.
bool series_identity_check(const IntPolynomial& htilde, long p, long r,
                           std::size_t truncation_order);

}  // namespace polytopal
