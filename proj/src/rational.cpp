#include "polytopal/rational.hpp"

#include <cctype>

#include "polytopal/errors.hpp"

namespace polytopal {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
      throw ParseError("bad character in rational literal '" + text + "'");
  }
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + text + "'");
  } catch (const PreconditionError&) {
    throw ParseError("zero denominator in rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Int& x) { return x.get_str(); }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(long p, const char* context) {
  if (!is_prime(p))
    throw PreconditionError(std::string(context) + ": p = " + std::to_string(p) +
                            " is not prime");
}

}  // namespace polytopal
