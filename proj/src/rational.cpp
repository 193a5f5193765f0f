#include "degfusion/rational.hpp"

#include <stdexcept>

namespace degfusion {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

HalfInt parse_half_int(std::string_view text) {
  Rational r = parse_rational(text);
  Rational twice = r * 2;
  if (!is_integer(twice)) throw std::invalid_argument("not a half-integer: " + std::string(text));
  if (!twice.get_num().fits_sint_p()) throw std::invalid_argument("half-integer out of range");
  return HalfInt{static_cast<int>(twice.get_num().get_si())};
}

std::string to_string(HalfInt h) { return to_string(h.value()); }

}  // namespace degfusion
