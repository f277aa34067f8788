#include "micz/rational.hpp"

#include <stdexcept>

namespace micz {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      throw std::invalid_argument("bad rational string: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational string: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool rational_sqrt(const Rat& q, Rat& root) {
  if (q < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

bool is_half_integer(const Rat& q) {
  Rat two_q = q * 2;
  return two_q.get_den() == 1;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

long to_long(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("not an integer: " + rat_str(q));
  if (!q.get_num().fits_slong_p())
    throw std::overflow_error("rational too large for long");
  return q.get_num().get_si();
}

} // namespace micz
