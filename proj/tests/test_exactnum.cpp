#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "micz/jet.hpp"
#include "micz/rational.hpp"
#include "micz/scalar.hpp"

using namespace micz;

TEST_CASE("rational helpers") {
  CHECK(rat(4, 4) == Rat(1));
  CHECK(rat(-6, 4) == Rat(-3) / 2);
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-7/2") == rat(-7, 2));
  CHECK(parse_rat("5") == Rat(5));
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);

  Rat root;
  CHECK(rational_sqrt(rat(9, 4), root));
  CHECK(root == rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2), root));

  CHECK(is_half_integer(rat(-3, 2)));
  CHECK_FALSE(is_half_integer(rat(1, 3)));
  CHECK(is_integer(Rat(7)));
  CHECK_FALSE(is_integer(rat(7, 2)));
  CHECK(rat_str(rat(-1, 2)) == "-1/2");
  CHECK(rat_str(Rat(3)) == "3");
}

TEST_CASE("scalar field arithmetic") {
  Scalar s5 = Scalar::sqrt_of(5);
  CHECK((Scalar(1) + s5) * (Scalar(1) - s5) == Scalar(-4));
  Scalar s2 = Scalar::sqrt_of(2);
  CHECK(s2 * s2 == Scalar(2));
  // 1 / (3 + 4i) = 3/25 - (4/25) i
  Scalar z = Scalar::complex(3, 4).inverse();
  CHECK(z == Scalar::complex(rat(3, 25), rat(-4, 25)));
  CHECK(Scalar::complex(3, 4) * z == Scalar(1));

  // perfect squares fold into the rational part
  CHECK(Scalar::sqrt_of(rat(9, 4)) == Scalar(rat(3, 2)));
  CHECK(Scalar::sqrt_of(rat(9, 4)).radicand() == 0);

  // a radical value and its conjugate
  Scalar x(1, 2, 3, rat(1, 2), 7);
  Scalar y(rat(-1, 3), 0, 1, -2, 7);
  CHECK((x + y) - y == x);
  CHECK(x * y == y * x);
  CHECK(x * (y + y) == x * y + x * y);
  CHECK(x / x == Scalar(1));
  CHECK(x * x.inverse() == Scalar(1));
  CHECK((x * y) / y == x);
  CHECK(x.conj().conj() == x);
  CHECK_THROWS(merge_radicand(Rat(7), Rat(3)));

  CHECK(Scalar(rat(1, 2)).str() == "1/2");
  CHECK(Scalar::i().str() == "1*i");
  CHECK(Scalar(0).str() == "0");
}

TEST_CASE("jet of the radius") {
  std::vector<Rat> base{3, 4, 0};
  Jet r = jet_of_radius(base, 1);
  CHECK(r.value() == Scalar(5));
  CHECK(r.coeff({1, 0, 0}) == Scalar(rat(3, 5)));
  CHECK(r.coeff({0, 1, 0}) == Scalar(rat(4, 5)));
  CHECK(r.coeff({0, 0, 1}) == Scalar(0));

  Jet r2 = jet_of_radius({1, 1, 0}, 0);
  CHECK(r2.value() == Scalar::sqrt_of(2));

  // square of the radius jet is the exact polynomial jet of sum x_i^2
  std::vector<Rat> b{1, 2, 2};
  Jet rr = jet_of_radius(b, 4);
  Jet poly(3, 4);
  for (int i = 0; i < 3; ++i) {
    Jet xi = Jet::coordinate(b, i, 4);
    poly += xi * xi;
  }
  CHECK(rr * rr == poly);

  CHECK_THROWS(jet_of_radius({0, 0, 0}, 1));
}

TEST_CASE("jet inverse") {
  Jet two = Jet::constant(2, 3, Scalar(2));
  CHECK(two.inverse() == Jet::constant(2, 3, Scalar(rat(1, 2))));

  // 1/(1+x) at 0 to order 2 is 1 - x + x^2
  Jet one_plus_x = Jet::constant(1, 2, Scalar(1)) +
                   Jet::coordinate({0}, 0, 2) -
                   Jet::constant(1, 2, Scalar(0));
  Jet inv = one_plus_x.inverse();
  CHECK(inv.coeff({0}) == Scalar(1));
  CHECK(inv.coeff({1}) == Scalar(-1));
  CHECK(inv.coeff({2}) == Scalar(1));

  Jet r = jet_of_radius({3, 4, 0}, 2);
  CHECK(r.inverse() * r == Jet::constant(3, 2, Scalar(1)));
  CHECK_THROWS(Jet(2, 2).inverse());
}

TEST_CASE("jet calculus") {
  std::vector<Rat> b{1, -2};
  Jet x = Jet::coordinate(b, 0, 3);
  Jet y = Jet::coordinate(b, 1, 3);
  Jet f = x * x * y + y;
  Jet g = x - y * y;
  // product rule, exactly (truncation drops one order per derivative)
  for (int v = 0; v < 2; ++v)
    CHECK((f * g).deriv(v) ==
          f.deriv(v) * g.truncated(2) + f.truncated(2) * g.deriv(v));
  CHECK(f.deriv(0).value() == Scalar(2 * 1 * -2));
  CHECK(f.deriv(1).value() == Scalar(1 * 1 + 1));
  // mixed partials commute
  CHECK(f.deriv(0).deriv(1) == f.deriv(1).deriv(0));
}
