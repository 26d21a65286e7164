#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "para/ppoly.hpp"
#include "para/statistics.hpp"

using namespace para;

TEST_CASE("exchange_sign matches the commutation-relation sign table") {
  CHECK(exchange_sign(Statistics::ParaBose, true) == 1);
  CHECK(exchange_sign(Statistics::ParaFermi, true) == -1);
  CHECK(exchange_sign(Statistics::ParaBose, false) == -1);
  CHECK(exchange_sign(Statistics::ParaFermi, false) == 1);
}

TEST_CASE("exchange_sign is an involution and flips between the families") {
  for (bool same : {true, false}) {
    for (Statistics stat : {Statistics::ParaBose, Statistics::ParaFermi}) {
      int s = exchange_sign(stat, same);
      CHECK(s * s == 1);
    }
    CHECK(exchange_sign(Statistics::ParaFermi, same) == -exchange_sign(Statistics::ParaBose, same));
  }
}

TEST_CASE("falling_factorial base cases") {
  CHECK(falling_factorial(0) == PPolynomial{Integer(1)});
  CHECK(falling_factorial(1) == PPolynomial::variable());
  CHECK(falling_factorial(2) == PPolynomial({Integer(0), Integer(-1), Integer(1)}));  // p^2 - p
}

TEST_CASE("falling_factorial counts injective block assignments") {
  for (int p0 = 0; p0 <= 5; ++p0) {
    for (int b = 0; b <= 5; ++b) {
      // enumerate maps {1..b} -> {1..p0}, count the injective ones
      long count = 0;
      std::vector<int> map(static_cast<std::size_t>(b), 1);
      bool done = b == 0 || p0 == 0;
      if (b == 0) count = 1;
      while (!done) {
        bool injective = true;
        for (int i = 0; i < b && injective; ++i)
          for (int j = i + 1; j < b; ++j)
            if (map[i] == map[j]) {
              injective = false;
              break;
            }
        if (injective) ++count;
        int pos = b - 1;
        while (pos >= 0 && map[pos] == p0) map[pos--] = 1;
        if (pos < 0) break;
        ++map[pos];
      }
      CHECK(ppoly_eval(falling_factorial(b), Integer(p0)) == Integer(count));
    }
  }
}

TEST_CASE("ppoly_eval on the paper's crossing weight") {
  PPolynomial crossing({Integer(0), Integer(2), Integer(-1)});  // p(2 - p)
  CHECK(ppoly_eval(crossing, Integer(1)) == Integer(1));
  CHECK(ppoly_eval(crossing, Integer(2)) == Integer(0));
  PPolynomial square = PPolynomial::variable() * PPolynomial::variable();
  CHECK(ppoly_eval(square, Integer(3)) == Integer(9));
}

TEST_CASE("ring laws on randomized polynomials") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> deg(0, 4);
  auto random_poly = [&] {
    std::vector<Integer> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(Integer(coeff(rng)));
    return PPolynomial(std::move(cs));
  };
  for (int trial = 0; trial < 200; ++trial) {
    PPolynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PPolynomial{});
    // evaluation is a ring homomorphism
    Integer p0(3);
    CHECK(ppoly_eval(a * b + c, p0) == ppoly_eval(a, p0) * ppoly_eval(b, p0) + ppoly_eval(c, p0));
  }
}

TEST_CASE("normalized form strips trailing zeros") {
  PPolynomial z({Integer(0), Integer(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  PPolynomial a({Integer(2), Integer(1), Integer(0)});
  CHECK(a.degree() == 1);
  CHECK(a.coeffs().size() == 2);
}

TEST_CASE("coefficients widen beyond 64 bits without overflow") {
  PPolynomial big{Integer(1) << 100};
  PPolynomial p = PPolynomial::variable();
  PPolynomial prod = big * big * p;
  CHECK(prod.coeff(1) == Integer(1) << 200);
  CHECK(ppoly_eval(prod, Integer(2)) == (Integer(1) << 201));
}

TEST_CASE("canonical printing") {
  CHECK(PPolynomial{}.str() == "0");
  CHECK(PPolynomial{Integer(1)}.str() == "1");
  CHECK(PPolynomial::variable().str() == "p");
  CHECK(PPolynomial({Integer(0), Integer(2), Integer(-1)}).str() == "2p - p^2");
  CHECK(PPolynomial({Integer(0), Integer(-2), Integer(1)}).str() == "-2p + p^2");
  CHECK(PPolynomial({Integer(-1), Integer(0), Integer(1)}).str() == "-1 + p^2");
  CHECK((-PPolynomial::variable()).str() == "-p");
}
