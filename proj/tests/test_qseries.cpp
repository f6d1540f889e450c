#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/partition.hpp"
#include "qseries/series.hpp"

using namespace tcorelab;
using namespace tcorelab::qs;

namespace {

using IS = Series<Integer>;
using LS = Series<Laurent<Integer>>;

Laurent<Integer> X(int p = 1) { return Laurent<Integer>::var(0, p); }
Laurent<Integer> Z(int p = 1) { return Laurent<Integer>::var(2, p); }

template <class R> R random_element(std::mt19937 &rng);

template <> Integer random_element<Integer>(std::mt19937 &rng) {
  return Integer(static_cast<int>(rng() % 11) - 5);
}
template <> Cyclo5 random_element<Cyclo5>(std::mt19937 &rng) {
  Cyclo5 v;
  for (int k = 0; k < 5; ++k)
    v += Cyclo5::root_power(k) * Cyclo5(static_cast<int>(rng() % 7) - 3);
  return v;
}
template <> Gaussian random_element<Gaussian>(std::mt19937 &rng) {
  return Gaussian(static_cast<int>(rng() % 7) - 3) + Gaussian::root_power(1) * Gaussian(static_cast<int>(rng() % 7) - 3);
}
template <> Laurent<Integer> random_element<Laurent<Integer>>(std::mt19937 &rng) {
  Laurent<Integer> v;
  for (int k = 0; k < 3; ++k)
    v += Laurent<Integer>::monomial(Integer(static_cast<int>(rng() % 5) - 2),
                                    {static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1, 0});
  return v;
}

template <class R> void ring_axioms() {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    R a = random_element<R>(rng), b = random_element<R>(rng), c = random_element<R>(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == R(0));
    REQUIRE(a * R(1) == a);
    REQUIRE(is_zero(a * R(0)));
  }
}

} // namespace

TEST_CASE("ring axioms") {
  ring_axioms<Integer>();
  ring_axioms<Cyclo5>();
  ring_axioms<Gaussian>();
  ring_axioms<Laurent<Integer>>();
}

TEST_CASE("cyclotomic reduction") {
  Cyclo5 sum;
  for (int k = 0; k < 5; ++k)
    sum += Cyclo5::root_power(k);
  CHECK(is_zero(sum));
  CHECK(Cyclo5::root_power(5) == Cyclo5(1));
  CHECK(Cyclo5::root_power(-1) * Cyclo5::root_power(1) == Cyclo5(1));
  Gaussian i = Gaussian::root_power(1);
  CHECK(i * i == Gaussian(-1));
  CHECK(Gaussian::root_power(4) == Gaussian(1));
  // an element is zero iff its lift has all five coefficients equal
  Cyclo5 same = Cyclo5(3) + Cyclo5::root_power(1) * Cyclo5(3) + Cyclo5::root_power(2) * Cyclo5(3) +
                Cyclo5::root_power(3) * Cyclo5(3) + Cyclo5::root_power(4) * Cyclo5(3);
  CHECK(is_zero(same));
  CHECK_FALSE(is_zero(Cyclo5(1) - Cyclo5::root_power(2)));
}

TEST_CASE("Euler product and its inverse") {
  IS e = poch<Integer>(1, 1, 1, 1, 6);
  CHECK(e.coeff(0) == 1);
  CHECK(e.coeff(1) == -1);
  CHECK(e.coeff(2) == -1);
  CHECK(e.coeff(3) == 0);
  CHECK(e.coeff(4) == 0);
  CHECK(e.coeff(5) == 1);
  IS inv = poch<Integer>(1, 1, 1, -1, 41);
  CHECK(inv.coeff(9) == 30);
  for (int n = 0; n <= 40; ++n)
    CHECK(inv.coeff(n) == static_cast<long>(enumerate_partitions(n).size()));
  IS big = poch<Integer>(1, 1, 1, 1, 80);
  CHECK((big * big.inverse()).eq_upto(IS::one(80), 80));
  CHECK(poch<Integer>(1, 7, 1, 1, 5).eq_upto(IS::one(5), 5));
  CHECK_THROWS_AS(poch<Integer>(1, 0, 1, -1, 5), Error);
  CHECK_THROWS_AS(IS::monomial(Integer(2), 0, 3).inverse(), Error);
  CHECK_THROWS_AS(inv.coeff(41), Error);
}

TEST_CASE("truncation") {
  IS a = poch<Integer>(1, 1, 1, -1, 30), b = poch<Integer>(1, 1, 1, 1, 20);
  CHECK((a * b).order() == 20);
  CHECK((a + b).order() == 20);
  CHECK((a * b).eq_upto(IS::one(20), 20));
}

TEST_CASE("5-core series coefficient") {
  IS s = poch<Integer>(1, 5, 5, 5, 10) * poch<Integer>(1, 1, 1, -1, 10);
  CHECK(s.coeff(4) == 5);
}

TEST_CASE("triangular product") {
  const int N = 1000;
  IS lhs = poch<Integer>(1, 4, 4, 1, N) * poch<Integer>(-1, 1, 2, 1, N);
  IS rhs(N);
  for (int k = 0; k * (k + 1) / 2 < N; ++k)
    rhs.add_to(k * (k + 1) / 2, Integer(1));
  CHECK(lhs.eq_upto(rhs, N));
}

TEST_CASE("Jacobi triple product") {
  const int N = 100;
  LS theta = theta_jtp(N);
  CHECK(theta.coeff(0) == Laurent<Integer>(1));
  CHECK(theta.coeff(4) == Z(2) + Z(-2));
  LS prod = poch_inf<Laurent<Integer>>(Laurent<Integer>(1), 2, 2, 1, N) *
            poch_inf<Laurent<Integer>>(-Z(), 1, 2, 1, N) * poch_inf<Laurent<Integer>>(-Z(-1), 1, 2, 1, N);
  CHECK(prod.eq_upto(theta, N));
  for (int z : {1, -1}) {
    IS spec = poch<Integer>(1, 2, 2, 1, N) * poch<Integer>(-z, 1, 2, 1, N) * poch<Integer>(-z, 1, 2, 1, N);
    IS direct(N);
    for (int n = -10; n <= 10; ++n)
      if (n * n < N)
        direct.add_to(n * n, Integer(n % 2 != 0 && z == -1 ? -1 : 1));
    CHECK(spec.eq_upto(direct, N));
    if (z == 1) {
      CHECK(direct.coeff(0) == 1);
      CHECK(direct.coeff(1) == 2);
      CHECK(direct.coeff(4) == 2);
      CHECK(direct.coeff(9) == 2);
    }
  }
}

TEST_CASE("triple product with a fifth root of unity") {
  const int N = 60;
  Cyclo5 xi = Cyclo5::root_power(1);
  Series<Cyclo5> lhs = poch_inf(Cyclo5::root_power(2), 2, 2, 1, N) * poch_inf(Cyclo5::root_power(-2), 2, 2, 1, N) *
                       poch_inf(Cyclo5(1), 2, 2, 1, N);
  Series<Cyclo5> rhs(N);
  for (int m = 0; m * (m + 1) < N; ++m) {
    Cyclo5 term = Cyclo5::root_power(-2 * m) * (Cyclo5(1) - Cyclo5::root_power(4 * m + 2));
    rhs.add_to(m * (m + 1), m % 2 ? -term : term);
  }
  Cyclo5 one_minus = Cyclo5(1) - xi * xi;
  CHECK(lhs.scaled(one_minus).eq_upto(rhs, N));
}

TEST_CASE("geometric-ratio Pochhammer") {
  // (x q^2 w^2; q^2 w^2) with w^2 = -1 equals (-x q^2, x q^4; q^4)
  const int N = 30;
  using GL = Laurent<Gaussian>;
  GL x = GL::var(0);
  Gaussian m1(-1);
  GL w2 = GL::monomial(m1, {0, 0, 0});
  Series<GL> a = poch_geom(GL(x * w2), w2, 2, 2, 1, N);
  Series<GL> b = poch_inf(GL(x * w2), 2, 4, 1, N) * poch_inf(x, 4, 4, 1, N);
  CHECK(a.eq_upto(b, N));
}

TEST_CASE("sift") {
  IS part = poch<Integer>(1, 1, 1, -1, 5 * 40 + 4);
  IS s = sift(part, 5, 4);
  CHECK(s.order() == 40);
  for (int n = 0; n < 40; ++n)
    CHECK(mpz_divisible_ui_p(s.coeff(n).get_mpz_t(), 5) != 0);
  IS mono = IS::monomial(Integer(7), 13, 20);
  IS sm = sift(mono, 5, 3);
  CHECK(sm.coeff(2) == 7);
  CHECK(sift(mono, 5, 2).coeff(2) == 0);
  // Ramanujan: sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6
  const int N = 30;
  IS big = poch<Integer>(1, 1, 1, -1, 5 * N + 4);
  IS rhs = poch<Integer>(1, 5, 5, 5, N) * poch<Integer>(1, 1, 1, -6, N);
  CHECK(sift(big, 5, 4).truncated(N).eq_upto(rhs.scaled(Integer(5)), N));
  CHECK_THROWS_AS(sift(mono, 5, 5), Error);
}
