#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "freehopf/kernels.hpp"
#include "freehopf/reference.hpp"
#include "freehopf/series.hpp"
#include "support.hpp"

using namespace testing;
namespace k = freehopf::kernels;

TEST_CASE("hankel fill: parallel equals serial") {
  Alphabet a = alpha("a:L,b:L,g:G");
  Series f(counting_rep(a, 'b'));
  auto oracle = [&f](const Word& w) { return f.coeff(w); };
  auto rows = words_up_to(a, 3), cols = words_up_to(a, 2);
  Matrix serial = k::hankel_fill_serial(oracle, rows, cols);
  CHECK(serial.rows() == rows.size());
  CHECK(serial.cols() == cols.size());
  CHECK(serial == k::hankel_fill_parallel(oracle, rows, cols));
  CHECK(serial(0, 0) == 0);
  CHECK(serial(2, 2) == 2);  // b·b
}

TEST_CASE("hankel fill on empty windows") {
  auto zero = [](const Word&) { return Rational(0); };
  CHECK(k::hankel_fill_parallel(zero, {}, {}).rows() == 0);
}

TEST_CASE("first violation returns the lowest failing index") {
  auto holds = [](std::size_t i) { return i % 97 != 13 && i != 500; };
  CHECK(k::first_violation_serial(1000, holds) == std::optional<std::size_t>(13));
  CHECK(k::first_violation_parallel(1000, holds) == std::optional<std::size_t>(13));
  CHECK_FALSE(k::first_violation_parallel(1000, [](std::size_t) { return true; }).has_value());
  CHECK_FALSE(k::first_violation_parallel(0, [](std::size_t) { return false; }).has_value());
  CHECK(k::first_violation_parallel(1, [](std::size_t) { return false; }) ==
        std::optional<std::size_t>(0));
  for (std::size_t bad : {0ul, 1ul, 511ul, 999ul}) {
    auto only = [bad](std::size_t i) { return i != bad; };
    CHECK(k::first_violation_parallel(1000, only) == k::first_violation_serial(1000, only));
  }
}

TEST_CASE("first violation visits every index when all pass") {
  std::atomic<std::size_t> visits{0};
  k::first_violation_parallel(2000, [&](std::size_t) {
    ++visits;
    return true;
  });
  CHECK(visits.load() == 2000);
}

TEST_CASE("exceptions cross the parallel region") {
  auto throwing = [](std::size_t i) -> bool {
    if (i == 42) throw std::runtime_error("boom");
    return true;
  };
  CHECK_THROWS_WITH_AS(k::first_violation_parallel(100, throwing), "boom", std::runtime_error);
  CHECK_THROWS_AS(k::first_violation_serial(100, throwing), std::runtime_error);
  CHECK(k::max_threads() >= 1);
}
