// Serial vs OpenMP timings for the Hankel fill and the exhaustive sweeps.
//
//   bench_kernels [window] [maxlen]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>

#include "freehopf/alphabet.hpp"
#include "freehopf/freealg.hpp"
#include "freehopf/kernels.hpp"
#include "freehopf/reference.hpp"
#include "freehopf/sweedler.hpp"

using namespace freehopf;

template <class F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << "s" << std::setw(10) << parallel
            << "s  x" << std::setprecision(2) << serial / parallel
            << (same ? "" : "  RESULTS DIFFER") << "\n";
}

int main(int argc, char** argv) {
  const std::size_t window = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  const std::size_t maxlen = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 6;
  std::cout << "threads: " << kernels::max_threads() << "\n";

  Alphabet ab = Alphabet::parse("a:L,b:L");
  LinRep rep = conv_rep(counting_rep(ab, 'a'), geometric_rep(ab, 2));
  auto f = [&rep](const Word& w) { return behavior(rep, w); };
  auto rows = words_up_to(ab, window);
  auto cols = words_up_to(ab, window);

  Matrix h_serial, h_parallel;
  double ts = seconds([&] { h_serial = kernels::hankel_fill_serial(f, rows, cols); });
  double tp = seconds([&] { h_parallel = kernels::hankel_fill_parallel(f, rows, cols); });
  report("hankel_fill", ts, tp, h_serial == h_parallel);

  Alphabet mixed = Alphabet::parse("a:L,b:L,g:G");
  auto words = words_up_to(mixed, maxlen);
  auto holds = [&](std::size_t i) {
    NCPoly p = poly_of(words[i]);
    return coassoc_lhs(p) == coassoc_rhs(p);
  };
  std::optional<std::size_t> s_res, p_res;
  ts = seconds([&] { s_res = kernels::first_violation_serial(words.size(), holds); });
  tp = seconds([&] { p_res = kernels::first_violation_parallel(words.size(), holds); });
  report("coassoc sweep", ts, tp, s_res == p_res);
  return 0;
}
