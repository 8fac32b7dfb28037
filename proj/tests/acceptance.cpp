// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "freehopf/errors.hpp"
#include "freehopf/freealg.hpp"
#include "freehopf/reference.hpp"
#include "freehopf/series.hpp"
#include "freehopf/sweedler.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Rational splitting_sum(const Series& f, const Series& h, const Word& w) {
  Rational out = 0;
  const Tensor2 delta = coproduct_word(w);
  for (const auto& [key, c] : delta.terms())
    out += c * f.coeff(Word(w.alphabet(), key[0])) * h.coeff(Word(w.alphabet(), key[1]));
  return out;
}

std::vector<LinRep> reference_reps(const Alphabet& a) {
  return {geometric_rep(a, 2), counting_rep(a, 'a'), embed_finite(poly(a, "ab"))};
}

Outcome coassociativity() {
  Alphabet a = alpha("a:L,b:L,g:G");
  auto words = words_up_to(a, 5);
  for (const auto& w : words)
    if (!(coassoc_lhs(poly_of(w)) == coassoc_rhs(poly_of(w)))) return fail("word " + w.str());
  return {true, std::to_string(words.size()) + " words"};
}

Outcome morphism() {
  Alphabet a = alpha("a:L,b:L,g:G");
  auto words = words_up_to(a, 3);
  std::size_t pairs = 0;
  for (const auto& u : words)
    for (const auto& v : words) {
      if (!(coproduct_word(conc(u, v)) == tensor2_mul(coproduct_word(u), coproduct_word(v))))
        return fail("pair " + u.str() + ", " + v.str());
      ++pairs;
    }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome antipode_axiom() {
  Alphabet a = alpha("a:L,b:L");
  auto words = words_up_to(a, 5);
  for (const auto& w : words) {
    NCPoly expected = unit_poly(a).scaled(counit(poly_of(w)));
    if (!(antipode_left_sum(poly_of(w)) == expected) || !(antipode_right_sum(poly_of(w)) == expected))
      return fail("word " + w.str());
  }
  for (const char* decl : {"g:G", "a:L,g:G", "a:L,b:L,g:G"}) {
    Alphabet mixed = alpha(decl);
    try {
      antipode(poly_of(Word(mixed, std::string(1, mixed.letters().front().symbol))));
      return fail(std::string("no domain error on ") + decl);
    } catch (const DomainError&) {
    }
  }
  return {true, std::to_string(words.size()) + " words, 3 group-like alphabets rejected"};
}

Outcome counit_laws() {
  Alphabet a = alpha("a:L,b:L,g:G");
  auto words = words_up_to(a, 5);
  for (const auto& w : words) {
    const Tensor2 d = coproduct(poly_of(w));
    if (!(contract_counit_right(d) == poly_of(w)) || !(contract_counit_left(d) == poly_of(w)))
      return fail("word " + w.str());
  }
  return {true, std::to_string(words.size()) + " words"};
}

Outcome dual_associativity() {
  Alphabet a = alpha("a:L,b:L,g:G");
  auto small = words_up_to(a, 2);
  auto targets = words_up_to(a, 6);
  std::size_t triples = 0;
  for (const auto& u : small)
    for (const auto& v : small)
      for (const auto& w : small) {
        Series left = convolve(convolve(indicator(u), indicator(v)), indicator(w));
        Series right = convolve(indicator(u), convolve(indicator(v), indicator(w)));
        for (const auto& t : targets)
          if (left.coeff(t) != right.coeff(t))
            return fail("triple " + u.str() + ", " + v.str() + ", " + w.str() + " at " + t.str());
        ++triples;
      }
  return {true, std::to_string(triples) + " triples x " + std::to_string(targets.size()) + " targets"};
}

Outcome splitting() {
  Alphabet a = alpha("a:L,b:L");
  auto words = words_up_to(a, 3);
  for (const LinRep& r : reference_reps(a)) {
    auto parts = split(r);
    for (const auto& x : words)
      for (const auto& y : words) {
        Rational sum = 0;
        for (const auto& [g, h] : parts) sum += g.coeff(x) * h.coeff(y);
        if (sum != behavior(r, conc(x, y))) return fail("pair " + x.str() + ", " + y.str());
      }
  }
  return {true, "3 reps x " + std::to_string(words.size() * words.size()) + " pairs"};
}

Outcome hankel_and_learn() {
  Alphabet a = alpha("a:L,b:L");
  for (const LinRep& r : reference_reps(a)) {
    Series f(r);
    for (std::size_t p = 0; p <= 4; ++p)
      for (std::size_t s = 0; s <= 4; ++s)
        if (hankel_rank(f, p, s) > r.dim()) return fail("rank above dim at window " + std::to_string(p) + "," + std::to_string(s));
    LinRep model = learn(f, 3);
    if (model.dim() != hankel_rank(f, 3, 3)) return fail("learned dim differs from Hankel rank");
    if (!agree_up_to(Series(model), f, 7)) return fail("learned behavior differs");
  }
  return {true, "3 reps, windows to (4,4), behavior to length 7"};
}

Outcome convolution_construction() {
  std::size_t checked = 0;
  for (const char* decl : {"a:L,b:L", "g:G,h:G", "a:L,g:G"}) {
    Alphabet a = alpha(decl);
    char first = a.letters()[0].symbol, second = a.letters()[1].symbol;
    std::vector<Series> pool = {Series(geometric_rep(a, 2)), Series(counting_rep(a, first)),
                                Series(embed_finite(poly_of(Word(a, std::string{first, second}))))};
    for (const auto& f : pool)
      for (const auto& h : pool) {
        LinRep c = conv_rep(as_linrep(f), as_linrep(h));
        for (const auto& w : words_up_to(a, 6)) {
          if (behavior(c, w) != splitting_sum(f, h, w)) return fail(std::string(decl) + " at " + w.str());
          ++checked;
        }
      }
  }
  Alphabet a = alpha("a:L");
  LinRep five = conv_rep(geometric_rep(a, 2), geometric_rep(a, 3));
  Rational power = 1;
  for (std::size_t n = 0; n <= 5; ++n, power *= 5)
    if (behavior(five, Word(a, std::string(n, 'a'))) != power) return fail("5^n at n=" + std::to_string(n));
  return {true, std::to_string(checked) + " evaluations, 5^n for n <= 5"};
}

Outcome representation_calculus() {
  Alphabet a = alpha("a:L,b:L,g:G");
  Gen gen(2718);
  auto words = words_up_to(a, 3);
  MatRep triv = trivial_rep(a);
  for (std::size_t d1 = 1; d1 <= 2; ++d1)
    for (std::size_t d2 = 1; d2 <= 2; ++d2)
      for (std::size_t d3 = 1; d3 <= 2; ++d3) {
        MatRep r1 = gen.any_rep(a, d1), r2 = gen.any_rep(a, d2), r3 = gen.any_rep(a, d3);
        MatRep left = tensor_rep(tensor_rep(r1, r2), r3);
        MatRep right = tensor_rep(r1, tensor_rep(r2, r3));
        MatRep lu = tensor_rep(r1, triv), ru = tensor_rep(triv, r1);
        for (const auto& w : words) {
          if (!(eval_rep(left, w) == eval_rep(right, w))) return fail("associativity at " + w.str());
          if (!(eval_rep(lu, w) == eval_rep(r1, w)) || !(eval_rep(ru, w) == eval_rep(r1, w)))
            return fail("unit at " + w.str());
        }
      }
  Alphabet prim = alpha("a:L,b:L");
  std::size_t pairings = 0;
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    MatRep r = gen.any_rep(prim, n);
    std::vector<Rational> psi(n);
    Matrix x(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      psi[i] = gen.integer(-2, 2);
      x(i, 0) = gen.integer(-2, 2);
    }
    for (const auto& g : words_up_to(prim, 4)) {
      auto [lhs, rhs] = pairing_invariance_check(r, poly_of(g), DualVector(psi), x);
      if (lhs != rhs) return fail("pairing at " + g.str());
      ++pairings;
    }
  }
  return {true, "8 rep triples, " + std::to_string(pairings) + " pairings"};
}

Outcome cli_goldens() {
  auto cases = golden_cases();
  for (const auto& c : cases) {
    GoldenResult r = run_cli(c.args);
    if (r.status != c.exit || r.out != golden_expected(c)) return fail("invocation " + c.name);
  }
  Alphabet a = alpha("a:L,b:L,g:G");
  Gen gen(100);
  for (int i = 0; i < 100; ++i) {
    NCPoly p = gen.any_poly(a, 6, 4);
    std::string text = to_string(p);
    if (!(parse_poly(a, text) == p) || to_string(parse_poly(a, text)) != text) return fail("round trip " + text);
  }
  return {true, std::to_string(cases.size()) + " invocations, 100 round trips"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double bound_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"coassociativity", 5, coassociativity},
      {"bialgebra morphism", 5, morphism},
      {"antipode axiom", 2, antipode_axiom},
      {"counit laws", 2, counit_laws},
      {"dual associativity", 10, dual_associativity},
      {"splitting f(xy) = sum g_i(x) h_i(y)", 5, splitting},
      {"Hankel rank and learn round trip", 10, hankel_and_learn},
      {"convolution construction vs splitting sum", 10, convolution_construction},
      {"representation calculus", 5, representation_calculus},
      {"CLI golden files", 5, cli_goldens},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.bound_s) o = fail("too slow");
    failures += !o.ok;
    std::printf("%-4s %2zu %-42s %6.2fs (< %2.0fs)  %s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, secs,
                c.bound_s, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
