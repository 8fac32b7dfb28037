#include "freehopf/checks.hpp"

#include <vector>

#include "freehopf/errors.hpp"
#include "freehopf/freealg.hpp"
#include "freehopf/kernels.hpp"
#include "freehopf/reference.hpp"
#include "freehopf/series.hpp"
#include "freehopf/sweedler.hpp"

namespace freehopf {

namespace {

template <class Holds, class Describe>
CheckReport sweep(std::string name, std::size_t cases, Holds&& holds, Describe&& describe) {
  CheckReport report{std::move(name), cases, std::nullopt};
  if (auto bad = kernels::first_violation_parallel(cases, holds)) report.counterexample = describe(*bad);
  return report;
}

// Σ_{I+J=I_L} f(w[I_G∪I]) h(w[I_G∪J]), straight from the definition.
Rational convolution_by_definition(const Series& f, const Series& h, const Word& w) {
  Rational out = 0;
  for (const auto& [l, r] : coproduct_splittings(w)) out += f.coeff(l) * h.coeff(r);
  return out;
}

}  // namespace

CheckReport check_coassoc(const Alphabet& alphabet, std::size_t max_length) {
  const auto words = words_up_to(alphabet, max_length);
  return sweep(
      "coassoc", words.size(),
      [&](std::size_t i) {
        NCPoly p = poly_of(words[i]);
        return coassoc_lhs(p) == coassoc_rhs(p);
      },
      [&](std::size_t i) { return words[i].str(); });
}

CheckReport check_antipode(const Alphabet& alphabet, std::size_t max_length) {
  if (alphabet.has_group_like()) throw DomainError("no antipode: group-like letters present");
  const auto words = words_up_to(alphabet, max_length);
  return sweep(
      "antipode", words.size(),
      [&](std::size_t i) {
        NCPoly p = poly_of(words[i]);
        NCPoly expected = unit_poly(alphabet).scaled(counit(p));
        return antipode_left_sum(p) == expected && antipode_right_sum(p) == expected;
      },
      [&](std::size_t i) { return words[i].str(); });
}

CheckReport check_morphism(const Alphabet& alphabet, std::size_t max_length) {
  const auto words = words_up_to(alphabet, max_length);
  const std::size_t n = words.size();
  return sweep(
      "morphism", n * n,
      [&](std::size_t i) {
        const Word& u = words[i / n];
        const Word& v = words[i % n];
        return coproduct_word(conc(u, v)) == tensor2_mul(coproduct_word(u), coproduct_word(v));
      },
      [&](std::size_t i) { return words[i / n].str() + " " + words[i % n].str(); });
}

CheckReport check_coproduct_paths(const Alphabet& alphabet, std::size_t max_length) {
  const auto words = words_up_to(alphabet, max_length);
  return sweep(
      "coproduct-paths", words.size(),
      [&](std::size_t i) {
        NCPoly p = poly_of(words[i]);
        return coproduct(p) == coproduct_multiplicative(p);
      },
      [&](std::size_t i) { return words[i].str(); });
}

CheckReport check_counit(const Alphabet& alphabet, std::size_t max_length) {
  const auto words = words_up_to(alphabet, max_length);
  return sweep(
      "counit", words.size(),
      [&](std::size_t i) {
        NCPoly p = poly_of(words[i]);
        Tensor2 d = coproduct(p);
        return contract_counit_right(d) == p && contract_counit_left(d) == p;
      },
      [&](std::size_t i) { return words[i].str(); });
}

CheckReport check_dual_assoc(const Alphabet& alphabet, std::size_t max_length) {
  const auto factors = words_up_to(alphabet, 2);
  const auto targets = words_up_to(alphabet, max_length);
  const std::size_t n = factors.size();
  return sweep(
      "dual-assoc", n * n * n,
      [&](std::size_t i) {
        Series u = indicator(factors[i / (n * n)]);
        Series v = indicator(factors[i / n % n]);
        Series w = indicator(factors[i % n]);
        Series left = convolve(convolve(u, v), w);
        Series right = convolve(u, convolve(v, w));
        for (const auto& t : targets)
          if (left.coeff(t) != right.coeff(t)) return false;
        return true;
      },
      [&](std::size_t i) {
        return factors[i / (n * n)].str() + " " + factors[i / n % n].str() + " " +
               factors[i % n].str();
      });
}

CheckReport check_conv_oracle(const Alphabet& alphabet, std::size_t max_length) {
  const auto& letters = alphabet.letters();
  std::string chi_word{letters[0].symbol, letters[letters.size() > 1 ? 1 : 0].symbol};
  const std::vector<Series> refs{
      Series(geometric_rep(alphabet, 2)),
      Series(geometric_rep(alphabet, 3)),
      Series(counting_rep(alphabet, letters[0].symbol)),
      Series(embed_finite(poly_of(Word(alphabet, chi_word)))),
  };
  const std::vector<std::string> names{"geometric(2)", "geometric(3)", "counting", "chi_" + chi_word};
  const std::size_t k = refs.size();
  const auto targets = words_up_to(alphabet, max_length);
  const std::size_t t = targets.size();

  std::vector<LinRep> products;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) products.push_back(conv_rep(refs[a].rep(), refs[b].rep()));

  return sweep(
      "conv-oracle", k * k * t,
      [&](std::size_t i) {
        const std::size_t pair_index = i / t;
        const Word& w = targets[i % t];
        return behavior(products[pair_index], w) ==
               convolution_by_definition(refs[pair_index / k], refs[pair_index % k], w);
      },
      [&](std::size_t i) {
        const std::size_t pair_index = i / t;
        return names[pair_index / k] + " * " + names[pair_index % k] + " on " +
               targets[i % t].str();
      });
}

}  // namespace freehopf
