#include "freehopf/freealg.hpp"

#include <cstdint>

#include "freehopf/errors.hpp"

namespace freehopf {

namespace {

Word word_of(const Alphabet& alphabet, const std::string& symbols) {
  return Word(alphabet, symbols);
}

void require_antipode(const Alphabet& alphabet) {
  if (alphabet.has_group_like())
    throw DomainError("no antipode: group-like letters present");
}

// S on a single word, as (sign, reversed symbols).
std::pair<int, std::string> antipode_word(const std::string& w) {
  return {w.size() % 2 == 0 ? 1 : -1, std::string(w.rbegin(), w.rend())};
}

}  // namespace

NCPoly poly_mul(const NCPoly& p, const NCPoly& q) {
  require_same_alphabet(p.alphabet(), q.alphabet(), "poly_mul");
  NCPoly out(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out.add({u[0] + v[0]}, a * b);
  return out;
}

std::vector<std::pair<Word, Word>> coproduct_splittings(const Word& w) {
  std::vector<std::size_t> primitive_positions;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i].primitive()) primitive_positions.push_back(i);
  if (primitive_positions.size() >= 63)
    throw DomainError("coproduct: too many primitive letters to enumerate");

  const std::uint64_t count = std::uint64_t{1} << primitive_positions.size();
  std::vector<std::pair<Word, Word>> out;
  out.reserve(count);
  // Bit k of `mask` set: the k-th primitive position goes to the left factor (I),
  // clear: to the right factor (J). Group-like positions go to both.
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> left, right;
    std::size_t k = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (w[i].group_like()) {
        left.push_back(i);
        right.push_back(i);
      } else {
        if (mask >> k & 1U)
          left.push_back(i);
        else
          right.push_back(i);
        ++k;
      }
    }
    out.emplace_back(w.subword(left), w.subword(right));
  }
  return out;
}

Tensor2 coproduct_word(const Word& w) {
  Tensor2 out(w.alphabet());
  for (const auto& [l, r] : coproduct_splittings(w)) out.add({l.symbols(), r.symbols()}, 1);
  return out;
}

Tensor2 coproduct(const NCPoly& p) {
  Tensor2 out(p.alphabet());
  for (const auto& [key, c] : p.terms()) {
    Word w = word_of(p.alphabet(), key[0]);
    for (const auto& [l, r] : coproduct_splittings(w)) out.add({l.symbols(), r.symbols()}, c);
  }
  return out;
}

Tensor2 coproduct_multiplicative(const NCPoly& p) {
  const Alphabet& alphabet = p.alphabet();
  Tensor2 out(alphabet);
  for (const auto& [key, c] : p.terms()) {
    Tensor2 acc(alphabet);
    acc.add({"", ""}, 1);
    for (char x : key[0]) {
      Tensor2 dx(alphabet);
      std::string s(1, x);
      if (alphabet.letter(x).group_like()) {
        dx.add({s, s}, 1);
      } else {
        dx.add({s, ""}, 1);
        dx.add({"", s}, 1);
      }
      acc = tensor2_mul(acc, dx);
    }
    out += acc.scaled(c);
  }
  return out;
}

Rational counit(const Word& w) {
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i].primitive()) return 0;
  return 1;
}

Rational counit(const NCPoly& p) {
  Rational out = 0;
  for (const auto& [key, c] : p.terms())
    out += c * counit(word_of(p.alphabet(), key[0]));
  return out;
}

NCPoly antipode(const NCPoly& p) {
  require_antipode(p.alphabet());
  NCPoly out(p.alphabet());
  for (const auto& [key, c] : p.terms()) {
    auto [sign, rev] = antipode_word(key[0]);
    out.add({rev}, sign * c);
  }
  return out;
}

Tensor2 tensor2_mul(const Tensor2& x, const Tensor2& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "tensor2_mul");
  Tensor2 out(x.alphabet());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add({u[0] + v[0], u[1] + v[1]}, a * b);
  return out;
}

Tensor3 coassoc_lhs(const NCPoly& p) {
  const Alphabet& alphabet = p.alphabet();
  Tensor3 out(alphabet);
  const Tensor2 delta = coproduct(p);
  for (const auto& [key, c] : delta.terms()) {
    for (const auto& [l, r] : coproduct_splittings(word_of(alphabet, key[0])))
      out.add({l.symbols(), r.symbols(), key[1]}, c);
  }
  return out;
}

Tensor3 coassoc_rhs(const NCPoly& p) {
  const Alphabet& alphabet = p.alphabet();
  Tensor3 out(alphabet);
  const Tensor2 delta = coproduct(p);
  for (const auto& [key, c] : delta.terms()) {
    for (const auto& [l, r] : coproduct_splittings(word_of(alphabet, key[1])))
      out.add({key[0], l.symbols(), r.symbols()}, c);
  }
  return out;
}

NCPoly contract_counit_right(const Tensor2& t) {
  NCPoly out(t.alphabet());
  for (const auto& [key, c] : t.terms())
    out.add({key[0]}, c * counit(word_of(t.alphabet(), key[1])));
  return out;
}

NCPoly contract_counit_left(const Tensor2& t) {
  NCPoly out(t.alphabet());
  for (const auto& [key, c] : t.terms())
    out.add({key[1]}, c * counit(word_of(t.alphabet(), key[0])));
  return out;
}

NCPoly antipode_left_sum(const NCPoly& p) {
  require_antipode(p.alphabet());
  NCPoly out(p.alphabet());
  const Tensor2 delta = coproduct(p);
  for (const auto& [key, c] : delta.terms()) {
    Word left = word_of(p.alphabet(), key[0]);
    Word right = word_of(p.alphabet(), key[1]);
    out += poly_mul(antipode(poly_of(left, c)), poly_of(right));
  }
  return out;
}

NCPoly antipode_right_sum(const NCPoly& p) {
  require_antipode(p.alphabet());
  NCPoly out(p.alphabet());
  const Tensor2 delta = coproduct(p);
  for (const auto& [key, c] : delta.terms()) {
    Word left = word_of(p.alphabet(), key[0]);
    Word right = word_of(p.alphabet(), key[1]);
    out += poly_mul(poly_of(left, c), antipode(poly_of(right)));
  }
  return out;
}

}  // namespace freehopf
