#include "freehopf/series.hpp"

#include <map>
#include <string>
#include <utility>

#include "freehopf/errors.hpp"
#include "freehopf/sweedler.hpp"

namespace freehopf {

const NCPoly& Series::support() const {
  if (const auto* p = std::get_if<NCPoly>(&body_)) return *p;
  throw DomainError("series is not finitely supported");
}

const LinRep& Series::rep() const {
  if (const auto* r = std::get_if<LinRep>(&body_)) return *r;
  throw DomainError("series is not given by a linear representation");
}

Rational Series::coeff(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet(), "Series::coeff");
  if (const auto* p = std::get_if<NCPoly>(&body_)) return coeff_of(*p, w);
  return behavior(std::get<LinRep>(body_), w);
}

Series indicator(const Word& w) { return Series(poly_of(w)); }

Rational pair(const Series& f, const NCPoly& p) {
  require_same_alphabet(f.alphabet(), p.alphabet(), "pair");
  Rational out = 0;
  for (const auto& [key, c] : p.terms()) out += c * f.coeff(Word(p.alphabet(), key[0]));
  return out;
}

namespace {

using MergeKey = std::pair<std::string, std::string>;

// All w with coefficient of t⊗u in Δ(w), by the last letter of w: a primitive
// last letter came from t or from u, a group-like one from both.
const NCPoly& merges(const Alphabet& alphabet, const std::string& t, const std::string& u,
                     std::map<MergeKey, NCPoly>& memo) {
  MergeKey key{t, u};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  NCPoly out(alphabet);
  if (t.empty() && u.empty()) {
    out.add({""}, 1);
  } else {
    auto append = [&](const NCPoly& p, char x) {
      for (const auto& [k, c] : p.terms()) out.add({k[0] + x}, c);
    };
    if (!t.empty() && alphabet.letter(t.back()).primitive())
      append(merges(alphabet, t.substr(0, t.size() - 1), u, memo), t.back());
    if (!u.empty() && alphabet.letter(u.back()).primitive())
      append(merges(alphabet, t, u.substr(0, u.size() - 1), memo), u.back());
    if (!t.empty() && !u.empty() && t.back() == u.back() &&
        alphabet.letter(t.back()).group_like())
      append(merges(alphabet, t.substr(0, t.size() - 1), u.substr(0, u.size() - 1), memo),
             t.back());
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

LinRep sum_rep(const LinRep& a, const LinRep& b) {
  std::map<char, Matrix> mu;
  for (const auto& l : a.alphabet().letters())
    mu.emplace(l.symbol, block_diag(a.mu(l.symbol), b.mu(l.symbol)));
  return LinRep(a.alphabet(), hconcat(a.lambda(), b.lambda()), std::move(mu),
                vconcat(a.gamma(), b.gamma()));
}

}  // namespace

Series convolve(const Series& f, const Series& h) {
  require_same_alphabet(f.alphabet(), h.alphabet(), "convolve");
  if (f.finite_support() && h.finite_support()) {
    const Alphabet& alphabet = f.alphabet();
    std::map<MergeKey, NCPoly> memo;
    NCPoly out(alphabet);
    for (const auto& [t, a] : f.support().terms())
      for (const auto& [u, b] : h.support().terms())
        out += merges(alphabet, t[0], u[0], memo).scaled(a * b);
    return Series(std::move(out));
  }
  return Series(conv_rep(as_linrep(f), as_linrep(h)));
}

Series dual_unit(const Alphabet& alphabet) {
  Matrix one = Matrix::identity(1);
  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters()) mu.emplace(l.symbol, l.group_like() ? one : Matrix(1, 1));
  return Series(LinRep(alphabet, one, std::move(mu), one));
}

Series add(const Series& f, const Series& h) {
  require_same_alphabet(f.alphabet(), h.alphabet(), "add");
  if (f.finite_support() && h.finite_support()) return Series(f.support() + h.support());
  return Series(sum_rep(as_linrep(f), as_linrep(h)));
}

Series scale(const Series& f, const Rational& factor) {
  if (f.finite_support()) return Series(f.support().scaled(factor));
  const LinRep& r = f.rep();
  return Series(LinRep(r.alphabet(), r.lambda().scaled(factor), r.mu(), r.gamma()));
}

bool agree_up_to(const Series& f, const Series& h, std::size_t max_length) {
  require_same_alphabet(f.alphabet(), h.alphabet(), "agree_up_to");
  for (const auto& w : words_up_to(f.alphabet(), max_length))
    if (f.coeff(w) != h.coeff(w)) return false;
  return true;
}

bool equivalent(const Series& f, const Series& h) {
  require_same_alphabet(f.alphabet(), h.alphabet(), "equivalent");
  if (f.finite_support() && h.finite_support()) return f.support() == h.support();
  LinRep diff = sum_rep(as_linrep(f), as_linrep(scale(h, -1)));

  // The rows λμ(w) span a space closed under every μ(x); f − h vanishes iff
  // it vanishes on a basis of that space.
  const std::size_t n = diff.dim();
  auto to_vec = [n](const Matrix& row) {
    std::vector<Rational> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = row(0, j);
    return v;
  };
  RowBasis basis(n);
  std::vector<Matrix> frontier;
  if (basis.offer(to_vec(diff.lambda()))) frontier.push_back(diff.lambda());
  while (!frontier.empty()) {
    Matrix row = std::move(frontier.back());
    frontier.pop_back();
    if ((row * diff.gamma())(0, 0) != 0) return false;
    for (const auto& [x, m] : diff.mu()) {
      Matrix next = row * m;
      if (basis.offer(to_vec(next))) frontier.push_back(std::move(next));
    }
  }
  return true;
}

}  // namespace freehopf
