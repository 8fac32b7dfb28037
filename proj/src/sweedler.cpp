#include "freehopf/sweedler.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "freehopf/errors.hpp"
#include "freehopf/kernels.hpp"

namespace freehopf {

namespace {

std::vector<Rational> row_of(const Matrix& m, std::size_t i) {
  std::vector<Rational> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = m(i, j);
  return out;
}

Matrix unit_column(std::size_t n, std::size_t i) {
  Matrix out(n, 1);
  out(i, 0) = 1;
  return out;
}

CoeffOracle oracle_of(const Series& f) {
  return [&f](const Word& w) { return f.coeff(w); };
}

LinRep zero_rep(const Alphabet& alphabet) {
  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters()) mu.emplace(l.symbol, Matrix(1, 1));
  return LinRep(alphabet, Matrix(1, 1), std::move(mu), Matrix(1, 1));
}

}  // namespace

Series shift_right(const Series& f, const Word& s) {
  require_same_alphabet(f.alphabet(), s.alphabet(), "shift_right");
  if (f.recognizable()) {
    const LinRep& r = f.rep();
    return Series(LinRep(r.alphabet(), r.lambda() * r.mu(s), r.mu(), r.gamma()));
  }
  NCPoly out(f.alphabet());
  const std::string& prefix = s.symbols();
  for (const auto& [key, c] : f.support().terms())
    if (key[0].compare(0, prefix.size(), prefix) == 0 && key[0].size() >= prefix.size())
      out.add({key[0].substr(prefix.size())}, c);
  return Series(std::move(out));
}

Series shift_left(const Series& f, const Word& s) {
  require_same_alphabet(f.alphabet(), s.alphabet(), "shift_left");
  if (f.recognizable()) {
    const LinRep& r = f.rep();
    return Series(LinRep(r.alphabet(), r.lambda(), r.mu(), r.mu(s) * r.gamma()));
  }
  NCPoly out(f.alphabet());
  const std::string& suffix = s.symbols();
  for (const auto& [key, c] : f.support().terms()) {
    const std::string& w = key[0];
    if (w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.add({w.substr(0, w.size() - suffix.size())}, c);
  }
  return Series(std::move(out));
}

HankelSlice hankel(const Alphabet& alphabet, const CoeffOracle& f, std::size_t p, std::size_t s) {
  HankelSlice out{words_up_to(alphabet, p), words_up_to(alphabet, s), {}};
  out.entries = kernels::hankel_fill_parallel(f, out.rows, out.cols);
  return out;
}

HankelSlice hankel(const Series& f, std::size_t p, std::size_t s) {
  return hankel(f.alphabet(), oracle_of(f), p, s);
}

std::size_t hankel_rank(const Alphabet& alphabet, const CoeffOracle& f, std::size_t p,
                        std::size_t s) {
  return rank(hankel(alphabet, f, p, s).entries);
}

std::size_t hankel_rank(const Series& f, std::size_t p, std::size_t s) {
  return hankel_rank(f.alphabet(), oracle_of(f), p, s);
}

LinRep learn(const Alphabet& alphabet, const CoeffOracle& f, std::size_t explore) {
  const std::size_t r = hankel_rank(alphabet, f, explore, explore);
  const std::size_t r_next = hankel_rank(alphabet, f, explore + 1, explore + 1);
  if (r != r_next)
    throw InconclusiveError("Hankel rank not stabilized: " + std::to_string(r) + " at L=" +
                            std::to_string(explore) + ", " + std::to_string(r_next) + " at L=" +
                            std::to_string(explore + 1));
  if (r == 0) return zero_rep(alphabet);

  // Rows: prefixes up to L+1 so every basis prefix extended by a letter is
  // present. Columns: suffixes up to L.
  HankelSlice window = hankel(alphabet, f, explore + 1, explore);
  const std::size_t width = window.cols.size();

  RowBasis basis(width);
  std::vector<Word> states;
  for (std::size_t i = 0; i < window.rows.size() && basis.size() < r; ++i) {
    if (window.rows[i].length() > explore) break;
    if (basis.offer(row_of(window.entries, i))) states.push_back(window.rows[i]);
  }
  if (basis.size() != r)
    throw InternalError("learn: found " + std::to_string(basis.size()) +
                        " independent prefix rows, expected " + std::to_string(r));

  auto row_index = [&](const Word& w) {
    // words_up_to enumerates in length-lex order; locate by binary search.
    auto it = std::lower_bound(window.rows.begin(), window.rows.end(), w);
    if (it == window.rows.end() || !(*it == w)) throw InternalError("learn: prefix outside window");
    return static_cast<std::size_t>(it - window.rows.begin());
  };
  auto coordinates = [&](const Word& w) {
    auto c = basis.coordinates(row_of(window.entries, row_index(w)));
    if (!c)
      throw InternalError("learn: row of '" + w.str() + "' is outside the span of the basis rows");
    return *c;
  };

  Matrix lambda(1, r);
  auto lam = coordinates(Word(alphabet));
  for (std::size_t j = 0; j < r; ++j) lambda(0, j) = lam[j];

  Matrix gamma(r, 1);
  for (std::size_t i = 0; i < r; ++i) gamma(i, 0) = f(states[i]);

  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters()) {
    Matrix m(r, r);
    Word x(alphabet, std::string(1, l.symbol));
    for (std::size_t i = 0; i < r; ++i) {
      auto c = coordinates(conc(states[i], x));
      for (std::size_t j = 0; j < r; ++j) m(i, j) = c[j];
    }
    mu.emplace(l.symbol, std::move(m));
  }
  LinRep model(alphabet, std::move(lambda), std::move(mu), std::move(gamma));

  const auto check = words_up_to(alphabet, 2 * explore + 1);
  auto bad = kernels::first_violation_parallel(
      check.size(), [&](std::size_t i) { return behavior(model, check[i]) == f(check[i]); });
  if (bad)
    throw InconclusiveError("learned model disagrees with the series on '" + check[*bad].str() +
                            "'; raise the exploration length");
  return model;
}

LinRep learn(const Series& f, std::size_t explore) {
  return learn(f.alphabet(), oracle_of(f), explore);
}

std::vector<std::pair<Series, Series>> split(const LinRep& rep) {
  const std::size_t n = rep.dim();
  std::vector<std::pair<Series, Series>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e = unit_column(n, i);
    out.emplace_back(Series(LinRep(rep.alphabet(), rep.lambda(), rep.mu(), e)),
                     Series(LinRep(rep.alphabet(), e.transposed(), rep.mu(), rep.gamma())));
  }
  return out;
}

LinRep conv_rep(const LinRep& r1, const LinRep& r2) {
  require_same_alphabet(r1.alphabet(), r2.alphabet(), "conv_rep");
  const Matrix id1 = Matrix::identity(r1.dim());
  const Matrix id2 = Matrix::identity(r2.dim());
  std::map<char, Matrix> mu;
  for (const auto& l : r1.alphabet().letters()) {
    const Matrix& a = r1.mu(l.symbol);
    const Matrix& b = r2.mu(l.symbol);
    mu.emplace(l.symbol, l.group_like() ? kron(a, b) : kron(a, id2) + kron(id1, b));
  }
  return LinRep(r1.alphabet(), kron(r1.lambda(), r2.lambda()), std::move(mu),
                kron(r1.gamma(), r2.gamma()));
}

LinRep embed_finite(const NCPoly& support) {
  const Alphabet& alphabet = support.alphabet();
  std::set<std::string, LengthLex> suffixes{""};
  for (const auto& [key, c] : support.terms())
    for (std::size_t k = 0; k <= key[0].size(); ++k) suffixes.insert(key[0].substr(k));

  const std::vector<std::string> states(suffixes.begin(), suffixes.end());
  const std::size_t n = states.size();
  auto index = [&](const std::string& s) {
    return static_cast<std::size_t>(
        std::lower_bound(states.begin(), states.end(), s, LengthLex{}) - states.begin());
  };

  // State v means "v remains to be read": μ(x) moves xv to v, γ accepts at the
  // empty remainder and λ weights each starting remainder by its coefficient.
  Matrix lambda(1, n);
  for (std::size_t i = 0; i < n; ++i) lambda(0, i) = support.coeff({states[i]});
  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters()) mu.emplace(l.symbol, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& v = states[i];
    if (v.empty()) continue;
    mu.at(v.front())(i, index(v.substr(1))) = 1;
  }
  return LinRep(alphabet, std::move(lambda), std::move(mu), unit_column(n, index("")));
}

LinRep embed_finite(const Series& f) { return embed_finite(f.support()); }

LinRep transpose_antipode(const LinRep& rep) {
  if (rep.alphabet().has_group_like())
    throw DomainError("no antipode: group-like letters present");
  std::map<char, Matrix> mu;
  for (const auto& [x, m] : rep.mu()) mu.emplace(x, -m.transposed());
  return LinRep(rep.alphabet(), rep.gamma().transposed(), std::move(mu),
                rep.lambda().transposed());
}

Rational dual_counit(const LinRep& rep) { return (rep.lambda() * rep.gamma())(0, 0); }

LinRep as_linrep(const Series& f) {
  return f.recognizable() ? f.rep() : embed_finite(f.support());
}

}  // namespace freehopf
