#include "freehopf/text.hpp"

#include <cctype>

#include "freehopf/errors.hpp"

namespace freehopf {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw ParseError("malformed rational '" + std::string(text) + "'", pos);
  Integer num(std::string(text.substr(pos, num_end - pos)));
  Integer den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1)
      throw ParseError("malformed rational '" + std::string(text) + "'", pos + 1);
    den = Integer(std::string(text.substr(pos + 1, den_end - pos - 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", pos + 1);
    pos = den_end;
  }
  if (pos != text.size()) throw ParseError("malformed rational '" + std::string(text) + "'", pos);
  Rational out(negative ? Integer(-num) : num, den);
  out.canonicalize();
  return out;
}

namespace {

constexpr std::string_view kTensorUtf8 = "\xE2\x8A\x97";  // ⊗

class Lexer {
 public:
  Lexer(const Alphabet& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_tensor_sep() {
    skip_ws();
    if (text_.substr(pos_, 3) == "(x)") {
      pos_ += 3;
      return true;
    }
    if (text_.substr(pos_, kTensorUtf8.size()) == kTensorUtf8) {
      pos_ += kTensorUtf8.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
    throw ParseError(what + ", found '" + token + "'", pos_);
  }

  // Optional leading rational with optional '*'. Returns 1 when absent and
  // sets `bare` if the rational stands alone (term is rational·1).
  Rational coefficient(bool& bare) {
    skip_ws();
    bare = false;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return 1;
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    Rational q;
    try {
      q = parse_rational(lit);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
    skip_ws();
    if (eat('*')) return q;
    char c = peek();
    if (c != '\0' && alphabet_.contains(c)) return q;
    if (lit == "1") {
      // The unit word, not a coefficient.
      pos_ = start;
      return 1;
    }
    bare = true;
    return q;
  }

  // word := "1" | letter+
  std::string word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      if (pos_ < text_.size() && alphabet_.contains(text_[pos_]))
        fail("unit word '1' followed by a letter");
      return {};
    }
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '(' ||
          static_cast<unsigned char>(c) >= 0x80)
        break;
      if (!alphabet_.contains(c)) fail("unknown letter");
      out += c;
      ++pos_;
    }
    if (out.empty()) fail("expected word");
    return out;
  }

 private:
  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
Combination<N> parse_combination(const Alphabet& alphabet, std::string_view text) {
  Combination<N> out(alphabet);
  Lexer lex(alphabet, text);
  if (lex.done()) lex.fail("empty expression");
  if (lex.peek() == '0') {
    Lexer probe = lex;
    probe.eat('0');
    if (probe.done()) return out;
  }
  bool first = true;
  while (true) {
    int sign = 1;
    if (lex.eat('-'))
      sign = -1;
    else if (!first && !lex.eat('+'))
      lex.fail("expected '+' or '-'");
    else if (first)
      lex.eat('+');
    first = false;

    bool bare = false;
    Rational coeff = lex.coefficient(bare);
    typename Combination<N>::Key key;
    if (bare) {
      if constexpr (N != 1) lex.fail("expected word after coefficient");
    } else {
      key[0] = lex.word();
      for (std::size_t i = 1; i < N; ++i) {
        if (!lex.eat_tensor_sep()) lex.fail("expected tensor separator '(x)'");
        key[i] = lex.word();
      }
    }
    out.add(key, sign * coeff);
    if (lex.done()) break;
  }
  return out;
}

template <std::size_t N>
std::string print_combination(const Combination<N>& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : c.terms()) {
    Rational magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) {
      out += magnitude.get_str();
      out += '*';
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (i > 0) out += "(x)";
      out += key[i].empty() ? std::string("1") : key[i];
    }
  }
  return out;
}

}  // namespace

NCPoly parse_poly(const Alphabet& alphabet, std::string_view text) {
  return parse_combination<1>(alphabet, text);
}

Tensor2 parse_tensor2(const Alphabet& alphabet, std::string_view text) {
  return parse_combination<2>(alphabet, text);
}

std::string to_string(const NCPoly& p) { return print_combination(p); }
std::string to_string(const Tensor2& t) { return print_combination(t); }
std::string to_string(const Tensor3& t) { return print_combination(t); }

}  // namespace freehopf
