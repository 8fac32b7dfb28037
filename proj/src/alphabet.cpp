#include "freehopf/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "freehopf/errors.hpp"

namespace freehopf {

bool Alphabet::reserved(char c) noexcept {
  auto u = static_cast<unsigned char>(c);
  if (u < 0x21 || u > 0x7e) return true;
  if (std::isdigit(u)) return true;
  switch (c) {
    case '+': case '-': case '*': case '/': case '(': case ')':
    case ',': case ':': case '"': case '[': case ']': case '{': case '}': case '.':
      return true;
    default:
      return false;
  }
}

Alphabet::Alphabet(std::vector<Letter> letters) {
  if (letters.empty()) throw ParseError("empty alphabet");
  std::sort(letters.begin(), letters.end(),
            [](const Letter& a, const Letter& b) { return a.symbol < b.symbol; });
  auto impl = std::make_shared<Impl>();
  impl->index.fill(-1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    char c = letters[i].symbol;
    if (reserved(c)) throw ParseError(std::string("reserved symbol '") + c + "'");
    if (i > 0 && letters[i - 1].symbol == c)
      throw ParseError(std::string("duplicate symbol '") + c + "'");
    impl->index[static_cast<unsigned char>(c)] = static_cast<int>(i);
    if (letters[i].group_like()) ++impl->group_like_count;
  }
  impl->letters = std::move(letters);
  impl_ = std::move(impl);
}

Alphabet Alphabet::parse(std::string_view decl) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < decl.size() && std::isspace(static_cast<unsigned char>(decl[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= decl.size()) throw ParseError("expected letter declaration", pos);
    std::size_t start = pos;
    while (pos < decl.size() && decl[pos] != ':' && decl[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(decl[pos])))
      ++pos;
    std::string_view symbol = decl.substr(start, pos - start);
    if (symbol.size() != 1)
      throw ParseError("symbol '" + std::string(symbol) + "' is not a single character", start);
    if (reserved(symbol[0]))
      throw ParseError("reserved symbol '" + std::string(symbol) + "'", start);
    skip_ws();
    if (pos >= decl.size() || decl[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
    skip_ws();
    if (pos >= decl.size()) throw ParseError("expected kind G or L", pos);
    LetterKind kind;
    if (decl[pos] == 'G')
      kind = LetterKind::GroupLike;
    else if (decl[pos] == 'L')
      kind = LetterKind::Primitive;
    else
      throw ParseError(std::string("unknown kind '") + decl[pos] + "'", pos);
    ++pos;
    for (const auto& l : letters)
      if (l.symbol == symbol[0])
        throw ParseError("duplicate symbol '" + std::string(symbol) + "'", start);
    letters.push_back({symbol[0], kind});
    skip_ws();
    if (pos >= decl.size()) break;
    if (decl[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Alphabet(std::move(letters));
}

bool Alphabet::contains(char symbol) const noexcept {
  auto u = static_cast<unsigned char>(symbol);
  return u < 128 && impl_->index[u] >= 0;
}

const Letter& Alphabet::letter(char symbol) const {
  if (!contains(symbol))
    throw DomainError(std::string("letter '") + symbol + "' not in alphabet " + declaration());
  return impl_->letters[static_cast<std::size_t>(impl_->index[static_cast<unsigned char>(symbol)])];
}

std::string Alphabet::declaration() const {
  std::string out;
  for (const auto& l : impl_->letters) {
    if (!out.empty()) out += ',';
    out += l.symbol;
    out += l.group_like() ? ":G" : ":L";
  }
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b))
    throw DomainError(std::string(what) + ": alphabet mismatch (" + a.declaration() + " vs " +
                      b.declaration() + ")");
}

Word::Word(Alphabet alphabet, std::string symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  for (char c : symbols_) (void)alphabet_.letter(c);
}

Word Word::reversed() const {
  return Word(Trusted{}, alphabet_, std::string(symbols_.rbegin(), symbols_.rend()));
}

Word Word::subword(const std::vector<std::size_t>& positions) const {
  std::string out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out += symbols_.at(p);
  return Word(Trusted{}, alphabet_, std::move(out));
}

Word conc(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "conc");
  return Word(Word::Trusted{}, u.alphabet(), u.symbols() + v.symbols());
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n) {
  std::vector<std::string> current{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(current.size() * alphabet.size());
    for (const auto& w : current)
      for (const auto& l : alphabet.letters()) next.push_back(w + l.symbol);
    current = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(current.size());
  for (auto& s : current) out.push_back(Word(Word::Trusted{}, alphabet, std::move(s)));
  return out;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(alphabet, k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace freehopf
