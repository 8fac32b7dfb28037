#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace freehopf {

enum class LetterKind { GroupLike, Primitive };

/// A single-character symbol tagged group-like (Δx = x⊗x) or primitive
/// (Δx = x⊗1 + 1⊗x).
struct Letter {
  char symbol;
  LetterKind kind;

  bool group_like() const noexcept { return kind == LetterKind::GroupLike; }
  bool primitive() const noexcept { return kind == LetterKind::Primitive; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Ordered set of letters partitioned into group-like and primitive ones.
///
/// Letters are kept sorted by character code regardless of declaration order,
/// so two alphabets declaring the same letters compare equal. The handle is
/// cheap to copy; the letter table is shared and immutable.
class Alphabet {
 public:
  /// Throws ParseError on duplicates, reserved characters or an empty list.
  explicit Alphabet(std::vector<Letter> letters);

  /// Parses a declaration such as "a:L,b:L,g:G".
  static Alphabet parse(std::string_view decl);

  const std::vector<Letter>& letters() const noexcept { return impl_->letters; }
  std::size_t size() const noexcept { return impl_->letters.size(); }

  bool contains(char symbol) const noexcept;
  /// Throws DomainError if the symbol is not declared.
  const Letter& letter(char symbol) const;

  bool has_group_like() const noexcept { return impl_->group_like_count > 0; }
  bool all_primitive() const noexcept { return impl_->group_like_count == 0; }

  /// Canonical declaration string, letters in character order.
  std::string declaration() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->letters == b.impl_->letters;
  }

  /// True for characters that can never be letters because the text grammar
  /// reserves them.
  static bool reserved(char c) noexcept;

 private:
  struct Impl {
    std::vector<Letter> letters;
    std::array<int, 128> index{};
    std::size_t group_like_count = 0;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Throws DomainError naming `what` when the alphabets differ.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

/// Length-then-lexicographic (by character code) order on symbol strings.
struct LengthLex {
  bool operator()(const std::string& a, const std::string& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A finite word over an alphabet; the empty word is the unit 1.
class Word {
 public:
  /// Empty word over `alphabet`.
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  /// Throws DomainError if a symbol is not in the alphabet.
  Word(Alphabet alphabet, std::string symbols);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const Letter& operator[](std::size_t i) const { return alphabet_.letter(symbols_[i]); }

  Word reversed() const;
  /// Letters at the given increasing positions.
  Word subword(const std::vector<std::size_t>& positions) const;

  /// "1" for the empty word, the symbols otherwise.
  std::string str() const { return symbols_.empty() ? std::string("1") : symbols_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_ && a.alphabet_ == b.alphabet_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return LengthLex{}(a.symbols_, b.symbols_);
  }

 private:
  struct Trusted {};
  Word(Trusted, Alphabet alphabet, std::string symbols)
      : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {}
  friend Word conc(const Word&, const Word&);
  friend std::vector<Word> words_up_to(const Alphabet&, std::size_t);
  friend std::vector<Word> words_of_length(const Alphabet&, std::size_t);

  Alphabet alphabet_;
  std::string symbols_;
};

/// Juxtaposition uv. Throws DomainError on alphabet mismatch.
Word conc(const Word& u, const Word& v);

/// All words of exactly `n` letters, in length-lex order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n);
/// All words of length ≤ `n`, in length-lex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n);

}  // namespace freehopf
