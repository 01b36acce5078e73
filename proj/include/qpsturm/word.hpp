#ifndef QPSTURM_WORD_HPP_
#define QPSTURM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qpsturm {

enum class Letter : std::uint8_t { A, B };

constexpr char to_char(Letter x) noexcept { return x == Letter::A ? 'a' : 'b'; }

constexpr Letter exchange(Letter x) noexcept {
  return x == Letter::A ? Letter::B : Letter::A;
}

// Total order on the two letters; extends lexicographically to words.
enum class LetterOrder : std::uint8_t { AB, BA };

constexpr LetterOrder reverse(LetterOrder o) noexcept {
  return o == LetterOrder::AB ? LetterOrder::BA : LetterOrder::AB;
}

// Rank of a letter under an order: 0 for the smaller letter.
constexpr int rank(Letter x, LetterOrder o) noexcept {
  int r = x == Letter::A ? 0 : 1;
  return o == LetterOrder::AB ? r : 1 - r;
}

std::string_view to_string(LetterOrder o) noexcept;  // "ab" / "ba"

// A finite word over {a, b}. Stored as its ASCII text so that views and
// hashing come for free; every constructor keeps the text within {a, b}.
class Word {
 public:
  Word() = default;

  static Word repeat(Letter x, std::size_t count);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    return text_[i] == 'a' ? Letter::A : Letter::B;
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[size() - 1]; }

  std::string_view view() const noexcept { return text_; }
  const std::string& str() const noexcept { return text_; }

  // Clamped to the available length.
  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const;

  bool starts_with(const Word& u) const noexcept {
    return view().substr(0, u.size()) == u.view();
  }

  void reserve(std::size_t n) { text_.reserve(n); }
  Word& push_back(Letter x) {
    text_.push_back(to_char(x));
    return *this;
  }
  Word& append(const Word& w) {
    text_.append(w.text_);
    return *this;
  }
  Word& operator+=(const Word& w) { return append(w); }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs.append(rhs); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.text_;
  }

 private:
  friend Word parse_word(std::string_view text);
  std::string text_;
};

// Maps 'a' -> A and 'b' -> B; throws InvalidCharacter for anything else.
Word parse_word(std::string_view text);

std::size_t count_letter(const Word& w, Letter x) noexcept;

// Exchanges the two letters (the image of w under E).
Word exchange(const Word& w);

// Failure function: border[i] is the length of the longest proper border of
// w[0, i). border[0] is 0 by convention.
std::vector<std::size_t> border_array(std::string_view w);

// Start positions of every occurrence of pattern in text, ascending.
// Knuth-Morris-Pratt, linear in |pattern| + |text|. Throws EmptyPattern.
std::vector<std::size_t> occurrences(const Word& pattern, const Word& text);

// Nonempty proper borders of w in increasing length.
std::vector<Word> proper_borders(const Word& w);

// Any two factors of equal length differ by at most one in their count of a.
bool is_balanced(const Word& w);

// Lexicographic comparison under the given letter order.
std::strong_ordering compare(const Word& u, const Word& v, LetterOrder order) noexcept;

}  // namespace qpsturm

#endif  // QPSTURM_WORD_HPP_
