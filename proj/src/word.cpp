#include "qpsturm/word.hpp"

#include <algorithm>

#include "qpsturm/errors.hpp"

namespace qpsturm {

std::string_view to_string(LetterOrder o) noexcept {
  return o == LetterOrder::AB ? "ab" : "ba";
}

Word Word::repeat(Letter x, std::size_t count) {
  Word w;
  w.text_.assign(count, to_char(x));
  return w;
}

Word Word::prefix(std::size_t n) const { return substr(0, n); }

Word Word::substr(std::size_t pos, std::size_t n) const {
  Word w;
  if (pos < text_.size()) w.text_ = text_.substr(pos, n);
  return w;
}

Word parse_word(std::string_view text) {
  Word w;
  w.text_.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != 'a' && c != 'b') throw InvalidCharacter(i, c);
    w.text_.push_back(c);
  }
  return w;
}

std::size_t count_letter(const Word& w, Letter x) noexcept {
  return static_cast<std::size_t>(std::count(w.view().begin(), w.view().end(), to_char(x)));
}

Word exchange(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r.push_back(exchange(w[i]));
  return r;
}

std::vector<std::size_t> border_array(std::string_view w) {
  std::vector<std::size_t> border(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return border;
}

std::vector<std::size_t> occurrences(const Word& pattern, const Word& text) {
  if (pattern.empty()) throw EmptyPattern();
  std::vector<std::size_t> result;
  if (pattern.size() > text.size()) return result;

  const std::string_view p = pattern.view();
  const std::string_view t = text.view();
  const auto border = border_array(p);
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    while (k > 0 && t[i] != p[k]) k = border[k];
    if (t[i] == p[k]) ++k;
    if (k == p.size()) {
      result.push_back(i + 1 - p.size());
      k = border[k];
    }
  }
  return result;
}

std::vector<Word> proper_borders(const Word& w) {
  std::vector<Word> result;
  if (w.empty()) return result;
  const auto border = border_array(w.view());
  for (std::size_t len = border[w.size()]; len > 0; len = border[len]) {
    result.push_back(w.prefix(len));
  }
  std::reverse(result.begin(), result.end());
  return result;
}

bool is_balanced(const Word& w) {
  const std::size_t n = w.size();
  // prefix_a[i] = |w[0, i)|_a
  std::vector<std::size_t> prefix_a(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix_a[i + 1] = prefix_a[i] + (w[i] == Letter::A);

  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo = prefix_a[len];
    std::size_t hi = lo;
    for (std::size_t start = 1; start + len <= n; ++start) {
      std::size_t c = prefix_a[start + len] - prefix_a[start];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

std::strong_ordering compare(const Word& u, const Word& v, LetterOrder order) noexcept {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return rank(u[i], order) <=> rank(v[i], order);
  }
  return u.size() <=> v.size();
}

}  // namespace qpsturm
