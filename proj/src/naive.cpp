#include "qpsturm/naive.hpp"

#include <algorithm>
#include <set>

namespace qpsturm::naive {

std::vector<Word> words_of_length(std::size_t length) {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << length;
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back((bits >> (length - 1 - i)) & 1 ? Letter::B : Letter::A);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    auto layer = words_of_length(len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<GeneratorWord> generator_words(std::size_t length,
                                           const std::vector<Generator>& alphabet) {
  std::vector<GeneratorWord> out{GeneratorWord{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<GeneratorWord> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out) {
      for (Generator g : alphabet) {
        next.push_back(w);
        next.back().push_back(g);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> occurrences(const Word& pattern, const Word& text) {
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
    bool match = true;
    for (std::size_t k = 0; k < pattern.size() && match; ++k) match = text[p + k] == pattern[k];
    if (match) out.push_back(p);
  }
  return out;
}

std::vector<Word> borders(const Word& w) {
  std::vector<Word> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.substr(0, len) == w.substr(w.size() - len)) out.push_back(w.substr(0, len));
  }
  return out;
}

std::vector<Word> quasiperiods(const Word& w) {
  std::set<Word> factors;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) factors.insert(w.substr(i, len));
  }
  factors.erase(w);

  std::vector<Word> out;
  for (const Word& u : factors) {
    std::vector<bool> covered(w.size(), false);
    for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
      if (w.substr(p, u.size()) != u) continue;
      for (std::size_t k = 0; k < u.size(); ++k) covered[p + k] = true;
    }
    if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) out.push_back(u);
  }
  std::sort(out.begin(), out.end(),
            [](const Word& x, const Word& y) { return x.size() < y.size(); });
  return out;
}

bool is_lyndon(const Word& w, LetterOrder order) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (compare(w.substr(i), w, order) != std::strong_ordering::greater) return false;
  }
  return !w.empty();
}

bool is_balanced(const Word& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      for (std::size_t j = 0; j + len <= w.size(); ++j) {
        const auto ci = static_cast<long>(count_letter(w.substr(i, len), Letter::A));
        const auto cj = static_cast<long>(count_letter(w.substr(j, len), Letter::A));
        if (ci - cj > 1 || cj - ci > 1) return false;
      }
    }
  }
  return true;
}

bool is_overlap_free(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t p = 1; i + 2 * p < w.size(); ++p) {
      bool overlap = true;
      for (std::size_t k = 0; k <= p && overlap; ++k) overlap = w[i + k] == w[i + p + k];
      if (overlap) return false;
    }
  }
  return true;
}

Word substitute(const Word& image_a, const Word& image_b, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out += w[i] == Letter::A ? image_a : image_b;
  return out;
}

}  // namespace qpsturm::naive
