#ifndef QPSTURM_NAIVE_HPP_
#define QPSTURM_NAIVE_HPP_

// Brute-force reference implementations straight from the definitions.
// They share nothing with the production routes beyond Word itself and are
// used only by the verify harness and the tests.

#include <cstddef>
#include <vector>

#include "qpsturm/morphism.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm::naive {

// All words over {a, b} of exactly `length` letters, in lexicographic order.
std::vector<Word> words_of_length(std::size_t length);

// All nonempty words of length at most max_length.
std::vector<Word> words_up_to(std::size_t max_length);

// All words of `length` letters over the given generators.
std::vector<GeneratorWord> generator_words(std::size_t length,
                                           const std::vector<Generator>& alphabet);

std::vector<std::size_t> occurrences(const Word& pattern, const Word& text);

std::vector<Word> borders(const Word& w);

// Every distinct factor u != w, checked position by position.
std::vector<Word> quasiperiods(const Word& w);

bool is_lyndon(const Word& w, LetterOrder order);

bool is_balanced(const Word& w);

bool is_overlap_free(const Word& w);

// Letter-by-letter substitution with no truncation.
Word substitute(const Word& image_a, const Word& image_b, const Word& w);

}  // namespace qpsturm::naive

#endif  // QPSTURM_NAIVE_HPP_
