#ifndef QPSTURM_LYNDON_HPP_
#define QPSTURM_LYNDON_HPP_

#include <cstddef>
#include <string_view>

#include "qpsturm/morphism.hpp"
#include "qpsturm/stream.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm {

// Strictly smaller than each proper suffix under the order. Single letters
// are Lyndon; throws EmptyInput for the empty word.
bool is_lyndon(const Word& w, LetterOrder order);

// No nonempty proper border. Throws EmptyInput for the empty word.
bool is_unbordered(const Word& w);

// Infinite-word Lyndon test seen through a prefix. CONSISTENT is evidence
// only: a comparison that runs off the end of the prefix refutes nothing.
struct LyndonStatus {
  enum class Outcome { Consistent, Refuted };

  Outcome outcome = Outcome::Consistent;
  std::size_t position = 0;  // meaningful when Refuted

  bool consistent() const noexcept { return outcome == Outcome::Consistent; }

  static LyndonStatus refuted_at(std::size_t i) { return {Outcome::Refuted, i}; }

  friend bool operator==(const LyndonStatus&, const LyndonStatus&) = default;
};

std::string_view to_string(LyndonStatus::Outcome o) noexcept;

// Refuted(i) for the least i >= 1 with P[i, N) < P[0, N - i).
LyndonStatus lyndon_prefix_status(const Word& prefix, LetterOrder order);

LyndonStatus lyndon_prefix_status(const WordStream& s, std::size_t n, LetterOrder order,
                                  std::size_t budget = kDefaultPairBudget);

// Whether the morphism maps Lyndon words over a < b to Lyndon words, i.e.
// has no trailing E and is spelled over {La, Rb} modulo the relations.
// For b < a, ask about E gw E instead: conjugation by E exchanges
// {La, Rb} with {Lb, Ra}.
bool preserves_lyndon(const GeneratorWord& gw, std::size_t cap = kDefaultClosureCap);

}  // namespace qpsturm

#endif  // QPSTURM_LYNDON_HPP_
