#ifndef QPSTURM_QUASIPERIOD_HPP_
#define QPSTURM_QUASIPERIOD_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qpsturm/stream.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm {

// EVIDENCE/NO_DETECTION come from finite prefixes; EXACT verdicts only from
// exact_report() on a directive sequence.
enum class Verdict {
  EvidenceQuasiperiodic,
  NoQuasiperiodDetected,
  ExactQuasiperiodic,
  ExactNonQuasiperiodic,
};

std::string_view to_string(Verdict v) noexcept;

struct QuasiperiodEvidence {
  Word quasiperiod;
  std::size_t covered_length = 0;

  friend bool operator==(const QuasiperiodEvidence&, const QuasiperiodEvidence&) = default;
};

struct QuasiperiodReport {
  std::size_t prefix_length_analyzed = 0;
  std::size_t candidates_bound = 0;
  std::vector<QuasiperiodEvidence> found;  // ascending by length
  std::optional<Word> smallest;
  Verdict verdict = Verdict::NoQuasiperiodDetected;
};

// Every position of w lies inside an occurrence of u. Throws EmptyInput.
bool covers(const Word& u, const Word& w);

// End of the chain of occurrences of u in w that starts at position 0 and
// extends while the next occurrence starts no later than the current end;
// 0 when u is not a prefix of w. Throws EmptyInput for empty u.
std::size_t covered_prefix_length(const Word& u, const Word& w);

// Proper borders of w that cover w, by increasing length.
std::vector<Word> quasiperiods(const Word& w);

bool is_superprimitive(const Word& w);

std::optional<Word> smallest_quasiperiod(const Word& w);

// Prefix-scale evidence on a finite prefix: every prefix u of length at most
// max_length whose covering chain reaches |prefix| - |u|. The final
// occurrence of a genuine covering sequence may straddle the cut, hence the
// slack of |u|. Requires 1 <= max_length < |prefix|.
QuasiperiodReport detect_quasiperiods(const Word& prefix, std::size_t max_length);

QuasiperiodReport detect_quasiperiods_stream(const WordStream& s, std::size_t n,
                                             std::size_t max_length,
                                             std::size_t budget = kDefaultPairBudget);

// No factor x u x u x with x a letter, i.e. no factor of length 2p + 1 with
// period p.
bool is_overlap_free(const Word& w);

}  // namespace qpsturm

#endif  // QPSTURM_QUASIPERIOD_HPP_
