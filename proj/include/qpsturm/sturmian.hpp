#ifndef QPSTURM_STURMIAN_HPP_
#define QPSTURM_STURMIAN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpsturm/morphism.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm {

struct QuasiperiodReport;

// One block (d_k, c_k) of a directive sequence, with d >= c >= 0. An odd
// block k expands to La^(d-c) Ra^c, an even block to Lb^(d-c) Rb^c.
struct Block {
  std::size_t d = 0;
  std::size_t c = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

// An odd (a-type) block followed by an even (b-type) block.
struct BlockPair {
  Block a_block;
  Block b_block;

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

// Eventually periodic directive sequence: preperiod, then period repeated
// forever. Pairs keep the parity of k aligned across the repetition.
struct DirectiveSequence {
  std::vector<BlockPair> preperiod;
  std::vector<BlockPair> period;

  // Pair m (0-based) of the infinite sequence.
  const BlockPair& pair(std::size_t m) const;

  // Block k (1-based) of the flattened infinite sequence.
  Block block(std::size_t k) const;

  friend bool operator==(const DirectiveSequence&, const DirectiveSequence&) = default;
};

struct DirectiveViolation {
  std::size_t block_index;  // 1-based k
  std::string message;
};

// Checks d_k >= c_k, d_k >= 1 for k >= 2, and c_k = d_k => c_{k-1} = 0,
// including across the wraparound of the period. Returns the first
// violation, if any.
std::optional<DirectiveViolation> validate_directive(const DirectiveSequence& seq);

// Throws InvalidDirective on the first violation.
void require_valid(const DirectiveSequence& seq);

GeneratorWord directive_to_generators(const DirectiveSequence& seq, std::size_t pairs);

inline constexpr std::size_t kDefaultPairBudget = 64;

// Length-n prefix of lim F_m(a), F_m the composition of the first m pairs.
// A prefix is accepted once the images F_m(a) and F_m(b) agree on it: every
// later F_{m'}(a) is F_m applied to a nonempty word and so starts with it.
// Throws GenerationStalled when budget pairs do not suffice.
Word sturmian_prefix(const DirectiveSequence& seq, std::size_t n,
                     std::size_t budget = kDefaultPairBudget);

// Every block has c = 0.
bool is_standard(const DirectiveSequence& seq);

// Which of the two letter-alternating families an infinite decomposition
// falls into, when it does.
enum class NonQuasiperiodicFamily { LaRb, LbRa };

// Exact decision: the sequence decomposes infinitely over {La, Rb} (odd
// blocks c = 0, even blocks c = d) or over {Lb, Ra} (odd c = d, even c = 0).
// Blocks with d = 0 constrain neither family.
std::optional<NonQuasiperiodicFamily> nonquasiperiodic_family(const DirectiveSequence& seq);

inline bool is_nonquasiperiodic(const DirectiveSequence& seq) {
  return nonquasiperiodic_family(seq).has_value();
}

// The order under which a non-quasiperiodic word of this family is an
// infinite Lyndon word: a < b for {La, Rb}, b < a for {Lb, Ra}.
LetterOrder lyndon_order(NonQuasiperiodicFamily family) noexcept;

std::string_view to_string(NonQuasiperiodicFamily family) noexcept;

// Evidence report on sturmian_prefix(seq, n) with its verdict replaced by
// the exact decision. Throws InvalidArgument when the prefix evidence
// contradicts the decision (no candidate up to max_length for a
// quasiperiodic word, or a candidate for a non-quasiperiodic one).
QuasiperiodReport exact_report(const DirectiveSequence& seq, std::size_t n,
                               std::size_t max_length,
                               std::size_t budget = kDefaultPairBudget);

struct ShapeReport {
  bool conforms = false;
  std::size_t i = 0;  // initial run of a
  std::size_t n = 0;  // least run of a strictly between two b
  std::optional<Word> predicted_quasiperiod;
};

// Run-length analysis of a prefix against a^i {b a^n, b a^(n+1)}^omega.
// Throws TooFewBs when the prefix has fewer than two b.
ShapeReport check_shape(const Word& prefix);

}  // namespace qpsturm

#endif  // QPSTURM_STURMIAN_HPP_
