#include "qpsturm/sturmian.hpp"

#include <algorithm>
#include <limits>

#include "qpsturm/errors.hpp"
#include "qpsturm/quasiperiod.hpp"

namespace qpsturm {

namespace {

std::size_t common_prefix_length(const Word& u, const Word& v) {
  const auto a = u.view();
  const auto b = v.view();
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

// f(w) cut to its first `limit` letters. A
// truncated image of a letter is a prefix of the true one, and the prefix of
// a concatenation only needs the first `limit` letters of each factor.
Word apply_truncated(const BinaryMorphism& f, const Word& w, std::size_t limit) {
  Word out;
  for (std::size_t i = 0; i < w.size() && out.size() < limit; ++i) {
    out.append(f.image(w[i]));
  }
  return out.prefix(limit);
}

}  // namespace

const BlockPair& DirectiveSequence::pair(std::size_t m) const {
  return m < preperiod.size() ? preperiod[m] : period[(m - preperiod.size()) % period.size()];
}

Block DirectiveSequence::block(std::size_t k) const {
  const BlockPair& p = pair((k - 1) / 2);
  return (k - 1) % 2 == 0 ? p.a_block : p.b_block;
}

std::optional<DirectiveViolation> validate_directive(const DirectiveSequence& seq) {
  if (seq.period.empty()) return DirectiveViolation{0, "period must be nonempty"};
  // Two copies of the period expose every transition, wraparound included.
  const std::size_t blocks = 2 * (seq.preperiod.size() + 2 * seq.period.size());
  for (std::size_t k = 1; k <= blocks; ++k) {
    const Block b = seq.block(k);
    if (b.c > b.d) return DirectiveViolation{k, "c_k must not exceed d_k"};
    if (k >= 2 && b.d == 0) return DirectiveViolation{k, "d_k must be at least 1 for k >= 2"};
    if (k >= 2 && b.d > 0 && b.c == b.d && seq.block(k - 1).c != 0) {
      return DirectiveViolation{k, "c_k = d_k requires c_{k-1} = 0"};
    }
  }
  return std::nullopt;
}

void require_valid(const DirectiveSequence& seq) {
  if (auto v = validate_directive(seq)) throw InvalidDirective(v->block_index, v->message);
}

GeneratorWord directive_to_generators(const DirectiveSequence& seq, std::size_t pairs) {
  GeneratorWord gw;
  for (std::size_t k = 1; k <= 2 * pairs; ++k) {
    const Block b = seq.block(k);
    const bool odd = k % 2 == 1;
    gw.insert(gw.end(), b.d - b.c, odd ? Generator::La : Generator::Lb);
    gw.insert(gw.end(), b.c, odd ? Generator::Ra : Generator::Rb);
  }
  return gw;
}

Word sturmian_prefix(const DirectiveSequence& seq, std::size_t n, std::size_t budget) {
  if (n == 0) throw InvalidArgument("prefix length must be at least 1");
  require_valid(seq);

  // composed = F_m, images truncated to n letters.
  BinaryMorphism composed = BinaryMorphism::identity();
  for (std::size_t m = 1; m <= budget; ++m) {
    const BinaryMorphism pair = morphism_of(directive_to_generators(
        DirectiveSequence{{}, {seq.pair(m - 1)}}, 1));
    composed = BinaryMorphism(apply_truncated(composed, pair.image_a(), n),
                              apply_truncated(composed, pair.image_b(), n));
    if (common_prefix_length(composed.image_a(), composed.image_b()) >= n) {
      return composed.image_a().prefix(n);
    }
  }
  throw GenerationStalled(budget);
}

bool is_standard(const DirectiveSequence& seq) {
  auto all_zero = [](const std::vector<BlockPair>& pairs) {
    return std::all_of(pairs.begin(), pairs.end(), [](const BlockPair& p) {
      return p.a_block.c == 0 && p.b_block.c == 0;
    });
  };
  return all_zero(seq.preperiod) && all_zero(seq.period);
}

std::optional<NonQuasiperiodicFamily> nonquasiperiodic_family(const DirectiveSequence& seq) {
  bool la_rb = true;
  bool lb_ra = true;
  const std::size_t blocks = 2 * (seq.preperiod.size() + seq.period.size());
  for (std::size_t k = 1; k <= blocks; ++k) {
    const Block b = seq.block(k);
    if (b.d == 0) continue;
    const bool only_l = b.c == 0;
    const bool only_r = b.c == b.d;
    if (k % 2 == 1) {
      la_rb = la_rb && only_l;
      lb_ra = lb_ra && only_r;
    } else {
      la_rb = la_rb && only_r;
      lb_ra = lb_ra && only_l;
    }
  }
  if (la_rb) return NonQuasiperiodicFamily::LaRb;
  if (lb_ra) return NonQuasiperiodicFamily::LbRa;
  return std::nullopt;
}

LetterOrder lyndon_order(NonQuasiperiodicFamily family) noexcept {
  return family == NonQuasiperiodicFamily::LaRb ? LetterOrder::AB : LetterOrder::BA;
}

std::string_view to_string(NonQuasiperiodicFamily family) noexcept {
  return family == NonQuasiperiodicFamily::LaRb ? "La,Rb" : "Lb,Ra";
}

QuasiperiodReport exact_report(const DirectiveSequence& seq, std::size_t n,
                               std::size_t max_length, std::size_t budget) {
  QuasiperiodReport report = detect_quasiperiods(sturmian_prefix(seq, n, budget), max_length);
  const bool nonqp = is_nonquasiperiodic(seq);
  if (nonqp && !report.found.empty()) {
    throw InvalidArgument("prefix evidence contradicts the exact decision: candidate " +
                          report.found.front().quasiperiod.str() +
                          " on a non-quasiperiodic word");
  }
  if (!nonqp && report.found.empty()) {
    throw InvalidArgument(
        "no quasiperiod candidate within the search bound for a quasiperiodic word");
  }
  report.verdict = nonqp ? Verdict::ExactNonQuasiperiodic : Verdict::ExactQuasiperiodic;
  return report;
}

ShapeReport check_shape(const Word& prefix) {
  std::vector<std::size_t> b_positions;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == Letter::B) b_positions.push_back(i);
  }
  if (b_positions.size() < 2) throw TooFewBs();

  ShapeReport report;
  report.i = b_positions.front();
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (std::size_t j = 1; j < b_positions.size(); ++j) {
    const std::size_t run = b_positions[j] - b_positions[j - 1] - 1;
    lo = std::min(lo, run);
    hi = std::max(hi, run);
  }
  report.n = lo;
  report.conforms = hi <= lo + 1 && report.i <= lo + 1;
  if (report.conforms && report.i > 0 && report.i <= report.n) {
    Word q = Word::repeat(Letter::A, report.i);
    q.push_back(Letter::B);
    q.append(Word::repeat(Letter::A, report.n - report.i + 1));
    report.predicted_quasiperiod = std::move(q);
  }
  return report;
}

}  // namespace qpsturm
