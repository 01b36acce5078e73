#include "qpsturm/lyndon.hpp"

#include <algorithm>

#include "qpsturm/errors.hpp"

namespace qpsturm {

namespace {

// z[i] = length of the longest common prefix of t and t[i, n).
std::vector<std::size_t> z_array(std::string_view t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0;
  std::size_t r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && t[z[i]] == t[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace

std::string_view to_string(LyndonStatus::Outcome o) noexcept {
  return o == LyndonStatus::Outcome::Consistent ? "CONSISTENT" : "REFUTED";
}

bool is_lyndon(const Word& w, LetterOrder order) {
  if (w.empty()) throw EmptyInput("Lyndon test expects a nonempty word");
  // Duval's scan: w is Lyndon iff the scan consumes all of w with the
  // current period equal to |w|.
  const std::size_t n = w.size();
  std::size_t k = 0;
  std::size_t j = 1;
  while (j < n) {
    const int lhs = rank(w[k], order);
    const int rhs = rank(w[j], order);
    if (lhs > rhs) return false;
    k = lhs < rhs ? 0 : k + 1;
    ++j;
  }
  return k == 0;
}

bool is_unbordered(const Word& w) {
  if (w.empty()) throw EmptyInput("border test expects a nonempty word");
  return border_array(w.view())[w.size()] == 0;
}

LyndonStatus lyndon_prefix_status(const Word& prefix, LetterOrder order) {
  if (prefix.size() < 2) throw InvalidArgument("Lyndon prefix status needs N >= 2");
  const auto z = z_array(prefix.view());
  const std::size_t n = prefix.size();
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t lcp = z[i];
    if (i + lcp == n) continue;  // equal up to the cut
    if (rank(prefix[i + lcp], order) < rank(prefix[lcp], order)) {
      return LyndonStatus::refuted_at(i);
    }
  }
  return {};
}

LyndonStatus lyndon_prefix_status(const WordStream& s, std::size_t n, LetterOrder order,
                                  std::size_t budget) {
  if (n < 2) throw InvalidArgument("Lyndon prefix status needs N >= 2");
  return lyndon_prefix_status(s.prefix(n, budget), order);
}

bool preserves_lyndon(const GeneratorWord& gw, std::size_t cap) {
  const NormalizedWord nw = normalize_E(gw);
  if (nw.flip) return false;
  const auto over_la_rb = [](const GeneratorWord& w) {
    return std::all_of(w.begin(), w.end(), [](Generator g) {
      return g == Generator::La || g == Generator::Rb;
    });
  };
  const auto closure = relation_closure(nw.core, cap);
  return std::any_of(closure.begin(), closure.end(), over_la_rb);
}

}  // namespace qpsturm
