#include "qpsturm/quasiperiod.hpp"

#include <algorithm>

#include "qpsturm/errors.hpp"

namespace qpsturm {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::EvidenceQuasiperiodic:
      return "EVIDENCE_QUASIPERIODIC";
    case Verdict::NoQuasiperiodDetected:
      return "NO_QUASIPERIOD_DETECTED";
    case Verdict::ExactQuasiperiodic:
      return "EXACT_QUASIPERIODIC";
    case Verdict::ExactNonQuasiperiodic:
      return "EXACT_NON_QUASIPERIODIC";
  }
  return "";
}

std::size_t covered_prefix_length(const Word& u, const Word& w) {
  if (u.empty()) throw EmptyInput("quasiperiod candidate must be nonempty");
  if (!w.starts_with(u)) return 0;
  std::size_t end = u.size();
  for (std::size_t p : occurrences(u, w)) {
    if (p > end) break;
    end = std::max(end, p + u.size());
  }
  return end;
}

bool covers(const Word& u, const Word& w) {
  if (u.empty() || w.empty()) throw EmptyInput("covers expects nonempty words");
  return covered_prefix_length(u, w) == w.size();
}

std::vector<Word> quasiperiods(const Word& w) {
  if (w.empty()) throw EmptyInput("quasiperiods of the empty word are undefined");
  std::vector<Word> result;
  for (Word& u : proper_borders(w)) {
    if (covers(u, w)) result.push_back(std::move(u));
  }
  return result;
}

bool is_superprimitive(const Word& w) { return quasiperiods(w).empty(); }

std::optional<Word> smallest_quasiperiod(const Word& w) {
  auto qs = quasiperiods(w);
  if (qs.empty()) return std::nullopt;
  return std::move(qs.front());
}

QuasiperiodReport detect_quasiperiods(const Word& prefix, std::size_t max_length) {
  if (max_length == 0 || max_length >= prefix.size()) {
    throw InvalidArgument("quasiperiod search bound must satisfy 1 <= bound < prefix length");
  }
  QuasiperiodReport report;
  report.prefix_length_analyzed = prefix.size();
  report.candidates_bound = max_length;
  for (std::size_t len = 1; len <= max_length; ++len) {
    Word u = prefix.prefix(len);
    const std::size_t covered = covered_prefix_length(u, prefix);
    if (covered + len >= prefix.size()) report.found.push_back({std::move(u), covered});
  }
  if (report.found.empty()) {
    report.verdict = Verdict::NoQuasiperiodDetected;
  } else {
    report.smallest = report.found.front().quasiperiod;
    report.verdict = Verdict::EvidenceQuasiperiodic;
  }
  return report;
}

QuasiperiodReport detect_quasiperiods_stream(const WordStream& s, std::size_t n,
                                             std::size_t max_length, std::size_t budget) {
  if (max_length == 0 || max_length >= n) {
    throw InvalidArgument("quasiperiod search bound must satisfy 1 <= bound < prefix length");
  }
  return detect_quasiperiods(s.prefix(n, budget), max_length);
}

bool is_overlap_free(const Word& w) {
  const auto t = w.view();
  const std::size_t n = t.size();
  // An overlap with period p is a run of p + 1 consecutive i with
  // t[i] == t[i + p].
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + p < n; ++i) {
      run = t[i] == t[i + p] ? run + 1 : 0;
      if (run == p + 1) return false;
    }
  }
  return true;
}

}  // namespace qpsturm
