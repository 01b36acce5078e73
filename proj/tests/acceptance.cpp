// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qpsturm/classify.hpp"
#include "qpsturm/lyndon.hpp"
#include "qpsturm/morphism.hpp"
#include "qpsturm/naive.hpp"
#include "qpsturm/quasiperiod.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/stream.hpp"
#include "qpsturm/sturmian.hpp"

using namespace qpsturm;
using G = Generator;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) note = what;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;
  std::function<void(Outcome&)> body;
};

Word w(std::string_view text) { return parse_word(text); }

WordStream s(std::string_view spec) { return parse_stream(spec); }

bool no_evidence(const WordStream& stream, std::size_t n = 2000, std::size_t lmax = 100) {
  return detect_quasiperiods_stream(stream, n, lmax).found.empty();
}

void golden_quasiperiods(Outcome& o) {
  const Word x = w("abaababaabaababaaba");
  const auto qps = quasiperiods(x);
  o.require(qps == std::vector<Word>{w("aba"), w("abaaba"), w("abaababaaba")}, "quasiperiod set");
  std::vector<Word> primitive;
  for (const Word& u : qps) {
    if (is_superprimitive(u)) primitive.push_back(u);
  }
  o.require(primitive == std::vector<Word>{w("aba")}, "superprimitive member");
}

void fibonacci(Outcome& o) {
  const Word x = s("fixedpoint:a=ab,b=a").prefix(512);
  const Word y = s("directive:per=[(1,0)(1,0)]").prefix(512);
  o.require(x == y, "constructions differ");
  const auto r = detect_quasiperiods_stream(WordStream::fibonacci(), 1000, 50);
  o.require(r.smallest == w("aba"), "smallest quasiperiod");
}

void exactly_n(Outcome& o) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Word head;
    for (std::size_t k = 0; k < n; ++k) head += w("ab");
    head += w("a");
    const auto r = detect_quasiperiods_stream(WordStream::periodic(head, w("ab")), 2000, 100);
    o.require(r.found.size() == n, "n=" + std::to_string(n) + " found " +
                                       std::to_string(r.found.size()));
  }
}

void presentation(Outcome& o) {
  for (std::size_t n = 0; n <= 5; ++n) {
    GeneratorWord x{G::La}, y{G::Ra}, u{G::Lb}, v{G::Rb};
    x.insert(x.end(), n, G::Lb);
    y.insert(y.end(), n, G::Rb);
    u.insert(u.end(), n, G::La);
    v.insert(v.end(), n, G::Ra);
    x.push_back(G::Ra);
    y.push_back(G::La);
    u.push_back(G::Rb);
    v.push_back(G::Lb);
    o.require(morphism_of(x) == morphism_of(y), "La Lb^n Ra, n=" + std::to_string(n));
    o.require(morphism_of(u) == morphism_of(v), "Lb La^n Rb, n=" + std::to_string(n));
  }
  o.require(morphism_of({G::E, G::E}) == BinaryMorphism::identity(), "EE");
  o.require(morphism_of({G::E, G::La}) == morphism_of({G::Lb, G::E}), "E La");
  o.require(morphism_of({G::E, G::Ra}) == morphism_of({G::Rb, G::E}), "E Ra");
}

void oracle_equivalence(Outcome& o) {
  const auto words = naive::words_up_to(14);
  o.require(words.size() == 32766, "word count");
  for (const Word& x : words) {
    if (quasiperiods(x) != naive::quasiperiods(x)) {
      o.require(false, x.str());
      return;
    }
  }
}

void three_way(Outcome& o) {
  constexpr std::size_t n = 5000;
  std::size_t members = 0;
  for (std::size_t d1 = 1; d1 <= 2; ++d1) {
    for (std::size_t c1 = 0; c1 <= d1; ++c1) {
      for (std::size_t d2 = 1; d2 <= 2; ++d2) {
        for (std::size_t c2 = 0; c2 <= d2; ++c2) {
          const DirectiveSequence seq{{}, {{{d1, c1}, {d2, c2}}}};
          if (validate_directive(seq)) continue;
          ++members;
          const Word prefix = sturmian_prefix(seq, n);
          const bool evidence = !detect_quasiperiods(prefix, 100).found.empty();
          const auto family = nonquasiperiodic_family(seq);
          const std::string name = to_string(seq);
          if (family) {
            o.require(!evidence, name + ": evidence for a non-quasiperiodic word");
            o.require(lyndon_prefix_status(prefix, lyndon_order(*family)).consistent(),
                      name + ": refuted under the matched order");
          } else {
            o.require(evidence, name + ": no evidence for a quasiperiodic word");
            o.require(!lyndon_prefix_status(prefix, LetterOrder::AB).consistent() &&
                          !lyndon_prefix_status(prefix, LetterOrder::BA).consistent(),
                      name + ": not refuted under both orders");
          }
        }
      }
    }
  }
  o.note = o.ok ? std::to_string(members) + " sequences" : o.note;
}

void thue_morse(Outcome& o) {
  const WordStream t = WordStream::thue_morse();
  o.require(is_overlap_free(t.prefix(2048)), "overlap");
  o.require(no_evidence(t, 2048, 64), "evidence reported");
}

void classification_table(Outcome& o) {
  using C = Classification;
  const std::pair<std::string_view, C> plain[] = {
      {"La Lb", C::StronglyQuasiperiodic},    {"Lb La", C::StronglyQuasiperiodic},
      {"La Ra", C::WeaklyQuasiperiodic},      {"Lb Rb", C::WeaklyQuasiperiodic},
      {"Ra Rb Ra", C::StronglyQuasiperiodic}, {"Ra La Rb", C::StronglyQuasiperiodic},
      {"La", C::WeaklyQuasiperiodic},         {"Rb", C::WeaklyQuasiperiodic},
      {"La Rb", C::WeaklyQuasiperiodic},      {"E", C::QuasiperiodFree},
      {"", C::QuasiperiodFree},
  };
  for (const auto& [text, expected] : plain) {
    o.require(classify(parse_generators(text)) == expected, "[" + std::string(text) + "]");
  }
  using O = OnSturmianClassification;
  const std::pair<std::string_view, O> on[] = {
      {"La Ra", O::StronglyOnSturmian},
      {"La Rb", O::WeaklyOnSturmian},
      {"La", O::WeaklyOnSturmian},
  };
  for (const auto& [text, expected] : on) {
    o.require(classify_on_sturmian(parse_generators(text)) == expected,
              "on-Sturmian [" + std::string(text) + "]");
  }
}

void strong_iff_pattern(Outcome& o) {
  std::map<std::pair<std::string, std::string>, Classification> by_morphism;
  std::size_t words = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const GeneratorWord& gw :
         naive::generator_words(len, {G::La, G::Lb, G::Ra, G::Rb})) {
      ++words;
      const Classification c = classify(gw);
      o.require((c == Classification::StronglyQuasiperiodic) == forbidden_witness(gw).has_value(),
                "witness mismatch on [" + to_string(gw) + "]");
      const BinaryMorphism m = morphism_of(gw);
      const auto [it, fresh] = by_morphism.emplace(
          std::make_pair(m.image_a().str(), m.image_b().str()), c);
      o.require(fresh || it->second == c, "class split on [" + to_string(gw) + "]");
    }
  }
  o.require(words == 5460, "word count");
}

void fixture_guards(Outcome& o) {
  const BinaryMorphism g(w("abab"), w("aaaa"));
  for (std::string_view spec : {"periodic:ab,a", "periodic:b,a", "directive:per=[(1,0)(1,1)]",
                                "directive:per=[(1,1)(1,0)]"}) {
    o.require(no_evidence(WordStream::image(g, s(spec))), "g on " + std::string(spec));
  }
  const WordStream unbalanced = s("periodic:abab,aaab");
  o.require(no_evidence(unbalanced), "abab(aaab)^w evidenced");
  const auto image = detect_quasiperiods_stream(
      WordStream::image(generator_image(G::La), unbalanced), 2000, 100);
  o.require(image.smallest == w("aabaa"), "La image smallest");
  const WordStream lara = WordStream::image(morphism_of({G::La, G::Ra}), s("periodic:b,a"));
  o.require(lara.prefix(2000) == s("periodic:ab,a").prefix(2000), "LaRa(ba^w) != aba^w");
  o.require(no_evidence(lara), "LaRa(ba^w) evidenced");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden quasiperiods of abaababaabaababaaba", 1.0, golden_quasiperiods},
      {2, "fibonacci constructions agree; smallest evidence aba", 1000.0, fibonacci},
      {3, "(ab)^n a (ab)^w has exactly n quasiperiods, n = 1..5", 2000.0, exactly_n},
      {4, "presentation relations hold on images", 10.0, presentation},
      {5, "quasiperiods equal the naive oracle on all words up to length 14", 30000.0,
       oracle_equivalence},
      {6, "exact decision, evidence and Lyndon status agree on the single-pair family",
       120000.0, three_way},
      {7, "thue-morse prefix 2048 overlap-free with no evidence", 5000.0, thue_morse},
      {8, "classification table", 1000.0, classification_table},
      {9, "STRONGLY iff forbidden factor; constant on morphism classes", 120000.0,
       strong_iff_pattern},
      {10, "fixture guards", 5000.0, fixture_guards},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (outcome.ok && ms > c.limit_ms) {
      outcome.ok = false;
      outcome.note = "over time limit";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f ms, limit %.0f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                c.id, c.title.c_str(), ms, c.limit_ms, outcome.note.empty() ? "" : ": ",
                outcome.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
