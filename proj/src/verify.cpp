#include "qpsturm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "qpsturm/classify.hpp"
#include "qpsturm/errors.hpp"
#include "qpsturm/lyndon.hpp"
#include "qpsturm/morphism.hpp"
#include "qpsturm/naive.hpp"
#include "qpsturm/quasiperiod.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/stream.hpp"
#include "qpsturm/sturmian.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm {

bool SuiteResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using G = Generator;

// Outcome of a single check: a case count plus the first few failures.
class Probe {
 public:
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (ok) return;
    if (failed_ < kKept) failures_.push_back(describe());
    ++failed_;
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool pass() const noexcept { return failed_ == 0 && cases_ > 0; }

  std::string details() const {
    std::string out;
    if (failed_ == 0) {
      out = std::to_string(cases_) + (cases_ == 1 ? " case" : " cases");
    } else {
      out = std::to_string(failed_) + " of " + std::to_string(cases_) + " cases failed";
      for (const auto& f : failures_) out += "; " + f;
    }
    for (const auto& n : notes_) out += "; " + n;
    return out;
  }

 private:
  static constexpr std::size_t kKept = 3;
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Check {
  std::string id;
  std::string description;
  std::function<void(Probe&)> body;
};

constexpr std::size_t kN = 2000;
constexpr std::size_t kLmax = 100;

constexpr std::string_view kAbaOmega = "periodic:ab,a";
constexpr std::string_view kBaOmega = "periodic:b,a";
constexpr std::string_view kBabOmega = "periodic:ba,b";
constexpr std::string_view kLaRbStream = "directive:per=[(1,0)(1,1)]";
constexpr std::string_view kLbRaStream = "directive:per=[(1,1)(1,0)]";

const std::vector<std::string_view> kNonQuasiperiodicStreams = {kAbaOmega, kBaOmega, kLaRbStream,
                                                                kLbRaStream};

const std::vector<std::string_view> kQuasiperiodicSturmian = {
    "fibonacci",
    "directive:per=[(2,0)(1,0)]",
    "directive:per=[(1,0)(2,1)]",
    "directive:per=[(2,1)(1,0)]",
    "directive:per=[(3,1)(2,0)]",
    "directive:pre=[(1,1)(1,0)]per=[(1,0)(1,0)]",
};

const std::vector<std::string_view> kDirectives = {
    "per=[(1,0)(1,0)]",        "per=[(2,0)(1,0)]",
    "per=[(1,0)(2,1)]",        "per=[(2,1)(1,0)]",
    "per=[(3,1)(2,0)]",        "pre=[(1,1)(1,0)]per=[(1,0)(1,0)]",
    "per=[(1,0)(1,1)]",        "per=[(1,1)(1,0)]",
    "per=[(2,0)(3,3)]",        "pre=[(0,0)(2,2)]per=[(1,0)(3,0)]",
    "per=[(1,0)(2,1)(3,2)(1,0)]",
};

const std::vector<std::string_view> kBuiltinSpecs = {
    "periodic:ab,a", "periodic:,ab",          "fixedpoint:a=ab,b=a",
    "fixedpoint:a=ab,b=ba", kLaRbStream,      "image:La Rb@fibonacci",
    "thue-morse",    "fibonacci",
};

// Streams with an expected smallest quasiperiod, for the prefix-scale checks.
const std::vector<std::string_view> kEvidenceStreams = {
    "fibonacci",
    "directive:per=[(2,0)(1,0)]",
    "directive:per=[(1,0)(2,1)]",
    "periodic:aba,ab",
    "periodic:ababa,ba",
    "image:La Lb@thue-morse",
    "image:a=abab,b=aaaa@fibonacci",
    "image:La Ra@directive:per=[(1,0)(1,1)]",
};

const std::vector<Generator> kCoreGenerators = {G::La, G::Lb, G::Ra, G::Rb};

Word word(std::string_view text) { return parse_word(text); }

WordStream stream(std::string_view spec) { return parse_stream(spec); }

GeneratorWord gens(std::string_view text) { return parse_generators(text); }

std::string show(const GeneratorWord& gw) { return "[" + to_string(gw) + "]"; }

WordStream image_of(const GeneratorWord& gw, const WordStream& s) {
  return WordStream::image(morphism_of(gw), s);
}

QuasiperiodReport detect(const WordStream& s, std::size_t n = kN, std::size_t lmax = kLmax) {
  return detect_quasiperiods_stream(s, n, lmax);
}

bool evidenced(const WordStream& s, std::size_t n = kN, std::size_t lmax = kLmax) {
  return detect(s, n, lmax).verdict == Verdict::EvidenceQuasiperiodic;
}

bool has_quasiperiod(const QuasiperiodReport& r, const Word& u) {
  return std::any_of(r.found.begin(), r.found.end(),
                     [&](const QuasiperiodEvidence& e) { return e.quasiperiod == u; });
}

std::string smallest_text(const QuasiperiodReport& r) {
  return r.smallest ? r.smallest->str() : "none";
}

std::vector<GeneratorWord> core_words_up_to(std::size_t max_length) {
  std::vector<GeneratorWord> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    auto layer = naive::generator_words(len, kCoreGenerators);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

GeneratorWord random_generator_word(std::mt19937_64& rng, std::size_t max_length,
                                    const std::vector<Generator>& alphabet) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  GeneratorWord gw(length(rng));
  for (auto& g : gw) g = alphabet[pick(rng)];
  return gw;
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution coin(0.5);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(coin(rng) ? Letter::B : Letter::A);
  return w;
}

std::string seed_note(std::uint64_t seed) { return "seed " + std::to_string(seed); }

std::set<GeneratorWord> closure_set(const GeneratorWord& gw) {
  const auto members = relation_closure(gw);
  return {members.begin(), members.end()};
}

// ----------------------------------------------------------------------------

std::vector<Check> core_suite(const VerifyOptions&) {
  return {
      {"core.occurrences-oracle",
       "occurrences equals the quadratic scan for every pattern/text pair with |text| <= 8 "
       "and every factor of every text with 9 <= |text| <= 14",
       [](Probe& p) {
         for (const Word& text : naive::words_up_to(8)) {
           for (const Word& pattern : naive::words_up_to(text.size() + 1)) {
             p.expect(occurrences(pattern, text) == naive::occurrences(pattern, text),
                      [&] { return pattern.str() + " in " + text.str(); });
           }
         }
         for (std::size_t len = 9; len <= 14; ++len) {
           for (const Word& text : naive::words_of_length(len)) {
             std::set<Word> factors;
             for (std::size_t i = 0; i < len; ++i) {
               for (std::size_t k = 1; i + k <= len; ++k) factors.insert(text.substr(i, k));
             }
             for (const Word& pattern : factors) {
               p.expect(occurrences(pattern, text) == naive::occurrences(pattern, text),
                        [&] { return pattern.str() + " in " + text.str(); });
             }
           }
         }
       }},
      {"core.borders",
       "proper_borders(w) is exactly the set of nonempty proper prefixes that are also "
       "suffixes, for |w| <= 12",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           const auto borders = proper_borders(w);
           bool ok = borders == naive::borders(w);
           for (const Word& b : borders) {
             ok = ok && b.size() < w.size() && w.starts_with(b) &&
                  w.substr(w.size() - b.size()) == b;
           }
           p.expect(ok, [&] { return w.str(); });
         }
       }},
      {"core.balance-oracle", "is_balanced equals the all-pairs factor comparison for |w| <= 10",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(10)) {
           p.expect(is_balanced(w) == naive::is_balanced(w), [&] { return w.str(); });
         }
       }},
      {"core.empty-word",
       "the empty word has no proper borders and is balanced; an empty pattern is rejected",
       [](Probe& p) {
         p.expect(proper_borders(Word{}).empty(), [] { return std::string("borders"); });
         p.expect(is_balanced(Word{}), [] { return std::string("balance"); });
         bool threw = false;
         try {
           occurrences(Word{}, word("ab"));
         } catch (const EmptyPattern&) {
           threw = true;
         }
         p.expect(threw, [] { return std::string("empty pattern accepted"); });
       }},
      {"core.stream-monotone",
       "prefix(N) is a prefix of prefix(M) for all N <= M <= 512 on every built-in spec",
       [](Probe& p) {
         for (std::string_view spec : kBuiltinSpecs) {
           const WordStream s = stream(spec);
           const Word full = s.prefix(512);
           for (std::size_t n = 1; n <= 512; ++n) {
             p.expect(s.prefix(n) == full.prefix(n),
                      [&] { return std::string(spec) + " at " + std::to_string(n); });
           }
         }
       }},
      {"core.thue-morse-overlap-free",
       "the thue-morse prefix of length 2048 is overlap-free; the quadratic oracle agrees up "
       "to 256",
       [](Probe& p) {
         const Word t = WordStream::thue_morse().prefix(2048);
         p.expect(is_overlap_free(t), [] { return std::string("prefix 2048"); });
         for (std::size_t n = 1; n <= 256; ++n) {
           p.expect(naive::is_overlap_free(t.prefix(n)),
                    [&] { return "oracle at " + std::to_string(n); });
         }
       }},
      {"core.overlap-oracle", "is_overlap_free equals the direct xuxux search for |w| <= 12",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           p.expect(is_overlap_free(w) == naive::is_overlap_free(w), [&] { return w.str(); });
         }
       }},
      {"core.fibonacci-two-constructions",
       "fixedpoint:a=ab,b=a and directive:per=[(1,0)(1,0)] agree on every prefix up to 512",
       [](Probe& p) {
         const Word x = stream("fixedpoint:a=ab,b=a").prefix(512);
         const Word y = stream("directive:per=[(1,0)(1,0)]").prefix(512);
         for (std::size_t n = 1; n <= 512; ++n) {
           p.expect(x.prefix(n) == y.prefix(n), [&] { return "length " + std::to_string(n); });
         }
       }},
      {"core.spec-roundtrip", "every built-in spec reparses from its canonical spelling",
       [](Probe& p) {
         for (std::string_view spec : kBuiltinSpecs) {
           const WordStream s = stream(spec);
           p.expect(parse_stream(to_string(s)) == s, [&] { return std::string(spec); });
         }
       }},
  };
}

std::vector<Check> quasiperiod_suite(const VerifyOptions&) {
  return {
      {"quasiperiod.oracle-equivalence",
       "quasiperiods(w) equals the positional covering oracle over every factor, for all "
       "32766 words with |w| <= 14; each oracle quasiperiod is a proper border",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(14)) {
           const auto expected = naive::quasiperiods(w);
           const auto borders = proper_borders(w);
           bool ok = quasiperiods(w) == expected;
           for (const Word& u : expected) {
             ok = ok && std::find(borders.begin(), borders.end(), u) != borders.end();
           }
           p.expect(ok, [&] { return w.str(); });
         }
       }},
      {"quasiperiod.unique-superprimitive",
       "every quasiperiodic word with |w| <= 14 has exactly one superprimitive quasiperiod, "
       "its smallest",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(14)) {
           const auto qps = quasiperiods(w);
           if (qps.empty()) continue;
           std::vector<Word> primitive;
           for (const Word& u : qps) {
             if (is_superprimitive(u)) primitive.push_back(u);
           }
           p.expect(primitive.size() == 1 && primitive.front() == qps.front(),
                    [&] { return w.str(); });
         }
       }},
      {"quasiperiod.generator-images-cover",
       "for |w| <= 10 with quasiperiod u and g in {La, Lb, Ra, Rb}: "
       "covered_prefix_length(g(u), g(w)) >= |g(w)| - |g(u)|",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(10)) {
           for (const Word& u : quasiperiods(w)) {
             for (Generator g : kCoreGenerators) {
               const BinaryMorphism m = generator_image(g);
               const Word gw = apply(m, w);
               const Word gu = apply(m, u);
               p.expect(covered_prefix_length(gu, gw) + gu.size() >= gw.size(), [&] {
                 return std::string(to_string(g)) + " on " + w.str() + " / " + u.str();
               });
             }
           }
         }
       }},
      {"quasiperiod.square-of-smallest",
       "on every sample stream with evidence, uu occurs in the prefix for the smallest "
       "quasiperiod u",
       [](Probe& p) {
         for (std::string_view spec : kEvidenceStreams) {
           const WordStream s = stream(spec);
           const auto r = detect(s);
           p.expect(r.smallest.has_value(), [&] { return std::string(spec) + ": no evidence"; });
           if (!r.smallest) continue;
           const Word uu = *r.smallest + *r.smallest;
           p.expect(!occurrences(uu, s.prefix(kN)).empty(),
                    [&] { return std::string(spec) + ": " + uu.str() + " absent"; });
         }
       }},
      {"quasiperiod.evidence-breaks-overlap-freeness",
       "every sample prefix of length 64, 512 or 2048 with evidence contains an overlap",
       [](Probe& p) {
         for (std::string_view spec : kEvidenceStreams) {
           const WordStream s = stream(spec);
           for (std::size_t n : {64u, 512u, 2048u}) {
             const auto r = detect(s, n, std::min<std::size_t>(kLmax, n - 1));
             if (r.verdict != Verdict::EvidenceQuasiperiodic) continue;
             p.expect(!is_overlap_free(s.prefix(n)),
                      [&] { return std::string(spec) + " at " + std::to_string(n); });
           }
         }
       }},
      {"quasiperiod.evidence-implies-bordered",
       "with evidence u on prefix P, every prefix of P longer than u has a nonempty proper "
       "border",
       [](Probe& p) {
         for (std::string_view spec : kEvidenceStreams) {
           const WordStream s = stream(spec);
           const Word prefix = s.prefix(kN);
           const auto r = detect_quasiperiods(prefix, kLmax);
           if (!r.smallest) continue;
           const auto border = border_array(prefix.view());
           for (std::size_t len = r.smallest->size() + 1; len <= prefix.size(); ++len) {
             p.expect(border[len] > 0,
                      [&] { return std::string(spec) + " prefix " + std::to_string(len); });
           }
         }
       }},
      {"quasiperiod.report-consistency",
       "found is ascending by length, within the bound, and headed by smallest; the verdict "
       "follows found",
       [](Probe& p) {
         std::vector<std::string_view> specs(kEvidenceStreams.begin(), kEvidenceStreams.end());
         specs.insert(specs.end(), kNonQuasiperiodicStreams.begin(),
                      kNonQuasiperiodicStreams.end());
         for (std::string_view spec : specs) {
           const auto r = detect(stream(spec));
           bool ok = r.prefix_length_analyzed == kN && r.candidates_bound == kLmax;
           for (std::size_t i = 0; i < r.found.size(); ++i) {
             ok = ok && r.found[i].quasiperiod.size() <= kLmax &&
                  (i == 0 || r.found[i - 1].quasiperiod.size() < r.found[i].quasiperiod.size());
           }
           ok = ok && (r.found.empty() ? !r.smallest.has_value()
                                       : r.smallest == r.found.front().quasiperiod);
           ok = ok && (r.verdict == Verdict::EvidenceQuasiperiodic) == !r.found.empty();
           p.expect(ok, [&] { return std::string(spec); });
         }
       }},
  };
}

std::vector<Check> lyndon_suite(const VerifyOptions&) {
  constexpr LetterOrder kOrders[] = {LetterOrder::AB, LetterOrder::BA};
  return {
      {"lyndon.unbordered", "Lyndon words with |w| <= 12 are unbordered, under both orders",
       [kOrders](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           for (LetterOrder o : kOrders) {
             if (is_lyndon(w, o)) p.expect(is_unbordered(w), [&] { return w.str(); });
           }
         }
       }},
      {"lyndon.superprimitive", "Lyndon words with |w| <= 12 are superprimitive",
       [kOrders](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           for (LetterOrder o : kOrders) {
             if (is_lyndon(w, o)) p.expect(is_superprimitive(w), [&] { return w.str(); });
           }
         }
       }},
      {"lyndon.oracle",
       "is_lyndon equals the all-suffixes comparison for |w| <= 12 under both orders",
       [kOrders](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           for (LetterOrder o : kOrders) {
             p.expect(is_lyndon(w, o) == naive::is_lyndon(w, o), [&] {
               return w.str() + " under " + std::string(to_string(o));
             });
           }
         }
       }},
      {"lyndon.order-symmetry", "is_lyndon(w, a<b) = is_lyndon(E(w), b<a) for |w| <= 12",
       [](Probe& p) {
         for (const Word& w : naive::words_up_to(12)) {
           p.expect(is_lyndon(w, LetterOrder::AB) == is_lyndon(exchange(w), LetterOrder::BA),
                    [&] { return w.str(); });
         }
       }},
      {"lyndon.prefix-status-oracle",
       "lyndon_prefix_status reports the least i with P[i,N) < P[0,N-i), for 2 <= |P| <= 12",
       [kOrders](Probe& p) {
         for (std::size_t len = 2; len <= 12; ++len) {
           for (const Word& w : naive::words_of_length(len)) {
             for (LetterOrder o : kOrders) {
               LyndonStatus expected;
               for (std::size_t i = 1; i < len; ++i) {
                 if (compare(w.substr(i), w.prefix(len - i), o) == std::strong_ordering::less) {
                   expected = LyndonStatus::refuted_at(i);
                   break;
                 }
               }
               p.expect(lyndon_prefix_status(w, o) == expected, [&] {
                 return w.str() + " under " + std::string(to_string(o));
               });
             }
           }
         }
       }},
      {"lyndon.preserves-single-generators",
       "preserves_lyndon([g]) holds exactly for g in {La, Rb}",
       [](Probe& p) {
         for (Generator g : {G::E, G::La, G::Lb, G::Ra, G::Rb}) {
           const bool expected = g == G::La || g == G::Rb;
           p.expect(preserves_lyndon({g}) == expected,
                    [&] { return std::string(to_string(g)); });
         }
       }},
      {"lyndon.preserves-class-invariant",
       "preserves_lyndon is constant on every relation class of words over {La, Lb, Ra, Rb} "
       "with length <= 6",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(6)) {
           const bool value = preserves_lyndon(gw);
           for (const GeneratorWord& member : relation_closure(gw)) {
             p.expect(preserves_lyndon(member) == value,
                      [&] { return show(gw) + " vs " + show(member); });
           }
         }
       }},
      {"lyndon.preserving-morphisms-map-lyndon-words",
       "a word of length <= 4 with preserves_lyndon maps every a<b Lyndon word of length "
       "<= 8 to a Lyndon word; its E-conjugate does the same under b<a",
       [](Probe& p) {
         std::vector<Word> lyndon_ab;
         for (const Word& w : naive::words_up_to(8)) {
           if (naive::is_lyndon(w, LetterOrder::AB)) lyndon_ab.push_back(w);
         }
         for (const GeneratorWord& gw : core_words_up_to(4)) {
           if (!preserves_lyndon(gw)) continue;
           const BinaryMorphism f = morphism_of(gw);
           GeneratorWord conj;
           for (Generator g : gw) conj.push_back(conjugate(g));
           const BinaryMorphism h = morphism_of(conj);
           for (const Word& w : lyndon_ab) {
             p.expect(naive::is_lyndon(apply(f, w), LetterOrder::AB),
                      [&] { return show(gw) + " on " + w.str(); });
             p.expect(naive::is_lyndon(apply(h, exchange(w)), LetterOrder::BA),
                      [&] { return show(conj) + " on " + exchange(w).str(); });
           }
         }
       }},
  };
}

std::vector<Check> relations_suite(const VerifyOptions& options) {
  const std::uint64_t seed = options.seed;
  return {
      {"relations.presentation",
       "La Lb^n Ra = Ra Rb^n La and Lb La^n Rb = Rb Ra^n Lb for n = 0..5; EE = Id; "
       "E La = Lb E; E Ra = Rb E",
       [](Probe& p) {
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
           p.expect(morphism_of(x) == morphism_of(y), [&] { return show(x); });
           p.expect(morphism_of(u) == morphism_of(v), [&] { return show(u); });
         }
         p.expect(morphism_of({G::E, G::E}) == BinaryMorphism::identity(),
                  [] { return std::string("E E"); });
         p.expect(morphism_of({G::E, G::La}) == morphism_of({G::Lb, G::E}),
                  [] { return std::string("E La"); });
         p.expect(morphism_of({G::E, G::Ra}) == morphism_of({G::Rb, G::E}),
                  [] { return std::string("E Ra"); });
       }},
      {"relations.composition-order",
       "[La, Lb] denotes a -> aba, b -> ab and [Lb, La] denotes a -> ba, b -> bab",
       [](Probe& p) {
         p.expect(morphism_of(gens("La Lb")) == BinaryMorphism(word("aba"), word("ab")),
                  [] { return to_string(morphism_of(gens("La Lb"))); });
         p.expect(morphism_of(gens("Lb La")) == BinaryMorphism(word("ba"), word("bab")),
                  [] { return to_string(morphism_of(gens("Lb La"))); });
       }},
      {"relations.normalize-preserves",
       "normalize_E keeps the morphism, for 1000 random generator words of length <= 8",
       [seed](Probe& p) {
         std::mt19937_64 rng(seed);
         const std::vector<Generator> all = {G::E, G::La, G::Lb, G::Ra, G::Rb};
         for (int trial = 0; trial < 1000; ++trial) {
           const GeneratorWord gw = random_generator_word(rng, 8, all);
           const NormalizedWord nw = normalize_E(gw);
           const bool e_free =
               std::find(nw.core.begin(), nw.core.end(), G::E) == nw.core.end();
           p.expect(e_free && morphisms_equal(gw, denormalize(nw)), [&] { return show(gw); });
         }
         p.note(seed_note(seed));
       }},
      {"relations.closure-sound",
       "every closure member has the core's length and denotes the same morphism, for all "
       "words over {La, Lb, Ra, Rb} with length <= 6",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(6)) {
           const BinaryMorphism m = morphism_of(gw);
           for (const GeneratorWord& member : relation_closure(gw)) {
             p.expect(member.size() == gw.size() && morphism_of(member) == m,
                      [&] { return show(gw) + " vs " + show(member); });
           }
         }
       }},
      {"relations.closure-symmetric",
       "closure(m) = closure(w) for every member m, over all words of length <= 5 and 200 "
       "random words of length 6",
       [seed](Probe& p) {
         std::vector<GeneratorWord> words = core_words_up_to(5);
         std::mt19937_64 rng(seed);
         std::uniform_int_distribution<std::size_t> pick(0, kCoreGenerators.size() - 1);
         for (int i = 0; i < 200; ++i) {
           GeneratorWord gw(6);
           for (auto& g : gw) g = kCoreGenerators[pick(rng)];
           words.push_back(gw);
         }
         for (const GeneratorWord& gw : words) {
           const auto cls = closure_set(gw);
           for (const GeneratorWord& member : cls) {
             p.expect(closure_set(member) == cls,
                      [&] { return show(gw) + " vs " + show(member); });
           }
         }
         p.note(seed_note(seed));
       }},
      {"relations.word-problem-agreement",
       "words of length <= 6 denoting the same morphism form exactly one relation class",
       [](Probe& p) {
         std::map<std::pair<std::string, std::string>, std::set<GeneratorWord>> by_image;
         for (const GeneratorWord& gw : core_words_up_to(6)) {
           const BinaryMorphism m = morphism_of(gw);
           by_image[{m.image_a().str(), m.image_b().str()}].insert(gw);
         }
         for (const auto& [key, group] : by_image) {
           p.expect(closure_set(*group.begin()) == group,
                    [&] { return "a=" + key.first + ",b=" + key.second; });
         }
       }},
      {"relations.apply-distributes",
       "apply(m, uv) = apply(m, u) apply(m, v) for 1000 random morphisms and splits",
       [seed](Probe& p) {
         std::mt19937_64 rng(seed);
         std::uniform_int_distribution<std::size_t> length(0, 16);
         const std::vector<Generator> all = {G::E, G::La, G::Lb, G::Ra, G::Rb};
         for (int trial = 0; trial < 1000; ++trial) {
           const BinaryMorphism m = morphism_of(random_generator_word(rng, 6, all));
           const Word u = random_word(rng, length(rng));
           const Word v = random_word(rng, length(rng));
           p.expect(apply(m, u + v) == apply(m, u) + apply(m, v),
                    [&] { return to_string(m) + " on " + u.str() + "|" + v.str(); });
         }
         p.note(seed_note(seed));
       }},
      {"relations.apply-matches-substitution",
       "apply agrees with letter-by-letter substitution on 1000 random inputs",
       [seed](Probe& p) {
         std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
         const std::vector<Generator> all = {G::E, G::La, G::Lb, G::Ra, G::Rb};
         for (int trial = 0; trial < 1000; ++trial) {
           const GeneratorWord gw = random_generator_word(rng, 6, all);
           const Word w = random_word(rng, 1 + trial % 20);
           // Right to left, one generator at a time.
           Word expected = w;
           for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
             const BinaryMorphism g = generator_image(*it);
             expected = naive::substitute(g.image_a(), g.image_b(), expected);
           }
           p.expect(apply(morphism_of(gw), w) == expected,
                    [&] { return show(gw) + " on " + w.str(); });
         }
         p.note(seed_note(seed));
       }},
  };
}

std::vector<Check> sturmian_suite(const VerifyOptions&) {
  return {
      {"sturmian.generation-consistent",
       "the common prefix of F_m(a) and F_(m+1)(a) is nondecreasing in m on every sample "
       "sequence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           std::size_t previous = 0;
           Word last = morphism_of(directive_to_generators(seq, 1)).image_a();
           for (std::size_t m = 2; m <= 24 && last.size() < 50000; ++m) {
             const Word next = morphism_of(directive_to_generators(seq, m)).image_a();
             std::size_t lcp = 0;
             while (lcp < last.size() && lcp < next.size() && last[lcp] == next[lcp]) ++lcp;
             p.expect(lcp >= previous, [&] { return std::string(text) + " at m=" + std::to_string(m); });
             previous = lcp;
             last = next;
           }
         }
       }},
      {"sturmian.prefix-matches-iteration",
       "sturmian_prefix(seq, 1000) equals the untruncated images once F_m(a) and F_m(b) "
       "agree on 1000 letters",
       [](Probe& p) {
         constexpr std::size_t n = 1000;
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           Word fa = word("a");
           Word fb = word("b");
           // F_m = F_(m-1) o pair_m, so each new pair is substituted innermost.
           for (std::size_t m = 1; m <= 64; ++m) {
             const BlockPair& pair = seq.pair(m - 1);
             GeneratorWord gw(pair.a_block.d - pair.a_block.c, G::La);
             gw.insert(gw.end(), pair.a_block.c, G::Ra);
             gw.insert(gw.end(), pair.b_block.d - pair.b_block.c, G::Lb);
             gw.insert(gw.end(), pair.b_block.c, G::Rb);
             Word pa = word("a");
             Word pb = word("b");
             for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
               const BinaryMorphism g = generator_image(*it);
               pa = naive::substitute(g.image_a(), g.image_b(), pa);
               pb = naive::substitute(g.image_a(), g.image_b(), pb);
             }
             const Word na = naive::substitute(fa, fb, pa);
             const Word nb = naive::substitute(fa, fb, pb);
             fa = na;
             fb = nb;
             if (fa.prefix(n) == fb.prefix(n) && fa.size() >= n) break;
           }
           p.expect(sturmian_prefix(seq, n) == fa.prefix(n), [&] { return std::string(text); });
         }
       }},
      {"sturmian.prefixes-balanced",
       "sturmian_prefix(seq, 2000) is balanced for every sample sequence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           p.expect(is_balanced(sturmian_prefix(parse_directive(text), kN)),
                    [&] { return std::string(text); });
         }
       }},
      {"sturmian.lxrx-images",
       "the [La, Ra] and [Lb, Rb] images of every sample directive stream carry evidence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const WordStream s = WordStream::directive(parse_directive(text));
           for (const char* gw : {"La Ra", "Lb Rb"}) {
             p.expect(evidenced(image_of(gens(gw), s)),
                      [&] { return std::string(gw) + " of " + std::string(text); });
           }
         }
       }},
      {"sturmian.lalb-images",
       "[La, Lb] images of every sample stream carry aba, [Lb, La] images carry bab",
       [](Probe& p) {
         std::vector<std::string_view> specs(kBuiltinSpecs.begin(), kBuiltinSpecs.end());
         specs.insert(specs.end(), kNonQuasiperiodicStreams.begin(),
                      kNonQuasiperiodicStreams.end());
         for (std::string_view spec : specs) {
           const WordStream s = stream(spec);
           p.expect(has_quasiperiod(detect(image_of(gens("La Lb"), s)), word("aba")),
                    [&] { return "La Lb of " + std::string(spec); });
           p.expect(has_quasiperiod(detect(image_of(gens("Lb La"), s)), word("bab")),
                    [&] { return "Lb La of " + std::string(spec); });
         }
       }},
      {"sturmian.smallest-transport",
       "for quasiperiodic sample streams starting with a, the smallest evidence of the La "
       "and Rb images is the image of the smallest evidence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           if (is_nonquasiperiodic(seq)) continue;
           const WordStream s = WordStream::directive(seq);
           if (s.prefix(1) != word("a")) continue;
           const auto base = detect(s);
           if (!base.smallest) {
             p.expect(false, [&] { return std::string(text) + ": no evidence"; });
             continue;
           }
           for (Generator g : {G::La, G::Rb}) {
             const auto r = detect(image_of({g}, s));
             const Word expected = apply(generator_image(g), *base.smallest);
             p.expect(r.smallest == expected, [&] {
               return std::string(to_string(g)) + " of " + std::string(text) + ": " +
                      smallest_text(r) + " vs " + expected.str();
             });
           }
         }
       }},
      {"sturmian.unbalanced-counterexample",
       "abab(aaab)^w has no evidence while its La-image has smallest evidence aabaa",
       [](Probe& p) {
         const WordStream w = stream("periodic:abab,aaab");
         p.expect(!evidenced(w), [] { return std::string("base evidenced"); });
         const auto r = detect(image_of({G::La}, w));
         p.expect(r.smallest == word("aabaa"), [&] { return "image: " + smallest_text(r); });
       }},
      {"sturmian.shape-prediction",
       "when 0 < i <= n, check_shape predicts a^i b a^(n-i+1), the smallest evidence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const WordStream s = WordStream::directive(parse_directive(text));
           const Word prefix = s.prefix(kN);
           const ShapeReport shape = check_shape(prefix);
           p.expect(shape.conforms, [&] { return std::string(text) + ": not conforming"; });
           if (!shape.predicted_quasiperiod) continue;
           const auto r = detect_quasiperiods(prefix, kLmax);
           p.expect(r.smallest == shape.predicted_quasiperiod, [&] {
             return std::string(text) + ": " + smallest_text(r) + " vs " +
                    shape.predicted_quasiperiod->str();
           });
         }
       }},
      {"sturmian.validation",
       "validate_directive rejects c > d, d = 0 after block 1, and c = d after c > 0, across "
       "the period wraparound too",
       [](Probe& p) {
         const std::pair<std::string_view, bool> cases[] = {
             {"per=[(1,0)(1,0)]", true},
             {"pre=[(0,0)(1,0)]per=[(1,1)(1,0)]", true},
             {"per=[(1,2)(1,0)]", false},
             {"per=[(1,0)(0,0)]", false},
             {"per=[(2,1)(1,1)]", false},
             {"per=[(1,1)(1,1)]", false},
             {"per=[(1,1)(2,1)]", false},
             {"pre=[(0,0)(1,0)]per=[(1,0)(1,0)]", true},
         };
         for (const auto& [text, valid] : cases) {
           p.expect(!validate_directive(parse_directive(text)).has_value() == valid,
                    [&] { return std::string(text); });
         }
       }},
      {"sturmian.budget",
       "a one-pair budget cannot certify 100 letters of the Fibonacci sequence",
       [](Probe& p) {
         bool stalled = false;
         try {
           sturmian_prefix(parse_directive("per=[(1,0)(1,0)]"), 100, 1);
         } catch (const GenerationStalled&) {
           stalled = true;
         }
         p.expect(stalled, [] { return std::string("no GenerationStalled"); });
       }},
  };
}

std::vector<Check> classify_suite(const VerifyOptions&) {
  return {
      {"classify.strong-iff-forbidden-factor",
       "for all 5460 words over {La, Lb, Ra, Rb} with length <= 6, STRONGLY holds exactly "
       "when forbidden_witness finds a factor",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(6)) {
           const bool strong = classify(gw) == Classification::StronglyQuasiperiodic;
           p.expect(strong == forbidden_witness(gw).has_value(), [&] { return show(gw); });
         }
       }},
      {"classify.morphism-invariant",
       "words of length <= 6 denoting the same morphism receive the same classifications",
       [](Probe& p) {
         std::map<std::pair<std::string, std::string>,
                  std::pair<Classification, OnSturmianClassification>>
             seen;
         for (const GeneratorWord& gw : core_words_up_to(6)) {
           const BinaryMorphism m = morphism_of(gw);
           const auto value = std::make_pair(classify(gw), classify_on_sturmian(gw));
           const auto [it, fresh] = seen.emplace(std::make_pair(m.image_a().str(), m.image_b().str()), value);
           p.expect(fresh || it->second == value, [&] { return show(gw); });
         }
       }},
      {"classify.strong-images",
       "every STRONGLY word of length <= 4 maps aba^w, ba^w and both non-quasiperiodic "
       "Sturmian samples to words with evidence",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(4)) {
           if (classify(gw) != Classification::StronglyQuasiperiodic) continue;
           for (std::string_view spec : kNonQuasiperiodicStreams) {
             p.expect(evidenced(image_of(gw, stream(spec))),
                      [&] { return show(gw) + " on " + std::string(spec); });
           }
         }
       }},
      {"classify.weak-witnesses",
       "every WEAKLY word of length <= 4 already spelled in the weak shape leaves aba^w "
       "(bab^w for the b-family) without evidence and maps fibonacci to evidence",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(4)) {
           if (classify(gw) != Classification::WeaklyQuasiperiodic) continue;
           if (!matches_shape(gw, Shape::Weak)) continue;
           const auto family = shape_family(gw, Shape::Weak);
           const std::string_view witness = family == ShapeFamily::A ? kAbaOmega : kBabOmega;
           p.expect(!evidenced(image_of(gw, stream(witness))),
                    [&] { return show(gw) + " on " + std::string(witness); });
           p.expect(evidenced(image_of(gw, WordStream::fibonacci())),
                    [&] { return show(gw) + " on fibonacci"; });
         }
       }},
      {"classify.strong-on-sturmian",
       "every word of length <= 4 that is WEAKLY but STRONGLY_ON_STURMIAN maps both "
       "non-quasiperiodic Sturmian samples to evidence, and aba^w (bab^w) to none",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(4)) {
           if (classify(gw) != Classification::WeaklyQuasiperiodic) continue;
           if (classify_on_sturmian(gw) != OnSturmianClassification::StronglyOnSturmian) continue;
           for (std::string_view spec : {kLaRbStream, kLbRaStream}) {
             p.expect(evidenced(image_of(gw, stream(spec))),
                      [&] { return show(gw) + " on " + std::string(spec); });
           }
           const auto family = shape_family(gw, Shape::Weak);
           const std::string_view witness = family == ShapeFamily::A ? kAbaOmega : kBabOmega;
           p.expect(!evidenced(image_of(gw, stream(witness))),
                    [&] { return show(gw) + " on " + std::string(witness); });
         }
       }},
      {"classify.weak-on-sturmian-witnesses",
       "every word of length <= 4 over {La, Rb} (over {Lb, Ra}) maps the matching "
       "non-quasiperiodic Sturmian sample to a word without evidence",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(4)) {
           if (classify_on_sturmian(gw) != OnSturmianClassification::WeaklyOnSturmian) continue;
           if (!matches_shape(gw, Shape::WeakOnSturmian)) continue;
           const auto family = shape_family(gw, Shape::WeakOnSturmian);
           const std::string_view witness = family == ShapeFamily::A ? kLaRbStream : kLbRaStream;
           p.expect(!evidenced(image_of(gw, stream(witness))),
                    [&] { return show(gw) + " on " + std::string(witness); });
         }
       }},
      {"classify.strong-factor",
       "a word of length <= 5 with a STRONGLY factor is STRONGLY",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(5)) {
           bool strong_factor = false;
           for (std::size_t i = 0; i < gw.size() && !strong_factor; ++i) {
             for (std::size_t j = i + 1; j <= gw.size() && !strong_factor; ++j) {
               if (j - i == gw.size()) continue;
               const GeneratorWord f(gw.begin() + static_cast<std::ptrdiff_t>(i),
                                     gw.begin() + static_cast<std::ptrdiff_t>(j));
               strong_factor = classify(f) == Classification::StronglyQuasiperiodic;
             }
           }
           if (strong_factor) {
             p.expect(classify(gw) == Classification::StronglyQuasiperiodic,
                      [&] { return show(gw); });
           }
         }
       }},
      {"classify.exchange-invariant",
       "classify(w) = classify(E w) = classify(w E) for words of length <= 5",
       [](Probe& p) {
         for (const GeneratorWord& gw : core_words_up_to(5)) {
           GeneratorWord left{G::E};
           left.insert(left.end(), gw.begin(), gw.end());
           GeneratorWord right = gw;
           right.push_back(G::E);
           const auto c = classify(gw);
           p.expect(classify(left) == c && classify(right) == c, [&] { return show(gw); });
         }
       }},
  };
}

std::vector<Check> fixtures_suite(const VerifyOptions&) {
  const BinaryMorphism g(word("abab"), word("aaaa"));
  std::vector<std::pair<std::string, BinaryMorphism>> hs;
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      hs.emplace_back("h" + std::to_string(i) + std::to_string(j),
                      BinaryMorphism(Word::repeat(Letter::A, i), Word::repeat(Letter::B, j)));
    }
  }

  // No evidence on non-quasiperiodic samples; f(u) still covers f(w) on the
  // quasiperiodic ones.
  auto quasiperiod_free = [](const std::string& name, const BinaryMorphism& f, Probe& p) {
    for (std::string_view spec : kNonQuasiperiodicStreams) {
      p.expect(!evidenced(WordStream::image(f, stream(spec))),
               [&] { return name + " on " + std::string(spec); });
    }
    for (std::string_view spec : kQuasiperiodicSturmian) {
      const auto base = detect(stream(spec));
      if (!base.smallest) {
        p.expect(false, [&] { return std::string(spec) + ": no evidence"; });
        continue;
      }
      const Word fu = apply(f, *base.smallest);
      const Word image = WordStream::image(f, stream(spec)).prefix(kN);
      p.expect(covered_prefix_length(fu, image) + fu.size() >= image.size(),
               [&] { return name + "(" + base.smallest->str() + ") on " + std::string(spec); });
    }
  };

  return {
      {"fixtures.g-quasiperiod-free",
       "g: a -> abab, b -> aaaa leaves the non-quasiperiodic samples without evidence, and "
       "g(u) covers g(w) on quasiperiodic Sturmian samples",
       [g, quasiperiod_free](Probe& p) { quasiperiod_free("g", g, p); }},
      {"fixtures.h-quasiperiod-free",
       "h: a -> a^i, b -> b^j (i, j in 1..3) behaves like g",
       [hs, quasiperiod_free](Probe& p) {
         for (const auto& [name, h] : hs) quasiperiod_free(name, h, p);
       }},
      {"fixtures.unbalanced-head",
       "ababaaa followed by a Sturmian prefix is refuted as Lyndon under both orders and "
       "has no evidence",
       [](Probe& p) {
         for (std::string_view spec : {kLaRbStream, kLbRaStream, std::string_view("fibonacci")}) {
           const Word prefix = word("ababaaa") + stream(spec).prefix(kN - 7);
           for (LetterOrder o : {LetterOrder::AB, LetterOrder::BA}) {
             p.expect(!lyndon_prefix_status(prefix, o).consistent(), [&] {
               return std::string(spec) + " consistent under " + std::string(to_string(o));
             });
           }
           p.expect(detect_quasiperiods(prefix, kLmax).found.empty(),
                    [&] { return std::string(spec) + " evidenced"; });
         }
       }},
      {"fixtures.a-omega",
       "a^w stays CONSISTENT under both orders (evidence only: it is not an infinite Lyndon "
       "word) and is covered by a",
       [](Probe& p) {
         const WordStream s = stream("periodic:,a");
         for (LetterOrder o : {LetterOrder::AB, LetterOrder::BA}) {
           p.expect(lyndon_prefix_status(s, kN, o).consistent(),
                    [&] { return std::string(to_string(o)); });
         }
         p.expect(detect(s).smallest == word("a"), [] { return std::string("smallest"); });
       }},
      {"fixtures.aba-omega",
       "every prefix of aba^w longer than 2 is bordered, yet there is no evidence",
       [](Probe& p) {
         const WordStream s = stream(kAbaOmega);
         const Word prefix = s.prefix(kN);
         const auto border = border_array(prefix.view());
         for (std::size_t len = 3; len <= kN; ++len) {
           p.expect(border[len] > 0, [&] { return "prefix " + std::to_string(len); });
         }
         p.expect(!evidenced(s), [] { return std::string("evidenced"); });
       }},
      {"fixtures.thue-morse",
       "thue-morse: prefix 2048 overlap-free, every prefix of length >= 4 bordered, no "
       "evidence at N=2048, L=64",
       [](Probe& p) {
         const WordStream t = WordStream::thue_morse();
         const Word prefix = t.prefix(2048);
         p.expect(is_overlap_free(prefix), [] { return std::string("overlap"); });
         const auto border = border_array(prefix.view());
         for (std::size_t len = 4; len <= prefix.size(); ++len) {
           p.expect(border[len] > 0, [&] { return "prefix " + std::to_string(len); });
         }
         p.expect(!evidenced(t, 2048, 64), [] { return std::string("evidenced"); });
       }},
      {"fixtures.unbalanced-counterexample",
       "abab(aaab)^w has no evidence while its La-image has smallest evidence aabaa",
       [](Probe& p) {
         const WordStream w = stream("periodic:abab,aaab");
         p.expect(!evidenced(w), [] { return std::string("base evidenced"); });
         p.expect(detect(image_of({G::La}, w)).smallest == word("aabaa"),
                  [] { return std::string("image"); });
       }},
      {"fixtures.lara-of-ba-omega", "LaRa(ba^w) = aba^w and has no evidence",
       [](Probe& p) {
         const WordStream s = image_of(gens("La Ra"), stream(kBaOmega));
         p.expect(s.prefix(kN) == stream(kAbaOmega).prefix(kN),
                  [] { return std::string("image differs"); });
         p.expect(!evidenced(s), [] { return std::string("evidenced"); });
       }},
  };
}

std::vector<Check> examples_suite(const VerifyOptions&) {
  using C = Classification;
  return {
      {"examples.covering-golden",
       "abaababaabaababaaba has quasiperiods aba, abaaba, abaababaaba; only aba is "
       "superprimitive",
       [](Probe& p) {
         const auto qps = quasiperiods(word("abaababaabaababaaba"));
         const std::vector<Word> expected = {word("aba"), word("abaaba"), word("abaababaaba")};
         p.expect(qps == expected, [] { return std::string("quasiperiods"); });
         for (const Word& u : qps) {
           p.expect(is_superprimitive(u) == (u == word("aba")), [&] { return u.str(); });
         }
       }},
      {"examples.finite-square",
       "ababa is aba-quasiperiodic though abaaba is not a factor of it",
       [](Probe& p) {
         p.expect(covers(word("aba"), word("ababa")), [] { return std::string("cover"); });
         p.expect(occurrences(word("abaaba"), word("ababa")).empty(),
                  [] { return std::string("factor"); });
       }},
      {"examples.letters-superprimitive", "a and b are superprimitive",
       [](Probe& p) {
         p.expect(is_superprimitive(word("a")) && is_superprimitive(word("b")),
                  [] { return std::string("letters"); });
       }},
      {"examples.fibonacci", "fibonacci has smallest evidence aba at N=1000, L=50",
       [](Probe& p) {
         const auto r = detect(WordStream::fibonacci(), 1000, 50);
         p.expect(r.smallest == word("aba"), [&] { return smallest_text(r); });
       }},
      {"examples.exactly-n",
       "(ab)^n a (ab)^w has exactly n evidence quasiperiods, for n = 1..5",
       [](Probe& p) {
         for (std::size_t n = 1; n <= 5; ++n) {
           Word head;
           for (std::size_t k = 0; k < n; ++k) head += word("ab");
           head += word("a");
           const auto r = detect(WordStream::periodic(head, word("ab")));
           p.expect(r.found.size() == n, [&] {
             return "n=" + std::to_string(n) + ": " + std::to_string(r.found.size());
           });
         }
       }},
      {"examples.generator-images",
       "E, La, Lb, Ra, Rb and the composites La Ra, La Lb, Lb La, La Rb have their listed images",
       [](Probe& p) {
         const std::pair<std::string_view, std::pair<std::string_view, std::string_view>> table[] = {
             {"E", {"b", "a"}},         {"La", {"a", "ab"}},     {"Lb", {"ba", "b"}},
             {"Ra", {"a", "ba"}},       {"Rb", {"ab", "b"}},     {"La Ra", {"a", "aba"}},
             {"La Lb", {"aba", "ab"}},  {"Lb La", {"ba", "bab"}}, {"La Rb", {"aab", "ab"}},
             {"La La Rb", {"aaab", "aab"}},
         };
         for (const auto& [text, images] : table) {
           const BinaryMorphism expected(word(images.first), word(images.second));
           p.expect(morphism_of(gens(text)) == expected, [&, t = text] {
             return std::string(t) + " -> " + to_string(morphism_of(gens(t)));
           });
         }
       }},
      {"examples.aperiodic-limits", "ba^w, aba^w and ab^w carry no evidence",
       [](Probe& p) {
         for (std::string_view spec : {kBaOmega, kAbaOmega, std::string_view("periodic:a,b")}) {
           p.expect(!evidenced(stream(spec)), [&] { return std::string(spec); });
         }
       }},
      {"examples.single-generator-images",
       "La(bab^w) = aba(ab)^w and Ra(ab^w) = a(ba)^w are aba-quasiperiodic",
       [](Probe& p) {
         const auto x = image_of({G::La}, stream(kBabOmega));
         p.expect(x.prefix(kN) == stream("periodic:aba,ab").prefix(kN),
                  [] { return std::string("La image"); });
         p.expect(has_quasiperiod(detect(x), word("aba")), [] { return std::string("La evidence"); });
         const auto y = image_of({G::Ra}, stream("periodic:a,b"));
         p.expect(y.prefix(kN) == stream("periodic:a,ba").prefix(kN),
                  [] { return std::string("Ra image"); });
         p.expect(has_quasiperiod(detect(y), word("aba")), [] { return std::string("Ra evidence"); });
       }},
      {"examples.unbalanced-image",
       "La(abab(aaab)^w) = aabaabaa(aabaa)^w",
       [](Probe& p) {
         const auto x = image_of({G::La}, stream("periodic:abab,aaab"));
         p.expect(x.prefix(kN) == stream("periodic:aabaabaa,aabaa").prefix(kN),
                  [] { return std::string("image"); });
       }},
      {"examples.exact-decisions",
       "per=[(1,0)(1,0)] is quasiperiodic; per=[(1,0)(1,1)] is not, with order a<b; "
       "per=[(1,1)(1,0)] is not, with order b<a",
       [](Probe& p) {
         const auto fib = parse_directive("per=[(1,0)(1,0)]");
         p.expect(!is_nonquasiperiodic(fib), [] { return std::string("fibonacci"); });
         const auto x = nonquasiperiodic_family(parse_directive("per=[(1,0)(1,1)]"));
         p.expect(x == NonQuasiperiodicFamily::LaRb && lyndon_order(*x) == LetterOrder::AB,
                  [] { return std::string("La Rb"); });
         const auto y = nonquasiperiodic_family(parse_directive("per=[(1,1)(1,0)]"));
         p.expect(y == NonQuasiperiodicFamily::LbRa && lyndon_order(*y) == LetterOrder::BA,
                  [] { return std::string("Lb Ra"); });
         p.expect(sturmian_prefix(fib, 8) == word("abaababa"), [] { return std::string("gen"); });
       }},
      {"examples.standard-words",
       "sequences with every c = 0 are exactly quasiperiodic and carry evidence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           if (!is_standard(seq)) continue;
           p.expect(!is_nonquasiperiodic(seq) &&
                        exact_report(seq, kN, kLmax).verdict == Verdict::ExactQuasiperiodic,
                    [&] { return std::string(text); });
         }
       }},
      {"examples.non-quasiperiodic-shape",
       "the La Rb sample starts a^(n+1) b and the Lb Ra sample starts with b, so neither "
       "gets a predicted quasiperiod",
       [](Probe& p) {
         const ShapeReport x = check_shape(stream(kLaRbStream).prefix(kN));
         p.expect(x.conforms && x.i == x.n + 1 && !x.predicted_quasiperiod,
                  [&] { return "i=" + std::to_string(x.i) + " n=" + std::to_string(x.n); });
         const ShapeReport y = check_shape(stream(kLbRaStream).prefix(kN));
         p.expect(y.conforms && y.i == 0 && !y.predicted_quasiperiod,
                  [&] { return "i=" + std::to_string(y.i); });
       }},
      {"examples.unbalanced-prefix", "ababaaa is not balanced and occurs in no Sturmian sample",
       [](Probe& p) {
         p.expect(!is_balanced(word("ababaaa")), [] { return std::string("balance"); });
         for (std::string_view text : kDirectives) {
           p.expect(occurrences(word("ababaaa"), sturmian_prefix(parse_directive(text), kN)).empty(),
                    [&] { return std::string(text); });
         }
       }},
      {"examples.classification-table",
       "plain and on-Sturmian classifications of the reference generator words",
       [](Probe& p) {
         const std::pair<std::string_view, C> plain[] = {
             {"La Lb", C::StronglyQuasiperiodic},    {"Lb La", C::StronglyQuasiperiodic},
             {"La Ra", C::WeaklyQuasiperiodic},      {"Lb Rb", C::WeaklyQuasiperiodic},
             {"Ra Rb Ra", C::StronglyQuasiperiodic}, {"Ra La Rb", C::StronglyQuasiperiodic},
             {"La", C::WeaklyQuasiperiodic},         {"Rb", C::WeaklyQuasiperiodic},
             {"La Rb", C::WeaklyQuasiperiodic},      {"E", C::QuasiperiodFree},
             {"", C::QuasiperiodFree},
         };
         for (const auto& [text, expected] : plain) {
           const auto got = classify(gens(text));
           p.expect(got == expected, [&, t = text] {
             return "[" + std::string(t) + "] " + std::string(to_string(got));
           });
         }
         using O = OnSturmianClassification;
         const std::pair<std::string_view, O> on[] = {
             {"La Ra", O::StronglyOnSturmian},
             {"La Rb", O::WeaklyOnSturmian},
             {"La", O::WeaklyOnSturmian},
         };
         for (const auto& [text, expected] : on) {
           const auto got = classify_on_sturmian(gens(text));
           p.expect(got == expected, [&, t = text] {
             return "[" + std::string(t) + "] " + std::string(to_string(got));
           });
         }
       }},
      {"examples.strong-families",
       "Ra Rb^j Ra and Ra La^j Rb are STRONGLY for j = 1..4",
       [](Probe& p) {
         for (std::size_t j = 1; j <= 4; ++j) {
           GeneratorWord x{G::Ra}, y{G::Ra};
           x.insert(x.end(), j, G::Rb);
           y.insert(y.end(), j, G::La);
           x.push_back(G::Ra);
           y.push_back(G::Rb);
           for (const auto& gw : {x, y}) {
             p.expect(classify(gw) == C::StronglyQuasiperiodic, [&] { return show(gw); });
           }
         }
       }},
      {"examples.lyndon-preservation",
       "[La, Rb] preserves Lyndon words; [Lb, Ra] does not, but E Lb Ra E does",
       [](Probe& p) {
         p.expect(preserves_lyndon(gens("La Rb")), [] { return std::string("La Rb"); });
         p.expect(!preserves_lyndon(gens("Lb Ra")), [] { return std::string("Lb Ra"); });
         p.expect(preserves_lyndon(gens("E Lb Ra E")), [] { return std::string("E Lb Ra E"); });
       }},
      {"examples.word-flags", "aba is superprimitive and not Lyndon; aab is Lyndon and unbordered",
       [](Probe& p) {
         p.expect(is_superprimitive(word("aba")) && !is_lyndon(word("aba"), LetterOrder::AB),
                  [] { return std::string("aba"); });
         p.expect(is_lyndon(word("aab"), LetterOrder::AB) && is_unbordered(word("aab")),
                  [] { return std::string("aab"); });
       }},
  };
}

std::vector<Check> cross_suite(const VerifyOptions&) {
  return {
      {"cross.single-pair-family",
       "for every valid per=[(d1,c1)(d2,c2)] with d in {1,2}: exact decision, evidence at "
       "N=5000, L=100 and the Lyndon status under the matched order all agree",
       [](Probe& p) {
         constexpr std::size_t n = 5000;
         for (std::size_t d1 = 1; d1 <= 2; ++d1) {
           for (std::size_t c1 = 0; c1 <= d1; ++c1) {
             for (std::size_t d2 = 1; d2 <= 2; ++d2) {
               for (std::size_t c2 = 0; c2 <= d2; ++c2) {
                 const DirectiveSequence seq{{}, {{{d1, c1}, {d2, c2}}}};
                 if (validate_directive(seq)) continue;
                 const WordStream s = WordStream::directive(seq);
                 const Word prefix = s.prefix(n);
                 const bool evidence = !detect_quasiperiods(prefix, kLmax).found.empty();
                 const auto family = nonquasiperiodic_family(seq);
                 bool ok;
                 if (family) {
                   ok = !evidence && lyndon_prefix_status(prefix, lyndon_order(*family)).consistent();
                 } else {
                   ok = evidence && !lyndon_prefix_status(prefix, LetterOrder::AB).consistent() &&
                        !lyndon_prefix_status(prefix, LetterOrder::BA).consistent();
                 }
                 p.expect(ok, [&] { return to_string(seq); });
               }
             }
           }
         }
       }},
      {"cross.finite-approximants-lyndon",
       "for non-quasiperiodic samples the images F_m(a), m = 1..6, are finite Lyndon words "
       "under the matched order",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           const auto family = nonquasiperiodic_family(seq);
           if (!family) continue;
           for (std::size_t m = 1; m <= 6; ++m) {
             const Word fa = morphism_of(directive_to_generators(seq, m)).image_a();
             p.expect(is_lyndon(fa, lyndon_order(*family)),
                      [&] { return std::string(text) + " m=" + std::to_string(m); });
           }
         }
       }},
      {"cross.exact-report",
       "exact_report agrees with the prefix evidence on every sample sequence",
       [](Probe& p) {
         for (std::string_view text : kDirectives) {
           const DirectiveSequence seq = parse_directive(text);
           try {
             const auto r = exact_report(seq, kN, kLmax);
             const Verdict expected = is_nonquasiperiodic(seq) ? Verdict::ExactNonQuasiperiodic
                                                               : Verdict::ExactQuasiperiodic;
             p.expect(r.verdict == expected, [&] { return std::string(text); });
           } catch (const InvalidArgument& e) {
             p.expect(false, [&] { return std::string(text) + ": " + e.what(); });
           }
         }
       }},
      {"cross.decomposition-images",
       "applying a {La, Rb} word to the La Rb sample keeps it non-quasiperiodic and Lyndon "
       "consistent under a<b; likewise {Lb, Ra} words and the Lb Ra sample under b<a",
       [](Probe& p) {
         const std::pair<std::vector<Generator>, std::string_view> families[] = {
             {{G::La, G::Rb}, kLaRbStream},
             {{G::Lb, G::Ra}, kLbRaStream},
         };
         for (const auto& [alphabet, spec] : families) {
           const LetterOrder order = alphabet.front() == G::La ? LetterOrder::AB : LetterOrder::BA;
           for (std::size_t len = 1; len <= 3; ++len) {
             for (const GeneratorWord& gw : naive::generator_words(len, alphabet)) {
               const WordStream s = image_of(gw, stream(spec));
               p.expect(!evidenced(s) && lyndon_prefix_status(s, kN, order).consistent(),
                        [&] { return show(gw) + " on " + std::string(spec); });
             }
           }
         }
       }},
  };
}

using SuiteFactory = std::vector<Check> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFactory>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFactory>> suites = {
      {"core", core_suite},
      {"quasiperiod", quasiperiod_suite},
      {"lyndon", lyndon_suite},
      {"relations", relations_suite},
      {"sturmian", sturmian_suite},
      {"classify", classify_suite},
      {"fixtures", fixtures_suite},
      {"paper-examples", examples_suite},
      {"cross-theorems", cross_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(),
                               [&](const auto& entry) { return entry.first == name; });
  if (it == suites.end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");

  SuiteResult result{it->first, {}};
  for (const Check& check : it->second(options)) {
    Probe probe;
    CheckResult r{check.id, check.description, false, ""};
    try {
      check.body(probe);
      r.pass = probe.pass();
      r.details = probe.details();
    } catch (const std::exception& e) {
      r.details = std::string("exception: ") + e.what();
    }
    result.checks.push_back(std::move(r));
  }
  return result;
}

std::vector<SuiteResult> run_verify(std::string_view name, const VerifyOptions& options) {
  if (name != "all") return {run_suite(name, options)};
  std::vector<SuiteResult> out;
  for (const std::string& suite : suite_names()) out.push_back(run_suite(suite, options));
  return out;
}

}  // namespace qpsturm
