#include <gtest/gtest.h>

#include <random>

#include "qpsturm/classify.hpp"
#include "qpsturm/errors.hpp"
#include "qpsturm/lyndon.hpp"
#include "qpsturm/naive.hpp"
#include "qpsturm/quasiperiod.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/verify.hpp"

using namespace qpsturm;

namespace {

constexpr std::uint64_t kSeed = 0x51a7e;

Word random_word(std::mt19937_64& rng, std::size_t length, double p_b) {
  std::bernoulli_distribution coin(p_b);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(coin(rng) ? Letter::B : Letter::A);
  return w;
}

}  // namespace

// Longer words than the exhaustive sweeps reach, biased toward repetitive
// texts so that quasiperiodic cases actually occur.
TEST(Properties, QuasiperiodsMatchOracleOnRandomWords) {
  std::mt19937_64 rng(kSeed);
  std::size_t quasiperiodic = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Word unit = random_word(rng, 2 + trial % 5, 0.4);
    Word w = unit;
    while (w.size() < 20 + static_cast<std::size_t>(trial % 17)) {
      w += (rng() % 3 == 0) ? unit.prefix(1 + rng() % unit.size()) : unit;
    }
    const auto got = quasiperiods(w);
    EXPECT_EQ(got, naive::quasiperiods(w)) << w.str();
    if (!got.empty()) ++quasiperiodic;
  }
  EXPECT_GT(quasiperiodic, 50u);
}

TEST(Properties, OccurrencesMatchOracleOnRandomTexts) {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Word text = random_word(rng, 40 + trial % 60, 0.3);
    const Word pattern = text.substr(rng() % 20, 1 + rng() % 6);
    EXPECT_EQ(occurrences(pattern, text), naive::occurrences(pattern, text));
  }
}

TEST(Properties, LyndonMatchesOracleOnRandomWords) {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 1 + trial % 30, 0.35);
    for (LetterOrder o : {LetterOrder::AB, LetterOrder::BA}) {
      EXPECT_EQ(is_lyndon(w, o), naive::is_lyndon(w, o)) << w.str();
    }
  }
}

TEST(Properties, DetectFindsOnlyCoveringPrefixes) {
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Word unit = random_word(rng, 2 + trial % 4, 0.5);
    Word w;
    while (w.size() < 200) w += unit.prefix(1 + rng() % unit.size()) + unit;
    const auto r = detect_quasiperiods(w, 20);
    for (const auto& e : r.found) {
      EXPECT_TRUE(w.starts_with(e.quasiperiod));
      EXPECT_EQ(e.covered_length, covered_prefix_length(e.quasiperiod, w));
      EXPECT_GE(e.covered_length + e.quasiperiod.size(), w.size());
    }
  }
}

TEST(Properties, ClassificationInvariantUnderRelations) {
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& gw : naive::generator_words(
             len, {Generator::La, Generator::Lb, Generator::Ra, Generator::Rb})) {
      const auto c = classify(gw);
      for (const auto& member : relation_closure(gw)) EXPECT_EQ(classify(member), c);
    }
  }
}

class VerifySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifySuite, AllChecksPass) {
  const SuiteResult result = run_suite(GetParam());
  EXPECT_EQ(result.suite, GetParam());
  for (const auto& c : result.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.details;
}

INSTANTIATE_TEST_SUITE_P(Suites, VerifySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_suite("nope"), InvalidArgument);
  EXPECT_EQ(run_verify("core").size(), 1u);
}

TEST(Verify, SeedIsReported) {
  const SuiteResult result = run_suite("relations", VerifyOptions{7});
  bool found = false;
  for (const auto& c : result.checks) {
    if (c.details.find("seed 7") != std::string::npos) found = true;
  }
  EXPECT_TRUE(found);
}
