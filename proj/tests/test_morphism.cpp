#include <gtest/gtest.h>

#include <algorithm>

#include "qpsturm/errors.hpp"
#include "qpsturm/morphism.hpp"
#include "qpsturm/spec_text.hpp"

using namespace qpsturm;
using G = Generator;

namespace {

BinaryMorphism images(const char* a, const char* b) {
  return BinaryMorphism(parse_word(a), parse_word(b));
}

bool contains(const std::vector<GeneratorWord>& words, const GeneratorWord& gw) {
  return std::find(words.begin(), words.end(), gw) != words.end();
}

}  // namespace

TEST(Generators, Images) {
  EXPECT_EQ(generator_image(G::E), images("b", "a"));
  EXPECT_EQ(generator_image(G::La), images("a", "ab"));
  EXPECT_EQ(generator_image(G::Lb), images("ba", "b"));
  EXPECT_EQ(generator_image(G::Ra), images("a", "ba"));
  EXPECT_EQ(generator_image(G::Rb), images("ab", "b"));
}

// The rightmost generator acts first.
TEST(Composition, ConventionGolden) {
  EXPECT_EQ(morphism_of({G::La, G::Lb}), images("aba", "ab"));
  EXPECT_EQ(morphism_of({G::Lb, G::La}), images("ba", "bab"));
  EXPECT_EQ(morphism_of({G::La, G::Ra}), images("a", "aba"));
  EXPECT_EQ(morphism_of({G::La, G::Rb}), images("aab", "ab"));
  EXPECT_EQ(morphism_of({}), BinaryMorphism::identity());
  EXPECT_EQ(compose(generator_image(G::La), generator_image(G::Lb)), morphism_of({G::La, G::Lb}));
}

TEST(Morphism, Apply) {
  EXPECT_EQ(apply(images("abab", "aaaa"), parse_word("ab")).str(), "ababaaaa");
  EXPECT_EQ(apply(morphism_of({G::La, G::Rb}), parse_word("abba")).str(), "aabababaab");
  EXPECT_TRUE(apply(images("a", "b"), Word{}).empty());
  EXPECT_THROW(images("", "b"), InvalidArgument);
}

TEST(Morphism, Prolongable) {
  EXPECT_TRUE(images("ab", "a").prolongable_on(Letter::A));
  EXPECT_FALSE(images("ab", "a").prolongable_on(Letter::B));
  EXPECT_FALSE(images("a", "ab").prolongable_on(Letter::A));
}

TEST(Morphism, ToString) {
  EXPECT_EQ(to_string(morphism_of({G::La, G::Lb})), "a=aba,b=ab");
  EXPECT_EQ(to_string(GeneratorWord{G::La, G::Rb, G::E}), "La Rb E");
  EXPECT_EQ(to_string(GeneratorWord{}), "");
}

TEST(ParseGenerators, Tokens) {
  EXPECT_EQ(parse_generators("La Rb"), (GeneratorWord{G::La, G::Rb}));
  EXPECT_EQ(parse_generators("la,RB , e"), (GeneratorWord{G::La, G::Rb, G::E}));
  EXPECT_EQ(parse_generators(""), GeneratorWord{});
  EXPECT_THROW(parse_generators("La Lc"), ParseError);
  EXPECT_THROW(parse_generators("LaRb"), ParseError);
}

TEST(ParseMorphism, BothSpellings) {
  EXPECT_EQ(parse_morphism("La Lb"), images("aba", "ab"));
  EXPECT_EQ(parse_morphism("a=abab, b=aaaa"), images("abab", "aaaa"));
  EXPECT_THROW(parse_morphism("a=ab,b="), ParseError);
}

TEST(Relations, Presentation) {
  for (std::size_t n = 0; n <= 5; ++n) {
    GeneratorWord x{G::La}, y{G::Ra};
    x.insert(x.end(), n, G::Lb);
    y.insert(y.end(), n, G::Rb);
    x.push_back(G::Ra);
    y.push_back(G::La);
    EXPECT_TRUE(morphisms_equal(x, y)) << n;
  }
  EXPECT_TRUE(morphisms_equal({G::E, G::E}, {}));
  EXPECT_TRUE(morphisms_equal({G::E, G::La}, {G::Lb, G::E}));
  EXPECT_TRUE(morphisms_equal({G::E, G::Ra}, {G::Rb, G::E}));
  EXPECT_FALSE(morphisms_equal({G::La, G::Lb}, {G::Lb, G::La}));
}

TEST(NormalizeE, PushesRight) {
  EXPECT_EQ(normalize_E({G::E, G::La, G::Ra}), (NormalizedWord{{G::Lb, G::Rb}, true}));
  EXPECT_EQ(normalize_E({G::E, G::La, G::E}), (NormalizedWord{{G::Lb}, false}));
  EXPECT_EQ(normalize_E({G::E, G::E}), (NormalizedWord{{}, false}));
  EXPECT_EQ(normalize_E({G::La, G::Rb}), (NormalizedWord{{G::La, G::Rb}, false}));
  EXPECT_EQ(denormalize({{G::Lb}, true}), (GeneratorWord{G::Lb, G::E}));
}

TEST(Closure, Rewrites) {
  const auto closure = relation_closure({G::La, G::Lb, G::Ra});
  EXPECT_EQ(closure.front(), (GeneratorWord{G::La, G::Lb, G::Ra}));
  EXPECT_TRUE(contains(closure, {G::Ra, G::Rb, G::La}));
  EXPECT_EQ(closure.size(), 2u);

  // n = 0: La Ra <-> Ra La, applied inside a longer word.
  const auto inner = relation_closure({G::Rb, G::La, G::Ra, G::Lb});
  EXPECT_TRUE(contains(inner, {G::Rb, G::Ra, G::La, G::Lb}));
  for (const auto& m : inner) EXPECT_TRUE(morphisms_equal(m, {G::Rb, G::La, G::Ra, G::Lb}));

  EXPECT_EQ(relation_closure({G::La, G::Lb}).size(), 1u);
  EXPECT_EQ(relation_closure({}), std::vector<GeneratorWord>{GeneratorWord{}});
}

TEST(Closure, Errors) {
  EXPECT_THROW(relation_closure({G::La, G::E}), InvalidArgument);
  EXPECT_THROW(relation_closure({G::La, G::Ra, G::La, G::Ra}, 2), ClosureCapExceeded);
}
