#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpsturm/errors.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/stream.hpp"

using namespace qpsturm;

// Prefixes frozen from the substitution oracle.
TEST(Stream, FrozenPrefixes) {
  EXPECT_EQ(WordStream::fibonacci().prefix(20).str(), "abaababaabaababaabab");
  EXPECT_EQ(WordStream::thue_morse().prefix(16).str(), "abbabaabbaababba");
  EXPECT_EQ(parse_stream("image:La Rb@fibonacci").prefix(20).str(), "aababaabaababaababaa");
}

TEST(Stream, MatchesOracle) {
  EXPECT_EQ(WordStream::fibonacci().prefix(300).str(), oracle::fixed_point("ab", "a", 'a', 300));
  EXPECT_EQ(WordStream::thue_morse().prefix(300).str(),
            oracle::fixed_point("ab", "ba", 'a', 300));
  EXPECT_EQ(parse_stream("fixedpoint:a=aab,b=ab").prefix(300).str(),
            oracle::fixed_point("aab", "ab", 'a', 300));
  EXPECT_EQ(parse_stream("periodic:abab,aaab").prefix(300).str(),
            oracle::periodic("abab", "aaab", 300));
  const std::string inner = oracle::fixed_point("ab", "ba", 'a', 300);
  EXPECT_EQ(parse_stream("image:a=abab,b=aaaa@thue-morse").prefix(300).str(),
            oracle::substitute("abab", "aaaa", inner).substr(0, 300));
}

TEST(Stream, SeedSelection) {
  EXPECT_EQ(parse_stream("fixedpoint:a=ba,b=bab").prefix(6).str(), "babbab");
  EXPECT_EQ(parse_stream("fixedpoint:a=ab,b=ba,seed=b").prefix(8).str(), "baababba");
  EXPECT_THROW(parse_stream("fixedpoint:a=ba,b=a"), NotProlongable);
  EXPECT_THROW(parse_stream("fixedpoint:a=a,b=ab,seed=a"), NotProlongable);
}

TEST(Stream, Monotone) {
  const WordStream s = parse_stream("image:La Ra@directive:per=[(1,0)(1,1)]");
  const Word full = s.prefix(400);
  for (std::size_t n = 1; n <= 400; n += 7) EXPECT_EQ(s.prefix(n), full.prefix(n));
}

TEST(Stream, ZeroLengthIsRejected) {
  EXPECT_THROW(WordStream::fibonacci().prefix(0), InvalidArgument);
  EXPECT_THROW(WordStream::periodic(parse_word("ab"), Word{}), InvalidArgument);
}

TEST(StreamSpec, CanonicalRoundTrip) {
  for (const char* text : {"periodic:ab,a", "periodic:,ab", "fixedpoint:a=ab,b=a",
                           "fixedpoint:a=ab,b=ba,seed=b", "directive:pre=[(0,0)(1,0)]per=[(1,1)(1,0)]",
                           "image:a=aab,b=ab@fibonacci", "thue-morse", "fibonacci"}) {
    const WordStream s = parse_stream(text);
    EXPECT_EQ(to_string(s), text);
    EXPECT_EQ(parse_stream(to_string(s)), s);
  }
  EXPECT_EQ(to_string(parse_stream(" image: La Rb @ fibonacci ")), "image:a=aab,b=ab@fibonacci");
}

TEST(StreamSpec, ParseErrors) {
  EXPECT_THROW(parse_stream("sturmian"), ParseError);
  EXPECT_THROW(parse_stream("periodic:ab"), ParseError);
  EXPECT_THROW(parse_stream("periodic:ab,"), ParseError);
  EXPECT_THROW(parse_stream("periodic:ab,ac"), ParseError);
  EXPECT_THROW(parse_stream("fixedpoint:a=ab"), ParseError);
  EXPECT_THROW(parse_stream("fixedpoint:a=ab,b=,seed=a"), ParseError);
  EXPECT_THROW(parse_stream("image:La Rb"), ParseError);
  EXPECT_THROW(parse_stream("directive:per=[(1,0)]"), ParseError);
  EXPECT_THROW(parse_stream("directive:per=[(1,2)(1,0)]"), InvalidDirective);
}

TEST(DirectiveText, Grammar) {
  const DirectiveSequence seq = parse_directive(" pre=[(0,0)(2,2)] per=[(1,0)(3,0);(2,1)(1,0)] ");
  ASSERT_EQ(seq.preperiod.size(), 1u);
  ASSERT_EQ(seq.period.size(), 2u);
  EXPECT_EQ(seq.preperiod[0].b_block, (Block{2, 2}));
  EXPECT_EQ(seq.period[1].a_block, (Block{2, 1}));
  EXPECT_EQ(to_string(seq), "pre=[(0,0)(2,2)]per=[(1,0)(3,0)(2,1)(1,0)]");
  EXPECT_EQ(parse_directive(to_string(seq)), seq);
  EXPECT_EQ(parse_directive("pre=[]per=[(1,0)(1,0)]"), parse_directive("per=[(1,0)(1,0)]"));
  EXPECT_THROW(parse_directive("per=[]"), ParseError);
  EXPECT_THROW(parse_directive("pre=[(1,0)(1,0)]"), ParseError);
  EXPECT_THROW(parse_directive("per=[(1,-1)(1,0)]"), ParseError);
  EXPECT_THROW(parse_directive("per=[(1,0)(1,0)]x"), ParseError);
}
