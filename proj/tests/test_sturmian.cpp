#include <gtest/gtest.h>

#include "qpsturm/errors.hpp"
#include "qpsturm/quasiperiod.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/sturmian.hpp"

using namespace qpsturm;
using G = Generator;

namespace {

DirectiveSequence d(const char* text) { return parse_directive(text); }

}  // namespace

TEST(Directive, Indexing) {
  const DirectiveSequence seq = d("pre=[(0,0)(2,2)]per=[(1,0)(3,0)]");
  EXPECT_EQ(seq.block(1), (Block{0, 0}));
  EXPECT_EQ(seq.block(2), (Block{2, 2}));
  EXPECT_EQ(seq.block(3), (Block{1, 0}));
  EXPECT_EQ(seq.block(6), (Block{3, 0}));
  EXPECT_EQ(seq.pair(5).b_block, (Block{3, 0}));
}

TEST(Directive, Generators) {
  EXPECT_EQ(directive_to_generators(d("per=[(2,1)(3,1)]"), 1),
            (GeneratorWord{G::La, G::Ra, G::Lb, G::Lb, G::Rb}));
  EXPECT_EQ(directive_to_generators(d("per=[(1,0)(1,1)]"), 2),
            (GeneratorWord{G::La, G::Rb, G::La, G::Rb}));
  EXPECT_TRUE(directive_to_generators(d("per=[(1,0)(1,1)]"), 0).empty());
}

TEST(Directive, Validation) {
  EXPECT_FALSE(validate_directive(d("per=[(1,0)(1,0)]")));
  EXPECT_FALSE(validate_directive(d("pre=[(0,0)(1,0)]per=[(1,1)(1,0)]")));

  const auto over = validate_directive(d("per=[(1,2)(1,0)]"));
  ASSERT_TRUE(over);
  EXPECT_EQ(over->block_index, 1u);

  const auto empty = validate_directive(d("per=[(1,0)(0,0)]"));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->block_index, 2u);

  const auto chained = validate_directive(d("per=[(2,1)(1,1)]"));
  ASSERT_TRUE(chained);
  EXPECT_EQ(chained->block_index, 2u);

  // Block 3 repeats block 1 with c = d, right after block 2 with c > 0.
  const auto wrap = validate_directive(d("per=[(1,1)(2,1)]"));
  ASSERT_TRUE(wrap);
  EXPECT_EQ(wrap->block_index, 3u);

  try {
    require_valid(d("per=[(1,1)(1,1)]"));
    FAIL() << "expected InvalidDirective";
  } catch (const InvalidDirective& e) {
    EXPECT_EQ(e.block_index(), 2u);
  }
}

// Prefixes frozen from an untruncated composition oracle.
TEST(SturmianPrefix, FrozenValues) {
  EXPECT_EQ(sturmian_prefix(d("per=[(1,0)(1,0)]"), 8).str(), "abaababa");
  EXPECT_EQ(sturmian_prefix(d("per=[(1,0)(1,1)]"), 24).str(), "aabaababaabaababaababaab");
  EXPECT_EQ(sturmian_prefix(d("per=[(1,1)(1,0)]"), 24).str(), "babaababaabaababaababaab");
  EXPECT_EQ(sturmian_prefix(d("per=[(2,0)(1,0)]"), 24).str(), "aabaaabaaabaabaaabaaabaa");
  EXPECT_EQ(sturmian_prefix(d("per=[(1,0)(2,1)]"), 24).str(), "abaabababaababaabababaab");
  EXPECT_EQ(sturmian_prefix(d("pre=[(0,0)(2,2)]per=[(1,0)(3,0)]"), 24).str(),
            "abbbabbbabbbabbabbbabbba");
}

TEST(SturmianPrefix, Budget) {
  EXPECT_THROW(sturmian_prefix(d("per=[(1,0)(1,0)]"), 100, 1), GenerationStalled);
  EXPECT_NO_THROW(sturmian_prefix(d("per=[(1,0)(1,0)]"), 100, 16));
  EXPECT_THROW(sturmian_prefix(d("per=[(1,0)(1,0)]"), 0), InvalidArgument);
}

TEST(SturmianPrefix, Balanced) {
  for (const char* text : {"per=[(1,0)(1,0)]", "per=[(3,1)(2,0)]", "per=[(1,0)(1,1)]"}) {
    EXPECT_TRUE(is_balanced(sturmian_prefix(d(text), 2000))) << text;
  }
}

TEST(Decision, Families) {
  EXPECT_FALSE(nonquasiperiodic_family(d("per=[(1,0)(1,0)]")));
  EXPECT_EQ(nonquasiperiodic_family(d("per=[(1,0)(1,1)]")), NonQuasiperiodicFamily::LaRb);
  EXPECT_EQ(nonquasiperiodic_family(d("per=[(1,1)(1,0)]")), NonQuasiperiodicFamily::LbRa);
  EXPECT_EQ(nonquasiperiodic_family(d("pre=[(0,0)(1,0)]per=[(1,1)(1,0)]")),
            NonQuasiperiodicFamily::LbRa);
  EXPECT_EQ(nonquasiperiodic_family(d("pre=[(0,0)(2,2)]per=[(1,0)(3,3)]")),
            NonQuasiperiodicFamily::LaRb);
  // The preperiod breaks the alternation.
  EXPECT_FALSE(nonquasiperiodic_family(d("pre=[(1,0)(1,0)]per=[(1,0)(1,1)]")));
  EXPECT_EQ(lyndon_order(NonQuasiperiodicFamily::LaRb), LetterOrder::AB);
  EXPECT_EQ(lyndon_order(NonQuasiperiodicFamily::LbRa), LetterOrder::BA);
  EXPECT_EQ(to_string(NonQuasiperiodicFamily::LaRb), "La,Rb");
  EXPECT_TRUE(is_standard(d("per=[(2,0)(1,0)]")));
  EXPECT_FALSE(is_standard(d("per=[(2,1)(1,0)]")));
}

TEST(Decision, ExactReport) {
  const auto qp = exact_report(d("per=[(1,0)(1,0)]"), 1000, 50);
  EXPECT_EQ(qp.verdict, Verdict::ExactQuasiperiodic);
  EXPECT_EQ(qp.smallest, parse_word("aba"));
  const auto free = exact_report(d("per=[(1,0)(1,1)]"), 1000, 50);
  EXPECT_EQ(free.verdict, Verdict::ExactNonQuasiperiodic);
  EXPECT_TRUE(free.found.empty());
  // Lmax too small to see the quasiperiod of a quasiperiodic word.
  EXPECT_THROW(exact_report(d("per=[(3,1)(2,0)]"), 1000, 2), InvalidArgument);
}

TEST(Shape, Prediction) {
  const ShapeReport r = check_shape(parse_word("abaababaab"));
  EXPECT_TRUE(r.conforms);
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.predicted_quasiperiod, parse_word("aba"));

  const ShapeReport s = check_shape(parse_word("aabaaab"));
  EXPECT_TRUE(s.conforms);
  EXPECT_EQ(s.i, 2u);
  EXPECT_EQ(s.n, 3u);
  EXPECT_EQ(s.predicted_quasiperiod, parse_word("aabaa"));
}

TEST(Shape, InternalRunsDecideN) {
  // The only run of a strictly between two b has length 2.
  const ShapeReport r = check_shape(parse_word("abaab"));
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.predicted_quasiperiod, parse_word("abaa"));
}

TEST(Shape, NoPrediction) {
  const ShapeReport start_b = check_shape(parse_word("babaab"));
  EXPECT_TRUE(start_b.conforms);
  EXPECT_EQ(start_b.i, 0u);
  EXPECT_FALSE(start_b.predicted_quasiperiod);

  const ShapeReport long_head = check_shape(parse_word("aabab"));
  EXPECT_EQ(long_head.i, 2u);
  EXPECT_EQ(long_head.n, 1u);
  EXPECT_FALSE(long_head.predicted_quasiperiod);

  EXPECT_FALSE(check_shape(parse_word("abbaaab")).conforms);
  EXPECT_THROW(check_shape(parse_word("aaba")), TooFewBs);
}
