#ifndef QPSTURM_STREAM_HPP_
#define QPSTURM_STREAM_HPP_

#include <cstddef>
#include <memory>
#include <variant>

#include "qpsturm/morphism.hpp"
#include "qpsturm/sturmian.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm {

class WordStream;

namespace spec {

// head cycle^omega
struct Periodic {
  Word head;
  Word cycle;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

// f^omega(seed)
struct FixedPoint {
  BinaryMorphism morphism;
  Letter seed;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct Directive {
  DirectiveSequence seq;
  friend bool operator==(const Directive&, const Directive&) = default;
};

// f(inner)
struct MorphicImage {
  BinaryMorphism morphism;
  std::shared_ptr<const WordStream> inner;
  friend bool operator==(const MorphicImage& x, const MorphicImage& y);
};

// Fixed point of a -> ab, b -> ba.
struct ThueMorse {
  friend bool operator==(ThueMorse, ThueMorse) { return true; }
};

// Fixed point of a -> ab, b -> a.
struct Fibonacci {
  friend bool operator==(Fibonacci, Fibonacci) { return true; }
};

}  // namespace spec

// A value-level description of an infinite word over {a, b}. Immutable; the
// only observation is prefix(n), and prefix(n) is a prefix of prefix(m)
// whenever n <= m.
class WordStream {
 public:
  using Spec = std::variant<spec::Periodic, spec::FixedPoint, spec::Directive,
                            spec::MorphicImage, spec::ThueMorse, spec::Fibonacci>;

  // Throws InvalidArgument for an empty cycle.
  static WordStream periodic(Word head, Word cycle);
  // Throws NotProlongable unless morphism(seed) starts with seed and has
  // length at least 2.
  static WordStream fixed_point(BinaryMorphism morphism, Letter seed);
  // Throws InvalidDirective.
  static WordStream directive(DirectiveSequence seq);
  static WordStream image(BinaryMorphism morphism, WordStream inner);
  static WordStream thue_morse();
  static WordStream fibonacci();

  const Spec& spec() const noexcept { return spec_; }

  // Throws InvalidArgument for n = 0 and GenerationStalled from directive
  // specs (budget is the pair budget of sturmian_prefix).
  Word prefix(std::size_t n, std::size_t budget = kDefaultPairBudget) const;

  friend bool operator==(const WordStream&, const WordStream&) = default;

 private:
  explicit WordStream(Spec s) : spec_(std::move(s)) {}
  Spec spec_;
};

// Convenience spelling of stream.prefix(n).
inline Word stream_prefix(const WordStream& s, std::size_t n,
                          std::size_t budget = kDefaultPairBudget) {
  return s.prefix(n, budget);
}

}  // namespace qpsturm

#endif  // QPSTURM_STREAM_HPP_
