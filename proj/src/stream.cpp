#include "qpsturm/stream.hpp"

#include "qpsturm/errors.hpp"

namespace qpsturm {

namespace spec {

bool operator==(const MorphicImage& x, const MorphicImage& y) {
  return x.morphism == y.morphism && *x.inner == *y.inner;
}

}  // namespace spec

namespace {

Word iterate_fixed_point(const BinaryMorphism& f, Letter seed, std::size_t n) {
  Word w = Word::repeat(seed, 1);
  // Each step strictly extends w, and f^k(seed) is a prefix of f^(k+1)(seed).
  while (w.size() < n) {
    Word next;
    for (std::size_t i = 0; i < w.size() && next.size() < n; ++i) next.append(f.image(w[i]));
    w = std::move(next);
  }
  return w.prefix(n);
}

const BinaryMorphism& thue_morse_morphism() {
  static const BinaryMorphism m(parse_word("ab"), parse_word("ba"));
  return m;
}

const BinaryMorphism& fibonacci_morphism() {
  static const BinaryMorphism m(parse_word("ab"), parse_word("a"));
  return m;
}

}  // namespace

WordStream WordStream::periodic(Word head, Word cycle) {
  if (cycle.empty()) throw InvalidArgument("periodic stream needs a nonempty cycle");
  return WordStream(spec::Periodic{std::move(head), std::move(cycle)});
}

WordStream WordStream::fixed_point(BinaryMorphism morphism, Letter seed) {
  if (!morphism.prolongable_on(seed)) {
    throw NotProlongable("morphism " + to_string(morphism) + " is not prolongable on " +
                         std::string(1, to_char(seed)));
  }
  return WordStream(spec::FixedPoint{std::move(morphism), seed});
}

WordStream WordStream::directive(DirectiveSequence seq) {
  require_valid(seq);
  return WordStream(spec::Directive{std::move(seq)});
}

WordStream WordStream::image(BinaryMorphism morphism, WordStream inner) {
  return WordStream(spec::MorphicImage{std::move(morphism),
                                       std::make_shared<const WordStream>(std::move(inner))});
}

WordStream WordStream::thue_morse() { return WordStream(spec::ThueMorse{}); }

WordStream WordStream::fibonacci() { return WordStream(spec::Fibonacci{}); }

Word WordStream::prefix(std::size_t n, std::size_t budget) const {
  if (n == 0) throw InvalidArgument("prefix length must be at least 1");

  struct Visitor {
    std::size_t n;
    std::size_t budget;

    Word operator()(const spec::Periodic& p) const {
      Word w = p.head.prefix(n);
      while (w.size() < n) w.append(p.cycle);
      return w.prefix(n);
    }
    Word operator()(const spec::FixedPoint& p) const {
      return iterate_fixed_point(p.morphism, p.seed, n);
    }
    Word operator()(const spec::Directive& p) const {
      return sturmian_prefix(p.seq, n, budget);
    }
    Word operator()(const spec::MorphicImage& p) const {
      // Non-erasing, so n inner letters yield at least n image letters.
      const Word inner = p.inner->prefix(n, budget);
      Word out;
      for (std::size_t i = 0; i < inner.size() && out.size() < n; ++i) {
        out.append(p.morphism.image(inner[i]));
      }
      return out.prefix(n);
    }
    Word operator()(const spec::ThueMorse&) const {
      return iterate_fixed_point(thue_morse_morphism(), Letter::A, n);
    }
    Word operator()(const spec::Fibonacci&) const {
      return iterate_fixed_point(fibonacci_morphism(), Letter::A, n);
    }
  };
  return std::visit(Visitor{n, budget}, spec_);
}

}  // namespace qpsturm
