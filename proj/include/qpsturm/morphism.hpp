#ifndef QPSTURM_MORPHISM_HPP_
#define QPSTURM_MORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpsturm/word.hpp"

namespace qpsturm {

// The five generators of the monoid of Sturmian morphisms.
enum class Generator : std::uint8_t { E, La, Lb, Ra, Rb };

std::string_view to_string(Generator g) noexcept;

// A composition g1 g2 ... gn. Applying it to a word applies gn first, so the
// sequence reads exactly like juxtaposition of morphisms.
using GeneratorWord = std::vector<Generator>;

// Space separated tokens; "" for the identity.
std::string to_string(const GeneratorWord& gw);

// Accepts tokens E, La, Lb, Ra, Rb (any case) separated by whitespace and/or
// commas. Throws ParseError.
GeneratorWord parse_generators(std::string_view text);

// Morphism on {a, b} given by its two letter images, both nonempty.
class BinaryMorphism {
 public:
  // Throws InvalidArgument when an image is empty.
  BinaryMorphism(Word image_a, Word image_b);

  static BinaryMorphism identity();

  const Word& image(Letter x) const noexcept { return x == Letter::A ? image_a_ : image_b_; }
  const Word& image_a() const noexcept { return image_a_; }
  const Word& image_b() const noexcept { return image_b_; }

  // Prolongable on x: the image of x starts with x and is longer than one letter.
  bool prolongable_on(Letter x) const noexcept;

  friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;

 private:
  Word image_a_;
  Word image_b_;
};

// "a=<image>,b=<image>"
std::string to_string(const BinaryMorphism& m);

BinaryMorphism generator_image(Generator g);

Word apply(const BinaryMorphism& m, const Word& w);

// Composition f o g: first g, then f.
BinaryMorphism compose(const BinaryMorphism& f, const BinaryMorphism& g);

BinaryMorphism morphism_of(const GeneratorWord& gw);

// Equality of the denoted morphisms, decided on letter images.
bool morphisms_equal(const GeneratorWord& f, const GeneratorWord& g);

// Swaps the letter subscript: La <-> Lb, Ra <-> Rb; E is fixed.
Generator conjugate(Generator g) noexcept;

struct NormalizedWord {
  GeneratorWord core;  // over {La, Lb, Ra, Rb}
  bool flip = false;   // a single trailing E remains

  friend bool operator==(const NormalizedWord&, const NormalizedWord&) = default;
};

// Moves every E to the right end using E La = Lb E and E Ra = Rb E, then
// cancels pairs with E E = Id.
NormalizedWord normalize_E(const GeneratorWord& gw);

GeneratorWord denormalize(const NormalizedWord& nw);

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Every generator word reachable from core by rewriting a factor with
//   La Lb^n Ra <-> Ra Rb^n La   and   Lb La^n Rb <-> Rb Ra^n Lb   (n >= 0)
// in breadth-first order, core first. Throws InvalidArgument if core
// contains E, ClosureCapExceeded if more than cap words are reached.
std::vector<GeneratorWord> relation_closure(const GeneratorWord& core,
                                            std::size_t cap = kDefaultClosureCap);

}  // namespace qpsturm

#endif  // QPSTURM_MORPHISM_HPP_
