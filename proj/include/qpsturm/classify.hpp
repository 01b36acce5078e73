#ifndef QPSTURM_CLASSIFY_HPP_
#define QPSTURM_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "qpsturm/morphism.hpp"

namespace qpsturm {

enum class Classification { QuasiperiodFree, WeaklyQuasiperiodic, StronglyQuasiperiodic };

enum class OnSturmianClassification { QuasiperiodFree, WeaklyOnSturmian, StronglyOnSturmian };

std::string_view to_string(Classification c) noexcept;
std::string_view to_string(OnSturmianClassification c) noexcept;

enum class Shape {
  Weak,             // {La,Rb}*{La,Ra}* u {Lb,Ra}*{Lb,Rb}*
  WeakOnSturmian,   // {La,Rb}* u {Lb,Ra}*
  Lyndon,           // {La,Rb}*
};

// Which half of a two-family shape a representative falls into.
enum class ShapeFamily { A, B };

// Some member of the relation closure of core is spelled in the shape.
// Throws InvalidArgument if core contains E.
bool shape_member(const GeneratorWord& core, Shape shape, std::size_t cap = kDefaultClosureCap);

// The first family (A = a-subscript-led, B = its E-conjugate) whose shape
// some closure member matches.
std::optional<ShapeFamily> shape_family(const GeneratorWord& core, Shape shape,
                                        std::size_t cap = kDefaultClosureCap);

// Syntactic test on a single spelling, no closure.
bool matches_shape(const GeneratorWord& word, Shape shape);

Classification classify(const GeneratorWord& gw, std::size_t cap = kDefaultClosureCap);

OnSturmianClassification classify_on_sturmian(const GeneratorWord& gw,
                                               std::size_t cap = kDefaultClosureCap);

// The four factor patterns that force strong quasiperiodicity:
//   P1  La X* Lb  |  Lb X* La
//   P2  Ra g La with g not over {Ra, La}  |  Rb g Lb with g not over {Rb, Lb}
//   P3  Ra Rb+ Ra  |  Rb Ra+ Rb
//   P4  Ra+ La+ Rb  |  Rb+ Lb+ Ra
enum class ForbiddenPattern { P1 = 1, P2, P3, P4 };

std::string_view to_string(ForbiddenPattern p) noexcept;

bool matches_pattern(const GeneratorWord& factor, ForbiddenPattern p);

struct ForbiddenWitness {
  ForbiddenPattern pattern;
  GeneratorWord f1;
  GeneratorWord f2;
  GeneratorWord f3;
  GeneratorWord representative;  // f1 f2 f3
};

// First witness in the order: closure members breadth first, then factor
// start, then factor length, then pattern P1 < P2 < P3 < P4.
std::optional<ForbiddenWitness> forbidden_witness(const GeneratorWord& core,
                                                  std::size_t cap = kDefaultClosureCap);

}  // namespace qpsturm

#endif  // QPSTURM_CLASSIFY_HPP_
