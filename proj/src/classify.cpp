#include "qpsturm/classify.hpp"

#include <algorithm>
#include <initializer_list>

#include "qpsturm/errors.hpp"

namespace qpsturm {

namespace {

using G = Generator;

bool in(Generator g, std::initializer_list<Generator> set) {
  return std::find(set.begin(), set.end(), g) != set.end();
}

// word in first* second*, splitting after the longest prefix over first.
bool two_phase(const GeneratorWord& word, std::initializer_list<Generator> first,
               std::initializer_list<Generator> second) {
  std::size_t i = 0;
  while (i < word.size() && in(word[i], first)) ++i;
  for (; i < word.size(); ++i) {
    if (!in(word[i], second)) return false;
  }
  return true;
}

bool over(const GeneratorWord& word, std::initializer_list<Generator> set) {
  return two_phase(word, set, {});
}

std::optional<ShapeFamily> family_of(const GeneratorWord& word, Shape shape) {
  switch (shape) {
    case Shape::Weak:
      if (two_phase(word, {G::La, G::Rb}, {G::La, G::Ra})) return ShapeFamily::A;
      if (two_phase(word, {G::Lb, G::Ra}, {G::Lb, G::Rb})) return ShapeFamily::B;
      break;
    case Shape::WeakOnSturmian:
      if (over(word, {G::La, G::Rb})) return ShapeFamily::A;
      if (over(word, {G::Lb, G::Ra})) return ShapeFamily::B;
      break;
    case Shape::Lyndon:
      if (over(word, {G::La, G::Rb})) return ShapeFamily::A;
      break;
  }
  return std::nullopt;
}

void require_core(const GeneratorWord& core) {
  if (std::find(core.begin(), core.end(), G::E) != core.end()) {
    throw InvalidArgument("expected a generator word without E");
  }
}

// x y+ x
bool sandwich_run(const GeneratorWord& f, Generator x, Generator y) {
  if (f.size() < 3 || f.front() != x || f.back() != x) return false;
  return std::all_of(f.begin() + 1, f.end() - 1, [y](Generator g) { return g == y; });
}

// x+ y+ z
bool two_runs_then(const GeneratorWord& f, Generator x, Generator y, Generator z) {
  if (f.size() < 3 || f.back() != z) return false;
  std::size_t i = 0;
  const std::size_t body = f.size() - 1;
  while (i < body && f[i] == x) ++i;
  if (i == 0 || i == body) return false;
  const std::size_t y_start = i;
  while (i < body && f[i] == y) ++i;
  return i == body && i > y_start;
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::QuasiperiodFree:
      return "QUASIPERIOD_FREE";
    case Classification::WeaklyQuasiperiodic:
      return "WEAKLY_QUASIPERIODIC";
    case Classification::StronglyQuasiperiodic:
      return "STRONGLY_QUASIPERIODIC";
  }
  return "";
}

std::string_view to_string(OnSturmianClassification c) noexcept {
  switch (c) {
    case OnSturmianClassification::QuasiperiodFree:
      return "QUASIPERIOD_FREE";
    case OnSturmianClassification::WeaklyOnSturmian:
      return "WEAKLY_ON_STURMIAN";
    case OnSturmianClassification::StronglyOnSturmian:
      return "STRONGLY_ON_STURMIAN";
  }
  return "";
}

std::string_view to_string(ForbiddenPattern p) noexcept {
  switch (p) {
    case ForbiddenPattern::P1:
      return "P1";
    case ForbiddenPattern::P2:
      return "P2";
    case ForbiddenPattern::P3:
      return "P3";
    case ForbiddenPattern::P4:
      return "P4";
  }
  return "";
}

bool matches_shape(const GeneratorWord& word, Shape shape) {
  return family_of(word, shape).has_value();
}

std::optional<ShapeFamily> shape_family(const GeneratorWord& core, Shape shape,
                                        std::size_t cap) {
  require_core(core);
  for (const GeneratorWord& member : relation_closure(core, cap)) {
    if (auto f = family_of(member, shape)) return f;
  }
  return std::nullopt;
}

bool shape_member(const GeneratorWord& core, Shape shape, std::size_t cap) {
  return shape_family(core, shape, cap).has_value();
}

Classification classify(const GeneratorWord& gw, std::size_t cap) {
  // E preserves quasiperiodicity in both directions, so the flip is irrelevant.
  const NormalizedWord nw = normalize_E(gw);
  if (nw.core.empty()) return Classification::QuasiperiodFree;
  return shape_member(nw.core, Shape::Weak, cap) ? Classification::WeaklyQuasiperiodic
                                                 : Classification::StronglyQuasiperiodic;
}

OnSturmianClassification classify_on_sturmian(const GeneratorWord& gw, std::size_t cap) {
  const NormalizedWord nw = normalize_E(gw);
  if (nw.core.empty()) return OnSturmianClassification::QuasiperiodFree;
  return shape_member(nw.core, Shape::WeakOnSturmian, cap)
             ? OnSturmianClassification::WeaklyOnSturmian
             : OnSturmianClassification::StronglyOnSturmian;
}

bool matches_pattern(const GeneratorWord& f, ForbiddenPattern p) {
  switch (p) {
    case ForbiddenPattern::P1:
      return f.size() >= 2 && ((f.front() == G::La && f.back() == G::Lb) ||
                                (f.front() == G::Lb && f.back() == G::La));
    case ForbiddenPattern::P2: {
      if (f.size() < 3) return false;
      const GeneratorWord g(f.begin() + 1, f.end() - 1);
      return (f.front() == G::Ra && f.back() == G::La && !over(g, {G::Ra, G::La})) ||
             (f.front() == G::Rb && f.back() == G::Lb && !over(g, {G::Rb, G::Lb}));
    }
    case ForbiddenPattern::P3:
      return sandwich_run(f, G::Ra, G::Rb) || sandwich_run(f, G::Rb, G::Ra);
    case ForbiddenPattern::P4:
      return two_runs_then(f, G::Ra, G::La, G::Rb) || two_runs_then(f, G::Rb, G::Lb, G::Ra);
  }
  return false;
}

std::optional<ForbiddenWitness> forbidden_witness(const GeneratorWord& core, std::size_t cap) {
  require_core(core);
  constexpr ForbiddenPattern kPatterns[] = {ForbiddenPattern::P1, ForbiddenPattern::P2,
                                            ForbiddenPattern::P3, ForbiddenPattern::P4};
  for (const GeneratorWord& member : relation_closure(core, cap)) {
    const std::size_t n = member.size();
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t len = 1; start + len <= n; ++len) {
        const auto first = member.begin() + static_cast<std::ptrdiff_t>(start);
        const auto last = first + static_cast<std::ptrdiff_t>(len);
        const GeneratorWord f2(first, last);
        for (ForbiddenPattern p : kPatterns) {
          if (!matches_pattern(f2, p)) continue;
          return ForbiddenWitness{p, GeneratorWord(member.begin(), first), f2,
                                  GeneratorWord(last, member.end()), member};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace qpsturm
