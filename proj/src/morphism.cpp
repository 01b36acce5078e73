#include "qpsturm/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "qpsturm/errors.hpp"

namespace qpsturm {

namespace {

constexpr std::string_view kGeneratorNames[] = {"E", "La", "Lb", "Ra", "Rb"};

std::string lower(std::string_view s) {
  std::string r(s);
  for (char& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return r;
}

std::string key_of(const GeneratorWord& gw) {
  std::string key(gw.size(), '\0');
  std::transform(gw.begin(), gw.end(), key.begin(),
                 [](Generator g) { return static_cast<char>('0' + static_cast<int>(g)); });
  return key;
}

struct Rewrite {
  Generator head;    // first generator of the side
  Generator middle;  // repeated n >= 0 times
  Generator tail;    // last generator
  Generator other_head;
  Generator other_middle;
  Generator other_tail;
};

// Both directions of both relations.
constexpr Rewrite kRewrites[] = {
    {Generator::La, Generator::Lb, Generator::Ra, Generator::Ra, Generator::Rb, Generator::La},
    {Generator::Ra, Generator::Rb, Generator::La, Generator::La, Generator::Lb, Generator::Ra},
    {Generator::Lb, Generator::La, Generator::Rb, Generator::Rb, Generator::Ra, Generator::Lb},
    {Generator::Rb, Generator::Ra, Generator::Lb, Generator::Lb, Generator::La, Generator::Rb},
};

// Calls emit(neighbour) for every single-step rewrite of w.
template <typename Emit>
void for_each_rewrite(const GeneratorWord& w, Emit&& emit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const Rewrite& r : kRewrites) {
      if (w[i] != r.head) continue;
      std::size_t j = i + 1;
      while (j < n && w[j] == r.middle) ++j;
      // At a fixed start the middle run is forced, so there is at most one n.
      if (j >= n || w[j] != r.tail) continue;
      GeneratorWord next = w;
      next[i] = r.other_head;
      std::fill(next.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                next.begin() + static_cast<std::ptrdiff_t>(j), r.other_middle);
      next[j] = r.other_tail;
      emit(std::move(next));
    }
  }
}

}  // namespace

std::string_view to_string(Generator g) noexcept {
  return kGeneratorNames[static_cast<int>(g)];
}

std::string to_string(const GeneratorWord& gw) {
  std::string out;
  for (std::size_t i = 0; i < gw.size(); ++i) {
    if (i) out += ' ';
    out += to_string(gw[i]);
  }
  return out;
}

GeneratorWord parse_generators(std::string_view text) {
  GeneratorWord gw;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') {
      ++j;
    }
    const std::string token = lower(text.substr(i, j - i));
    bool matched = false;
    for (int g = 0; g < 5; ++g) {
      if (token == lower(kGeneratorNames[g])) {
        gw.push_back(static_cast<Generator>(g));
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError("unknown generator '" + std::string(text.substr(i, j - i)) +
                       "' (expected E, La, Lb, Ra or Rb)");
    }
    i = j;
  }
  return gw;
}

BinaryMorphism::BinaryMorphism(Word image_a, Word image_b)
    : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
  if (image_a_.empty() || image_b_.empty()) {
    throw InvalidArgument("morphism images must be nonempty");
  }
}

BinaryMorphism BinaryMorphism::identity() {
  return {Word::repeat(Letter::A, 1), Word::repeat(Letter::B, 1)};
}

bool BinaryMorphism::prolongable_on(Letter x) const noexcept {
  const Word& img = image(x);
  return img.size() >= 2 && img.front() == x;
}

std::string to_string(const BinaryMorphism& m) {
  return "a=" + m.image_a().str() + ",b=" + m.image_b().str();
}

BinaryMorphism generator_image(Generator g) {
  static const Word a = parse_word("a");
  static const Word b = parse_word("b");
  static const Word ab = parse_word("ab");
  static const Word ba = parse_word("ba");
  switch (g) {
    case Generator::E:
      return {b, a};
    case Generator::La:
      return {a, ab};
    case Generator::Lb:
      return {ba, b};
    case Generator::Ra:
      return {a, ba};
    case Generator::Rb:
      return {ab, b};
  }
  return BinaryMorphism::identity();
}

Word apply(const BinaryMorphism& m, const Word& w) {
  const std::size_t na = count_letter(w, Letter::A);
  Word out;
  out.reserve(na * m.image_a().size() + (w.size() - na) * m.image_b().size());
  for (std::size_t i = 0; i < w.size(); ++i) out.append(m.image(w[i]));
  return out;
}

BinaryMorphism compose(const BinaryMorphism& f, const BinaryMorphism& g) {
  return {apply(f, g.image_a()), apply(f, g.image_b())};
}

BinaryMorphism morphism_of(const GeneratorWord& gw) {
  BinaryMorphism m = BinaryMorphism::identity();
  for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
    m = compose(generator_image(*it), m);
  }
  return m;
}

bool morphisms_equal(const GeneratorWord& f, const GeneratorWord& g) {
  return morphism_of(f) == morphism_of(g);
}

Generator conjugate(Generator g) noexcept {
  switch (g) {
    case Generator::La:
      return Generator::Lb;
    case Generator::Lb:
      return Generator::La;
    case Generator::Ra:
      return Generator::Rb;
    case Generator::Rb:
      return Generator::Ra;
    case Generator::E:
      break;
  }
  return Generator::E;
}

NormalizedWord normalize_E(const GeneratorWord& gw) {
  NormalizedWord nw;
  for (Generator g : gw) {
    if (g == Generator::E) {
      nw.flip = !nw.flip;
    } else {
      nw.core.push_back(nw.flip ? conjugate(g) : g);
    }
  }
  return nw;
}

GeneratorWord denormalize(const NormalizedWord& nw) {
  GeneratorWord gw = nw.core;
  if (nw.flip) gw.push_back(Generator::E);
  return gw;
}

std::vector<GeneratorWord> relation_closure(const GeneratorWord& core, std::size_t cap) {
  if (std::find(core.begin(), core.end(), Generator::E) != core.end()) {
    throw InvalidArgument("relation closure expects a word without E");
  }
  if (cap == 0) throw InvalidArgument("closure cap must be at least 1");

  std::vector<GeneratorWord> order{core};
  std::unordered_set<std::string> seen{key_of(core)};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const GeneratorWord current = order[head];
    for_each_rewrite(current, [&](GeneratorWord next) {
      if (!seen.insert(key_of(next)).second) return;
      if (seen.size() > cap) throw ClosureCapExceeded(cap);
      order.push_back(std::move(next));
    });
  }
  return order;
}

}  // namespace qpsturm
