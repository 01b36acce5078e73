#include "qpsturm/spec_text.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "qpsturm/errors.hpp"

namespace qpsturm {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool consume(std::string_view& s, std::string_view token) {
  if (s.substr(0, token.size()) != token) return false;
  s.remove_prefix(token.size());
  return true;
}

// Recursive-descent reader over whitespace-free directive text.
class DirectiveReader {
 public:
  explicit DirectiveReader(std::string_view text) : all_(text), rest_(text) {}

  DirectiveSequence read() {
    DirectiveSequence seq;
    if (consume(rest_, "pre=")) seq.preperiod = read_list("pre");
    if (!consume(rest_, "per=")) fail("expected 'per='");
    seq.period = read_list("per");
    if (!rest_.empty()) fail("unexpected trailing text");
    if (seq.period.empty()) fail("'per' must contain at least one pair");
    return seq;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("directive: " + what + " at offset " +
                     std::to_string(all_.size() - rest_.size()) + " in '" + std::string(all_) +
                     "'");
  }

  std::vector<BlockPair> read_list(std::string_view name) {
    if (!consume(rest_, "[")) fail("expected '[' after '" + std::string(name) + "='");
    std::vector<Block> blocks;
    while (!consume(rest_, "]")) {
      if (consume(rest_, ";")) continue;
      if (rest_.empty()) fail("unterminated list");
      blocks.push_back(read_block());
    }
    if (blocks.size() % 2 != 0) {
      fail("'" + std::string(name) + "' must list whole pairs (a-block then b-block)");
    }
    std::vector<BlockPair> pairs;
    for (std::size_t i = 0; i < blocks.size(); i += 2) pairs.push_back({blocks[i], blocks[i + 1]});
    return pairs;
  }

  Block read_block() {
    if (!consume(rest_, "(")) fail("expected '('");
    Block b;
    b.d = read_uint();
    if (!consume(rest_, ",")) fail("expected ','");
    b.c = read_uint();
    if (!consume(rest_, ")")) fail("expected ')'");
    return b;
  }

  std::size_t read_uint() {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc() || ptr == rest_.data()) fail("expected a nonnegative integer");
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return value;
  }

  std::string_view all_;
  std::string_view rest_;
};

Word parse_word_field(std::string_view text, std::string_view context) {
  try {
    return parse_word(text);
  } catch (const InvalidCharacter& e) {
    throw ParseError(std::string(context) + ": " + e.what());
  }
}

// "a=<w>,b=<w>", optionally followed by ",seed=<x>" when seed is non-null.
BinaryMorphism parse_images(std::string_view text, std::string_view context,
                            std::string* seed = nullptr) {
  const std::string s = strip_spaces(text);
  std::string_view rest = s;
  if (!consume(rest, "a=")) throw ParseError(std::string(context) + ": expected 'a='");
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) throw ParseError(std::string(context) + ": expected ',b='");
  const Word image_a = parse_word_field(rest.substr(0, comma), context);
  rest.remove_prefix(comma + 1);
  if (!consume(rest, "b=")) throw ParseError(std::string(context) + ": expected 'b='");
  const auto next = rest.find(',');
  const Word image_b = parse_word_field(rest.substr(0, next), context);
  rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
  if (!rest.empty()) {
    if (seed == nullptr || !consume(rest, "seed=")) {
      throw ParseError(std::string(context) + ": unexpected '" + std::string(rest) + "'");
    }
    *seed = std::string(rest);
  }
  if (image_a.empty() || image_b.empty()) {
    throw ParseError(std::string(context) + ": morphism images must be nonempty");
  }
  return {image_a, image_b};
}

}  // namespace

DirectiveSequence parse_directive(std::string_view text) {
  const std::string s = strip_spaces(text);
  return DirectiveReader(s).read();
}

std::string to_string(const DirectiveSequence& seq) {
  auto list = [](const std::vector<BlockPair>& pairs) {
    std::string out = "[";
    for (const BlockPair& p : pairs) {
      for (const Block& b : {p.a_block, p.b_block}) {
        out += "(" + std::to_string(b.d) + "," + std::to_string(b.c) + ")";
      }
    }
    return out + "]";
  };
  return "pre=" + list(seq.preperiod) + "per=" + list(seq.period);
}

BinaryMorphism parse_morphism(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.substr(0, 2) == "a=") return parse_images(t, "morphism");
  return morphism_of(parse_generators(t));
}

WordStream parse_stream(std::string_view text) {
  const std::string_view t = trim(text);
  std::string_view rest = t;
  if (t == "thue-morse") return WordStream::thue_morse();
  if (t == "fibonacci") return WordStream::fibonacci();
  if (consume(rest, "periodic:")) {
    const std::string s = strip_spaces(rest);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("periodic: expected '<head>,<cycle>'");
    Word head = parse_word_field(std::string_view(s).substr(0, comma), "periodic head");
    Word cycle = parse_word_field(std::string_view(s).substr(comma + 1), "periodic cycle");
    if (cycle.empty()) throw ParseError("periodic: cycle must be nonempty");
    return WordStream::periodic(std::move(head), std::move(cycle));
  }
  if (consume(rest, "fixedpoint:")) {
    std::string seed;
    BinaryMorphism m = parse_images(rest, "fixedpoint", &seed);
    Letter letter = m.prolongable_on(Letter::A) ? Letter::A : Letter::B;
    if (seed == "a") {
      letter = Letter::A;
    } else if (seed == "b") {
      letter = Letter::B;
    } else if (!seed.empty()) {
      throw ParseError("fixedpoint: seed must be 'a' or 'b'");
    }
    return WordStream::fixed_point(std::move(m), letter);
  }
  if (consume(rest, "directive:")) return WordStream::directive(parse_directive(rest));
  if (consume(rest, "image:")) {
    const auto at = rest.find('@');
    if (at == std::string_view::npos) throw ParseError("image: expected '<morphism>@<stream>'");
    BinaryMorphism m = parse_morphism(rest.substr(0, at));
    return WordStream::image(std::move(m), parse_stream(rest.substr(at + 1)));
  }
  throw ParseError("unknown stream spec '" + std::string(t) +
                   "' (expected periodic:, fixedpoint:, directive:, image:, thue-morse or "
                   "fibonacci)");
}

std::string to_string(const WordStream& s) {
  struct Printer {
    std::string operator()(const spec::Periodic& p) const {
      return "periodic:" + p.head.str() + "," + p.cycle.str();
    }
    std::string operator()(const spec::FixedPoint& p) const {
      std::string out = "fixedpoint:" + to_string(p.morphism);
      const Letter fallback = p.morphism.prolongable_on(Letter::A) ? Letter::A : Letter::B;
      if (p.seed != fallback) out += std::string(",seed=") + to_char(p.seed);
      return out;
    }
    std::string operator()(const spec::Directive& p) const {
      return "directive:" + to_string(p.seq);
    }
    std::string operator()(const spec::MorphicImage& p) const {
      return "image:" + to_string(p.morphism) + "@" + to_string(*p.inner);
    }
    std::string operator()(const spec::ThueMorse&) const { return "thue-morse"; }
    std::string operator()(const spec::Fibonacci&) const { return "fibonacci"; }
  };
  return std::visit(Printer{}, s.spec());
}

}  // namespace qpsturm
