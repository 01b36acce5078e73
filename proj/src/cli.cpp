#include "qpsturm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>

#include "qpsturm/classify.hpp"
#include "qpsturm/errors.hpp"
#include "qpsturm/lyndon.hpp"
#include "qpsturm/morphism.hpp"
#include "qpsturm/quasiperiod.hpp"
#include "qpsturm/spec_text.hpp"
#include "qpsturm/stream.hpp"
#include "qpsturm/sturmian.hpp"
#include "qpsturm/verify.hpp"
#include "qpsturm/word.hpp"

namespace qpsturm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kHeadLength = 64;

struct Settings {
  bool json = false;
  std::size_t prefix = kDefaultPrefix;
  std::size_t max_qp = kDefaultMaxQuasiperiod;
  std::string order;  // empty means both
  std::uint64_t seed = kDefaultVerifySeed;
  std::size_t budget = kDefaultPairBudget;
};

struct Report {
  std::string kind;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string provenance;
};

std::vector<LetterOrder> orders(const Settings& s) {
  if (s.order == "ab") return {LetterOrder::AB};
  if (s.order == "ba") return {LetterOrder::BA};
  return {LetterOrder::AB, LetterOrder::BA};
}

Json order_input(const Settings& s) { return s.order.empty() ? Json("both") : Json(s.order); }

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

Json optional_word(const std::optional<Word>& w) { return w ? Json(w->str()) : Json(nullptr); }

Json lyndon_json(const LyndonStatus& status) {
  Json out = Json::object();
  out["status"] = to_string(status.outcome);
  out["position"] = status.consistent() ? Json(nullptr) : Json(status.position);
  return out;
}

std::string read_word_argument(const std::string& text, std::istream& in) {
  if (text != "-") return text;
  std::string raw{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  raw.erase(std::remove_if(raw.begin(), raw.end(),
                           [](unsigned char c) { return std::isspace(c) != 0; }),
            raw.end());
  return raw;
}

Report word_command(const std::string& text, std::istream& in, const Settings& s) {
  const Word w = parse_word(read_word_argument(text, in));
  if (w.empty()) throw EmptyInput("word must be nonempty");

  Report r{"word", {}, {}, "EXACT"};
  r.inputs["word"] = w.str();
  r.inputs["order"] = order_input(s);
  r.results["length"] = w.size();
  const auto qps = quasiperiods(w);
  r.results["quasiperiods"] = words_json(qps);
  r.results["smallest_quasiperiod"] =
      qps.empty() ? Json(nullptr) : Json(qps.front().str());
  r.results["superprimitive"] = qps.empty();
  r.results["balanced"] = is_balanced(w);
  r.results["unbordered"] = is_unbordered(w);
  Json lyndon = Json::object();
  for (LetterOrder o : orders(s)) lyndon[std::string(to_string(o))] = is_lyndon(w, o);
  r.results["lyndon"] = lyndon;
  r.results["overlap_free"] = is_overlap_free(w);
  return r;
}

Json report_json(const QuasiperiodReport& q) {
  Json out = Json::object();
  out["prefix_length_analyzed"] = q.prefix_length_analyzed;
  out["candidates_bound"] = q.candidates_bound;
  Json found = Json::array();
  for (const auto& e : q.found) {
    found.push_back({{"quasiperiod", e.quasiperiod.str()}, {"covered_length", e.covered_length}});
  }
  out["found"] = found;
  out["smallest"] = optional_word(q.smallest);
  out["verdict"] = to_string(q.verdict);
  return out;
}

void require_bounds(const Settings& s) {
  if (s.max_qp < 1 || s.max_qp >= s.prefix) {
    throw InvalidArgument("--max-qp must satisfy 1 <= L < N (got L=" + std::to_string(s.max_qp) +
                          ", N=" + std::to_string(s.prefix) + ")");
  }
}

Report stream_command(const std::string& text, const Settings& s) {
  const WordStream st = parse_stream(text);
  require_bounds(s);
  const Word prefix = st.prefix(s.prefix, s.budget);

  Report r{"stream", {}, {}, "EVIDENCE"};
  r.inputs["spec"] = to_string(st);
  r.inputs["prefix"] = s.prefix;
  r.inputs["max_qp"] = s.max_qp;
  r.inputs["order"] = order_input(s);
  r.inputs["budget"] = s.budget;
  r.results["head"] = prefix.prefix(kHeadLength).str();
  r.results["quasiperiod"] = report_json(detect_quasiperiods(prefix, s.max_qp));
  Json lyndon = Json::object();
  for (LetterOrder o : orders(s)) {
    lyndon[std::string(to_string(o))] = lyndon_json(lyndon_prefix_status(prefix, o));
  }
  r.results["lyndon"] = lyndon;
  return r;
}

DirectiveSequence valid_directive(const std::string& text) {
  DirectiveSequence seq = parse_directive(text);
  require_valid(seq);
  return seq;
}

Report decide_command(const std::string& text, const Settings&) {
  const DirectiveSequence seq = valid_directive(text);
  const auto family = nonquasiperiodic_family(seq);

  Report r{"sturmian-decide", {}, {}, "EXACT"};
  r.inputs["directive"] = to_string(seq);
  r.results["verdict"] =
      to_string(family ? Verdict::ExactNonQuasiperiodic : Verdict::ExactQuasiperiodic);
  r.results["family"] = family ? Json(to_string(*family)) : Json(nullptr);
  r.results["lyndon_order"] =
      family ? Json(to_string(lyndon_order(*family))) : Json(nullptr);
  r.results["standard"] = is_standard(seq);
  return r;
}

Report gen_command(const std::string& text, const Settings& s) {
  const DirectiveSequence seq = valid_directive(text);
  Report r{"sturmian-gen", {}, {}, "EXACT"};
  r.inputs["directive"] = to_string(seq);
  r.inputs["prefix"] = s.prefix;
  r.inputs["budget"] = s.budget;
  r.results["word"] = sturmian_prefix(seq, s.prefix, s.budget).str();
  return r;
}

Json witness_json(const std::optional<ForbiddenWitness>& w) {
  if (!w) return nullptr;
  Json out = Json::object();
  out["pattern"] = to_string(w->pattern);
  out["f1"] = to_string(w->f1);
  out["f2"] = to_string(w->f2);
  out["f3"] = to_string(w->f3);
  out["representative"] = to_string(w->representative);
  return out;
}

Json normalized_json(const NormalizedWord& nw) {
  return {{"core", to_string(nw.core)}, {"flip", nw.flip}};
}

Report classify_command(const std::string& text, const Settings&) {
  const GeneratorWord gw = parse_generators(text);
  const NormalizedWord nw = normalize_E(gw);

  Report r{"morphism-classify", {}, {}, "EXACT"};
  r.inputs["generators"] = to_string(gw);
  r.results["morphism"] = to_string(morphism_of(gw));
  r.results["classification"] = to_string(classify(gw));
  r.results["on_sturmian"] = to_string(classify_on_sturmian(gw));
  r.results["normalized"] = normalized_json(nw);
  r.results["forbidden_witness"] =
      witness_json(nw.core.empty() ? std::nullopt : forbidden_witness(nw.core));
  return r;
}

Report apply_command(const std::string& morphism, const std::string& text, std::istream& in,
                     const Settings&) {
  const BinaryMorphism m = parse_morphism(morphism);
  const Word w = parse_word(read_word_argument(text, in));
  Report r{"morphism-apply", {}, {}, "EXACT"};
  r.inputs["morphism"] = to_string(m);
  r.inputs["word"] = w.str();
  r.results["image"] = apply(m, w).str();
  return r;
}

Report normalize_command(const std::string& text, const Settings&) {
  const GeneratorWord gw = parse_generators(text);
  Report r{"morphism-normalize", {}, {}, "EXACT"};
  r.inputs["generators"] = to_string(gw);
  r.results["normalized"] = normalized_json(normalize_E(gw));
  return r;
}

Report equal_command(const std::string& first, const std::string& second, const Settings&) {
  const BinaryMorphism f = parse_morphism(first);
  const BinaryMorphism g = parse_morphism(second);
  Report r{"morphism-equal", {}, {}, "EXACT"};
  r.inputs["first"] = to_string(f);
  r.inputs["second"] = to_string(g);
  r.results["equal"] = f == g;
  return r;
}

// Text form: one "key: value" line per scalar, dotted keys for nesting.
void flatten(const std::string& key, const Json& value, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) flatten(key.empty() ? k : key + "." + k, v, out);
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(),
                                     [](const Json& v) { return v.is_primitive(); });
    if (scalars) {
      out << key << ":";
      if (value.empty()) out << " none";
      for (const auto& v : value) out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(key + "[" + std::to_string(i) + "]", value[i], out);
    }
    return;
  }
  out << key << ": ";
  if (value.is_null()) {
    out << "none";
  } else if (value.is_string()) {
    out << value.get<std::string>();
  } else {
    out << value.dump();
  }
  out << "\n";
}

void emit(const Report& r, const Settings& s, std::ostream& out) {
  if (s.json) {
    Json doc = Json::object();
    doc["kind"] = r.kind;
    doc["inputs"] = r.inputs;
    doc["results"] = r.results;
    doc["provenance"] = r.provenance;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "kind: " << r.kind << "\n";
  flatten("", r.inputs, out);
  flatten("", r.results, out);
  out << "provenance: " << r.provenance << "\n";
}

int verify_command(const std::string& name, const Settings& s, std::ostream& out) {
  const auto suites = run_verify(name, VerifyOptions{s.seed});
  std::size_t total = 0;
  std::size_t passed = 0;
  for (const auto& suite : suites) {
    for (const auto& c : suite.checks) {
      ++total;
      if (c.pass) ++passed;
    }
  }
  const bool ok = passed == total;

  if (s.json) {
    Json doc = Json::object();
    doc["kind"] = "verify";
    doc["inputs"] = {{"suite", name}, {"seed", s.seed}};
    Json list = Json::array();
    for (const auto& suite : suites) {
      Json checks = Json::array();
      for (const auto& c : suite.checks) {
        checks.push_back({{"id", c.id},
                          {"description", c.description},
                          {"pass", c.pass},
                          {"details", c.details}});
      }
      list.push_back({{"suite", suite.suite}, {"passed", suite.passed()}, {"checks", checks}});
    }
    doc["results"] = {{"suites", list}, {"checks_total", total}, {"checks_passed", passed},
                      {"passed", ok}};
    doc["provenance"] = "EVIDENCE";
    out << doc.dump(2) << "\n";
  } else {
    out << "seed: " << s.seed << "\n";
    for (const auto& suite : suites) {
      std::size_t suite_passed = 0;
      for (const auto& c : suite.checks) {
        if (c.pass) ++suite_passed;
        out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << " ["
            << c.details << "]\n";
      }
      out << "suite " << suite.suite << ": " << suite_passed << "/" << suite.checks.size()
          << " passed\n";
    }
    out << "total: " << passed << "/" << total << " passed\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Quasiperiodicity of binary words, Sturmian words and Sturmian morphisms",
               "qpsturm"};
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "Emit a JSON report");
  app.add_option("--prefix", s.prefix, "Prefix length N for infinite words")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-qp", s.max_qp, "Largest candidate quasiperiod length L")
      ->check(CLI::PositiveNumber);
  app.add_option("--order", s.order, "Restrict Lyndon output to one order")
      ->check(CLI::IsMember({"ab", "ba"}));
  app.add_option("--seed", s.seed, "Seed of the randomized verify checks");
  app.add_option("--budget", s.budget, "Block-pair budget for directive generation")
      ->check(CLI::PositiveNumber);

  std::string word_text;
  auto* word = app.add_subcommand("word", "Analyze a finite word ('-' reads stdin)");
  word->add_option("word", word_text)->required();

  std::string spec_text;
  auto* stream = app.add_subcommand("stream", "Prefix-scale analysis of an infinite word");
  stream->add_option("spec", spec_text)->required();

  std::string directive_text;
  auto* sturmian = app.add_subcommand("sturmian", "Directive-sequence operations");
  sturmian->require_subcommand(1);
  auto* decide = sturmian->add_subcommand("decide", "Exact quasiperiodicity decision");
  decide->add_option("directive", directive_text)->required();
  auto* gen = sturmian->add_subcommand("gen", "Print the length-N prefix");
  gen->add_option("directive", directive_text)->required();

  std::string first_text;
  std::string second_text;
  auto* morphism = app.add_subcommand("morphism", "Sturmian morphism operations");
  morphism->require_subcommand(1);
  auto* classify_cmd = morphism->add_subcommand("classify", "Classify a generator word");
  classify_cmd->add_option("generators", first_text)->required();
  auto* apply_cmd = morphism->add_subcommand("apply", "Apply a morphism to a word");
  apply_cmd->add_option("morphism", first_text)->required();
  apply_cmd->add_option("word", second_text)->required();
  auto* normalize = morphism->add_subcommand("normalize", "Push E to the right end");
  normalize->add_option("generators", first_text)->required();
  auto* equal = morphism->add_subcommand("equal", "Compare two morphisms");
  equal->add_option("first", first_text)->required();
  equal->add_option("second", second_text)->required();

  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "Run a verification suite or 'all'");
  verify->add_option("suite", suite_name)->required();

  for (CLI::App* sub : {word, stream, sturmian, decide, gen, morphism, classify_cmd, apply_cmd,
                        normalize, equal, verify}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify->parsed()) return verify_command(suite_name, s, out);

    Report report;
    if (word->parsed()) {
      report = word_command(word_text, in, s);
    } else if (stream->parsed()) {
      report = stream_command(spec_text, s);
    } else if (decide->parsed()) {
      report = decide_command(directive_text, s);
    } else if (gen->parsed()) {
      report = gen_command(directive_text, s);
    } else if (classify_cmd->parsed()) {
      report = classify_command(first_text, s);
    } else if (apply_cmd->parsed()) {
      report = apply_command(first_text, second_text, in, s);
    } else if (normalize->parsed()) {
      report = normalize_command(first_text, s);
    } else {
      report = equal_command(first_text, second_text, s);
    }
    emit(report, s, out);
    return kExitOk;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace qpsturm::cli
