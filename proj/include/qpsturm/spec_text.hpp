#ifndef QPSTURM_SPEC_TEXT_HPP_
#define QPSTURM_SPEC_TEXT_HPP_

#include <string>
#include <string_view>

#include "qpsturm/morphism.hpp"
#include "qpsturm/stream.hpp"
#include "qpsturm/sturmian.hpp"

namespace qpsturm {

// Directive text:
//
//   directive := [ "pre=" list ] "per=" list
//   list      := "[" { pair [";"] } "]"
//   pair      := block block              (a-type block, then b-type block)
//   block     := "(" uint "," uint ")"    (d, c)
//
// Whitespace is ignored everywhere. `per` must list at least one pair.
// Throws ParseError; does not validate the block constraints.
DirectiveSequence parse_directive(std::string_view text);

// Canonical form "pre=[(d,c)(d,c)]per=[(d,c)(d,c)]".
std::string to_string(const DirectiveSequence& seq);

// Either a generator word ("La Rb", "La,Rb") or explicit images "a=<w>,b=<w>".
BinaryMorphism parse_morphism(std::string_view text);

// Stream specs:
//
//   periodic:<head>,<cycle>
//   fixedpoint:a=<word>,b=<word>[,seed=<a|b>]   seed defaults to a when the
//                                               morphism is prolongable on a,
//                                               else b
//   directive:<directive text>
//   image:<morphism>@<stream spec>
//   thue-morse
//   fibonacci
//
// Throws ParseError, plus the validation errors of the WordStream factories.
WordStream parse_stream(std::string_view text);

// Canonical spelling; parse_stream(to_string(s)) == s.
std::string to_string(const WordStream& s);

}  // namespace qpsturm

#endif  // QPSTURM_SPEC_TEXT_HPP_
