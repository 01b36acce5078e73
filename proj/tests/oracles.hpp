#ifndef QPSTURM_TESTS_ORACLES_HPP_
#define QPSTURM_TESTS_ORACLES_HPP_

// Test-side reference constructions. They rebuild infinite-word prefixes by
// plain repeated substitution and never touch the library's generators.

#include <string>

namespace oracle {

inline std::string substitute(const std::string& image_a, const std::string& image_b,
                              const std::string& w) {
  std::string out;
  for (char c : w) out += c == 'a' ? image_a : image_b;
  return out;
}

inline std::string fixed_point(const std::string& image_a, const std::string& image_b,
                               char seed, std::size_t n) {
  std::string w(1, seed);
  while (w.size() < n) w = substitute(image_a, image_b, w);
  return w.substr(0, n);
}

inline std::string periodic(const std::string& head, const std::string& cycle, std::size_t n) {
  std::string w = head;
  while (w.size() < n) w += cycle;
  return w.substr(0, n);
}

}  // namespace oracle

#endif  // QPSTURM_TESTS_ORACLES_HPP_
