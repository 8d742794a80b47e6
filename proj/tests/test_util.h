#ifndef DEFEASOR_TESTS_TEST_UTIL_H_
#define DEFEASOR_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "defeasor/parser.h"

namespace defeasor::testing {

// Loads data/<name>.dkb from the source tree.
inline KnowledgeBase LoadKb(const std::string& name) {
  const std::string path = std::string(DEFEASOR_DATA_DIR) + "/" + name + ".dkb";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str());
}

inline Concept C(const char* text) { return parse_concept(text); }

inline DefeasibleInclusion D(const char* lhs, const char* rhs) {
  return {parse_concept(lhs), parse_concept(rhs)};
}

inline DefeasibleQuery Q(const char* lhs, const char* rhs) {
  return {parse_concept(lhs), parse_concept(rhs)};
}

}  // namespace defeasor::testing

#endif  // DEFEASOR_TESTS_TEST_UTIL_H_
