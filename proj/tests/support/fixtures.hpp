#ifndef ALN_TESTS_FIXTURES_HPP
#define ALN_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aln/syntax.hpp"

namespace aln::testing {

inline std::string data_path(const std::string& rel) {
  return std::string(ALN_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline KnowledgeBase load_kb(const std::string& name) {
  return parse_kb(read_file(data_path("kb/" + name)));
}

inline const Concept& instance(const KnowledgeBase& kb, const std::string& id) {
  const auto* ad = kb.find(id);
  if (!ad) throw std::runtime_error("no instance " + id);
  return ad->description;
}

inline Concept P(const std::string& s) { return parse_concept(s); }

}  // namespace aln::testing

#endif  // ALN_TESTS_FIXTURES_HPP
