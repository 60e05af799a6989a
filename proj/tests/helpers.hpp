#pragma once

#include <map>
#include <memory>
#include <string>

#include "braidlab/braid.hpp"
#include "braidlab/coxeter.hpp"
#include "braidlab/diagram.hpp"

namespace testenv {

inline std::string diagram_path(const std::string& name) {
  return std::string(BRAIDLAB_DIAGRAM_DIR) + "/" + name + ".cox";
}

// One lazily built set of contexts per diagram, shared across test cases so
// the memo tables warm up once.
struct Lab {
  braidlab::CoxeterDiagram d;
  braidlab::CoxeterContext cox;
  braidlab::BraidContext bc;

  explicit Lab(const std::string& name)
      : d(braidlab::CoxeterDiagram::load(diagram_path(name))), cox(d), bc(cox) {}
};

inline Lab& lab(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Lab>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Lab>(name);
  return *slot;
}

inline braidlab::Word w(const Lab& l, const std::string& letters) {
  return l.d.parse_word(letters);
}

inline braidlab::CoxeterElement el(Lab& l, const std::string& letters) {
  return l.cox.reduce(w(l, letters));
}

inline braidlab::PosBraidElement br(Lab& l, const std::string& letters) {
  return l.bc.canonical(w(l, letters));
}

inline std::string p(const Lab& l, const braidlab::Word& word) {
  return l.d.print_word(word);
}

}  // namespace testenv
