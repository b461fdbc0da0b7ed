#pragma once

#include <map>
#include <memory>
#include <string>

#include "ctc/parser.hpp"
#include "ctc/unfolding.hpp"

namespace test {

using Map = std::map<ctc::Symbol, ctc::Symbol>;

inline ctc::Process P(const std::string& text) { return ctc::parse_term(text); }

inline std::shared_ptr<const ctc::EventStructure> U(const std::string& text, int depth = 6,
                                                    const ctc::DefEnv& env = {}) {
  ctc::UnfoldOptions o;
  o.depth = depth;
  return std::make_shared<const ctc::EventStructure>(ctc::unfold(P(text), env, o));
}

/// Event id by label, assuming the label is unique in `es`.
inline ctc::EventId by_label(const ctc::EventStructure& es, const std::string& label) {
  for (ctc::EventId e = 0; e < es.size(); ++e)
    if (es.event(e).label.str() == label) return e;
  return static_cast<ctc::EventId>(-1);
}

inline ctc::EventSet set_of(const ctc::EventStructure& es, std::initializer_list<ctc::EventId> ids) {
  ctc::EventSet s = es.empty_set();
  for (auto e : ids) s.set(e);
  return s;
}

}  // namespace test
