#pragma once

#include <initializer_list>
#include <vector>

#include <doctest.h>

#include "proxideal/harness.hpp"

namespace testing {

using namespace proxideal;

inline Subset set(AlgebraInstance const& inst, std::initializer_list<Point> pts) {
  return Subset(inst.size(), pts);
}

inline std::vector<Point> pts(std::initializer_list<Point> p) { return p; }

inline std::vector<std::vector<Point>> members(std::vector<Subset> const& sets) {
  std::vector<std::vector<Point>> out;
  for (auto const& s : sets) out.push_back(s.members());
  return out;
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace testing
