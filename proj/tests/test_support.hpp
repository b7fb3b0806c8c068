#pragma once

#include "dpq/core.hpp"

#include <fstream>

// Values produced by tests/oracles/derive.py.
inline const dpq::Json& frozen() {
  static const dpq::Json j = [] {
    std::ifstream in(DPQ_ORACLE_FILE);
    if (!in) throw std::runtime_error("missing oracle file " DPQ_ORACLE_FILE);
    return dpq::Json::parse(in);
  }();
  return j;
}
