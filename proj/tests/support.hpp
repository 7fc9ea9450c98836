#pragma once

#include <string>

#include "chainreg/cli.hpp"
#include "chainreg/ideal.hpp"

#ifndef CHAINREG_DATA_DIR
#define CHAINREG_DATA_DIR "data"
#endif

namespace testing {

inline chainreg::Monomial M(const std::string& text, int n) {
  return chainreg::parse_monomial(text, n);
}

inline chainreg::MonomialIdeal I(const std::string& text, int n) {
  return chainreg::parse_ideal(text, n);
}

inline std::string chain_path(const std::string& name) {
  return std::string(CHAINREG_DATA_DIR) + "/chains/" + name;
}

}  // namespace testing
