#pragma once

#include <string>

namespace ietk {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

}  // namespace ietk
