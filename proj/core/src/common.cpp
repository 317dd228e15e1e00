// SPDX-License-Identifier: Apache-2.0
#include "cha/common.hpp"

namespace cha {

const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace cha
