#pragma once

#include <string>

#include "ctc/process.hpp"

namespace ctc {

/// Alternating-bit protocol over lossy, duplicating channels of bounded
/// capacity, together with its two-port buffer specification.
struct AbpModel {
  int capacity = 1;
  DefEnv env;
  Process system;   // AB
  Process spec;     // Buff
  std::string source;   // the generated definitions
};

/// Throws InvalidArgument for capacity < 1.
AbpModel make_abp(int capacity);

/// Definitions of the model as program text.
std::string abp_source(int capacity);

}  // namespace ctc
