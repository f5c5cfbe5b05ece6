#pragma once

#include "judicious/error.hpp"
#include "judicious/digraph.hpp"
#include "judicious/edge_list.hpp"
#include "judicious/gap.hpp"
#include "judicious/tight.hpp"
#include "judicious/oracle.hpp"
#include "judicious/config.hpp"
#include "judicious/certify.hpp"
#include "judicious/engine.hpp"
#include "judicious/generators.hpp"

namespace judicious {
inline constexpr const char* kVersion = "0.1.0";
}  // namespace judicious
