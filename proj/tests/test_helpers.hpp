#pragma once

#include "gwt/sampling.hpp"

namespace gwt::testing {
using namespace gwt::sampling;
}  // namespace gwt::testing
