#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heckekron {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace heckekron
