#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monotop {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace monotop
