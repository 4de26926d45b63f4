#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quotring {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace quotring
