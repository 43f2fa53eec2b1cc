#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ramal {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace ramal
