#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sepclass {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sepclass
