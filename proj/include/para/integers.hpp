#ifndef PARA_INTEGERS_HPP
#define PARA_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace para {

// Exact coefficient arithmetic; symbolic results never touch floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<Integer>;

}  // namespace para

#endif
