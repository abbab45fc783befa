#pragma once

#include <Eigen/Core>

#include "kn/cyclotomic.hpp"
#include "kn/diffring.hpp"
#include "kn/rational.hpp"

namespace kn::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static int digits10() { return 0; }
};

}  // namespace kn::detail

namespace Eigen {

template <>
struct NumTraits<kn::Rational> : kn::detail::ExactNumTraits<kn::Rational> {};
template <>
struct NumTraits<kn::CycScalar> : kn::detail::ExactNumTraits<kn::CycScalar> {};
template <>
struct NumTraits<kn::DRingElem> : kn::detail::ExactNumTraits<kn::DRingElem> {};

}  // namespace Eigen

namespace kn {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

}  // namespace kn
