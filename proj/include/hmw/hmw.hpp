#ifndef HMW_HMW_HPP
#define HMW_HMW_HPP

#include "hmw/analytic.hpp"
#include "hmw/limit_study.hpp"
#include "hmw/noncommutative.hpp"
#include "hmw/params.hpp"
#include "hmw/radial_oracle.hpp"
#include "hmw/specfun.hpp"
#include "hmw/wavefunction.hpp"

#endif // HMW_HMW_HPP
