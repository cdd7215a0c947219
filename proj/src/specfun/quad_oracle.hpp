////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of specfun                                              //
//                                                                            //
//  Copyright 2026 specfun developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef SPECFUN_QUAD_ORACLE_HPP
#define SPECFUN_QUAD_ORACLE_HPP

#include "specfun/types.hpp"
#include <functional>
#include <vector>

namespace specfun {

  using Integrand = std::function<Complex(Complex)>;

  //Globally adaptive 7/15 Gauss-Kronrod quadrature along the straight
  //segment from a to b. The interval with the largest error estimate is
  //bisected first; ties go to the earliest interval, so the evaluation order
  //is fixed.
  EvalResult adaptive_quad( const Integrand& f, Complex a, Complex b, const QuadratureConfig& cfg = {} );

  //Same along the polygonal path through the given points (at least two).
  EvalResult adaptive_quad_path( const Integrand& f, const std::vector<Complex>& path,
                                 const QuadratureConfig& cfg = {} );

  //e^{-z^2} * integral_0^z e^{eta^2} d eta. Requires Re(z^2) > -700.
  EvalResult quad_dawson( Complex z, const QuadratureConfig& cfg = {} );

  //w(z). For Im z >= 0 from (1/sqrt(pi)) int_0^inf exp(-t^2/4 + i z t) dt,
  //below the real axis from e^{-z^2} + (2i/sqrt(pi)) quad_dawson(z).
  EvalResult quad_faddeeva( Complex z, const QuadratureConfig& cfg = {} );

  //integral_0^z cos(pi eta^2) and sin(pi eta^2) d eta.
  FresnelPair quad_fresnel( Complex z, const QuadratureConfig& cfg = {} );

  //omega * integral_0^inf exp(i omega t - lambda(1-cos t) - nu t^2/2) dt,
  //cut at the T where the integrand bound falls below cfg.tail_cut and
  //pre-split at multiples of pi.
  EvalResult quad_gordeyev( const GordeyevParams& p, const QuadratureConfig& cfg = {} );

  //The cut T used by quad_gordeyev.
  double gordeyev_tail_cut( const GordeyevParams& p, const QuadratureConfig& cfg = {} );

}

#endif
