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

#ifndef SPECFUN_FRESNEL_HPP
#define SPECFUN_FRESNEL_HPP

#include "specfun/types.hpp"
#include "specfun/asym_engine.hpp"
#include "specfun/dawson_family.hpp"
#include <optional>

namespace specfun {

  //C(z) = int_0^z cos(pi eta^2) d eta = z 1F2(1/4; 1/2, 5/4; -pi^2 z^4/4)
  EvalResult fresnel_c( Complex z, const SeriesControl& ctl = {} );
  //S(z) = int_0^z sin(pi eta^2) d eta = (pi z^3/3) 1F2(3/4; 3/2, 7/4; -pi^2 z^4/4)
  EvalResult fresnel_s( Complex z, const SeriesControl& ctl = {} );
  //z 1F1(1/2; 3/2; i pi z^2) = C(z) + i S(z)
  EvalResult fresnel_complex( Complex z, const SeriesControl& ctl = {} );

  //Branch of the two-term large-|z| forms: Plus on -pi/2+k pi < arg z < pi/2+k pi,
  //Minus on -pi+k pi < arg z < -pi/2+k pi, first match with k = 0, 1, ...
  //arg z = +-pi/2 matches neither and comes back as Plus with the boundary flag.
  SectorDecision fresnel_sector( Complex z );

  //Two-term forms with the printed constants:
  //  C ~ +-sqrt2/4 -+ sqrt(2/pi)/(8z^2) - sin(pi z^2)/(2 pi z) - cos(pi z^2)/(4 pi^1.5 z^3)
  //  S ~ +-sqrt2/4 +- sqrt(2/pi)/(8z^2) + sin(pi z^2)/(2 pi z) + cos(pi z^2)/(4 pi^1.5 z^3)
  FresnelPair fresnel_asymptotic( Complex z );

  //C and S from E(+-) = z 1F1(1/2;3/2;+-i pi z^2) with each 1F1 replaced by
  //its large-xi expansion. Empty orders means optimal truncation.
  FresnelPair fresnel_asymptotic_assembled( Complex z, const std::optional<TruncationOrders>& ord = std::nullopt );

  //Route by policy: series below pol.fresnel_crossover_xi (in |xi| = pi|z|^2),
  //assembled expansion above it.
  FresnelPair fresnel( Complex z, const MethodPolicy& pol = {} );

}

#endif
