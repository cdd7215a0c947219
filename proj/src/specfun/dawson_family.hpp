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

#ifndef SPECFUN_DAWSON_FAMILY_HPP
#define SPECFUN_DAWSON_FAMILY_HPP

#include "specfun/types.hpp"
#include "specfun/asym_engine.hpp"
#include <optional>

namespace specfun {

  enum class Mode { Auto, ForceSeries, ForceAsymptotic, ForcePaperAsymptotic, ForceQuadrature };

  struct MethodPolicy {
    Mode mode = Mode::Auto;
    double crossover_abs2 = 30.0;             //series for |z|^2 <= this in Auto mode
    std::optional<TruncationOrders> orders;   //empty: optimal truncation
    SeriesControl series;
    QuadratureConfig quad;
    //On the lines arg z = +-pi/4 + k pi Auto keeps the series up to this
    //|z|^2 (the double-double sum still resolves the cancellation there).
    double boundary_series_abs2 = 45.0;
    //Auto threshold for C and S in units of |xi| = pi |z|^2.
    double fresnel_crossover_xi = 32.0;
    void validate() const;
  };

  //daw z = e^{-z^2} int_0^z e^{eta^2} d eta
  EvalResult dawson( Complex z, const MethodPolicy& pol = {} );
  //w(z) = e^{-z^2} + (2i/sqrt(pi)) daw z
  EvalResult faddeeva( Complex z, const MethodPolicy& pol = {} );
  //Z(z) = i sqrt(pi) w(z)
  EvalResult fried_conte( Complex z, const MethodPolicy& pol = {} );
  //G(z) = 1 + z Z(z)
  EvalResult jackson( Complex z, const MethodPolicy& pol = {} );
  //phi(x) = 2x daw x
  EvalResult sitenko( double x, const MethodPolicy& pol = {} );
  //G(x) = 1 - phi(x) + i sqrt(pi) x e^{-x^2}
  EvalResult jackson_real( double x, const MethodPolicy& pol = {} );

  //z e^{-z^2} 1F1(1/2;3/2;z^2)
  EvalResult dawson_series( Complex z, const SeriesControl& ctl = {} );

  //Large-|z| form assembled from the 1F1 expansion with xi = z^2:
  //  daw z ~ s i sqrt(pi)/2 e^{-z^2} + (1/2z) sum_n (1/2)_n z^{-2n}
  //with s = +1 above the real axis, -1 below and 0 on it. Empty orders
  //means optimal truncation of the algebraic sum.
  EvalResult dawson_asymptotic( Complex z, const std::optional<TruncationOrders>& ord = TruncationOrders{} );

  //The two-term closed forms with the printed coefficients (sqrt(pi)/(4z^3)
  //algebraic term, sqrt(pi)/(2z^2) inside the exponential bracket), branch
  //from sector_sign_z(z,2).
  EvalResult dawson_paper_asymptotic( Complex z );
  EvalResult faddeeva_paper_asymptotic( Complex z );
  EvalResult fried_conte_paper_asymptotic( Complex z );
  EvalResult jackson_paper_asymptotic( Complex z );

  //Z(z) from the assembled expansion with the exponential multiplier s
  //given by the caller (+1, -1 or 0): Z = i sqrt(pi)(1-s) e^{-z^2} - 2A.
  EvalResult fried_conte_asymptotic_signed( Complex z, int s,
                                            const std::optional<TruncationOrders>& ord = std::nullopt );

  //Oracles: daw from quad_dawson, w, Z and G from quad_faddeeva.
  EvalResult dawson_oracle( Complex z, const QuadratureConfig& cfg = {} );
  EvalResult faddeeva_oracle( Complex z, const QuadratureConfig& cfg = {} );
  EvalResult fried_conte_oracle( Complex z, const QuadratureConfig& cfg = {} );
  EvalResult jackson_oracle( Complex z, const QuadratureConfig& cfg = {} );

}

#endif
