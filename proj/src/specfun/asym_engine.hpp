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

#ifndef SPECFUN_ASYM_ENGINE_HPP
#define SPECFUN_ASYM_ENGINE_HPP

#include "specfun/types.hpp"
#include <optional>

namespace specfun {

  enum class Sign { Plus, Minus };

  struct SectorDecision {
    Sign sign = Sign::Plus;
    int k = 0;
    int alpha = 1;
    bool boundary = false;
  };

  //Sign rule of the large-xi expansion of 1F1: Plus for arg(xi) in
  //(-pi/2, pi], Minus for arg(xi) in (-pi, -pi/2] (principal arg). The
  //boundary flag is raised at arg(xi) = -pi/2.
  SectorDecision sector_sign_xi( Complex xi );

  //Sector rule in z for xi = z^alpha. Plus sectors
  //(-pi/(2a)+2k pi/a, 3pi/(2a)+2k pi/a) are open, Minus sectors
  //(-3pi/(2a)+2k pi/a, -pi/(2a)+2k pi/a] are closed at the upper end. The
  //first match in the order (k=0 Plus, k=0 Minus, k=1 Plus, ...) on arg(z)
  //and then on arg(z)+2pi wins. Boundary when arg(z) is an odd multiple of
  //pi/(2a).
  SectorDecision sector_sign_z( Complex z, int alpha );

  //First-match sector search shared by the z-space rules. Intervals are
  //given for k=0 and shifted by k*period.
  struct SectorShape {
    double plus_lo, plus_hi;
    double minus_lo, minus_hi;
    double period;
    bool minus_closed_hi;
    int alpha;
  };
  SectorDecision first_match_sector( double arg, const SectorShape& );

  //Where the recessive algebraic term switches. SectorRule: per sector_sign_xi.
  //RealAxis: on the positive real xi axis (its Stokes line), taking the
  //mean of both branches there.
  enum class StokesConvention { SectorRule, RealAxis };

  //The two pieces of the large-xi expansion of 1F1(a;b;xi):
  //  1F1 ~ algebraic + e^xi * exponential
  struct KummerAsymptoticTerms {
    Complex algebraic = 0.0;
    Complex exponential = 0.0;
    double algebraic_error = 0.0;  //first neglected term, same scaling
    double exponential_error = 0.0;//ditto, excluding the e^xi factor
    int terms = 0;
    SectorDecision sector;         //sector_sign_xi(xi)
    int multiplier = 1;            //+1 Plus, -1 Minus, 0 mean of both
  };

  //Explicit orders, or optimal truncation (stop before the terms grow) when
  //ord is empty.
  KummerAsymptoticTerms kummer_asymptotic_terms( Complex a, Complex b, Complex xi,
                                                 const std::optional<TruncationOrders>& ord,
                                                 StokesConvention conv = StokesConvention::SectorRule );

  inline constexpr double default_crossover_abs = 30.0;

  EvalResult hyp1f1_asymptotic( Complex a, Complex b, Complex xi,
                                const TruncationOrders& ord = {},
                                StokesConvention conv = StokesConvention::SectorRule,
                                double crossover = default_crossover_abs );

  EvalResult hyp1f1_asymptotic_optimal( Complex a, Complex b, Complex xi,
                                        StokesConvention conv = StokesConvention::SectorRule,
                                        double crossover = default_crossover_abs );

  //z * 1F1(1/alpha; 1/alpha+1; z^alpha) through the xi = z^alpha expansion
  //(same floating point path as z*hyp1f1_asymptotic). The branch follows
  //xi; sector_sign_z(z,alpha) is the z-space statement of the rule and
  //differs from it on some wedges for alpha >= 2.
  EvalResult lemma1_expansion( Complex z, int alpha, const TruncationOrders& ord = {},
                               StokesConvention conv = StokesConvention::SectorRule );

  //The closed two-term form with Gamma(1/alpha+1) and Gamma(2-1/alpha) as
  //the 1/z^alpha coefficients and the z/|z| prefactor for even alpha, sign
  //from sector_sign_z. Kept for comparison only: those coefficients are
  //not the ones of the expansion above.
  Complex lemma1_printed( Complex z, int alpha );

}

#endif
