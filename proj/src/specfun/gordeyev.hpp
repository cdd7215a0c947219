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

#ifndef SPECFUN_GORDEYEV_HPP
#define SPECFUN_GORDEYEV_HPP

#include "specfun/types.hpp"
#include "specfun/dawson_family.hpp"
#include <vector>

namespace specfun {

  struct SumTruncation {
    int n_max = 10000;        //sum runs over -n_max..n_max at most
    double tail_tol = 1e-14;
    void validate() const;
  };

  //Modified Bessel function of the first kind, I_{-n} = I_n. |lam| <= 700.
  Complex bessel_i( int n, Complex lam );

  //e^{-lam} I_n(lam) for n = 0..n_max (overflow-free for Re lam >= 0).
  std::vector<Complex> bessel_i_scaled_sequence( int n_max, Complex lam );

  //e^lam / sqrt(2 pi lam) [1 - (4n^2-1)/(8 lam)], for -pi/2 < arg lam < pi/2.
  Complex bessel_i_asymptotic( int n, Complex lam );

  //arg((omega - n)/sqrt(2 nu)), principal square root, full quadrant.
  double theta_arg( const GordeyevParams& p, int n );

  //(-i omega/sqrt(2 nu)) e^{-lam} sum_n I_n(lam) Z((omega-n)/sqrt(2 nu)).
  //The range starts at N = ceil|lam| + 10 and grows in blocks of 8 until the
  //last block adds less than tail_tol relative to the sum. terms_used = N.
  EvalResult gordeyev_series( const GordeyevParams& p, const SumTruncation& tr = {},
                              const MethodPolicy& pol = {} );

  //(-i omega/(2 sqrt(pi nu lam))) sum_n [1 - (4n^2-1)/(8 lam)] Z((omega-n)/sqrt(2 nu)).
  //The correction grows like n^2, so only the n with |4n^2-1| < 8|lam| are kept.
  EvalResult gordeyev_asym_lambda( const GordeyevParams& p, const SumTruncation& tr = {} );

  //Series weights with each Z replaced by its large-argument expansion. The
  //exponential branch is picked per term from the sector of theta_n
  //(-pi/4+k pi < theta < 3pi/4+k pi: recessive, otherwise 2 i sqrt(pi) e^{-zeta^2}).
  //Every retained |zeta_n|^2 must reach crossover_abs2.
  EvalResult gordeyev_asym_omega( const GordeyevParams& p, const SumTruncation& tr = {},
                                  double crossover_abs2 = default_crossover_abs );

  //Both expansions: lambda-regime weights times the per-term expansion of Z.
  //With first_order false the 1/lam correction is dropped.
  EvalResult gordeyev_asym_both( const GordeyevParams& p, const SumTruncation& tr = {},
                                 double crossover_abs2 = default_crossover_abs,
                                 bool first_order = true );

  enum class BesselWeight { Exact, Asymptotic };

  //Individual terms for n = -N..N (in that order).
  //  series:  (-i omega/sqrt(2 nu)) * w_n * Z(zeta_n), w_n = e^{-lam} I_n(lam)
  //           or (1/sqrt(2 pi lam)) [1 - (4n^2-1)/(8 lam)] for Asymptotic
  //  lambda:  (-i omega/(sqrt(2 nu) sqrt(2 pi lam))) [1 - (4n^2-1)/(8 lam)] Z(zeta_n)
  std::vector<Complex> gordeyev_series_terms( const GordeyevParams& p, int N,
                                              BesselWeight w = BesselWeight::Exact );
  std::vector<Complex> gordeyev_asym_lambda_terms( const GordeyevParams& p, int N );
  //  omega:   (-i omega/sqrt(2 nu)) e^{-lam} I_n(lam) Z_asym(zeta_n)
  std::vector<Complex> gordeyev_asym_omega_terms( const GordeyevParams& p, int N );

  enum class GordeyevRegime { Series, AsymLambda, AsymOmega, AsymBoth, Quadrature };

  EvalResult gordeyev( const GordeyevParams& p, GordeyevRegime regime = GordeyevRegime::Series,
                       const SumTruncation& tr = {}, const MethodPolicy& pol = {} );

}

#endif
