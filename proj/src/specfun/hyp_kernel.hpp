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

#ifndef SPECFUN_HYP_KERNEL_HPP
#define SPECFUN_HYP_KERNEL_HPP

#include "specfun/types.hpp"

namespace specfun {

  //Gamma function of real argument. Throws ErrorCode::Pole at 0,-1,-2,...
  double gamma_real( double x );

  //Complex Lanczos gamma, same coefficient set as gamma_real.
  Complex gamma_complex( Complex z );

  //1/Gamma(z), exactly zero at the poles.
  Complex rgamma_complex( Complex z );

  //Rising factorial (a)_n, (a)_0 = 1.
  Complex pochhammer( Complex a, int n );

  //Kummer series 1F1(a;b;z). For Re(z)<0 the Kummer transformation
  //1F1(a;b;z) = e^z 1F1(b-a;b;-z) is applied first. Sums showing heavy
  //cancellation are redone in double-double (flags::extended_precision).
  EvalResult hyp1f1( Complex a, Complex b, Complex z, const SeriesControl& ctl = {} );

  //Series 1F2(a;b1,b2;z).
  EvalResult hyp1f2( Complex a, Complex b1, Complex b2, Complex z, const SeriesControl& ctl = {} );

  bool isNonPositiveInteger( Complex );

}

#endif
