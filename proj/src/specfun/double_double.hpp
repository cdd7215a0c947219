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

#ifndef SPECFUN_DOUBLE_DOUBLE_HPP
#define SPECFUN_DOUBLE_DOUBLE_HPP

// Unevaluated sums hi+lo of two doubles (about 106 significant bits), used
// to re-sum hypergeometric series whose terms cancel heavily. Requires
// strict IEEE evaluation (no fma contraction of the building blocks).

#include "specfun/types.hpp"
#include <cmath>

namespace specfun::detail {

  struct DD {
    double hi = 0.0;
    double lo = 0.0;
    constexpr DD() = default;
    constexpr DD( double h ) : hi(h), lo(0.0) {}
    constexpr DD( double h, double l ) : hi(h), lo(l) {}
    double toDouble() const { return hi + lo; }
  };

  inline DD twoSum( double a, double b )
  {
    double s = a + b;
    double bb = s - a;
    double e = ( a - ( s - bb ) ) + ( b - bb );
    return { s, e };
  }

  inline DD quickTwoSum( double a, double b )
  {
    double s = a + b;
    return { s, b - ( s - a ) };
  }

  inline DD twoProd( double a, double b )
  {
    double p = a * b;
    return { p, std::fma( a, b, -p ) };
  }

  inline DD operator+( const DD& a, const DD& b )
  {
    DD s = twoSum( a.hi, b.hi );
    DD t = twoSum( a.lo, b.lo );
    s.lo += t.hi;
    s = quickTwoSum( s.hi, s.lo );
    s.lo += t.lo;
    return quickTwoSum( s.hi, s.lo );
  }

  inline DD operator-( const DD& a ) { return { -a.hi, -a.lo }; }
  inline DD operator-( const DD& a, const DD& b ) { return a + (-b); }

  inline DD operator*( const DD& a, const DD& b )
  {
    DD p = twoProd( a.hi, b.hi );
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quickTwoSum( p.hi, p.lo );
  }

  inline DD operator/( const DD& a, const DD& b )
  {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = quickTwoSum( q1, q2 );
    return q + DD(q3);
  }

  struct CDD {
    DD re;
    DD im;
    constexpr CDD() = default;
    CDD( const DD& r, const DD& i ) : re(r), im(i) {}
    CDD( const Complex& c ) : re(c.real()), im(c.imag()) {}
    Complex toComplex() const { return { re.toDouble(), im.toDouble() }; }
  };

  inline CDD operator+( const CDD& a, const CDD& b ) { return { a.re + b.re, a.im + b.im }; }
  inline CDD operator-( const CDD& a, const CDD& b ) { return { a.re - b.re, a.im - b.im }; }

  inline CDD operator*( const CDD& a, const CDD& b )
  {
    return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
  }

  inline CDD operator/( const CDD& a, const CDD& b )
  {
    DD den = b.re * b.re + b.im * b.im;
    return { ( a.re * b.re + a.im * b.im ) / den, ( a.im * b.re - a.re * b.im ) / den };
  }

  inline double magnitude( const CDD& a ) { return std::hypot( a.re.hi, a.im.hi ); }

}

#endif
