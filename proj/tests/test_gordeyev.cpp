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

#include "doctest.h"
#include "testutil.hpp"
#include "specfun/gordeyev.hpp"
#include "specfun/dawson_family.hpp"
#include "specfun/quad_oracle.hpp"
#include <random>

namespace sf = specfun;
using sftest::relDiff;
using sf::Complex;

TEST_CASE("bessel_i values")
{
  CHECK( sf::bessel_i(0,0.0) == Complex(1.0) );
  CHECK( sf::bessel_i(3,0.0) == Complex(0.0) );
  CHECK( relDiff( sf::bessel_i(0,1.0), 1.26606587775200833560 ) < 1e-15 );
  CHECK( relDiff( sf::bessel_i(3,Complex(2.5,1.0)), Complex(0.0762597527060132522610,0.558255783215466491901) ) < 1e-14 );
  CHECK( relDiff( sf::bessel_i(2,50.0), 281643064024519405478.461774924 ) < 1e-13 );
  CHECK( relDiff( sf::bessel_i(5,Complex(-30.0,4.0)), Complex(339963872128.407978872,-385147683068.726827212) ) < 1e-12 );
}

TEST_CASE("bessel_i symmetry and generating function")
{
  for ( Complex lam : { Complex(0.5), Complex(1.0), Complex(2.0), Complex(4.0), Complex(3.0,-2.0), Complex(25.0,10.0) } ) {
    for ( int n = 0; n < 12; ++n )
      CHECK( sf::bessel_i(-n,lam) == sf::bessel_i(n,lam) );
    Complex s = sf::bessel_i(0,lam);
    for ( int n = 1; n <= 80; ++n )
      s += 2.0*sf::bessel_i(n,lam);
    CHECK( std::abs( s - std::exp(lam) ) <= 1e-10*std::exp(lam.real()) );
  }
}

TEST_CASE("bessel_i_asymptotic")
{
  for ( int n = 0; n <= 2; ++n )
    CHECK( relDiff( sf::bessel_i_asymptotic(n,50.0), sf::bessel_i(n,50.0) ) < 1e-3 );
  //ratio to e^lam/sqrt(2 pi lam) is 1 + 1/(8 lam) for n = 0
  for ( double lam : { 100.0, 300.0, 600.0 } ) {
    const Complex r = sf::bessel_i_asymptotic(0,lam)*std::sqrt(2.0*sf::pi*lam)*std::exp(-lam);
    CHECK( std::abs( r - (1.0 + 1.0/(8.0*lam)) ) < 1e-14 );
  }
  try { sf::bessel_i_asymptotic(0,std::polar(40.0,1.6)); FAIL("no throw"); }
  catch ( const sf::Error& e ) { CHECK( e.code() == sf::ErrorCode::Domain ); }
}

TEST_CASE("theta_arg")
{
  CHECK( sf::theta_arg({2.0,0.0,0.5},0) == 0.0 );
  CHECK( sf::theta_arg({Complex(2.0,1.0),0.0,0.5},0) == doctest::Approx(0.463647609000806116214).epsilon(1e-15) );
  CHECK( sf::theta_arg({0.0,0.0,0.5},1) == doctest::Approx(sf::pi).epsilon(1e-15) );
  CHECK_THROWS_AS( sf::theta_arg({3.0,0.0,0.5},3), sf::Error );
}

TEST_CASE("gordeyev_series vs the defining integral")
{
  sf::GordeyevParams p{ Complex(1.3,0.2), 0.5, 0.2 };
  CHECK( relDiff( sf::gordeyev_series(p).value, Complex(0.410916603592323770645,1.01978528020532515058) ) < 1e-12 );
  p = { Complex(0.7,-0.4), Complex(1.5,0.5), Complex(0.6,0.1) };
  CHECK( relDiff( sf::gordeyev_series(p).value, Complex(0.922950099905512782229,-0.207410509182275257061) ) < 1e-12 );
  p = { Complex(0.0,1.0), 0.0, 1.0 };
  CHECK( relDiff( sf::gordeyev_series(p).value, Complex(0.0,0.655679542418798471544) ) < 1e-13 );
}

TEST_CASE("gordeyev_series random triples")
{
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0,1.0), nr(0.1,1.0);
  for ( int i = 0; i < 6; ++i ) {
    Complex om(3.0*u(rng),3.0*u(rng)), lam(2.0*u(rng),2.0*u(rng));
    if ( std::abs(om) > 3.0 ) om *= 2.9/std::abs(om);
    if ( std::abs(lam) > 2.0 ) lam *= 1.9/std::abs(lam);
    sf::GordeyevParams p{ om, lam, Complex(nr(rng),0.3*u(rng)) };
    CHECK( relDiff( sf::gordeyev_series(p).value, sf::quad_gordeyev(p).value ) < 1e-8 );
  }
}

TEST_CASE("gordeyev lambda -> 0 collapse")
{
  const Complex om(0.5), nu(0.3);
  const Complex q = std::sqrt(2.0*nu);
  const Complex ref = -Complex(0.0,1.0)*om/q*sf::fried_conte(om/q).value;
  CHECK( relDiff( sf::gordeyev_series({om,0.0,nu}).value, ref ) < 1e-14 );
  CHECK( std::abs( sf::gordeyev_series({om,1e-12,nu}).value - ref ) <= 1e-10*std::abs(ref) );
}

TEST_CASE("gordeyev conjugation")
{
  //G(-conj w, conj l, conj n) = -conj G(w, l, n)
  sf::GordeyevParams p{ Complex(0.8,2.5), Complex(0.6,0.3), Complex(0.4,0.2) };
  sf::GordeyevParams q{ -std::conj(p.omega), std::conj(p.lambda), std::conj(p.nu) };
  const Complex a = sf::gordeyev_series(p).value, b = sf::gordeyev_series(q).value;
  CHECK( relDiff( a, sf::quad_gordeyev(p).value ) < 1e-8 );
  CHECK( relDiff( b, sf::quad_gordeyev(q).value ) < 1e-8 );
  CHECK( relDiff( b, -std::conj(a) ) < 1e-12 );
}

TEST_CASE("gordeyev truncation soundness")
{
  sf::GordeyevParams p{ Complex(1.3,0.2), 0.5, 0.2 };
  auto a = sf::gordeyev_series(p);
  sf::SumTruncation tr;
  tr.tail_tol = 1e-17;
  auto b = sf::gordeyev_series(p,tr);
  CHECK( b.terms_used >= a.terms_used );
  CHECK( std::abs(a.value-b.value) <= std::max(a.est_error,1e-15*std::abs(a.value)) );
  tr.n_max = 3;
  try { sf::gordeyev_series({1.3,5.0,0.2},tr); FAIL("no throw"); }
  catch ( const sf::Error& e ) { CHECK( e.code() == sf::ErrorCode::NoConvergence ); }
}

TEST_CASE("gordeyev asymptotic regimes")
{
  //omega regime against the series
  sf::GordeyevParams po{ Complex(30.0,5.0), 0.5, 0.1 };
  sf::MethodPolicy quadZ;
  quadZ.mode = sf::Mode::ForceQuadrature;
  const Complex ref = sf::gordeyev_series(po,{},quadZ).value;
  CHECK( relDiff( sf::gordeyev_asym_omega(po).value, ref ) < 1e-4 );
  CHECK( relDiff( ref, sf::quad_gordeyev(po).value ) < 1e-8 );
  try { sf::gordeyev_asym_omega({3.0,0.5,0.1}); FAIL("no throw"); }
  catch ( const sf::Error& e ) { CHECK( e.code() == sf::ErrorCode::CrossoverViolation ); }
  try { sf::gordeyev_asym_lambda({1.3,std::polar(40.0,1.6),0.2}); FAIL("no throw"); }
  catch ( const sf::Error& e ) { CHECK( e.code() == sf::ErrorCode::Domain ); }
}

TEST_CASE("lambda regime is the series with asymptotic weights")
{
  sf::GordeyevParams p{ Complex(1.3,0.2), 40.0, 0.2 };
  const int N = 8;
  auto a = sf::gordeyev_asym_lambda_terms(p,N);
  auto b = sf::gordeyev_series_terms(p,N,sf::BesselWeight::Asymptotic);
  REQUIRE( a.size() == b.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
    CHECK( std::abs(a[i]-b[i]) <= 4e-16*std::abs(b[i]) );
}

TEST_CASE("omega regime terms reduce to fried_conte asymptotics")
{
  sf::GordeyevParams p{ Complex(30.0,5.0), 0.5, 0.1 };
  const int N = 4;
  auto t = sf::gordeyev_asym_omega_terms(p,N);
  const Complex q = std::sqrt(2.0*p.nu);
  const Complex pref = -Complex(0.0,1.0)*p.omega*std::exp(-p.lambda)/q;
  for ( int n = -N; n <= N; ++n ) {
    const Complex zeta = (p.omega-double(n))/q;
    const int s = sf::sector_sign_z(zeta,2).sign == sf::Sign::Plus ? 1 : -1;
    const Complex ref = pref*sf::bessel_i(n,p.lambda)*sf::fried_conte_asymptotic_signed(zeta,s).value;
    CHECK( relDiff( t[n+N], ref ) < 1e-14 );
  }
}

TEST_CASE("combined regime consistency")
{
  //leading order in 1/lambda: omega regime with e^{-lam} I_n -> 1/sqrt(2 pi lam)
  sf::GordeyevParams p{ Complex(30.0,5.0), 40.0, 0.1 };
  auto both = sf::gordeyev_asym_both(p,{},sf::default_crossover_abs,false);
  const int N = 8;
  const Complex q = std::sqrt(2.0*p.nu);
  Complex s = 0.0;
  for ( int n = -N; n <= N; ++n ) {
    const Complex zeta = (p.omega-double(n))/q;
    const int sg = sf::sector_sign_z(zeta,2).sign == sf::Sign::Plus ? 1 : -1;
    s += sf::fried_conte_asymptotic_signed(zeta,sg).value;
  }
  const Complex ref = -Complex(0.0,1.0)*p.omega/(2.0*std::sqrt(sf::pi*p.nu*p.lambda))*s;
  CHECK( relDiff( both.value, ref ) < 1e-12 );
}

TEST_CASE("gordeyev dispatcher and validation")
{
  sf::GordeyevParams p{ Complex(1.3,0.2), 0.5, 0.2 };
  CHECK( sf::gordeyev(p).value == sf::gordeyev_series(p).value );
  CHECK( relDiff( sf::gordeyev(p,sf::GordeyevRegime::Quadrature).value, sf::gordeyev_series(p).value ) < 1e-10 );
  CHECK_THROWS_AS( sf::gordeyev_series({1.0,0.5,Complex(0.0,1.0)}), sf::Error );
  sf::SumTruncation tr;
  tr.n_max = 0;
  CHECK_THROWS_AS( sf::gordeyev_series(p,tr), sf::Error );
}
