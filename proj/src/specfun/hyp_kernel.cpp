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

#include "specfun/hyp_kernel.hpp"
#include "specfun/double_double.hpp"
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

namespace sf = specfun;

const char * sf::methodTag( Method m ) noexcept
{
  switch ( m ) {
  case Method::Series: return "series";
  case Method::Asymptotic: return "asymptotic";
  case Method::PaperAsymptotic: return "paper-asymptotic";
  case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

void sf::raise( ErrorCode c, const std::string& msg )
{
  throw Error( c, msg );
}

void sf::SeriesControl::validate() const
{
  if ( !( rel_tol > 0.0 ) || max_terms < 1 || consecutive_small < 1 )
    raise( ErrorCode::InvalidArgument, "SeriesControl: need rel_tol>0, max_terms>=1, consecutive_small>=1" );
}

void sf::TruncationOrders::validate() const
{
  if ( R < 1 || S < 1 )
    raise( ErrorCode::InvalidArgument, "TruncationOrders: need R>=1 and S>=1" );
}

void sf::QuadratureConfig::validate() const
{
  if ( !( abs_tol > 0.0 ) || !( rel_tol > 0.0 ) || max_depth < 1 || !( tail_cut > 0.0 ) || max_intervals < 1 )
    raise( ErrorCode::InvalidArgument, "QuadratureConfig: tolerances must be positive and limits >= 1" );
}

bool sf::isNonPositiveInteger( Complex z )
{
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor( z.real() );
}

namespace {

  //Lanczos approximation with g=7 and 9 coefficients (relative accuracy
  //around 1e-15 for real arguments in (0,20]).
  constexpr double lanczos_g = 7.0;
  constexpr std::array<double,9> lanczos_p = {
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7 };
  constexpr double sqrt_2pi = 2.506628274631000502415765284811045253;

  template<class T>
  T lanczosGammaShifted( T x )
  {
    //Gamma(x+1) for Re(x) >= -0.5
    T acc = T( lanczos_p[0] );
    for ( std::size_t i = 1; i < lanczos_p.size(); ++i )
      acc += lanczos_p[i] / ( x + T( double(i) ) );
    T t = x + T( lanczos_g + 0.5 );
    using std::pow; using std::exp;
    return sqrt_2pi * pow( t, x + T(0.5) ) * exp( -t ) * acc;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double eps_dd = 4.93038065763132e-32;//2^-104

  struct SeriesParams {
    sf::Complex a;
    std::array<sf::Complex,2> b;
    int nb;
    sf::Complex z;
  };

  struct Pass {
    sf::Complex sum;
    double abs_sum;
    double next_term;
    int terms;
  };

  [[noreturn]] void noConvergence( const sf::SeriesControl& ctl )
  {
    sf::raise( sf::ErrorCode::NoConvergence,
               "hypergeometric series: stopping rule not met within max_terms="
               + std::to_string( ctl.max_terms ) );
  }

  template<class C>
  C ratioFactor( const SeriesParams& p, int n );

  template<>
  sf::Complex ratioFactor<sf::Complex>( const SeriesParams& p, int n )
  {
    //t_{n+1}/t_n
    const double m = n;
    sf::Complex den = m + 1.0;
    for ( int j = 0; j < p.nb; ++j )
      den *= p.b[j] + m;
    return ( p.a + m ) * p.z / den;
  }

  template<>
  sf::detail::CDD ratioFactor<sf::detail::CDD>( const SeriesParams& p, int n )
  {
    using sf::detail::CDD;
    using sf::detail::DD;
    const double m = n;
    CDD den( DD( m + 1.0 ), DD( 0.0 ) );
    for ( int j = 0; j < p.nb; ++j )
      den = den * CDD( DD( p.b[j].real() ) + DD( m ), DD( p.b[j].imag() ) );
    CDD num = CDD( DD( p.a.real() ) + DD( m ), DD( p.a.imag() ) ) * CDD( p.z );
    return num / den;
  }

  double mag( const sf::Complex& c ) { return std::abs( c ); }
  double mag( const sf::detail::CDD& c ) { return sf::detail::magnitude( c ); }

  template<class C>
  Pass sumSeries( const SeriesParams& p, const sf::SeriesControl& ctl )
  {
    C t( sf::Complex( 1.0 ) );
    C s( sf::Complex( 1.0 ) );
    double abs_sum = 1.0;
    int small = 0;
    for ( int n = 1; n < ctl.max_terms; ++n ) {
      t = t * ratioFactor<C>( p, n - 1 );
      s = s + t;
      const double at = mag( t );
      abs_sum += at;
      if ( !std::isfinite( abs_sum ) )
        sf::raise( sf::ErrorCode::Overflow, "hypergeometric series: terms overflow double range" );
      if ( at < ctl.rel_tol * mag( s ) ) {
        if ( ++small >= ctl.consecutive_small ) {
          C next = t * ratioFactor<C>( p, n );
          if constexpr ( std::is_same_v<C, sf::Complex> )
            return { s, abs_sum, mag( next ), n + 1 };
          else
            return { s.toComplex(), abs_sum, mag( next ), n + 1 };
        }
      } else {
        small = 0;
      }
    }
    noConvergence( ctl );
  }

  sf::EvalResult evalSeries( const SeriesParams& p, const sf::SeriesControl& ctl )
  {
    sf::EvalResult res;
    res.method = sf::Method::Series;
    if ( p.z == 0.0 ) {
      res.value = 1.0;
      res.terms_used = 1;
      return res;
    }
    Pass r = sumSeries<sf::Complex>( p, ctl );
    double rounding = 2.0 * eps * r.abs_sum;
    if ( rounding > ctl.rel_tol * std::abs( r.sum ) ) {
      r = sumSeries<sf::detail::CDD>( p, ctl );
      rounding = 4.0 * eps_dd * r.abs_sum + 0.5 * eps * std::abs( r.sum );
      res.flags |= sf::flags::extended_precision;
    }
    res.value = r.sum;
    res.est_error = r.next_term + rounding;
    res.terms_used = r.terms;
    return res;
  }

  void checkDenominator( sf::Complex b, const char * name )
  {
    if ( sf::isNonPositiveInteger( b ) )
      sf::raise( sf::ErrorCode::Pole, std::string( "hypergeometric series: " ) + name
                 + " is zero or a negative integer" );
  }

}

double sf::gamma_real( double x )
{
  if ( !std::isfinite( x ) )
    raise( ErrorCode::InvalidArgument, "gamma_real: argument must be finite" );
  if ( x <= 0.0 && x == std::floor( x ) )
    raise( ErrorCode::Pole, "gamma_real: pole at " + std::to_string( x ) );
  if ( x < 0.5 )
    return pi / ( std::sin( pi * x ) * gamma_real( 1.0 - x ) );
  return lanczosGammaShifted<double>( x - 1.0 );
}

sf::Complex sf::gamma_complex( Complex z )
{
  if ( isNonPositiveInteger( z ) )
    raise( ErrorCode::Pole, "gamma_complex: pole at " + std::to_string( z.real() ) );
  if ( z.imag() == 0.0 )
    return gamma_real( z.real() );
  if ( z.real() < 0.5 )
    return pi / ( std::sin( pi * z ) * gamma_complex( 1.0 - z ) );
  return lanczosGammaShifted<Complex>( z - 1.0 );
}

sf::Complex sf::rgamma_complex( Complex z )
{
  if ( isNonPositiveInteger( z ) )
    return 0.0;
  return 1.0 / gamma_complex( z );
}

sf::Complex sf::pochhammer( Complex a, int n )
{
  if ( n < 0 )
    raise( ErrorCode::InvalidArgument, "pochhammer: n must be nonnegative" );
  Complex r = 1.0;
  for ( int k = 0; k < n; ++k )
    r *= a + double(k);
  return r;
}

sf::EvalResult sf::hyp1f1( Complex a, Complex b, Complex z, const SeriesControl& ctl )
{
  ctl.validate();
  checkDenominator( b, "b" );
  if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
    raise( ErrorCode::InvalidArgument, "hyp1f1: z must be finite" );
  if ( z.real() < 0.0 ) {
    EvalResult r = evalSeries( SeriesParams{ b - a, { b, 0.0 }, 1, -z }, ctl );
    const Complex ez = std::exp( z );
    r.value *= ez;
    r.est_error *= std::abs( ez );
    return r;
  }
  return evalSeries( SeriesParams{ a, { b, 0.0 }, 1, z }, ctl );
}

sf::EvalResult sf::hyp1f2( Complex a, Complex b1, Complex b2, Complex z, const SeriesControl& ctl )
{
  ctl.validate();
  checkDenominator( b1, "b1" );
  checkDenominator( b2, "b2" );
  if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
    raise( ErrorCode::InvalidArgument, "hyp1f2: z must be finite" );
  return evalSeries( SeriesParams{ a, { b1, b2 }, 2, z }, ctl );
}
