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

#include "specfun/asym_engine.hpp"
#include "specfun/hyp_kernel.hpp"
#include <cmath>
#include <limits>

namespace sf = specfun;

namespace {

  constexpr double eps = std::numeric_limits<double>::epsilon();
  //Angles within this distance of a sector edge count as on the edge.
  constexpr double angle_tol = 16.0 * eps;
  constexpr int optimal_cap = 500;

  bool isReal( sf::Complex a ) { return a.imag() == 0.0; }

  //Drop a negative zero imaginary part so that arg() stays in (-pi, pi].
  sf::Complex canon( sf::Complex z ) { return { z.real(), z.imag() + 0.0 }; }

  sf::Complex ipow( sf::Complex z, int n )
  {
    sf::Complex r = 1.0;
    bool first = true;
    for ( int i = 0; i < std::abs( n ); ++i ) {
      r = first ? z : r * z;
      first = false;
    }
    return n < 0 ? 1.0 / r : r;
  }

  //Principal xi^p, exact powers of sqrt(xi) when 2p is an integer.
  sf::Complex cpow( sf::Complex xi, sf::Complex p )
  {
    if ( isReal( p ) ) {
      const double twice = 2.0 * p.real();
      if ( twice == std::floor( twice ) && std::abs( twice ) < 64.0 ) {
        const int m = static_cast<int>( twice );
        if ( m < 0 )
          return 1.0 / cpow( xi, -p );
        sf::Complex r = ipow( xi, m / 2 );
        if ( m % 2 != 0 )
          r *= std::sqrt( xi );
        return r;
      }
    }
    return std::exp( p * std::log( xi ) );
  }

  //e^{i pi a} with exact values at multiples of 1/2 for real a.
  sf::Complex expIPi( sf::Complex a )
  {
    if ( isReal( a ) ) {
      const double x = a.real();
      const double twice = 2.0 * x;
      if ( twice == std::floor( twice ) && std::abs( twice ) < 1e15 ) {
        long m = static_cast<long>( twice ) % 4;
        if ( m < 0 )
          m += 4;
        static const sf::Complex quarter[4] = { { 1.0, 0.0 }, { 0.0, 1.0 }, { -1.0, 0.0 }, { 0.0, -1.0 } };
        return quarter[m];
      }
      return { std::cos( sf::pi * x ), std::sin( sf::pi * x ) };
    }
    return std::exp( sf::Complex( 0.0, sf::pi ) * a );
  }

  struct SumOut {
    sf::Complex sum = 0.0;
    double error = 0.0;
    int terms = 0;
  };

  //Sum_n c_n x^n with c_{n+1}/c_n = (p+n)(q+n)/(n+1), c_0 = 1.
  SumOut asymptoticSum( sf::Complex p, sf::Complex q, sf::Complex x, std::optional<int> order )
  {
    SumOut out;
    sf::Complex t = 1.0;
    out.sum = t;
    out.terms = 1;
    const int cap = order ? *order : optimal_cap;
    for ( int n = 0; ; ++n ) {
      const double m = n;
      sf::Complex next = t * ( p + m ) * ( q + m ) / ( m + 1.0 ) * x;
      if ( next == 0.0 ) {
        out.error = 0.0;
        return out;
      }
      if ( out.terms >= cap ) {
        out.error = std::abs( next );
        return out;
      }
      if ( !order ) {
        if ( std::abs( next ) >= std::abs( t ) ) {
          out.error = std::abs( t );
          return out;
        }
        if ( std::abs( next ) < 0.5 * eps * std::abs( out.sum ) ) {
          out.error = std::abs( next );
          return out;
        }
      }
      t = next;
      out.sum += t;
      ++out.terms;
    }
  }

  bool inOpen( double t, double lo, double hi )
  {
    return t > lo + angle_tol && t < hi - angle_tol;
  }

  bool inHalfOpen( double t, double lo, double hi )
  {
    return t > lo + angle_tol && t <= hi + angle_tol;
  }

  void checkXi( sf::Complex xi, const char * who )
  {
    if ( xi == 0.0 || !std::isfinite( xi.real() ) || !std::isfinite( xi.imag() ) )
      sf::raise( sf::ErrorCode::Domain, std::string( who ) + ": argument must be finite and nonzero" );
  }

}

sf::SectorDecision sf::sector_sign_xi( Complex xi )
{
  xi = canon( xi );
  checkXi( xi, "sector_sign_xi" );
  const double th = std::arg( xi );
  SectorDecision d;
  d.alpha = 1;
  d.k = 0;
  d.boundary = std::abs( th + 0.5 * pi ) <= angle_tol;
  d.sign = ( th <= -0.5 * pi + angle_tol ) ? Sign::Minus : Sign::Plus;
  return d;
}

sf::SectorDecision sf::first_match_sector( double th, const SectorShape& s )
{
  const int kmax = 2 * s.alpha + 2;
  for ( double t : { th, th + 2.0 * pi } ) {
    for ( int k = 0; k <= kmax; ++k ) {
      const double shift = k * s.period;
      if ( inOpen( t, s.plus_lo + shift, s.plus_hi + shift ) )
        return { Sign::Plus, k, s.alpha, false };
      const bool in_minus = s.minus_closed_hi
        ? inHalfOpen( t, s.minus_lo + shift, s.minus_hi + shift )
        : inOpen( t, s.minus_lo + shift, s.minus_hi + shift );
      if ( in_minus )
        return { Sign::Minus, k, s.alpha, false };
    }
  }
  //Only reachable on an edge excluded by every interval.
  return { Sign::Plus, 0, s.alpha, true };
}

sf::SectorDecision sf::sector_sign_z( Complex z, int alpha )
{
  z = canon( z );
  checkXi( z, "sector_sign_z" );
  if ( alpha < 1 )
    raise( ErrorCode::InvalidArgument, "sector_sign_z: alpha must be a positive integer" );
  const double a = alpha;
  SectorShape shape{ -pi / ( 2 * a ), 3 * pi / ( 2 * a ),
                     -3 * pi / ( 2 * a ), -pi / ( 2 * a ),
                     2 * pi / a, true, alpha };
  const double th = std::arg( z );
  SectorDecision d = first_match_sector( th, shape );
  const double x = th * 2.0 * a / pi;
  const double r = std::round( x );
  d.boundary = std::abs( x - r ) <= angle_tol * 2.0 * a / pi
               && std::fmod( std::abs( r ), 2.0 ) == 1.0;
  return d;
}

sf::KummerAsymptoticTerms sf::kummer_asymptotic_terms( Complex a, Complex b, Complex xi,
                                                       const std::optional<TruncationOrders>& ord,
                                                       StokesConvention conv )
{
  xi = canon( xi );
  checkXi( xi, "hyp1f1_asymptotic" );
  if ( ord )
    ord->validate();
  KummerAsymptoticTerms out;
  out.sector = sector_sign_xi( xi );
  if ( conv == StokesConvention::SectorRule ) {
    out.multiplier = out.sector.sign == Sign::Plus ? 1 : -1;
  } else {
    if ( xi.imag() > 0.0 || ( xi.imag() == 0.0 && xi.real() < 0.0 ) )
      out.multiplier = 1;
    else if ( xi.imag() < 0.0 )
      out.multiplier = -1;
    else
      out.multiplier = 0;
  }

  const Complex gb = gamma_complex( b );
  const Complex pre_alg = gb * rgamma_complex( b - a );
  const Complex pre_exp = gb * rgamma_complex( a );

  if ( pre_alg != 0.0 ) {
    Complex phase;
    if ( out.multiplier == 1 )
      phase = expIPi( a );
    else if ( out.multiplier == -1 )
      phase = expIPi( -a );
    else
      phase = 0.5 * ( expIPi( a ) + expIPi( -a ) );
    const Complex p = pre_alg * phase * cpow( xi, -a );
    SumOut s = asymptoticSum( a, 1.0 + a - b, -1.0 / xi,
                              ord ? std::optional<int>( ord->R ) : std::nullopt );
    out.algebraic = p * s.sum;
    out.algebraic_error = std::abs( p ) * s.error;
    out.terms += s.terms;
  }
  if ( pre_exp != 0.0 ) {
    const Complex p = pre_exp * cpow( xi, a - b );
    SumOut s = asymptoticSum( b - a, 1.0 - a, 1.0 / xi,
                              ord ? std::optional<int>( ord->S ) : std::nullopt );
    out.exponential = p * s.sum;
    out.exponential_error = std::abs( p ) * s.error;
    out.terms += s.terms;
  }
  return out;
}

namespace {

  sf::EvalResult assemble( const sf::KummerAsymptoticTerms& t, sf::Complex xi, double crossover )
  {
    sf::EvalResult r;
    r.method = sf::Method::Asymptotic;
    r.terms_used = t.terms;
    r.value = t.algebraic;
    r.est_error = t.algebraic_error;
    if ( t.exponential != 0.0 ) {
      const sf::Complex e = std::exp( xi );
      if ( !std::isfinite( std::abs( e ) ) ) {
        r.flags |= sf::flags::overflow;
        r.value = std::numeric_limits<double>::infinity();
        r.est_error = std::numeric_limits<double>::infinity();
      } else {
        r.value += e * t.exponential;
        r.est_error += std::abs( e ) * t.exponential_error;
      }
    }
    if ( t.sector.boundary )
      r.flags |= sf::flags::sector_boundary;
    if ( std::abs( xi ) < crossover )
      r.flags |= sf::flags::below_crossover;
    return r;
  }

}

sf::EvalResult sf::hyp1f1_asymptotic( Complex a, Complex b, Complex xi, const TruncationOrders& ord,
                                      StokesConvention conv, double crossover )
{
  return assemble( kummer_asymptotic_terms( a, b, xi, ord, conv ), xi, crossover );
}

sf::EvalResult sf::hyp1f1_asymptotic_optimal( Complex a, Complex b, Complex xi,
                                              StokesConvention conv, double crossover )
{
  return assemble( kummer_asymptotic_terms( a, b, xi, std::nullopt, conv ), xi, crossover );
}

sf::EvalResult sf::lemma1_expansion( Complex z, int alpha, const TruncationOrders& ord, StokesConvention conv )
{
  checkXi( z, "lemma1_expansion" );
  if ( alpha < 1 )
    raise( ErrorCode::InvalidArgument, "lemma1_expansion: alpha must be a positive integer" );
  const double a = 1.0 / alpha;
  EvalResult r = hyp1f1_asymptotic( a, a + 1.0, ipow( z, alpha ), ord, conv );
  r.value = z * r.value;
  r.est_error *= std::abs( z );
  return r;
}

sf::Complex sf::lemma1_printed( Complex z, int alpha )
{
  checkXi( z, "lemma1_printed" );
  if ( alpha < 1 )
    raise( ErrorCode::InvalidArgument, "lemma1_printed: alpha must be a positive integer" );
  const SectorDecision d = sector_sign_z( z, alpha );
  const double a = alpha;
  const double g1 = gamma_real( 1.0 / a + 1.0 );
  const double g2 = gamma_real( 2.0 - 1.0 / a );
  const Complex phase = expIPi( ( d.sign == Sign::Plus ? 1.0 : -1.0 ) / a );
  const Complex za = ipow( z, alpha );
  const Complex pref = ( alpha % 2 == 0 ) ? z / std::abs( z ) : Complex( 1.0 );
  return g1 * phase * pref * ( 1.0 + g1 / za )
    + std::exp( za ) / ( a * ipow( z, alpha - 1 ) ) * ( 1.0 + g2 / za );
}
