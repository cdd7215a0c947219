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

#include "specfun/quad_oracle.hpp"
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace sf = specfun;

namespace {

  //Kronrod 15-point abscissae on [-1,1] (nonnegative half) and weights; the
  //odd-indexed abscissae are the 7-point Gauss nodes.
  constexpr std::array<double,8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000 };
  constexpr std::array<double,8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714 };
  constexpr std::array<double,4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327 };

  constexpr double eps = std::numeric_limits<double>::epsilon();

  struct Segment {
    sf::Complex a;
    sf::Complex d;//b - a
  };

  struct Piece {
    int seg;
    double t0, t1;
    int depth;
    sf::Complex value;
    double error;
    double floor;
    long id;
  };

  struct ByError {
    bool operator()( const Piece& x, const Piece& y ) const
    {
      if ( x.error != y.error )
        return x.error < y.error;
      return x.id > y.id;
    }
  };

  void gk15( const sf::Integrand& f, const Segment& s, Piece& p )
  {
    const double c = 0.5 * ( p.t0 + p.t1 );
    const double h = 0.5 * ( p.t1 - p.t0 );
    auto g = [&]( double t ) { return f( s.a + s.d * t ) * s.d; };
    const sf::Complex fc = g( c );
    sf::Complex k = wgk[7] * fc;
    sf::Complex gauss = wg[3] * fc;
    double kabs = wgk[7] * std::abs( fc );
    for ( int j = 0; j < 7; ++j ) {
      const sf::Complex f1 = g( c - h * xgk[j] );
      const sf::Complex f2 = g( c + h * xgk[j] );
      k += wgk[j] * ( f1 + f2 );
      kabs += wgk[j] * ( std::abs( f1 ) + std::abs( f2 ) );
      if ( j % 2 == 1 )
        gauss += wg[j / 2] * ( f1 + f2 );
    }
    p.value = h * k;
    //Error floor from rounding in the function values themselves.
    p.floor = 50.0 * eps * h * kabs;
    p.error = std::max( std::abs( h * ( k - gauss ) ), p.floor );
    if ( !std::isfinite( p.error ) || !std::isfinite( std::abs( p.value ) ) )
      sf::raise( sf::ErrorCode::Overflow, "adaptive_quad: integrand not finite on the path" );
  }

}

sf::EvalResult sf::adaptive_quad_path( const Integrand& f, const std::vector<Complex>& path,
                                       const QuadratureConfig& cfg )
{
  cfg.validate();
  if ( path.size() < 2 )
    raise( ErrorCode::InvalidArgument, "adaptive_quad_path: need at least two points" );
  std::vector<Segment> segs;
  for ( std::size_t i = 0; i + 1 < path.size(); ++i )
    segs.push_back( { path[i], path[i+1] - path[i] } );

  std::priority_queue<Piece, std::vector<Piece>, ByError> heap;
  long next_id = 0;
  int evals = 0;
  for ( std::size_t i = 0; i < segs.size(); ++i ) {
    Piece p{ static_cast<int>( i ), 0.0, 1.0, 0, 0.0, 0.0, 0.0, next_id++ };
    gk15( f, segs[i], p );
    evals += 15;
    heap.push( p );
  }

  //Running totals are recomputed from the heap contents now and then to
  //keep cancellation in the updates from accumulating.
  auto totals = [&heap]() {
    auto copy = heap;
    Complex v = 0.0;
    double e = 0.0;
    while ( !copy.empty() ) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    return std::pair<Complex,double>( v, e );
  };

  auto [value, error] = totals();
  int since_refresh = 0;
  while ( error > std::max( cfg.abs_tol, cfg.rel_tol * std::abs( value ) ) ) {
    Piece worst = heap.top();
    //The worst piece is at its rounding floor: bisection cannot help.
    if ( worst.error <= worst.floor )
      break;
    if ( worst.depth >= cfg.max_depth )
      raise( ErrorCode::ToleranceNotMet, "adaptive_quad: tolerance not met at max_depth="
             + std::to_string( cfg.max_depth ) );
    if ( static_cast<int>( heap.size() ) >= cfg.max_intervals )
      raise( ErrorCode::ToleranceNotMet, "adaptive_quad: tolerance not met within max_intervals="
             + std::to_string( cfg.max_intervals ) );
    heap.pop();
    const double mid = 0.5 * ( worst.t0 + worst.t1 );
    Piece left{ worst.seg, worst.t0, mid, worst.depth + 1, 0.0, 0.0, 0.0, next_id++ };
    Piece right{ worst.seg, mid, worst.t1, worst.depth + 1, 0.0, 0.0, 0.0, next_id++ };
    gk15( f, segs[worst.seg], left );
    gk15( f, segs[worst.seg], right );
    evals += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push( left );
    heap.push( right );
    if ( ++since_refresh == 64 ) {
      std::tie( value, error ) = totals();
      since_refresh = 0;
    }
  }
  std::tie( value, error ) = totals();
  EvalResult r;
  r.value = value;
  r.est_error = error;
  r.method = Method::Quadrature;
  r.terms_used = evals;
  return r;
}

sf::EvalResult sf::adaptive_quad( const Integrand& f, Complex a, Complex b, const QuadratureConfig& cfg )
{
  if ( a == b ) {
    cfg.validate();
    EvalResult r;
    r.method = Method::Quadrature;
    return r;
  }
  return adaptive_quad_path( f, { a, b }, cfg );
}

sf::EvalResult sf::quad_dawson( Complex z, const QuadratureConfig& cfg )
{
  if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
    raise( ErrorCode::InvalidArgument, "quad_dawson: z must be finite" );
  const Complex z2 = z * z;
  if ( z2.real() <= -700.0 )
    raise( ErrorCode::Overflow, "quad_dawson: Re(z^2) <= -700, e^{-z^2} not representable" );
  //e^{eta^2 - z^2} keeps the integrand in range for large real z.
  auto f = [z]( Complex eta ) { return std::exp( ( eta - z ) * ( eta + z ) ); };
  return adaptive_quad( f, 0.0, z, cfg );
}

sf::EvalResult sf::quad_faddeeva( Complex z, const QuadratureConfig& cfg )
{
  if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
    raise( ErrorCode::InvalidArgument, "quad_faddeeva: z must be finite" );
  if ( z.imag() < 0.0 ) {
    EvalResult d = quad_dawson( z, cfg );
    const Complex E = std::exp( -z * z );
    d.value = E + Complex( 0.0, 2.0 / sqrt_pi ) * d.value;
    d.est_error = ( 2.0 / sqrt_pi ) * d.est_error + std::numeric_limits<double>::epsilon() * std::abs( E );
    return d;
  }
  cfg.validate();
  //(1/sqrt(pi)) int_0^inf exp(-t^2/4 + i z t) dt, bounded by e^{-t^2/4} here.
  const double T = 2.0 * std::sqrt( -std::log( cfg.tail_cut ) ) + 1.0;
  const int pieces = static_cast<int>( std::ceil( T * ( 1.0 + std::abs( z.real() ) ) / 2.0 ) );
  std::vector<Complex> path;
  for ( int k = 0; k <= pieces; ++k )
    path.push_back( T * double( k ) / double( pieces ) );
  auto f = [z]( Complex t ) { return std::exp( -0.25 * t * t + Complex( 0.0, 1.0 ) * z * t ); };
  EvalResult r = adaptive_quad_path( f, path, cfg );
  r.value /= sqrt_pi;
  r.est_error /= sqrt_pi;
  return r;
}

sf::FresnelPair sf::quad_fresnel( Complex z, const QuadratureConfig& cfg )
{
  if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
    raise( ErrorCode::InvalidArgument, "quad_fresnel: z must be finite" );
  EvalResult c = adaptive_quad( []( Complex eta ) { return std::cos( pi * eta * eta ); }, 0.0, z, cfg );
  EvalResult s = adaptive_quad( []( Complex eta ) { return std::sin( pi * eta * eta ); }, 0.0, z, cfg );
  FresnelPair out;
  out.c = c.value;
  out.s = s.value;
  out.method = Method::Quadrature;
  out.est_error_c = c.est_error;
  out.est_error_s = s.est_error;
  return out;
}

double sf::gordeyev_tail_cut( const GordeyevParams& p, const QuadratureConfig& cfg )
{
  p.validate();
  cfg.validate();
  //Smallest T with -Re(nu) T^2/2 + |Im omega| T + 2|Re lambda| = ln(tail_cut).
  const double a = 0.5 * p.nu.real();
  const double b = std::abs( p.omega.imag() );
  const double c = 2.0 * std::abs( p.lambda.real() ) - std::log( cfg.tail_cut );
  const double T = ( b + std::sqrt( b * b + 4.0 * a * c ) ) / ( 2.0 * a );
  if ( !std::isfinite( T ) || T <= 0.0 )
    raise( ErrorCode::Domain, "quad_gordeyev: no finite tail cut for these parameters" );
  return T;
}

sf::EvalResult sf::quad_gordeyev( const GordeyevParams& p, const QuadratureConfig& cfg )
{
  const double T = gordeyev_tail_cut( p, cfg );
  //Peak of the integrand bound, exp(|Im w|^2/(2 Re nu) + 2|Re lambda|).
  const double peak = p.omega.imag() * p.omega.imag() / ( 2.0 * p.nu.real() ) + 2.0 * std::abs( p.lambda.real() );
  if ( peak > 700.0 )
    raise( ErrorCode::Overflow, "quad_gordeyev: integrand exceeds double range" );
  if ( p.omega == 0.0 ) {
    EvalResult r;
    r.method = Method::Quadrature;
    return r;
  }
  std::vector<Complex> path;
  for ( double t = 0.0; t < T; t += pi )
    path.push_back( t );
  path.push_back( T );
  if ( path.size() > 2 && T - path[path.size() - 2].real() < 1e-12 )
    path.erase( path.end() - 2 );
  const Complex w = p.omega, lam = p.lambda, nu = p.nu;
  auto f = [w, lam, nu]( Complex tc ) {
    const double t = tc.real();
    return std::exp( Complex( 0.0, 1.0 ) * w * t - lam * ( 1.0 - std::cos( t ) ) - 0.5 * nu * t * t );
  };
  //Tolerances apply to the integral; scale the absolute one by 1/|omega|.
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol / std::abs( w );
  EvalResult r = adaptive_quad_path( f, path, inner );
  r.value *= w;
  r.est_error *= std::abs( w );
  return r;
}
