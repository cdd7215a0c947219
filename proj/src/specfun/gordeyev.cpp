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

#include "specfun/gordeyev.hpp"
#include "specfun/quad_oracle.hpp"
#include <cmath>
#include <limits>
#include <string>

namespace sf = specfun;

namespace {

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr double lam_guard = 700.0;

  sf::Complex canon( sf::Complex z ) { return { z.real(), z.imag() + 0.0 }; }

  //Ascending series is used while its terms do not cancel by more than
  //about e^7 (|lam| - |Re lam| bounds the loss).
  bool useSeries( sf::Complex lam )
  {
    const double a = std::abs( lam );
    return a <= 20.0 && a - std::abs( lam.real() ) <= 7.0;
  }

  sf::Complex besselSeries( int n, sf::Complex lam )
  {
    const sf::Complex h = 0.5 * lam;
    sf::Complex t0 = 1.0;
    for ( int j = 1; j <= n; ++j ) {
      t0 *= h / double( j );
      if ( t0 == 0.0 )
        return 0.0;
    }
    const sf::Complex q = h * h;
    sf::Complex s = t0, t = t0;
    int small = 0;
    for ( int k = 1; k < 2000; ++k ) {
      t *= q / ( double( k ) * double( k + n ) );
      s += t;
      if ( std::abs( t ) < 0.25 * eps * std::abs( s ) ) {
        if ( ++small == 2 )
          return s;
      } else {
        small = 0;
      }
    }
    sf::raise( sf::ErrorCode::NoConvergence, "bessel_i: ascending series did not converge" );
  }

  //Downward recurrence I_{k-1} = (2k/lam) I_k + I_{k+1} from a start index
  //well past the turning point, normalized with I_0 + 2 sum I_k = e^lam.
  //Returns e^{-lam} I_k for k = 0..n_max. Needs Re lam >= 0, lam != 0.
  std::vector<sf::Complex> millerScaled( int n_max, sf::Complex lam )
  {
    const double al = std::abs( lam );
    const int nn = std::max( n_max, static_cast<int>( std::ceil( al ) ) );
    const int M = nn + static_cast<int>( std::ceil( 10.0 + 2.0 * std::sqrt( double( nn ) * al ) ) );
    std::vector<sf::Complex> f( M + 2, sf::Complex( 0.0 ) );
    f[M] = 1.0;
    const sf::Complex inv = 1.0 / lam;
    for ( int k = M; k >= 1; --k ) {
      f[k - 1] = ( 2.0 * k ) * inv * f[k] + f[k + 1];
      if ( std::abs( f[k - 1] ) > 1e250 ) {
        for ( int j = k - 1; j <= M; ++j )
          f[j] *= 1e-250;
      }
    }
    sf::Complex tail = 0.0;
    for ( int k = M; k >= 1; --k )
      tail += f[k];
    const sf::Complex S = f[0] + 2.0 * tail;
    std::vector<sf::Complex> out( n_max + 1 );
    for ( int k = 0; k <= n_max; ++k )
      out[k] = f[k] / S;
    return out;
  }

  void checkLambda( sf::Complex lam, const char * who )
  {
    if ( !std::isfinite( lam.real() ) || !std::isfinite( lam.imag() ) )
      sf::raise( sf::ErrorCode::InvalidArgument, std::string( who ) + ": lambda must be finite" );
    if ( std::abs( lam ) > lam_guard )
      sf::raise( sf::ErrorCode::Overflow, std::string( who ) + ": |lambda| exceeds 700" );
  }

  void checkLambdaSector( sf::Complex lam, const char * who )
  {
    lam = canon( lam );
    if ( lam == 0.0 || !( std::abs( std::arg( lam ) ) < 0.5 * sf::pi ) )
      sf::raise( sf::ErrorCode::Domain, std::string( who ) + ": arg(lambda) must lie in (-pi/2, pi/2)" );
  }

  sf::Complex bracket( int n, sf::Complex lam )
  {
    const double m = 4.0 * double( n ) * double( n ) - 1.0;
    return 1.0 - m / ( 8.0 * lam );
  }

  //Largest n with |4n^2 - 1| < 8|lam|.
  int lambdaRange( sf::Complex lam, int cap )
  {
    const double a8 = 8.0 * std::abs( lam );
    int n = 0;
    while ( n < cap && 4.0 * double( n + 1 ) * double( n + 1 ) - 1.0 < a8 )
      ++n;
    return n;
  }

  struct Frame {
    sf::Complex sq;       //sqrt(2 nu)
    sf::Complex pref;     //-i omega / sqrt(2 nu)
    sf::Complex zeta( const sf::GordeyevParams& p, int n ) const { return canon( ( p.omega - double( n ) ) / sq ); }
  };

  Frame frameOf( const sf::GordeyevParams& p )
  {
    Frame f;
    f.sq = std::sqrt( 2.0 * p.nu );
    f.pref = sf::Complex( 0.0, -1.0 ) * p.omega / f.sq;
    return f;
  }

  //Z(zeta_n) from the large-argument expansion with the branch chosen from
  //the sector of theta_n.
  sf::EvalResult zAsym( const sf::GordeyevParams& p, const Frame& fr, int n, double crossover_abs2 )
  {
    const sf::Complex z = fr.zeta( p, n );
    if ( !( std::norm( z ) >= crossover_abs2 ) )
      sf::raise( sf::ErrorCode::CrossoverViolation,
                 "gordeyev: |(omega-n)/sqrt(2 nu)|^2 below the crossover for n = " + std::to_string( n ) );
    const sf::SectorDecision d = sf::sector_sign_z( z, 2 );
    sf::EvalResult r = sf::fried_conte_asymptotic_signed( z, d.sign == sf::Sign::Plus ? 1 : -1 );
    if ( d.boundary )
      r.flags |= sf::flags::sector_boundary;
    return r;
  }

  constexpr std::uint32_t carried_flags = sf::flags::overflow | sf::flags::sector_boundary | sf::flags::extended_precision;

  sf::EvalResult overflowed( sf::Method m, std::uint32_t fl, int N )
  {
    sf::EvalResult r;
    r.method = m;
    r.value = sf::Complex( inf, inf );
    r.est_error = inf;
    r.terms_used = N;
    r.flags = fl | sf::flags::overflow;
    return r;
  }

  //Sum of e^{-lam} I_n Z_n over n = -N..N with the block tail rule. zf(n)
  //gives Z at zeta_n.
  template<class ZF>
  sf::EvalResult besselWeightedSum( const sf::GordeyevParams& p, const sf::SumTruncation& tr,
                                    const Frame& fr, sf::Method method, ZF zf )
  {
    const double al = std::abs( p.lambda );
    int N = std::min( static_cast<int>( std::ceil( al ) ) + 10, tr.n_max );
    std::vector<sf::EvalResult> zpos, zneg;
    std::uint32_t fl = 0;
    auto extendZ = [&]( int upto ) {
      for ( int k = static_cast<int>( zpos.size() ); k <= upto; ++k ) {
        zpos.push_back( zf( k ) );
        zneg.push_back( k == 0 ? zpos.back() : zf( -k ) );
        fl |= ( zpos.back().flags | zneg.back().flags ) & carried_flags;
      }
    };
    std::vector<sf::Complex> b;
    for ( ;; ) {
      extendZ( N );
      if ( fl & sf::flags::overflow )
        return overflowed( method, fl, N );
      b = sf::bessel_i_scaled_sequence( N, p.lambda );
      sf::Complex s = 0.0;
      for ( int k = 0; k <= N; ++k )
        s += b[k] * ( k == 0 ? zpos[0].value : zpos[k].value + zneg[k].value );
      double block = 0.0;
      for ( int k = std::max( 1, N - 7 ); k <= N; ++k )
        block += std::abs( b[k] ) * ( std::abs( zpos[k].value ) + std::abs( zneg[k].value ) );
      if ( block <= tr.tail_tol * std::abs( s ) || block == 0.0 ) {
        double err = 0.0, mag = 0.0;
        for ( int k = 0; k <= N; ++k ) {
          const double zk = k == 0 ? zpos[0].est_error : zpos[k].est_error + zneg[k].est_error;
          const double mk = k == 0 ? std::abs( zpos[0].value ) : std::abs( zpos[k].value ) + std::abs( zneg[k].value );
          err += std::abs( b[k] ) * zk;
          mag += std::abs( b[k] ) * mk;
        }
        sf::EvalResult r;
        r.method = method;
        r.value = fr.pref * s;
        r.est_error = std::abs( fr.pref ) * ( err + block + 8.0 * eps * mag );
        r.terms_used = N;
        r.flags = fl;
        return r;
      }
      if ( N >= tr.n_max )
        sf::raise( sf::ErrorCode::NoConvergence,
                   "gordeyev: sum not converged at n_max = " + std::to_string( tr.n_max ) );
      N = std::min( N + 8, tr.n_max );
    }
  }

}

void sf::SumTruncation::validate() const
{
  if ( n_max < 1 )
    raise( ErrorCode::InvalidArgument, "SumTruncation: n_max must be >= 1" );
  if ( !( tail_tol > 0.0 ) )
    raise( ErrorCode::InvalidArgument, "SumTruncation: tail_tol must be positive" );
}

void sf::GordeyevParams::validate() const
{
  for ( Complex c : { omega, lambda, nu } )
    if ( !std::isfinite( c.real() ) || !std::isfinite( c.imag() ) )
      raise( ErrorCode::InvalidArgument, "GordeyevParams: parameters must be finite" );
  if ( !( nu.real() > 0.0 ) )
    raise( ErrorCode::InvalidArgument, "GordeyevParams: Re(nu) must be positive" );
}

sf::Complex sf::bessel_i( int n, Complex lam )
{
  checkLambda( lam, "bessel_i" );
  lam = canon( lam );
  n = std::abs( n );
  if ( lam == 0.0 )
    return n == 0 ? 1.0 : 0.0;
  if ( useSeries( lam ) )
    return besselSeries( n, lam );
  if ( lam.real() < 0.0 ) {
    const Complex v = std::exp( -lam ) * millerScaled( n, -lam )[n];
    return ( n % 2 ) ? -v : v;
  }
  return std::exp( lam ) * millerScaled( n, lam )[n];
}

std::vector<sf::Complex> sf::bessel_i_scaled_sequence( int n_max, Complex lam )
{
  checkLambda( lam, "bessel_i_scaled_sequence" );
  if ( n_max < 0 )
    raise( ErrorCode::InvalidArgument, "bessel_i_scaled_sequence: n_max must be >= 0" );
  lam = canon( lam );
  std::vector<Complex> out( n_max + 1, Complex( 0.0 ) );
  if ( lam == 0.0 ) {
    out[0] = 1.0;
    return out;
  }
  if ( useSeries( lam ) ) {
    const Complex e = std::exp( -lam );
    for ( int k = 0; k <= n_max; ++k )
      out[k] = e * besselSeries( k, lam );
    return out;
  }
  if ( lam.real() < 0.0 ) {
    if ( -2.0 * lam.real() > lam_guard )
      raise( ErrorCode::Overflow, "bessel_i_scaled_sequence: e^{-lambda} I_n(lambda) overflows" );
    const Complex e2 = std::exp( -2.0 * lam );
    out = millerScaled( n_max, -lam );
    for ( int k = 0; k <= n_max; ++k )
      out[k] *= ( k % 2 ) ? -e2 : e2;
    return out;
  }
  return millerScaled( n_max, lam );
}

sf::Complex sf::bessel_i_asymptotic( int n, Complex lam )
{
  checkLambda( lam, "bessel_i_asymptotic" );
  checkLambdaSector( lam, "bessel_i_asymptotic" );
  lam = canon( lam );
  return std::exp( lam ) / std::sqrt( 2.0 * pi * lam ) * bracket( n, lam );
}

double sf::theta_arg( const GordeyevParams& p, int n )
{
  p.validate();
  const Complex z = frameOf( p ).zeta( p, n );
  if ( z == 0.0 )
    raise( ErrorCode::Degenerate, "theta_arg: omega equals n" );
  return std::arg( z );
}

sf::EvalResult sf::gordeyev_series( const GordeyevParams& p, const SumTruncation& tr, const MethodPolicy& pol )
{
  p.validate();
  tr.validate();
  pol.validate();
  checkLambda( p.lambda, "gordeyev_series" );
  const Frame fr = frameOf( p );
  if ( p.omega == 0.0 ) {
    EvalResult r;
    r.terms_used = 0;
    return r;
  }
  return besselWeightedSum( p, tr, fr, Method::Series,
                            [&]( int n ) { return fried_conte( fr.zeta( p, n ), pol ); } );
}

sf::EvalResult sf::gordeyev_asym_omega( const GordeyevParams& p, const SumTruncation& tr, double crossover_abs2 )
{
  p.validate();
  tr.validate();
  checkLambda( p.lambda, "gordeyev_asym_omega" );
  const Frame fr = frameOf( p );
  return besselWeightedSum( p, tr, fr, Method::Asymptotic,
                            [&]( int n ) { return zAsym( p, fr, n, crossover_abs2 ); } );
}

namespace {

  //Sum over |n| <= lambdaRange of pref_l * weight_n * Z_n, where
  //pref_l = -i omega/(sqrt(2 nu) sqrt(2 pi lam)).
  template<class ZF>
  sf::EvalResult lambdaWeightedSum( const sf::GordeyevParams& p, const sf::SumTruncation& tr,
                                    bool first_order, ZF zf )
  {
    const Frame fr = frameOf( p );
    const sf::Complex lam = canon( p.lambda );
    const sf::Complex prefl = sf::Complex( 0.0, -1.0 ) * p.omega / ( fr.sq * std::sqrt( 2.0 * sf::pi * lam ) );
    const int N = lambdaRange( lam, tr.n_max );
    sf::Complex s = 0.0;
    double err = 0.0, mag = 0.0;
    std::uint32_t fl = 0;
    const double l2 = std::norm( lam );
    for ( int n = -N; n <= N; ++n ) {
      const sf::EvalResult z = zf( n );
      fl |= z.flags & carried_flags;
      const sf::Complex w = first_order ? bracket( n, lam ) : sf::Complex( 1.0 );
      s += w * z.value;
      const double m = 4.0 * double( n ) * double( n );
      //next term of the large-argument Bessel expansion
      const double omitted = std::abs( ( m - 1.0 ) * ( m - 9.0 ) ) / ( 128.0 * l2 );
      err += std::abs( w ) * z.est_error + std::abs( z.value ) * omitted;
      mag += std::abs( w ) * std::abs( z.value );
    }
    sf::EvalResult r;
    r.method = sf::Method::Asymptotic;
    r.terms_used = N;
    if ( fl & sf::flags::overflow )
      return overflowed( r.method, fl, N );
    r.value = prefl * s;
    r.est_error = std::abs( prefl ) * ( err + 8.0 * eps * mag );
    r.flags = fl;
    if ( std::abs( lam ) < sf::default_crossover_abs )
      r.flags |= sf::flags::below_crossover;
    return r;
  }

}

sf::EvalResult sf::gordeyev_asym_lambda( const GordeyevParams& p, const SumTruncation& tr )
{
  p.validate();
  tr.validate();
  checkLambda( p.lambda, "gordeyev_asym_lambda" );
  checkLambdaSector( p.lambda, "gordeyev_asym_lambda" );
  const Frame fr = frameOf( p );
  return lambdaWeightedSum( p, tr, true,
                            [&]( int n ) { return fried_conte( fr.zeta( p, n ) ); } );
}

sf::EvalResult sf::gordeyev_asym_both( const GordeyevParams& p, const SumTruncation& tr,
                                       double crossover_abs2, bool first_order )
{
  p.validate();
  tr.validate();
  checkLambda( p.lambda, "gordeyev_asym_both" );
  checkLambdaSector( p.lambda, "gordeyev_asym_both" );
  const Frame fr = frameOf( p );
  return lambdaWeightedSum( p, tr, first_order,
                            [&]( int n ) { return zAsym( p, fr, n, crossover_abs2 ); } );
}

std::vector<sf::Complex> sf::gordeyev_series_terms( const GordeyevParams& p, int N, BesselWeight w )
{
  p.validate();
  checkLambda( p.lambda, "gordeyev_series_terms" );
  if ( N < 0 )
    raise( ErrorCode::InvalidArgument, "gordeyev_series_terms: N must be >= 0" );
  const Frame fr = frameOf( p );
  const Complex lam = canon( p.lambda );
  std::vector<Complex> b;
  Complex rs = 0.0;
  if ( w == BesselWeight::Exact ) {
    b = bessel_i_scaled_sequence( N, lam );
  } else {
    checkLambdaSector( lam, "gordeyev_series_terms" );
    rs = 1.0 / std::sqrt( 2.0 * pi * lam );
  }
  std::vector<Complex> out;
  out.reserve( 2 * N + 1 );
  for ( int n = -N; n <= N; ++n ) {
    const Complex wn = w == BesselWeight::Exact ? b[std::abs( n )] : rs * bracket( n, lam );
    out.push_back( fr.pref * wn * fried_conte( fr.zeta( p, n ) ).value );
  }
  return out;
}

std::vector<sf::Complex> sf::gordeyev_asym_lambda_terms( const GordeyevParams& p, int N )
{
  p.validate();
  checkLambda( p.lambda, "gordeyev_asym_lambda_terms" );
  checkLambdaSector( p.lambda, "gordeyev_asym_lambda_terms" );
  if ( N < 0 )
    raise( ErrorCode::InvalidArgument, "gordeyev_asym_lambda_terms: N must be >= 0" );
  const Frame fr = frameOf( p );
  const Complex lam = canon( p.lambda );
  const Complex prefl = Complex( 0.0, -1.0 ) * p.omega / ( fr.sq * std::sqrt( 2.0 * pi * lam ) );
  std::vector<Complex> out;
  out.reserve( 2 * N + 1 );
  for ( int n = -N; n <= N; ++n )
    out.push_back( prefl * bracket( n, lam ) * fried_conte( fr.zeta( p, n ) ).value );
  return out;
}

std::vector<sf::Complex> sf::gordeyev_asym_omega_terms( const GordeyevParams& p, int N )
{
  p.validate();
  checkLambda( p.lambda, "gordeyev_asym_omega_terms" );
  if ( N < 0 )
    raise( ErrorCode::InvalidArgument, "gordeyev_asym_omega_terms: N must be >= 0" );
  const Frame fr = frameOf( p );
  const std::vector<Complex> b = bessel_i_scaled_sequence( N, p.lambda );
  std::vector<Complex> out;
  out.reserve( 2 * N + 1 );
  for ( int n = -N; n <= N; ++n )
    out.push_back( fr.pref * b[std::abs( n )] * zAsym( p, fr, n, 0.0 ).value );
  return out;
}

sf::EvalResult sf::gordeyev( const GordeyevParams& p, GordeyevRegime regime,
                             const SumTruncation& tr, const MethodPolicy& pol )
{
  switch ( regime ) {
  case GordeyevRegime::Series:
    return gordeyev_series( p, tr, pol );
  case GordeyevRegime::AsymLambda:
    return gordeyev_asym_lambda( p, tr );
  case GordeyevRegime::AsymOmega:
    return gordeyev_asym_omega( p, tr, pol.crossover_abs2 );
  case GordeyevRegime::AsymBoth:
    return gordeyev_asym_both( p, tr, pol.crossover_abs2 );
  case GordeyevRegime::Quadrature:
    pol.validate();
    return quad_gordeyev( p, pol.quad );
  }
  raise( ErrorCode::InvalidArgument, "gordeyev: unknown regime" );
}
