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

#include "specfun/dawson_family.hpp"
#include "specfun/double_double.hpp"
#include "specfun/hyp_kernel.hpp"
#include "specfun/quad_oracle.hpp"
#include <cmath>
#include <limits>

namespace sf = specfun;

namespace {

  enum class Fn { Daw, W, Z, G };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double inf = std::numeric_limits<double>::infinity();
  const sf::Complex two_i_over_sqrt_pi( 0.0, 2.0 / sf::sqrt_pi );
  const sf::Complex i_sqrt_pi( 0.0, sf::sqrt_pi );
  const sf::Complex i_half_sqrt_pi( 0.0, 0.5 * sf::sqrt_pi );
  constexpr double exp_guard = -700.0;

  sf::Complex canon( sf::Complex z ) { return { z.real(), z.imag() + 0.0 }; }

  void checkFinite( sf::Complex z, const char * who )
  {
    if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
      sf::raise( sf::ErrorCode::InvalidArgument, std::string( who ) + ": argument must be finite" );
  }

  sf::EvalResult overflowResult( sf::Method m, std::uint32_t fl )
  {
    sf::EvalResult r;
    r.method = m;
    r.value = sf::Complex( inf, inf );
    r.est_error = inf;
    r.flags = fl | sf::flags::overflow;
    return r;
  }

  //w, Z or G from a dawson value computed by the series or quadrature route.
  sf::EvalResult fromDawson( sf::Complex z, const sf::EvalResult& d, Fn fn )
  {
    if ( fn == Fn::Daw || ( d.flags & sf::flags::overflow ) )
      return d;
    const sf::Complex z2 = z * z;
    if ( z2.real() < exp_guard )
      return overflowResult( d.method, d.flags );
    const sf::Complex E = std::exp( -z2 );
    sf::EvalResult r = d;
    const sf::Complex w = E + two_i_over_sqrt_pi * d.value;
    r.est_error = ( 2.0 / sf::sqrt_pi ) * d.est_error + eps * std::abs( E );
    if ( fn == Fn::W ) {
      r.value = w;
      return r;
    }
    const sf::Complex Z = i_sqrt_pi * w;
    r.est_error *= sf::sqrt_pi;
    if ( fn == Fn::Z ) {
      r.value = Z;
      return r;
    }
    r.value = 1.0 + z * Z;
    r.est_error = r.est_error * std::abs( z ) + eps;
    return r;
  }

  struct Assembled {
    int s = 0;              //multiplier of i sqrt(pi)/2 e^{-z^2} in daw
    sf::Complex A = 0.0;    //algebraic part (1/2z) sum (1/2)_n z^{-2n}
    double A_error = 0.0;
    int terms = 0;
  };

  Assembled assemble( sf::Complex z, const std::optional<sf::TruncationOrders>& ord )
  {
    const sf::KummerAsymptoticTerms kt =
      sf::kummer_asymptotic_terms( 0.5, 1.5, z * z, ord, sf::StokesConvention::RealAxis );
    Assembled a;
    //z times the algebraic piece is s i sqrt(pi)/2 with s in {-1,0,1}.
    const sf::Complex cE = z * kt.algebraic;
    a.s = static_cast<int>( std::lround( cE.imag() / ( 0.5 * sf::sqrt_pi ) ) );
    a.A = z * kt.exponential;
    a.A_error = std::abs( z ) * kt.exponential_error;
    a.terms = kt.terms;
    return a;
  }

  sf::EvalResult asymptoticRoute( sf::Complex z, const std::optional<sf::TruncationOrders>& ord,
                                  Fn fn, std::uint32_t fl )
  {
    if ( z == 0.0 )
      sf::raise( sf::ErrorCode::Domain, "asymptotic route: z must be nonzero" );
    const Assembled a = assemble( z, ord );
    const sf::Complex z2 = z * z;
    const bool needE = ( fn == Fn::Daw ) ? a.s != 0 : a.s != 1;
    if ( needE && z2.real() < exp_guard )
      return overflowResult( sf::Method::Asymptotic, fl );
    const sf::Complex E = needE ? std::exp( -z2 ) : sf::Complex( 0.0 );
    sf::EvalResult r;
    r.method = sf::Method::Asymptotic;
    r.terms_used = a.terms;
    r.flags = fl;
    if ( fn == Fn::Daw ) {
      r.value = a.A;
      if ( a.s != 0 )
        r.value += double( a.s ) * i_half_sqrt_pi * E;
      r.est_error = a.A_error + eps * std::abs( E );
      return r;
    }
    sf::Complex w = two_i_over_sqrt_pi * a.A;
    if ( a.s != 1 )
      w += double( 1 - a.s ) * E;
    double ew = ( 2.0 / sf::sqrt_pi ) * a.A_error + eps * std::abs( E );
    if ( fn == Fn::W ) {
      r.value = w;
      r.est_error = ew;
      return r;
    }
    const sf::Complex Z = i_sqrt_pi * w;
    ew *= sf::sqrt_pi;
    if ( fn == Fn::Z ) {
      r.value = Z;
      r.est_error = ew;
      return r;
    }
    r.value = 1.0 + z * Z;
    r.est_error = ew * std::abs( z ) + eps;
    return r;
  }

  sf::EvalResult paperRoute( sf::Complex z, Fn fn )
  {
    if ( z == 0.0 )
      sf::raise( sf::ErrorCode::Domain, "closed asymptotic form: z must be nonzero" );
    const sf::SectorDecision d = sf::sector_sign_z( z, 2 );
    const bool plus = d.sign == sf::Sign::Plus;
    sf::EvalResult r;
    r.method = sf::Method::PaperAsymptotic;
    r.terms_used = 2;
    if ( d.boundary )
      r.flags |= sf::flags::sector_boundary;
    const sf::Complex z2 = z * z;
    if ( z2.real() < exp_guard )
      return overflowResult( sf::Method::PaperAsymptotic, r.flags );
    const sf::Complex E = std::exp( -z2 );
    const sf::Complex I( 0.0, 1.0 );
    const double sp = sf::sqrt_pi;
    const sf::Complex z3 = z2 * z;
    const double az = std::abs( z );
    //Size of the first omitted order of each form.
    const double omitted_alg = std::pow( az, -5.0 );
    const double omitted_exp = std::abs( E ) * std::pow( az, -4.0 );
    switch ( fn ) {
    case Fn::Daw:
      r.value = ( plus ? 1.0 : -1.0 ) * I * ( 0.5 * sp ) * E * ( 1.0 + sp / ( 2.0 * z2 ) )
        + 1.0 / ( 2.0 * z ) + sp / ( 4.0 * z3 );
      r.est_error = omitted_alg + omitted_exp;
      break;
    case Fn::W:
      r.value = E * ( plus ? sf::Complex( -sp / ( 2.0 * z2 ) ) : 2.0 + sp / ( 2.0 * z2 ) )
        + ( I / sp ) * ( 1.0 / z + sp / ( 2.0 * z3 ) );
      r.est_error = omitted_alg + omitted_exp;
      break;
    case Fn::Z:
      if ( plus )
        r.value = I * E * ( -sf::pi / ( 2.0 * z2 ) ) - 1.0 / ( 2.0 * z ) - sp / ( 4.0 * z3 );
      else
        r.value = I * sp * E * ( 2.0 + sp / ( 2.0 * z2 ) ) - 1.0 / z - sp / ( 2.0 * z3 );
      r.est_error = omitted_alg + omitted_exp;
      break;
    case Fn::G:
      if ( plus )
        r.value = I * E * ( -sf::pi / ( 2.0 * z ) ) - sp / ( 2.0 * z2 );
      else
        r.value = I * sp * E * ( 2.0 * z + sp / ( 2.0 * z ) ) - sp / ( 2.0 * z2 );
      r.est_error = az * omitted_alg + az * omitted_exp;
      break;
    }
    return r;
  }

  sf::EvalResult seriesDawson( sf::Complex z, const sf::SeriesControl& ctl )
  {
    sf::EvalResult r;
    r.method = sf::Method::Series;
    if ( z == 0.0 ) {
      ctl.validate();
      r.terms_used = 1;
      return r;
    }
    const sf::Complex z2 = z * z;
    if ( z2.real() < exp_guard )
      return overflowResult( sf::Method::Series, 0 );
    if ( z2.real() < 0.0 ) {
      //e^{-z^2} 1F1(1/2;3/2;z^2) = 1F1(1;3/2;-z^2), the Kummer-transformed
      //series with the exponential factors cancelled analytically.
      sf::EvalResult f = sf::hyp1f1( 1.0, 1.5, -z2, ctl );
      r = f;
      r.value = z * f.value;
      r.est_error = std::abs( z ) * f.est_error;
      return r;
    }
    sf::EvalResult f = sf::hyp1f1( 0.5, 1.5, z2, ctl );
    const sf::Complex zE = z * std::exp( -z2 );
    r = f;
    r.value = zE * f.value;
    r.est_error = std::abs( zE ) * f.est_error;
    return r;
  }

  //w(z) = sum_n (iz)^n / Gamma(n/2+1), even and odd terms together in
  //double-double. Above the real axis e^{-z^2} and (2i/sqrt(pi)) daw cancel,
  //and this sum keeps the cancellation inside the extended precision.
  sf::EvalResult seriesFaddeevaDD( sf::Complex z, const sf::SeriesControl& ctl )
  {
    using sf::detail::CDD;
    using sf::detail::DD;
    ctl.validate();
    const double x = z.real(), y = z.imag();
    const DD xx = sf::detail::twoProd( x, x ), yy = sf::detail::twoProd( y, y );
    const DD xy = sf::detail::twoProd( x, y );
    const CDD mz2( yy - xx, -( xy + xy ) );//-z^2, exact
    const DD two_over_sqrt_pi( 1.1283791670955126, 1.533545961316588e-17 );
    CDD te( DD( 1.0 ), DD( 0.0 ) );
    CDD to = CDD( DD( -y ), DD( x ) ) * CDD( two_over_sqrt_pi, DD( 0.0 ) );
    CDD s = te + to;
    double abs_sum = sf::detail::magnitude( te ) + sf::detail::magnitude( to );
    int small = 0;
    for ( int m = 0; m < ctl.max_terms; ++m ) {
      te = te * mz2 / CDD( DD( m + 1.0 ), DD( 0.0 ) );
      to = to * mz2 / CDD( DD( m + 1.5 ), DD( 0.0 ) );
      const CDD u = te + to;
      s = s + u;
      const double au = sf::detail::magnitude( te ) + sf::detail::magnitude( to );
      abs_sum += au;
      if ( !std::isfinite( abs_sum ) )
        sf::raise( sf::ErrorCode::Overflow, "faddeeva series: terms overflow double range" );
      if ( double( m ) > std::norm( z ) && au < ctl.rel_tol * sf::detail::magnitude( s ) ) {
        if ( ++small >= ctl.consecutive_small ) {
          sf::EvalResult r;
          r.method = sf::Method::Series;
          r.value = s.toComplex();
          r.est_error = au + 4.0 * std::ldexp( 1.0, -104 ) * abs_sum + 0.5 * eps * std::abs( r.value );
          r.terms_used = 2 * ( m + 2 );
          r.flags = sf::flags::extended_precision;
          return r;
        }
      } else {
        small = 0;
      }
    }
    sf::raise( sf::ErrorCode::NoConvergence, "faddeeva series: stopping rule not met within max_terms="
               + std::to_string( ctl.max_terms ) );
  }

  sf::EvalResult fromFaddeeva( sf::Complex z, sf::EvalResult r, Fn fn )
  {
    if ( fn == Fn::W )
      return r;
    r.value *= i_sqrt_pi;
    r.est_error *= sf::sqrt_pi;
    if ( fn == Fn::G ) {
      r.value = 1.0 + z * r.value;
      r.est_error = std::abs( z ) * r.est_error + eps;
    }
    return r;
  }

  //Above the real axis the daw assembly loses about log10(e^{Re(-z^2)}) digits.
  constexpr double assembly_cancel_limit = 9.0;

  sf::EvalResult evalFamily( sf::Complex z, const sf::MethodPolicy& pol, Fn fn )
  {
    pol.validate();
    z = canon( z );
    checkFinite( z, "dawson family" );
    const double a2 = std::norm( z );
    std::uint32_t fl = 0;
    bool on_line = false;
    if ( z != 0.0 && sf::sector_sign_z( z, 2 ).boundary ) {
      on_line = true;
      fl |= sf::flags::sector_boundary;
    }
    sf::Mode mode = pol.mode;
    if ( mode == sf::Mode::Auto ) {
      const double limit = on_line ? pol.boundary_series_abs2 : pol.crossover_abs2;
      mode = a2 <= limit ? sf::Mode::ForceSeries : sf::Mode::ForceAsymptotic;
    }
    switch ( mode ) {
    case sf::Mode::ForceSeries: {
      if ( fn != Fn::Daw && z.imag() > 0.0 && ( -( z * z ) ).real() > assembly_cancel_limit ) {
        sf::EvalResult w = seriesFaddeevaDD( z, pol.series );
        w.flags |= fl;
        return fromFaddeeva( z, w, fn );
      }
      sf::EvalResult d = seriesDawson( z, pol.series );
      d.flags |= fl;
      return fromDawson( z, d, fn );
    }
    case sf::Mode::ForceQuadrature: {
      if ( fn != Fn::Daw ) {
        if ( z.imag() < 0.0 && ( z * z ).real() < exp_guard )
          return overflowResult( sf::Method::Quadrature, fl );
        sf::EvalResult w = sf::quad_faddeeva( z, pol.quad );
        w.flags |= fl;
        return fromFaddeeva( z, w, fn );
      }
      sf::EvalResult d = sf::quad_dawson( z, pol.quad );
      d.flags |= fl;
      return fromDawson( z, d, fn );
    }
    case sf::Mode::ForceAsymptotic:
      if ( a2 < pol.crossover_abs2 )
        fl |= sf::flags::below_crossover;
      return asymptoticRoute( z, pol.orders, fn, fl );
    case sf::Mode::ForcePaperAsymptotic: {
      sf::EvalResult r = paperRoute( z, fn );
      if ( a2 < pol.crossover_abs2 )
        r.flags |= sf::flags::below_crossover;
      return r;
    }
    case sf::Mode::Auto:
      break;
    }
    sf::raise( sf::ErrorCode::InvalidArgument, "dawson family: unknown mode" );
  }

}

void sf::MethodPolicy::validate() const
{
  if ( !( crossover_abs2 > 0.0 ) || !( boundary_series_abs2 > 0.0 ) || !( fresnel_crossover_xi > 0.0 ) )
    raise( ErrorCode::InvalidArgument, "MethodPolicy: crossover thresholds must be positive" );
  if ( orders )
    orders->validate();
  series.validate();
  quad.validate();
}

sf::EvalResult sf::dawson( Complex z, const MethodPolicy& pol ) { return evalFamily( z, pol, Fn::Daw ); }
sf::EvalResult sf::faddeeva( Complex z, const MethodPolicy& pol ) { return evalFamily( z, pol, Fn::W ); }
sf::EvalResult sf::fried_conte( Complex z, const MethodPolicy& pol ) { return evalFamily( z, pol, Fn::Z ); }
sf::EvalResult sf::jackson( Complex z, const MethodPolicy& pol ) { return evalFamily( z, pol, Fn::G ); }

sf::EvalResult sf::sitenko( double x, const MethodPolicy& pol )
{
  EvalResult d = dawson( x, pol );
  d.value = 2.0 * x * d.value;
  d.est_error *= 2.0 * std::abs( x );
  return d;
}

sf::EvalResult sf::jackson_real( double x, const MethodPolicy& pol )
{
  EvalResult phi = sitenko( x, pol );
  const double e = x * x > 745.0 ? 0.0 : std::exp( -x * x );
  EvalResult r = phi;
  r.value = Complex( 1.0 - phi.value.real(), sqrt_pi * x * e );
  r.est_error = phi.est_error + eps;
  return r;
}

sf::EvalResult sf::dawson_series( Complex z, const SeriesControl& ctl )
{
  z = canon( z );
  checkFinite( z, "dawson_series" );
  return seriesDawson( z, ctl );
}

sf::EvalResult sf::dawson_asymptotic( Complex z, const std::optional<TruncationOrders>& ord )
{
  z = canon( z );
  checkFinite( z, "dawson_asymptotic" );
  std::uint32_t fl = 0;
  if ( z != 0.0 && sector_sign_z( z, 2 ).boundary )
    fl |= flags::sector_boundary;
  if ( std::norm( z ) < default_crossover_abs )
    fl |= flags::below_crossover;
  return asymptoticRoute( z, ord, Fn::Daw, fl );
}

sf::EvalResult sf::dawson_paper_asymptotic( Complex z ) { checkFinite( z, "dawson_paper_asymptotic" ); return paperRoute( canon( z ), Fn::Daw ); }
sf::EvalResult sf::faddeeva_paper_asymptotic( Complex z ) { checkFinite( z, "faddeeva_paper_asymptotic" ); return paperRoute( canon( z ), Fn::W ); }
sf::EvalResult sf::fried_conte_paper_asymptotic( Complex z ) { checkFinite( z, "fried_conte_paper_asymptotic" ); return paperRoute( canon( z ), Fn::Z ); }
sf::EvalResult sf::jackson_paper_asymptotic( Complex z ) { checkFinite( z, "jackson_paper_asymptotic" ); return paperRoute( canon( z ), Fn::G ); }

sf::EvalResult sf::fried_conte_asymptotic_signed( Complex z, int s, const std::optional<TruncationOrders>& ord )
{
  z = canon( z );
  checkFinite( z, "fried_conte_asymptotic_signed" );
  if ( z == 0.0 )
    raise( ErrorCode::Degenerate, "fried_conte_asymptotic_signed: z must be nonzero" );
  if ( s < -1 || s > 1 )
    raise( ErrorCode::InvalidArgument, "fried_conte_asymptotic_signed: s must be -1, 0 or 1" );
  const Assembled a = assemble( z, ord );
  EvalResult r;
  r.method = Method::Asymptotic;
  r.terms_used = a.terms;
  const Complex z2 = z * z;
  sf::Complex w = two_i_over_sqrt_pi * a.A;
  double ew = ( 2.0 / sqrt_pi ) * a.A_error;
  if ( s != 1 ) {
    if ( z2.real() < exp_guard )
      return overflowResult( Method::Asymptotic, 0 );
    const Complex E = std::exp( -z2 );
    w += double( 1 - s ) * E;
    ew += eps * std::abs( E );
  }
  r.value = i_sqrt_pi * w;
  r.est_error = sqrt_pi * ew;
  return r;
}

sf::EvalResult sf::dawson_oracle( Complex z, const QuadratureConfig& cfg )
{
  return quad_dawson( canon( z ), cfg );
}

sf::EvalResult sf::faddeeva_oracle( Complex z, const QuadratureConfig& cfg )
{
  return quad_faddeeva( canon( z ), cfg );
}

sf::EvalResult sf::fried_conte_oracle( Complex z, const QuadratureConfig& cfg )
{
  EvalResult r = quad_faddeeva( canon( z ), cfg );
  r.value *= i_sqrt_pi;
  r.est_error *= sf::sqrt_pi;
  return r;
}

sf::EvalResult sf::jackson_oracle( Complex z, const QuadratureConfig& cfg )
{
  z = canon( z );
  EvalResult r = quad_faddeeva( z, cfg );
  r.value = 1.0 + z * ( i_sqrt_pi * r.value );
  r.est_error = sf::sqrt_pi * std::abs( z ) * r.est_error + eps;
  return r;
}
