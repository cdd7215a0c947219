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

#include "specfun/fresnel.hpp"
#include "specfun/hyp_kernel.hpp"
#include "specfun/quad_oracle.hpp"
#include <cmath>
#include <limits>

namespace sf = specfun;

namespace {

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double inf = std::numeric_limits<double>::infinity();

  sf::Complex canon( sf::Complex z ) { return { z.real(), z.imag() + 0.0 }; }

  void checkFinite( sf::Complex z, const char * who )
  {
    if ( !std::isfinite( z.real() ) || !std::isfinite( z.imag() ) )
      sf::raise( sf::ErrorCode::InvalidArgument, std::string( who ) + ": argument must be finite" );
  }

  sf::Complex quarticArg( sf::Complex z )
  {
    const sf::Complex z2 = z * z;
    return -( sf::pi * sf::pi / 4.0 ) * ( z2 * z2 );
  }

  void realify( sf::FresnelPair& r, sf::Complex z )
  {
    if ( z.imag() == 0.0 ) {
      r.c = r.c.real();
      r.s = r.s.real();
    }
  }

  struct Half {
    sf::Complex value;
    double error = 0.0;
    int terms = 0;
    bool overflow = false;
  };

  //z 1F1(1/2;3/2;xi) from the expansion, xi = +-i pi z^2.
  Half halfIntegral( sf::Complex z, sf::Complex xi, const std::optional<sf::TruncationOrders>& ord )
  {
    const sf::KummerAsymptoticTerms kt =
      sf::kummer_asymptotic_terms( 0.5, 1.5, xi, ord, sf::StokesConvention::RealAxis );
    Half h;
    h.terms = kt.terms;
    const double az = std::abs( z );
    if ( xi.real() > 700.0 ) {
      h.overflow = true;
      h.value = sf::Complex( inf, inf );
      h.error = inf;
      return h;
    }
    const sf::Complex e = std::exp( xi );
    h.value = z * ( kt.algebraic + e * kt.exponential );
    h.error = az * ( kt.algebraic_error + std::abs( e ) * kt.exponential_error )
      + eps * std::abs( h.value );
    return h;
  }

}

sf::EvalResult sf::fresnel_c( Complex z, const SeriesControl& ctl )
{
  z = canon( z );
  checkFinite( z, "fresnel_c" );
  EvalResult r;
  if ( z == 0.0 ) {
    ctl.validate();
    r.terms_used = 1;
    return r;
  }
  r = hyp1f2( 0.25, 0.5, 1.25, quarticArg( z ), ctl );
  r.value *= z;
  r.est_error *= std::abs( z );
  if ( z.imag() == 0.0 )
    r.value = r.value.real();
  return r;
}

sf::EvalResult sf::fresnel_s( Complex z, const SeriesControl& ctl )
{
  z = canon( z );
  checkFinite( z, "fresnel_s" );
  EvalResult r;
  if ( z == 0.0 ) {
    ctl.validate();
    r.terms_used = 1;
    return r;
  }
  r = hyp1f2( 0.75, 1.5, 1.75, quarticArg( z ), ctl );
  const Complex pre = ( pi / 3.0 ) * ( z * z * z );
  r.value *= pre;
  r.est_error *= std::abs( pre );
  if ( z.imag() == 0.0 )
    r.value = r.value.real();
  return r;
}

sf::EvalResult sf::fresnel_complex( Complex z, const SeriesControl& ctl )
{
  z = canon( z );
  checkFinite( z, "fresnel_complex" );
  EvalResult r;
  if ( z == 0.0 ) {
    ctl.validate();
    r.terms_used = 1;
    return r;
  }
  r = hyp1f1( 0.5, 1.5, Complex( 0.0, pi ) * ( z * z ), ctl );
  r.value *= z;
  r.est_error *= std::abs( z );
  return r;
}

sf::SectorDecision sf::fresnel_sector( Complex z )
{
  z = canon( z );
  const SectorShape shape{ -0.5 * pi, 0.5 * pi, -pi, -0.5 * pi, pi, false, 2 };
  return first_match_sector( std::arg( z ), shape );
}

sf::FresnelPair sf::fresnel_asymptotic( Complex z )
{
  z = canon( z );
  checkFinite( z, "fresnel_asymptotic" );
  if ( z == 0.0 )
    raise( ErrorCode::Domain, "fresnel_asymptotic: z must be nonzero" );
  const SectorDecision d = fresnel_sector( z );
  const double sg = d.sign == Sign::Plus ? 1.0 : -1.0;
  FresnelPair r;
  r.method = Method::PaperAsymptotic;
  if ( d.boundary )
    r.flags |= flags::sector_boundary;
  if ( std::abs( z ) < 2.0 )
    r.flags |= flags::below_crossover;
  const Complex z2 = z * z;
  const Complex arg = pi * z2;
  if ( std::abs( arg.imag() ) > 700.0 ) {
    r.c = r.s = Complex( inf, inf );
    r.est_error_c = r.est_error_s = inf;
    r.flags |= flags::overflow;
    return r;
  }
  const double c0 = std::sqrt( 2.0 ) / 4.0;
  const Complex c2 = std::sqrt( 2.0 / pi ) / ( 8.0 * z2 );
  const Complex osc = std::sin( arg ) / ( 2.0 * pi * z ) + std::cos( arg ) / ( 4.0 * std::pow( pi, 1.5 ) * z2 * z );
  r.c = sg * ( c0 - c2 ) - osc;
  r.s = sg * ( c0 + c2 ) + osc;
  //First omitted order, scaled by the size of the oscillating factors.
  const double omitted = std::cosh( arg.imag() ) * std::pow( std::abs( z ), -4.0 );
  r.est_error_c = r.est_error_s = omitted;
  realify( r, z );
  return r;
}

sf::FresnelPair sf::fresnel_asymptotic_assembled( Complex z, const std::optional<TruncationOrders>& ord )
{
  z = canon( z );
  checkFinite( z, "fresnel_asymptotic_assembled" );
  if ( z == 0.0 )
    raise( ErrorCode::Domain, "fresnel_asymptotic_assembled: z must be nonzero" );
  if ( ord )
    ord->validate();
  const Complex ipz2 = Complex( 0.0, pi ) * ( z * z );
  const Half ep = halfIntegral( z, canon( ipz2 ), ord );
  const Half em = halfIntegral( z, canon( -ipz2 ), ord );
  FresnelPair r;
  r.method = Method::Asymptotic;
  if ( fresnel_sector( z ).boundary )
    r.flags |= flags::sector_boundary;
  if ( std::abs( ipz2 ) < default_crossover_abs )
    r.flags |= flags::below_crossover;
  if ( ep.overflow || em.overflow ) {
    r.c = r.s = Complex( inf, inf );
    r.est_error_c = r.est_error_s = inf;
    r.flags |= flags::overflow;
    return r;
  }
  r.c = 0.5 * ( ep.value + em.value );
  r.s = Complex( 0.0, -0.5 ) * ( ep.value - em.value );
  r.est_error_c = r.est_error_s = 0.5 * ( ep.error + em.error );
  realify( r, z );
  return r;
}

sf::FresnelPair sf::fresnel( Complex z, const MethodPolicy& pol )
{
  pol.validate();
  z = canon( z );
  checkFinite( z, "fresnel" );
  Mode mode = pol.mode;
  const double axi = pi * std::norm( z );
  if ( mode == Mode::Auto )
    mode = axi < pol.fresnel_crossover_xi ? Mode::ForceSeries : Mode::ForceAsymptotic;
  FresnelPair r;
  switch ( mode ) {
  case Mode::ForceSeries: {
    const EvalResult c = fresnel_c( z, pol.series );
    const EvalResult s = fresnel_s( z, pol.series );
    r.c = c.value;
    r.s = s.value;
    r.method = Method::Series;
    r.est_error_c = c.est_error;
    r.est_error_s = s.est_error;
    r.flags = c.flags | s.flags;
    return r;
  }
  case Mode::ForceAsymptotic:
    r = fresnel_asymptotic_assembled( z, pol.orders );
    if ( axi < pol.fresnel_crossover_xi )
      r.flags |= flags::below_crossover;
    else
      r.flags &= ~flags::below_crossover;
    return r;
  case Mode::ForcePaperAsymptotic:
    return fresnel_asymptotic( z );
  case Mode::ForceQuadrature:
    r = quad_fresnel( z, pol.quad );
    realify( r, z );
    return r;
  case Mode::Auto:
    break;
  }
  raise( ErrorCode::InvalidArgument, "fresnel: unknown mode" );
}
