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

#include "specfun/specfun.h"
#include "specfun/dawson_family.hpp"
#include "specfun/fresnel.hpp"
#include "specfun/gordeyev.hpp"
#include "specfun/quad_oracle.hpp"
#include <algorithm>
#include <cmath>
#include <cstring>
#include <new>
#include <string>

namespace sf = specfun;

struct specfun_context {
  sf::MethodPolicy policy;
  sf::SumTruncation truncation;
  specfun_method method = SPECFUN_METHOD_AUTO;
  specfun_gordeyev_regime regime = SPECFUN_GORDEYEV_SERIES;
};

namespace {

  thread_local std::string last_error;

  const char * const function_names[] = { "daw", "faddeeva", "fried-conte", "jackson", "sitenko",
                                          "jackson-real", "fresnel-c", "fresnel-s", "fresnel", "gordeyev" };
  const char * const method_names[] = { "auto", "series", "asymptotic", "paper-asymptotic", "quadrature" };
  const char * const regime_names[] = { "series", "asym-lambda", "asym-omega", "asym-both", "quadrature" };

  specfun_status fail( specfun_status s, const char * msg )
  {
    last_error = msg;
    return s;
  }

  //Runs f, translating exceptions into status codes.
  template<class F>
  specfun_status guarded( F&& f )
  {
    try {
      f();
      last_error.clear();
      return SPECFUN_OK;
    } catch ( const sf::Error& e ) {
      return fail( static_cast<specfun_status>( e.code() ), e.what() );
    } catch ( const std::bad_alloc& ) {
      return fail( SPECFUN_ERR_INTERNAL, "out of memory" );
    } catch ( const std::exception& e ) {
      return fail( SPECFUN_ERR_INTERNAL, e.what() );
    } catch ( ... ) {
      return fail( SPECFUN_ERR_INTERNAL, "unknown error" );
    }
  }

  sf::Complex toCpp( specfun_complex z ) { return { z.re, z.im }; }

  specfun_method toC( sf::Method m )
  {
    switch ( m ) {
    case sf::Method::Series: return SPECFUN_METHOD_SERIES;
    case sf::Method::Asymptotic: return SPECFUN_METHOD_ASYMPTOTIC;
    case sf::Method::PaperAsymptotic: return SPECFUN_METHOD_PAPER_ASYMPTOTIC;
    case sf::Method::Quadrature: return SPECFUN_METHOD_QUADRATURE;
    }
    return SPECFUN_METHOD_AUTO;
  }

  sf::Mode toMode( specfun_method m )
  {
    switch ( m ) {
    case SPECFUN_METHOD_SERIES: return sf::Mode::ForceSeries;
    case SPECFUN_METHOD_ASYMPTOTIC: return sf::Mode::ForceAsymptotic;
    case SPECFUN_METHOD_PAPER_ASYMPTOTIC: return sf::Mode::ForcePaperAsymptotic;
    case SPECFUN_METHOD_QUADRATURE: return sf::Mode::ForceQuadrature;
    case SPECFUN_METHOD_AUTO: break;
    }
    return sf::Mode::Auto;
  }

  void store( const sf::EvalResult& r, specfun_result * out )
  {
    out->value.re = r.value.real();
    out->value.im = r.value.imag();
    out->method = toC( r.method );
    out->est_error = r.est_error;
    out->terms_used = r.terms_used;
    out->flags = r.flags;
  }

  sf::EvalResult fromPair( const sf::FresnelPair& p, specfun_function f )
  {
    sf::EvalResult r;
    r.method = p.method;
    r.flags = p.flags;
    if ( f == SPECFUN_FN_FRESNEL_C ) {
      r.value = p.c;
      r.est_error = p.est_error_c;
    } else if ( f == SPECFUN_FN_FRESNEL_S ) {
      r.value = p.s;
      r.est_error = p.est_error_s;
    } else {
      r.value = p.c + sf::Complex( 0.0, 1.0 ) * p.s;
      r.est_error = p.est_error_c + p.est_error_s;
    }
    return r;
  }

  double realArgument( sf::Complex z, const char * who )
  {
    if ( z.imag() != 0.0 )
      sf::raise( sf::ErrorCode::InvalidArgument, std::string( who ) + " takes a real argument" );
    return z.real();
  }

  sf::EvalResult evaluate( const specfun_context& c, specfun_function f, sf::Complex z )
  {
    sf::MethodPolicy pol = c.policy;
    pol.mode = toMode( c.method );
    switch ( f ) {
    case SPECFUN_FN_DAW: return sf::dawson( z, pol );
    case SPECFUN_FN_FADDEEVA: return sf::faddeeva( z, pol );
    case SPECFUN_FN_FRIED_CONTE: return sf::fried_conte( z, pol );
    case SPECFUN_FN_JACKSON: return sf::jackson( z, pol );
    case SPECFUN_FN_SITENKO: return sf::sitenko( realArgument( z, "sitenko" ), pol );
    case SPECFUN_FN_JACKSON_REAL: return sf::jackson_real( realArgument( z, "jackson-real" ), pol );
    case SPECFUN_FN_FRESNEL:
      if ( pol.mode == sf::Mode::ForceSeries
           || ( pol.mode == sf::Mode::Auto && sf::pi * std::norm( z ) < pol.fresnel_crossover_xi ) ) {
        pol.validate();
        return sf::fresnel_complex( z, pol.series );
      }
      return fromPair( sf::fresnel( z, pol ), f );
    case SPECFUN_FN_FRESNEL_C:
    case SPECFUN_FN_FRESNEL_S:
      return fromPair( sf::fresnel( z, pol ), f );
    case SPECFUN_FN_GORDEYEV:
      sf::raise( sf::ErrorCode::InvalidArgument, "gordeyev takes (omega, lambda, nu); use specfun_eval_gordeyev" );
    }
    sf::raise( sf::ErrorCode::InvalidArgument, "unknown function" );
  }

  sf::EvalResult oracle( const specfun_context& c, specfun_function f, sf::Complex z )
  {
    const sf::QuadratureConfig& q = c.policy.quad;
    switch ( f ) {
    case SPECFUN_FN_DAW: return sf::dawson_oracle( z, q );
    case SPECFUN_FN_FADDEEVA: return sf::faddeeva_oracle( z, q );
    case SPECFUN_FN_FRIED_CONTE: return sf::fried_conte_oracle( z, q );
    case SPECFUN_FN_JACKSON: return sf::jackson_oracle( z, q );
    case SPECFUN_FN_SITENKO: {
      const double x = realArgument( z, "sitenko" );
      sf::EvalResult r = sf::dawson_oracle( x, q );
      r.value = 2.0 * x * r.value.real();
      r.est_error *= 2.0 * std::abs( x );
      return r;
    }
    case SPECFUN_FN_JACKSON_REAL: {
      const double x = realArgument( z, "jackson-real" );
      sf::EvalResult r = sf::jackson_oracle( x, q );
      r.value = sf::Complex( r.value.real(), std::sqrt( sf::pi ) * x * std::exp( -x * x ) );
      return r;
    }
    case SPECFUN_FN_FRESNEL:
    case SPECFUN_FN_FRESNEL_C:
    case SPECFUN_FN_FRESNEL_S: {
      sf::FresnelPair p = sf::quad_fresnel( z, q );
      if ( z.imag() == 0.0 ) {
        p.c = p.c.real();
        p.s = p.s.real();
      }
      return fromPair( p, f );
    }
    case SPECFUN_FN_GORDEYEV:
      sf::raise( sf::ErrorCode::InvalidArgument, "gordeyev takes (omega, lambda, nu); use specfun_oracle_gordeyev" );
    }
    sf::raise( sf::ErrorCode::InvalidArgument, "unknown function" );
  }

  sf::GordeyevRegime toRegime( specfun_gordeyev_regime r )
  {
    switch ( r ) {
    case SPECFUN_GORDEYEV_ASYM_LAMBDA: return sf::GordeyevRegime::AsymLambda;
    case SPECFUN_GORDEYEV_ASYM_OMEGA: return sf::GordeyevRegime::AsymOmega;
    case SPECFUN_GORDEYEV_ASYM_BOTH: return sf::GordeyevRegime::AsymBoth;
    case SPECFUN_GORDEYEV_QUADRATURE: return sf::GordeyevRegime::Quadrature;
    case SPECFUN_GORDEYEV_SERIES: break;
    }
    return sf::GordeyevRegime::Series;
  }

  const specfun_context& orDefault( const specfun_context * ctx )
  {
    static const specfun_context defaults{};
    return ctx ? *ctx : defaults;
  }

  template<class E, std::size_t N>
  specfun_status lookup( const char * name, const char * const ( &names )[N], E * out, const char * what )
  {
    if ( !name || !out )
      return fail( SPECFUN_ERR_NULL_POINTER, "null pointer" );
    for ( std::size_t i = 0; i < N; ++i )
      if ( std::strcmp( name, names[i] ) == 0 ) {
        *out = static_cast<E>( i );
        last_error.clear();
        return SPECFUN_OK;
      }
    return fail( SPECFUN_ERR_INVALID_ARGUMENT, ( std::string( "unknown " ) + what + " '" + name + "'" ).c_str() );
  }

}

extern "C" {

SPECFUN_API const char * specfun_version( void ) { return "1.0.0"; }

SPECFUN_API specfun_status specfun_context_create( specfun_context ** out )
{
  if ( !out )
    return fail( SPECFUN_ERR_NULL_POINTER, "null pointer" );
  *out = new ( std::nothrow ) specfun_context();
  if ( !*out )
    return fail( SPECFUN_ERR_INTERNAL, "out of memory" );
  return SPECFUN_OK;
}

SPECFUN_API void specfun_context_destroy( specfun_context * ctx ) { delete ctx; }

SPECFUN_API specfun_status specfun_set_method( specfun_context * ctx, specfun_method m )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  if ( m < SPECFUN_METHOD_AUTO || m > SPECFUN_METHOD_QUADRATURE )
    return fail( SPECFUN_ERR_INVALID_ARGUMENT, "unknown method" );
  ctx->method = m;
  return SPECFUN_OK;
}

SPECFUN_API specfun_status specfun_set_tolerance( specfun_context * ctx, double tol )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  if ( !( tol > 0.0 ) || !std::isfinite( tol ) )
    return fail( SPECFUN_ERR_INVALID_ARGUMENT, "tolerance must be positive" );
  ctx->policy.series.rel_tol = tol;
  ctx->truncation.tail_tol = tol;
  return SPECFUN_OK;
}

SPECFUN_API specfun_status specfun_set_orders( specfun_context * ctx, int R, int S )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  return guarded( [&] {
    sf::TruncationOrders o{ R, S };
    o.validate();
    ctx->policy.orders = o;
  } );
}

SPECFUN_API specfun_status specfun_clear_orders( specfun_context * ctx )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  ctx->policy.orders.reset();
  return SPECFUN_OK;
}

SPECFUN_API specfun_status specfun_set_crossover( specfun_context * ctx, double xi_abs )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  if ( !( xi_abs > 0.0 ) || !std::isfinite( xi_abs ) )
    return fail( SPECFUN_ERR_INVALID_ARGUMENT, "crossover must be positive" );
  ctx->policy.crossover_abs2 = xi_abs;
  ctx->policy.boundary_series_abs2 = std::max( ctx->policy.boundary_series_abs2, xi_abs );
  ctx->policy.fresnel_crossover_xi = xi_abs;
  return SPECFUN_OK;
}

SPECFUN_API specfun_status specfun_set_gordeyev_regime( specfun_context * ctx, specfun_gordeyev_regime r )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  if ( r < SPECFUN_GORDEYEV_SERIES || r > SPECFUN_GORDEYEV_QUADRATURE )
    return fail( SPECFUN_ERR_INVALID_ARGUMENT, "unknown regime" );
  ctx->regime = r;
  return SPECFUN_OK;
}

SPECFUN_API specfun_status specfun_set_sum_truncation( specfun_context * ctx, int n_max, double tail_tol )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  return guarded( [&] {
    sf::SumTruncation t{ n_max, tail_tol };
    t.validate();
    ctx->truncation = t;
  } );
}

SPECFUN_API specfun_status specfun_set_oracle_tolerance( specfun_context * ctx, double abs_tol, double rel_tol )
{
  if ( !ctx )
    return fail( SPECFUN_ERR_NULL_POINTER, "null context" );
  return guarded( [&] {
    sf::QuadratureConfig q = ctx->policy.quad;
    q.abs_tol = abs_tol;
    q.rel_tol = rel_tol;
    q.validate();
    ctx->policy.quad = q;
  } );
}

SPECFUN_API specfun_status specfun_eval( const specfun_context * ctx, specfun_function f,
                                         specfun_complex z, specfun_result * out )
{
  if ( !out )
    return fail( SPECFUN_ERR_NULL_POINTER, "null result pointer" );
  return guarded( [&] { store( evaluate( orDefault( ctx ), f, toCpp( z ) ), out ); } );
}

SPECFUN_API specfun_status specfun_eval_gordeyev( const specfun_context * ctx, specfun_complex omega,
                                                  specfun_complex lambda, specfun_complex nu,
                                                  specfun_result * out )
{
  if ( !out )
    return fail( SPECFUN_ERR_NULL_POINTER, "null result pointer" );
  return guarded( [&] {
    const specfun_context& c = orDefault( ctx );
    sf::MethodPolicy pol = c.policy;
    pol.mode = toMode( c.method );
    const sf::GordeyevParams p{ toCpp( omega ), toCpp( lambda ), toCpp( nu ) };
    store( sf::gordeyev( p, toRegime( c.regime ), c.truncation, pol ), out );
  } );
}

SPECFUN_API specfun_status specfun_oracle( const specfun_context * ctx, specfun_function f,
                                           specfun_complex z, specfun_result * out )
{
  if ( !out )
    return fail( SPECFUN_ERR_NULL_POINTER, "null result pointer" );
  return guarded( [&] { store( oracle( orDefault( ctx ), f, toCpp( z ) ), out ); } );
}

SPECFUN_API specfun_status specfun_oracle_gordeyev( const specfun_context * ctx, specfun_complex omega,
                                                    specfun_complex lambda, specfun_complex nu,
                                                    specfun_result * out )
{
  if ( !out )
    return fail( SPECFUN_ERR_NULL_POINTER, "null result pointer" );
  return guarded( [&] {
    const sf::GordeyevParams p{ toCpp( omega ), toCpp( lambda ), toCpp( nu ) };
    store( sf::quad_gordeyev( p, orDefault( ctx ).policy.quad ), out );
  } );
}

SPECFUN_API specfun_status specfun_function_from_name( const char * name, specfun_function * out )
{
  return lookup( name, function_names, out, "function" );
}

SPECFUN_API const char * specfun_function_name( specfun_function f )
{
  const int i = static_cast<int>( f );
  return ( i >= 0 && i < 10 ) ? function_names[i] : "";
}

SPECFUN_API specfun_status specfun_method_from_name( const char * name, specfun_method * out )
{
  return lookup( name, method_names, out, "method" );
}

SPECFUN_API const char * specfun_method_name( specfun_method m )
{
  const int i = static_cast<int>( m );
  return ( i >= 0 && i < 5 ) ? method_names[i] : "";
}

SPECFUN_API specfun_status specfun_gordeyev_regime_from_name( const char * name, specfun_gordeyev_regime * out )
{
  return lookup( name, regime_names, out, "regime" );
}

SPECFUN_API const char * specfun_gordeyev_regime_name( specfun_gordeyev_regime r )
{
  const int i = static_cast<int>( r );
  return ( i >= 0 && i < 5 ) ? regime_names[i] : "";
}

SPECFUN_API const char * specfun_status_string( specfun_status s )
{
  switch ( s ) {
  case SPECFUN_OK: return "ok";
  case SPECFUN_ERR_INVALID_ARGUMENT: return "invalid argument";
  case SPECFUN_ERR_POLE: return "pole";
  case SPECFUN_ERR_DOMAIN: return "domain error";
  case SPECFUN_ERR_NO_CONVERGENCE: return "no convergence";
  case SPECFUN_ERR_OVERFLOW: return "overflow";
  case SPECFUN_ERR_DEGENERATE: return "degenerate";
  case SPECFUN_ERR_CROSSOVER_VIOLATION: return "crossover violation";
  case SPECFUN_ERR_TOLERANCE_NOT_MET: return "tolerance not met";
  case SPECFUN_ERR_NULL_POINTER: return "null pointer";
  case SPECFUN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

SPECFUN_API const char * specfun_last_error( void ) { return last_error.c_str(); }

}
