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
#include "specfun/specfun.h"
#include <cmath>
#include <cstring>

namespace {
  struct Ctx {
    specfun_context * p = nullptr;
    Ctx() { REQUIRE( specfun_context_create(&p) == SPECFUN_OK ); }
    ~Ctx() { specfun_context_destroy(p); }
  };
  double relDiff( specfun_complex a, double re, double im )
  {
    return std::hypot( a.re - re, a.im - im ) / std::hypot( re, im );
  }
}

TEST_CASE("capi defaults")
{
  specfun_result r;
  REQUIRE( specfun_eval(nullptr,SPECFUN_FN_DAW,{1.0,0.0},&r) == SPECFUN_OK );
  CHECK( relDiff(r.value,0.538079506912768419136,0.0) < 1e-14 );
  CHECK( r.method == SPECFUN_METHOD_SERIES );
  REQUIRE( specfun_eval(nullptr,SPECFUN_FN_JACKSON,{0.0,0.0},&r) == SPECFUN_OK );
  CHECK( r.value.re == 1.0 );
  CHECK( r.value.im == 0.0 );
  REQUIRE( specfun_eval(nullptr,SPECFUN_FN_FRESNEL,{1.0,0.0},&r) == SPECFUN_OK );
  CHECK( relDiff(r.value,0.373982833415732,0.504854594113687) < 1e-13 );
  REQUIRE( specfun_eval(nullptr,SPECFUN_FN_SITENKO,{1.0,0.0},&r) == SPECFUN_OK );
  CHECK( relDiff(r.value,1.07615901382553683827,0.0) < 1e-14 );
  CHECK( std::strlen(specfun_version()) > 0 );
}

TEST_CASE("capi context settings")
{
  Ctx c;
  specfun_result r;
  REQUIRE( specfun_set_method(c.p,SPECFUN_METHOD_ASYMPTOTIC) == SPECFUN_OK );
  REQUIRE( specfun_eval(c.p,SPECFUN_FN_DAW,{10.0,0.0},&r) == SPECFUN_OK );
  CHECK( r.method == SPECFUN_METHOD_ASYMPTOTIC );
  CHECK( relDiff(r.value,0.0502538471875985280327,0.0) < 1e-14 );
  REQUIRE( specfun_set_orders(c.p,1,1) == SPECFUN_OK );
  specfun_result r1;
  REQUIRE( specfun_eval(c.p,SPECFUN_FN_DAW,{10.0,0.0},&r1) == SPECFUN_OK );
  CHECK( relDiff(r1.value,0.0502538471875985280327,0.0) > 1e-4 );
  REQUIRE( specfun_clear_orders(c.p) == SPECFUN_OK );
  CHECK( specfun_set_orders(c.p,0,3) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( specfun_set_tolerance(c.p,-1.0) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( std::strlen(specfun_last_error()) > 0 );
  REQUIRE( specfun_set_method(c.p,SPECFUN_METHOD_QUADRATURE) == SPECFUN_OK );
  REQUIRE( specfun_eval(c.p,SPECFUN_FN_FADDEEVA,{0.0,1.0},&r) == SPECFUN_OK );
  CHECK( r.method == SPECFUN_METHOD_QUADRATURE );
  CHECK( relDiff(r.value,0.427583576155807004411,0.0) < 1e-12 );
}

TEST_CASE("capi gordeyev")
{
  Ctx c;
  specfun_result r, o;
  REQUIRE( specfun_eval_gordeyev(c.p,{1.3,0.2},{0.5,0.0},{0.2,0.0},&r) == SPECFUN_OK );
  CHECK( relDiff(r.value,0.410916603592323770645,1.01978528020532515058) < 1e-12 );
  REQUIRE( specfun_oracle_gordeyev(c.p,{1.3,0.2},{0.5,0.0},{0.2,0.0},&o) == SPECFUN_OK );
  CHECK( relDiff(o.value,r.value.re,r.value.im) < 1e-10 );
  REQUIRE( specfun_set_gordeyev_regime(c.p,SPECFUN_GORDEYEV_ASYM_OMEGA) == SPECFUN_OK );
  CHECK( specfun_eval_gordeyev(c.p,{3.0,0.0},{0.5,0.0},{0.1,0.0},&r) == SPECFUN_ERR_CROSSOVER_VIOLATION );
  CHECK( specfun_eval_gordeyev(c.p,{1.0,0.0},{0.5,0.0},{-0.1,0.0},&r) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( specfun_eval(c.p,SPECFUN_FN_GORDEYEV,{1.0,0.0},&r) == SPECFUN_ERR_INVALID_ARGUMENT );
}

TEST_CASE("capi errors")
{
  specfun_result r;
  CHECK( specfun_eval(nullptr,SPECFUN_FN_DAW,{1.0,0.0},nullptr) == SPECFUN_ERR_NULL_POINTER );
  CHECK( specfun_context_create(nullptr) == SPECFUN_ERR_NULL_POINTER );
  CHECK( specfun_eval(nullptr,SPECFUN_FN_DAW,{NAN,0.0},&r) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( specfun_eval(nullptr,SPECFUN_FN_SITENKO,{1.0,0.5},&r) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( specfun_eval(nullptr,static_cast<specfun_function>(99),{1.0,0.0},&r) == SPECFUN_ERR_INVALID_ARGUMENT );
  CHECK( specfun_oracle(nullptr,SPECFUN_FN_DAW,{0.0,30.0},&r) == SPECFUN_ERR_OVERFLOW );
  CHECK( std::strcmp(specfun_status_string(SPECFUN_OK),"ok") == 0 );
  specfun_context_destroy(nullptr);
}

TEST_CASE("capi names")
{
  const char * names[] = { "daw", "faddeeva", "fried-conte", "jackson", "sitenko", "jackson-real",
                           "fresnel-c", "fresnel-s", "fresnel", "gordeyev" };
  for ( const char * n : names ) {
    specfun_function f;
    REQUIRE( specfun_function_from_name(n,&f) == SPECFUN_OK );
    CHECK( std::strcmp(specfun_function_name(f),n) == 0 );
  }
  specfun_function f;
  CHECK( specfun_function_from_name("erf",&f) == SPECFUN_ERR_INVALID_ARGUMENT );
  const char * methods[] = { "auto", "series", "asymptotic", "paper-asymptotic", "quadrature" };
  for ( const char * n : methods ) {
    specfun_method m;
    REQUIRE( specfun_method_from_name(n,&m) == SPECFUN_OK );
    CHECK( std::strcmp(specfun_method_name(m),n) == 0 );
  }
  const char * regimes[] = { "series", "asym-lambda", "asym-omega", "asym-both", "quadrature" };
  for ( const char * n : regimes ) {
    specfun_gordeyev_regime g;
    REQUIRE( specfun_gordeyev_regime_from_name(n,&g) == SPECFUN_OK );
    CHECK( std::strcmp(specfun_gordeyev_regime_name(g),n) == 0 );
  }
}
