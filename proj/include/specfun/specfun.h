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

#ifndef SPECFUN_H
#define SPECFUN_H

/* C interface of the specfun library. All functions are reentrant; a
   context may be shared between threads as long as nobody modifies it
   while evaluations are running. */

#include <stdint.h>

#if defined(_WIN32)
#  ifdef SPECFUN_BUILDING_LIBRARY
#    define SPECFUN_API __declspec(dllexport)
#  else
#    define SPECFUN_API __declspec(dllimport)
#  endif
#else
#  define SPECFUN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct specfun_context specfun_context;

typedef enum {
  SPECFUN_OK = 0,
  SPECFUN_ERR_INVALID_ARGUMENT = 1,
  SPECFUN_ERR_POLE = 2,
  SPECFUN_ERR_DOMAIN = 3,
  SPECFUN_ERR_NO_CONVERGENCE = 4,
  SPECFUN_ERR_OVERFLOW = 5,
  SPECFUN_ERR_DEGENERATE = 6,
  SPECFUN_ERR_CROSSOVER_VIOLATION = 7,
  SPECFUN_ERR_TOLERANCE_NOT_MET = 8,
  SPECFUN_ERR_NULL_POINTER = 9,
  SPECFUN_ERR_INTERNAL = 10
} specfun_status;

typedef enum {
  SPECFUN_FN_DAW = 0,
  SPECFUN_FN_FADDEEVA,
  SPECFUN_FN_FRIED_CONTE,
  SPECFUN_FN_JACKSON,
  SPECFUN_FN_SITENKO,       /* real argument */
  SPECFUN_FN_JACKSON_REAL,  /* real argument */
  SPECFUN_FN_FRESNEL_C,
  SPECFUN_FN_FRESNEL_S,
  SPECFUN_FN_FRESNEL,       /* C + iS */
  SPECFUN_FN_GORDEYEV       /* only through specfun_eval_gordeyev */
} specfun_function;

typedef enum {
  SPECFUN_METHOD_AUTO = 0,
  SPECFUN_METHOD_SERIES,
  SPECFUN_METHOD_ASYMPTOTIC,
  SPECFUN_METHOD_PAPER_ASYMPTOTIC,
  SPECFUN_METHOD_QUADRATURE
} specfun_method;

typedef enum {
  SPECFUN_GORDEYEV_SERIES = 0,
  SPECFUN_GORDEYEV_ASYM_LAMBDA,
  SPECFUN_GORDEYEV_ASYM_OMEGA,
  SPECFUN_GORDEYEV_ASYM_BOTH,
  SPECFUN_GORDEYEV_QUADRATURE
} specfun_gordeyev_regime;

/* Bits of specfun_result.flags */
#define SPECFUN_FLAG_OVERFLOW           0x1u
#define SPECFUN_FLAG_SECTOR_BOUNDARY    0x2u
#define SPECFUN_FLAG_BELOW_CROSSOVER    0x4u
#define SPECFUN_FLAG_EXTENDED_PRECISION 0x8u

typedef struct {
  double re;
  double im;
} specfun_complex;

typedef struct {
  specfun_complex value;
  specfun_method method;  /* route actually taken, never AUTO */
  double est_error;
  int terms_used;
  uint32_t flags;
} specfun_result;

SPECFUN_API const char * specfun_version(void);

SPECFUN_API specfun_status specfun_context_create(specfun_context ** out);
SPECFUN_API void specfun_context_destroy(specfun_context * ctx);

SPECFUN_API specfun_status specfun_set_method(specfun_context * ctx, specfun_method m);
/* Relative tolerance of the series and of the Gordeyev tail rule. */
SPECFUN_API specfun_status specfun_set_tolerance(specfun_context * ctx, double tol);
/* Fixed truncation orders of the asymptotic expansions (default: optimal). */
SPECFUN_API specfun_status specfun_set_orders(specfun_context * ctx, int R, int S);
SPECFUN_API specfun_status specfun_clear_orders(specfun_context * ctx);
/* Switch-over point in |xi|, the modulus of the expansion variable
   (|z|^2 for the Dawson family, pi|z|^2 for Fresnel, |zeta_n|^2 for the
   Gordeyev terms). */
SPECFUN_API specfun_status specfun_set_crossover(specfun_context * ctx, double xi_abs);
SPECFUN_API specfun_status specfun_set_gordeyev_regime(specfun_context * ctx, specfun_gordeyev_regime r);
SPECFUN_API specfun_status specfun_set_sum_truncation(specfun_context * ctx, int n_max, double tail_tol);
SPECFUN_API specfun_status specfun_set_oracle_tolerance(specfun_context * ctx, double abs_tol, double rel_tol);

/* ctx may be NULL for defaults. */
SPECFUN_API specfun_status specfun_eval(const specfun_context * ctx, specfun_function f,
                                        specfun_complex z, specfun_result * out);
SPECFUN_API specfun_status specfun_eval_gordeyev(const specfun_context * ctx, specfun_complex omega,
                                                 specfun_complex lambda, specfun_complex nu,
                                                 specfun_result * out);

/* Adaptive quadrature of the defining integrals. */
SPECFUN_API specfun_status specfun_oracle(const specfun_context * ctx, specfun_function f,
                                          specfun_complex z, specfun_result * out);
SPECFUN_API specfun_status specfun_oracle_gordeyev(const specfun_context * ctx, specfun_complex omega,
                                                   specfun_complex lambda, specfun_complex nu,
                                                   specfun_result * out);

/* Names as used on the command line ("daw", "fried-conte", "series", ...). */
SPECFUN_API specfun_status specfun_function_from_name(const char * name, specfun_function * out);
SPECFUN_API const char * specfun_function_name(specfun_function f);
SPECFUN_API specfun_status specfun_method_from_name(const char * name, specfun_method * out);
SPECFUN_API const char * specfun_method_name(specfun_method m);
SPECFUN_API specfun_status specfun_gordeyev_regime_from_name(const char * name, specfun_gordeyev_regime * out);
SPECFUN_API const char * specfun_gordeyev_regime_name(specfun_gordeyev_regime r);

SPECFUN_API const char * specfun_status_string(specfun_status s);
/* Message of the last failed call on this thread ("" if none). */
SPECFUN_API const char * specfun_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
