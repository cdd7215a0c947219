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

/* The public header must compile as C. */

#include "specfun/specfun.h"
#include <math.h>
#include <stdio.h>

int main(void)
{
  specfun_context * ctx = NULL;
  specfun_result r;
  specfun_complex z = { 2.0, 0.0 };
  if ( specfun_context_create(&ctx) != SPECFUN_OK )
    return 1;
  if ( specfun_eval(ctx, SPECFUN_FN_DAW, z, &r) != SPECFUN_OK ) {
    specfun_context_destroy(ctx);
    return 1;
  }
  specfun_context_destroy(ctx);
  if ( fabs(r.value.re - 0.301340388923791966) > 1e-14 || r.value.im != 0.0 ) {
    printf("daw(2) = %.17g\n", r.value.re);
    return 1;
  }
  return 0;
}
