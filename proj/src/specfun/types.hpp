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

#ifndef SPECFUN_TYPES_HPP
#define SPECFUN_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specfun {

  using Complex = std::complex<double>;

  inline constexpr double pi = 3.141592653589793238462643383279502884;
  inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;

  enum class ErrorCode {
    InvalidArgument = 1,
    Pole,
    Domain,
    NoConvergence,
    Overflow,
    Degenerate,
    CrossoverViolation,
    ToleranceNotMet
  };

  class Error : public std::runtime_error {
  public:
    Error( ErrorCode c, const std::string& msg ) : std::runtime_error(msg), m_code(c) {}
    ErrorCode code() const noexcept { return m_code; }
  private:
    ErrorCode m_code;
  };

  enum class Method { Series, Asymptotic, PaperAsymptotic, Quadrature };

  const char * methodTag( Method ) noexcept;

  //Bits of EvalResult::flags
  namespace flags {
    inline constexpr std::uint32_t overflow = 0x1u;          //value is infinite, e^{-z^2} not representable
    inline constexpr std::uint32_t sector_boundary = 0x2u;   //argument sits on a sector boundary
    inline constexpr std::uint32_t below_crossover = 0x4u;   //asymptotic form used below its crossover radius
    inline constexpr std::uint32_t extended_precision = 0x8u;//series re-summed in double-double
  }

  struct EvalResult {
    Complex value = 0.0;
    Method method = Method::Series;
    double est_error = 0.0;//absolute
    int terms_used = 0;
    std::uint32_t flags = 0;
  };

  struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 500;
    int consecutive_small = 2;
    void validate() const;
  };

  struct TruncationOrders {
    int R = 3;
    int S = 3;
    void validate() const;
  };

  struct QuadratureConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_depth = 50;
    double tail_cut = 1e-16;
    int max_intervals = 20000;
    void validate() const;
  };

  struct FresnelPair {
    Complex c = 0.0;
    Complex s = 0.0;
    Method method = Method::Series;
    double est_error_c = 0.0;
    double est_error_s = 0.0;
    std::uint32_t flags = 0;
  };

  //Parameters of the Gordeyev integral, Re(nu) > 0.
  struct GordeyevParams {
    Complex omega = 0.0;
    Complex lambda = 0.0;
    Complex nu = 1.0;
    void validate() const;
  };

  [[noreturn]] void raise( ErrorCode, const std::string& );

}

#endif
