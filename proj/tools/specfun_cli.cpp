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

// Command line front end: eval, tabulate, accuracy-map, bench.
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 output failure.

#include "specfun/specfun.h"
#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

  constexpr int exit_ok = 0;
  constexpr int exit_usage = 2;
  constexpr int exit_numeric = 3;
  constexpr int exit_io = 4;

  constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();
  constexpr long long max_grid_points = 10000000;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
  struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
  struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool parseDouble( const std::string& s, double& out )
  {
    if ( s.empty() )
      return false;
    const char * b = s.data();
    const char * e = s.data() + s.size();
    if ( *b == '+' )
      ++b;
    auto res = std::from_chars( b, e, out );
    return res.ec == std::errc() && res.ptr == e && std::isfinite( out );
  }

  //"a", "bi", "a+bi", "a-bi" as one token.
  specfun_complex parseComplex( const std::string& s )
  {
    const auto bad = [&] { return UsageError( "malformed complex literal '" + s + "'" ); };
    if ( s.empty() || s.find_first_of( " \t\n" ) != std::string::npos )
      throw bad();
    specfun_complex z{ 0.0, 0.0 };
    if ( s.back() != 'i' ) {
      if ( !parseDouble( s, z.re ) )
        throw bad();
      return z;
    }
    const std::string body = s.substr( 0, s.size() - 1 );
    std::size_t split = std::string::npos;
    for ( std::size_t k = body.size(); k-- > 1; ) {
      if ( ( body[k] == '+' || body[k] == '-' ) && body[k - 1] != 'e' && body[k - 1] != 'E' ) {
        split = k;
        break;
      }
    }
    if ( split == std::string::npos ) {
      if ( !parseDouble( body, z.im ) )
        throw bad();
      return z;
    }
    if ( !parseDouble( body.substr( 0, split ), z.re ) || !parseDouble( body.substr( split ), z.im ) )
      throw bad();
    return z;
  }

  std::pair<double, double> parseRange( const std::string& s, const char * what )
  {
    const auto comma = s.find( ',' );
    double a = 0.0, b = 0.0;
    if ( comma == std::string::npos || !parseDouble( s.substr( 0, comma ), a )
         || !parseDouble( s.substr( comma + 1 ), b ) )
      throw UsageError( std::string( what ) + " expects MIN,MAX, got '" + s + "'" );
    if ( a > b )
      throw UsageError( std::string( what ) + ": MIN must not exceed MAX" );
    return { a, b };
  }

  std::string num( double v )
  {
    char buf[64];
    auto res = std::to_chars( buf, buf + sizeof( buf ), v );
    return std::string( buf, res.ptr );
  }

  struct Record {
    double z_re = 0, z_im = 0;
    double value_re = nan_v, value_im = nan_v;
    std::string method = "error";
    double est_error = nan_v;
    bool with_oracle = false;
    double oracle_re = nan_v, oracle_im = nan_v, rel_diff = nan_v;
    int terms_used = 0;
    std::string message;
  };

  class Writer {
  public:
    Writer( std::ostream& os, bool json, bool oracle ) : m_os( os ), m_json( json ), m_oracle( oracle ) {}
    void header()
    {
      if ( m_json )
        return;
      m_os << "z_re,z_im,value_re,value_im,method,est_error";
      if ( m_oracle )
        m_os << ",oracle_re,oracle_im,rel_diff";
      m_os << '\n';
    }
    void write( const Record& r )
    {
      if ( m_json ) {
        nlohmann::ordered_json j;
        j["z_re"] = r.z_re;
        j["z_im"] = r.z_im;
        j["value_re"] = r.value_re;
        j["value_im"] = r.value_im;
        j["method"] = r.method;
        j["est_error"] = r.est_error;
        if ( m_oracle ) {
          j["oracle_re"] = r.oracle_re;
          j["oracle_im"] = r.oracle_im;
          j["rel_diff"] = r.rel_diff;
        }
        m_os << j.dump() << '\n';
        return;
      }
      m_os << num( r.z_re ) << ',' << num( r.z_im ) << ',' << num( r.value_re ) << ',' << num( r.value_im )
           << ',' << r.method << ',' << num( r.est_error );
      if ( m_oracle )
        m_os << ',' << num( r.oracle_re ) << ',' << num( r.oracle_im ) << ',' << num( r.rel_diff );
      m_os << '\n';
    }
  private:
    std::ostream& m_os;
    bool m_json;
    bool m_oracle;
  };

  struct ContextDeleter {
    void operator()( specfun_context * c ) const { specfun_context_destroy( c ); }
  };
  using ContextPtr = std::unique_ptr<specfun_context, ContextDeleter>;

  void check( specfun_status s )
  {
    if ( s != SPECFUN_OK )
      throw UsageError( specfun_last_error() );
  }

  struct Options {
    std::string function;
    std::vector<std::string> args;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    std::string orders;
    std::optional<double> crossover;
    std::vector<std::string> methods;
    std::string re = "0,0", im = "0,0";
    int n_re = 1, n_im = 1;
    bool polar = false;
    std::string lambda = "0", nu = "1";
    std::string regime = "series";
    std::string summary;
  };

  struct Target {
    specfun_function fn = SPECFUN_FN_DAW;
    bool gordeyev = false;
    specfun_complex lambda{ 0.0, 0.0 }, nu{ 1.0, 0.0 };
  };

  ContextPtr makeContext( const Options& o, const std::string& method )
  {
    specfun_context * raw = nullptr;
    check( specfun_context_create( &raw ) );
    ContextPtr ctx( raw );
    specfun_method m;
    check( specfun_method_from_name( method.c_str(), &m ) );
    check( specfun_set_method( ctx.get(), m ) );
    if ( o.tol )
      check( specfun_set_tolerance( ctx.get(), *o.tol ) );
    if ( o.crossover )
      check( specfun_set_crossover( ctx.get(), *o.crossover ) );
    if ( !o.orders.empty() ) {
      const auto comma = o.orders.find( ',' );
      double R = 0, S = 0;
      if ( comma == std::string::npos || !parseDouble( o.orders.substr( 0, comma ), R )
           || !parseDouble( o.orders.substr( comma + 1 ), S ) || R != std::floor( R ) || S != std::floor( S ) )
        throw UsageError( "--orders expects R,S" );
      check( specfun_set_orders( ctx.get(), static_cast<int>( R ), static_cast<int>( S ) ) );
    }
    specfun_gordeyev_regime g;
    check( specfun_gordeyev_regime_from_name( o.regime.c_str(), &g ) );
    check( specfun_set_gordeyev_regime( ctx.get(), g ) );
    return ctx;
  }

  Target makeTarget( const Options& o )
  {
    Target t;
    check( specfun_function_from_name( o.function.c_str(), &t.fn ) );
    t.gordeyev = t.fn == SPECFUN_FN_GORDEYEV;
    t.lambda = parseComplex( o.lambda );
    t.nu = parseComplex( o.nu );
    return t;
  }

  double relDiff( specfun_complex v, specfun_complex o )
  {
    const double d = std::hypot( v.re - o.re, v.im - o.im );
    const double m = std::hypot( o.re, o.im );
    return m > 0.0 ? d / m : d;
  }

  Record evalRecord( const specfun_context * ctx, const Target& t, specfun_complex z, bool with_oracle )
  {
    Record r;
    r.z_re = z.re;
    r.z_im = z.im;
    r.with_oracle = with_oracle;
    specfun_result res;
    const specfun_status s = t.gordeyev ? specfun_eval_gordeyev( ctx, z, t.lambda, t.nu, &res )
                                        : specfun_eval( ctx, t.fn, z, &res );
    if ( s != SPECFUN_OK ) {
      r.message = specfun_last_error();
      return r;
    }
    r.terms_used = res.terms_used;
    if ( with_oracle ) {
      specfun_result orc;
      const specfun_status so = t.gordeyev ? specfun_oracle_gordeyev( ctx, z, t.lambda, t.nu, &orc )
                                           : specfun_oracle( ctx, t.fn, z, &orc );
      if ( so != SPECFUN_OK ) {
        r.message = std::string( "oracle: " ) + specfun_last_error();
        return r;
      }
      r.oracle_re = orc.value.re;
      r.oracle_im = orc.value.im;
      r.rel_diff = relDiff( res.value, orc.value );
    }
    r.value_re = res.value.re;
    r.value_im = res.value.im;
    r.method = specfun_method_name( res.method );
    r.est_error = res.est_error;
    return r;
  }

  std::vector<specfun_complex> gridPoints( const Options& o )
  {
    const auto re = parseRange( o.re, "--re" );
    const auto im = parseRange( o.im, "--im" );
    if ( o.n_re < 1 || o.n_im < 1 )
      throw UsageError( "--n-re and --n-im must be positive" );
    if ( ( re.first == re.second && o.n_re != 1 ) || ( im.first == im.second && o.n_im != 1 ) )
      throw UsageError( "a degenerate range needs exactly one point" );
    if ( static_cast<long long>( o.n_re ) * o.n_im > max_grid_points )
      throw UsageError( "grid exceeds 10^7 points" );
    auto at = []( std::pair<double, double> r, int n, int k ) {
      return n == 1 ? r.first : r.first + ( r.second - r.first ) * double( k ) / double( n - 1 );
    };
    std::vector<specfun_complex> pts;
    pts.reserve( static_cast<std::size_t>( o.n_re ) * o.n_im );
    for ( int j = 0; j < o.n_im; ++j ) {
      for ( int i = 0; i < o.n_re; ++i ) {
        const double a = at( re, o.n_re, i ), b = at( im, o.n_im, j );
        if ( o.polar )
          pts.push_back( { a * std::cos( b ), a * std::sin( b ) } );
        else
          pts.push_back( { a, b } );
      }
    }
    return pts;
  }

  unsigned workerCount()
  {
    const char * env = std::getenv( "SPECFUN_THREADS" );
    if ( env ) {
      double v = 0;
      if ( !parseDouble( env, v ) || v < 1 || v != std::floor( v ) )
        throw UsageError( "SPECFUN_THREADS must be a positive integer" );
      return static_cast<unsigned>( std::min( v, 1024.0 ) );
    }
    return std::max( 1u, std::thread::hardware_concurrency() );
  }

  //Fills out[k] = f(k); the work is split into fixed chunks, so the result
  //does not depend on the worker count.
  template<class F>
  void parallelFill( std::vector<Record>& out, F f )
  {
    const std::size_t n = out.size();
    const unsigned nw = std::min<std::size_t>( workerCount(), std::max<std::size_t>( 1, n / 64 ) );
    if ( nw <= 1 ) {
      for ( std::size_t k = 0; k < n; ++k )
        out[k] = f( k );
      return;
    }
    std::atomic<std::size_t> next{ 0 };
    constexpr std::size_t chunk = 64;
    std::vector<std::thread> pool;
    for ( unsigned w = 0; w < nw; ++w ) {
      pool.emplace_back( [&] {
        for ( ;; ) {
          const std::size_t b = next.fetch_add( chunk );
          if ( b >= n )
            return;
          for ( std::size_t k = b; k < std::min( n, b + chunk ); ++k )
            out[k] = f( k );
        }
      } );
    }
    for ( auto& t : pool )
      t.join();
  }

  class Output {
  public:
    explicit Output( const std::string& path )
    {
      if ( !path.empty() ) {
        m_file.open( path, std::ios::out | std::ios::trunc );
        if ( !m_file )
          throw IoError( "cannot open '" + path + "' for writing" );
      }
    }
    std::ostream& stream() { return m_file.is_open() ? static_cast<std::ostream&>( m_file ) : std::cout; }
    void finish()
    {
      stream().flush();
      if ( !stream() )
        throw IoError( "write failed" );
    }
  private:
    std::ofstream m_file;
  };

  std::string singleMethod( const Options& o )
  {
    if ( o.methods.size() > 1 )
      throw UsageError( "--method takes a single value here" );
    return o.methods.empty() ? "auto" : o.methods.front();
  }

  int cmdEval( const Options& o )
  {
    const Target t = makeTarget( o );
    if ( o.args.empty() )
      throw UsageError( "eval needs an argument" );
    Options oo = o;
    if ( t.gordeyev && o.args.size() == 3 ) {
      oo.lambda = o.args[1];
      oo.nu = o.args[2];
    } else if ( o.args.size() != 1 ) {
      throw UsageError( t.gordeyev ? "gordeyev takes OMEGA [LAMBDA NU]" : "eval takes one argument" );
    }
    const Target tt = makeTarget( oo );
    const specfun_complex z = parseComplex( o.args[0] );
    ContextPtr ctx = makeContext( oo, singleMethod( oo ) );
    const Record r = evalRecord( ctx.get(), tt, z, false );
    if ( r.method == "error" ) {
      std::cerr << "specfun: " << r.message << '\n';
      return exit_numeric;
    }
    Output out( o.out );
    Writer w( out.stream(), o.format == "json", false );
    w.header();
    w.write( r );
    out.finish();
    return exit_ok;
  }

  int cmdTabulate( const Options& o, bool with_oracle )
  {
    const Target t = makeTarget( o );
    ContextPtr ctx = makeContext( o, singleMethod( o ) );
    const std::vector<specfun_complex> pts = gridPoints( o );
    std::vector<Record> recs( pts.size() );
    const specfun_context * c = ctx.get();
    parallelFill( recs, [&]( std::size_t k ) { return evalRecord( c, t, pts[k], with_oracle ); } );
    Output out( o.out );
    Writer w( out.stream(), o.format == "json", with_oracle );
    w.header();
    bool failed = false;
    std::size_t errors = 0, worst = 0;
    double max_rel = 0.0;
    for ( std::size_t k = 0; k < recs.size(); ++k ) {
      w.write( recs[k] );
      if ( recs[k].method == "error" ) {
        failed = true;
        ++errors;
        std::cerr << "specfun: (" << num( recs[k].z_re ) << ',' << num( recs[k].z_im ) << "): "
                  << recs[k].message << '\n';
      } else if ( with_oracle && recs[k].rel_diff > max_rel ) {
        max_rel = recs[k].rel_diff;
        worst = k;
      }
    }
    out.finish();
    if ( with_oracle && !o.summary.empty() ) {
      nlohmann::ordered_json j;
      j["function"] = o.function;
      j["method"] = singleMethod( o );
      j["points"] = recs.size();
      j["errors"] = errors;
      j["max_rel_diff"] = max_rel;
      if ( recs.size() > errors ) {
        j["max_rel_diff_z_re"] = recs[worst].z_re;
        j["max_rel_diff_z_im"] = recs[worst].z_im;
      }
      std::ofstream sf( o.summary, std::ios::out | std::ios::trunc );
      sf << j.dump( 2 ) << '\n';
      sf.flush();
      if ( !sf )
        throw IoError( "cannot write '" + o.summary + "'" );
    }
    //accuracy maps record per-point failures as data
    return ( failed && !with_oracle ) ? exit_numeric : exit_ok;
  }

  int cmdBench( const Options& o )
  {
    const Target t = makeTarget( o );
    const std::vector<specfun_complex> pts = gridPoints( o );
    std::vector<std::string> methods = o.methods.empty() ? std::vector<std::string>{ "auto" } : o.methods;
    Output out( o.out );
    std::ostream& os = out.stream();
    const bool json = o.format == "json";
    if ( !json )
      os << "method,route,points,ns_per_point,mean_terms_used,min_terms_used,max_terms_used\n";
    for ( const auto& m : methods ) {
      ContextPtr ctx = makeContext( o, m );
      struct Stat {
        std::size_t n = 0;
        double terms = 0.0, ns = 0.0;
        int tmin = std::numeric_limits<int>::max(), tmax = 0;
      };
      std::map<std::string, Stat> stats;
      for ( const auto& z : pts ) {
        const auto t0 = std::chrono::steady_clock::now();
        const Record r = evalRecord( ctx.get(), t, z, false );
        const auto t1 = std::chrono::steady_clock::now();
        Stat& s = stats[r.method];
        ++s.n;
        s.ns += std::chrono::duration<double, std::nano>( t1 - t0 ).count();
        s.terms += r.terms_used;
        s.tmin = std::min( s.tmin, r.terms_used );
        s.tmax = std::max( s.tmax, r.terms_used );
      }
      for ( const auto& [route, s] : stats ) {
        const double nsp = s.ns / double( s.n );
        const double mt = s.terms / double( s.n );
        if ( json ) {
          nlohmann::ordered_json j;
          j["method"] = m;
          j["route"] = route;
          j["points"] = s.n;
          j["ns_per_point"] = nsp;
          j["mean_terms_used"] = mt;
          j["min_terms_used"] = s.tmin;
          j["max_terms_used"] = s.tmax;
          os << j.dump() << '\n';
        } else {
          os << m << ',' << route << ',' << s.n << ',' << num( nsp ) << ',' << num( mt ) << ','
             << s.tmin << ',' << s.tmax << '\n';
        }
      }
    }
    out.finish();
    return exit_ok;
  }

  void addCommon( CLI::App * sc, Options& o, bool grid, bool multi_method )
  {
    sc->add_option( "function", o.function, "daw, faddeeva, fried-conte, jackson, sitenko, jackson-real, "
                                            "fresnel-c, fresnel-s, fresnel, gordeyev" )->required();
    if ( !grid )
      sc->add_option( "args", o.args, "z as a, bi, a+bi or a-bi (gordeyev: OMEGA [LAMBDA NU])" );
    sc->add_option( "--format", o.format, "csv or json" )->check( CLI::IsMember( { "csv", "json" } ) );
    sc->add_option( "--out", o.out, "output file (default stdout)" );
    sc->add_option( "--tol", o.tol, "relative tolerance of the series and sums" );
    sc->add_option( "--orders", o.orders, "fixed truncation orders R,S of the expansions" );
    sc->add_option( "--crossover", o.crossover, "switch-over |xi| between series and expansion" );
    auto * m = sc->add_option( "--method", o.methods, "auto, series, asymptotic, paper-asymptotic, quadrature" );
    if ( multi_method )
      m->delimiter( ',' );
    sc->add_option( "--lambda", o.lambda, "gordeyev lambda" );
    sc->add_option( "--nu", o.nu, "gordeyev nu" );
    sc->add_option( "--gordeyev-regime", o.regime, "series, asym-lambda, asym-omega, asym-both, quadrature" );
    if ( grid ) {
      sc->add_option( "--re", o.re, "MIN,MAX of the first grid coordinate" );
      sc->add_option( "--im", o.im, "MIN,MAX of the second grid coordinate" );
      sc->add_option( "--n-re", o.n_re, "points along the first coordinate" );
      sc->add_option( "--n-im", o.n_im, "points along the second coordinate" );
      sc->add_flag( "--polar", o.polar, "read the grid as (|z|, arg z)" );
    }
  }

}

int main( int argc, char ** argv )
{
  CLI::App app{ "Dawson, Faddeeva, Fried-Conte, Jackson, Fresnel and Gordeyev functions" };
  app.require_subcommand( 1 );
  Options o;
  auto * ev = app.add_subcommand( "eval", "evaluate at one point" );
  addCommon( ev, o, false, false );
  auto * tab = app.add_subcommand( "tabulate", "evaluate on a grid (first coordinate fastest)" );
  addCommon( tab, o, true, false );
  auto * acc = app.add_subcommand( "accuracy-map", "grid evaluation against the quadrature oracle" );
  addCommon( acc, o, true, false );
  acc->add_option( "--summary", o.summary, "write the max rel_diff summary as JSON" );
  auto * bench = app.add_subcommand( "bench", "timing and term counts per route" );
  addCommon( bench, o, true, true );

  try {
    app.parse( argc, argv );
  } catch ( const CLI::ParseError& e ) {
    const int code = app.exit( e );
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if ( ev->parsed() )
      return cmdEval( o );
    if ( tab->parsed() )
      return cmdTabulate( o, false );
    if ( acc->parsed() )
      return cmdTabulate( o, true );
    return cmdBench( o );
  } catch ( const UsageError& e ) {
    std::cerr << "specfun: " << e.what() << '\n';
    return exit_usage;
  } catch ( const IoError& e ) {
    std::cerr << "specfun: " << e.what() << '\n';
    return exit_io;
  } catch ( const std::exception& e ) {
    std::cerr << "specfun: " << e.what() << '\n';
    return exit_numeric;
  }
}
