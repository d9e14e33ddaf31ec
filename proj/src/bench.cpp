#include "revsynth/bench.hpp"

#include <chrono>
#include <ostream>

#include "revsynth/errors.hpp"
#include "revsynth/optimizer.hpp"
#include "revsynth/rng.hpp"
#include "revsynth/simulator.hpp"

namespace revsynth
{

char const* method_name( synthesis_method method )
{
  switch ( method )
  {
  case synthesis_method::bsssn:
    return "bsssn";
  case synthesis_method::variant:
    return "variant";
  default:
    return "random";
  }
}

char const* tie_name( tie_rule tie )
{
  switch ( tie )
  {
  case tie_rule::lowest_value:
    return "lowest";
  case tie_rule::highest_value:
    return "highest";
  default:
    return "misplaced";
  }
}

char const* side_name( translation_side side )
{
  return side == translation_side::output ? "output" : "input";
}

namespace
{

void check_config( bench_config const& config )
{
  if ( config.min_width < 1u || config.min_width > config.max_width || config.max_width > max_width )
  {
    throw value_error( "width sweep " + std::to_string( config.min_width ) + ".." + std::to_string( config.max_width ) + " outside 1.." + std::to_string( max_width ) );
  }
  if ( config.trials < 1u )
  {
    throw value_error( "at least one trial per width is needed" );
  }
  if ( config.methods.empty() || config.ties.empty() || config.sides.empty() )
  {
    throw value_error( "methods, ties and sides must each name at least one setting" );
  }
}

} // namespace

bool run_bench( bench_config const& config, std::ostream& out )
{
  check_config( config );
  out << "n,trial,method,tie,side,gates_raw,gates_opt,cf,runtime_us,seed\n";
  bool all_verified = true;
  uint64_t pair_index = 0;
  for ( unsigned width = config.min_width; width <= config.max_width; ++width )
  {
    for ( unsigned trial = 0; trial < config.trials; ++trial, ++pair_index )
    {
      uint64_t const trial_seed = config.base_seed ^ ( pair_index * uint64_t{ 0x9E3779B97F4A7C15 } );
      reversible_spec const spec( width, random_permutation( width, trial_seed ) );
      uint64_t const cf = complexity( spec );
      for ( auto method : config.methods )
      {
        for ( auto tie : config.ties )
        {
          for ( auto side : config.sides )
          {
            synthesis_options options;
            options.method = method;
            options.tie = tie;
            options.side = side;
            options.seed = trial_seed;
            auto const started = std::chrono::steady_clock::now();
            circuit const raw = synthesize( spec, options );
            circuit const optimized = optimize( raw );
            auto const stopped = std::chrono::steady_clock::now();
            if ( !realizes( raw, spec ) || !realizes( optimized, spec ) )
            {
              out << "# verify_failed n=" << width << " trial=" << trial
                  << " method=" << method_name( method ) << " tie=" << tie_name( tie )
                  << " side=" << side_name( side ) << " seed=" << trial_seed << '\n';
              all_verified = false;
              continue;
            }
            uint64_t const runtime_us = config.timings
                                            ? static_cast<uint64_t>( std::chrono::duration_cast<std::chrono::microseconds>( stopped - started ).count() )
                                            : 0u;
            out << width << ',' << trial << ',' << method_name( method ) << ','
                << tie_name( tie ) << ',' << side_name( side ) << ','
                << raw.size() << ',' << optimized.size() << ',' << cf << ','
                << runtime_us << ',' << trial_seed << '\n';
          }
        }
      }
    }
  }
  return all_verified;
}

} // namespace revsynth
