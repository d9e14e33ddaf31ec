#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "revsynth/synthesis.hpp"

namespace revsynth
{

/*! \brief CSV cell / command-line name of a synthesis method. */
char const* method_name( synthesis_method method );

/*! \brief CSV cell / command-line name of a tie rule. */
char const* tie_name( tie_rule tie );

/*! \brief CSV cell / command-line name of a translation side. */
char const* side_name( translation_side side );

/*! \brief Sweep description for the benchmark harness. */
struct bench_config
{
  unsigned min_width = 3;
  unsigned max_width = 6;
  unsigned trials = 5; //!< random specifications per width
  std::vector<synthesis_method> methods{ synthesis_method::bsssn, synthesis_method::variant, synthesis_method::random };
  std::vector<tie_rule> ties{ tie_rule::lowest_value };
  std::vector<translation_side> sides{ translation_side::output };
  uint64_t base_seed = 1;
  bool timings = false; //!< fill runtime_us; off by default so runs are byte-reproducible
};

/*! \brief Synthesize and optimize random specifications, one CSV row per
 * (width, trial, method, tie, side) combination.
 *
 * Columns: n,trial,method,tie,side,gates_raw,gates_opt,cf,runtime_us,seed.
 * cf is the complexity of the specification; runtime_us covers synthesis
 * plus optimization and stays 0 unless \p config.timings is set.  Every
 * circuit is verified against its specification before its row is written;
 * a failure emits a '# verify_failed ...' comment instead of a row.
 *
 * \return true when every row verified */
bool run_bench( bench_config const& config, std::ostream& out );

} // namespace revsynth
