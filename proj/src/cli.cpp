#include "revsynth/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "revsynth/bench.hpp"
#include "revsynth/embedding.hpp"
#include "revsynth/errors.hpp"
#include "revsynth/io.hpp"
#include "revsynth/optimizer.hpp"
#include "revsynth/simulator.hpp"
#include "revsynth/synthesis.hpp"

namespace revsynth
{

namespace
{

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw error( "cannot read '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/*! \brief Run \p body against the file at \p path, or \p fallback when no
 * path was given. */
int with_sink( std::string const& path, std::ostream& fallback, std::function<int( std::ostream& )> const& body )
{
  if ( path.empty() )
  {
    return body( fallback );
  }
  std::ofstream file( path, std::ios::binary );
  if ( !file )
  {
    throw error( "cannot write '" + path + "'" );
  }
  return body( file );
}

std::map<std::string, synthesis_method> const& method_names()
{
  static std::map<std::string, synthesis_method> const names{
      { "bsssn", synthesis_method::bsssn },
      { "variant", synthesis_method::variant },
      { "random", synthesis_method::random } };
  return names;
}

std::map<std::string, tie_rule> const& tie_names()
{
  static std::map<std::string, tie_rule> const names{
      { "lowest", tie_rule::lowest_value },
      { "highest", tie_rule::highest_value },
      { "misplaced", tie_rule::prefer_misplaced_then_lowest } };
  return names;
}

std::map<std::string, translation_side> const& side_names()
{
  static std::map<std::string, translation_side> const names{
      { "output", translation_side::output },
      { "input", translation_side::input } };
  return names;
}

std::string line_list( std::vector<unsigned> const& lines )
{
  if ( lines.empty() )
  {
    return "-";
  }
  std::string out;
  for ( auto line : lines )
  {
    if ( !out.empty() )
    {
      out.push_back( ' ' );
    }
    out.push_back( line_name( line ) );
  }
  return out;
}

} // namespace

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "reversible-logic synthesis toolkit", "revsynth" };
  app.require_subcommand( 1 );
  int exit_code = 0;

  // ---- synth ----------------------------------------------------------
  auto* synth = app.add_subcommand( "synth", "synthesize a circuit for a reversible specification" );
  std::string synth_file;
  std::string synth_output;
  synthesis_options synth_options;
  bool synth_optimize = false;
  bool synth_reversed = false;
  synth->add_option( "spec", synth_file, "specification file" )->required();
  synth->add_option( "--method", synth_options.method, "synthesis method" )
      ->transform( CLI::CheckedTransformer( method_names(), CLI::ignore_case ) )
      ->default_str( "bsssn" );
  synth->add_option( "--tie", synth_options.tie, "tie rule for swap chains" )
      ->transform( CLI::CheckedTransformer( tie_names(), CLI::ignore_case ) )
      ->default_str( "lowest" );
  synth->add_option( "--side", synth_options.side, "translate at the outputs or at the inputs" )
      ->transform( CLI::CheckedTransformer( side_names(), CLI::ignore_case ) )
      ->default_str( "output" );
  synth->add_flag( "--reduce-controls", synth_options.reduce_controls, "greedily drop controls from each emitted gate" );
  auto* synth_seed = synth->add_option( "--seed", synth_options.seed, "seed for the random method" );
  synth->add_option( "--max-gates", synth_options.max_gates, "abort above this many gates (0: default cap)" );
  synth->add_flag( "--opt", synth_optimize, "run the optimizer on the result" );
  synth->add_flag( "--reversed", synth_reversed, "print the gate list in reverse order" );
  synth->add_option( "-o,--output", synth_output, "write the circuit to this file" );
  synth->callback( [&]
  {
    if ( synth_options.method == synthesis_method::random && synth_seed->count() == 0 )
    {
      throw CLI::ValidationError( "--seed is required with --method random" );
    }
    reversible_spec const spec = parse_spec( read_file( synth_file ) );
    circuit result = synthesize( spec, synth_options );
    if ( synth_optimize )
    {
      result = optimize( result );
    }
    if ( !realizes( result, spec ) )
    {
      err << "error: the synthesized circuit does not realize the specification\n";
      exit_code = 1;
      return;
    }
    exit_code = with_sink( synth_output, out, [&]( std::ostream& sink )
    {
      sink << format_circuit( synth_reversed ? result.reversed() : result );
      return 0;
    } );
  } );

  // ---- optimize -------------------------------------------------------
  auto* opt = app.add_subcommand( "optimize", "shorten a circuit without changing its function" );
  std::string opt_file;
  std::string opt_output;
  std::vector<std::string> opt_template_files;
  bool opt_no_pairs = false;
  bool opt_no_merge = false;
  bool opt_no_prune = false;
  unsigned opt_max_passes = 32;
  opt->add_option( "circuit", opt_file, "circuit file" )->required();
  opt->add_flag( "--no-pair-removal", opt_no_pairs, "skip removal of cancelling duplicate gates" );
  opt->add_flag( "--no-merge", opt_no_merge, "skip merging of adjacent opposite-polarity gates" );
  opt->add_flag( "--no-prune", opt_no_prune, "skip control pruning between conjugating gate pairs" );
  opt->add_option( "--template", opt_template_files, "file with an extra rewrite rule (pattern, '=>', replacement)" );
  opt->add_option( "--max-passes", opt_max_passes, "upper bound on optimization passes" );
  opt->add_option( "-o,--output", opt_output, "write the circuit to this file" );
  opt->callback( [&]
  {
    circuit const input = parse_circuit( read_file( opt_file ) );
    optimize_config config;
    config.enable_pair_removal = !opt_no_pairs;
    config.enable_merge = !opt_no_merge;
    config.enable_control_pruning = !opt_no_prune;
    config.max_passes = opt_max_passes;
    for ( auto const& path : opt_template_files )
    {
      config.templates.push_back( parse_template( read_file( path ), path ) );
    }
    circuit const result = optimize( input, config );
    exit_code = with_sink( opt_output, out, [&]( std::ostream& sink )
    {
      sink << format_circuit( result );
      return 0;
    } );
  } );

  // ---- simulate -------------------------------------------------------
  auto* sim = app.add_subcommand( "simulate", "apply a circuit to one or all input assignments" );
  std::string sim_file;
  uint64_t sim_input = 0;
  bool sim_all = false;
  sim->add_option( "circuit", sim_file, "circuit file" )->required();
  auto* sim_input_opt = sim->add_option( "--input", sim_input, "input assignment as a decimal number" );
  auto* sim_all_opt = sim->add_flag( "--all", sim_all, "tabulate every input assignment" );
  sim_input_opt->excludes( sim_all_opt );
  sim_all_opt->excludes( sim_input_opt );
  sim->callback( [&]
  {
    if ( sim_input_opt->count() == 0 && !sim_all )
    {
      throw CLI::ValidationError( "either --input or --all is required" );
    }
    circuit const c = parse_circuit( read_file( sim_file ) );
    uint64_t const size = uint64_t{ 1 } << c.width();
    if ( !sim_all && sim_input >= size )
    {
      throw value_error( "input " + std::to_string( sim_input ) + " does not fit into " + std::to_string( c.width() ) + " lines" );
    }
    uint64_t const first = sim_all ? 0 : sim_input;
    uint64_t const last = sim_all ? size : sim_input + 1;
    for ( uint64_t x = first; x < last; ++x )
    {
      auto const image = apply_circuit( c, bit_string::from_int( static_cast<uint32_t>( x ), c.width() ) );
      out << x << " -> " << image.int_value() << '\n';
    }
    exit_code = 0;
  } );

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand( "verify", "check a circuit against a reversible specification" );
  std::string verify_circuit_file;
  std::string verify_spec_file;
  verify->add_option( "circuit", verify_circuit_file, "circuit file" )->required();
  verify->add_option( "spec", verify_spec_file, "specification file" )->required();
  verify->callback( [&]
  {
    circuit const c = parse_circuit( read_file( verify_circuit_file ) );
    reversible_spec const spec = parse_spec( read_file( verify_spec_file ) );
    if ( realizes( c, spec ) )
    {
      out << "equivalent\n";
      exit_code = 0;
    }
    else
    {
      out << "not equivalent\n";
      exit_code = 1;
    }
  } );

  // ---- embed ----------------------------------------------------------
  auto* emb = app.add_subcommand( "embed", "turn an irreversible truth table into a reversible specification" );
  std::string emb_file;
  std::string emb_output;
  emb->add_option( "table", emb_file, "truth table file" )->required();
  emb->add_option( "-o,--output", emb_output, "write the specification to this file" );
  emb->callback( [&]
  {
    auto const [spec, report] = embed( parse_table( read_file( emb_file ) ) );
    exit_code = with_sink( emb_output, out, [&]( std::ostream& sink )
    {
      sink << "# multiplicity " << report.multiplicity << '\n'
           << "# garbage_floor " << report.garbage_floor << '\n'
           << "# total_lines " << report.total_lines << '\n'
           << "# constant_lines " << line_list( report.constant_lines ) << '\n'
           << "# output_bindings " << line_list( report.output_bindings ) << '\n'
           << "# garbage_lines " << line_list( report.garbage_lines ) << '\n'
           << "# preserved_inputs " << line_list( report.preserved_inputs ) << '\n'
           << "# xor_completion " << ( report.xor_completion ? "yes" : "no" ) << '\n'
           << "# greedy_completion " << ( report.greedy_completion ? "yes" : "no" ) << '\n'
           << format_spec( spec );
      return 0;
    } );
  } );

  // ---- stats ----------------------------------------------------------
  auto* stats = app.add_subcommand( "stats", "report size figures for a circuit" );
  std::string stats_file;
  stats->add_option( "circuit", stats_file, "circuit file" )->required();
  stats->callback( [&]
  {
    circuit const c = parse_circuit( read_file( stats_file ) );
    out << "lines " << c.width() << '\n'
        << "gates " << c.size() << '\n';
    std::map<unsigned, std::size_t> histogram;
    for ( auto const& gate : c )
    {
      ++histogram[gate.control_count()];
    }
    for ( auto const& [controls, count] : histogram )
    {
      out << "controls " << controls << ": " << count << '\n';
    }
    out << "complexity " << complexity( realized_spec( c ) ) << '\n';
    exit_code = 0;
  } );

  // ---- bench ----------------------------------------------------------
  auto* bench = app.add_subcommand( "bench", "synthesize random specifications and tabulate sizes as CSV" );
  bench_config bench_cfg;
  std::vector<synthesis_method> bench_methods;
  std::vector<tie_rule> bench_ties;
  std::vector<translation_side> bench_sides;
  std::string bench_output;
  bench->add_option( "--min-width", bench_cfg.min_width, "smallest line count" );
  bench->add_option( "--max-width", bench_cfg.max_width, "largest line count" );
  bench->add_option( "--trials", bench_cfg.trials, "random specifications per width" );
  bench->add_option( "--method", bench_methods, "methods to sweep (repeatable)" )
      ->transform( CLI::CheckedTransformer( method_names(), CLI::ignore_case ) );
  bench->add_option( "--tie", bench_ties, "tie rules to sweep (repeatable)" )
      ->transform( CLI::CheckedTransformer( tie_names(), CLI::ignore_case ) );
  bench->add_option( "--side", bench_sides, "translation sides to sweep (repeatable)" )
      ->transform( CLI::CheckedTransformer( side_names(), CLI::ignore_case ) );
  bench->add_option( "--seed", bench_cfg.base_seed, "base seed for the sweep" );
  bench->add_flag( "--timings", bench_cfg.timings, "fill the runtime_us column (not reproducible)" );
  bench->add_option( "-o,--output", bench_output, "write the CSV to this file" );
  bench->callback( [&]
  {
    if ( !bench_methods.empty() )
    {
      bench_cfg.methods = bench_methods;
    }
    if ( !bench_ties.empty() )
    {
      bench_cfg.ties = bench_ties;
    }
    if ( !bench_sides.empty() )
    {
      bench_cfg.sides = bench_sides;
    }
    exit_code = with_sink( bench_output, out, [&]( std::ostream& sink )
    {
      return run_bench( bench_cfg, sink ) ? 0 : 1;
    } );
  } );

  // ---- dispatch -------------------------------------------------------
  std::vector<char const*> argv;
  argv.reserve( args.size() + 1 );
  argv.push_back( "revsynth" );
  for ( auto const& arg : args )
  {
    argv.push_back( arg.c_str() );
  }
  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == static_cast<int>( CLI::ExitCodes::Success ) )
    {
      CLI::App* target = &app;
      for ( auto* sub : app.get_subcommands() )
      {
        target = sub;
      }
      out << target->help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

} // namespace revsynth
