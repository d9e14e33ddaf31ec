#include <doctest.h>

#include "oracle.hpp"
#include "revsynth/errors.hpp"
#include "revsynth/rng.hpp"
#include "revsynth/simulator.hpp"
#include "revsynth/synthesis.hpp"

#include <vector>

using namespace revsynth;

namespace
{

std::vector<uint32_t> const table_one{ 1, 0, 3, 2, 5, 7, 4, 6 };

toffoli_gate g3( unsigned target, std::initializer_list<unsigned> pos, std::initializer_list<unsigned> neg )
{
  return toffoli_gate::from_lines( 3, target, pos, neg );
}

void check_gates( std::vector<toffoli_gate> const& actual, std::vector<toffoli_gate> const& expected )
{
  REQUIRE( actual.size() == expected.size() );
  for ( std::size_t i = 0; i < actual.size(); ++i )
  {
    CAPTURE( i );
    CHECK( actual[i] == expected[i] );
  }
}

void check_gates( circuit const& actual, std::vector<toffoli_gate> const& expected )
{
  check_gates( actual.gates(), expected );
}

} // namespace

TEST_CASE( "sort_state tracks slots and positions" )
{
  sort_state state( reversible_spec( 3, table_one ) );
  CHECK( state.width() == 3 );
  CHECK( state.size() == 8 );
  CHECK( state.slot( 0 ) == 1 );
  CHECK( state.slot( 5 ) == 7 );
  CHECK( state.position_of( 7 ) == 5 );
  CHECK( state.position_of( 4 ) == 6 );
  CHECK_FALSE( state.placed( 0 ) );
  CHECK_FALSE( state.sorted() );

  sort_state id( identity_spec( 3 ) );
  CHECK( id.sorted() );

  // applying a gate permutes the stored values
  state.apply( g3( 0, {}, { 1, 2 } ) ); // swaps values 0 and 1
  CHECK( state.slot( 0 ) == 0 );
  CHECK( state.slot( 1 ) == 1 );
  CHECK( state.placed( 0 ) );
}

TEST_CASE( "swap_gate builds the unique exchanging gate" )
{
  CHECK( swap_gate( bit_string::from_int( 0b000, 3 ), bit_string::from_int( 0b001, 3 ) ) == g3( 0, {}, { 1, 2 } ) );
  CHECK( swap_gate( bit_string::from_int( 0b100, 3 ), bit_string::from_int( 0b101, 3 ) ) == g3( 0, { 2 }, { 1 } ) );
  CHECK_THROWS_AS( swap_gate( bit_string::from_int( 0, 3 ), bit_string::from_int( 3, 3 ) ), not_adjacent );
  CHECK_THROWS_AS( swap_gate( bit_string::from_int( 5, 3 ), bit_string::from_int( 5, 3 ) ), not_adjacent );
  CHECK_THROWS_AS( swap_gate( bit_string::from_int( 0, 3 ), bit_string::from_int( 1, 4 ) ), width_mismatch );
}

TEST_CASE( "swap_gate exchanges exactly its two strings" )
{
  for ( unsigned width = 2; width <= 4; ++width )
  {
    uint32_t const size = uint32_t{ 1 } << width;
    for ( uint32_t p = 0; p < size; ++p )
    {
      for ( unsigned line = 0; line < width; ++line )
      {
        uint32_t const q = p ^ ( uint32_t{ 1 } << line );
        auto const gate = swap_gate( bit_string::from_int( p, width ), bit_string::from_int( q, width ) );
        for ( uint32_t x = 0; x < size; ++x )
        {
          uint32_t const expected = x == p ? q : x == q ? p : x;
          CHECK( gate.apply( x ) == expected );
        }
      }
    }
  }
}

TEST_CASE( "chain_step moves one line closer under each tie rule" )
{
  sort_state const id( identity_spec( 3 ) );

  // all three candidates tie at distance 2; the rules pick different lines
  CHECK( chain_step( bit_string::from_int( 0b100, 3 ), bit_string::from_int( 0b011, 3 ), id, tie_rule::highest_value ).int_value() == 0b111 );
  CHECK( chain_step( bit_string::from_int( 0b011, 3 ), bit_string::from_int( 0b100, 3 ), id, tie_rule::lowest_value ).int_value() == 0b000 );

  // the misplaced-first rule skips candidates already in their slots
  sort_state const partial( reversible_spec( 3, { 0, 1, 2, 4, 3, 6, 5, 7 } ) );
  CHECK_FALSE( partial.placed( 5 ) );
  CHECK_FALSE( partial.placed( 6 ) );
  CHECK( partial.placed( 0 ) );
  CHECK( chain_step( bit_string::from_int( 0b011, 3 ), bit_string::from_int( 0b100, 3 ), partial, tie_rule::prefer_misplaced_then_lowest ).int_value() == 0b101 );
  // when every candidate is placed it falls back to the lowest value
  CHECK( chain_step( bit_string::from_int( 0b011, 3 ), bit_string::from_int( 0b100, 3 ), id, tie_rule::prefer_misplaced_then_lowest ).int_value() == 0b000 );

  CHECK_THROWS_AS( chain_step( bit_string::from_int( 0, 3 ), bit_string::from_int( 1, 3 ), id, tie_rule::lowest_value ), error );
}

TEST_CASE( "chain_step always reduces the distance by exactly one" )
{
  for ( unsigned width = 2; width <= 4; ++width )
  {
    sort_state const id( identity_spec( width ) );
    uint32_t const size = uint32_t{ 1 } << width;
    for ( uint32_t a = 0; a < size; ++a )
    {
      for ( uint32_t b = 0; b < size; ++b )
      {
        if ( hamming_distance( a, b ) < 2 )
        {
          continue;
        }
        for ( auto rule : { tie_rule::lowest_value, tie_rule::highest_value, tie_rule::prefer_misplaced_then_lowest } )
        {
          auto const c = chain_step( bit_string::from_int( a, width ), bit_string::from_int( b, width ), id, rule );
          CHECK( hamming_distance( b, c.int_value() ) == 1 );
          CHECK( hamming_distance( a, c.int_value() ) == hamming_distance( a, b ) - 1 );
        }
      }
    }
  }
}

TEST_CASE( "sort_network reproduces the published discovery lists" )
{
  reversible_spec const spec( 3, table_one );

  synthesis_options options;
  check_gates( sort_network( spec, options ),
               { g3( 0, {}, { 1, 2 } ), g3( 0, { 1 }, { 2 } ), g3( 1, { 0, 2 }, {} ), g3( 0, { 1, 2 }, {} ), g3( 1, { 2 }, { 0 } ) } );

  options.method = synthesis_method::variant;
  check_gates( sort_network( spec, options ),
               { g3( 0, {}, { 1, 2 } ), g3( 0, { 1 }, { 2 } ), g3( 0, { 2 }, { 1 } ), g3( 1, { 0, 2 }, {} ), g3( 0, { 1, 2 }, {} ) } );

  CHECK( sort_network( identity_spec( 3 ), synthesis_options{} ).empty() );
}

TEST_CASE( "the gate budget aborts runaway syntheses" )
{
  synthesis_options options;
  options.max_gates = 1;
  CHECK_THROWS_AS( sort_network( reversible_spec( 3, table_one ), options ), gate_budget_exceeded );
}

TEST_CASE( "output-side synthesis reverses the discovery order" )
{
  reversible_spec const spec( 3, table_one );
  auto const c = synthesize( spec );
  check_gates( c, { g3( 1, { 2 }, { 0 } ), g3( 0, { 1, 2 }, {} ), g3( 1, { 0, 2 }, {} ), g3( 0, { 1 }, { 2 } ), g3( 0, {}, { 1, 2 } ) } );
  CHECK( realizes( c, spec ) );
}

TEST_CASE( "input-side synthesis sorts the inverse and keeps discovery order" )
{
  reversible_spec const spec( 3, table_one );
  synthesis_options options;
  options.side = translation_side::input;
  auto const c = synthesize( spec, options );
  check_gates( c, { g3( 0, {}, { 1, 2 } ), g3( 0, { 1 }, { 2 } ), g3( 0, { 1, 2 }, {} ), g3( 1, { 0, 2 }, {} ), g3( 0, { 2 }, { 1 } ) } );
  CHECK( realizes( c, spec ) );
}

TEST_CASE( "the two tie rules reproduce both published five-gate circuits" )
{
  reversible_spec const spec( 3, { 0, 1, 2, 4, 3, 5, 6, 7 } );

  synthesis_options highest;
  highest.tie = tie_rule::highest_value;
  auto const h = synthesize( spec, highest );
  check_gates( h, { g3( 2, { 0, 1 }, {} ), g3( 1, { 0, 2 }, {} ), g3( 0, { 2 }, { 1 } ), g3( 1, { 0, 2 }, {} ), g3( 2, { 0, 1 }, {} ) } );
  CHECK( realizes( h, spec ) );

  synthesis_options variant;
  variant.method = synthesis_method::variant;
  auto const v = synthesize( spec, variant );
  check_gates( v, { g3( 2, {}, { 0, 1 } ), g3( 0, {}, { 1, 2 } ), g3( 1, { 0 }, { 2 } ), g3( 0, {}, { 1, 2 } ), g3( 2, {}, { 0, 1 } ) } );
  CHECK( realizes( v, spec ) );
}

TEST_CASE( "reduce_controls drops controls only when placed values stay fixed" )
{
  // dropping both controls sorts four swapped pairs with a single gate
  sort_state const all_pairs( reversible_spec( 3, { 1, 0, 3, 2, 5, 4, 7, 6 } ) );
  auto const full = swap_gate( bit_string::from_int( 0, 3 ), bit_string::from_int( 1, 3 ) );
  CHECK( reduce_controls( full, all_pairs ) == g3( 0, {}, {} ) );

  // with every other value in place each drop would disturb a placed value
  sort_state const one_pair( reversible_spec( 3, { 1, 0, 2, 3, 4, 5, 6, 7 } ) );
  CHECK( reduce_controls( full, one_pair ) == full );
}

TEST_CASE( "control reduction solves the rotation example with three gates" )
{
  reversible_spec const spec( 3, { 7, 0, 1, 2, 3, 4, 5, 6 } );
  synthesis_options options;
  options.method = synthesis_method::variant;
  options.reduce_controls = true;

  check_gates( sort_network( spec, options ), { g3( 2, { 0, 1 }, {} ), g3( 1, { 0 }, {} ), g3( 0, {}, {} ) } );

  auto const c = synthesize( spec, options );
  check_gates( c, { g3( 0, {}, {} ), g3( 1, { 0 }, {} ), g3( 2, { 0, 1 }, {} ) } );
  CHECK( realizes( c, spec ) );
}

TEST_CASE( "the random method is seeded and deterministic" )
{
  reversible_spec const spec( 3, table_one );
  synthesis_options options;
  options.method = synthesis_method::random;
  options.seed = 7;
  auto const first = synthesize( spec, options );
  auto const second = synthesize( spec, options );
  check_gates( first, second.gates() );
  CHECK( realizes( first, spec ) );

  for ( uint64_t seed = 0; seed < 10; ++seed )
  {
    options.seed = seed;
    CHECK( realizes( synthesize( spec, options ), spec ) );
  }
}

TEST_CASE( "every method, side and tie rule realizes random specifications" )
{
  for ( unsigned width = 2; width <= 5; ++width )
  {
    for ( uint64_t trial = 0; trial < 8; ++trial )
    {
      reversible_spec const spec( width, random_permutation( width, trial * 131 + width ) );
      for ( auto method : { synthesis_method::bsssn, synthesis_method::variant, synthesis_method::random } )
      {
        for ( auto side : { translation_side::output, translation_side::input } )
        {
          for ( auto tie : { tie_rule::lowest_value, tie_rule::highest_value, tie_rule::prefer_misplaced_then_lowest } )
          {
            for ( bool reduce : { false, true } )
            {
              synthesis_options options;
              options.method = method;
              options.side = side;
              options.tie = tie;
              options.reduce_controls = reduce;
              options.seed = trial;
              auto const c = synthesize( spec, options );
              CAPTURE( width );
              CAPTURE( trial );
              CHECK( realizes( c, spec ) );
              CHECK( c.size() <= 4ull * width * ( 1ull << width ) );
            }
          }
        }
      }
    }
  }
}
