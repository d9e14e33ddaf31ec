#include <doctest.h>

#include "oracle.hpp"
#include "revsynth/bit_string.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/errors.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/rng.hpp"
#include "revsynth/spec.hpp"

#include <algorithm>
#include <vector>

using namespace revsynth;

namespace
{
// running example used throughout the suite: a 3-line reversible function
std::vector<uint32_t> const table_one{ 1, 0, 3, 2, 5, 7, 4, 6 };
} // namespace

TEST_CASE( "line names run alphabetically from a" )
{
  CHECK( line_name( 0 ) == 'a' );
  CHECK( line_name( 1 ) == 'b' );
  CHECK( line_name( 15 ) == 'p' );
}

TEST_CASE( "bit_string stores value and width" )
{
  auto const s = bit_string::from_int( 5, 3 );
  CHECK( s.width() == 3 );
  CHECK( s.int_value() == 5 );
  CHECK( s.bit( 0 ) );
  CHECK_FALSE( s.bit( 1 ) );
  CHECK( s.bit( 2 ) );
  CHECK( to_string( s ) == "101" );
  CHECK( s.with_flipped( 1 ) == bit_string::from_int( 7, 3 ) );
  CHECK( s.with_flipped( 2 ) == bit_string::from_int( 1, 3 ) );
  CHECK( s != bit_string::from_int( 5, 4 ) );
}

TEST_CASE( "bit_string rejects bad widths and values" )
{
  CHECK_THROWS_AS( bit_string::from_int( 0, 0 ), width_error );
  CHECK_THROWS_AS( bit_string::from_int( 0, 17 ), width_error );
  CHECK_THROWS_AS( bit_string::from_int( 8, 3 ), value_error );
  CHECK_THROWS_AS( bit_string::from_int( 1, 3 ).bit( 3 ), width_error );
  CHECK_THROWS_AS( bit_string::from_int( 1, 3 ).with_flipped( 5 ), width_error );
}

TEST_CASE( "hamming distance counts differing lines" )
{
  CHECK( hamming_distance( bit_string::from_int( 0b101, 3 ), bit_string::from_int( 0b011, 3 ) ) == 2 );
  CHECK( hamming_distance( bit_string::from_int( 0, 4 ), bit_string::from_int( 15, 4 ) ) == 4 );
  CHECK( hamming_distance( bit_string::from_int( 6, 3 ), bit_string::from_int( 6, 3 ) ) == 0 );
  CHECK_THROWS_AS( hamming_distance( bit_string::from_int( 0, 3 ), bit_string::from_int( 0, 4 ) ), width_mismatch );
}

TEST_CASE( "hamming distance agrees with the bitwise oracle" )
{
  splitmix64 rng( 11 );
  for ( int i = 0; i < 500; ++i )
  {
    auto const p = static_cast<uint32_t>( rng.next_below( 256 ) );
    auto const q = static_cast<uint32_t>( rng.next_below( 256 ) );
    CHECK( hamming_distance( p, q ) == oracle::naive_hamming( p, q, 8 ) );
  }
}

TEST_CASE( "toffoli_gate validates its masks" )
{
  CHECK_THROWS_AS( toffoli_gate( 3, 3, 0, 0 ), error );              // target outside width
  CHECK_THROWS_AS( toffoli_gate( 3, 0, 0b001, 0 ), error );          // controls its own target
  CHECK_THROWS_AS( toffoli_gate( 3, 0, 0b010, 0b010 ), error );      // both polarities on one line
  CHECK_THROWS_AS( toffoli_gate( 3, 0, 0b1000, 0 ), error );         // control outside width
  CHECK_NOTHROW( toffoli_gate( 3, 0, 0b010, 0b100 ) );
}

TEST_CASE( "toffoli_gate fires only when every control matches" )
{
  // positive control on a, negative on b, target c
  auto const g = toffoli_gate::from_lines( 3, 2, { 0 }, { 1 } );
  CHECK( g.apply( 0b001 ) == 0b101 );
  CHECK( g.apply( 0b101 ) == 0b001 );
  CHECK( g.apply( 0b011 ) == 0b011 );
  CHECK( g.apply( 0b000 ) == 0b000 );
  CHECK( g.control_count() == 2 );

  // a NOT gate has no controls and always fires
  auto const n = toffoli_gate::from_lines( 2, 1, {}, {} );
  CHECK( n.apply( 0b00 ) == 0b10 );
  CHECK( n.apply( 0b11 ) == 0b01 );
}

TEST_CASE( "gate application agrees with the oracle and is self-inverse" )
{
  splitmix64 rng( 23 );
  for ( int i = 0; i < 300; ++i )
  {
    unsigned const width = 2 + static_cast<unsigned>( rng.next_below( 5 ) );
    unsigned const target = static_cast<unsigned>( rng.next_below( width ) );
    uint32_t pos = 0, neg = 0;
    for ( unsigned line = 0; line < width; ++line )
    {
      if ( line == target )
      {
        continue;
      }
      switch ( rng.next_below( 3 ) )
      {
      case 0:
        pos |= uint32_t{ 1 } << line;
        break;
      case 1:
        neg |= uint32_t{ 1 } << line;
        break;
      default:
        break;
      }
    }
    toffoli_gate const g( width, target, pos, neg );
    for ( uint32_t x = 0; x < ( uint32_t{ 1 } << width ); ++x )
    {
      CHECK( g.apply( x ) == oracle::naive_apply_gate( g, x ) );
      CHECK( g.apply( g.apply( x ) ) == x );
    }
  }
}

TEST_CASE( "without_control removes one control" )
{
  auto const g = toffoli_gate::from_lines( 3, 2, { 0 }, { 1 } );
  auto const dropped = g.without_control( 1 );
  CHECK( dropped.positive_controls() == 0b001 );
  CHECK( dropped.negative_controls() == 0 );
  CHECK( dropped.target() == 2 );
}

TEST_CASE( "circuit validates widths" )
{
  CHECK_THROWS_AS( circuit( 0 ), width_error );
  CHECK_THROWS_AS( circuit( 17 ), width_error );
  circuit c( 3 );
  CHECK( c.empty() );
  c.add( toffoli_gate::from_lines( 3, 0, { 1 }, {} ) );
  CHECK( c.size() == 1 );
  CHECK_THROWS_AS( c.add( toffoli_gate::from_lines( 2, 0, { 1 }, {} ) ), width_mismatch );
}

TEST_CASE( "reversed circuit lists the gates backwards" )
{
  circuit c( 2 );
  c.add( toffoli_gate::from_lines( 2, 0, { 1 }, {} ) );
  c.add( toffoli_gate::from_lines( 2, 1, {}, {} ) );
  auto const r = c.reversed();
  CHECK( r.size() == 2 );
  CHECK( r[0] == c[1] );
  CHECK( r[1] == c[0] );
}

TEST_CASE( "reversible_spec accepts only permutations" )
{
  CHECK_NOTHROW( reversible_spec( 3, table_one ) );
  CHECK_THROWS_AS( reversible_spec( 2, { 0, 1, 2 } ), error );          // wrong row count
  CHECK_THROWS_AS( reversible_spec( 2, { 0, 1, 1, 3 } ), not_a_permutation );
  CHECK_THROWS_AS( reversible_spec( 2, { 0, 1, 2, 4 } ), value_error ); // out of range
  CHECK_THROWS_AS( reversible_spec( 0, {} ), width_error );
}

TEST_CASE( "identity spec maps every value to itself" )
{
  auto const id = identity_spec( 3 );
  for ( uint32_t i = 0; i < 8; ++i )
  {
    CHECK( id[i] == i );
  }
  CHECK( complexity( id ) == 0 );
}

TEST_CASE( "inverse of the running example" )
{
  reversible_spec const spec( 3, table_one );
  auto const inv = inverse( spec );
  std::vector<uint32_t> const expected{ 1, 0, 3, 2, 6, 4, 7, 5 };
  for ( uint32_t i = 0; i < 8; ++i )
  {
    CHECK( inv[i] == expected[i] );
  }
}

TEST_CASE( "complexity of known specifications" )
{
  CHECK( complexity( reversible_spec( 3, table_one ) ) == 8 );
  CHECK( complexity( reversible_spec( 3, { 0, 1, 2, 4, 3, 5, 6, 7 } ) ) == 6 );
}

TEST_CASE( "inverse and complexity agree with the oracles on random permutations" )
{
  for ( unsigned width = 2; width <= 5; ++width )
  {
    for ( uint64_t seed = 0; seed < 20; ++seed )
    {
      auto const perm = random_permutation( width, seed * 7919 + width );
      reversible_spec const spec( width, perm );
      CHECK( complexity( spec ) == oracle::naive_complexity( perm, width ) );
      auto const inv = inverse( spec );
      auto const expected = oracle::naive_inverse( perm );
      for ( uint32_t i = 0; i < spec.size(); ++i )
      {
        CHECK( inv[i] == expected[i] );
      }
      // round trip: the inverse of the inverse is the original
      auto const back = inverse( inv );
      for ( uint32_t i = 0; i < spec.size(); ++i )
      {
        CHECK( back[i] == perm[i] );
      }
    }
  }
}

TEST_CASE( "splitmix64 reproduces the reference stream" )
{
  splitmix64 rng( 0 );
  CHECK( rng.next() == 0xE220A8397B1DCDAFull );
  CHECK( rng.next() == 0x6E789E6AA1B965F4ull );
  CHECK( rng.next() == 0x06C45D188009454Full );
}

TEST_CASE( "random_permutation is a deterministic permutation" )
{
  for ( unsigned width = 1; width <= 6; ++width )
  {
    auto const a = random_permutation( width, 42 );
    auto const b = random_permutation( width, 42 );
    CHECK( a == b );
    auto sorted = a;
    std::sort( sorted.begin(), sorted.end() );
    for ( uint32_t i = 0; i < sorted.size(); ++i )
    {
      CHECK( sorted[i] == i );
    }
  }
  CHECK( random_permutation( 4, 1 ) != random_permutation( 4, 2 ) );
}
