#pragma once

/* Independent reference implementations used to check library results.
 * Everything here works bit by bit with plain loops, so a defect in the
 * library's mask arithmetic cannot hide inside the tests as well.
 */

#include <cstdint>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/rng.hpp"

namespace oracle
{

/*! \brief Deterministic circuit of random mixed-polarity gates. */
inline revsynth::circuit random_circuit( unsigned width, std::size_t gates, uint64_t seed )
{
  revsynth::splitmix64 rng( seed );
  revsynth::circuit c( width );
  while ( c.size() < gates )
  {
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
    c.add( revsynth::toffoli_gate( width, target, pos, neg ) );
  }
  return c;
}

inline unsigned bit_of( uint32_t x, unsigned i )
{
  return ( x >> i ) & 1u;
}

inline unsigned naive_hamming( uint32_t p, uint32_t q, unsigned width )
{
  unsigned count = 0;
  for ( unsigned i = 0; i < width; ++i )
  {
    count += bit_of( p, i ) != bit_of( q, i ) ? 1u : 0u;
  }
  return count;
}

/*! \brief Apply a gate by checking every control bit individually. */
inline uint32_t naive_apply_gate( revsynth::toffoli_gate const& g, uint32_t x )
{
  bool fires = true;
  for ( unsigned line = 0; line < g.width(); ++line )
  {
    if ( bit_of( g.positive_controls(), line ) && bit_of( x, line ) != 1u )
    {
      fires = false;
    }
    if ( bit_of( g.negative_controls(), line ) && bit_of( x, line ) != 0u )
    {
      fires = false;
    }
  }
  return fires ? x ^ ( uint32_t{ 1 } << g.target() ) : x;
}

inline uint32_t naive_apply_circuit( revsynth::circuit const& c, uint32_t x )
{
  for ( auto const& g : c )
  {
    x = naive_apply_gate( g, x );
  }
  return x;
}

inline std::vector<uint32_t> naive_realized( revsynth::circuit const& c )
{
  std::vector<uint32_t> out( std::size_t{ 1 } << c.width() );
  for ( uint32_t x = 0; x < out.size(); ++x )
  {
    out[x] = naive_apply_circuit( c, x );
  }
  return out;
}

inline uint64_t naive_complexity( std::vector<uint32_t> const& perm, unsigned width )
{
  uint64_t sum = 0;
  for ( uint32_t i = 0; i < perm.size(); ++i )
  {
    sum += naive_hamming( i, perm[i], width );
  }
  return sum;
}

inline std::vector<uint32_t> naive_inverse( std::vector<uint32_t> const& perm )
{
  std::vector<uint32_t> inv( perm.size() );
  for ( uint32_t i = 0; i < perm.size(); ++i )
  {
    inv[perm[i]] = i;
  }
  return inv;
}

} // namespace oracle
