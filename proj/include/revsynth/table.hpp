#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsynth/bit_string.hpp"
#include "revsynth/errors.hpp"

namespace revsynth
{

/*! \brief Truth table of a (generally irreversible) n-input, k-output function.
 *
 * Row i holds the k output bits for input assignment i, packed with output 0
 * as the least significant bit.
 */
struct irreversible_table
{
  irreversible_table( unsigned inputs, unsigned outputs, std::vector<uint32_t> rows )
      : inputs( inputs ), outputs( outputs ), rows( std::move( rows ) )
  {
    if ( inputs < 1u || inputs > max_width )
    {
      throw width_error( "table input count " + std::to_string( inputs ) + " outside 1.." + std::to_string( max_width ) );
    }
    if ( outputs < 1u || outputs > max_width )
    {
      throw width_error( "table output count " + std::to_string( outputs ) + " outside 1.." + std::to_string( max_width ) );
    }
    std::size_t const n = std::size_t{ 1 } << inputs;
    if ( this->rows.size() != n )
    {
      throw value_error( "table with " + std::to_string( inputs ) + " inputs needs " + std::to_string( n ) + " rows, got " + std::to_string( this->rows.size() ) );
    }
    uint32_t const limit = ( outputs == 32u ) ? ~uint32_t{ 0 } : ( uint32_t{ 1 } << outputs );
    for ( auto v : this->rows )
    {
      if ( v >= limit )
      {
        throw value_error( "table row value " + std::to_string( v ) + " does not fit into " + std::to_string( outputs ) + " output bits" );
      }
    }
  }

  unsigned inputs;
  unsigned outputs;
  std::vector<uint32_t> rows;
};

} // namespace revsynth
