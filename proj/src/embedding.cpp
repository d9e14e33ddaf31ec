#include "revsynth/embedding.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "revsynth/bit_string.hpp"
#include "revsynth/errors.hpp"

namespace revsynth
{

uint32_t output_multiplicity( irreversible_table const& table )
{
  std::vector<uint32_t> counts( std::size_t{ 1 } << table.outputs, 0u );
  uint32_t best = 0;
  for ( auto row : table.rows )
  {
    best = std::max( best, ++counts[row] );
  }
  return best;
}

unsigned min_garbage( uint32_t m )
{
  if ( m == 0u )
  {
    throw value_error( "multiplicity must be at least 1" );
  }
  return static_cast<unsigned>( std::bit_width( m - 1u ) );
}

std::pair<reversible_spec, embedding_report> embed( irreversible_table const& table )
{
  unsigned const n = table.inputs;
  unsigned const k = table.outputs;
  uint32_t const m = output_multiplicity( table );
  unsigned const p = min_garbage( m );
  unsigned const total = std::max( n, p + k );
  if ( total > max_width )
  {
    throw line_limit_error( "embedding needs " + std::to_string( total ) + " lines, above the limit " + std::to_string( max_width ) );
  }

  unsigned const t = total - k; // lines below the output block; all garbage
  uint32_t const rows = uint32_t{ 1 } << n;
  uint32_t const size = uint32_t{ 1 } << total;
  uint32_t const tag_mask = ( uint32_t{ 1 } << t ) - 1u;

  embedding_report report;
  report.multiplicity = m;
  report.garbage_floor = p;
  report.total_lines = total;
  for ( unsigned line = n; line < total; ++line )
  {
    report.constant_lines.push_back( line );
  }
  for ( unsigned j = 0; j < k; ++j )
  {
    report.output_bindings.push_back( t + j );
  }
  for ( unsigned line = 0; line < t; ++line )
  {
    report.garbage_lines.push_back( line );
  }

  std::vector<uint32_t> image( size, 0u );
  std::vector<char> taken( size, 0 );

  // Constant-0 rows carry the table outputs on the top k lines; the lower
  // lines hold a tag that keeps equal-output rows distinct.  The input's own
  // low bits are kept as the tag whenever still free.
  for ( uint32_t x = 0; x < rows; ++x )
  {
    uint32_t const base = table.rows[x] << t;
    uint32_t value = base | ( x & tag_mask );
    if ( taken[value] )
    {
      report.greedy_completion = true;
      uint32_t tag = 0;
      while ( tag <= tag_mask && taken[base | tag] )
      {
        ++tag;
      }
      if ( tag > tag_mask )
      {
        throw error( "embedding ran out of tags; this is a bug (multiplicity bound violated)" );
      }
      value = base | tag;
    }
    image[x] = value;
    taken[value] = 1;
  }

  if ( total > n )
  {
    // Nonzero assignments of the constant lines: xor the constant bits onto
    // their own lines.  This mirrors each constant-0 row block and is checked
    // for bijectivity; if it ever collided, fall back to a deterministic
    // smallest-unused fill (no faithfulness constraint exists here).
    bool xor_ok = true;
    std::vector<uint32_t> trial_image = image;
    std::vector<char> trial_taken = taken;
    for ( uint32_t w = 1; xor_ok && w < ( uint32_t{ 1 } << ( total - n ) ); ++w )
    {
      for ( uint32_t x = 0; xor_ok && x < rows; ++x )
      {
        uint32_t const value = image[x] ^ ( w << n );
        if ( trial_taken[value] )
        {
          xor_ok = false;
        }
        else
        {
          trial_image[( w << n ) | x] = value;
          trial_taken[value] = 1;
        }
      }
    }
    if ( xor_ok )
    {
      image = std::move( trial_image );
      report.xor_completion = true;
    }
    else
    {
      report.greedy_completion = true;
      uint32_t next = 0;
      for ( uint32_t row = rows; row < size; ++row )
      {
        while ( taken[next] )
        {
          ++next;
        }
        image[row] = next;
        taken[next] = 1;
      }
    }
  }

  for ( unsigned line = 0; line < t; ++line )
  {
    bool preserved = true;
    for ( uint32_t x = 0; preserved && x < rows; ++x )
    {
      preserved = ( ( image[x] >> line ) & 1u ) == ( ( x >> line ) & 1u );
    }
    if ( preserved )
    {
      report.preserved_inputs.push_back( line );
    }
  }

  return { reversible_spec( total, std::move( image ) ), std::move( report ) };
}

} // namespace revsynth
