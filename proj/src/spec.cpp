#include "revsynth/spec.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace revsynth
{

reversible_spec::reversible_spec( unsigned width, std::vector<uint32_t> permutation )
    : width_( width ), perm_( std::move( permutation ) )
{
  if ( width_ < 1u || width_ > max_width )
  {
    throw width_error( "spec width " + std::to_string( width_ ) + " outside 1.." + std::to_string( max_width ) );
  }
  uint32_t const n = uint32_t{ 1 } << width_;
  if ( perm_.size() != n )
  {
    throw value_error( "spec of width " + std::to_string( width_ ) + " needs " + std::to_string( n ) + " rows, got " + std::to_string( perm_.size() ) );
  }
  std::vector<bool> seen( n, false );
  for ( auto v : perm_ )
  {
    if ( v >= n )
    {
      throw value_error( "spec row value " + std::to_string( v ) + " does not fit into " + std::to_string( width_ ) + " bits" );
    }
    if ( seen[v] )
    {
      throw not_a_permutation( "spec repeats output value " + std::to_string( v ), v );
    }
    seen[v] = true;
  }
}

reversible_spec identity_spec( unsigned width )
{
  if ( width < 1u || width > max_width )
  {
    throw width_error( "spec width " + std::to_string( width ) + " outside 1.." + std::to_string( max_width ) );
  }
  std::vector<uint32_t> perm( std::size_t{ 1 } << width );
  std::iota( perm.begin(), perm.end(), 0u );
  return reversible_spec( width, std::move( perm ) );
}

reversible_spec inverse( reversible_spec const& spec )
{
  std::vector<uint32_t> inv( spec.size() );
  for ( uint32_t i = 0; i < spec.size(); ++i )
  {
    inv[spec[i]] = i;
  }
  return reversible_spec( spec.width(), std::move( inv ) );
}

uint64_t complexity( reversible_spec const& spec )
{
  uint64_t sum = 0;
  for ( uint32_t i = 0; i < spec.size(); ++i )
  {
    sum += std::popcount( i ^ spec[i] );
  }
  return sum;
}

} // namespace revsynth
