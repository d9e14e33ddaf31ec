#include "revsynth/simulator.hpp"

#include <string>

namespace revsynth
{

bit_string apply_gate( toffoli_gate const& gate, bit_string const& input )
{
  if ( gate.width() != input.width() )
  {
    throw width_mismatch( "gate width " + std::to_string( gate.width() ) + " does not match input width " + std::to_string( input.width() ) );
  }
  return bit_string( gate.apply( input.int_value() ), input.width() );
}

bit_string apply_circuit( circuit const& c, bit_string const& input )
{
  if ( c.width() != input.width() )
  {
    throw width_mismatch( "circuit width " + std::to_string( c.width() ) + " does not match input width " + std::to_string( input.width() ) );
  }
  uint32_t x = input.int_value();
  for ( auto const& g : c )
  {
    x = g.apply( x );
  }
  return bit_string( x, input.width() );
}

reversible_spec realized_spec( circuit const& c )
{
  uint32_t const n = uint32_t{ 1 } << c.width();
  std::vector<uint32_t> perm( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint32_t x = i;
    for ( auto const& g : c )
    {
      x = g.apply( x );
    }
    perm[i] = x;
  }
  return reversible_spec( c.width(), std::move( perm ) );
}

bool realizes( circuit const& c, reversible_spec const& spec )
{
  if ( c.width() != spec.width() )
  {
    throw width_mismatch( "circuit width " + std::to_string( c.width() ) + " does not match spec width " + std::to_string( spec.width() ) );
  }
  uint32_t const n = spec.size();
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint32_t x = i;
    for ( auto const& g : c )
    {
      x = g.apply( x );
    }
    if ( x != spec[i] )
    {
      return false;
    }
  }
  return true;
}

bool equivalent( circuit const& a, circuit const& b )
{
  if ( a.width() != b.width() )
  {
    throw width_mismatch( "cannot compare circuits of widths " + std::to_string( a.width() ) + " and " + std::to_string( b.width() ) );
  }
  uint32_t const n = uint32_t{ 1 } << a.width();
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint32_t x = i, y = i;
    for ( auto const& g : a )
    {
      x = g.apply( x );
    }
    for ( auto const& g : b )
    {
      y = g.apply( y );
    }
    if ( x != y )
    {
      return false;
    }
  }
  return true;
}

namespace
{

void check_binding( circuit const& c, irreversible_table const& table, io_binding const& binding )
{
  if ( binding.input_lines.size() != table.inputs )
  {
    throw binding_error( "binding names " + std::to_string( binding.input_lines.size() ) + " input lines for a table with " + std::to_string( table.inputs ) + " inputs" );
  }
  if ( binding.output_lines.size() != table.outputs )
  {
    throw binding_error( "binding names " + std::to_string( binding.output_lines.size() ) + " output lines for a table with " + std::to_string( table.outputs ) + " outputs" );
  }
  uint32_t in_mask = 0u;
  for ( auto l : binding.input_lines )
  {
    if ( l >= c.width() )
    {
      throw binding_error( "bound input line " + std::to_string( l ) + " outside circuit width " + std::to_string( c.width() ) );
    }
    uint32_t const bit = uint32_t{ 1 } << l;
    if ( in_mask & bit )
    {
      throw binding_error( "input line " + std::to_string( l ) + " bound twice" );
    }
    in_mask |= bit;
  }
  for ( auto l : binding.constant_lines )
  {
    if ( l >= c.width() )
    {
      throw binding_error( "bound constant line " + std::to_string( l ) + " outside circuit width " + std::to_string( c.width() ) );
    }
    uint32_t const bit = uint32_t{ 1 } << l;
    if ( in_mask & bit )
    {
      throw binding_error( "line " + std::to_string( l ) + " bound as both input and constant" );
    }
    in_mask |= bit;
  }
  uint32_t out_mask = 0u;
  for ( auto l : binding.output_lines )
  {
    if ( l >= c.width() )
    {
      throw binding_error( "bound output line " + std::to_string( l ) + " outside circuit width " + std::to_string( c.width() ) );
    }
    uint32_t const bit = uint32_t{ 1 } << l;
    if ( out_mask & bit )
    {
      throw binding_error( "output line " + std::to_string( l ) + " bound twice" );
    }
    out_mask |= bit;
  }
}

} // namespace

bool realizes_function( circuit const& c, irreversible_table const& table, io_binding const& binding )
{
  check_binding( c, table, binding );

  uint32_t const rows = uint32_t{ 1 } << table.inputs;
  for ( uint32_t r = 0; r < rows; ++r )
  {
    // unbound lines, like constants, start at 0
    uint32_t x = 0u;
    for ( unsigned i = 0; i < table.inputs; ++i )
    {
      if ( ( r >> i ) & 1u )
      {
        x |= uint32_t{ 1 } << binding.input_lines[i];
      }
    }
    for ( auto const& g : c )
    {
      x = g.apply( x );
    }
    for ( unsigned j = 0; j < table.outputs; ++j )
    {
      bool const want = ( table.rows[r] >> j ) & 1u;
      bool const got = ( x >> binding.output_lines[j] ) & 1u;
      if ( want != got )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace revsynth
