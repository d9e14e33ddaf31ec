#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "revsynth/errors.hpp"

namespace revsynth
{

/*! \brief Maximum number of circuit lines supported by the toolkit. */
inline constexpr unsigned max_width = 16u;

/*! \brief Printable name of a line: line 0 is `a`, line 1 is `b`, and so on. */
inline char line_name( unsigned line )
{
  return static_cast<char>( 'a' + line );
}

/*! \brief Fixed-width assignment of values to circuit lines.
 *
 * Line 0 is the least significant bit.  A bit string of width n is
 * interchangeable with an unsigned integer below 2^n; the class exists to
 * keep widths explicit at API boundaries.
 */
class bit_string
{
public:
  bit_string( uint32_t value, unsigned width )
      : value_( value ), width_( width )
  {
    if ( width_ < 1u || width_ > max_width )
    {
      throw width_error( "bit string width " + std::to_string( width_ ) + " outside 1.." + std::to_string( max_width ) );
    }
    if ( value_ >= ( uint32_t{ 1 } << width_ ) )
    {
      throw value_error( "value " + std::to_string( value_ ) + " does not fit into " + std::to_string( width_ ) + " bits" );
    }
  }

  static bit_string from_int( uint32_t value, unsigned width )
  {
    return bit_string( value, width );
  }

  unsigned width() const { return width_; }
  uint32_t int_value() const { return value_; }

  /*! \brief Value of one line (0 or 1). */
  bool bit( unsigned line ) const
  {
    if ( line >= width_ )
    {
      throw width_error( "line " + std::to_string( line ) + " outside width " + std::to_string( width_ ) );
    }
    return ( value_ >> line ) & 1u;
  }

  /*! \brief Copy with a single line toggled. */
  bit_string with_flipped( unsigned line ) const
  {
    if ( line >= width_ )
    {
      throw width_error( "line " + std::to_string( line ) + " outside width " + std::to_string( width_ ) );
    }
    return bit_string( value_ ^ ( uint32_t{ 1 } << line ), width_ );
  }

  bool operator==( bit_string const& other ) const
  {
    return width_ == other.width_ && value_ == other.value_;
  }

  bool operator!=( bit_string const& other ) const { return !( *this == other ); }

private:
  uint32_t value_;
  unsigned width_;
};

/*! \brief Number of line positions on which two equal-width strings differ. */
inline unsigned hamming_distance( bit_string const& p, bit_string const& q )
{
  if ( p.width() != q.width() )
  {
    throw width_mismatch( "hamming distance needs equal widths, got " + std::to_string( p.width() ) + " and " + std::to_string( q.width() ) );
  }
  return static_cast<unsigned>( std::popcount( p.int_value() ^ q.int_value() ) );
}

/*! \brief Raw-integer variant used in inner loops. */
inline unsigned hamming_distance( uint32_t p, uint32_t q )
{
  return static_cast<unsigned>( std::popcount( p ^ q ) );
}

/*! \brief Most-significant-bit-first rendering, e.g. value 5 of width 3 is "101". */
inline std::string to_string( bit_string const& s )
{
  std::string out;
  for ( unsigned i = s.width(); i-- > 0; )
  {
    out.push_back( s.bit( i ) ? '1' : '0' );
  }
  return out;
}

} // namespace revsynth
